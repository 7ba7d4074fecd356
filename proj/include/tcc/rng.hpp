/*
   Copyright 2026 The tcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file rng.hpp
 * @brief Deterministic seedable PRNG (splitmix64).
 *
 * All randomized routines in the library take an explicit SplitMix64
 * state; there is no hidden global generator.  Parallel sweeps derive
 * one child generator per trial via derive(), so results do not depend
 * on scheduling order.
 */

#ifndef TCC_RNG_HPP
#define TCC_RNG_HPP

#include <cstdint>

namespace tcc {

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) via rejection sampling; bound >= 1.
    uint64_t below(uint64_t bound) {
        uint64_t limit = ~0ull - ~0ull % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Independent child stream for trial `index` under the same master seed.
    SplitMix64 derive(uint64_t index) const {
        SplitMix64 mixer(state_ ^ (0xd1342543de82ef95ull * (index + 1)));
        return SplitMix64(mixer.next());
    }

    uint64_t state() const { return state_; }

  private:
    uint64_t state_;
};

}  // namespace tcc

#endif  // TCC_RNG_HPP
