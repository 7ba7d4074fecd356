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
 * @file verify.hpp
 * @brief Randomized self-verification: draw (A, gamma) pairs, compare
 *        the algebraic dimension/basis against the brute-force
 *        Sylvester-kernel oracle, and check decomposition certificates.
 *
 * Trials derive independent child generators from the master seed
 * (splitmix64), so the sweep may run in parallel and still produce a
 * seed-deterministic, scheduling-independent report.  Fields are
 * assigned round-robin: trial t uses fields[t mod fields.size()].
 */

#ifndef TCC_VERIFY_HPP
#define TCC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/field.hpp"
#include "tcc/matrix.hpp"
#include "tcc/rng.hpp"

namespace tcc {

struct SweepConfig {
    std::vector<Field> fields;
    uint32_t n_max = 6;
    uint32_t trials = 300;
    uint64_t seed = 42;
    bool check_spans = true;         // basis span == oracle span
    bool check_certificates = true;  // decomposition certificates per trial
};

struct TrialFailure {
    uint64_t trial;
    MatF A;
    FieldElem gamma;
    uint32_t dim_formula;
    uint32_t dim_oracle;
    std::string what;
};

struct SweepReport {
    uint64_t trials_run = 0;
    uint64_t passed = 0;
    uint64_t failed = 0;
    uint64_t gamma_zero = 0;   // coverage counters
    uint64_t gamma_one = 0;
    uint64_t gamma_other = 0;
    std::optional<TrialFailure> first_failure;

    bool all_passed() const { return failed == 0; }
};

SweepReport random_verify(const SweepConfig& cfg);

/// Single trial, exposed for tests: returns an empty optional on pass.
std::optional<std::string> verify_one(const MatF& A, const FieldElem& gamma, bool check_spans,
                                      bool check_certificates);

}  // namespace tcc

#endif  // TCC_VERIFY_HPP
