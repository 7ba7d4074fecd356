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
 * @file kernels.hpp
 * @brief Hot linear-algebra kernels in two interchangeable flavors: a
 *        plain serial reference and an OpenMP-parallel variant.
 *
 * Both flavors are bitwise deterministic and must return identical
 * results; the serial one is the ground truth the parallel one is
 * tested against.  Mode::Auto picks the parallel path for inputs large
 * enough to amortize thread startup (serial otherwise), so callers can
 * stay mode-agnostic.
 *
 * Determinism notes: RREF uses a fixed pivot rule (first nonzero row in
 * the column), row eliminations within a pivot step are independent and
 * parallelize cleanly; the weight enumerator is a pure min-reduction
 * with an early exit only at the global optimum 1, which cannot change
 * the reported minimum.
 */

#ifndef TCC_KERNELS_HPP
#define TCC_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "tcc/matrix.hpp"

namespace tcc {

enum class Mode { Serial, Parallel, Auto };

/// True when compiled with OpenMP support.
bool parallel_enabled();

MatF k_matmul(const MatF& a, const MatF& b, Mode mode);

struct KRref {
    MatF R;
    uint32_t rank;
    std::vector<uint32_t> pivot_cols;
};

KRref k_rref(const MatF& a, Mode mode);

/// Minimum Hamming weight over all nonzero F_q-combinations of the
/// basis matrices (entries flattened to a length rows*cols vector).
/// Enumerates q^k - 1 codewords via an odometer over coefficient
/// tuples; early exit at weight 1.  Returns 0 for an empty basis.
uint32_t k_min_weight(const std::vector<MatF>& basis, Mode mode);

}  // namespace tcc

#endif  // TCC_KERNELS_HPP
