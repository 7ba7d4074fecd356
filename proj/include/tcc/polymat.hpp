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
 * @file polymat.hpp
 * @brief Matrices over GF(q)[x] and their Smith normal form.
 *
 * The Smith normal form U*M*V = D is the deterministic route to the
 * primary cyclic decomposition: applied to xI - A it yields the
 * invariant factors on the diagonal, and the tracked inverse of U
 * yields module generators.  Pivot rule (fixed for reproducibility):
 * among nonzero entries of the trailing block pick minimal degree,
 * ties broken topmost then leftmost.  A divisibility failure
 * d_i | d_{i+1} is repaired by the standard row-addition trick.
 */

#ifndef TCC_POLYMAT_HPP
#define TCC_POLYMAT_HPP

#include <cstdint>
#include <vector>

#include "tcc/matrix.hpp"
#include "tcc/poly.hpp"

namespace tcc {

class PolyMat {
  public:
    PolyMat(Field f, uint32_t rows, uint32_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols),
          grid_((size_t)rows * cols, Poly(field_)) {}

    static PolyMat identity(const Field& f, uint32_t n);
    /// The presentation matrix xI - A of the induced module.
    static PolyMat x_identity_minus(const MatF& A);

    const Field& field() const { return field_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }

    const Poly& at(uint32_t r, uint32_t c) const { return grid_[(size_t)r * cols_ + c]; }
    Poly& at(uint32_t r, uint32_t c) { return grid_[(size_t)r * cols_ + c]; }

    bool operator==(const PolyMat& o) const;
    bool operator!=(const PolyMat& o) const { return !(*this == o); }

    bool is_diagonal() const;

  private:
    Field field_;
    uint32_t rows_, cols_;
    std::vector<Poly> grid_;
};

PolyMat pm_mul(const PolyMat& a, const PolyMat& b);

/// Determinant by fraction-free (Bareiss) elimination.
Poly pm_det(const PolyMat& m);

struct Snf {
    PolyMat U;      // left transform
    PolyMat D;      // diagonal, monic d_i with d_i | d_{i+1}
    PolyMat V;      // right transform
    PolyMat U_inv;  // inverse of U, tracked alongside the reduction
};

/// Smith normal form of a square nonsingular polynomial matrix:
/// U*M*V = D with unimodular U, V.  Throws std::domain_error on
/// singular input.
Snf snf_polymatrix(const PolyMat& m);

}  // namespace tcc

#endif  // TCC_POLYMAT_HPP
