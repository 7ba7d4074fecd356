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
 * @file matrix.hpp
 * @brief Dense exact matrices over GF(q) and the linear algebra the
 *        decomposition needs: products, RREF, kernels, polynomial
 *        evaluation at a matrix, Krylov orders, minimal and
 *        characteristic polynomials.
 *
 * Vectors are columns and kernels are right kernels throughout.  The
 * kernel basis is canonical: reduced row echelon form with each free
 * variable set to 1 in ascending column order.
 */

#ifndef TCC_MATRIX_HPP
#define TCC_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcc/field.hpp"
#include "tcc/poly.hpp"
#include "tcc/rng.hpp"

namespace tcc {

/// Dense row-major matrix of encoded field values.
class MatF {
  public:
    MatF(Field f, uint32_t rows, uint32_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), data_((size_t)rows * cols, 0) {}

    static MatF identity(const Field& f, uint32_t n);
    static MatF from_ints(const Field& f, const std::vector<std::vector<int64_t>>& rows);
    /// n x 1 column vector.
    static MatF column(const Field& f, const std::vector<uint32_t>& entries);
    static MatF column_from_ints(const Field& f, const std::vector<int64_t>& entries);

    const Field& field() const { return field_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }

    uint32_t at(uint32_t r, uint32_t c) const { return data_[(size_t)r * cols_ + c]; }
    void set(uint32_t r, uint32_t c, uint32_t v) { data_[(size_t)r * cols_ + c] = v; }

    const std::vector<uint32_t>& data() const { return data_; }
    std::vector<uint32_t>& data() { return data_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    bool operator==(const MatF& o) const;
    bool operator!=(const MatF& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Field field_;
    uint32_t rows_, cols_;
    std::vector<uint32_t> data_;
};

/// Column vectors are matrices with cols == 1.
using VecF = MatF;

MatF m_add(const MatF& a, const MatF& b);
MatF m_sub(const MatF& a, const MatF& b);
MatF m_neg(const MatF& a);
MatF m_mul(const MatF& a, const MatF& b);
MatF m_scale(uint32_t c, const MatF& a);
MatF m_transpose(const MatF& a);
/// Block-diagonal assembly.
MatF m_block_diag(const std::vector<MatF>& blocks);

struct Rref {
    MatF R;
    uint32_t rank;
    std::vector<uint32_t> pivot_cols;
};

/// Reduced row echelon form (unique for the row space).
Rref m_rref(const MatF& a);
uint32_t m_rank(const MatF& a);
uint32_t m_nullity(const MatF& a);

/// Canonical right-kernel basis: one vector per free column, that free
/// variable set to 1, later free variables 0.  Size = cols - rank.
std::vector<VecF> m_kernel(const MatF& a);

/// Inverse of a square matrix; throws std::domain_error when singular.
MatF m_inverse(const MatF& a);

/// f(A) by Horner evaluation; square A.
MatF m_poly_eval(const Poly& f, const MatF& A);
/// f(A) * v without forming f(A) (Horner on the vector).
VecF m_poly_apply(const Poly& f, const MatF& A, const VecF& v);

/// Least-degree monic f with f(A) v = 0, from the first linear
/// dependency in the Krylov sequence v, Av, A^2 v, ...; o(0) = 1.
Poly vector_order(const MatF& A, const VecF& v);

/// lcm of vector_order(A, e_i) over the standard basis.
Poly minimal_polynomial(const MatF& A);

/// det(xI - A), computed by fraction-free (Bareiss) elimination over
/// GF(q)[x].  Deliberately independent of the Smith-normal-form route
/// so the two can cross-check each other.
Poly characteristic_polynomial(const MatF& A);

/// Companion matrix: ones on the subdiagonal, negated coefficients of f
/// in the last column; minimal = characteristic = f.  Requires monic f,
/// deg >= 1.
MatF companion_matrix(const Poly& f);

/// Uniform random matrix (entries drawn uniformly from the field).
MatF m_random(const Field& f, uint32_t rows, uint32_t cols, SplitMix64& rng);

}  // namespace tcc

#endif  // TCC_MATRIX_HPP
