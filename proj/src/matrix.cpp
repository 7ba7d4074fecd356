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

#include "tcc/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "tcc/kernels.hpp"

namespace tcc {

MatF MatF::identity(const Field& f, uint32_t n) {
    MatF m(f, n, n);
    for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatF MatF::from_ints(const Field& f, const std::vector<std::vector<int64_t>>& rows) {
    if (rows.empty()) return MatF(f, 0, 0);
    uint32_t r = (uint32_t)rows.size();
    uint32_t c = (uint32_t)rows[0].size();
    MatF m(f, r, c);
    for (uint32_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("MatF::from_ints: ragged rows");
        for (uint32_t j = 0; j < c; ++j) m.set(i, j, f.from_int(rows[i][j]).raw());
    }
    return m;
}

MatF MatF::column(const Field& f, const std::vector<uint32_t>& entries) {
    MatF m(f, (uint32_t)entries.size(), 1);
    for (uint32_t i = 0; i < entries.size(); ++i) {
        if (entries[i] >= f.q()) throw std::invalid_argument("MatF::column: entry out of range");
        m.set(i, 0, entries[i]);
    }
    return m;
}

MatF MatF::column_from_ints(const Field& f, const std::vector<int64_t>& entries) {
    MatF m(f, (uint32_t)entries.size(), 1);
    for (uint32_t i = 0; i < entries.size(); ++i) m.set(i, 0, f.from_int(entries[i]).raw());
    return m;
}

bool MatF::is_zero() const {
    for (uint32_t v : data_)
        if (v) return false;
    return true;
}

bool MatF::operator==(const MatF& o) const {
    return field_.same(o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string MatF::to_string() const {
    std::ostringstream os;
    for (uint32_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (uint32_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << field_.elem_to_string(at(i, j));
        }
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

namespace {

void require_shape(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

MatF m_add(const MatF& a, const MatF& b) {
    detail::require_same_field(a.field(), b.field(), "m_add");
    require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "m_add: shape mismatch");
    MatF c = a;
    const Field& F = a.field();
    for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] = F.add(c.data()[i], b.data()[i]);
    return c;
}

MatF m_sub(const MatF& a, const MatF& b) {
    detail::require_same_field(a.field(), b.field(), "m_sub");
    require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "m_sub: shape mismatch");
    MatF c = a;
    const Field& F = a.field();
    for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] = F.sub(c.data()[i], b.data()[i]);
    return c;
}

MatF m_neg(const MatF& a) {
    MatF c = a;
    const Field& F = a.field();
    for (auto& v : c.data()) v = F.neg(v);
    return c;
}

MatF m_mul(const MatF& a, const MatF& b) { return k_matmul(a, b, Mode::Auto); }

MatF m_scale(uint32_t s, const MatF& a) {
    MatF c = a;
    const Field& F = a.field();
    for (auto& v : c.data()) v = F.mul(s, v);
    return c;
}

MatF m_transpose(const MatF& a) {
    MatF t(a.field(), a.cols(), a.rows());
    for (uint32_t i = 0; i < a.rows(); ++i)
        for (uint32_t j = 0; j < a.cols(); ++j) t.set(j, i, a.at(i, j));
    return t;
}

MatF m_block_diag(const std::vector<MatF>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("m_block_diag: no blocks");
    const Field& F = blocks[0].field();
    uint32_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        detail::require_same_field(F, b.field(), "m_block_diag");
        rows += b.rows();
        cols += b.cols();
    }
    MatF m(F, rows, cols);
    uint32_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (uint32_t i = 0; i < b.rows(); ++i)
            for (uint32_t j = 0; j < b.cols(); ++j) m.set(r0 + i, c0 + j, b.at(i, j));
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Rref m_rref(const MatF& a) {
    KRref k = k_rref(a, Mode::Auto);
    return Rref{std::move(k.R), k.rank, std::move(k.pivot_cols)};
}

uint32_t m_rank(const MatF& a) { return k_rref(a, Mode::Auto).rank; }

uint32_t m_nullity(const MatF& a) { return a.cols() - m_rank(a); }

std::vector<VecF> m_kernel(const MatF& a) {
    const Field& F = a.field();
    Rref rr = m_rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (uint32_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<VecF> basis;
    for (uint32_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        VecF v(F, a.cols(), 1);
        v.set(free, 0, 1);
        for (uint32_t r = 0; r < rr.pivot_cols.size(); ++r)
            v.set(rr.pivot_cols[r], 0, F.neg(rr.R.at(r, free)));
        basis.push_back(std::move(v));
    }
    return basis;
}

MatF m_inverse(const MatF& a) {
    require_shape(a.is_square(), "m_inverse: non-square");
    const Field& F = a.field();
    uint32_t n = a.rows();
    MatF aug(F, n, 2 * n);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, n + i, 1);
    }
    Rref rr = m_rref(aug);
    if (rr.rank != n || rr.pivot_cols[n - 1] != n - 1)
        throw std::domain_error("m_inverse: singular matrix");
    MatF inv(F, n, n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) inv.set(i, j, rr.R.at(i, n + j));
    return inv;
}

MatF m_poly_eval(const Poly& f, const MatF& A) {
    require_shape(A.is_square(), "m_poly_eval: non-square");
    detail::require_same_field(f.field(), A.field(), "m_poly_eval");
    const Field& F = A.field();
    uint32_t n = A.rows();
    MatF r(F, n, n);
    for (int i = f.degree(); i >= 0; --i) {
        r = m_mul(r, A);
        uint32_t c = f.coeff(i);
        if (c)
            for (uint32_t d = 0; d < n; ++d) r.set(d, d, F.add(r.at(d, d), c));
    }
    return r;
}

VecF m_poly_apply(const Poly& f, const MatF& A, const VecF& v) {
    require_shape(A.is_square() && A.cols() == v.rows() && v.cols() == 1, "m_poly_apply: shape mismatch");
    const Field& F = A.field();
    VecF r(F, v.rows(), 1);
    for (int i = f.degree(); i >= 0; --i) {
        r = m_mul(A, r);
        uint32_t c = f.coeff(i);
        if (c)
            for (uint32_t d = 0; d < v.rows(); ++d) r.set(d, 0, F.add(r.at(d, 0), F.mul(c, v.at(d, 0))));
    }
    return r;
}

Poly vector_order(const MatF& A, const VecF& v) {
    require_shape(A.is_square() && A.cols() == v.rows() && v.cols() == 1, "vector_order: shape mismatch");
    const Field& F = A.field();
    uint32_t n = A.rows();

    // Reduced Krylov vectors with their expressions in powers of A:
    // stored[s] has leading 1 at pivot[s] and coords[s][i] s.t.
    // stored[s] = sum_i coords[s][i] * A^i v.
    std::vector<std::vector<uint32_t>> stored;
    std::vector<uint32_t> pivots;
    std::vector<std::vector<uint32_t>> coords;

    VecF w = v;
    for (uint32_t t = 0; t <= n; ++t) {
        std::vector<uint32_t> cur(w.data());
        std::vector<uint32_t> cc(t + 1, 0);
        cc[t] = 1;
        for (size_t s = 0; s < stored.size(); ++s) {
            uint32_t f = cur[pivots[s]];
            if (f == 0) continue;
            for (uint32_t i = 0; i < n; ++i) cur[i] = F.sub(cur[i], F.mul(f, stored[s][i]));
            for (size_t i = 0; i < coords[s].size(); ++i) cc[i] = F.sub(cc[i], F.mul(f, coords[s][i]));
        }
        uint32_t piv = n;
        for (uint32_t i = 0; i < n; ++i)
            if (cur[i]) {
                piv = i;
                break;
            }
        if (piv == n) return p_monic(Poly(F, std::move(cc)));
        uint32_t inv = F.inv(cur[piv]);
        for (uint32_t i = 0; i < n; ++i) cur[i] = F.mul(inv, cur[i]);
        for (auto& c : cc) c = F.mul(inv, c);
        stored.push_back(std::move(cur));
        pivots.push_back(piv);
        coords.push_back(std::move(cc));
        w = m_mul(A, w);
    }
    throw std::logic_error("vector_order: no dependency within n+1 Krylov steps");
}

Poly minimal_polynomial(const MatF& A) {
    require_shape(A.is_square(), "minimal_polynomial: non-square");
    const Field& F = A.field();
    uint32_t n = A.rows();
    if (n == 0) return Poly::one(F);
    Poly m = Poly::one(F);
    for (uint32_t i = 0; i < n; ++i) {
        VecF e(F, n, 1);
        e.set(i, 0, 1);
        m = p_lcm(m, vector_order(A, e));
        if (m.degree() == (int)n) break;
    }
    return m;
}

Poly characteristic_polynomial(const MatF& A) {
    require_shape(A.is_square(), "characteristic_polynomial: non-square");
    const Field& F = A.field();
    uint32_t n = A.rows();
    if (n == 0) return Poly::one(F);

    // Bareiss fraction-free elimination on xI - A over GF(q)[x]; every
    // division is exact, so no rational functions appear.
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(F)));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t c = F.neg(A.at(i, j));
            M[i][j] = (i == j) ? Poly(F, {c, 1}) : Poly::constant(F, c);
        }

    Poly prev = Poly::one(F);
    bool negate = false;
    for (uint32_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            uint32_t swap_row = n;
            for (uint32_t r = k + 1; r < n; ++r)
                if (!M[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row == n) return Poly(F);
            std::swap(M[k], M[swap_row]);
            negate = !negate;
        }
        for (uint32_t i = k + 1; i < n; ++i) {
            for (uint32_t j = k + 1; j < n; ++j) {
                Poly num = p_sub(p_mul(M[k][k], M[i][j]), p_mul(M[i][k], M[k][j]));
                M[i][j] = p_div_exact(num, prev);
            }
            M[i][k] = Poly(F);
        }
        prev = M[k][k];
    }
    Poly det = M[n - 1][n - 1];
    return negate ? p_neg(det) : det;
}

MatF companion_matrix(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion_matrix: monic nonconstant required");
    const Field& F = f.field();
    uint32_t n = (uint32_t)f.degree();
    MatF m(F, n, n);
    for (uint32_t i = 0; i + 1 < n; ++i) m.set(i + 1, i, 1);
    for (uint32_t i = 0; i < n; ++i) m.set(i, n - 1, F.neg(f.coeff(i)));
    return m;
}

MatF m_random(const Field& f, uint32_t rows, uint32_t cols, SplitMix64& rng) {
    MatF m(f, rows, cols);
    for (auto& v : m.data()) v = (uint32_t)rng.below(f.q());
    return m;
}

}  // namespace tcc
