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

#include "tcc/polymat.hpp"

#include <stdexcept>
#include <utility>

namespace tcc {

PolyMat PolyMat::identity(const Field& f, uint32_t n) {
    PolyMat m(f, n, n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
    return m;
}

PolyMat PolyMat::x_identity_minus(const MatF& A) {
    if (!A.is_square()) throw std::invalid_argument("x_identity_minus: non-square");
    const Field& F = A.field();
    uint32_t n = A.rows();
    PolyMat m(F, n, n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t c = F.neg(A.at(i, j));
            m.at(i, j) = (i == j) ? Poly(F, {c, 1}) : Poly::constant(F, c);
        }
    return m;
}

bool PolyMat::operator==(const PolyMat& o) const {
    if (!field_.same(o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < grid_.size(); ++i)
        if (grid_[i] != o.grid_[i]) return false;
    return true;
}

bool PolyMat::is_diagonal() const {
    for (uint32_t i = 0; i < rows_; ++i)
        for (uint32_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
    detail::require_same_field(a.field(), b.field(), "pm_mul");
    if (a.cols() != b.rows()) throw std::invalid_argument("pm_mul: shape mismatch");
    PolyMat c(a.field(), a.rows(), b.cols());
    for (uint32_t i = 0; i < a.rows(); ++i)
        for (uint32_t k = 0; k < a.cols(); ++k) {
            const Poly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (uint32_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) = p_add(c.at(i, j), p_mul(aik, b.at(k, j)));
            }
        }
    return c;
}

Poly pm_det(const PolyMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pm_det: non-square");
    const Field& F = m.field();
    uint32_t n = m.rows();
    if (n == 0) return Poly::one(F);
    PolyMat M = m;
    Poly prev = Poly::one(F);
    bool negate = false;
    for (uint32_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k).is_zero()) {
            uint32_t swap_row = n;
            for (uint32_t r = k + 1; r < n; ++r)
                if (!M.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row == n) return Poly(F);
            for (uint32_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(swap_row, j));
            negate = !negate;
        }
        for (uint32_t i = k + 1; i < n; ++i) {
            for (uint32_t j = k + 1; j < n; ++j) {
                Poly num = p_sub(p_mul(M.at(k, k), M.at(i, j)), p_mul(M.at(i, k), M.at(k, j)));
                M.at(i, j) = p_div_exact(num, prev);
            }
            M.at(i, k) = Poly(F);
        }
        prev = M.at(k, k);
    }
    Poly det = M.at(n - 1, n - 1);
    return negate ? p_neg(det) : det;
}

namespace {

// Elementary transforms applied consistently to D and the tracked
// U / U_inv / V.  Row ops multiply U on the left by E and U_inv on the
// right by E^{-1}; column ops multiply V on the right.
struct SnfWork {
    PolyMat D, U, V, U_inv;

    void swap_rows(uint32_t i, uint32_t j) {
        if (i == j) return;
        for (uint32_t c = 0; c < D.cols(); ++c) std::swap(D.at(i, c), D.at(j, c));
        for (uint32_t c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
        for (uint32_t r = 0; r < U_inv.rows(); ++r) std::swap(U_inv.at(r, i), U_inv.at(r, j));
    }
    void swap_cols(uint32_t i, uint32_t j) {
        if (i == j) return;
        for (uint32_t r = 0; r < D.rows(); ++r) std::swap(D.at(r, i), D.at(r, j));
        for (uint32_t r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    // row_i -= f * row_j
    void row_sub(uint32_t i, const Poly& f, uint32_t j) {
        if (f.is_zero()) return;
        for (uint32_t c = 0; c < D.cols(); ++c) D.at(i, c) = p_sub(D.at(i, c), p_mul(f, D.at(j, c)));
        for (uint32_t c = 0; c < U.cols(); ++c) U.at(i, c) = p_sub(U.at(i, c), p_mul(f, U.at(j, c)));
        // E = I - f e_i e_j^T, E^{-1} = I + f e_i e_j^T:
        // U_inv <- U_inv * E^{-1} adds f * col_i to col_j.
        for (uint32_t r = 0; r < U_inv.rows(); ++r)
            U_inv.at(r, j) = p_add(U_inv.at(r, j), p_mul(f, U_inv.at(r, i)));
    }
    // col_j -= f * col_i
    void col_sub(uint32_t j, const Poly& f, uint32_t i) {
        if (f.is_zero()) return;
        for (uint32_t r = 0; r < D.rows(); ++r) D.at(r, j) = p_sub(D.at(r, j), p_mul(f, D.at(r, i)));
        for (uint32_t r = 0; r < V.rows(); ++r) V.at(r, j) = p_sub(V.at(r, j), p_mul(f, V.at(r, i)));
    }
    // row_i += row_j (divisibility repair)
    void row_add(uint32_t i, uint32_t j) {
        Poly minus_one = Poly::constant(D.field(), D.field().neg(1));
        row_sub(i, minus_one, j);
    }
    // scale row i by nonzero constant c
    void row_scale(uint32_t i, uint32_t c) {
        if (c == 1) return;
        const Field& F = D.field();
        uint32_t cinv = F.inv(c);
        for (uint32_t col = 0; col < D.cols(); ++col) D.at(i, col) = p_scale(c, D.at(i, col));
        for (uint32_t col = 0; col < U.cols(); ++col) U.at(i, col) = p_scale(c, U.at(i, col));
        for (uint32_t r = 0; r < U_inv.rows(); ++r) U_inv.at(r, i) = p_scale(cinv, U_inv.at(r, i));
    }
};

}  // namespace

Snf snf_polymatrix(const PolyMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("snf_polymatrix: non-square");
    const Field& F = m.field();
    uint32_t n = m.rows();
    SnfWork w{m, PolyMat::identity(F, n), PolyMat::identity(F, n), PolyMat::identity(F, n)};

    for (uint32_t t = 0; t < n; ++t) {
        while (true) {
            // minimal-degree pivot in the trailing block; ties topmost, leftmost
            uint32_t pr = n, pc = n;
            int best = -1;
            for (uint32_t i = t; i < n; ++i)
                for (uint32_t j = t; j < n; ++j) {
                    const Poly& e = w.D.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        pr = i;
                        pc = j;
                    }
                }
            if (best < 0) throw std::domain_error("snf_polymatrix: singular input");
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            bool dirty = false;
            for (uint32_t i = t + 1; i < n; ++i) {
                if (w.D.at(i, t).is_zero()) continue;
                Poly q = p_divmod(w.D.at(i, t), w.D.at(t, t)).first;
                w.row_sub(i, q, t);
                if (!w.D.at(i, t).is_zero()) dirty = true;
            }
            for (uint32_t j = t + 1; j < n; ++j) {
                if (w.D.at(t, j).is_zero()) continue;
                Poly q = p_divmod(w.D.at(t, j), w.D.at(t, t)).first;
                w.col_sub(j, q, t);
                if (!w.D.at(t, j).is_zero()) dirty = true;
            }
            if (dirty) continue;

            // divisibility of the whole trailing block
            uint32_t bad_row = n;
            for (uint32_t i = t + 1; i < n && bad_row == n; ++i)
                for (uint32_t j = t + 1; j < n; ++j) {
                    if (w.D.at(i, j).is_zero()) continue;
                    if (!p_divmod(w.D.at(i, j), w.D.at(t, t)).second.is_zero()) {
                        bad_row = i;
                        break;
                    }
                }
            if (bad_row == n) break;
            w.row_add(t, bad_row);
        }
        w.row_scale(t, F.inv(w.D.at(t, t).lead()));
    }

    return Snf{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.U_inv)};
}

}  // namespace tcc
