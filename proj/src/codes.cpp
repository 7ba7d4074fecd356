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

#include "tcc/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcc/kernels.hpp"

namespace tcc {

Poly hom_cyclic_generator(const Poly& ou, const Poly& ov) {
    Poly g = p_gcd(ou, ov);
    const Poly& lower = (ou.degree() <= ov.degree()) ? ou : ov;
    if (g != p_monic(lower))
        throw std::domain_error("hom_cyclic_generator: gcd(ou, ov) must be the lower-order one");
    return p_monic(p_div_exact(ov, g));
}

namespace {

// Hom blocks between a domain decomposition (acting matrix dom.A) and a
// codomain decomposition (acting matrix cod.A).  Emission order:
// codomain components, then the matching domain component, then
// (domain generator, codomain generator) lexicographically, then the
// codomain-action power t ascending.
void emit_hom_blocks(const PrimaryCyclicDecomposition& dom, const PrimaryCyclicDecomposition& cod,
                     std::vector<MatF>& basis, std::vector<BasisProvenance>* provenance) {
    const Field& F = cod.A.field();
    uint32_t dom_n = dom.A.rows();
    uint32_t cod_n = cod.A.rows();
    if (dom_n == 0 || cod_n == 0) return;

    KrylovLayout layout = krylov_layout(dom);
    MatF b_inv = m_inverse(layout.B);

    for (uint32_t k = 0; k < cod.components.size(); ++k) {
        const PrimaryComponent& cc = cod.components[k];
        for (uint32_t i = 0; i < dom.components.size(); ++i) {
            const PrimaryComponent& dc = dom.components[i];
            if (dc.prime != cc.prime) continue;
            for (uint32_t c = 0; c < dc.generators.size(); ++c) {
                const CyclicGenerator& du = dc.generators[c];
                for (uint32_t d = 0; d < cc.generators.size(); ++d) {
                    const CyclicGenerator& cv = cc.generators[d];
                    uint32_t hi = std::max(cv.exponent, du.exponent);
                    Poly multiplier = p_pow(cc.prime, hi - du.exponent);
                    uint32_t block_dim =
                        (uint32_t)cc.prime.degree() * std::min(du.exponent, cv.exponent);

                    // theta sends the domain generator u to multiplier(A) v
                    // and every other Krylov basis vector x^t u to A^t theta(u).
                    VecF theta_v = m_poly_apply(multiplier, cod.A, cv.v);
                    MatF image(F, cod_n, dom_n);
                    VecF col = theta_v;
                    uint32_t off = layout.offsets[i][c];
                    for (uint32_t t = 0; t < du.dim; ++t) {
                        for (uint32_t r = 0; r < cod_n; ++r) image.set(r, off + t, col.at(r, 0));
                        if (t + 1 < du.dim) col = m_mul(cod.A, col);
                    }
                    MatF vartheta = m_mul(image, b_inv);

                    MatF x = vartheta;
                    for (uint32_t t = 0; t < block_dim; ++t) {
                        basis.push_back(x);
                        if (provenance)
                            provenance->push_back(BasisProvenance{
                                HomBlockSpec{i, c, k, d, multiplier, block_dim}, t});
                        if (t + 1 < block_dim) x = m_mul(cod.A, x);
                    }
                }
            }
        }
    }
}

Poly poly_x(const Field& F) { return Poly::x(F); }

}  // namespace

std::vector<MatF> hom_basis(const MatF& S, const MatF& T) {
    detail::require_same_field(S.field(), T.field(), "hom_basis");
    if (!S.is_square() || !T.is_square()) throw std::invalid_argument("hom_basis: non-square");
    std::vector<MatF> basis;
    emit_hom_blocks(decompose(S), decompose(T), basis, nullptr);
    return basis;
}

uint32_t twisted_dim(const MatF& A, const FieldElem& gamma) {
    detail::require_same_field(A.field(), gamma.field(), "twisted_dim");
    if (!A.is_square()) throw std::invalid_argument("twisted_dim: non-square");
    if (gamma.is_zero()) return A.rows() * m_nullity(A);
    ElemDivMultiset divisors = elem_divisors(A);
    uint32_t dim = 0;
    for (const Poly& f : divisors) {
        Poly tf = p_twist(f, gamma);
        for (const Poly& g : divisors) {
            Poly h = p_gcd(tf, g);
            if (h.degree() > 0) dim += (uint32_t)h.degree();
        }
    }
    return dim;
}

DimBreakdown twisted_dim_breakdown(const MatF& A, const FieldElem& gamma) {
    detail::require_same_field(A.field(), gamma.field(), "twisted_dim_breakdown");
    if (!A.is_square()) throw std::invalid_argument("twisted_dim_breakdown: non-square");
    DimBreakdown out{0, {}};
    if (gamma.is_zero()) {
        out.dimension = A.rows() * m_nullity(A);
        return out;
    }
    ElemDivMultiset divisors = elem_divisors(A);
    for (const Poly& f : divisors) {
        Poly tf = p_twist(f, gamma);
        for (const Poly& g : divisors) {
            Poly h = p_gcd(tf, g);
            if (h.degree() > 0) {
                out.pairs.push_back(DimPair{f, g, (uint32_t)h.degree()});
                out.dimension += (uint32_t)h.degree();
            }
        }
    }
    return out;
}

TwistedCodeBasis twisted_basis(const MatF& A, const FieldElem& gamma) {
    detail::require_same_field(A.field(), gamma.field(), "twisted_basis");
    if (!A.is_square()) throw std::invalid_argument("twisted_basis: non-square");
    const Field& F = A.field();
    uint32_t n = A.rows();
    TwistedCodeBasis out{A, gamma, 0, {}, {}};

    if (gamma.is_zero()) {
        // X has arbitrary single nonzero columns from ker(A): for each
        // x-power generator v with exponent s, the vector w = A^{s-1} v
        // spans its cyclic piece's part of the kernel.
        PrimaryCyclicDecomposition dec = decompose(A);
        const PrimaryComponent* xc = dec.find_component(poly_x(F));
        if (xc) {
            for (const auto& g : xc->generators) {
                VecF w = g.v;
                for (uint32_t t = 0; t + 1 < g.exponent; ++t) w = m_mul(A, w);
                for (uint32_t i = 0; i < n; ++i) {
                    MatF e(F, n, n);
                    for (uint32_t r = 0; r < n; ++r) e.set(r, i, w.at(r, 0));
                    out.basis.push_back(std::move(e));
                }
            }
        }
        out.dimension = (uint32_t)out.basis.size();
        return out;
    }

    PrimaryCyclicDecomposition dec = decompose(A);
    PrimaryCyclicDecomposition tdec = twist_decomposition(dec, gamma);
    emit_hom_blocks(tdec, dec, out.basis, &out.provenance);
    out.dimension = (uint32_t)out.basis.size();
    return out;
}

bool is_codeword(const MatF& A, const FieldElem& gamma, const MatF& X) {
    detail::require_same_field(A.field(), gamma.field(), "is_codeword");
    detail::require_same_field(A.field(), X.field(), "is_codeword");
    if (!A.is_square() || X.rows() != A.rows() || X.cols() != A.cols())
        throw std::invalid_argument("is_codeword: shape mismatch");
    return m_mul(A, X) == m_scale(gamma.raw(), m_mul(X, A));
}

std::vector<MatF> oracle_kernel(const MatF& A, const FieldElem& gamma, bool unsafe_large) {
    detail::require_same_field(A.field(), gamma.field(), "oracle_kernel");
    if (!A.is_square()) throw std::invalid_argument("oracle_kernel: non-square");
    const Field& F = A.field();
    uint32_t n = A.rows();
    uint64_t nn = (uint64_t)n * n;
    if (nn > 4096 && !unsafe_large)
        throw std::domain_error("oracle_kernel: n^2 > 4096; pass unsafe_large to override");

    // vec reads column by column: X[i][j] at index j*n + i.
    // (A X)[i][j] = sum_k A[i][k] X[k][j]; (X A)[i][j] = sum_l X[i][l] A[l][j].
    MatF L(F, (uint32_t)nn, (uint32_t)nn);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t row = j * n + i;
            for (uint32_t k = 0; k < n; ++k)
                L.set(row, j * n + k, F.add(L.at(row, j * n + k), A.at(i, k)));
            for (uint32_t l = 0; l < n; ++l) {
                uint32_t col = l * n + i;
                L.set(row, col, F.sub(L.at(row, col), F.mul(gamma.raw(), A.at(l, j))));
            }
        }

    std::vector<MatF> out;
    for (const VecF& v : m_kernel(L)) {
        MatF X(F, n, n);
        for (uint32_t j = 0; j < n; ++j)
            for (uint32_t i = 0; i < n; ++i) X.set(i, j, v.at(j * n + i, 0));
        out.push_back(std::move(X));
    }
    return out;
}

CodeParams code_params(const MatF& A, const FieldElem& gamma, bool enumerate_distance,
                       uint64_t max_enum) {
    const Field& F = A.field();
    uint32_t n = A.rows();
    CodeParams params{n * n, 0, std::nullopt};
    if (!enumerate_distance) {
        params.dimension = twisted_dim(A, gamma);
        return params;
    }
    TwistedCodeBasis code = twisted_basis(A, gamma);
    params.dimension = code.dimension;
    if (code.dimension == 0) return params;

    uint64_t count = 1;
    for (uint32_t i = 0; i < code.dimension; ++i) {
        count *= F.q();
        if (count > max_enum)
            throw std::domain_error("code_params: q^k exceeds the enumeration bound");
    }
    params.distance = k_min_weight(code.basis, Mode::Auto);
    return params;
}

MatF vectorize_rows(const std::vector<MatF>& mats) {
    if (mats.empty()) throw std::invalid_argument("vectorize_rows: empty family");
    const Field& F = mats[0].field();
    uint32_t n = mats[0].rows(), m = mats[0].cols();
    MatF out(F, (uint32_t)mats.size(), n * m);
    for (uint32_t r = 0; r < mats.size(); ++r) {
        const MatF& x = mats[r];
        if (x.rows() != n || x.cols() != m) throw std::invalid_argument("vectorize_rows: shape mismatch");
        for (uint32_t j = 0; j < m; ++j)
            for (uint32_t i = 0; i < n; ++i) out.set(r, j * n + i, x.at(i, j));
    }
    return out;
}

bool same_span(const std::vector<MatF>& a, const std::vector<MatF>& b) {
    if (a.empty() || b.empty()) {
        auto zero_family = [](const std::vector<MatF>& f) {
            for (const auto& m : f)
                if (!m.is_zero()) return false;
            return true;
        };
        return zero_family(a) && zero_family(b);
    }
    Rref ra = m_rref(vectorize_rows(a));
    Rref rb = m_rref(vectorize_rows(b));
    if (ra.rank != rb.rank || ra.R.cols() != rb.R.cols()) return false;
    for (uint32_t i = 0; i < ra.rank; ++i)
        for (uint32_t j = 0; j < ra.R.cols(); ++j)
            if (ra.R.at(i, j) != rb.R.at(i, j)) return false;
    return true;
}

bool in_span(const MatF& x, const std::vector<MatF>& basis) {
    if (basis.empty()) return x.is_zero();
    std::vector<MatF> extended = basis;
    extended.push_back(x);
    return m_rank(vectorize_rows(basis)) == m_rank(vectorize_rows(extended));
}

bool linearly_independent(const std::vector<MatF>& mats) {
    if (mats.empty()) return true;
    return m_rank(vectorize_rows(mats)) == mats.size();
}

}  // namespace tcc
