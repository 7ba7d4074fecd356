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

#include "tcc/decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcc {

std::vector<const CyclicGenerator*> PrimaryCyclicDecomposition::all_generators() const {
    std::vector<const CyclicGenerator*> out;
    for (const auto& comp : components)
        for (const auto& g : comp.generators) out.push_back(&g);
    return out;
}

const PrimaryComponent* PrimaryCyclicDecomposition::find_component(const Poly& prime) const {
    for (const auto& comp : components)
        if (comp.prime == prime) return &comp;
    return nullptr;
}

std::vector<Poly> invariant_factors(const MatF& A) {
    if (!A.is_square()) throw std::invalid_argument("invariant_factors: non-square");
    Snf snf = snf_polymatrix(PolyMat::x_identity_minus(A));
    std::vector<Poly> out;
    for (uint32_t i = 0; i < A.rows(); ++i)
        if (snf.D.at(i, i).degree() >= 1) out.push_back(snf.D.at(i, i));
    return out;
}

PrimaryCyclicDecomposition decompose(const MatF& A) {
    if (!A.is_square()) throw std::invalid_argument("decompose: non-square");
    const Field& F = A.field();
    uint32_t n = A.rows();

    PrimaryCyclicDecomposition dec{A, {}, Poly::one(F), Poly::one(F)};
    if (n == 0) return dec;

    Snf snf = snf_polymatrix(PolyMat::x_identity_minus(A));

    for (uint32_t j = 0; j < n; ++j) {
        const Poly& d = snf.D.at(j, j);
        if (d.degree() < 1) continue;
        dec.characteristic = p_mul(dec.characteristic, d);
        dec.minimal = d;  // invariant factors ascend; the last one is the lcm

        // module generator for the invariant-factor summand F[x]/(d)
        VecF w(F, n, 1);
        for (uint32_t i = 0; i < n; ++i) {
            const Poly& f = snf.U_inv.at(i, j);
            if (f.is_zero()) continue;
            VecF e(F, n, 1);
            e.set(i, 0, 1);
            w = m_add(w, m_poly_apply(f, A, e));
        }

        // CRT split of <w> into primary cyclic parts
        Factorization fac = p_factor(d);
        for (const auto& [prime, exponent] : fac.factors) {
            Poly cofactor = p_div_exact(d, p_pow(prime, exponent));
            CyclicGenerator gen{
                m_poly_apply(cofactor, A, w),
                prime,
                exponent,
                p_pow(prime, exponent),
                (uint32_t)prime.degree() * exponent,
            };
            PrimaryComponent* comp = nullptr;
            for (auto& c : dec.components)
                if (c.prime == prime) comp = &c;
            if (!comp) {
                dec.components.push_back(PrimaryComponent{prime, {}});
                comp = &dec.components.back();
            }
            comp->generators.push_back(std::move(gen));
        }
    }

    std::sort(dec.components.begin(), dec.components.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) {
                  return poly_less(a.prime, b.prime);
              });
    for (auto& comp : dec.components)
        std::stable_sort(comp.generators.begin(), comp.generators.end(),
                         [](const CyclicGenerator& a, const CyclicGenerator& b) {
                             return a.exponent > b.exponent;
                         });
    return dec;
}

ElemDivMultiset elem_divisors(const PrimaryCyclicDecomposition& dec) {
    ElemDivMultiset out;
    for (const auto* g : dec.all_generators()) out.push_back(g->order);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

ElemDivMultiset elem_divisors(const MatF& A) { return elem_divisors(decompose(A)); }

PrimaryCyclicDecomposition twist_decomposition(const PrimaryCyclicDecomposition& dec,
                                               const FieldElem& gamma) {
    detail::require_same_field(dec.A.field(), gamma.field(), "twist_decomposition");
    if (gamma.is_zero()) throw std::domain_error("twist_decomposition: gamma must be nonzero");

    PrimaryCyclicDecomposition out{m_scale(gamma.raw(), dec.A),
                                   {},
                                   p_twist(dec.minimal, gamma),
                                   p_twist(dec.characteristic, gamma)};
    for (const auto& comp : dec.components) {
        PrimaryComponent tc{p_twist(comp.prime, gamma), {}};
        for (const auto& g : comp.generators) {
            Poly tp = tc.prime;
            tc.generators.push_back(CyclicGenerator{g.v, tp, g.exponent, p_pow(tp, g.exponent), g.dim});
        }
        out.components.push_back(std::move(tc));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) {
                  return poly_less(a.prime, b.prime);
              });
    return out;
}

KrylovLayout krylov_layout(const PrimaryCyclicDecomposition& dec) {
    const Field& F = dec.A.field();
    uint32_t n = dec.A.rows();
    KrylovLayout layout{MatF(F, n, n), {}};
    uint32_t col = 0;
    for (const auto& comp : dec.components) {
        std::vector<uint32_t> comp_offsets;
        for (const auto& g : comp.generators) {
            comp_offsets.push_back(col);
            VecF w = g.v;
            for (uint32_t t = 0; t < g.dim; ++t) {
                if (col >= n) throw std::logic_error("krylov_layout: generator dims exceed n");
                for (uint32_t r = 0; r < n; ++r) layout.B.set(r, col, w.at(r, 0));
                ++col;
                if (t + 1 < g.dim) w = m_mul(dec.A, w);
            }
        }
        layout.offsets.push_back(std::move(comp_offsets));
    }
    if (col != n) throw std::logic_error("krylov_layout: generator dims do not fill n");
    return layout;
}

DecompCertificates validate_decomposition(const PrimaryCyclicDecomposition& dec) {
    const Field& F = dec.A.field();
    DecompCertificates cert{true, true, true, true};

    uint32_t total_dim = 0;
    for (const auto* g : dec.all_generators()) total_dim += g->dim;
    if (total_dim != dec.A.rows()) {
        cert.direct_sum = false;
    } else {
        cert.direct_sum = m_rank(krylov_layout(dec).B) == dec.A.rows();
    }

    Poly product = Poly::one(F);
    Poly lcm = Poly::one(F);
    for (const auto* g : dec.all_generators()) {
        if (vector_order(dec.A, g->v) != g->order) cert.orders_exact = false;
        if (g->order != p_pow(g->prime, g->exponent)) cert.orders_exact = false;
        product = p_mul(product, g->order);
        lcm = p_lcm(lcm, g->order);
    }
    cert.product_char =
        product == dec.characteristic && dec.characteristic == characteristic_polynomial(dec.A);
    cert.lcm_minimal = lcm == dec.minimal && dec.minimal == minimal_polynomial(dec.A);
    return cert;
}

}  // namespace tcc
