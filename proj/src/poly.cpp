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

#include "tcc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcc {

namespace {

void trim(std::vector<uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly::Poly(Field f, std::vector<uint32_t> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    for (uint32_t c : coeffs_)
        if (c >= field_.q()) throw std::invalid_argument("polynomial coefficient out of range for field");
    trim(coeffs_);
}

Poly Poly::monomial(const Field& f, uint32_t deg, uint32_t c) {
    std::vector<uint32_t> v(deg + 1, 0);
    v[deg] = c;
    return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, const std::vector<int64_t>& coeffs) {
    std::vector<uint32_t> v;
    v.reserve(coeffs.size());
    for (int64_t c : coeffs) v.push_back(f.from_int(c).raw());
    return Poly(f, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
    return field_.same(o.field_) && coeffs_ == o.coeffs_;
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        uint32_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        bool unit = (c == 1);
        if (!unit || i == 0) os << field_.elem_to_string(c);
        if (i >= 1) {
            if (!unit) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const Field& F = a.field();
    for (int i = 0; i <= a.degree(); ++i) {
        uint32_t ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb) return F.elem_less(ca, cb);
    }
    return false;
}

Poly p_add(const Poly& a, const Poly& b) {
    detail::require_same_field(a.field(), b.field(), "p_add");
    const Field& F = a.field();
    std::vector<uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly p_sub(const Poly& a, const Poly& b) {
    detail::require_same_field(a.field(), b.field(), "p_sub");
    const Field& F = a.field();
    std::vector<uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly p_neg(const Poly& a) {
    const Field& F = a.field();
    std::vector<uint32_t> c(a.coeffs());
    for (auto& v : c) v = F.neg(v);
    return Poly(F, std::move(c));
}

Poly p_mul(const Poly& a, const Poly& b) {
    detail::require_same_field(a.field(), b.field(), "p_mul");
    const Field& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(F);
    std::vector<uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        uint32_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeffs()[j]));
    }
    return Poly(F, std::move(c));
}

Poly p_scale(uint32_t s, const Poly& a) {
    const Field& F = a.field();
    std::vector<uint32_t> c(a.coeffs());
    for (auto& v : c) v = F.mul(s, v);
    return Poly(F, std::move(c));
}

std::pair<Poly, Poly> p_divmod(const Poly& f, const Poly& g) {
    detail::require_same_field(f.field(), g.field(), "p_divmod");
    if (g.is_zero()) throw std::domain_error("p_divmod: division by zero polynomial");
    const Field& F = f.field();
    if (f.degree() < g.degree()) return {Poly(F), f};
    std::vector<uint32_t> rem(f.coeffs());
    std::vector<uint32_t> quo(f.degree() - g.degree() + 1, 0);
    uint32_t lead_inv = F.inv(g.lead());
    for (int i = f.degree(); i >= g.degree(); --i) {
        uint32_t c = rem[i];
        if (c == 0) continue;
        uint32_t q = F.mul(c, lead_inv);
        quo[i - g.degree()] = q;
        for (int j = 0; j <= g.degree(); ++j)
            rem[i - g.degree() + j] = F.sub(rem[i - g.degree() + j], F.mul(q, g.coeff(j)));
    }
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly p_div_exact(const Poly& f, const Poly& g) {
    auto [q, r] = p_divmod(f, g);
    if (!r.is_zero()) throw std::domain_error("p_div_exact: nonzero remainder");
    return q;
}

Poly p_monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return p_scale(f.field().inv(f.lead()), f);
}

Poly p_gcd(const Poly& f, const Poly& g) {
    detail::require_same_field(f.field(), g.field(), "p_gcd");
    if (f.is_zero() && g.is_zero()) throw std::domain_error("p_gcd: gcd(0, 0) undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = p_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(a);
}

Poly p_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly(f.field());
    return p_monic(p_div_exact(p_mul(f, g), p_gcd(f, g)));
}

Poly p_pow(const Poly& f, uint32_t e) {
    Poly r = Poly::one(f.field());
    Poly base = f;
    while (e) {
        if (e & 1) r = p_mul(r, base);
        base = p_mul(base, base);
        e >>= 1;
    }
    return r;
}

Poly p_mulmod(const Poly& a, const Poly& b, const Poly& mod) {
    return p_divmod(p_mul(a, b), mod).second;
}

Poly p_powmod(const Poly& a, uint64_t e, const Poly& mod) {
    Poly r = p_divmod(Poly::one(a.field()), mod).second;
    Poly base = p_divmod(a, mod).second;
    while (e) {
        if (e & 1) r = p_mulmod(r, base, mod);
        base = p_mulmod(base, base, mod);
        e >>= 1;
    }
    return r;
}

Poly p_derivative(const Poly& f) {
    const Field& F = f.field();
    if (f.degree() < 1) return Poly(F);
    std::vector<uint32_t> c(f.degree(), 0);
    for (int i = 1; i <= f.degree(); ++i) {
        uint32_t mult = F.from_int(i).raw();
        c[i - 1] = F.mul(mult, f.coeff(i));
    }
    return Poly(F, std::move(c));
}

uint32_t p_eval(const Poly& f, uint32_t a) {
    const Field& F = f.field();
    uint32_t r = 0;
    for (int i = f.degree(); i >= 0; --i) r = F.add(F.mul(r, a), f.coeff(i));
    return r;
}

Poly p_twist(const Poly& f, const FieldElem& gamma) {
    detail::require_same_field(f.field(), gamma.field(), "p_twist");
    if (gamma.is_zero()) throw std::domain_error("p_twist: gamma must be nonzero");
    if (f.is_zero()) return f;
    const Field& F = f.field();
    int d = f.degree();
    std::vector<uint32_t> c(d + 1, 0);
    uint32_t factor = 1;  // gamma^{d-i}, built from i = d downward
    for (int i = d; i >= 0; --i) {
        c[i] = F.mul(f.coeff(i), factor);
        factor = F.mul(factor, gamma.raw());
    }
    return Poly(F, std::move(c));
}

Poly p_untwist(const Poly& f, const FieldElem& gamma) {
    if (gamma.is_zero()) throw std::domain_error("p_untwist: gamma must be nonzero");
    return p_twist(f, gamma.inverse());
}

bool p_is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::domain_error("p_is_irreducible: constant input");
    const Field& F = f.field();
    Poly m = p_monic(f);
    uint32_t n = (uint32_t)m.degree();
    if (n == 1) return true;
    uint64_t q = F.q();
    Poly x = Poly::x(F);
    // x^{q^n} == x (mod m)
    Poly h = x;
    for (uint32_t i = 0; i < n; ++i) h = p_powmod(h, q, m);
    if (h != x) return false;
    // gcd(x^{q^{n/l}} - x, m) == 1 for every prime l | n
    for (uint32_t l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool prime = true;
        for (uint32_t t = 2; t * t <= l; ++t)
            if (l % t == 0) { prime = false; break; }
        if (!prime) continue;
        Poly g = x;
        for (uint32_t i = 0; i < n / l; ++i) g = p_powmod(g, q, m);
        if (p_gcd(p_sub(g, x), m).degree() != 0) return false;
    }
    return true;
}

namespace {

// p-th root of f, valid when f = g(x^p) with coefficients in GF(p^k):
// the root of coefficient c is c^{p^{k-1}}.
Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    uint32_t p = F.p(), k = F.k();
    uint64_t e = 1;
    for (uint32_t i = 0; i + 1 < k; ++i) e *= p;
    std::vector<uint32_t> c(f.degree() / (int)p + 1, 0);
    for (size_t j = 0; j < c.size(); ++j) c[j] = F.pow(f.coeff(j * p), e);
    return Poly(F, std::move(c));
}

// f monic nonconstant; appends (squarefree monic part, multiplicity * scale).
void squarefree_decompose(const Poly& f, uint32_t scale,
                          std::vector<std::pair<Poly, uint32_t>>& out) {
    const Field& F = f.field();
    Poly fp = p_derivative(f);
    if (fp.is_zero()) {
        squarefree_decompose(pth_root(f), scale * F.p(), out);
        return;
    }
    Poly c = p_gcd(f, fp);
    Poly w = p_div_exact(f, c);
    uint32_t i = 1;
    while (!w.is_one()) {
        Poly y = p_gcd(w, c);
        Poly fac = p_div_exact(w, y);
        if (fac.degree() >= 1) out.emplace_back(p_monic(fac), i * scale);
        w = std::move(y);
        c = p_div_exact(c, w);
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(pth_root(c), scale * F.p(), out);
}

// f monic squarefree; returns (product of irreducibles of degree d, d).
std::vector<std::pair<Poly, uint32_t>> distinct_degree_split(Poly f) {
    const Field& F = f.field();
    uint64_t q = F.q();
    std::vector<std::pair<Poly, uint32_t>> out;
    Poly x = Poly::x(F);
    Poly h = p_divmod(x, f).second;
    uint32_t d = 0;
    while (f.degree() > 0 && 2 * (int)(d + 1) <= f.degree()) {
        ++d;
        h = p_powmod(h, q, f);
        Poly g = p_gcd(p_sub(h, p_divmod(x, f).second), f);
        if (g.degree() >= 1) {
            out.emplace_back(g, d);
            f = p_div_exact(f, g);
            h = p_divmod(h, f).second;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, (uint32_t)f.degree());
    return out;
}

// Number of monic polynomials of degree d, capped at limit+1.
uint64_t count_monic(uint64_t q, uint32_t d, uint64_t limit) {
    uint64_t n = 1;
    for (uint32_t i = 0; i < d; ++i) {
        if (n > limit / q + 1) return limit + 1;
        n *= q;
        if (n > limit) return limit + 1;
    }
    return n;
}

// g = product of distinct monic irreducibles of degree d; exhaustive split.
void equal_degree_exhaustive(Poly g, uint32_t d, std::vector<Poly>& out) {
    const Field& F = g.field();
    uint64_t q = F.q();
    uint64_t total = count_monic(q, d, UINT64_MAX / 2);
    for (uint64_t m = 0; m < total && g.degree() > (int)d; ++m) {
        std::vector<uint32_t> c(d + 1, 0);
        uint64_t v = m;
        for (uint32_t i = 0; i < d; ++i) {
            c[i] = (uint32_t)(v % q);
            v /= q;
        }
        c[d] = 1;
        Poly cand(F, std::move(c));
        auto [quot, rem] = p_divmod(g, cand);
        if (rem.is_zero()) {
            out.push_back(cand);
            g = quot;
        }
    }
    if (g.degree() > 0) out.push_back(g);
}

// Cantor-Zassenhaus equal-degree splitting (recursive).
void equal_degree_random(const Poly& g, uint32_t d, SplitMix64& rng, std::vector<Poly>& out) {
    if (g.degree() == (int)d) {
        out.push_back(g);
        return;
    }
    const Field& F = g.field();
    uint64_t q = F.q();
    while (true) {
        std::vector<uint32_t> rc(g.degree(), 0);
        for (auto& c : rc) c = (uint32_t)rng.below(q);
        Poly r(F, std::move(rc));
        if (r.degree() < 1) continue;
        Poly splitter(F);
        if (q % 2 == 1) {
            // norm to GF(q), then the (q-1)/2 power: r^{(q^d-1)/2} mod g
            Poly t = p_divmod(r, g).second;
            Poly u = t;
            for (uint32_t i = 1; i < d; ++i) {
                u = p_powmod(u, q, g);
                t = p_mulmod(t, u, g);
            }
            Poly s = p_powmod(t, (q - 1) / 2, g);
            splitter = p_sub(s, Poly::one(F));
        } else {
            // trace map over GF(2): r + r^2 + r^4 + ... (k*d terms)
            uint32_t steps = F.k() * d;
            Poly t = p_divmod(r, g).second;
            Poly acc = t;
            for (uint32_t i = 1; i < steps; ++i) {
                t = p_mulmod(t, t, g);
                acc = p_add(acc, t);
            }
            splitter = acc;
        }
        if (splitter.is_zero()) continue;
        Poly h = p_gcd(splitter, g);
        if (h.degree() >= 1 && h.degree() < g.degree()) {
            equal_degree_random(h, d, rng, out);
            equal_degree_random(p_div_exact(g, h), d, rng, out);
            return;
        }
    }
}

}  // namespace

Poly Factorization::value() const {
    Poly r = Poly::constant(constant.field(), constant.raw());
    for (const auto& [f, m] : factors) r = p_mul(r, p_pow(f, m));
    return r;
}

Factorization p_factor(const Poly& f, SplitMix64 rng) {
    if (f.is_zero()) throw std::domain_error("p_factor: zero polynomial");
    const Field& F = f.field();
    Factorization result{FieldElem(F, f.lead()), {}};
    if (f.degree() == 0) return result;

    std::vector<std::pair<Poly, uint32_t>> squarefree;
    squarefree_decompose(p_monic(f), 1, squarefree);

    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : distinct_degree_split(part)) {
            std::vector<Poly> irreducibles;
            if (prod.degree() == (int)d) {
                irreducibles.push_back(prod);
            } else if (count_monic(F.q(), d, 1000000) <= 1000000) {
                equal_degree_exhaustive(prod, d, irreducibles);
            } else {
                equal_degree_random(prod, d, rng, irreducibles);
            }
            for (auto& irr : irreducibles) result.factors.emplace_back(std::move(irr), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return result;
}

Poly p_random(const Field& f, uint32_t deg, SplitMix64& rng, bool monic) {
    std::vector<uint32_t> c(deg + 1, 0);
    for (uint32_t i = 0; i < deg; ++i) c[i] = (uint32_t)rng.below(f.q());
    c[deg] = monic ? 1 : (uint32_t)(1 + rng.below(f.q() - 1));
    return Poly(f, std::move(c));
}

Poly p_random_irreducible(const Field& f, uint32_t deg, SplitMix64& rng) {
    if (deg < 1) throw std::invalid_argument("p_random_irreducible: degree must be >= 1");
    while (true) {
        Poly cand = p_random(f, deg, rng, true);
        if (p_is_irreducible(cand)) return cand;
    }
}

}  // namespace tcc
