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
 * @file poly.hpp
 * @brief Dense univariate polynomials over GF(q): arithmetic, gcd,
 *        irreducibility, factorization, and the gamma-twist operator.
 *
 * Coefficients are stored constant-term first with no trailing zeros;
 * the zero polynomial has an empty coefficient vector and degree() -1
 * (standing in for the usual deg 0 = -infinity convention).
 *
 * The twist of f = sum a_i x^i by a nonzero scalar gamma is
 * f^gamma = gamma^{deg f} f(x/gamma), computed coefficientwise as
 * a_i -> a_i gamma^{d-i}.  It preserves degree, monicity, products,
 * gcds and irreducibility, and untwisting with the same gamma is the
 * exact inverse.
 */

#ifndef TCC_POLY_HPP
#define TCC_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcc/field.hpp"
#include "tcc/rng.hpp"

namespace tcc {

class Poly {
  public:
    /// Zero polynomial over f.
    explicit Poly(Field f) : field_(std::move(f)) {}
    /// From encoded coefficient values, constant term first; trailing
    /// zeros are trimmed.
    Poly(Field f, std::vector<uint32_t> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    static Poly constant(const Field& f, uint32_t c) { return Poly(f, {c}); }
    /// c * x^deg.
    static Poly monomial(const Field& f, uint32_t deg, uint32_t c = 1);
    /// Convenience for literals: coefficients as signed integers reduced
    /// into the prime subfield.
    static Poly from_ints(const Field& f, const std::vector<int64_t>& coeffs);

    const Field& field() const { return field_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return (int)coeffs_.size() - 1; }
    /// Coefficient of x^i (0 beyond the degree).
    uint32_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    /// Leading coefficient (0 for the zero polynomial).
    uint32_t lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return lead() == 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string(const char* var = "x") const;

  private:
    Field field_;
    std::vector<uint32_t> coeffs_;
};

/// Strict ordering by (degree, then coefficient tuple lexicographically
/// from the constant term up).  Used for canonical factor and component
/// ordering throughout.
bool poly_less(const Poly& a, const Poly& b);

Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_neg(const Poly& a);
Poly p_mul(const Poly& a, const Poly& b);
/// Multiply by a scalar.
Poly p_scale(uint32_t c, const Poly& a);

/// Euclidean division: f = q*g + r with deg r < deg g.  Throws on g = 0.
std::pair<Poly, Poly> p_divmod(const Poly& f, const Poly& g);
/// Exact division helper; throws if the remainder is nonzero.
Poly p_div_exact(const Poly& f, const Poly& g);

/// Monic normalization; zero stays zero.
Poly p_monic(const Poly& f);
/// Monic gcd; p_gcd(f, 0) = monic(f).  Throws on gcd(0, 0).
Poly p_gcd(const Poly& f, const Poly& g);
/// Monic lcm = f*g / gcd(f,g); lcm with 0 is 0.
Poly p_lcm(const Poly& f, const Poly& g);

Poly p_pow(const Poly& f, uint32_t e);
Poly p_mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly p_powmod(const Poly& a, uint64_t e, const Poly& mod);

/// Formal derivative.
Poly p_derivative(const Poly& f);
/// Evaluate at a scalar (encoded value).
uint32_t p_eval(const Poly& f, uint32_t a);

/// gamma-twist f^gamma = gamma^{deg f} f(x/gamma).  Twist of 0 is 0.
/// Throws on gamma = 0.
Poly p_twist(const Poly& f, const FieldElem& gamma);
/// Inverse twist f^{1/gamma} = gamma^{-deg f} f(gamma x).
Poly p_untwist(const Poly& f, const FieldElem& gamma);

/// Rabin irreducibility test.  Throws on constant (or zero) input.
bool p_is_irreducible(const Poly& f);

struct Factorization {
    FieldElem constant;                          // leading unit
    std::vector<std::pair<Poly, uint32_t>> factors;  // (monic irreducible, multiplicity),
                                                 // sorted by poly_less, pairwise distinct

    /// Re-multiplied value; equals the factored input.
    Poly value() const;
};

/// Factor a nonzero polynomial into monic irreducibles.  Square-free
/// decomposition, then distinct-degree splitting, then equal-degree
/// splitting: exhaustive trial division over monic polynomials when
/// q^degree <= 10^6, otherwise Cantor-Zassenhaus driven by `rng`.
/// Fully deterministic for a fixed seed.
Factorization p_factor(const Poly& f, SplitMix64 rng = SplitMix64(0x7cc0f5eed));

/// Uniform random polynomial of degree exactly `deg` (monic if requested).
Poly p_random(const Field& f, uint32_t deg, SplitMix64& rng, bool monic = true);
/// Uniform random monic irreducible of degree `deg`.
Poly p_random_irreducible(const Field& f, uint32_t deg, SplitMix64& rng);

}  // namespace tcc

#endif  // TCC_POLY_HPP
