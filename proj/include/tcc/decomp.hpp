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
 * @file decomp.hpp
 * @brief Primary cyclic decomposition of F_q^n as the F_q[x]-module
 *        induced by a square matrix A (x acts as multiplication by A).
 *
 * Route: Smith normal form of xI - A with transform tracking.  The
 * nontrivial diagonal entries are the invariant factors d_j; the module
 * generator for d_j is w_j = sum_i (U^{-1})_{ij}(A) e_i; CRT splitting
 * of each w_j along the prime-power factorization of d_j yields cyclic
 * generators with prime-power orders.  Everything is deterministic and
 * certificate-checkable: the union of Krylov blocks must be a basis of
 * F_q^n, orders must be exact, their product must be the characteristic
 * polynomial and their lcm the minimal polynomial.
 *
 * Twisting by a nonzero gamma reuses the same generator vectors and
 * exponents and only replaces each prime p by its twist p^gamma; the
 * result is a valid decomposition for gamma*A.
 */

#ifndef TCC_DECOMP_HPP
#define TCC_DECOMP_HPP

#include <cstdint>
#include <vector>

#include "tcc/matrix.hpp"
#include "tcc/poly.hpp"
#include "tcc/polymat.hpp"

namespace tcc {

struct CyclicGenerator {
    VecF v;             // generator vector
    Poly prime;         // monic irreducible
    uint32_t exponent;  // s >= 1
    Poly order;         // prime^exponent = vector_order(A, v)
    uint32_t dim;       // deg(order) = dimension of <v>
};

struct PrimaryComponent {
    Poly prime;
    std::vector<CyclicGenerator> generators;  // exponents nonincreasing
};

struct PrimaryCyclicDecomposition {
    MatF A;  // the inducing matrix (gamma*A after twisting)
    std::vector<PrimaryComponent> components;  // primes sorted by (degree, lex)
    Poly minimal;
    Poly characteristic;

    /// Flat view over components in order.
    std::vector<const CyclicGenerator*> all_generators() const;
    /// Component with the given prime, or nullptr.
    const PrimaryComponent* find_component(const Poly& prime) const;
};

/// Canonically sorted (poly_less) multiset of prime-power orders.
using ElemDivMultiset = std::vector<Poly>;

/// Nontrivial diagonal of the Smith normal form of xI - A: monic, each
/// dividing the next, product = characteristic polynomial.
std::vector<Poly> invariant_factors(const MatF& A);

PrimaryCyclicDecomposition decompose(const MatF& A);

ElemDivMultiset elem_divisors(const MatF& A);
ElemDivMultiset elem_divisors(const PrimaryCyclicDecomposition& dec);

/// Same subspaces and generators, primes twisted; valid for gamma*A.
PrimaryCyclicDecomposition twist_decomposition(const PrimaryCyclicDecomposition& dec,
                                               const FieldElem& gamma);

/// The certificate basis: columns A^t v (t < deg order) per generator,
/// concatenated in component order, plus each generator's block offset.
struct KrylovLayout {
    MatF B;  // n x n; invertible iff the decomposition is a direct sum
    std::vector<std::vector<uint32_t>> offsets;  // [component][generator] -> first column
};

KrylovLayout krylov_layout(const PrimaryCyclicDecomposition& dec);

struct DecompCertificates {
    bool direct_sum;    // Krylov basis invertible
    bool orders_exact;  // vector_order(A, v) == prime^exponent for all generators
    bool product_char;  // product of orders == characteristic_polynomial(A)
    bool lcm_minimal;   // lcm of orders == minimal_polynomial(A)

    bool all() const { return direct_sum && orders_exact && product_char && lcm_minimal; }
};

DecompCertificates validate_decomposition(const PrimaryCyclicDecomposition& dec);

}  // namespace tcc

#endif  // TCC_DECOMP_HPP
