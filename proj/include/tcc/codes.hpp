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
 * @file codes.hpp
 * @brief Twisted centralizer codes C(A, gamma) = {X : AX = gamma XA}
 *        over GF(q): exact dimension, explicit basis, membership, the
 *        brute-force Sylvester oracle, and code-parameter reporting.
 *
 * For gamma != 0 the code is the module-hom space
 * Hom_{F_q[x]}([gamma A]F^n, [A]F^n): decompose F^n under A, twist the
 * decomposition to get the gamma A view, pair cyclic generators whose
 * primes agree after twisting, and realize each hom block as an n x n
 * matrix.  dim C(A, gamma) = sum over elementary-divisor pairs (f, g)
 * of deg gcd(f^gamma, g).
 *
 * For gamma = 0 the code consists of the matrices with a single
 * nonzero column lying in ker(A); dim C(A, 0) = n * nullity(A).  This
 * branch never goes through the Hom machinery.
 *
 * Vectorization convention (oracle, span comparisons): matrices are
 * read column by column, so X[i][j] sits at vector index j*n + i.
 * Note the JSON interchange format is row-major nested arrays; the two
 * conventions are independent and both fixed.
 */

#ifndef TCC_CODES_HPP
#define TCC_CODES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tcc/decomp.hpp"
#include "tcc/field.hpp"
#include "tcc/matrix.hpp"
#include "tcc/poly.hpp"

namespace tcc {

/// One cyclic hom block: domain generator (i, c) of the twisted
/// (gamma A) decomposition, codomain generator (k, d) of the A
/// decomposition, both as (component index, generator index) in their
/// decomposition's canonical order.
struct HomBlockSpec {
    uint32_t domain_component, domain_index;
    uint32_t codomain_component, codomain_index;
    Poly multiplier;     // p_k^{max{s(k,d) - s(i,c), 0}}
    uint32_t block_dim;  // deg(p_k) * min{s(i,c), s(k,d)}
};

struct BasisProvenance {
    HomBlockSpec block;
    uint32_t power;  // t: the element is A^t applied to the block hom
};

struct TwistedCodeBasis {
    MatF A;
    FieldElem gamma;
    uint32_t dimension;
    std::vector<MatF> basis;
    /// One entry per basis element for gamma != 0; empty for the
    /// gamma = 0 branch, where no hom block exists.
    std::vector<BasisProvenance> provenance;
};

/// Multiplier r = ov / gcd(ou, ov) of the generating hom u -> r(T) v
/// between cyclic modules of orders ou (domain) and ov (codomain).
/// Requires gcd(ou, ov) = the lower-degree of the two (ties toward ou),
/// which holds automatically for powers of one prime; throws
/// std::domain_error otherwise.
Poly hom_cyclic_generator(const Poly& ou, const Poly& ov);

/// F_q-basis of {X : T X = X S}, the F_q[x]-homs [S]F^m -> [T]F^r.
std::vector<MatF> hom_basis(const MatF& S, const MatF& T);

/// Exact dimension of C(A, gamma) from elementary-divisor arithmetic
/// alone (no basis construction).
uint32_t twisted_dim(const MatF& A, const FieldElem& gamma);

/// The nonzero summands of the dimension formula: (f, g, deg gcd(f^gamma, g))
/// over pairs of elementary divisors of [A]F^n.  Empty for gamma = 0.
struct DimPair {
    Poly f, g;
    uint32_t degree;
};
struct DimBreakdown {
    uint32_t dimension;
    std::vector<DimPair> pairs;
};
DimBreakdown twisted_dim_breakdown(const MatF& A, const FieldElem& gamma);

TwistedCodeBasis twisted_basis(const MatF& A, const FieldElem& gamma);

/// Exact membership test AX = gamma XA.
bool is_codeword(const MatF& A, const FieldElem& gamma, const MatF& X);

/// Brute-force reference: canonical kernel basis of the n^2 x n^2
/// Sylvester operator I (x) A - gamma (A^T (x) I), reshaped to matrices.
/// Refuses n^2 > 4096 unless unsafe_large is set.
std::vector<MatF> oracle_kernel(const MatF& A, const FieldElem& gamma, bool unsafe_large = false);

struct CodeParams {
    uint32_t length;     // n^2
    uint32_t dimension;  // k
    std::optional<uint32_t> distance;  // min Hamming weight; absent if not enumerated or k = 0
};

/// Code parameters; when enumerate_distance is set, walks all q^k - 1
/// nonzero codewords (requires q^k <= max_enum, throws otherwise).
CodeParams code_params(const MatF& A, const FieldElem& gamma, bool enumerate_distance,
                       uint64_t max_enum = 1u << 24);

/// Stack matrices as rows of a (count x rows*cols) matrix using the
/// column-by-column vectorization.
MatF vectorize_rows(const std::vector<MatF>& mats);
/// Row-space (span) equality of two families under vectorization.
bool same_span(const std::vector<MatF>& a, const std::vector<MatF>& b);
/// Whether x lies in the span of the family.
bool in_span(const MatF& x, const std::vector<MatF>& basis);
bool linearly_independent(const std::vector<MatF>& mats);

}  // namespace tcc

#endif  // TCC_CODES_HPP
