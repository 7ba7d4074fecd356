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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fixtures.hpp"
#include "tcc/codes.hpp"
#include "tcc/decomp.hpp"
#include "tcc/rng.hpp"

using namespace tcc;

namespace {
const Field F3 = Field::prime_field(3);
const Field F5 = Field::prime_field(5);

uint32_t nonzero_columns(const MatF& X) {
    uint32_t count = 0;
    for (uint32_t c = 0; c < X.cols(); ++c) {
        bool nz = false;
        for (uint32_t r = 0; r < X.rows(); ++r) nz |= (X.at(r, c) != 0);
        count += nz;
    }
    return count;
}

void check_basis_contract(const TwistedCodeBasis& b) {
    CHECK(b.dimension == b.basis.size());
    CHECK(b.dimension == twisted_dim(b.A, b.gamma));
    for (const MatF& X : b.basis) CHECK(is_codeword(b.A, b.gamma, X));
    if (!b.basis.empty()) CHECK(linearly_independent(b.basis));
    if (!b.gamma.is_zero()) CHECK(b.provenance.size() == b.basis.size());
}

}  // namespace

TEST_CASE("hom_cyclic_generator") {
    Poly x = Poly::x(F5);
    Poly x2 = Poly::monomial(F5, 2);
    CHECK(hom_cyclic_generator(x, x2) == x);
    CHECK(hom_cyclic_generator(x2, x2) == Poly::one(F5));
    Poly p = Poly::from_ints(F5, {4, 1});
    CHECK(hom_cyclic_generator(p_mul(p, p), p) == Poly::one(F5));
    CHECK(hom_cyclic_generator(p, p_mul(p, p)) == p);
    // Coprime orders violate the gcd hypothesis.
    CHECK_THROWS_AS(hom_cyclic_generator(x, Poly::from_ints(F5, {1, 1})), std::domain_error);
}

TEST_CASE("hom_basis of the reference pair") {
    auto basis = hom_basis(fixtures::hom_S(), fixtures::hom_T());
    REQUIRE(basis.size() == 3);
    for (const MatF& X : basis) {
        CHECK(X.rows() == 2);
        CHECK(X.cols() == 3);
        CHECK(m_mul(fixtures::hom_T(), X) == m_mul(X, fixtures::hom_S()));
    }
    CHECK(linearly_independent(basis));
    CHECK(in_span(fixtures::hom_gen_a(), basis));
    CHECK(in_span(fixtures::hom_gen_b(), basis));
    // The codomain action applied to gen_b stays in the span.
    CHECK(in_span(m_mul(fixtures::hom_T(), fixtures::hom_gen_b()), basis));
}

TEST_CASE("hom_basis of zero matrices is the full matrix space") {
    auto basis = hom_basis(MatF(F3, 2, 2), MatF(F3, 3, 3));
    CHECK(basis.size() == 6);  // every 3x2 matrix X satisfies 0 X = X 0
    CHECK(linearly_independent(basis));
}

TEST_CASE("hom_basis between coprime companions is empty") {
    MatF S = companion_matrix(Poly::from_ints(F5, {3, 2, 1}));
    MatF T = companion_matrix(Poly::from_ints(F5, {2, 4, 1}));
    CHECK(hom_basis(S, T).empty());
}

TEST_CASE("hom_basis solves T X = X S on random pairs") {
    SplitMix64 rng(61);
    for (int t = 0; t < 20; ++t) {
        uint32_t m = 1 + (uint32_t)rng.below(4), r = 1 + (uint32_t)rng.below(4);
        MatF S = m_random(F3, m, m, rng), T = m_random(F3, r, r, rng);
        auto basis = hom_basis(S, T);
        for (const MatF& X : basis) CHECK(m_mul(T, X) == m_mul(X, S));
        if (!basis.empty()) CHECK(linearly_independent(basis));
        // Cross-check the count against a direct kernel computation of
        // the (rm) x (rm) linear system.
        const Field& F = F3;
        uint32_t vars = r * m;
        MatF L(F, vars, vars);
        // vec column-by-column: X[i][j] at j*r + i.
        for (uint32_t j = 0; j < m; ++j)
            for (uint32_t i = 0; i < r; ++i) {
                uint32_t row = j * r + i;
                for (uint32_t k = 0; k < r; ++k)
                    L.set(row, j * r + k, F.add(L.at(row, j * r + k), T.at(i, k)));
                for (uint32_t l = 0; l < m; ++l)
                    L.set(row, l * r + i, F.sub(L.at(row, l * r + i), S.at(l, j)));
            }
        CHECK(basis.size() == m_nullity(L));
    }
}

TEST_CASE("twisted_dim on the worked examples") {
    CHECK(twisted_dim(fixtures::ex1_A(), F3.one()) == 10);
    CHECK(twisted_dim(fixtures::ex2_A(), F5.elem(2)) == 2);
    CHECK(twisted_dim(fixtures::ex3_A(), F5.elem(2)) == 3);
    CHECK(twisted_dim(fixtures::elemdiv11_A(), F5.elem(2)) == 9);
    CHECK(twisted_dim(MatF::identity(F5, 3), F5.elem(2)) == 0);
    CHECK(twisted_dim(fixtures::ex1_A(), F3.zero()) == 4 * 1);  // n * nullity
}

TEST_CASE("dimension breakdown lists the nonzero summands") {
    auto bd = twisted_dim_breakdown(fixtures::elemdiv11_A(), F5.elem(2));
    CHECK(bd.dimension == 9);
    std::vector<uint32_t> degs;
    uint32_t sum = 0;
    for (const auto& p : bd.pairs) {
        degs.push_back(p.degree);
        sum += p.degree;
        CHECK(p.degree == (uint32_t)p_gcd(p_twist(p.f, F5.elem(2)), p.g).degree());
    }
    CHECK(sum == 9);
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<uint32_t>{1, 1, 1, 2, 2, 2});

    // gamma = 0 has no pair table.
    auto bd0 = twisted_dim_breakdown(fixtures::ex1_A(), F3.zero());
    CHECK(bd0.dimension == 4);
    CHECK(bd0.pairs.empty());
}

TEST_CASE("twisted_basis reproduces the ex1 span") {
    auto b = twisted_basis(fixtures::ex1_A(), F3.one());
    check_basis_contract(b);
    REQUIRE(b.dimension == 10);
    CHECK(same_span(b.basis, fixtures::ex1_basis()));
    // The centralizer of A contains the identity.
    CHECK(in_span(MatF::identity(F3, 4), b.basis));
}

TEST_CASE("twisted_basis reproduces the ex2 span") {
    auto b = twisted_basis(fixtures::ex2_A(), F5.elem(2));
    check_basis_contract(b);
    REQUIRE(b.dimension == 2);
    CHECK(same_span(b.basis, fixtures::ex2_basis()));
}

TEST_CASE("twisted_basis reproduces the ex3 span") {
    auto b = twisted_basis(fixtures::ex3_A(), F5.elem(2));
    check_basis_contract(b);
    REQUIRE(b.dimension == 3);
    CHECK(same_span(b.basis, fixtures::ex3_basis()));
    // The third fixture is A times the second.
    auto fx = fixtures::ex3_basis();
    CHECK(m_mul(fixtures::ex3_A(), fx[1]) == fx[2]);
}

TEST_CASE("gamma = 0 basis has single-nonzero-column matrices") {
    MatF Z(F5, 2, 2);
    auto b = twisted_basis(Z, F5.zero());
    check_basis_contract(b);
    CHECK(b.dimension == 4);  // n * nullity = 2*2
    CHECK(b.provenance.empty());
    for (const MatF& X : b.basis) CHECK(nonzero_columns(X) == 1);

    auto b1 = twisted_basis(fixtures::ex1_A(), F3.zero());
    check_basis_contract(b1);
    CHECK(b1.dimension == 4);
    for (const MatF& X : b1.basis) CHECK(nonzero_columns(X) == 1);

    // Invertible A: no x-component, dim 0.
    auto b2 = twisted_basis(MatF::identity(F5, 3), F5.zero());
    CHECK(b2.dimension == 0);
    CHECK(b2.basis.empty());
}

TEST_CASE("provenance records blocks and powers consistently") {
    auto b = twisted_basis(fixtures::elemdiv11_A(), F5.elem(2));
    check_basis_contract(b);
    REQUIRE(b.provenance.size() == 9);
    for (const auto& pr : b.provenance) {
        CHECK(pr.power < pr.block.block_dim);
        CHECK(pr.block.multiplier.is_monic());
    }
    // Powers within one block count 0, 1, ..., block_dim-1.
    for (size_t i = 1; i < b.provenance.size(); ++i) {
        const auto& prev = b.provenance[i - 1];
        const auto& cur = b.provenance[i];
        if (cur.power > 0) CHECK(cur.power == prev.power + 1);
    }
}

TEST_CASE("is_codeword") {
    MatF A = fixtures::ex1_A();
    CHECK(is_codeword(A, F3.one(), MatF(F3, 4, 4)));
    CHECK(is_codeword(A, F3.one(), MatF::identity(F3, 4)));
    CHECK(is_codeword(A, F3.one(), fixtures::ex1_basis()[6]));  // seventh fixture
    CHECK_FALSE(is_codeword(A, F3.elem(2), MatF::identity(F3, 4)));
    CHECK_THROWS_AS(is_codeword(A, F3.one(), MatF(F3, 3, 3)), std::invalid_argument);
}

TEST_CASE("oracle kernel matches the algebraic basis") {
    auto oracle = oracle_kernel(fixtures::ex2_A(), F5.elem(2));
    REQUIRE(oracle.size() == 2);
    auto b = twisted_basis(fixtures::ex2_A(), F5.elem(2));
    CHECK(same_span(oracle, b.basis));
    for (const MatF& X : oracle) CHECK(is_codeword(fixtures::ex2_A(), F5.elem(2), X));

    CHECK(oracle_kernel(MatF::identity(F3, 2), F3.one()).size() == 4);
    CHECK(oracle_kernel(fixtures::ex1_A(), F3.one()).size() == 10);
}

TEST_CASE("oracle size guard") {
    MatF big(Field::prime_field(2), 65, 65);  // 65^2 = 4225 > 4096
    CHECK_THROWS_AS(oracle_kernel(big, Field::prime_field(2).one()), std::domain_error);
}

TEST_CASE("code_params") {
    auto p = code_params(fixtures::ex2_A(), F5.elem(2), true);
    CHECK(p.length == 16);
    CHECK(p.dimension == 2);
    REQUIRE(p.distance.has_value());
    CHECK(*p.distance == 1);

    auto p0 = code_params(MatF::identity(F5, 3), F5.elem(2), true);
    CHECK(p0.length == 9);
    CHECK(p0.dimension == 0);
    CHECK_FALSE(p0.distance.has_value());

    Field F2 = Field::prime_field(2);
    auto pfull = code_params(MatF::identity(F2, 2), F2.one(), true);
    CHECK(pfull.length == 4);
    CHECK(pfull.dimension == 4);
    REQUIRE(pfull.distance.has_value());
    CHECK(*pfull.distance == 1);

    auto skip = code_params(fixtures::ex2_A(), F5.elem(2), false);
    CHECK_FALSE(skip.distance.has_value());

    CHECK_THROWS_AS(code_params(MatF::identity(F2, 2), F2.one(), true, 8), std::domain_error);
}

TEST_CASE("cyclic-matrix law") {
    SplitMix64 rng(62);
    for (int t = 0; t < 50; ++t) {
        Poly f = p_random(F5, 1 + (uint32_t)rng.below(5), rng, true);
        MatF A = companion_matrix(f);
        FieldElem g = F5.elem(1 + (uint32_t)rng.below(4));
        CHECK(twisted_dim(A, g) == (uint32_t)p_gcd(p_twist(f, g), f).degree());
    }
}

TEST_CASE("gamma = 0 law on random matrices") {
    SplitMix64 rng(63);
    for (int t = 0; t < 50; ++t) {
        uint32_t n = 1 + (uint32_t)rng.below(5);
        MatF A = m_random(F3, n, n, rng);
        CHECK(twisted_dim(A, F3.zero()) == n * m_nullity(A));
        auto b = twisted_basis(A, F3.zero());
        check_basis_contract(b);
        for (const MatF& X : b.basis) {
            CHECK(nonzero_columns(X) == 1);
            CHECK(m_mul(A, X).is_zero());
        }
    }
}

TEST_CASE("span helpers") {
    MatF a = MatF::from_ints(F5, {{1, 0}, {0, 0}});
    MatF b = MatF::from_ints(F5, {{0, 1}, {0, 0}});
    MatF c = MatF::from_ints(F5, {{2, 3}, {0, 0}});
    CHECK(in_span(c, {a, b}));
    CHECK_FALSE(in_span(MatF::identity(F5, 2), {a, b}));
    CHECK(same_span({a, b}, {c, b}));
    CHECK_FALSE(same_span({a}, {b}));
    CHECK(linearly_independent({a, b}));
    CHECK_FALSE(linearly_independent({a, b, c}));
    CHECK_FALSE(linearly_independent({MatF(F5, 2, 2)}));  // zero matrix
    // Families over different shapes never share a span.
    CHECK_FALSE(same_span({a}, {MatF::from_ints(F5, {{1, 0, 0}, {0, 0, 0}})}));
}

TEST_CASE("vectorize_rows uses column-by-column order") {
    MatF X = MatF::from_ints(F5, {{1, 2}, {3, 4}});
    MatF V = vectorize_rows({X});
    REQUIRE(V.rows() == 1);
    REQUIRE(V.cols() == 4);
    // Column-major: (0,0), (1,0), (0,1), (1,1).
    CHECK(V.at(0, 0) == 1);
    CHECK(V.at(0, 1) == 3);
    CHECK(V.at(0, 2) == 2);
    CHECK(V.at(0, 3) == 4);
}

TEST_CASE("centralizer contains the identity for random A") {
    SplitMix64 rng(64);
    for (int t = 0; t < 20; ++t) {
        uint32_t n = 1 + (uint32_t)rng.below(4);
        MatF A = m_random(F5, n, n, rng);
        auto b = twisted_basis(A, F5.one());
        check_basis_contract(b);
        CHECK(in_span(MatF::identity(F5, n), b.basis));
    }
}

TEST_CASE("block dimension equals deg gcd of twisted domain and codomain orders") {
    auto b = twisted_basis(fixtures::ex2_A(), F5.elem(2));
    auto dec = decompose(fixtures::ex2_A());
    auto tdec = twist_decomposition(dec, F5.elem(2));
    for (const auto& pr : b.provenance) {
        const auto& dom =
            tdec.components[pr.block.domain_component].generators[pr.block.domain_index];
        const auto& cod =
            dec.components[pr.block.codomain_component].generators[pr.block.codomain_index];
        CHECK(pr.block.block_dim == (uint32_t)p_gcd(dom.order, cod.order).degree());
    }
}
