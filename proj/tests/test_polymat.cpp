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

#include <stdexcept>

#include "fixtures.hpp"
#include "tcc/polymat.hpp"
#include "tcc/rng.hpp"

using namespace tcc;

namespace {
const Field F3 = Field::prime_field(3);
const Field F5 = Field::prime_field(5);

// Full SNF certificate: U M V = D diagonal monic with a divisibility
// chain, U and V unimodular, U_inv actually inverts U.
void check_snf(const PolyMat& M, const Snf& s) {
    const Field& F = M.field();
    const uint32_t n = M.rows();

    PolyMat UMV = pm_mul(pm_mul(s.U, M), s.V);
    CHECK(UMV == s.D);
    CHECK(s.D.is_diagonal());

    Poly prev = Poly::one(F);
    for (uint32_t i = 0; i < n; ++i) {
        const Poly& d = s.D.at(i, i);
        CHECK(d.is_monic());
        CHECK(p_divmod(d, prev).second.is_zero());
        prev = d;
    }

    Poly detU = pm_det(s.U);
    Poly detV = pm_det(s.V);
    CHECK(detU.degree() == 0);
    CHECK(detV.degree() == 0);

    PolyMat UUi = pm_mul(s.U, s.U_inv);
    CHECK(UUi == PolyMat::identity(F, n));
}

PolyMat diag(const Field& F, const std::vector<Poly>& entries) {
    PolyMat m(F, (uint32_t)entries.size(), (uint32_t)entries.size());
    for (uint32_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

}  // namespace

TEST_CASE("polymat basics") {
    MatF A = fixtures::ex1_A();
    PolyMat M = PolyMat::x_identity_minus(A);
    CHECK(M.rows() == 4);
    CHECK(M.at(0, 0) == Poly::x(F3));
    CHECK(M.at(0, 1) == Poly::constant(F3, 2));  // -1
    CHECK_FALSE(M.is_diagonal());
    CHECK(PolyMat::identity(F3, 2).is_diagonal());
}

TEST_CASE("determinant of xI - A is the characteristic polynomial") {
    for (const MatF& A : {fixtures::ex1_A(), fixtures::ex2_A(), fixtures::ex3_A()}) {
        CHECK(pm_det(PolyMat::x_identity_minus(A)) == characteristic_polynomial(A));
    }
    SplitMix64 rng(41);
    for (int t = 0; t < 20; ++t) {
        uint32_t n = 1 + (uint32_t)rng.below(5);
        MatF A = m_random(F5, n, n, rng);
        CHECK(pm_det(PolyMat::x_identity_minus(A)) == characteristic_polynomial(A));
    }
}

TEST_CASE("snf of a diagonal matrix with chain already in place") {
    PolyMat M = diag(F5, {Poly::one(F5), Poly::x(F5)});
    Snf s = snf_polymatrix(M);
    CHECK(s.D == M);
    check_snf(M, s);
}

TEST_CASE("snf of ex1 presentation matrix") {
    PolyMat M = PolyMat::x_identity_minus(fixtures::ex1_A());
    Snf s = snf_polymatrix(M);
    check_snf(M, s);
    CHECK(s.D.at(0, 0) == Poly::one(F3));
    CHECK(s.D.at(1, 1) == Poly::from_ints(F3, {1, 1}));
    CHECK(s.D.at(2, 2) == Poly::from_ints(F3, {1, 1}));
    CHECK(s.D.at(3, 3) == Poly::from_ints(F3, {0, 1, 1}));  // x^2+x
}

TEST_CASE("snf of a companion presentation matrix") {
    Poly f = Poly::from_ints(F5, {2, 0, 4, 1});
    PolyMat M = PolyMat::x_identity_minus(companion_matrix(f));
    Snf s = snf_polymatrix(M);
    check_snf(M, s);
    for (uint32_t i = 0; i + 1 < 3; ++i) CHECK(s.D.at(i, i) == Poly::one(F5));
    CHECK(s.D.at(2, 2) == f);
}

TEST_CASE("snf on random presentation matrices") {
    for (Field F : {Field::prime_field(2), Field::prime_field(3), Field::extension(2, 2)}) {
        SplitMix64 rng(0x54f + F.q());
        for (int t = 0; t < 25; ++t) {
            uint32_t n = 1 + (uint32_t)rng.below(5);
            MatF A = m_random(F, n, n, rng);
            PolyMat M = PolyMat::x_identity_minus(A);
            Snf s = snf_polymatrix(M);
            check_snf(M, s);
            // Product of diagonal = det up to the unimodular constants =
            // characteristic polynomial (both monic).
            Poly prod = Poly::one(F);
            for (uint32_t i = 0; i < n; ++i) prod = p_mul(prod, s.D.at(i, i));
            CHECK(prod == characteristic_polynomial(A));
        }
    }
}

TEST_CASE("snf needs a shuffle when the pivot starts off-corner") {
    // Antidiagonal: both pivots require swaps.
    PolyMat M(F5, 2, 2);
    M.at(0, 1) = Poly::x(F5);
    M.at(1, 0) = Poly::from_ints(F5, {1, 1});
    Snf s = snf_polymatrix(M);
    check_snf(M, s);
    CHECK(s.D.at(0, 0) == Poly::one(F5));
    CHECK(s.D.at(1, 1) == Poly::from_ints(F5, {0, 1, 1}));  // x(x+1) normalized chain
}

TEST_CASE("snf rejects singular and non-square inputs") {
    PolyMat Z(F5, 2, 2);  // zero matrix: singular
    CHECK_THROWS_AS(snf_polymatrix(Z), std::domain_error);
    PolyMat R(F5, 2, 3);
    CHECK_THROWS_AS(snf_polymatrix(R), std::invalid_argument);
}

TEST_CASE("divisibility repair across diagonal entries") {
    // diag(x, x+1): entries coprime, chain must become (1, x(x+1)).
    PolyMat M = diag(F5, {Poly::x(F5), Poly::from_ints(F5, {1, 1})});
    Snf s = snf_polymatrix(M);
    check_snf(M, s);
    CHECK(s.D.at(0, 0) == Poly::one(F5));
    CHECK(s.D.at(1, 1) == Poly::from_ints(F5, {0, 1, 1}));
}
