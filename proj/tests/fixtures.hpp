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
 * @file fixtures.hpp
 * @brief Shared golden fixtures for the test suite.
 *
 * Three fully worked reference problems (ex1..ex3), a small Hom-module
 * pair, and an 11x11 block-companion construction with a prescribed
 * multiset of elementary divisors.  Fixture bases are one valid choice
 * each; tests compare spans, never individual matrices.
 */

#ifndef TCC_TESTS_FIXTURES_HPP
#define TCC_TESTS_FIXTURES_HPP

#include <vector>

#include "tcc/field.hpp"
#include "tcc/matrix.hpp"
#include "tcc/poly.hpp"

namespace fixtures {

using tcc::Field;
using tcc::MatF;
using tcc::Poly;

inline Field gf3() { return Field::prime_field(3); }
inline Field gf5() { return Field::prime_field(5); }

// ex1: GF(3), n = 4, gamma = 1.  A = J - I (all ones off the diagonal).
// dim C(A,1) = 10; elementary divisors {x, x+1, x+1, x+1}.
inline MatF ex1_A() {
    return MatF::from_ints(gf3(), {{0, 1, 1, 1},  //
                                   {1, 0, 1, 1},
                                   {1, 1, 0, 1},
                                   {1, 1, 1, 0}});
}

// A reference basis of C(A,1) for ex1.
inline std::vector<MatF> ex1_basis() {
    const Field F = gf3();
    return {
        MatF::from_ints(F, {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}),
        MatF::from_ints(F, {{1, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {2, 2, 2, 0}}),
        MatF::from_ints(F, {{1, 1, 1, 0}, {0, 0, 0, 0}, {2, 2, 2, 0}, {0, 0, 0, 0}}),
        MatF::from_ints(F, {{1, 1, 1, 0}, {2, 2, 2, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
        MatF::from_ints(F, {{1, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {2, 2, 0, 2}}),
        MatF::from_ints(F, {{1, 1, 0, 1}, {0, 0, 0, 0}, {2, 2, 0, 2}, {0, 0, 0, 0}}),
        MatF::from_ints(F, {{1, 1, 0, 1}, {2, 2, 0, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
        MatF::from_ints(F, {{1, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {2, 0, 2, 2}}),
        MatF::from_ints(F, {{1, 0, 1, 1}, {0, 0, 0, 0}, {2, 0, 2, 2}, {0, 0, 0, 0}}),
        MatF::from_ints(F, {{1, 0, 1, 1}, {2, 0, 2, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
    };
}

// Kernel generators of A and A+I for ex1 (span data, not canonical).
inline std::vector<MatF> ex1_ker_A() {
    return {MatF::column_from_ints(gf3(), {1, 1, 1, 1})};
}
inline std::vector<MatF> ex1_ker_A_plus_I() {
    const Field F = gf3();
    return {MatF::column_from_ints(F, {2, 0, 0, 1}),  //
            MatF::column_from_ints(F, {2, 0, 1, 0}),
            MatF::column_from_ints(F, {2, 1, 0, 0})};
}

// ex2: GF(5), n = 4, gamma = 2.  dim C(A,2) = 2; elementary divisors
// {x+2, x+2, (x+4)^2}; under the 2-twist the orders become
// {x+4, x+4, (x+3)^2}.
inline MatF ex2_A() {
    return MatF::from_ints(gf5(), {{3, 0, 0, 0},  //
                                   {0, 3, 0, 0},
                                   {0, 0, 1, 1},
                                   {0, 0, 0, 1}});
}

inline std::vector<MatF> ex2_basis() {
    const Field F = gf5();
    return {
        MatF::from_ints(F, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}),
        MatF::from_ints(F, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}),
    };
}

// ex3: GF(5), n = 5, gamma = 2.  dim C(A,2) = 3;
// m_A = x (x^2+2x+3) (x^2+4x+2), a cyclic matrix.
inline MatF ex3_A() {
    return MatF::from_ints(gf5(), {{1, 4, 2, 0, 4},  //
                                   {1, 1, 3, 2, 0},
                                   {4, 4, 3, 4, 1},
                                   {2, 4, 4, 3, 3},
                                   {3, 4, 1, 2, 1}});
}

inline Poly ex3_minpoly() {
    const Field F = gf5();
    return tcc::p_mul(tcc::p_mul(Poly::from_ints(F, {0, 1}), Poly::from_ints(F, {3, 2, 1})),
                      Poly::from_ints(F, {2, 4, 1}));
}

inline std::vector<MatF> ex3_basis() {
    const Field F = gf5();
    return {
        MatF::from_ints(F, {{1, 0, 3, 1, 0},
                            {1, 0, 3, 1, 0},
                            {4, 0, 2, 4, 0},
                            {3, 0, 4, 3, 0},
                            {3, 0, 4, 3, 0}}),
        MatF::from_ints(F, {{0, 3, 4, 3, 4},
                            {0, 3, 4, 3, 4},
                            {2, 2, 2, 4, 2},
                            {4, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0}}),
        // A times the previous matrix.
        MatF::from_ints(F, {{4, 4, 4, 3, 4},
                            {4, 4, 4, 3, 4},
                            {2, 4, 3, 1, 3},
                            {0, 4, 2, 4, 2},
                            {0, 0, 0, 0, 0}}),
    };
}

// Hom pair over GF(3): S is 3x3 with a single 1 at (2,3) (1-indexed),
// T is the 2x2 subdiagonal nilpotent.  [S]F^3 has elementary divisors
// {x, x^2}, [T]F^2 has {x^2}; dim Hom = deg gcd(x, x^2) +
// deg gcd(x^2, x^2) = 3.
inline MatF hom_S() {
    return MatF::from_ints(gf3(), {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}});
}
inline MatF hom_T() { return MatF::from_ints(gf3(), {{0, 0}, {1, 0}}); }

// Generators of the two cyclic Hom blocks, written in the standard
// bases: gen_a maps the order-x generator u = e1 to x.v, gen_b maps the
// order-x^2 generator u = e3 to v (so e2 = x.e3 goes to x.v = e2 of the
// codomain).  Both satisfy T*X == X*S.
inline MatF hom_gen_a() { return MatF::from_ints(gf3(), {{0, 0, 0}, {1, 0, 0}}); }
inline MatF hom_gen_b() { return MatF::from_ints(gf3(), {{0, 0, 1}, {0, 1, 0}}); }

// Prescribed elementary divisors over GF(5) realized as a block
// diagonal of companion matrices: {x^2, x, (x^2+x+1)^2, x^2+x+1,
// x^2+2x+4}, total degree 11.  dim C(A,2) = 9 = 2+1+1+1+2+2.
inline std::vector<Poly> elemdiv11() {
    const Field F = gf5();
    const Poly p1 = Poly::from_ints(F, {1, 1, 1});  // x^2+x+1
    return {
        Poly::from_ints(F, {0, 0, 1}),  // x^2
        Poly::from_ints(F, {0, 1}),     // x
        tcc::p_mul(p1, p1),             // (x^2+x+1)^2
        p1,
        Poly::from_ints(F, {4, 2, 1}),  // x^2+2x+4
    };
}

inline MatF elemdiv11_A() {
    std::vector<MatF> blocks;
    for (const Poly& f : elemdiv11()) blocks.push_back(tcc::companion_matrix(f));
    return tcc::m_block_diag(blocks);
}

}  // namespace fixtures

#endif  // TCC_TESTS_FIXTURES_HPP
