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
 * @file io.hpp
 * @brief JSON interchange for problems and results.
 *
 * Conventions (all fixed):
 *  - field descriptor: {"p": 5, "k": 1} or {"p": 2, "k": 2, "modulus": [1,1,1]}
 *    with modulus coefficients constant-term first including the leading 1;
 *  - field elements: integers for prime fields (any integer, reduced mod p),
 *    coefficient arrays of length k for extensions;
 *  - matrices: row-major nested arrays of element literals;
 *  - polynomials: coefficient lists, constant term first.
 *
 * Note: JSON matrices are row-major, while the vectorization used by
 * the oracle and span comparisons reads matrices column by column.
 * These are independent conventions; see codes.hpp.
 */

#ifndef TCC_IO_HPP
#define TCC_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tcc/field.hpp"
#include "tcc/matrix.hpp"
#include "tcc/poly.hpp"

namespace tcc {

using Json = nlohmann::json;

/// Parse/validation failure with a path-ish diagnostic message.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProblemOptions {
    bool distance = false;
    std::optional<uint64_t> max_enum;
    std::optional<std::string> format;  // "text" | "json"
};

struct ProblemFile {
    Field field;
    uint32_t n;
    MatF A;
    FieldElem gamma;
    std::optional<MatF> X;  // candidate codeword for the check command
    ProblemOptions options;
};

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json elem_to_json(const Field& f, uint32_t raw);
uint32_t elem_from_json(const Field& f, const Json& j, const char* where);

Json matrix_to_json(const MatF& m);
MatF matrix_from_json(const Field& f, const Json& j, const char* where);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Field& f, const Json& j, const char* where);

ProblemFile problem_from_json(const Json& j);
Json problem_to_json(const ProblemFile& p);

ProblemFile load_problem(const std::string& path);
/// Load a bare matrix file: either a nested array or {"X": [...]}.
MatF load_matrix(const std::string& path, const Field& f);

}  // namespace tcc

#endif  // TCC_IO_HPP
