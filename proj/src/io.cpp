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

#include "tcc/io.hpp"

#include <fstream>

namespace tcc {

namespace {

// nlohmann tags text-parsed literals as unsigned but C++ int literals as
// signed, so test for integer-ness and range rather than the storage tag.
bool json_uint(const Json& j, uint64_t min, uint64_t& out) {
    if (!j.is_number_integer()) return false;
    if (j.is_number_unsigned()) {
        out = j.get<uint64_t>();
        return out >= min;
    }
    int64_t v = j.get<int64_t>();
    if (v < 0 || (uint64_t)v < min) return false;
    out = (uint64_t)v;
    return true;
}

bool json_u32(const Json& j, uint64_t min, uint32_t& out) {
    uint64_t v;
    if (!json_uint(j, min, v) || v > UINT32_MAX) return false;
    out = (uint32_t)v;
    return true;
}

}  // namespace

Json field_to_json(const Field& f) {
    Json j;
    j["p"] = f.p();
    j["k"] = f.k();
    if (f.k() > 1) j["modulus"] = f.modulus();
    return j;
}

Field field_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("field: expected an object with p and k");
    uint32_t p = 0;
    if (!j.contains("p") || !json_u32(j["p"], 1, p))
        throw ParseError("field.p: expected a positive integer");
    uint32_t k = 1;
    if (j.contains("k") && !json_u32(j["k"], 1, k))
        throw ParseError("field.k: expected a positive integer");
    try {
        if (j.contains("modulus")) {
            if (!j["modulus"].is_array()) throw ParseError("field.modulus: expected an array");
            std::vector<uint32_t> mod;
            for (const auto& c : j["modulus"]) {
                uint32_t v = 0;
                if (!json_u32(c, 0, v)) throw ParseError("field.modulus: expected integers");
                mod.push_back(v);
            }
            return Field::make(p, k, &mod);
        }
        return Field::make(p, k, nullptr);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("field: ") + e.what());
    }
}

Json elem_to_json(const Field& f, uint32_t raw) {
    if (f.k() == 1) return raw;
    return Json(f.decode(raw));
}

uint32_t elem_from_json(const Field& f, const Json& j, const char* where) {
    if (j.is_number_integer()) return f.from_int(j.get<int64_t>()).raw();
    if (j.is_array()) {
        if (j.size() > f.k())
            throw ParseError(std::string(where) + ": coefficient array longer than extension degree");
        std::vector<uint32_t> digits(f.k(), 0);
        for (size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer())
                throw ParseError(std::string(where) + ": expected integer coefficients");
            digits[i] = f.from_int(j[i].get<int64_t>()).raw();
        }
        return f.encode(digits);
    }
    throw ParseError(std::string(where) + ": expected an integer or a coefficient array");
}

Json matrix_to_json(const MatF& m) {
    Json rows = Json::array();
    for (uint32_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (uint32_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatF matrix_from_json(const Field& f, const Json& j, const char* where) {
    if (!j.is_array() || j.empty())
        throw ParseError(std::string(where) + ": expected a nonempty array of rows");
    uint32_t rows = (uint32_t)j.size();
    if (!j[0].is_array()) throw ParseError(std::string(where) + ": rows must be arrays");
    uint32_t cols = (uint32_t)j[0].size();
    MatF m(f, rows, cols);
    for (uint32_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError(std::string(where) + ": row " + std::to_string(r) +
                             " has inconsistent length");
        for (uint32_t c = 0; c < cols; ++c)
            m.set(r, c, elem_from_json(f, j[r][c],
                                       (std::string(where) + "[" + std::to_string(r) + "][" +
                                        std::to_string(c) + "]")
                                           .c_str()));
    }
    return m;
}

Json poly_to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(elem_to_json(p.field(), p.coeff(i)));
    return coeffs;
}

Poly poly_from_json(const Field& f, const Json& j, const char* where) {
    if (!j.is_array()) throw ParseError(std::string(where) + ": expected a coefficient array");
    std::vector<uint32_t> coeffs;
    for (size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(elem_from_json(f, j[i], (std::string(where) + "[" + std::to_string(i) + "]").c_str()));
    return Poly(f, std::move(coeffs));
}

ProblemFile problem_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("problem: expected a JSON object");
    if (!j.contains("field")) throw ParseError("problem: missing \"field\"");
    Field f = field_from_json(j["field"]);
    if (!j.contains("A")) throw ParseError("problem: missing \"A\"");
    MatF A = matrix_from_json(f, j["A"], "A");
    if (!A.is_square()) throw ParseError("A: must be square");
    uint32_t n = A.rows();
    if (j.contains("n")) {
        uint32_t declared = 0;
        if (!json_u32(j["n"], 0, declared)) throw ParseError("n: expected a nonnegative integer");
        if (declared != n)
            throw ParseError("n: does not match the shape of A (" + std::to_string(n) + ")");
    }
    uint32_t gamma_raw = 0;
    if (j.contains("gamma")) gamma_raw = elem_from_json(f, j["gamma"], "gamma");

    ProblemFile p{f, n, std::move(A), FieldElem(f, gamma_raw), std::nullopt, {}};
    if (j.contains("X")) p.X = matrix_from_json(f, j["X"], "X");
    if (j.contains("options")) {
        const Json& o = j["options"];
        if (!o.is_object()) throw ParseError("options: expected an object");
        if (o.contains("distance")) {
            if (!o["distance"].is_boolean()) throw ParseError("options.distance: expected a boolean");
            p.options.distance = o["distance"].get<bool>();
        }
        if (o.contains("max_enum")) {
            uint64_t me = 0;
            if (!json_uint(o["max_enum"], 1, me))
                throw ParseError("options.max_enum: expected a positive integer");
            p.options.max_enum = me;
        }
        if (o.contains("format")) {
            if (!o["format"].is_string()) throw ParseError("options.format: expected a string");
            std::string fmt = o["format"].get<std::string>();
            if (fmt != "text" && fmt != "json")
                throw ParseError("options.format: expected \"text\" or \"json\"");
            p.options.format = fmt;
        }
    }
    return p;
}

Json problem_to_json(const ProblemFile& p) {
    Json j;
    j["field"] = field_to_json(p.field);
    j["n"] = p.n;
    j["A"] = matrix_to_json(p.A);
    j["gamma"] = elem_to_json(p.field, p.gamma.raw());
    if (p.X) j["X"] = matrix_to_json(*p.X);
    Json o = Json::object();
    if (p.options.distance) o["distance"] = true;
    if (p.options.max_enum) o["max_enum"] = *p.options.max_enum;
    if (p.options.format) o["format"] = *p.options.format;
    if (!o.empty()) j["options"] = o;
    return j;
}

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

}  // namespace

ProblemFile load_problem(const std::string& path) {
    try {
        return problem_from_json(load_json(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

MatF load_matrix(const std::string& path, const Field& f) {
    Json j = load_json(path);
    try {
        if (j.is_object() && j.contains("X")) return matrix_from_json(f, j["X"], "X");
        return matrix_from_json(f, j, "matrix");
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace tcc
