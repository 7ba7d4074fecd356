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
 * @file field.hpp
 * @brief Exact arithmetic in GF(q), q = p^k.
 *
 * Elements are canonical residues packed into a single machine word:
 * for k = 1 the value is the residue in [0, p); for k > 1 it is the
 * coefficient vector (c_0, ..., c_{k-1}) of the polynomial-basis
 * representation, encoded as sum c_i * p^i.  Equality is representation
 * equality, so matrices and polynomials over a field compare bit-exactly.
 *
 * For small fields (q <= 256) full addition/multiplication tables are
 * precomputed at construction; larger fields fall back to direct modular
 * arithmetic.  Either way every operation is a pure function of its
 * inputs and a Field is immutable and freely shareable across threads.
 */

#ifndef TCC_FIELD_HPP
#define TCC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tcc {

class FieldElem;

/// Immutable context for GF(p^k).  Value-semantic handle; cheap to copy.
class Field {
  public:
    /// GF(p) for prime p.
    static Field prime_field(uint32_t p);

    /// GF(p^k).  When no modulus is given the lexicographically least
    /// monic irreducible of degree k over GF(p) is selected (coefficient
    /// tuple compared from the constant term up), so the choice is
    /// reproducible.  A supplied modulus must be monic of degree k and
    /// irreducible; it is given constant-term first including the leading 1
    /// (length k+1).
    static Field extension(uint32_t p, uint32_t k);
    static Field extension(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus);

    /// Unified constructor: k > 1 dispatches to extension(); a modulus
    /// supplied for k == 1 is rejected (prime fields have none).
    static Field make(uint32_t p, uint32_t k, const std::vector<uint32_t>* modulus = nullptr);

    uint32_t p() const;
    uint32_t k() const;
    uint32_t q() const;

    /// Modulus coefficients, constant first, length k+1.  Empty for k == 1.
    const std::vector<uint32_t>& modulus() const;

    /// Structural equality: same p, k and modulus.
    bool same(const Field& other) const;

    // Arithmetic on encoded values in [0, q).
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t inv(uint32_t a) const;              // throws on a == 0
    uint32_t pow(uint32_t a, uint64_t e) const;  // 0^0 == 1

    bool has_tables() const;
    /// Row-major q*q multiplication/addition tables; nullptr when absent.
    const uint32_t* mul_table() const;
    const uint32_t* add_table() const;

    /// Digits (c_0, ..., c_{k-1}) base p of an encoded value.
    std::vector<uint32_t> decode(uint32_t v) const;
    uint32_t encode(std::span<const uint32_t> digits) const;

    /// Lexicographic comparison of the coefficient tuples (c_0 first).
    /// Coincides with residue order for prime fields.
    bool elem_less(uint32_t a, uint32_t b) const;

    FieldElem elem(uint32_t v) const;
    FieldElem zero() const;
    FieldElem one() const;
    /// Reduces an arbitrary signed integer into the prime subfield.
    FieldElem from_int(int64_t v) const;

    std::string elem_to_string(uint32_t v) const;

    const void* impl_id() const;  // stable identity for diagnostics

  private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
    friend class FieldElem;
};

/// A single element of a Field.  Carries its context so mixed-field
/// arithmetic is detected instead of silently producing garbage.
class FieldElem {
  public:
    FieldElem(Field f, uint32_t raw) : field_(std::move(f)), raw_(raw) {}

    const Field& field() const { return field_; }
    uint32_t raw() const { return raw_; }
    bool is_zero() const { return raw_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(uint64_t e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_string() const { return field_.elem_to_string(raw_); }

  private:
    Field field_;
    uint32_t raw_;
};

namespace detail {
/// Throws std::invalid_argument when the two fields differ structurally.
void require_same_field(const Field& a, const Field& b, const char* where);
}  // namespace detail

}  // namespace tcc

#endif  // TCC_FIELD_HPP
