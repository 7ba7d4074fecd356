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

#include "tcc/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcc {

namespace {

constexpr uint32_t kTableLimit = 256;   // build q*q lookup tables up to here
constexpr uint64_t kMaxOrder = 1u << 30;  // encoded values must fit comfortably

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- GF(p)[x] helpers on digit vectors (constant-term first, normalized) ---
// Only used during field construction: modulus validation and the search
// for the least-lex irreducible.  The full Poly type depends on Field and
// is not available here.

using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod_p(const PVec& a, const PVec& b, const PVec& mod, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (uint32_t)((c[i + j] + (uint64_t)a[i] * b[j]) % p);
    }
    // reduce by monic mod
    size_t dm = mod.size() - 1;
    for (size_t i = c.size(); i-- > dm;) {
        uint32_t coef = c[i];
        if (coef == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < dm; ++j) {
            uint64_t sub = (uint64_t)coef * mod[j] % p;
            c[i - dm + j] = (uint32_t)((c[i - dm + j] + p - sub) % p);
        }
    }
    c.resize(dm);
    ptrim(c);
    return c;
}

PVec ppowmod_p(PVec base, uint64_t e, const PVec& mod, uint32_t p) {
    PVec r{1};
    while (e) {
        if (e & 1) r = pmulmod_p(r, base, mod, p);
        base = pmulmod_p(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PVec pgcd_p(PVec a, PVec b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b, b monic not required: normalize divisor lead each step
        uint32_t lead = b.back();
        uint32_t lead_inv = 1;
        {  // Fermat inverse mod p
            uint64_t r = 1, x = lead, e = p - 2;
            while (e) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            lead_inv = (uint32_t)r;
        }
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t f = (uint64_t)a.back() * lead_inv % p;
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = f * b[i] % p;
                a[off + i] = (uint32_t)((a[off + i] + p - sub) % p);
            }
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility over GF(p) for a monic modulus candidate.
bool irreducible_over_prime(const PVec& f, uint32_t p) {
    size_t d = f.size() - 1;
    if (d == 0) return false;
    PVec x{0, 1};
    // x^(p^d) == x mod f
    PVec g = x;
    for (size_t i = 0; i < d; ++i) g = ppowmod_p(g, p, f, p);
    PVec gx = g;
    // g - x
    if (gx.size() < 2) gx.resize(2, 0);
    gx[1] = (gx[1] + p - 1) % p;
    ptrim(gx);
    if (!gx.empty()) return false;
    // gcd(x^(p^(d/l)) - x, f) == 1 for prime l | d
    for (size_t l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool lp = true;
        for (size_t t = 2; t * t <= l; ++t)
            if (l % t == 0) { lp = false; break; }
        if (!lp) continue;
        PVec h = x;
        for (size_t i = 0; i < d / l; ++i) h = ppowmod_p(h, p, f, p);
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        ptrim(h);
        PVec g2 = pgcd_p(h, f, p);
        if (!(g2.size() == 1)) return false;
    }
    return true;
}

// Least monic irreducible of degree k over GF(p), comparing the coefficient
// tuple (c_0, ..., c_{k-1}) lexicographically from the constant term up.
PVec least_irreducible(uint32_t p, uint32_t k) {
    std::vector<uint32_t> low(k, 0);
    while (true) {
        PVec f(low.begin(), low.end());
        f.push_back(1);
        if (irreducible_over_prime(f, p)) return f;
        // next tuple in lex order: c_0 most significant
        size_t i = k;
        while (i-- > 0) {
            if (++low[i] < p) break;
            low[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible of requested degree");
        }
    }
}

}  // namespace

struct Field::Impl {
    uint32_t p = 0;
    uint32_t k = 1;
    uint32_t q = 0;
    std::vector<uint32_t> modulus;  // constant first, length k+1; empty for k == 1
    std::vector<uint32_t> mul_tab;  // q*q when tabled
    std::vector<uint32_t> add_tab;
    std::vector<uint32_t> inv_tab;  // q entries (inv_tab[0] unused)
    std::vector<uint32_t> neg_tab;
    bool tabled = false;

    std::vector<uint32_t> decode(uint32_t v) const {
        std::vector<uint32_t> d(k);
        for (uint32_t i = 0; i < k; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }
    uint32_t encode(std::span<const uint32_t> digits) const {
        uint32_t v = 0;
        for (size_t i = digits.size(); i-- > 0;) v = v * p + digits[i] % p;
        return v;
    }

    uint32_t add_direct(uint32_t a, uint32_t b) const {
        if (k == 1) return (uint32_t)(((uint64_t)a + b) % p);
        uint32_t v = 0, scale = 1;
        for (uint32_t i = 0; i < k; ++i) {
            v += (a % p + b % p) % p * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return v;
    }
    uint32_t neg_direct(uint32_t a) const {
        if (k == 1) return a == 0 ? 0 : p - a;
        uint32_t v = 0, scale = 1;
        for (uint32_t i = 0; i < k; ++i) {
            uint32_t d = a % p;
            v += (d == 0 ? 0 : p - d) * scale;
            a /= p;
            scale *= p;
        }
        return v;
    }
    uint32_t mul_direct(uint32_t a, uint32_t b) const {
        if (k == 1) return (uint32_t)((uint64_t)a * b % p);
        PVec da = decode(a), db = decode(b);
        ptrim(da);
        ptrim(db);
        PVec c = pmulmod_p(da, db, modulus, p);
        c.resize(k, 0);
        return encode(c);
    }
    uint32_t pow_direct(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % q;  // q >= 2 so this is 1
        uint32_t base = a;
        while (e) {
            if (e & 1) r = mul_direct(r, base);
            base = mul_direct(base, base);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv_direct(uint32_t a) const {
        if (a == 0) throw std::domain_error("field inverse of zero");
        if (k == 1) {
            // extended Euclid mod p
            int64_t t = 0, nt = 1, r = p, nr = a;
            while (nr != 0) {
                int64_t qq = r / nr;
                std::swap(t -= qq * nt, nt);
                std::swap(r -= qq * nr, nr);
            }
            if (t < 0) t += p;
            return (uint32_t)t;
        }
        return pow_direct(a, (uint64_t)q - 2);
    }

    void build_tables() {
        if (q > kTableLimit) return;
        mul_tab.resize((size_t)q * q);
        add_tab.resize((size_t)q * q);
        inv_tab.assign(q, 0);
        neg_tab.assign(q, 0);
        for (uint32_t a = 0; a < q; ++a) {
            neg_tab[a] = neg_direct(a);
            for (uint32_t b = 0; b < q; ++b) {
                add_tab[(size_t)a * q + b] = add_direct(a, b);
                mul_tab[(size_t)a * q + b] = mul_direct(a, b);
            }
        }
        for (uint32_t a = 1; a < q; ++a) inv_tab[a] = inv_direct(a);
        tabled = true;
    }
};

Field::Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Field Field::prime_field(uint32_t p) { return make(p, 1, nullptr); }

Field Field::extension(uint32_t p, uint32_t k) { return make(p, k, nullptr); }

Field Field::extension(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus) {
    return make(p, k, &modulus);
}

Field Field::make(uint32_t p, uint32_t k, const std::vector<uint32_t>* modulus) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order p^k too large");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = (uint32_t)q;
    if (k > 1) {
        PVec mod;
        if (modulus) {
            mod = *modulus;
            for (auto& c : mod) c %= p;
            if (mod.size() != (size_t)k + 1 || mod.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree k");
            if (!irreducible_over_prime(mod, p))
                throw std::invalid_argument("modulus is reducible over GF(p)");
        } else {
            mod = least_irreducible(p, k);
        }
        impl->modulus = std::move(mod);
    } else if (modulus && !modulus->empty()) {
        // tolerated: a degree-1 "modulus" is meaningless for a prime field
        throw std::invalid_argument("modulus given for prime field");
    }
    impl->build_tables();
    return Field(std::move(impl));
}

uint32_t Field::p() const { return impl_->p; }
uint32_t Field::k() const { return impl_->k; }
uint32_t Field::q() const { return impl_->q; }
const std::vector<uint32_t>& Field::modulus() const { return impl_->modulus; }

bool Field::same(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->k == other.impl_->k && impl_->modulus == other.impl_->modulus;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    const Impl& im = *impl_;
    return im.tabled ? im.add_tab[(size_t)a * im.q + b] : im.add_direct(a, b);
}
uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
uint32_t Field::mul(uint32_t a, uint32_t b) const {
    const Impl& im = *impl_;
    return im.tabled ? im.mul_tab[(size_t)a * im.q + b] : im.mul_direct(a, b);
}
uint32_t Field::neg(uint32_t a) const {
    const Impl& im = *impl_;
    return im.tabled ? im.neg_tab[a] : im.neg_direct(a);
}
uint32_t Field::inv(uint32_t a) const {
    const Impl& im = *impl_;
    if (a == 0) throw std::domain_error("field inverse of zero");
    return im.tabled ? im.inv_tab[a] : im.inv_direct(a);
}
uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (e == 0) return 1;  // includes 0^0 == 1
    const Impl& im = *impl_;
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    (void)im;
    return r;
}

bool Field::has_tables() const { return impl_->tabled; }
const uint32_t* Field::mul_table() const { return impl_->tabled ? impl_->mul_tab.data() : nullptr; }
const uint32_t* Field::add_table() const { return impl_->tabled ? impl_->add_tab.data() : nullptr; }

std::vector<uint32_t> Field::decode(uint32_t v) const { return impl_->decode(v); }
uint32_t Field::encode(std::span<const uint32_t> digits) const { return impl_->encode(digits); }

bool Field::elem_less(uint32_t a, uint32_t b) const {
    if (impl_->k == 1) return a < b;
    uint32_t p = impl_->p;
    for (uint32_t i = 0; i < impl_->k; ++i) {
        uint32_t da = a % p, db = b % p;
        if (da != db) return da < db;
        a /= p;
        b /= p;
    }
    return false;
}

FieldElem Field::elem(uint32_t v) const {
    if (v >= impl_->q) throw std::invalid_argument("encoded value out of range for field");
    return FieldElem(*this, v);
}
FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, 1); }
FieldElem Field::from_int(int64_t v) const {
    int64_t p = impl_->p;
    int64_t r = v % p;
    if (r < 0) r += p;
    return FieldElem(*this, (uint32_t)r);
}

std::string Field::elem_to_string(uint32_t v) const {
    if (impl_->k == 1) return std::to_string(v);
    auto d = impl_->decode(v);
    std::ostringstream os;
    os << '[';
    for (uint32_t i = 0; i < impl_->k; ++i) {
        if (i) os << ',';
        os << d[i];
    }
    os << ']';
    return os.str();
}

const void* Field::impl_id() const { return impl_.get(); }

namespace detail {
void require_same_field(const Field& a, const Field& b, const char* where) {
    if (!a.same(b))
        throw std::invalid_argument(std::string(where) + ": operands belong to different fields");
}
}  // namespace detail

FieldElem FieldElem::operator+(const FieldElem& o) const {
    detail::require_same_field(field_, o.field_, "FieldElem::operator+");
    return FieldElem(field_, field_.add(raw_, o.raw_));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    detail::require_same_field(field_, o.field_, "FieldElem::operator-");
    return FieldElem(field_, field_.sub(raw_, o.raw_));
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    detail::require_same_field(field_, o.field_, "FieldElem::operator*");
    return FieldElem(field_, field_.mul(raw_, o.raw_));
}
FieldElem FieldElem::operator-() const { return FieldElem(field_, field_.neg(raw_)); }
FieldElem FieldElem::inverse() const { return FieldElem(field_, field_.inv(raw_)); }
FieldElem FieldElem::pow(uint64_t e) const { return FieldElem(field_, field_.pow(raw_, e)); }

bool FieldElem::operator==(const FieldElem& o) const {
    return field_.same(o.field_) && raw_ == o.raw_;
}

}  // namespace tcc
