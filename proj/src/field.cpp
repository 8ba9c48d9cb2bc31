// Copyright 2026 The ah Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ah/field.hpp"

#include <ostream>

namespace ah {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::InfiniteField: return "InfiniteField";
        case ErrorKind::InvalidPrime: return "InvalidPrime";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::NotInSubalgebra: return "NotInSubalgebra";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::CharZero: return "CharZero";
        case ErrorKind::NotImplemented: return "NotImplemented";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::Unverifiable: return "Unverifiable";
        case ErrorKind::ConstantH: return "ConstantH";
        case ErrorKind::InvalidPair: return "InvalidPair";
        case ErrorKind::WrongH: return "WrongH";
        case ErrorKind::CharZeroKappa: return "CharZeroKappa";
        case ErrorKind::PDividesK: return "PDividesK";
        case ErrorKind::NotInCentralizer: return "NotInCentralizer";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::MixedGenerators: return "MixedGenerators";
        case ErrorKind::WrongGenerator: return "WrongGenerator";
        case ErrorKind::NegativeExponent: return "NegativeExponent";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
        fail(ErrorKind::InvalidPrime, std::to_string(p) + " is not a supported prime");
    }
    return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
    if (kind_ == Kind::Rationals) return "QQ";
    return "GF:" + std::to_string(p_);
}

namespace {

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t reduce_signed(long v, std::uint64_t p) {
    auto m = static_cast<long long>(p);
    long long r = static_cast<long long>(v) % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // a, b < 2^32
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1U;
    }
    return result;
}

}  // namespace

Scalar::Scalar(FieldSpec spec) : spec_(spec) {
    if (spec_.is_finite()) {
        value_ = std::uint64_t{0};
    } else {
        value_ = mpq_class(0);
    }
}

Scalar::Scalar(FieldSpec spec, long value) : spec_(spec) {
    if (spec_.is_finite()) {
        value_ = reduce_signed(value, spec_.characteristic());
    } else {
        value_ = mpq_class(value);
    }
}

Scalar::Scalar(FieldSpec spec, const mpz_class& value) : spec_(spec) {
    if (spec_.is_finite()) {
        value_ = reduce(value, spec_.characteristic());
    } else {
        value_ = mpq_class(value);
    }
}

Scalar::Scalar(FieldSpec spec, const mpq_class& value) : spec_(spec) {
    if (value.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    mpq_class v = value;
    v.canonicalize();
    if (spec_.is_finite()) {
        std::uint64_t p = spec_.characteristic();
        std::uint64_t den = reduce(v.get_den(), p);
        if (den == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes mod p");
        value_ = mul_mod(reduce(v.get_num(), p), pow_mod(den, p - 2, p), p);
    } else {
        value_ = std::move(v);
    }
}

bool Scalar::is_zero() const noexcept {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (spec_.is_finite()) fail(ErrorKind::FieldMismatch, "rational() on a prime-field element");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (!spec_.is_finite()) fail(ErrorKind::FieldMismatch, "residue() on a rational");
    return std::get<std::uint64_t>(value_);
}

void Scalar::check_same(const Scalar& other) const {
    if (!(spec_ == other.spec_)) {
        fail(ErrorKind::FieldMismatch,
             "operands from " + spec_.to_string() + " and " + other.spec_.to_string());
    }
}

Scalar Scalar::operator-() const {
    Scalar out(*this);
    if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
        if (*r != 0) *r = spec_.characteristic() - *r;
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = -q;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        *r = (*r + std::get<std::uint64_t>(rhs.value_)) % spec_.characteristic();
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        std::uint64_t p = spec_.characteristic();
        *r = (*r + p - std::get<std::uint64_t>(rhs.value_)) % p;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        *r = mul_mod(*r, std::get<std::uint64_t>(rhs.value_), spec_.characteristic());
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar out(*this);
    if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
        std::uint64_t p = spec_.characteristic();
        *r = pow_mod(*r, p - 2, p);
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = 1 / q;
    }
    return out;
}

Scalar Scalar::pow(long exponent) const {
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    Scalar result = one(spec_);
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1UL;
        if (e > 0) base *= base;
    }
    return result;
}

std::uint64_t Scalar::multiplicative_order() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "order of zero");
    if (!spec_.is_finite()) {
        const auto& q = std::get<mpq_class>(value_);
        if (q == 1) return 1;
        if (q == -1) return 2;
        return 0;
    }
    std::uint64_t p = spec_.characteristic();
    std::uint64_t r = std::get<std::uint64_t>(value_);
    std::uint64_t order = p - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = order;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        primes.push_back(q);
        while (m % q == 0) m /= q;
    }
    if (m > 1) primes.push_back(m);
    for (std::uint64_t q : primes) {
        while (order % q == 0 && pow_mod(r, order / q, p) == 1) order /= q;
    }
    return order;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (const auto* r = std::get_if<std::uint64_t>(&a.value_)) {
        return *r <=> std::get<std::uint64_t>(b.value_);
    }
    int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar int_embed(long n, const FieldSpec& spec) { return Scalar(spec, n); }

Scalar int_embed(const mpz_class& n, const FieldSpec& spec) { return Scalar(spec, n); }

std::vector<Scalar> enumerate(const FieldSpec& spec) {
    if (!spec.is_finite()) fail(ErrorKind::InfiniteField, "cannot enumerate QQ");
    std::vector<Scalar> out;
    out.reserve(spec.size());
    for (std::uint64_t i = 0; i < spec.size(); ++i) {
        out.emplace_back(spec, static_cast<long>(i));
    }
    return out;
}

std::vector<Scalar> enumerate_units(const FieldSpec& spec) {
    auto all = enumerate(spec);
    all.erase(all.begin());
    return all;
}

Scalar primitive_root(const FieldSpec& spec) {
    for (const auto& g : enumerate_units(spec)) {
        if (g.multiplicative_order() == spec.size() - 1) return g;
    }
    fail(ErrorKind::Internal, "no primitive root found");
}

}  // namespace ah
