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

#ifndef AH_FIELD_HPP
#define AH_FIELD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ah/error.hpp"

namespace ah {

/// The coefficient field: either the rationals or a prime field F_p.
/// p is limited to 32 bits so residue products fit in 64 bits.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }
    /// Throws InvalidPrime unless p is a prime below 2^32.
    static FieldSpec prime_field(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
    std::uint64_t characteristic() const noexcept { return p_; }
    /// Number of elements; only meaningful for finite fields.
    std::uint64_t size() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are reduced into [0, p).
class Scalar {
public:
    /// Zero of the given field.
    explicit Scalar(FieldSpec spec);
    Scalar(FieldSpec spec, long value);
    Scalar(FieldSpec spec, const mpz_class& value);
    /// Rationals only; throws DivisionByZero for a zero denominator.
    Scalar(FieldSpec spec, const mpq_class& value);

    static Scalar zero(FieldSpec spec) { return Scalar(spec); }
    static Scalar one(FieldSpec spec) { return Scalar(spec, 1L); }

    const FieldSpec& spec() const noexcept { return spec_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Rational value (rationals only).
    const mpq_class& rational() const;
    /// Residue in [0, p) (prime fields only).
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    Scalar inverse() const;
    /// Negative exponents invert first.
    Scalar pow(long exponent) const;

    /// Multiplicative order of a nonzero element, or 0 when infinite.
    /// Over Q only +1 and -1 have finite order.
    std::uint64_t multiplicative_order() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical total order: residues by value, rationals numerically.
    /// Used only for deterministic tie-breaking.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void check_same(const Scalar& other) const;

    FieldSpec spec_;
    std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Image of an integer under Z -> F.
Scalar int_embed(long n, const FieldSpec& spec);
Scalar int_embed(const mpz_class& n, const FieldSpec& spec);

/// All p elements of F_p in increasing residue order. Throws InfiniteField for Q.
std::vector<Scalar> enumerate(const FieldSpec& spec);

/// The nonzero elements of F_p. Throws InfiniteField for Q.
std::vector<Scalar> enumerate_units(const FieldSpec& spec);

/// Smallest generator of F_p^*. Throws InfiniteField for Q.
Scalar primitive_root(const FieldSpec& spec);

}  // namespace ah

#endif  // AH_FIELD_HPP
