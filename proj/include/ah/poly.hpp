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

#ifndef AH_POLY_HPP
#define AH_POLY_HPP

#include <climits>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ah/field.hpp"

namespace ah {

/// Degree of the zero polynomial.
inline constexpr int kNegInfinity = INT_MIN;

/// Dense univariate polynomial over a FieldSpec, coefficients indexed by
/// degree with trailing zeros stripped.
class Poly {
public:
    explicit Poly(FieldSpec spec) : spec_(spec) {}
    Poly(FieldSpec spec, std::vector<Scalar> coeffs);
    /// Convenience for tests and literals: integer coefficients, low degree first.
    Poly(FieldSpec spec, std::initializer_list<long> coeffs);

    static Poly zero(FieldSpec spec) { return Poly(spec); }
    static Poly constant(const Scalar& c);
    static Poly one(FieldSpec spec) { return constant(Scalar::one(spec)); }
    static Poly x(FieldSpec spec);
    /// c * x^k
    static Poly monomial(const Scalar& c, int k);
    /// alpha * x + beta
    static Poly affine(const Scalar& alpha, const Scalar& beta);

    const FieldSpec& spec() const noexcept { return spec_; }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    /// kNegInfinity for the zero polynomial.
    int degree() const noexcept {
        return c_.empty() ? kNegInfinity : static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }

    /// Coefficient of x^k; zero outside the stored range.
    Scalar coeff(int k) const;
    /// Leading coefficient; throws ZeroPolynomial for 0.
    const Scalar& lead() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Scalar& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.spec_ == b.spec_ && a.c_ == b.c_;
    }

    Scalar eval(const Scalar& at) const;
    Poly pow(unsigned long e) const;
    /// Divide by the leading coefficient; zero stays zero.
    Poly monic() const;
    /// Multiply by x^k.
    Poly shift(int k) const;

    /// Canonical text in decreasing degree, e.g. "x^2 - 3*x + 1/2".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    void check_same(const Poly& other) const;

    FieldSpec spec_;
    std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// (q, r) with a = q*b + r and deg r < deg b. Throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly derivative(const Poly& f);
/// Monic gcd; throws BothZero when both inputs vanish.
Poly gcd_monic(const Poly& a, const Poly& b);
/// f(g(x)).
Poly compose(const Poly& f, const Poly& g);
/// base^e mod m, e given as a big integer.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);

/// Coefficientwise p-th root of a polynomial in F_p[x^p]: g(x^p) -> g(x).
/// Uses a^p = a in F_p.
Poly pth_root(const Poly& f);

}  // namespace ah

#endif  // AH_POLY_HPP
