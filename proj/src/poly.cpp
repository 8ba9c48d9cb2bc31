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

#include "ah/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ah {

Poly::Poly(FieldSpec spec, std::vector<Scalar> coeffs) : spec_(spec), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
        if (!(c.spec() == spec_)) fail(ErrorKind::FieldMismatch, "coefficient from another field");
    }
    trim();
}

Poly::Poly(FieldSpec spec, std::initializer_list<long> coeffs) : spec_(spec) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(spec_, c);
    trim();
}

Poly Poly::constant(const Scalar& c) {
    Poly out(c.spec());
    if (!c.is_zero()) out.c_.push_back(c);
    return out;
}

Poly Poly::x(FieldSpec spec) { return monomial(Scalar::one(spec), 1); }

Poly Poly::monomial(const Scalar& c, int k) {
    Poly out(c.spec());
    if (c.is_zero()) return out;
    out.c_.assign(static_cast<std::size_t>(k) + 1, Scalar::zero(c.spec()));
    out.c_.back() = c;
    return out;
}

Poly Poly::affine(const Scalar& alpha, const Scalar& beta) {
    return Poly(alpha.spec(), {beta, alpha});
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& other) const {
    if (!(spec_ == other.spec_)) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar::zero(spec_);
    return c_[static_cast<std::size_t>(k)];
}

const Scalar& Poly::lead() const {
    if (c_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(spec_));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(spec_));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly out(a.spec_);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.spec_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    out.trim();
    return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& rhs) {
    if (!(rhs.spec() == spec_)) fail(ErrorKind::FieldMismatch, "scalar from another field");
    for (auto& c : c_) c *= rhs;
    trim();
    return *this;
}

Scalar Poly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(spec_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly Poly::pow(unsigned long e) const {
    Poly result = one(spec_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1UL;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

Poly Poly::shift(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly out(spec_);
    out.c_.assign(static_cast<std::size_t>(k), Scalar::zero(spec_));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        bool negative = !spec_.is_finite() && c.rational() < 0;
        Scalar mag = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (!(a.spec() == b.spec())) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
    const FieldSpec& spec = a.spec();
    if (a.degree() < b.degree()) return {Poly(spec), a};
    std::vector<Scalar> rem = a.coeffs();
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<Scalar> quo(static_cast<std::size_t>(dq) + 1, Scalar::zero(spec));
    Scalar inv_lead = b.lead().inverse();
    for (int k = dq; k >= 0; --k) {
        Scalar c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db), Scalar::zero(spec));
    return {Poly(spec, std::move(quo)), Poly(spec, std::move(rem))};
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

Poly derivative(const Poly& f) {
    const FieldSpec& spec = f.spec();
    if (f.degree() <= 0) return Poly(spec);
    std::vector<Scalar> out;
    out.reserve(f.coeffs().size() - 1);
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
        out.push_back(f.coeffs()[k] * int_embed(static_cast<long>(k), spec));
    }
    return Poly(spec, std::move(out));
}

Poly gcd_monic(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorKind::BothZero, "gcd(0, 0)");
    Poly u = a;
    Poly v = b;
    while (!v.is_zero()) {
        Poly r = divmod(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

Poly compose(const Poly& f, const Poly& g) {
    if (!(f.spec() == g.spec())) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
    Poly acc(f.spec());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * g;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
    Poly result = divmod(Poly::one(base.spec()), m).second;
    Poly b = divmod(base, m).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = divmod(result * result, m).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
    }
    return result;
}

Poly pth_root(const Poly& f) {
    const FieldSpec& spec = f.spec();
    if (!spec.is_finite()) fail(ErrorKind::FieldMismatch, "pth_root needs a prime field");
    const auto p = static_cast<std::size_t>(spec.characteristic());
    std::vector<Scalar> out;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (k % p != 0) {
            if (!f.coeffs()[k].is_zero()) fail(ErrorKind::Internal, "pth_root of a non-p-th power");
            continue;
        }
        out.push_back(f.coeffs()[k]);  // a^(1/p) = a in F_p
    }
    return Poly(spec, std::move(out));
}

}  // namespace ah
