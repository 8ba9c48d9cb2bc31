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

#include "ah/ore.hpp"

#include <ostream>
#include <sstream>

namespace ah {

AhContext::AhContext(Poly h) {
    if (h.is_zero()) fail(ErrorKind::ZeroPolynomial, "h must be nonzero");
    Poly dh = derivative(h);
    data_ = std::make_shared<const Data>(Data{std::move(h), std::move(dh)});
}

Poly delta(const Poly& f, const AhContext& ctx) {
    if (!(f.spec() == ctx.spec())) fail(ErrorKind::FieldMismatch, "polynomial from another field");
    return ctx.h() * derivative(f);
}

Poly delta_power(const Poly& f, int j, const AhContext& ctx) {
    if (j < 0) fail(ErrorKind::InvalidArgument, "negative delta power");
    Poly out = f;
    for (int k = 0; k < j && !out.is_zero(); ++k) out = delta(out, ctx);
    return out;
}

Scalar binomial(int n, int j, const FieldSpec& spec) {
    if (j < 0 || j > n) return Scalar::zero(spec);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return int_embed(c, spec);
}

OreElement::OreElement(AhContext ctx, std::vector<Poly> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& f : c_) {
        if (!(f.spec() == ctx_.spec())) fail(ErrorKind::FieldMismatch, "coefficient from another field");
    }
    trim();
}

OreElement OreElement::constant(const AhContext& ctx, const Scalar& c) {
    return from_poly(ctx, Poly::constant(c));
}

OreElement OreElement::one(const AhContext& ctx) { return constant(ctx, Scalar::one(ctx.spec())); }

OreElement OreElement::x(const AhContext& ctx) { return from_poly(ctx, Poly::x(ctx.spec())); }

OreElement OreElement::yhat(const AhContext& ctx) { return monomial(ctx, Poly::one(ctx.spec()), 1); }

OreElement OreElement::from_poly(const AhContext& ctx, const Poly& f) { return monomial(ctx, f, 0); }

OreElement OreElement::monomial(const AhContext& ctx, const Poly& f, int i) {
    std::vector<Poly> c(static_cast<std::size_t>(i), Poly(ctx.spec()));
    c.push_back(f);
    return OreElement(ctx, std::move(c));
}

void OreElement::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void OreElement::check_same(const OreElement& other) const {
    if (!(ctx_ == other.ctx_)) fail(ErrorKind::ContextMismatch, "elements of different algebras");
}

Poly OreElement::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Poly(spec());
    return c_[static_cast<std::size_t>(i)];
}

OreElement OreElement::operator-() const {
    OreElement out(*this);
    for (auto& f : out.c_) f = -f;
    return out;
}

OreElement& OreElement::operator+=(const OreElement& rhs) {
    check_same(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Poly(spec()));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

OreElement& OreElement::operator-=(const OreElement& rhs) {
    check_same(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Poly(spec()));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

OreElement& OreElement::operator*=(const OreElement& rhs) { return *this = *this * rhs; }

OreElement& OreElement::operator*=(const Scalar& rhs) {
    for (auto& f : c_) f *= rhs;
    trim();
    return *this;
}

// Y^i g = sum_k C(i,k) delta^k(g) Y^(i-k)
OreElement operator*(const OreElement& a, const OreElement& b) {
    a.check_same(b);
    const AhContext& ctx = a.ctx_;
    const FieldSpec& spec = ctx.spec();
    if (a.is_zero() || b.is_zero()) return OreElement(ctx);
    const int n = a.ydeg();
    const int m = b.ydeg();
    std::vector<Poly> out(static_cast<std::size_t>(n + m + 1), Poly(spec));
    for (int j = 0; j <= m; ++j) {
        const Poly& g = b.c_[static_cast<std::size_t>(j)];
        if (g.is_zero()) continue;
        std::vector<Poly> dg{g};
        for (int k = 1; k <= n; ++k) dg.push_back(delta(dg.back(), ctx));
        for (int i = 0; i <= n; ++i) {
            const Poly& f = a.c_[static_cast<std::size_t>(i)];
            if (f.is_zero()) continue;
            for (int k = 0; k <= i; ++k) {
                const Poly& d = dg[static_cast<std::size_t>(k)];
                if (d.is_zero()) break;
                Scalar c = binomial(i, k, spec);
                if (c.is_zero()) continue;
                out[static_cast<std::size_t>(i - k + j)] += (f * d) * c;
            }
        }
    }
    return OreElement(ctx, std::move(out));
}

OreElement OreElement::left_mul(const Poly& f) const {
    OreElement out(*this);
    for (auto& c : out.c_) c = f * c;
    out.trim();
    return out;
}

OreElement OreElement::pow(unsigned e) const {
    OreElement result = one(ctx_);
    OreElement base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string OreElement::to_string(const std::string& gen) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = ydeg(); i >= 0; --i) {
        const Poly& f = c_[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        std::string g = i == 0 ? "" : (i == 1 ? gen : gen + "^" + std::to_string(i));
        std::string s = f.to_string();
        int terms = 0;
        for (const auto& c : f.coeffs()) terms += c.is_zero() ? 0 : 1;
        std::string body;
        bool negative = false;
        if (terms > 1) {
            if (i == 0) {
                negative = s[0] == '-';
                body = negative ? s.substr(1) : s;
            } else {
                body = "(" + s + ")*" + g;
            }
        } else {
            negative = s[0] == '-';
            std::string mag = negative ? s.substr(1) : s;
            if (i == 0) {
                body = mag;
            } else {
                body = mag == "1" ? g : mag + "*" + g;
            }
        }
        if (first) {
            os << (negative ? "-" : "") << body;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const OreElement& a) { return os << a.to_string(); }

OreElement mul(const OreElement& a, const OreElement& b) { return a * b; }

OreElement commutator(const OreElement& a, const OreElement& b) { return a * b - b * a; }

namespace {

OreElement eval_poly_at(const Poly& f, const OreElement& at) {
    OreElement acc(at.ctx());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * at;
        acc += OreElement::constant(at.ctx(), *it);
    }
    return acc;
}

}  // namespace

OreElement apply_poly_map(const OreElement& a, const OreElement& image_x, const OreElement& image_y) {
    if (!(a.ctx() == image_x.ctx()) || !(a.ctx() == image_y.ctx())) {
        fail(ErrorKind::ContextMismatch, "images live in another algebra");
    }
    OreElement out(a.ctx());
    OreElement ypow = OreElement::one(a.ctx());
    for (int i = 0; i <= a.ydeg(); ++i) {
        if (i > 0) ypow = ypow * image_y;
        const Poly& f = a.coeffs()[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        out += eval_poly_at(f, image_x) * ypow;
    }
    return out;
}

OreElement antiautomorphism(const OreElement& a) {
    const AhContext& ctx = a.ctx();
    OreElement theta_y = OreElement::from_poly(ctx, ctx.dh()) - OreElement::yhat(ctx);
    OreElement out(ctx);
    OreElement ypow = OreElement::one(ctx);
    for (int i = 0; i <= a.ydeg(); ++i) {
        if (i > 0) ypow = ypow * theta_y;
        const Poly& f = a.coeffs()[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        out += ypow * OreElement::from_poly(ctx, f);
    }
    return out;
}

}  // namespace ah
