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

#ifndef AH_ORE_HPP
#define AH_ORE_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "ah/poly.hpp"

namespace ah {

/// The algebra A_h = F<x, Y> with Yx - xY = h(x). Cheap to copy; two contexts
/// are compatible when they have the same field and the same h.
class AhContext {
public:
    /// Throws ZeroPolynomial for h = 0.
    explicit AhContext(Poly h);

    /// The Weyl algebra A_1, i.e. h = 1.
    static AhContext weyl(FieldSpec spec) { return AhContext(Poly::one(spec)); }

    const FieldSpec& spec() const noexcept { return data_->h.spec(); }
    const Poly& h() const noexcept { return data_->h; }
    const Poly& dh() const noexcept { return data_->dh; }
    int deg_h() const noexcept { return data_->h.degree(); }

    friend bool operator==(const AhContext& a, const AhContext& b) {
        return a.data_ == b.data_ || a.data_->h == b.data_->h;
    }

private:
    struct Data {
        Poly h;
        Poly dh;
    };
    std::shared_ptr<const Data> data_;
};

/// h * f'
Poly delta(const Poly& f, const AhContext& ctx);
/// delta applied j times; j = 0 gives f.
Poly delta_power(const Poly& f, int j, const AhContext& ctx);

/// Element sum_i f_i(x) Y^i of A_h, coefficients on the left.
class OreElement {
public:
    explicit OreElement(AhContext ctx) : ctx_(std::move(ctx)) {}
    OreElement(AhContext ctx, std::vector<Poly> coeffs);

    static OreElement zero(const AhContext& ctx) { return OreElement(ctx); }
    static OreElement constant(const AhContext& ctx, const Scalar& c);
    static OreElement one(const AhContext& ctx);
    static OreElement x(const AhContext& ctx);
    static OreElement yhat(const AhContext& ctx);
    static OreElement from_poly(const AhContext& ctx, const Poly& f);
    /// f * Y^i
    static OreElement monomial(const AhContext& ctx, const Poly& f, int i);

    const AhContext& ctx() const noexcept { return ctx_; }
    const FieldSpec& spec() const noexcept { return ctx_.spec(); }
    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    /// Coefficient of Y^i, zero outside the stored range.
    Poly coeff(int i) const;
    /// kNegInfinity for 0.
    int ydeg() const noexcept { return c_.empty() ? kNegInfinity : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// True when the element lies in D = F[x].
    bool is_poly() const noexcept { return c_.size() <= 1; }

    OreElement operator-() const;
    OreElement& operator+=(const OreElement& rhs);
    OreElement& operator-=(const OreElement& rhs);
    OreElement& operator*=(const OreElement& rhs);
    OreElement& operator*=(const Scalar& rhs);

    friend OreElement operator+(OreElement a, const OreElement& b) { return a += b; }
    friend OreElement operator-(OreElement a, const OreElement& b) { return a -= b; }
    friend OreElement operator*(const OreElement& a, const OreElement& b);
    friend OreElement operator*(OreElement a, const Scalar& s) { return a *= s; }
    friend OreElement operator*(const Scalar& s, OreElement a) { return a *= s; }
    friend bool operator==(const OreElement& a, const OreElement& b) {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }

    /// Left multiplication by a polynomial; stays in normal form.
    OreElement left_mul(const Poly& f) const;
    OreElement pow(unsigned e) const;

    /// Normal form text, e.g. "(x^2 + 1)*Y^2 + 2*x*Y + 3".
    std::string to_string(const std::string& gen = "Y") const;

private:
    void trim();
    void check_same(const OreElement& other) const;

    AhContext ctx_;
    std::vector<Poly> c_;
};

std::ostream& operator<<(std::ostream& os, const OreElement& a);

OreElement mul(const OreElement& a, const OreElement& b);
/// ab - ba
OreElement commutator(const OreElement& a, const OreElement& b);

/// sum_i f_i(P) Q^i, multiplied in that order.
OreElement apply_poly_map(const OreElement& a, const OreElement& image_x, const OreElement& image_y);

/// The anti-automorphism fixing x with Y -> -Y + h'. Reverses products.
OreElement antiautomorphism(const OreElement& a);

/// C(n, j) in Z, embedded into the field.
Scalar binomial(int n, int j, const FieldSpec& spec);

}  // namespace ah

#endif  // AH_ORE_HPP
