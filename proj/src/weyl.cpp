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

#include "ah/weyl.hpp"

namespace ah {

WeylElement::WeylElement(OreElement e) : e_(std::move(e)) {
    if (!e_.ctx().h().is_one()) fail(ErrorKind::ContextMismatch, "not an element of A_1");
}

WeylElement to_weyl(const OreElement& a) {
    const FieldSpec& spec = a.spec();
    WeylElement yh = WeylElement::y(spec) * WeylElement::from_poly(a.ctx().h());
    WeylElement out(spec);
    WeylElement power = WeylElement::from_poly(Poly::one(spec));
    for (int i = 0; i <= a.ydeg(); ++i) {
        if (i > 0) power = power * yh;
        const Poly& f = a.coeffs()[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        out = out + WeylElement(power.base().left_mul(f));
    }
    return out;
}

OreElement product_formula_lhs(int i, Side side, const AhContext& ctx) {
    if (i < 0) fail(ErrorKind::InvalidArgument, "negative index");
    const FieldSpec& spec = ctx.spec();
    OreElement out = OreElement::one(ctx);
    const OreElement y = OreElement::yhat(ctx);
    for (int k = 0; k < i; ++k) {
        if (side == Side::Right) {
            out = out * (y + OreElement::from_poly(ctx, ctx.dh() * int_embed(k, spec)));
        } else {
            out = out * (y - OreElement::from_poly(ctx, ctx.dh() * int_embed(i - k, spec)));
        }
    }
    return out;
}

OreElement from_weyl(const WeylElement& w, const AhContext& ctx) {
    if (!(w.spec() == ctx.spec())) fail(ErrorKind::FieldMismatch, "element over another field");
    std::vector<Poly> quotients;
    Poly hi = Poly::one(ctx.spec());
    for (int i = 0; i <= w.ydeg(); ++i) {
        if (i > 0) hi *= ctx.h();
        auto q = divide_exact(w.coeffs()[static_cast<std::size_t>(i)], hi);
        if (!q) throw NotInSubalgebraError(i);
        quotients.push_back(std::move(*q));
    }
    OreElement out(ctx);
    for (int i = 0; i <= w.ydeg(); ++i) {
        const Poly& q = quotients[static_cast<std::size_t>(i)];
        if (q.is_zero()) continue;
        out += product_formula_lhs(i, Side::Left, ctx).left_mul(q);
    }
    return out;
}

OreElement embed(const OreElement& a, const Poly& f) {
    const Poly& g = a.ctx().h();
    if (f.is_zero() || !divides(f, g)) {
        fail(ErrorKind::NotDivisible, f.to_string() + " does not divide " + g.to_string());
    }
    return from_weyl(to_weyl(a), AhContext(f));
}

namespace {

OreWitness right_witness(const OreElement& a, const Poly& f) {
    const AhContext& ctx = a.ctx();
    int k = a.is_zero() ? 0 : a.ydeg();
    Poly s1 = f.pow(static_cast<unsigned long>(k) + 1);
    OreElement prod = a * OreElement::from_poly(ctx, s1);
    std::vector<Poly> c;
    for (const auto& ci : prod.coeffs()) {
        auto q = divide_exact(ci, f);
        if (!q) fail(ErrorKind::Internal, "Ore witness coefficient not divisible");
        c.push_back(std::move(*q));
    }
    return {OreElement(ctx, std::move(c)), std::move(s1)};
}

}  // namespace

OreWitness ore_witness(const OreElement& a, const Poly& f, Side side) {
    if (f.is_zero()) fail(ErrorKind::ZeroDenominator, "denominator must be nonzero");
    if (!(f.spec() == a.spec())) fail(ErrorKind::FieldMismatch, "denominator over another field");
    if (side == Side::Right) return right_witness(a, f);
    // the anti-automorphism fixes D and swaps the two conditions
    OreWitness w = right_witness(antiautomorphism(a), f);
    return {antiautomorphism(w.a1), std::move(w.s1)};
}

bool localized_equal(const OreElement& a, int m, const WeylElement& b, int n) {
    if (m < 0 || n < 0) fail(ErrorKind::InvalidArgument, "negative denominator exponent");
    const Poly& h = a.ctx().h();
    WeylElement lhs = to_weyl(a) * WeylElement::from_poly(h.pow(static_cast<unsigned long>(n)));
    WeylElement rhs = b * WeylElement::from_poly(h.pow(static_cast<unsigned long>(m)));
    return lhs == rhs;
}

WeylElement weyl_antiautomorphism(const WeylElement& w) {
    return WeylElement(antiautomorphism(w.base()));
}

}  // namespace ah
