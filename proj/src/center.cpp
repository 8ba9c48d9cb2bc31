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

#include "ah/center.hpp"

namespace ah {

CenterDescription center(const AhContext& ctx) {
    CenterDescription out;
    const FieldSpec& spec = ctx.spec();
    out.characteristic = spec.characteristic();
    if (!spec.is_finite()) return out;
    const int p = static_cast<int>(spec.characteristic());
    Poly dp = delta_power(Poly::x(spec), p, ctx);
    auto corr = divide_exact(dp, ctx.h());
    if (!corr) fail(ErrorKind::Internal, "h does not divide delta^p(x)");
    out.x_generator = Poly::monomial(Scalar::one(spec), p);
    OreElement y = OreElement::yhat(ctx);
    out.y_generator = y.pow(static_cast<unsigned>(p)) - y.left_mul(*corr);
    out.correction = std::move(*corr);
    return out;
}

bool is_central(const OreElement& a) {
    const AhContext& ctx = a.ctx();
    return commutator(a, OreElement::x(ctx)).is_zero() &&
           commutator(a, OreElement::yhat(ctx)).is_zero();
}

CentralDecomposition central_decompose(const OreElement& a) {
    const FieldSpec& spec = a.spec();
    if (!spec.is_finite()) fail(ErrorKind::CharZero, "central decomposition needs characteristic p");
    const int p = static_cast<int>(spec.characteristic());
    CentralDecomposition out;
    out.p = spec.characteristic();
    WeylElement w = to_weyl(a);
    Poly hb = Poly::one(spec);
    for (int b = 0; b <= w.ydeg(); ++b) {
        if (b > 0) hb *= a.ctx().h();
        auto c = divide_exact(w.coeffs()[static_cast<std::size_t>(b)], hb);
        if (!c) fail(ErrorKind::Internal, "element is not in A_h");
        for (int e = 0; e <= c->degree(); ++e) {
            Scalar v = c->coeff(e);
            if (v.is_zero()) continue;
            out.table[{e % p, b % p}].insert_or_assign({e / p, b / p}, v);
        }
    }
    return out;
}

OreElement reassemble(const CentralDecomposition& d, const AhContext& ctx) {
    CenterDescription z = center(ctx);
    if (!z.y_generator) fail(ErrorKind::CharZero, "central decomposition needs characteristic p");
    const FieldSpec& spec = ctx.spec();
    const OreElement X = OreElement::from_poly(ctx, *z.x_generator);
    const OreElement& Y = *z.y_generator;
    OreElement out(ctx);
    for (const auto& [ij, coords] : d.table) {
        OreElement basis = OreElement::from_poly(ctx, Poly::monomial(Scalar::one(spec), ij.first)) *
                           product_formula_lhs(ij.second, Side::Left, ctx);
        OreElement coeff(ctx);
        for (const auto& [ab, v] : coords) {
            coeff += (X.pow(static_cast<unsigned>(ab.first)) * Y.pow(static_cast<unsigned>(ab.second))) * v;
        }
        out += coeff * basis;
    }
    return out;
}

bool centralizer_x_membership(const OreElement& a) {
    return commutator(a, OreElement::x(a.ctx())).is_zero();
}

bool centralizer_x_structural(const OreElement& a) {
    if (!a.spec().is_finite()) return a.is_poly();
    const auto p = static_cast<int>(a.spec().characteristic());
    WeylElement w = to_weyl(a);
    for (int i = 0; i <= w.ydeg(); ++i) {
        if (i % p != 0 && !w.coeffs()[static_cast<std::size_t>(i)].is_zero()) return false;
    }
    return true;
}

namespace {

bool all_divisible_by_h(const OreElement& a) {
    for (const auto& f : a.coeffs()) {
        if (!divides(a.ctx().h(), f)) return false;
    }
    return true;
}

// g with g' = f, when one exists.
std::optional<Poly> antiderivative(const Poly& f) {
    const FieldSpec& spec = f.spec();
    std::vector<Scalar> c{Scalar::zero(spec)};
    for (int j = 0; j <= f.degree(); ++j) {
        Scalar k = int_embed(j + 1, spec);
        if (k.is_zero()) {
            if (!f.coeff(j).is_zero()) return std::nullopt;
            c.push_back(Scalar::zero(spec));
            continue;
        }
        c.push_back(f.coeff(j) / k);
    }
    return Poly(spec, std::move(c));
}

std::optional<OreElement> preimage_yhat(const OreElement& a) {
    // [Y, g Y^i] = h g' Y^i
    std::vector<Poly> b;
    for (const auto& f : a.coeffs()) {
        auto q = divide_exact(f, a.ctx().h());
        if (!q) return std::nullopt;
        auto g = antiderivative(*q);
        if (!g) return std::nullopt;
        b.push_back(std::move(*g));
    }
    return OreElement(a.ctx(), std::move(b));
}

std::optional<OreElement> preimage_x(const OreElement& a) {
    // [x, g h^(i+1) y^(i+1)] = -(i+1) g h^(i+1) y^i inside A_1
    const AhContext& ctx = a.ctx();
    const FieldSpec& spec = a.spec();
    WeylElement w = to_weyl(a);
    std::vector<Poly> b{Poly(spec)};
    Poly hi = ctx.h();
    for (int i = 0; i <= w.ydeg(); ++i) {
        if (i > 0) hi *= ctx.h();
        const Poly& r = w.coeffs()[static_cast<std::size_t>(i)];
        if (r.is_zero()) {
            b.emplace_back(spec);
            continue;
        }
        Scalar k = int_embed(i + 1, spec);
        if (k.is_zero() || !divides(hi, r)) return std::nullopt;
        b.push_back(r * (-k.inverse()));
    }
    return from_weyl(WeylElement(spec, std::move(b)), ctx);
}

}  // namespace

bool in_commutator_space(const OreElement& a, CommutatorSpace space) {
    const FieldSpec& spec = a.spec();
    if (!spec.is_finite()) return all_divisible_by_h(a);
    const auto p = static_cast<int>(spec.characteristic());
    switch (space) {
        case CommutatorSpace::LieIdeal:
            fail(ErrorKind::NotImplemented, "[A_h, A_h] membership in characteristic p is not described");
        case CommutatorSpace::BracketX: {
            WeylElement w = to_weyl(a);
            Poly hi = Poly::one(spec);
            for (int i = 0; i <= w.ydeg(); ++i) {
                hi *= a.ctx().h();
                const Poly& r = w.coeffs()[static_cast<std::size_t>(i)];
                if (r.is_zero()) continue;
                if ((i + 1) % p == 0 || !divides(hi, r)) return false;
            }
            return true;
        }
        case CommutatorSpace::BracketYhat:
            for (const auto& f : a.coeffs()) {
                auto q = divide_exact(f, a.ctx().h());
                if (!q) return false;
                for (int j = p - 1; j <= q->degree(); j += p) {
                    if (!q->coeff(j).is_zero()) return false;
                }
            }
            return true;
    }
    return false;
}

std::optional<OreElement> commutator_preimage(const OreElement& a, CommutatorSpace space) {
    if (space == CommutatorSpace::BracketYhat) return preimage_yhat(a);
    if (space == CommutatorSpace::LieIdeal && a.spec().is_finite()) {
        fail(ErrorKind::NotImplemented, "[A_h, A_h] membership in characteristic p is not described");
    }
    return preimage_x(a);
}

}  // namespace ah
