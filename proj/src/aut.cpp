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

#include "ah/aut.hpp"

#include <algorithm>
#include <numeric>

#include "ah/center.hpp"
#include "ah/factor.hpp"
#include "ah/linear.hpp"
#include "ah/weyl.hpp"

namespace ah {

namespace {

// Above this size the F_p grid search gives way to elimination when possible.
constexpr std::uint64_t kExhaustiveLimit = 2000;

void require_nonconstant(const AhContext& ctx) {
    if (ctx.deg_h() < 1) fail(ErrorKind::ConstantH, "h must have degree at least 1");
}

void sort_pairs(std::vector<AffinePair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const AffinePair& a, const AffinePair& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
}

// lambda when h = gamma (x - lambda)^n
std::optional<Scalar> single_root(const Poly& h) {
    Poly rad = squarefree_part(h);
    if (rad.degree() != 1) return std::nullopt;
    return -rad.coeff(0);
}

std::vector<AffinePair> family_members(const FieldSpec& spec, const Scalar& lambda) {
    std::vector<AffinePair> out;
    for (const auto& a : enumerate_units(spec)) out.emplace_back(a, (Scalar::one(spec) - a) * lambda);
    sort_pairs(out);
    return out;
}

Scalar power_of(const Scalar& a, int e) { return a.pow(static_cast<long>(e)); }

}  // namespace

bool in_P(const Poly& h, const Scalar& alpha, const Scalar& beta) {
    if (alpha.is_zero()) return false;
    return compose(h, Poly::affine(alpha, beta)) == h * power_of(alpha, h.degree());
}

std::vector<Scalar> compute_G(const AhContext& ctx) {
    require_nonconstant(ctx);
    const FieldSpec& spec = ctx.spec();
    if (!spec.is_finite()) return {Scalar::zero(spec)};
    std::vector<Scalar> out;
    for (const auto& nu : enumerate(spec)) {
        if (compose(ctx.h(), Poly::affine(Scalar::one(spec), nu)) == ctx.h()) out.push_back(nu);
    }
    return out;
}

PSet compute_P_exhaustive(const AhContext& ctx) {
    require_nonconstant(ctx);
    const FieldSpec& spec = ctx.spec();
    if (!spec.is_finite()) fail(ErrorKind::InfiniteField, "exhaustive search needs a finite field");
    PSet out;
    for (const auto& a : enumerate_units(spec)) {
        for (const auto& b : enumerate(spec)) {
            if (in_P(ctx.h(), a, b)) out.pairs.emplace_back(a, b);
        }
    }
    sort_pairs(out.pairs);
    if (auto lambda = single_root(ctx.h())) {
        out.shape = PSet::Shape::OneParameterFamily;
        out.lambda = lambda;
    }
    return out;
}

PSet compute_P_elimination(const AhContext& ctx) {
    require_nonconstant(ctx);
    const FieldSpec& spec = ctx.spec();
    const Poly& h = ctx.h();
    const int n = h.degree();
    Scalar na = int_embed(n, spec) * h.lead();
    if (na.is_zero()) fail(ErrorKind::InvalidArgument, "elimination needs n * lead(h) != 0");
    // beta = (alpha - 1) c kills the x^(n-1) coefficient of h(w - c)
    Scalar c = h.coeff(n - 1) / na;
    Poly H = compose(h, Poly::affine(Scalar::one(spec), -c));
    PSet out;
    std::optional<Poly> conditions;
    for (int k = 0; k < n; ++k) {
        if (H.coeff(k).is_zero()) continue;
        // b_k alpha^k = alpha^n b_k
        Poly cond = Poly::monomial(Scalar::one(spec), n - k) - Poly::one(spec);
        conditions = conditions ? gcd_monic(*conditions, cond) : cond;
    }
    if (!conditions) {
        out.shape = PSet::Shape::OneParameterFamily;
        out.lambda = -c;
        if (spec.is_finite()) out.pairs = family_members(spec, -c);
        return out;
    }
    for (const auto& a : roots_in_field(*conditions)) {
        Scalar b = (a - Scalar::one(spec)) * c;
        if (!in_P(h, a, b)) fail(ErrorKind::Internal, "eliminated pair fails the defining identity");
        out.pairs.emplace_back(a, b);
    }
    sort_pairs(out.pairs);
    return out;
}

PSet compute_P(const AhContext& ctx) {
    require_nonconstant(ctx);
    const FieldSpec& spec = ctx.spec();
    if (!spec.is_finite()) return compute_P_elimination(ctx);
    bool eliminable = !(int_embed(ctx.deg_h(), spec) * ctx.h().lead()).is_zero();
    if (spec.size() > kExhaustiveLimit && eliminable) return compute_P_elimination(ctx);
    return compute_P_exhaustive(ctx);
}

std::string_view to_string(AutCase c) noexcept {
    switch (c) {
        case AutCase::PolyOnly: return "PolyOnly";
        case AutCase::SemidirectG: return "SemidirectG";
        case AutCase::SemidirectFstar: return "SemidirectFstar";
        case AutCase::SemidirectFinite: return "SemidirectFinite";
    }
    return "Unknown";
}

namespace {

// prod over G of (x + shift + nu)^e
Poly orbit_product(const FieldSpec& spec, const std::vector<Scalar>& G, const Scalar& shift, unsigned long e) {
    Poly out = Poly::one(spec);
    for (const auto& nu : G) out *= Poly::affine(Scalar::one(spec), shift + nu).pow(e);
    return out;
}

// All pairs the laws are checked against; a sample when the family is infinite.
std::vector<AffinePair> law_pairs(const AutGroupStructure& s, const FieldSpec& spec) {
    if (!s.P.pairs.empty() || !s.lambda) return s.P.pairs;
    std::vector<AffinePair> out;
    for (long num : {2L, -1L, 3L, -5L}) {
        for (long den : {1L, 2L}) {
            Scalar a(spec, mpq_class(num, den));
            out.emplace_back(a, (Scalar::one(spec) - a) * *s.lambda);
        }
    }
    return out;
}

void assert_laws(const AutGroupStructure& s, const AhContext& ctx) {
    const int d = ctx.deg_h();
    for (const auto& [a, b] : law_pairs(s, ctx.spec())) {
        Poly affine = Poly::affine(a, b);
        if (s.invariants.kind == Invariants::Kind::Generated && !(compose(s.invariants.t, affine) == s.invariants.t)) {
            fail(ErrorKind::Internal, "invariant t is not fixed by (" + a.to_string() + ", " + b.to_string() + ")");
        }
        if (!(compose(s.q, affine) == s.q * power_of(a, d - 1))) {
            fail(ErrorKind::Internal, "q violates its transformation law");
        }
    }
}

}  // namespace

AutGroupStructure classify_aut_group(const AhContext& ctx) {
    require_nonconstant(ctx);
    const FieldSpec& spec = ctx.spec();
    const int d = ctx.deg_h();
    AutGroupStructure s;
    s.P = compute_P(ctx);
    s.G = compute_G(ctx);
    s.k = distinct_root_count(ctx.h());
    const auto gsize = static_cast<std::uint64_t>(s.G.size());

    if (s.P.shape == PSet::Shape::OneParameterFamily && !spec.is_finite()) {
        s.kind = AutCase::SemidirectFstar;
        s.lambda = s.P.lambda;
        s.ell = 0;
        s.invariants = {Invariants::Kind::ConstantsOnly, Poly::one(spec)};
        s.q_exponent = d - 1;
        s.q = Poly::affine(Scalar::one(spec), -*s.lambda).pow(static_cast<unsigned long>(d - 1));
        assert_laws(s, ctx);
        return s;
    }

    std::optional<AffinePair> gen;
    std::uint64_t ell = 1;
    for (const auto& pr : s.P.pairs) {
        std::uint64_t ord = pr.first.multiplicative_order();
        if (ord > ell) {
            ell = ord;
            gen = pr;
        }
    }
    if (!gen) {
        s.kind = gsize == 1 ? AutCase::PolyOnly : AutCase::SemidirectG;
        s.q = Poly::one(spec);
        if (gsize == 1) {
            s.invariants = {Invariants::Kind::WholeD, Poly::x(spec)};
        } else {
            s.invariants = {Invariants::Kind::Generated, orbit_product(spec, s.G, Scalar::zero(spec), 1)};
        }
        assert_laws(s, ctx);
        return s;
    }

    s.kind = s.P.shape == PSet::Shape::OneParameterFamily ? AutCase::SemidirectFstar : AutCase::SemidirectFinite;
    if (s.kind == AutCase::SemidirectFstar) s.lambda = s.P.lambda;
    s.generator = gen;
    s.ell = ell;
    const auto k = static_cast<std::uint64_t>(s.k);
    if (k % ell != 0 && (k - 1) % ell != 0) fail(ErrorKind::Internal, "generator order divides neither k nor k - 1");
    if (gsize > 1 && (gsize - 1) % ell != 0) fail(ErrorKind::Internal, "ell does not divide |G| - 1");
    const auto& [a, b] = *gen;
    Scalar shift = b / (a - Scalar::one(spec));
    s.invariants = {Invariants::Kind::Generated, orbit_product(spec, s.G, shift, ell)};
    // m |G| = deg h - 1 mod ell
    const auto target = static_cast<std::uint64_t>(d - 1) % ell;
    int m = -1;
    for (std::uint64_t cand = 0; cand < ell; ++cand) {
        if ((cand * gsize) % ell == target) {
            m = static_cast<int>(cand);
            break;
        }
    }
    if (m < 0) fail(ErrorKind::Internal, "|G| is not invertible modulo ell");
    s.q_exponent = m;
    s.q = orbit_product(spec, s.G, shift, static_cast<unsigned long>(m));
    assert_laws(s, ctx);
    return s;
}

Invariants invariant_ring(const AhContext& ctx) { return classify_aut_group(ctx).invariants; }

std::pair<Poly, Invariants> aut_center(const AhContext& ctx) {
    AutGroupStructure s = classify_aut_group(ctx);
    return {s.q, s.invariants};
}

// ---- automorphisms ----

Automorphism::Automorphism(AhContext ctx, Scalar alpha, Scalar beta, Poly f)
    : ctx_(std::move(ctx)), alpha_(std::move(alpha)), beta_(std::move(beta)), f_(std::move(f)) {
    require_nonconstant(ctx_);
    if (!(alpha_.spec() == ctx_.spec()) || !(beta_.spec() == ctx_.spec()) || !(f_.spec() == ctx_.spec())) {
        fail(ErrorKind::FieldMismatch, "automorphism data over another field");
    }
    if (!in_P(ctx_.h(), alpha_, beta_)) {
        fail(ErrorKind::InvalidPair,
             "(" + alpha_.to_string() + ", " + beta_.to_string() + ") does not satisfy h(ax + b) = a^deg(h) h");
    }
}

Automorphism Automorphism::identity(const AhContext& ctx) {
    const FieldSpec& spec = ctx.spec();
    return Automorphism(ctx, Scalar::one(spec), Scalar::zero(spec), Poly(spec));
}

OreElement Automorphism::image_x() const {
    return OreElement::from_poly(ctx_, Poly::affine(alpha_, beta_));
}

OreElement Automorphism::image_y() const {
    return OreElement::yhat(ctx_) * power_of(alpha_, ctx_.deg_h() - 1) + OreElement::from_poly(ctx_, f_);
}

OreElement Automorphism::apply(const OreElement& a) const {
    if (!(a.ctx() == ctx_)) fail(ErrorKind::ContextMismatch, "element of another algebra");
    return apply_poly_map(a, image_x(), image_y());
}

std::string Automorphism::to_string() const {
    return "x -> " + Poly::affine(alpha_, beta_).to_string() + ", Y -> " + image_y().to_string();
}

Automorphism compose(const Automorphism& w1, const Automorphism& w2) {
    if (!(w1.ctx() == w2.ctx())) fail(ErrorKind::ContextMismatch, "automorphisms of different algebras");
    const int d = w1.ctx().deg_h();
    Scalar a = w1.alpha() * w2.alpha();
    Scalar b = w2.alpha() * w1.beta() + w2.beta();
    Poly f = w1.f() * power_of(w2.alpha(), d - 1) + compose(w2.f(), Poly::affine(w1.alpha(), w1.beta()));
    return Automorphism(w1.ctx(), a, b, f);
}

Automorphism invert(const Automorphism& w) {
    const int d = w.ctx().deg_h();
    Scalar ia = w.alpha().inverse();
    Scalar ib = -w.beta() * ia;
    Poly f = -(compose(w.f(), Poly::affine(ia, ib)) * power_of(w.alpha(), 1 - d));
    return Automorphism(w.ctx(), ia, ib, f);
}

// ---- isomorphism ----

namespace {

std::optional<std::tuple<Scalar, Scalar, Scalar>> witness_if(const Poly& h, const Poly& g, const Scalar& a,
                                                             const Scalar& b) {
    Poly H = compose(h, Poly::affine(a, b));
    Scalar nu = H.lead() / g.lead();
    if (!(g * nu == H)) return std::nullopt;
    return std::make_tuple(a, b, nu);
}

}  // namespace

std::optional<std::tuple<Scalar, Scalar, Scalar>> iso_test(const Poly& h, const Poly& g) {
    if (h.is_zero() || g.is_zero()) fail(ErrorKind::ZeroPolynomial, "isomorphism test needs nonzero h and g");
    if (!(h.spec() == g.spec())) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
    if (h.degree() != g.degree()) return std::nullopt;
    const FieldSpec& spec = h.spec();
    const Scalar one = Scalar::one(spec);
    const int n = h.degree();
    if (n == 0) return std::make_tuple(one, Scalar::zero(spec), h.lead() / g.lead());
    if (spec.is_finite()) {
        for (const auto& a : enumerate_units(spec)) {
            for (const auto& b : enumerate(spec)) {
                if (auto w = witness_if(h, g, a, b)) return w;
            }
        }
        return std::nullopt;
    }
    const Scalar nn = int_embed(n, spec);
    Scalar ch = h.coeff(n - 1) / (nn * h.lead());
    Scalar cg = g.coeff(n - 1) / (nn * g.lead());
    Poly Hd = compose(h, Poly::affine(one, -ch));
    Poly Gd = compose(g, Poly::affine(one, -cg));
    // b_k alpha^k = nu g_k with nu = b_n alpha^n / g_n
    std::optional<Poly> conditions;
    for (int k = 0; k < n; ++k) {
        const Scalar& bk = Hd.coeff(k);
        const Scalar& gk = Gd.coeff(k);
        if (bk.is_zero() != gk.is_zero()) return std::nullopt;
        if (bk.is_zero()) continue;
        Scalar rhs = bk * Gd.lead() / (Hd.lead() * gk);
        Poly cond = Poly::monomial(one, n - k) - Poly::constant(rhs);
        conditions = conditions ? gcd_monic(*conditions, cond) : cond;
    }
    std::vector<Scalar> alphas = conditions ? roots_in_field(*conditions) : std::vector<Scalar>{one};
    for (const auto& a : alphas) {
        if (a.is_zero()) continue;
        if (auto w = witness_if(h, g, a, a * cg - ch)) return w;
    }
    return std::nullopt;
}

// ---- endomorphisms ----

OreElement Endomorphism::apply(const OreElement& a) const {
    if (!(a.ctx() == ctx)) fail(ErrorKind::ContextMismatch, "element of another algebra");
    return apply_poly_map(a, image_x, image_y);
}

namespace {

void probe_surjectivity(Endomorphism& e, int bound) {
    const AhContext& ctx = e.ctx;
    std::vector<OreElement> images;
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; i + j <= bound; ++j) {
            images.push_back(e.apply(OreElement::monomial(ctx, Poly::monomial(Scalar::one(ctx.spec()), i), j)));
        }
    }
    e.probe_bound = bound;
    e.surjective_probe = solve_span(images, OreElement::x(ctx)).has_value() &&
                         solve_span(images, OreElement::yhat(ctx)).has_value();
}

void check_relation(const Endomorphism& e) {
    OreElement lhs = commutator(e.image_y, e.image_x);
    OreElement rhs = e.apply(OreElement::from_poly(e.ctx, e.ctx.h()));
    if (!(lhs == rhs)) fail(ErrorKind::Internal, "substitution does not respect Yx - xY = h");
}

}  // namespace

Endomorphism eta_endo(long k, const AhContext& ctx) {
    const FieldSpec& spec = ctx.spec();
    const Poly& h = ctx.h();
    const int n = h.degree();
    if (n < 1 || !(h == Poly::monomial(h.lead(), n))) fail(ErrorKind::WrongH, "eta needs h = c x^n with n >= 1");
    if (k < 1) fail(ErrorKind::InvalidArgument, "eta needs k >= 1");
    Scalar kk = int_embed(k, spec);
    if (kk.is_zero()) fail(ErrorKind::PDividesK, "p divides k");
    const int e = static_cast<int>((k - 1) * (n - 1));
    Endomorphism out{ctx, OreElement::from_poly(ctx, Poly::monomial(Scalar::one(spec), static_cast<int>(k))),
                     OreElement::monomial(ctx, Poly::monomial(kk.inverse(), e), 1)};
    check_relation(out);
    probe_surjectivity(out, 4);
    return out;
}

Endomorphism kappa_endo(const OreElement& c) {
    const AhContext& ctx = c.ctx();
    if (!ctx.spec().is_finite()) fail(ErrorKind::CharZeroKappa, "kappa needs characteristic p");
    if (!centralizer_x_membership(c)) fail(ErrorKind::NotInCentralizer, c.to_string() + " does not commute with x");
    Endomorphism out{ctx, OreElement::x(ctx), OreElement::yhat(ctx) + c};
    check_relation(out);
    int bound = 4;
    if (c.is_poly() && !c.is_zero()) bound = std::max(bound, c.coeff(0).degree() + 1);
    probe_surjectivity(out, bound);
    return out;
}

// ---- extension and restriction along A_g -> A_f ----

std::optional<Automorphism> extend_automorphism(const Automorphism& w, const Poly& f) {
    const Poly& g = w.ctx().h();
    if (f.is_zero() || !divides(f, g)) fail(ErrorKind::NotDivisible, f.to_string() + " does not divide " + g.to_string());
    if (f.degree() < 1) fail(ErrorKind::ConstantH, "the target algebra needs deg f >= 1");
    if (!in_P(f, w.alpha(), w.beta())) return std::nullopt;
    Poly r = *divide_exact(g, f);
    auto s = divide_exact(w.f(), r);
    if (!s) return std::nullopt;
    AhContext fctx(f);
    Automorphism out(fctx, w.alpha(), w.beta(), *s * power_of(w.alpha(), -r.degree()));
    if (!(embed(w.image_y(), f) == out.apply(embed(OreElement::yhat(w.ctx()), f)))) {
        fail(ErrorKind::Internal, "extension does not agree on the generator");
    }
    return out;
}

std::optional<Automorphism> restrict_automorphism(const Automorphism& psi, const Poly& g) {
    const Poly& f = psi.ctx().h();
    if (g.is_zero() || !divides(f, g)) fail(ErrorKind::NotDivisible, f.to_string() + " does not divide " + g.to_string());
    if (!in_P(g, psi.alpha(), psi.beta())) return std::nullopt;
    Poly r = *divide_exact(g, f);
    AhContext gctx(g);
    Automorphism out(gctx, psi.alpha(), psi.beta(), r * psi.f() * power_of(psi.alpha(), r.degree()));
    if (!(embed(out.image_y(), f) == psi.apply(embed(OreElement::yhat(gctx), f)))) {
        fail(ErrorKind::Internal, "restriction does not agree on the generator");
    }
    return out;
}

}  // namespace ah
