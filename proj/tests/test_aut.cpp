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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ah/factor.hpp"
#include "ah/parse.hpp"
#include "oracles.hpp"

using namespace ah;
using oracle::GF;
using oracle::QQ;

namespace {

AhContext ctx_of(const char* h, FieldSpec spec = QQ()) { return AhContext(parse_poly(h, spec)); }
OreElement E(const char* s, const AhContext& ctx) { return parse_element(s, ctx); }
Scalar S(long n, FieldSpec spec = QQ()) { return int_embed(n, spec); }
Scalar S(long n, long d) { return Scalar(QQ(), mpq_class(n, d)); }

std::vector<AffinePair> pairs_of(const char* h, FieldSpec spec = QQ()) { return compute_P(ctx_of(h, spec)).pairs; }

// the relation [Y, x] = h survives the automorphism
bool preserves_relation(const Automorphism& w) {
    const AhContext& c = w.ctx();
    OreElement hx = apply_poly_map(OreElement::from_poly(c, c.h()), w.image_x(), w.image_y());
    return commutator(w.image_y(), w.image_x()) == hx;
}

// monic polynomials of the given degree with zero constant term
std::vector<Poly> monic_no_constant(const FieldSpec& spec, int d) {
    std::vector<Poly> out;
    std::uint64_t p = spec.characteristic();
    std::uint64_t count = 1;
    for (int i = 1; i < d; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
        std::vector<Scalar> c{Scalar::zero(spec)};
        std::uint64_t v = m;
        for (int i = 1; i < d; ++i, v /= p) c.push_back(Scalar(spec, static_cast<long>(v % p)));
        c.push_back(Scalar::one(spec));
        out.emplace_back(spec, c);
    }
    return out;
}

}  // namespace

TEST_CASE("translation group G") {
    CHECK(compute_G(ctx_of("x^3 - x")) == std::vector<Scalar>{S(0)});
    for (std::uint64_t p : {2u, 3u, 5u}) {
        Poly h = Poly::monomial(Scalar::one(GF(p)), static_cast<int>(p)) - Poly::x(GF(p));
        CHECK(compute_G(AhContext(h)).size() == p);
    }
    CHECK(compute_G(ctx_of("x^2", GF(3))) == std::vector<Scalar>{S(0, GF(3))});
}

TEST_CASE("P for quadratics with distinct roots") {
    for (auto [z1, z0] : std::vector<std::pair<long, long>>{{1, 0}, {3, 2}, {0, -2}, {0, 1}, {-1, 1}, {5, -7}}) {
        Poly h(QQ(), {z0, -z1, 1});
        PSet P = compute_P(AhContext(h));
        CHECK(P.shape == PSet::Shape::Finite);
        std::vector<AffinePair> expect{{S(-1), S(z1)}, {S(1), S(0)}};
        CHECK(P.pairs == expect);
    }
}

TEST_CASE("P examples") {
    CHECK(pairs_of("x^2*(x-1)") == std::vector<AffinePair>{{S(1), S(0)}});
    for (int n = 1; n <= 5; ++n) {
        PSet P = compute_P(AhContext(Poly::monomial(S(1), n)));
        CHECK(P.shape == PSet::Shape::OneParameterFamily);
        CHECK(P.lambda->is_zero());
    }
    PSet shifted = compute_P(ctx_of("(x-2)^3"));
    CHECK(shifted.shape == PSet::Shape::OneParameterFamily);
    CHECK(*shifted.lambda == S(2));
}

TEST_CASE("elimination agrees with exhaustive search") {
    std::mt19937_64 rng(31);
    for (std::uint64_t p : {5u, 7u}) {
        int done = 0;
        while (done < 40) {
            Poly h = oracle::random_poly(rng, GF(p), 4);
            int n = h.degree();
            if (n < 1 || int_embed(n, GF(p)).is_zero()) continue;
            AhContext c(h);
            PSet a = compute_P_exhaustive(c);
            PSet b = compute_P_elimination(c);
            CHECK(a.pairs == b.pairs);
            for (const auto& [al, be] : a.pairs) CHECK(in_P(h, al, be));
            ++done;
        }
    }
}

TEST_CASE("classification examples") {
    AutGroupStructure a = classify_aut_group(ctx_of("x^2*(x-1)"));
    CHECK(a.kind == AutCase::PolyOnly);
    CHECK(a.invariants.kind == Invariants::Kind::WholeD);
    CHECK(a.q.is_one());

    AutGroupStructure b = classify_aut_group(ctx_of("x^2 - x"));
    CHECK(b.kind == AutCase::SemidirectFinite);
    REQUIRE(b.generator);
    CHECK(*b.generator == AffinePair{S(-1), S(1)});
    CHECK(b.ell == 2);
    CHECK(b.k == 2);
    CHECK(b.k % b.ell == 0);

    AutGroupStructure c = classify_aut_group(ctx_of("x^3"));
    CHECK(c.kind == AutCase::SemidirectFstar);
    CHECK(c.lambda->is_zero());
    CHECK(c.invariants.kind == Invariants::Kind::ConstantsOnly);
    CHECK(c.q == parse_poly("x^2", QQ()));

    AutGroupStructure d = classify_aut_group(ctx_of("x^3 - x", GF(3)));
    CHECK(d.G.size() == 3);
    CHECK(d.invariants.kind == Invariants::Kind::Generated);

    // tau_P = tau_{1,G}
    AutGroupStructure e = classify_aut_group(ctx_of("x^3 - x + 1", GF(3)));
    CHECK(e.kind == AutCase::SemidirectG);
    CHECK(e.invariants.t == parse_poly("x^3 - x", GF(3)));
}

TEST_CASE("center of the automorphism group for monomials") {
    for (int n = 1; n <= 5; ++n) {
        auto [q, inv] = aut_center(AhContext(Poly::monomial(S(1), n)));
        CHECK(q == Poly::monomial(S(1), n - 1));
        CHECK(inv.kind == Invariants::Kind::ConstantsOnly);
    }
    for (std::uint64_t p : {3u, 5u, 7u}) {
        for (int n = 1; n <= 6; ++n) {
            AhContext c(Poly::monomial(Scalar::one(GF(p)), n));
            auto [q, inv] = aut_center(c);
            int ell = static_cast<int>(p - 1);
            int m = (n - 1) % ell;
            CHECK(q == Poly::monomial(Scalar::one(GF(p)), m));
        }
    }
}

TEST_CASE("invariance laws over a case matrix") {
    std::vector<std::pair<const char*, FieldSpec>> cases{
        {"x^2*(x-1)", QQ()},  {"x^2 - x", QQ()},     {"x^3", QQ()},         {"x^4 - 1", QQ()},
        {"(x-1)^2*(x+1)^2", QQ()}, {"x^3 - x", GF(3)}, {"x^3", GF(5)},      {"x^2 - 1", GF(5)},
        {"x^4 + 1", GF(5)},   {"x^5 - x", GF(5)},    {"x^3 - x + 1", GF(3)}, {"x^2", GF(7)},
    };
    for (const auto& [hs, spec] : cases) {
        AhContext c(parse_poly(hs, spec));
        AutGroupStructure s = classify_aut_group(c);
        int d = c.deg_h();
        std::vector<AffinePair> checks = s.P.pairs;
        if (s.P.shape == PSet::Shape::OneParameterFamily && !spec.is_finite()) {
            for (long a : {2L, -3L, 5L}) checks.push_back({S(a), (S(1) - S(a)) * *s.P.lambda});
            checks.push_back({S(1, 2), S(1, 2) * *s.P.lambda});
        }
        for (const auto& [al, be] : checks) {
            if (s.invariants.kind != Invariants::Kind::ConstantsOnly) {
                CHECK_MESSAGE(oracle::invariant_under(s.invariants.t, al, be), hs);
            }
            CHECK_MESSAGE(oracle::center_law(s.q, al, be, d), hs);
            if (s.invariants.kind != Invariants::Kind::ConstantsOnly) {
                CHECK(oracle::center_law(s.q * s.invariants.t, al, be, d));
            }
        }
        if (!(s.G.size() == 1 && s.G[0].is_zero()) && s.ell > 0) {
            CHECK((s.G.size() - 1) % s.ell == 0);
        }
    }
}

TEST_CASE("invariant generators are minimal") {
    std::vector<std::pair<const char*, std::uint64_t>> cases{
        {"x^3 - x", 3}, {"x^3", 5}, {"x^2 - 1", 5}, {"x^4 + 1", 5}, {"x^2 - x", 3}, {"x^3 - x + 1", 3}, {"x^2", 7},
    };
    for (const auto& [hs, p] : cases) {
        AhContext c(parse_poly(hs, GF(p)));
        Invariants inv = invariant_ring(c);
        if (inv.kind != Invariants::Kind::Generated) continue;
        PSet P = compute_P(c);
        for (int d = 1; d < inv.t.degree(); ++d) {
            for (const Poly& s : monic_no_constant(GF(p), d)) {
                bool fixed = true;
                for (const auto& [al, be] : P.pairs) fixed = fixed && oracle::invariant_under(s, al, be);
                CHECK_FALSE_MESSAGE(fixed, hs, " ", s.to_string());
            }
        }
    }
}

TEST_CASE("automorphisms") {
    auto c = ctx_of("x^2");
    Automorphism id = Automorphism::identity(c);
    std::mt19937_64 rng(37);
    for (int t = 0; t < 10; ++t) {
        OreElement a = oracle::random_element(rng, c, 3, 3);
        CHECK(id.apply(a) == a);
    }

    // a h = h phi_{h'}(a)
    auto d = ctx_of("x^2 - x + 3");
    Automorphism phi(d, S(1), S(0), d.dh());
    OreElement h = OreElement::from_poly(d, d.h());
    for (int t = 0; t < 20; ++t) {
        OreElement a = oracle::random_element(rng, d, 3, 3);
        CHECK(a * h == h * phi.apply(a));
    }

    Automorphism neg(c, S(-1), S(0), Poly::zero(QQ()));
    CHECK(neg.image_y() == E("-Y", c));
    CHECK(preserves_relation(neg));
    CHECK_THROWS_AS(Automorphism(c, S(1), S(1), Poly::zero(QQ())), Error);
    CHECK_THROWS_AS(Automorphism(ctx_of("1"), S(1), S(0), Poly::zero(QQ())), Error);
}

TEST_CASE("composition and inverses") {
    std::mt19937_64 rng(41);
    auto c = ctx_of("x^3");
    for (long a : {2L, -1L, 3L}) {
        Scalar al = S(a);
        Automorphism tau(c, al, S(0), Poly::zero(QQ()));
        Automorphism back(c, al.inverse(), S(0), Poly::zero(QQ()));
        CHECK(compose(tau, back) == Automorphism::identity(c));
    }
    Poly f = parse_poly("x^2 + 1", QQ());
    Poly g = parse_poly("3*x - 2", QQ());
    CHECK(compose(Automorphism(c, S(1), S(0), f), Automorphism(c, S(1), S(0), g)) ==
          Automorphism(c, S(1), S(0), f + g));

    auto q = ctx_of("x^2 - 3*x + 2");
    Automorphism w(q, S(-1), S(3), parse_poly("x", QQ()));
    Automorphism v(q, S(1), S(0), parse_poly("x^2 - 1", QQ()));
    CHECK(preserves_relation(w));
    for (int t = 0; t < 20; ++t) {
        OreElement a = oracle::random_element(rng, q, 3, 2);
        OreElement b = oracle::random_element(rng, q, 2, 2);
        CHECK(compose(w, w).apply(a) == w.apply(w.apply(a)));
        CHECK(compose(w, v).apply(a) == w.apply(v.apply(a)));
        CHECK(invert(w).apply(w.apply(a)) == a);
        CHECK(w.apply(a * b) == w.apply(a) * w.apply(b));
    }

    // finite field: the whole group on a small generating set
    AhContext f5(parse_poly("x^2 - 1", GF(5)));
    for (const auto& [al, be] : compute_P(f5).pairs) {
        Automorphism u(f5, al, be, parse_poly("2*x + 1", GF(5)));
        CHECK(preserves_relation(u));
        CHECK(compose(u, invert(u)) == Automorphism::identity(f5));
    }
}

TEST_CASE("isomorphism test") {
    Poly h = parse_poly("x^3 - 2*x + 5", QQ());
    Poly g = compose(h, parse_poly("x+1", QQ()));
    auto w = iso_test(h, g);
    REQUIRE(w);
    auto [a, b, nu] = *w;
    CHECK(g * nu == compose(h, Poly::affine(a, b)));
    CHECK_FALSE(iso_test(h, parse_poly("x^2", QQ())));

    auto v = iso_test(parse_poly("x^2", QQ()), parse_poly("4*x^2", QQ()));
    REQUIRE(v);
    auto [a2, b2, nu2] = *v;
    CHECK(parse_poly("4*x^2", QQ()) * nu2 == compose(parse_poly("x^2", QQ()), Poly::affine(a2, b2)));
    CHECK_FALSE(iso_test(parse_poly("x^2 - 1", QQ()), parse_poly("x^2 + 1", QQ())));

    std::mt19937_64 rng(43);
    for (auto spec : {QQ(), GF(5), GF(7)}) {
        for (int t = 0; t < 20; ++t) {
            Poly r = oracle::random_poly(rng, spec, 4);
            if (r.degree() < 1) continue;
            Scalar al = oracle::small_scalar(rng, spec, 1, 4);
            Scalar be = oracle::small_scalar(rng, spec);
            Scalar n = oracle::small_scalar(rng, spec, 1, 4);
            Poly s = compose(r, Poly::affine(al, be)) * n.inverse();
            auto z = iso_test(r, s);
            REQUIRE(z);
            auto [x1, x2, x3] = *z;
            CHECK(s * x3 == compose(r, Poly::affine(x1, x2)));
        }
    }
}

TEST_CASE("eta endomorphisms") {
    for (int n = 1; n <= 3; ++n) {
        AhContext c(Poly::monomial(S(1), n));
        for (long k = 1; k <= 4; ++k) {
            Endomorphism e = eta_endo(k, c);
            CHECK(e.image_x == OreElement::x(c).pow(static_cast<unsigned>(k)));
            OreElement hk = OreElement::from_poly(c, compose(c.h(), Poly::monomial(S(1), static_cast<int>(k))));
            CHECK(commutator(e.image_y, e.image_x) == hk);
            if (k == 1) {
                CHECK(e.image_y == OreElement::yhat(c));
                CHECK(e.surjective_probe);
            } else {
                CHECK_FALSE(e.surjective_probe);
            }
        }
    }
    auto c = ctx_of("x^2");
    CHECK(eta_endo(2, c).image_y == E("1/2*x*Y", c));
    std::mt19937_64 rng(47);
    Endomorphism e3 = eta_endo(3, c);
    for (int t = 0; t < 10; ++t) {
        OreElement a = oracle::random_element(rng, c, 2, 2);
        OreElement b = oracle::random_element(rng, c, 2, 2);
        CHECK(e3.apply(a * b) == e3.apply(a) * e3.apply(b));
    }
    auto kind_of = [](long k, const AhContext& ctx) {
        try {
            (void)eta_endo(k, ctx);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind_of(3, ctx_of("x^2", GF(3))) == ErrorKind::PDividesK);
    CHECK(kind_of(0, c) == ErrorKind::InvalidArgument);
    CHECK(kind_of(2, ctx_of("x^2 + 1")) == ErrorKind::WrongH);
}

TEST_CASE("kappa endomorphisms") {
    for (std::uint64_t p : {2u, 3u}) {
        for (const char* h : {"x", "x^2"}) {
            auto c = ctx_of(h, GF(p));
            OreElement hpyp = from_weyl(WeylElement::from_poly(c.h().pow(p)) * WeylElement::y(GF(p)).pow(p), c);
            Endomorphism k = kappa_endo(hpyp);
            CHECK(k.image_x == OreElement::x(c));
            CHECK(commutator(k.image_y, k.image_x) == OreElement::from_poly(c, c.h()));
            CHECK_FALSE(k.surjective_probe);
        }
    }
    try {
        (void)kappa_endo(E("x", ctx_of("x")));
        FAIL("expected CharZeroKappa");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CharZeroKappa);
    }
    try {
        (void)kappa_endo(E("Y", ctx_of("x", GF(3))));
        FAIL("expected NotInCentralizer");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInCentralizer);
    }
    // c in F[x] gives an automorphism
    CHECK(kappa_endo(E("x^2", ctx_of("x", GF(3)))).surjective_probe);
}

TEST_CASE("extension and restriction") {
    auto g = ctx_of("x^2");
    Poly f = parse_poly("x", QQ());
    Automorphism w(g, S(1), S(0), parse_poly("x", QQ()));
    auto ext = extend_automorphism(w, g.h());
    REQUIRE(ext);
    CHECK(*ext == w);
    auto e = extend_automorphism(w, f);
    REQUIRE(e);
    CHECK(e->f().is_one());
    auto r = restrict_automorphism(*e, g.h());
    REQUIRE(r);
    CHECK(*r == w);
    CHECK_FALSE(extend_automorphism(Automorphism(g, S(1), S(0), Poly::one(QQ())), f));

    // extension commutes with the embedding
    auto big = ctx_of("x^2*(x-1)");
    Automorphism u(big, S(1), S(0), parse_poly("x^3 + 3*x^2", QQ()));
    Poly small = parse_poly("x - 1", QQ());
    auto eu = extend_automorphism(u, small);
    REQUIRE(eu);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 10; ++t) {
        OreElement a = oracle::random_element(rng, big, 2, 2);
        CHECK(embed(u.apply(a), small) == eu->apply(embed(a, small)));
    }
}
