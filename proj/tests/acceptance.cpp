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


// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance <path to ah binary> <golden directory>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ah/parse.hpp"
#include "oracles.hpp"

using namespace ah;
using oracle::GF;
using oracle::QQ;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

AhContext ctx_of(const char* h, FieldSpec spec) { return AhContext(parse_poly(h, spec)); }

std::string field_name(const FieldSpec& spec) { return spec.to_string(); }

WeylElement hy(const Poly& h, int i, Side side) {
    WeylElement hp = WeylElement::from_poly(h.pow(i));
    WeylElement yp = WeylElement::y(h.spec()).pow(i);
    return side == Side::Left ? hp * yp : yp * hp;
}

// 1
std::string ring_axioms() {
    std::mt19937_64 rng(101);
    int triples = 0;
    for (auto spec : {QQ(), GF(5)}) {
        for (const char* h : {"x", "x^2", "x^3 - x"}) {
            AhContext c = ctx_of(h, spec);
            for (int t = 0; t < 500; ++t, ++triples) {
                OreElement a = oracle::random_element(rng, c, 3, 3);
                OreElement b = oracle::random_element(rng, c, 3, 3);
                OreElement d = oracle::random_element(rng, c, 3, 3);
                std::string tag = std::string(h) + " over " + field_name(spec);
                expect((a * b) * d == a * (b * d), "associativity, " + tag);
                expect(a * (b + d) == a * b + a * d, "left distributivity, " + tag);
                expect((a + b) * d == a * d + b * d, "right distributivity, " + tag);
            }
        }
    }
    return std::to_string(triples) + " triples";
}

// 2
std::string reordering_oracle() {
    std::mt19937_64 rng(102);
    const char* hs[] = {"x", "x^2", "x^3 - x", "x^2 + 1"};
    int pairs = 0;
    for (auto spec : {QQ(), GF(3), GF(5)}) {
        int count = spec.is_finite() ? 100 : 200;
        for (int t = 0; t < count; ++t, ++pairs) {
            AhContext c = ctx_of(hs[t % 4], spec);
            int n = static_cast<int>(rng() % 7);
            Poly f = oracle::random_poly(rng, spec, 3);
            OreElement lhs = OreElement::yhat(c).pow(n) * OreElement::from_poly(c, f);
            OreElement naive = oracle::naive_product(OreElement::yhat(c).pow(n), OreElement::from_poly(c, f));
            expect(lhs == naive, "Y^" + std::to_string(n) + " * (" + f.to_string() + ")");
        }
    }
    return std::to_string(pairs) + " pairs";
}

// 3
std::string product_formulas() {
    int checks = 0;
    for (auto spec : {QQ(), GF(3)}) {
        for (const char* h : {"x", "x^2", "x^2 + 1"}) {
            AhContext c = ctx_of(h, spec);
            for (int i = 0; i <= 6; ++i) {
                for (Side side : {Side::Right, Side::Left}) {
                    expect(to_weyl(product_formula_lhs(i, side, c)) == hy(c.h(), i, side),
                           std::string(h) + " i=" + std::to_string(i));
                    ++checks;
                }
            }
        }
    }
    return std::to_string(checks) + " identities";
}

// 4
std::string central_generator() {
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (const char* h : {"x", "x^2", "x^3 - x", "x^2 + x + 1"}) {
            AhContext c = ctx_of(h, GF(p));
            CenterDescription z = center(c);
            OreElement y = OreElement::yhat(c);
            Poly corr = divide_exact(delta_power(Poly::x(GF(p)), static_cast<int>(p), c), c.h()).value();
            OreElement gen = y.pow(static_cast<unsigned>(p)) - y.left_mul(corr);
            expect(*z.correction == corr, "correction for " + std::string(h));
            expect(to_weyl(gen) == hy(c.h(), static_cast<int>(p), Side::Left), "h^p y^p for " + std::string(h));
            expect(is_central(gen), "central generator for " + std::string(h));
        }
        for (int n = 1; n <= 6; ++n) {
            AhContext c(Poly::monomial(Scalar::one(GF(p)), n));
            Poly corr = *center(c).correction;
            int pi = static_cast<int>(p);
            if (n % pi == 1 % pi) {
                expect(corr == Poly::monomial(Scalar::one(GF(p)), (n - 1) * (pi - 1)), "monomial correction");
            } else {
                expect(corr.is_zero(), "monomial correction vanishes");
            }
        }
    }
    return "p in {2,3,5}, monomials n <= 6";
}

// 5
std::string central_decomposition() {
    std::mt19937_64 rng(105);
    int n = 0;
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (const char* h : {"x", "x^2", "x^2 + 1"}) {
            AhContext c = ctx_of(h, GF(p));
            for (int t = 0; t < 100; ++t, ++n) {
                OreElement a = oracle::random_element(rng, c, 5, 5);
                CentralDecomposition d = central_decompose(a);
                expect(reassemble(d, c) == a, "reassembly for " + a.to_string());
                if (t < 10) {
                    auto ref = oracle::decompose_by_span(a);
                    expect(ref && oracle::same_table(d, *ref), "linear-solve coordinates for " + a.to_string());
                }
            }
        }
    }
    return std::to_string(n) + " elements";
}

bool all_divisible_by_h(const OreElement& a) {
    for (const auto& f : a.coeffs()) {
        if (!divides(a.ctx().h(), f)) return false;
    }
    return true;
}

// 6
std::string commutator_membership() {
    std::mt19937_64 rng(106);
    int preimages = 0;
    for (auto spec : {QQ(), GF(3), GF(5)}) {
        for (const char* h : {"x", "x^2 - 1", "x^3 + x + 1"}) {
            AhContext c = ctx_of(h, spec);
            OreElement x = OreElement::x(c);
            OreElement y = OreElement::yhat(c);
            for (int t = 0; t < 40; ++t) {
                OreElement a = oracle::random_element(rng, c, 3, 3);
                OreElement b = oracle::random_element(rng, c, 3, 3);
                expect(all_divisible_by_h(commutator(a, b)), "[a,b] in hA_h");
                if (spec.is_finite()) continue;
                expect(in_commutator_space(commutator(a, b), CommutatorSpace::LieIdeal), "lie membership");
                for (auto [gen, space] : {std::pair{x, CommutatorSpace::BracketX}, std::pair{y, CommutatorSpace::BracketYhat}}) {
                    OreElement target = commutator(gen, a);
                    expect(in_commutator_space(target, space), "bracket membership");
                    auto pre = commutator_preimage(target, space);
                    expect(pre && commutator(gen, *pre) == target, "verified preimage");
                    ++preimages;
                    // random elements: any positive answer must come with a preimage
                    OreElement r = oracle::random_element(rng, c, 3, 3);
                    if (in_commutator_space(r, space)) {
                        auto q = commutator_preimage(r, space);
                        expect(q && commutator(gen, *q) == r, "verified preimage for a random member");
                        ++preimages;
                    }
                }
            }
        }
    }
    return std::to_string(preimages) + " verified preimages";
}

// 7
std::string normal_elements() {
    int grid = 0;
    for (const char* h : {"x", "x^2"}) {
        AhContext c = ctx_of(h, GF(2));
        for (int mask = 1; mask < 512; ++mask, ++grid) {
            OreElement v = OreElement::zero(c);
            for (int k = 0; k < 9; ++k) {
                if (mask & (1 << k)) v += OreElement::monomial(c, Poly::monomial(Scalar::one(GF(2)), k % 3), k / 3);
            }
            expect(is_normal(v).verdict == oracle::normal_by_definition(v), "normality of " + v.to_string());
        }
    }
    struct Case {
        FieldSpec spec;
        const char* h;
        bool simple;
    };
    for (const Case& s : {Case{QQ(), "1", true}, Case{QQ(), "x", false}, Case{QQ(), "x^2", false},
                          Case{GF(5), "1", false}, Case{GF(5), "x", false}, Case{GF(5), "x^2", false}}) {
        expect(is_simple(ctx_of(s.h, s.spec)) == s.simple, std::string("simplicity for h = ") + s.h);
    }
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (const char* h : {"x", "x^2", "x*(x+1)"}) {
            AhContext c = ctx_of(h, GF(p));
            OreElement hpyp = from_weyl(hy(c.h(), static_cast<int>(p), Side::Left), c);
            expect(height_one_prime_test(hpyp).kind == PrimeKind::CentralIrreducible, "h^p y^p");
            OreElement up = OreElement::from_poly(c, Poly::x(GF(p)).pow(p));
            expect(height_one_prime_test(up).kind == PrimeKind::NotPrimeGenerator, "u^p");
        }
    }
    return std::to_string(grid) + " grid elements";
}

// 8
std::string golden_values() {
    Scalar one = Scalar::one(QQ());
    for (auto [z1, z0] : std::vector<std::pair<long, long>>{{1, 0}, {3, 2}, {0, -2}, {0, 1}, {5, -7}}) {
        PSet P = compute_P(AhContext(Poly(QQ(), {z0, -z1, 1})));
        std::vector<AffinePair> expect_pairs{{-one, int_embed(z1, QQ())}, {one, int_embed(0, QQ())}};
        expect(P.pairs == expect_pairs, "quadratic with zeta1 = " + std::to_string(z1));
    }
    expect(compute_P(ctx_of("x^2*(x-1)", QQ())).pairs == std::vector<AffinePair>{{one, Scalar::zero(QQ())}},
           "x^2(x-1)");
    for (int n = 1; n <= 6; ++n) {
        AhContext c(Poly::monomial(one, n));
        PSet P = compute_P(c);
        expect(P.shape == PSet::Shape::OneParameterFamily && P.lambda->is_zero(), "family for x^n");
        auto [q, inv] = aut_center(c);
        expect(q == Poly::monomial(one, n - 1) && inv.kind == Invariants::Kind::ConstantsOnly, "D_Z for x^n");
    }
    for (std::uint64_t p : {3u, 5u, 7u}) {
        for (int n = 1; n <= 6; ++n) {
            AhContext c(Poly::monomial(Scalar::one(GF(p)), n));
            int m = aut_center(c).first.degree();
            int ell = static_cast<int>(p - 1);
            expect(aut_center(c).first == Poly::monomial(Scalar::one(GF(p)), m), "q is a monomial");
            expect(m >= 0 && m < ell && (m - (n - 1)) % ell == 0, "m = n - 1 mod (p - 1)");
        }
    }
    return "quadratics, x^2(x-1), x^n over Q and F_p";
}

// 9
std::string p_cross_validation() {
    std::mt19937_64 rng(109);
    int n = 0;
    for (std::uint64_t p : {5u, 7u}) {
        int done = 0;
        while (done < 20) {
            Poly h = oracle::random_poly(rng, GF(p), 4);
            int d = h.degree();
            if (d < 1 || int_embed(d, GF(p)).is_zero()) continue;
            AhContext c(h);
            expect(compute_P_exhaustive(c).pairs == compute_P_elimination(c).pairs, "P for " + h.to_string());
            ++done;
            ++n;
        }
    }
    return std::to_string(n) + " polynomials";
}

// 10
std::string invariant_laws() {
    std::vector<std::pair<const char*, FieldSpec>> cases{
        {"x^2*(x-1)", QQ()}, {"x^2 - x", QQ()},       {"x^3", QQ()},       {"x^4 - 1", QQ()},
        {"(x-1)^2*(x+1)^2", QQ()}, {"x^3 - x", GF(3)}, {"x^3", GF(5)},      {"x^2 - 1", GF(5)},
        {"x^4 + 1", GF(5)},  {"x^5 - x", GF(5)},      {"x^3 - x + 1", GF(3)}, {"x^2", GF(7)},
    };
    int laws = 0;
    for (const auto& [hs, spec] : cases) {
        AhContext c = ctx_of(hs, spec);
        AutGroupStructure s = classify_aut_group(c);
        auto [q, inv] = aut_center(c);
        std::vector<AffinePair> gens = s.P.pairs;
        if (s.P.shape == PSet::Shape::OneParameterFamily && !spec.is_finite()) {
            for (long a : {2L, -3L, 7L}) {
                Scalar al = int_embed(a, spec);
                gens.push_back({al, (Scalar::one(spec) - al) * *s.P.lambda});
            }
        }
        std::vector<Poly> rs{q};
        if (inv.kind != Invariants::Kind::ConstantsOnly) {
            rs.push_back(q * inv.t);
            rs.push_back(q * inv.t.pow(2));
        }
        for (const auto& [al, be] : gens) {
            if (inv.kind != Invariants::Kind::ConstantsOnly) {
                expect(oracle::invariant_under(inv.t, al, be), std::string("t invariant for ") + hs);
            }
            for (const Poly& r : rs) {
                expect(oracle::center_law(r, al, be, c.deg_h()), std::string("center law for ") + hs);
                ++laws;
            }
        }
        bool trivial_g = s.G.size() == 1 && s.G[0].is_zero();
        if (!trivial_g && s.ell > 0) {
            expect((s.G.size() - 1) % s.ell == 0, std::string("ell | |G| - 1 for ") + hs);
        }
    }
    return std::to_string(cases.size()) + " cases, " + std::to_string(laws) + " law checks";
}

// 11
std::string endomorphisms() {
    Scalar one = Scalar::one(QQ());
    for (int n = 1; n <= 3; ++n) {
        AhContext c(Poly::monomial(one, n));
        for (long k = 1; k <= 4; ++k) {
            Endomorphism e = eta_endo(k, c);
            OreElement hk = apply_poly_map(OreElement::from_poly(c, c.h()), e.image_x, e.image_y);
            expect(commutator(e.image_y, e.image_x) == hk, "eta relation");
        }
    }
    for (std::uint64_t p : {2u, 3u}) {
        for (const char* h : {"x", "x^2", "x^2 + 1"}) {
            AhContext c = ctx_of(h, GF(p));
            OreElement cc = from_weyl(hy(c.h(), static_cast<int>(p), Side::Left), c);
            Endomorphism k = kappa_endo(cc);
            OreElement hk = apply_poly_map(OreElement::from_poly(c, c.h()), k.image_x, k.image_y);
            expect(commutator(k.image_y, k.image_x) == hk, "kappa relation");
            expect(!k.surjective_probe, "kappa is not surjective");
        }
    }
    return "eta k <= 4, kappa over F_2 and F_3";
}

// 12
std::string run_command(const std::string& ah, const std::string& line) {
    std::string cmd = "\"" + ah + "\" " + line + " 2>&1; echo \"[exit $?]\"";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Failure("cannot start " + ah);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

std::string cli_determinism(const std::string& ah, const std::string& golden) {
    std::ifstream in(golden + "/commands.txt");
    expect(static_cast<bool>(in), "missing corpus " + golden + "/commands.txt");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    expect(lines.size() >= 25, "corpus has fewer than 25 commands");
    std::string first;
    std::string second;
    for (const auto& line : lines) first += "$ ah " + line + "\n" + run_command(ah, line);
    for (const auto& line : lines) second += "$ ah " + line + "\n" + run_command(ah, line);
    expect(first == second, "two runs differ");
    std::ifstream ex(golden + "/expected.txt", std::ios::binary);
    std::stringstream ss;
    ss << ex.rdbuf();
    expect(ss.str() == first, "output differs from expected.txt");
    return std::to_string(lines.size()) + " commands";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <ah binary> <golden dir>\n";
        return 2;
    }
    std::string ah = argv[1];
    std::string golden = argv[2];
    std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"ring axioms", ring_axioms},
        {"reordering formula vs naive rewriter", reordering_oracle},
        {"product formulas map to h^i y^i", product_formulas},
        {"central generator and correction", central_generator},
        {"central decomposition round trip", central_decomposition},
        {"commutator membership and preimages", commutator_membership},
        {"normal elements, simplicity, primes", normal_elements},
        {"automorphism golden values", golden_values},
        {"P elimination vs exhaustive", p_cross_validation},
        {"invariant and center laws", invariant_laws},
        {"eta and kappa endomorphisms", endomorphisms},
        {"CLI determinism", [&] { return cli_determinism(ah, golden); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string label = "[" + std::to_string(i + 1) + "] " + criteria[i].first;
        try {
            std::string detail = criteria[i].second();
            std::cout << "PASS " << label << " (" << detail << ")\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "FAIL " << label << ": " << e.what() << "\n";
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
