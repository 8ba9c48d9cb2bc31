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

#include "ah/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "ah/aut.hpp"
#include "ah/center.hpp"
#include "ah/normal.hpp"
#include "ah/parse.hpp"

namespace ah::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field = "QQ";
    std::string h;
    std::string h_factored;
    bool json = false;
    std::uint64_t seed = 0;

    // per-command arguments
    std::vector<std::string> pos;
    std::string side = "right";
    std::string space = "x";
    std::string from;
    std::string to;
    std::string g;
    std::string w;
    std::string w2;
    int power = 1;
};

struct Output {
    std::string text;
    Json json;
};

class Env {
public:
    explicit Env(const Options& o) : o_(o), spec_(parse_field(o.field)) {}

    const FieldSpec& spec() const { return spec_; }
    const Options& opts() const { return o_; }

    const AhContext& ctx() {
        if (!ctx_) {
            if (o_.h.empty()) throw UsageError("this command needs --h <poly>");
            ctx_ = AhContext(parse_poly(o_.h, spec_));
        }
        return *ctx_;
    }

    std::optional<FactoredPoly> h_factored() {
        if (o_.h_factored.empty()) return std::nullopt;
        return parse_factored(o_.h_factored, spec_);
    }

    const std::string& arg(std::size_t i) const {
        if (i >= o_.pos.size()) throw UsageError("missing positional argument " + std::to_string(i + 1));
        return o_.pos[i];
    }

    OreElement element(std::size_t i) { return parse_element(arg(i), ctx()); }
    Poly poly(std::size_t i) const { return parse_poly(arg(i), spec_); }

    int integer(std::size_t i) const {
        const std::string& s = arg(i);
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size() || v < -1000000 || v > 1000000) throw std::invalid_argument(s);
            return static_cast<int>(v);
        } catch (const std::logic_error&) {
            throw UsageError("expected an integer, got '" + s + "'");
        }
    }

    Automorphism automorphism(const std::string& src) {
        std::vector<std::string> parts;
        std::stringstream ss(src);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        if (parts.size() != 3) throw UsageError("automorphism must be given as 'alpha,beta,f'");
        return Automorphism(ctx(), parse_scalar(parts[0], spec_), parse_scalar(parts[1], spec_),
                            parse_poly(parts[2], spec_));
    }

private:
    static FieldSpec parse_field(const std::string& s) {
        if (s == "QQ") return FieldSpec::rationals();
        if (s.rfind("GF:", 0) == 0) {
            std::string digits = s.substr(3);
            if (digits.empty() || digits.size() > 12 ||
                digits.find_first_not_of("0123456789") != std::string::npos) {
                throw UsageError("bad field '" + s + "'");
            }
            return FieldSpec::prime_field(std::stoull(digits));
        }
        throw UsageError("field must be QQ or GF:p, got '" + s + "'");
    }

    const Options& o_;
    FieldSpec spec_;
    std::optional<AhContext> ctx_;
};

// ---- small output helpers ----

Output value(const std::string& s) { return {s, Json{{"result", s}}}; }

Output boolean(bool b) { return {b ? "true" : "false", Json{{"result", b}}}; }

Json pair_json(const AffinePair& p) {
    return Json{{"alpha", p.first.to_string()}, {"beta", p.second.to_string()}};
}

std::string pair_text(const AffinePair& p) {
    return "(" + p.first.to_string() + ", " + p.second.to_string() + ")";
}

Json aut_json(const Automorphism& w) {
    return Json{{"alpha", w.alpha().to_string()},
                {"beta", w.beta().to_string()},
                {"f", w.f().to_string()},
                {"action", w.to_string()}};
}

std::string aut_text(const Automorphism& w) {
    return "alpha = " + w.alpha().to_string() + ", beta = " + w.beta().to_string() + ", f = " + w.f().to_string() +
           "\n" + w.to_string();
}

std::string scalars_text(const std::vector<Scalar>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
    return s + "}";
}

Json scalars_json(const std::vector<Scalar>& xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(x.to_string());
    return j;
}

std::string coords_text(const CentralDecomposition::Coords& coords) {
    std::string s;
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
        const auto& [ab, c] = *it;
        std::string mono;
        if (ab.first > 0) mono += ab.first == 1 ? "X" : "X^" + std::to_string(ab.first);
        if (ab.second > 0) mono += (mono.empty() ? "" : "*") + (ab.second == 1 ? std::string("Y") : "Y^" + std::to_string(ab.second));
        std::string term = mono.empty() ? c.to_string() : (c.is_one() ? mono : c.to_string() + "*" + mono);
        s += (s.empty() ? "" : " + ") + term;
    }
    return s;
}

Json classification_json(const NormalClassification& c) {
    Json f = Json::array();
    for (const auto& [u, b] : c.factors) f.push_back(Json{{"u", u.to_string()}, {"beta", b}});
    return Json{{"factors", f}, {"z", c.z.to_string()}};
}

std::string classification_text(const NormalClassification& c) {
    std::string s = "factors:";
    if (c.factors.empty()) s += " none";
    for (const auto& [u, b] : c.factors) s += " (" + u.to_string() + ")^" + std::to_string(b);
    return s + "\nz = " + c.z.to_string();
}

Json pset_json(const PSet& P) {
    Json pairs = Json::array();
    for (const auto& p : P.pairs) pairs.push_back(pair_json(p));
    return Json{{"shape", P.shape == PSet::Shape::Finite ? "Finite" : "OneParameterFamily"},
                {"lambda", P.lambda ? Json(P.lambda->to_string()) : Json(nullptr)},
                {"P", pairs}};
}

std::string pset_text(const PSet& P) {
    std::string s;
    if (P.shape == PSet::Shape::OneParameterFamily) {
        s = "family: (alpha, (1 - alpha)*lambda) for all nonzero alpha, lambda = " + P.lambda->to_string();
    }
    for (const auto& p : P.pairs) s += (s.empty() ? "" : "\n") + pair_text(p);
    return s;
}

std::string invariants_kind(const Invariants& inv) {
    switch (inv.kind) {
        case Invariants::Kind::WholeD: return "WholeD";
        case Invariants::Kind::ConstantsOnly: return "ConstantsOnly";
        case Invariants::Kind::Generated: return "Generated";
    }
    return "Unknown";
}

Json invariants_json(const Invariants& inv) {
    return Json{{"kind", invariants_kind(inv)},
                {"t", inv.kind == Invariants::Kind::ConstantsOnly ? Json(nullptr) : Json(inv.t.to_string())}};
}

std::string invariants_text(const Invariants& inv) {
    switch (inv.kind) {
        case Invariants::Kind::WholeD: return "D^Aut = F[x]";
        case Invariants::Kind::ConstantsOnly: return "D^Aut = F";
        case Invariants::Kind::Generated: return "D^Aut = F[t], t = " + inv.t.to_string();
    }
    return "";
}

Output endo_output(const Endomorphism& e) {
    std::string text = "x -> " + e.image_x.to_string() + "\nY -> " + e.image_y.to_string() +
                       "\nsurjective within degree " + std::to_string(e.probe_bound) + ": " +
                       (e.surjective_probe ? "yes" : "no");
    return {text, Json{{"x", e.image_x.to_string()},
                       {"Y", e.image_y.to_string()},
                       {"surjective_probe", e.surjective_probe},
                       {"probe_bound", e.probe_bound}}};
}

Output optional_aut(const std::optional<Automorphism>& w) {
    if (!w) return {"none", Json{{"result", nullptr}}};
    return {aut_text(*w), Json{{"result", aut_json(*w)}}};
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw UsageError("side must be left or right");
}

CommutatorSpace parse_space(const std::string& s) {
    if (s == "x") return CommutatorSpace::BracketX;
    if (s == "yhat" || s == "Y") return CommutatorSpace::BracketYhat;
    if (s == "lie") return CommutatorSpace::LieIdeal;
    throw UsageError("space must be x, yhat or lie");
}

// ---- command table ----

struct Command {
    std::string name;
    std::string help;
    std::vector<std::string> positionals;
    std::function<void(CLI::App*, Options&)> extra;
    std::function<Output(Env&)> run;
};

std::vector<Command> commands() {
    std::vector<Command> c;
    auto side_opt = [](CLI::App* s, Options& o) {
        s->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    };
    auto w_opt = [](CLI::App* s, Options& o) {
        s->add_option("--w", o.w, "automorphism 'alpha,beta,f'")->required();
    };

    // algebra
    c.push_back({"comm", "commutator ab - ba", {"a", "b"}, nullptr,
                 [](Env& e) { return value(commutator(e.element(0), e.element(1)).to_string()); }});
    c.push_back({"mul", "product ab", {"a", "b"}, nullptr,
                 [](Env& e) { return value((e.element(0) * e.element(1)).to_string()); }});
    c.push_back({"delta", "h * f' iterated", {"f"},
                 [](CLI::App* s, Options& o) { s->add_option("--power", o.power, "number of iterations"); },
                 [](Env& e) {
                     if (e.opts().power < 0 || e.opts().power > 64) throw UsageError("--power must be in [0, 64]");
                     return value(delta_power(e.poly(0), e.opts().power, e.ctx()).to_string());
                 }});
    c.push_back({"anti", "anti-automorphism x -> x, Y -> -Y + h'", {"a"}, nullptr,
                 [](Env& e) { return value(antiautomorphism(e.element(0)).to_string()); }});
    c.push_back({"to-weyl", "image in A_1 under Y = y h", {"a"}, nullptr,
                 [](Env& e) { return value(to_weyl(e.element(0)).to_string()); }});
    c.push_back({"from-weyl", "preimage of an A_1 element", {"w"}, nullptr, [](Env& e) {
                     return value(from_weyl(parse_weyl(e.arg(0), e.spec()), e.ctx()).to_string());
                 }});
    c.push_back({"embed", "embed a from A_g into A_h (h | g)", {"a"},
                 [](CLI::App* s, Options& o) { s->add_option("--from", o.from, "the polynomial g")->required(); },
                 [](Env& e) {
                     AhContext gctx(parse_poly(e.opts().from, e.spec()));
                     return value(embed(parse_element(e.arg(0), gctx), e.ctx().h()).to_string());
                 }});
    c.push_back({"product-formula", "the Y-product equal to y^i h^i (right) or h^i y^i (left)", {"i"}, side_opt,
                 [](Env& e) {
                     int i = e.integer(0);
                     if (i < 0 || i > 64) throw UsageError("i must be in [0, 64]");
                     OreElement a = product_formula_lhs(i, parse_side(e.opts().side), e.ctx());
                     std::string w = to_weyl(a).to_string();
                     return Output{a.to_string() + "\n" + w, Json{{"result", a.to_string()}, {"weyl", w}}};
                 }});
    c.push_back({"ore-witness", "a1, s1 with a s1 = f a1 (right) or s1 a = a1 f (left)", {"a", "f"}, side_opt,
                 [](Env& e) {
                     OreWitness w = ore_witness(e.element(0), e.poly(1), parse_side(e.opts().side));
                     return Output{"a1 = " + w.a1.to_string() + "\ns1 = " + w.s1.to_string(),
                                   Json{{"a1", w.a1.to_string()}, {"s1", w.s1.to_string()}}};
                 }});
    c.push_back({"localized-equal", "a h^-m == w h^-n with w in A_1", {"a", "m", "w", "n"}, nullptr,
                 [](Env& e) {
                     int m = e.integer(1);
                     int n = e.integer(3);
                     if (m < 0 || n < 0 || m > 64 || n > 64) throw UsageError("exponents must be in [0, 64]");
                     return boolean(localized_equal(e.element(0), m, parse_weyl(e.arg(2), e.spec()), n));
                 }});

    // center and commutators
    c.push_back({"center", "generators of the center", {}, nullptr, [](Env& e) {
                     CenterDescription z = center(e.ctx());
                     if (!z.y_generator) {
                         return Output{"center = F",
                                       Json{{"generators", Json::array()}, {"correction", nullptr}}};
                     }
                     std::string X = z.x_generator->to_string();
                     std::string Y = z.y_generator->to_string();
                     return Output{"center = F[" + X + ", " + Y + "]\ncorrection = " + z.correction->to_string(),
                                   Json{{"generators", {X, Y}}, {"correction", z.correction->to_string()}}};
                 }});
    c.push_back({"is-central", "commutes with x and Y", {"a"}, nullptr,
                 [](Env& e) { return boolean(is_central(e.element(0))); }});
    c.push_back({"decompose-central", "coordinates over the center in the basis x^i h^j y^j", {"a"}, nullptr,
                 [](Env& e) {
                     CentralDecomposition d = central_decompose(e.element(0));
                     std::string text;
                     Json table = Json::array();
                     for (const auto& [ij, coords] : d.table) {
                         text += (text.empty() ? "" : "\n") + std::string("(") + std::to_string(ij.first) + ", " +
                                 std::to_string(ij.second) + "): " + coords_text(coords);
                         Json cj = Json::array();
                         for (const auto& [ab, v] : coords) {
                             cj.push_back(Json{{"X", ab.first}, {"Y", ab.second}, {"c", v.to_string()}});
                         }
                         table.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"coords", cj}});
                     }
                     if (text.empty()) text = "0";
                     return Output{text, Json{{"p", d.p}, {"table", table}}};
                 }});
    c.push_back({"centralizer-x", "commutes with x", {"a"}, nullptr, [](Env& e) {
                     OreElement a = e.element(0);
                     bool direct = centralizer_x_membership(a);
                     if (direct != centralizer_x_structural(a)) {
                         fail(ErrorKind::Internal, "centralizer tests disagree");
                     }
                     return boolean(direct);
                 }});
    c.push_back({"in-commutator", "membership in [x, A], [Y, A] or [A, A]", {"a"},
                 [](CLI::App* s, Options& o) {
                     s->add_option("--space", o.space, "x, yhat or lie")->check(CLI::IsMember({"x", "yhat", "Y", "lie"}));
                 },
                 [](Env& e) {
                     OreElement a = e.element(0);
                     CommutatorSpace space = parse_space(e.opts().space);
                     bool member = in_commutator_space(a, space);
                     std::optional<OreElement> b;
                     if (member) b = commutator_preimage(a, space);
                     std::string text = member ? "true" : "false";
                     if (b) text += "\npreimage: " + b->to_string();
                     return Output{text, Json{{"result", member},
                                              {"preimage", b ? Json(b->to_string()) : Json(nullptr)}}};
                 }});

    // normal elements and primes
    c.push_back({"is-normal", "v A = A v", {"v"}, nullptr, [](Env& e) {
                     NormalityCertificate cert = is_normal(e.element(0), e.h_factored(), e.opts().seed);
                     std::string text = cert.verdict ? "true\nr = " + cert.r->to_string() : "false";
                     if (cert.classification) text += "\n" + classification_text(*cert.classification);
                     Json j{{"normal", cert.verdict},
                            {"r", cert.r ? Json(cert.r->to_string()) : Json(nullptr)},
                            {"classification",
                             cert.classification ? classification_json(*cert.classification) : Json(nullptr)}};
                     return Output{text, j};
                 }});
    c.push_back({"classify-normal", "u_1^b_1 ... u_l^b_l z", {"v"}, nullptr, [](Env& e) {
                     NormalClassification cl = classify_normal(e.element(0), e.h_factored(), e.opts().seed);
                     return Output{classification_text(cl), classification_json(cl)};
                 }});
    c.push_back({"is-simple", "simplicity of A_h", {}, nullptr,
                 [](Env& e) { return boolean(is_simple(e.ctx())); }});
    c.push_back({"prime-test", "height one prime generator report", {"v"}, nullptr, [](Env& e) {
                     PrimeGeneratorReport r = height_one_prime_test(e.element(0), e.h_factored(), e.opts().seed);
                     std::string kind(to_string(r.kind));
                     return Output{kind + ": " + r.detail, Json{{"kind", kind}, {"detail", r.detail}}};
                 }});

    // automorphisms
    c.push_back({"aut-p", "pairs with h(ax + b) = a^deg(h) h", {}, nullptr, [](Env& e) {
                     PSet P = compute_P(e.ctx());
                     return Output{pset_text(P), pset_json(P)};
                 }});
    c.push_back({"aut-g", "translations fixing h", {}, nullptr, [](Env& e) {
                     auto G = compute_G(e.ctx());
                     return Output{"G = " + scalars_text(G), Json{{"G", scalars_json(G)}}};
                 }});
    c.push_back({"aut-classify", "structure of the automorphism group", {}, nullptr, [](Env& e) {
                     AutGroupStructure s = classify_aut_group(e.ctx());
                     std::string kind(to_string(s.kind));
                     std::string text = "case: " + kind;
                     if (s.lambda) text += "\nlambda = " + s.lambda->to_string();
                     text += "\nP:\n" + pset_text(s.P);
                     text += "\nG = " + scalars_text(s.G) + "\nk = " + std::to_string(s.k);
                     if (s.generator) text += "\ngenerator = " + pair_text(*s.generator);
                     text += "\nell = " + (s.ell == 0 ? std::string("infinite") : std::to_string(s.ell));
                     text += "\n" + invariants_text(s.invariants) + "\nq = " + s.q.to_string();
                     Json P = pset_json(s.P);
                     Json j{{"case", kind},
                            {"P", P["P"]},
                            {"P_shape", P["shape"]},
                            {"G", scalars_json(s.G)},
                            {"k", s.k},
                            {"lambda", s.lambda ? Json(s.lambda->to_string()) : Json(nullptr)},
                            {"generator", s.generator ? pair_json(*s.generator) : Json(nullptr)},
                            {"ell", s.ell == 0 ? Json(nullptr) : Json(s.ell)},
                            {"invariants", invariants_kind(s.invariants)},
                            {"t", s.invariants.kind == Invariants::Kind::ConstantsOnly ? Json(nullptr)
                                                                                        : Json(s.invariants.t.to_string())},
                            {"q", s.q.to_string()}};
                     return Output{text, j};
                 }});
    c.push_back({"aut-apply", "apply an automorphism", {"a"}, w_opt, [](Env& e) {
                     return value(e.automorphism(e.opts().w).apply(e.element(0)).to_string());
                 }});
    c.push_back({"aut-compose", "w o w2 (w2 applied first)", {},
                 [](CLI::App* s, Options& o) {
                     s->add_option("--w", o.w, "outer automorphism 'alpha,beta,f'")->required();
                     s->add_option("--w2", o.w2, "inner automorphism 'alpha,beta,f'")->required();
                 },
                 [](Env& e) {
                     Automorphism w = compose(e.automorphism(e.opts().w), e.automorphism(e.opts().w2));
                     return Output{aut_text(w), aut_json(w)};
                 }});
    c.push_back({"aut-invert", "inverse automorphism", {}, w_opt, [](Env& e) {
                     Automorphism w = invert(e.automorphism(e.opts().w));
                     return Output{aut_text(w), aut_json(w)};
                 }});
    c.push_back({"invariants", "polynomials fixed by every automorphism", {}, nullptr, [](Env& e) {
                     Invariants inv = invariant_ring(e.ctx());
                     return Output{invariants_text(inv), invariants_json(inv)};
                 }});
    c.push_back({"aut-center", "D_Z with Z(Aut) = {phi_r : r in D_Z}", {}, nullptr, [](Env& e) {
                     auto [q, inv] = aut_center(e.ctx());
                     std::string text = "D_Z = q * D^Aut, q = " + q.to_string() + "\n" + invariants_text(inv);
                     Json j{{"q", q.to_string()}, {"invariants", invariants_json(inv)}};
                     return Output{text, j};
                 }});
    c.push_back({"iso", "nu g(x) = h(ax + b)", {},
                 [](CLI::App* s, Options& o) { s->add_option("--g", o.g, "the other polynomial")->required(); },
                 [](Env& e) {
                     auto w = iso_test(e.ctx().h(), parse_poly(e.opts().g, e.spec()));
                     if (!w) return Output{"none", Json{{"isomorphic", false}}};
                     const auto& [a, b, nu] = *w;
                     return Output{"alpha = " + a.to_string() + ", beta = " + b.to_string() + ", nu = " + nu.to_string(),
                                   Json{{"isomorphic", true},
                                        {"alpha", a.to_string()},
                                        {"beta", b.to_string()},
                                        {"nu", nu.to_string()}}};
                 }});
    c.push_back({"endo-eta", "x -> x^k, Y -> (1/k) x^((k-1)(n-1)) Y for h = c x^n", {"k"}, nullptr,
                 [](Env& e) { return endo_output(eta_endo(e.integer(0), e.ctx())); }});
    c.push_back({"endo-kappa", "x -> x, Y -> Y + c", {"c"}, nullptr,
                 [](Env& e) { return endo_output(kappa_endo(e.element(0))); }});
    c.push_back({"aut-extend", "extend from A_h to A_f, f | h", {},
                 [](CLI::App* s, Options& o) {
                     s->add_option("--w", o.w, "automorphism 'alpha,beta,f'")->required();
                     s->add_option("--to", o.to, "the divisor f")->required();
                 },
                 [](Env& e) {
                     return optional_aut(extend_automorphism(e.automorphism(e.opts().w), parse_poly(e.opts().to, e.spec())));
                 }});
    c.push_back({"aut-restrict", "restrict from A_h to A_g, h | g", {},
                 [](CLI::App* s, Options& o) {
                     s->add_option("--w", o.w, "automorphism 'alpha,beta,f'")->required();
                     s->add_option("--to", o.to, "the multiple g")->required();
                 },
                 [](Env& e) {
                     return optional_aut(restrict_automorphism(e.automorphism(e.opts().w), parse_poly(e.opts().to, e.spec())));
                 }});

    // polynomial utilities
    c.push_back({"factor", "factor a polynomial", {"f"}, nullptr, [](Env& e) {
                     FactoredPoly fp = factor(e.poly(0), e.opts().seed);
                     Json fs = Json::array();
                     for (const auto& pf : fp.factors) {
                         fs.push_back(Json{{"factor", pf.factor.to_string()},
                                           {"multiplicity", pf.multiplicity},
                                           {"verified", pf.irreducibility == Irreducibility::Verified}});
                     }
                     return Output{fp.to_string(), Json{{"unit", fp.unit.to_string()}, {"factors", fs}}};
                 }});
    c.push_back({"roots", "roots in the base field", {"f"}, nullptr, [](Env& e) {
                     auto r = roots_in_field(e.poly(0));
                     return Output{scalars_text(r), Json{{"roots", scalars_json(r)}}};
                 }});
    c.push_back({"gcd", "monic gcd", {"a", "b"}, nullptr,
                 [](Env& e) { return value(gcd_monic(e.poly(0), e.poly(1)).to_string()); }});
    c.push_back({"deriv", "formal derivative", {"f"}, nullptr,
                 [](Env& e) { return value(derivative(e.poly(0)).to_string()); }});
    c.push_back({"compose", "f(g(x))", {"f", "g"}, nullptr,
                 [](Env& e) { return value(compose(e.poly(0), e.poly(1)).to_string()); }});
    c.push_back({"root-count", "distinct roots in the algebraic closure", {"f"}, nullptr, [](Env& e) {
                     int k = distinct_root_count(e.poly(0));
                     return Output{std::to_string(k), Json{{"result", k}}};
                 }});
    return c;
}

void emit_error(const Options& o, std::ostream& out, std::ostream& err, const std::string& kind,
                const std::string& message) {
    if (o.json) {
        out << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
    } else {
        err << "error: " << kind << ": " << message << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computation in the algebras A_h = F<x, Y> with Yx - xY = h(x)", "ah"};
    app.set_help_flag("--help", "print this help");
    app.add_option("--field", o.field, "QQ or GF:p")->default_val("QQ");
    app.add_option("--h", o.h, "the polynomial h");
    app.add_option("--h-factored", o.h_factored, "factorization of h as 'u1^a1,u2^a2,unit'");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--seed", o.seed, "seed for randomized factorization")->default_val(0);
    app.require_subcommand(1);
    app.fallthrough();

    std::vector<Command> table = commands();
    std::map<CLI::App*, const Command*> by_app;
    for (const auto& cmd : table) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        sub->fallthrough();
        if (!cmd.positionals.empty()) {
            sub->add_option("args", o.pos, "arguments: " + CLI::detail::join(cmd.positionals, " "))
                ->expected(static_cast<int>(cmd.positionals.size()));
        }
        if (cmd.extra) cmd.extra(sub, o);
        by_app[sub] = &cmd;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(o, out, err, "UsageError", e.what());
        return kExitUsage;
    }

    const Command* cmd = nullptr;
    for (CLI::App* sub : app.get_subcommands()) cmd = by_app[sub];
    if (!cmd) {
        emit_error(o, out, err, "UsageError", "no command given");
        return kExitUsage;
    }
    if (o.pos.size() != cmd->positionals.size()) {
        emit_error(o, out, err, "UsageError",
                   cmd->name + " expects " + std::to_string(cmd->positionals.size()) + " argument(s)");
        return kExitUsage;
    }

    try {
        Env env(o);
        Output result = cmd->run(env);
        if (o.json) {
            out << result.json.dump() << "\n";
        } else {
            out << result.text << "\n";
        }
        return kExitOk;
    } catch (const UsageError& e) {
        emit_error(o, out, err, "UsageError", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        emit_error(o, out, err, std::string(to_string(e.kind())), e.what());
        return kExitDomain;
    } catch (const std::exception& e) {
        emit_error(o, out, err, "Internal", e.what());
        return kExitDomain;
    }
}

}  // namespace ah::cli
