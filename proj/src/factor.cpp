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

#include "ah/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace ah {

namespace {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        auto c = a.coeff(k) <=> b.coeff(k);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<SquarefreeFactor> yun(const Poly& f) {
    // f monic, characteristic 0
    std::vector<SquarefreeFactor> out;
    Poly df = derivative(f);
    Poly a = gcd_monic(f, df);
    Poly b = *divide_exact(f, a);
    Poly c = *divide_exact(df, a);
    Poly d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        Poly g = gcd_monic(b, d);
        Poly nb = *divide_exact(b, g);
        Poly nc = *divide_exact(d, g);
        d = nc - derivative(nb);
        b = std::move(nb);
        if (g.degree() > 0) out.push_back({g, i});
    }
    return out;
}

std::vector<SquarefreeFactor> sff_mod_p(const Poly& f) {
    // f monic over F_p
    std::vector<SquarefreeFactor> out;
    if (f.degree() <= 0) return out;
    const auto p = static_cast<int>(f.spec().characteristic());
    Poly c = gcd_monic(f, derivative(f));
    Poly w = *divide_exact(f, c);
    for (int i = 1; w.degree() > 0; ++i) {
        Poly y = gcd_monic(w, c);
        Poly fac = *divide_exact(w, y);
        if (fac.degree() > 0) out.push_back({fac, i});
        w = std::move(y);
        c = *divide_exact(c, w);
    }
    if (c.degree() > 0) {
        for (auto& sf : sff_mod_p(pth_root(c))) {
            out.push_back({sf.factor, sf.multiplicity * p});
        }
    }
    return out;
}

// ---- equal-degree splitting over F_p ----

Poly random_poly(const FieldSpec& spec, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, spec.characteristic() - 1);
    std::vector<Scalar> c;
    for (int k = 0; k <= max_degree; ++k) c.emplace_back(spec, static_cast<long>(dist(rng)));
    return Poly(spec, std::move(c));
}

// A candidate splitting polynomial for the degree-d components of g.
Poly splitter(const Poly& g, const Poly& a, int d) {
    const FieldSpec& spec = g.spec();
    const std::uint64_t p = spec.characteristic();
    if (p == 2) {
        Poly acc = divmod(a, g).second;
        Poly term = acc;
        const int steps = d * 1;  // F_2-trace from F_{2^d}
        for (int i = 1; i < steps; ++i) {
            term = divmod(term * term, g).second;
            acc += term;
        }
        return acc;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    return powmod(a, e, g) - Poly::one(spec);
}

std::optional<Poly> try_split(const Poly& g, const Poly& a, int d) {
    if (a.degree() <= 0) return std::nullopt;
    Poly s = splitter(g, a, d);
    for (const Poly& cand : {s, s + Poly::one(g.spec())}) {
        if (cand.is_zero()) continue;
        Poly u = gcd_monic(g, cand);
        if (u.degree() > 0 && u.degree() < g.degree()) return u;
    }
    return std::nullopt;
}

// Deterministic enumeration of all polynomials of degree < n, in base-p order.
bool next_poly(std::vector<std::uint64_t>& digits, std::uint64_t p) {
    for (auto& d : digits) {
        if (++d < p) return true;
        d = 0;
    }
    return false;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const FieldSpec& spec = g.spec();
    std::optional<Poly> u;
    for (int attempt = 0; attempt < 64 && !u; ++attempt) {
        u = try_split(g, random_poly(spec, g.degree() - 1, rng), d);
    }
    // linear shifts x + c
    for (const auto& c : enumerate(spec)) {
        if (u) break;
        u = try_split(g, Poly::affine(Scalar::one(spec), c), d);
    }
    if (!u) {
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(g.degree()), 0);
        while (!u && next_poly(digits, spec.characteristic())) {
            std::vector<Scalar> c;
            for (auto v : digits) c.emplace_back(spec, static_cast<long>(v));
            u = try_split(g, Poly(spec, std::move(c)), d);
        }
    }
    if (!u) fail(ErrorKind::Internal, "equal-degree splitting failed on " + g.to_string());
    equal_degree(*u, d, rng, out);
    equal_degree(*divide_exact(g, *u), d, rng, out);
}

std::vector<Poly> factor_squarefree_mod_p(const Poly& g, std::mt19937_64& rng) {
    std::vector<Poly> out;
    const FieldSpec& spec = g.spec();
    const mpz_class p(static_cast<unsigned long>(spec.characteristic()));
    Poly rest = g;
    Poly xp = Poly::x(spec);  // x^(p^i) mod rest
    for (int i = 1; 2 * i <= rest.degree(); ++i) {
        xp = powmod(xp, p, rest);
        Poly gi = gcd_monic(rest, xp - Poly::x(spec));
        if (gi.degree() > 0) {
            equal_degree(gi, i, rng, out);
            rest = *divide_exact(rest, gi);
            xp = divmod(xp, rest).second;
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

// ---- Q helpers ----

mpz_class lcm_denominators(const Poly& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    }
    return l;
}

/// Primitive integer coefficients proportional to f.
std::vector<mpz_class> primitive_integer_form(const Poly& f) {
    mpz_class l = lcm_denominators(f);
    std::vector<mpz_class> z;
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) {
        mpq_class v = c.rational() * l;
        z.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    if (g != 0) {
        for (auto& v : z) v /= g;
    }
    return z;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool certified_irreducible_over_q(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    if (!rational_roots(f).empty()) return false;
    if (f.degree() <= 3) return true;
    auto z = primitive_integer_form(f);
    for (std::uint64_t p = 2; p < 200; ++p) {
        if (!is_prime(p)) continue;
        FieldSpec fp = FieldSpec::prime_field(p);
        std::vector<Scalar> c;
        for (const auto& v : z) c.emplace_back(fp, v);
        Poly reduced(fp, std::move(c));
        if (reduced.degree() != f.degree()) continue;
        if (is_irreducible_mod_p(reduced)) return true;
    }
    return false;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& h) {
    if (h.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of 0");
    Poly f = h.monic();
    auto out = h.spec().is_finite() ? sff_mod_p(f) : yun(f);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return poly_less(a.factor, b.factor);
    });
    return out;
}

Poly squarefree_part(const Poly& h) {
    Poly out = Poly::one(h.spec());
    for (const auto& sf : squarefree_decomposition(h)) out *= sf.factor;
    return out;
}

int distinct_root_count(const Poly& h) {
    if (h.is_zero()) fail(ErrorKind::ZeroPolynomial, "root count of 0");
    return squarefree_part(h).degree();
}

Poly FactoredPoly::expand() const {
    Poly out = Poly::constant(unit);
    for (const auto& pf : factors) out *= pf.factor.pow(static_cast<unsigned long>(pf.multiplicity));
    return out;
}

bool FactoredPoly::fully_verified() const {
    return std::all_of(factors.begin(), factors.end(), [](const PrimeFactor& pf) {
        return pf.irreducibility == Irreducibility::Verified;
    });
}

std::string FactoredPoly::to_string() const {
    std::ostringstream os;
    os << unit;
    for (const auto& pf : factors) {
        os << " * (" << pf.factor << ")";
        if (pf.multiplicity > 1) os << "^" << pf.multiplicity;
        if (pf.irreducibility == Irreducibility::Unverified) os << "[unverified]";
    }
    return os.str();
}

FactoredPoly factor(const Poly& h, std::uint64_t seed) {
    if (h.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of 0");
    const FieldSpec& spec = h.spec();
    FactoredPoly out{h.lead(), {}};
    std::map<int, int> unused;
    if (spec.is_finite()) {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (const auto& sf : squarefree_decomposition(h)) {
            for (auto& u : factor_squarefree_mod_p(sf.factor, rng)) {
                out.factors.push_back({std::move(u), sf.multiplicity, Irreducibility::Verified});
            }
        }
    } else {
        for (const auto& sf : squarefree_decomposition(h)) {
            Poly rest = sf.factor;
            for (const auto& r : rational_roots(sf.factor)) {
                Poly lin = Poly::affine(Scalar::one(spec), -r);
                rest = *divide_exact(rest, lin);
                out.factors.push_back({lin, sf.multiplicity, Irreducibility::Verified});
            }
            if (rest.degree() > 0) {
                auto flag = certified_irreducible_over_q(rest) ? Irreducibility::Verified
                                                               : Irreducibility::Unverified;
                out.factors.push_back({rest, sf.multiplicity, flag});
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimeFactor& a, const PrimeFactor& b) { return poly_less(a.factor, b.factor); });
    return out;
}

std::vector<Scalar> rational_roots(const Poly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of 0");
    const FieldSpec& spec = f.spec();
    if (spec.is_finite()) fail(ErrorKind::FieldMismatch, "rational_roots needs QQ");
    std::vector<Scalar> roots;
    auto z = primitive_integer_form(f);
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar::zero(spec));
    if (z.size() - low >= 2) {
        const mpz_class& a0 = z[low];
        const mpz_class& an = z.back();
        auto nums = positive_divisors(a0);
        auto dens = positive_divisors(an);
        for (const auto& d : nums) {
            for (const auto& e : dens) {
                for (int sign : {1, -1}) {
                    mpq_class cand(sign * d, e);
                    cand.canonicalize();
                    if (cand.get_den() != e) continue;  // already seen in lowest terms
                    Scalar s(spec, cand);
                    if (f.eval(s).is_zero()) roots.push_back(s);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Scalar> roots_in_field(const Poly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of 0");
    if (!f.spec().is_finite()) return rational_roots(f);
    std::vector<Scalar> out;
    for (const auto& a : enumerate(f.spec())) {
        if (f.eval(a).is_zero()) out.push_back(a);
    }
    return out;
}

bool is_irreducible_mod_p(const Poly& f) {
    const FieldSpec& spec = f.spec();
    if (!spec.is_finite()) fail(ErrorKind::FieldMismatch, "is_irreducible_mod_p needs GF(p)");
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    Poly g = f.monic();
    const mpz_class p(static_cast<unsigned long>(spec.characteristic()));
    Poly xp = Poly::x(spec);
    for (int i = 1; 2 * i <= g.degree(); ++i) {
        xp = powmod(xp, p, g);
        if (gcd_monic(g, xp - Poly::x(spec)).degree() > 0) return false;
    }
    return true;
}

}  // namespace ah
