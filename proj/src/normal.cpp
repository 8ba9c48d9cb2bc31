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

#include "ah/normal.hpp"

#include "ah/center.hpp"
#include "ah/weyl.hpp"

namespace ah {

namespace {

FactoredPoly h_factorization(const AhContext& ctx, const std::optional<FactoredPoly>& given,
                             std::uint64_t seed) {
    if (given) {
        if (!(given->expand() == ctx.h())) {
            fail(ErrorKind::InvalidArgument, "supplied factorization does not multiply out to h");
        }
        return *given;
    }
    return factor(ctx.h(), seed);
}

int multiplicity(Poly f, const Poly& u) {
    int m = 0;
    while (!f.is_zero()) {
        auto q = divide_exact(f, u);
        if (!q) break;
        f = std::move(*q);
        ++m;
    }
    return m;
}

std::optional<Poly> normal_witness(const OreElement& v) {
    const AhContext& ctx = v.ctx();
    if (!commutator(OreElement::x(ctx), v).is_zero()) return std::nullopt;
    OreElement c = commutator(OreElement::yhat(ctx), v);
    int i0 = 0;
    while (v.coeff(i0).is_zero()) ++i0;
    auto r = divide_exact(c.coeff(i0), v.coeff(i0));
    if (!r) return std::nullopt;
    if (!(c == v.left_mul(*r))) return std::nullopt;
    return r;
}

NormalClassification classify_with(const OreElement& v, const FactoredPoly& hf) {
    const AhContext& ctx = v.ctx();
    const FieldSpec& spec = ctx.spec();
    // first nonzero A_1 coefficient, with its h-power stripped
    WeylElement w = to_weyl(v);
    int b = 0;
    while (w.coeff(b).is_zero()) ++b;
    Poly lead = *divide_exact(w.coeff(b), ctx.h().pow(static_cast<unsigned long>(b)));
    NormalClassification out{{}, OreElement(ctx)};
    Poly prod = Poly::one(spec);
    for (const auto& pf : hf.factors) {
        int beta = multiplicity(lead, pf.factor);
        if (spec.is_finite()) beta %= static_cast<int>(spec.characteristic());
        if (beta == 0) continue;
        out.factors.emplace_back(pf.factor, beta);
        prod *= pf.factor.pow(static_cast<unsigned long>(beta));
    }
    std::vector<Poly> zc;
    for (const auto& f : v.coeffs()) {
        auto q = divide_exact(f, prod);
        if (!q) fail(ErrorKind::Internal, "normal element not divisible by its factor part");
        zc.push_back(std::move(*q));
    }
    out.z = OreElement(ctx, std::move(zc));
    if (!is_central(out.z)) fail(ErrorKind::Internal, "residual part of a normal element is not central");
    if (!(out.z.left_mul(prod) == v)) fail(ErrorKind::Internal, "normal classification does not reassemble");
    return out;
}

}  // namespace

NormalityCertificate is_normal(const OreElement& v, const std::optional<FactoredPoly>& h_factored,
                               std::uint64_t seed) {
    if (v.is_zero()) fail(ErrorKind::ZeroElement, "normality of 0");
    NormalityCertificate out;
    out.r = normal_witness(v);
    out.verdict = out.r.has_value();
    if (out.verdict) {
        FactoredPoly hf = h_factorization(v.ctx(), h_factored, seed);
        if (hf.fully_verified()) out.classification = classify_with(v, hf);
    }
    return out;
}

NormalClassification classify_normal(const OreElement& v, const std::optional<FactoredPoly>& h_factored,
                                     std::uint64_t seed) {
    if (v.is_zero()) fail(ErrorKind::ZeroElement, "normality of 0");
    if (!normal_witness(v)) fail(ErrorKind::NotNormal, v.to_string() + " is not normal");
    FactoredPoly hf = h_factorization(v.ctx(), h_factored, seed);
    if (!hf.fully_verified()) {
        fail(ErrorKind::Unverifiable, "h has factors of unverified irreducibility: " + hf.to_string());
    }
    return classify_with(v, hf);
}

bool is_simple(const AhContext& ctx) { return !ctx.spec().is_finite() && ctx.deg_h() == 0; }

std::string_view to_string(PrimeKind kind) noexcept {
    switch (kind) {
        case PrimeKind::FactorOfH: return "FactorOfH";
        case PrimeKind::CentralIrreducible: return "CentralIrreducible";
        case PrimeKind::NotPrimeGenerator: return "NotPrimeGenerator";
        case PrimeKind::Unknown: return "Unknown";
    }
    return "Unknown";
}

PrimeGeneratorReport height_one_prime_test(const OreElement& v, const std::optional<FactoredPoly>& h_factored,
                                           std::uint64_t seed) {
    if (v.is_zero()) fail(ErrorKind::ZeroElement, "prime test of 0");
    const AhContext& ctx = v.ctx();
    const FieldSpec& spec = ctx.spec();
    FactoredPoly hf = h_factorization(ctx, h_factored, seed);

    if (v.is_poly() && v.coeff(0).degree() > 0) {
        Poly u = v.coeff(0).monic();
        for (const auto& pf : hf.factors) {
            if (pf.factor == u) {
                if (pf.irreducibility == Irreducibility::Verified) {
                    return {PrimeKind::FactorOfH, "associate of the prime factor " + u.to_string() + " of h"};
                }
                return {PrimeKind::Unknown, "factor " + u.to_string() + " of h has unverified irreducibility"};
            }
            if (pf.irreducibility == Irreducibility::Unverified && divides(u, pf.factor)) {
                return {PrimeKind::Unknown, u.to_string() + " divides the unverified factor " +
                                                pf.factor.to_string() + " of h"};
            }
        }
    }

    if (!spec.is_finite() || !is_central(v)) {
        return {PrimeKind::NotPrimeGenerator, "neither a prime factor of h nor a central irreducible"};
    }

    CentralDecomposition d = central_decompose(v);
    if (d.table.size() != 1 || d.table.begin()->first != std::make_pair(0, 0)) {
        fail(ErrorKind::Internal, "central element with a noncentral coordinate");
    }
    const auto& coords = d.table.begin()->second;
    bool uses_x = false;
    bool uses_y = false;
    for (const auto& [ab, c] : coords) {
        uses_x = uses_x || ab.first > 0;
        uses_y = uses_y || ab.second > 0;
    }
    if (uses_x && uses_y) {
        return {PrimeKind::Unknown, "central element is bivariate in X = x^p and Y = h^p y^p"};
    }
    if (!uses_x && !uses_y) return {PrimeKind::NotPrimeGenerator, "nonzero scalars are units"};

    std::vector<Scalar> uni;
    for (const auto& [ab, c] : coords) {
        auto k = static_cast<std::size_t>(uses_x ? ab.first : ab.second);
        if (uni.size() <= k) uni.resize(k + 1, Scalar::zero(spec));
        uni[k] = c;
    }
    Poly image(spec, std::move(uni));
    const char* var = uses_x ? "X" : "Y";
    if (!is_irreducible_mod_p(image)) {
        return {PrimeKind::NotPrimeGenerator, "reducible in " + std::string(var) + ": " + image.to_string(var)};
    }
    if (uses_x) {
        // u(x)^p = u(x^p) over F_p
        for (const auto& pf : hf.factors) {
            if (pf.factor == image.monic()) {
                return {PrimeKind::NotPrimeGenerator,
                        "associate of (" + pf.factor.to_string() + ")^p for a prime factor of h"};
            }
        }
    }
    return {PrimeKind::CentralIrreducible, "irreducible in " + std::string(var) + ": " + image.to_string(var)};
}

}  // namespace ah
