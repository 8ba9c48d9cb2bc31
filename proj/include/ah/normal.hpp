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

#ifndef AH_NORMAL_HPP
#define AH_NORMAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ah/factor.hpp"
#include "ah/ore.hpp"

namespace ah {

/// v = u_1^b_1 ... u_l^b_l * z with u_i prime factors of h and z central.
struct NormalClassification {
    std::vector<std::pair<Poly, int>> factors;  // (u_i, b_i) with b_i > 0
    OreElement z;
};

struct NormalityCertificate {
    bool verdict = false;
    std::optional<Poly> r;  // [Y, v] = r v when verdict holds
    std::optional<NormalClassification> classification;
};

/// Decides normality from [x, v] = 0 and [Y, v] = r v. When the verdict is
/// true and a fully verified factorization of h is at hand (given, or found
/// over F_p), the classification is attached as well. Throws ZeroElement.
NormalityCertificate is_normal(const OreElement& v,
                               const std::optional<FactoredPoly>& h_factored = std::nullopt,
                               std::uint64_t seed = 0);

/// Throws NotNormal, or Unverifiable when h has factors of unknown
/// irreducibility over Q. Exponents are reduced below p in characteristic p.
NormalClassification classify_normal(const OreElement& v,
                                     const std::optional<FactoredPoly>& h_factored = std::nullopt,
                                     std::uint64_t seed = 0);

/// char F = 0 and h a nonzero constant.
bool is_simple(const AhContext& ctx);

enum class PrimeKind { FactorOfH, CentralIrreducible, NotPrimeGenerator, Unknown };

std::string_view to_string(PrimeKind kind) noexcept;

struct PrimeGeneratorReport {
    PrimeKind kind;
    std::string detail;
};

/// Recognizes generators of height one primes. Throws ZeroElement.
PrimeGeneratorReport height_one_prime_test(const OreElement& v,
                                           const std::optional<FactoredPoly>& h_factored = std::nullopt,
                                           std::uint64_t seed = 0);

}  // namespace ah

#endif  // AH_NORMAL_HPP
