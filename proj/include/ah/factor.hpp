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

#ifndef AH_FACTOR_HPP
#define AH_FACTOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ah/poly.hpp"

namespace ah {

struct SquarefreeFactor {
    Poly factor;  // monic, squarefree, pairwise coprime with the others
    int multiplicity;
};

/// h = lead(h) * prod factor^multiplicity. Works in characteristic p by
/// descending through p-th roots when the derivative vanishes.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& h);

/// Monic radical of h: product of its distinct monic irreducible factors.
Poly squarefree_part(const Poly& h);

/// Number of distinct roots of h in the algebraic closure.
int distinct_root_count(const Poly& h);

enum class Irreducibility { Verified, Unverified };

struct PrimeFactor {
    Poly factor;  // monic
    int multiplicity;
    Irreducibility irreducibility;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

struct FactoredPoly {
    Scalar unit;
    std::vector<PrimeFactor> factors;  // sorted by (degree, coefficients)

    /// unit * prod factor^multiplicity
    Poly expand() const;
    bool fully_verified() const;
    std::string to_string() const;
};

/// Complete factorization over F_p; over Q a squarefree decomposition refined
/// by rational roots, with the remaining factors flagged Verified only when
/// irreducibility is certified (degree <= 3, or an irreducible reduction mod
/// some small prime). The seed drives equal-degree splitting.
FactoredPoly factor(const Poly& h, std::uint64_t seed = 0);

/// All rational roots, sorted, each verified by evaluation.
std::vector<Scalar> rational_roots(const Poly& f);

/// All roots lying in the base field (rational roots over Q, exhaustive over F_p).
std::vector<Scalar> roots_in_field(const Poly& f);

/// Irreducibility over F_p via x^(p^i) - x gcd probes.
bool is_irreducible_mod_p(const Poly& f);

}  // namespace ah

#endif  // AH_FACTOR_HPP
