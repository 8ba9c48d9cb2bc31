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

#ifndef AH_CENTER_HPP
#define AH_CENTER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "ah/weyl.hpp"

namespace ah {

/// Char 0: the center is F and nothing else is set. Char p: the center is
/// F[X, Y] with X = x^p and Y = Y^p - correction*Y = h^p y^p, where
/// correction = delta^p(x) / h.
struct CenterDescription {
    std::uint64_t characteristic = 0;
    std::optional<Poly> x_generator;
    std::optional<OreElement> y_generator;
    std::optional<Poly> correction;
};

CenterDescription center(const AhContext& ctx);

/// [a, x] = 0 and [a, Y] = 0.
bool is_central(const OreElement& a);

/// Coordinates over the center in the basis x^i h^j y^j, 0 <= i, j < p.
/// table[(i, j)] maps (a, b) to the coefficient of X^a Y^b.
struct CentralDecomposition {
    using Coords = std::map<std::pair<int, int>, Scalar>;
    std::uint64_t p = 0;
    std::map<std::pair<int, int>, Coords> table;
};

/// Throws CharZero in characteristic 0.
CentralDecomposition central_decompose(const OreElement& a);
/// sum over (i, j) of c_ij * x^i h^j y^j, evaluated in A_h.
OreElement reassemble(const CentralDecomposition& d, const AhContext& ctx);

/// [a, x] = 0.
bool centralizer_x_membership(const OreElement& a);
/// Same question answered from the shape of a: a in D (char 0), or the A_1
/// coefficients vanish off multiples of p (char p).
bool centralizer_x_structural(const OreElement& a);

enum class CommutatorSpace { BracketX, BracketYhat, LieIdeal };

/// Membership in [x, A_h], [Y, A_h] or [A_h, A_h]. LieIdeal in characteristic
/// p throws NotImplemented.
bool in_commutator_space(const OreElement& a, CommutatorSpace space);

/// b with [x, b] = a (BracketX, LieIdeal) or [Y, b] = a (BracketYhat), or
/// nullopt when a is not in the space.
std::optional<OreElement> commutator_preimage(const OreElement& a, CommutatorSpace space);

}  // namespace ah

#endif  // AH_CENTER_HPP
