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

#ifndef AH_AUT_HPP
#define AH_AUT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ah/ore.hpp"

namespace ah {

using AffinePair = std::pair<Scalar, Scalar>;  // (alpha, beta): x -> alpha x + beta

/// h(alpha x + beta) = alpha^(deg h) h(x).
bool in_P(const Poly& h, const Scalar& alpha, const Scalar& beta);

/// The pairs (alpha, beta) with h(alpha x + beta) = alpha^(deg h) h(x).
/// A one-parameter family {(a, (1 - a) lambda)} arises exactly when
/// h = gamma (x - lambda)^n; over Q its pair list is left empty, over F_p it
/// holds every member.
struct PSet {
    enum class Shape { Finite, OneParameterFamily };
    Shape shape = Shape::Finite;
    std::vector<AffinePair> pairs;  // sorted
    std::optional<Scalar> lambda;
};

/// Translations fixing h; {0} in characteristic 0. Throws ConstantH.
std::vector<Scalar> compute_G(const AhContext& ctx);

/// Exhaustive search over F_p, elimination over Q. Throws ConstantH.
PSet compute_P(const AhContext& ctx);
/// Brute force over F_p^* x F_p. Throws InfiniteField over Q.
PSet compute_P_exhaustive(const AhContext& ctx);
/// beta is forced by the x^(n-1) coefficient, then alpha solves a gcd of
/// binomials. Needs n * lead(h) != 0 in F; throws InvalidArgument otherwise.
PSet compute_P_elimination(const AhContext& ctx);

enum class AutCase { PolyOnly, SemidirectG, SemidirectFstar, SemidirectFinite };
std::string_view to_string(AutCase c) noexcept;

/// D^Aut: everything (t = x), constants only, or F[t].
struct Invariants {
    enum class Kind { WholeD, ConstantsOnly, Generated };
    Kind kind = Kind::WholeD;
    Poly t{FieldSpec::rationals()};
};

struct AutGroupStructure {
    AutCase kind = AutCase::PolyOnly;
    PSet P;
    std::vector<Scalar> G;
    int k = 0;                              // distinct roots of h
    std::optional<Scalar> lambda;           // SemidirectFstar
    std::optional<AffinePair> generator;    // of tau_P modulo tau_{1,G}
    std::uint64_t ell = 1;                  // order of the generator; 0 when infinite
    Invariants invariants;
    Poly q{FieldSpec::rationals()};         // D_Z = q * D^Aut
    int q_exponent = 0;                     // the exponent n or n - 1 in q
};

/// Throws ConstantH.
AutGroupStructure classify_aut_group(const AhContext& ctx);
Invariants invariant_ring(const AhContext& ctx);
/// (q, invariants) with D_Z = q * D^Aut; the transformation law is asserted.
std::pair<Poly, Invariants> aut_center(const AhContext& ctx);

/// x -> alpha x + beta, Y -> alpha^(deg h - 1) Y + f(x).
class Automorphism {
public:
    /// Throws InvalidPair unless (alpha, beta) lies in P, ConstantH for deg h < 1.
    Automorphism(AhContext ctx, Scalar alpha, Scalar beta, Poly f);
    static Automorphism identity(const AhContext& ctx);

    const AhContext& ctx() const noexcept { return ctx_; }
    const Scalar& alpha() const noexcept { return alpha_; }
    const Scalar& beta() const noexcept { return beta_; }
    const Poly& f() const noexcept { return f_; }

    OreElement image_x() const;
    OreElement image_y() const;
    OreElement apply(const OreElement& a) const;

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.ctx_ == b.ctx_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.f_ == b.f_;
    }

    std::string to_string() const;

private:
    AhContext ctx_;
    Scalar alpha_;
    Scalar beta_;
    Poly f_;
};

/// w1 o w2: apply w2 first.
Automorphism compose(const Automorphism& w1, const Automorphism& w2);
Automorphism invert(const Automorphism& w);

/// (alpha, beta, nu) with nu g(x) = h(alpha x + beta), or nullopt.
std::optional<std::tuple<Scalar, Scalar, Scalar>> iso_test(const Poly& h, const Poly& g);

/// A substitution endomorphism x -> image_x, Y -> image_y.
struct Endomorphism {
    AhContext ctx;
    OreElement image_x;
    OreElement image_y;
    /// Both x and Y found in the span of images of x^i Y^j, i + j <= bound.
    bool surjective_probe = false;
    int probe_bound = 0;

    OreElement apply(const OreElement& a) const;
};

/// eta_k for h = gamma x^n, n >= 1: x -> x^k, Y -> (1/k) x^((k-1)(n-1)) Y.
/// Throws WrongH, PDividesK, InvalidArgument (k < 1).
Endomorphism eta_endo(long k, const AhContext& ctx);
/// kappa_c: x -> x, Y -> Y + c for c commuting with x, characteristic p.
/// Throws CharZeroKappa, NotInCentralizer.
Endomorphism kappa_endo(const OreElement& c);

/// Extension of w on A_g to A_f for f | g, or nullopt when it does not exist.
/// Throws NotDivisible.
std::optional<Automorphism> extend_automorphism(const Automorphism& w, const Poly& f);
/// Restriction of psi on A_f to A_g for f | g, or nullopt. Throws NotDivisible.
std::optional<Automorphism> restrict_automorphism(const Automorphism& psi, const Poly& g);

}  // namespace ah

#endif  // AH_AUT_HPP
