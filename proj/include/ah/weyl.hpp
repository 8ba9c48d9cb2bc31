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

#ifndef AH_WEYL_HPP
#define AH_WEYL_HPP

#include <string>
#include <vector>

#include "ah/ore.hpp"

namespace ah {

/// Element sum_i r_i(x) y^i of the Weyl algebra A_1 (yx - xy = 1). Runs on the
/// h = 1 instance of the A_h engine; the wrapper only keeps the two apart.
class WeylElement {
public:
    explicit WeylElement(FieldSpec spec) : e_(AhContext::weyl(spec)) {}
    WeylElement(FieldSpec spec, std::vector<Poly> coeffs)
        : e_(AhContext::weyl(spec), std::move(coeffs)) {}
    /// Reinterpret an element of A_1 built with AhContext::weyl.
    explicit WeylElement(OreElement e);

    static WeylElement x(FieldSpec spec) { return WeylElement(OreElement::x(AhContext::weyl(spec))); }
    static WeylElement y(FieldSpec spec) { return WeylElement(OreElement::yhat(AhContext::weyl(spec))); }
    static WeylElement from_poly(const Poly& f) {
        return WeylElement(OreElement::from_poly(AhContext::weyl(f.spec()), f));
    }

    const OreElement& base() const noexcept { return e_; }
    const FieldSpec& spec() const noexcept { return e_.spec(); }
    const std::vector<Poly>& coeffs() const noexcept { return e_.coeffs(); }
    Poly coeff(int i) const { return e_.coeff(i); }
    int ydeg() const noexcept { return e_.ydeg(); }
    bool is_zero() const noexcept { return e_.is_zero(); }

    friend WeylElement operator+(const WeylElement& a, const WeylElement& b) { return WeylElement(a.e_ + b.e_); }
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b) { return WeylElement(a.e_ - b.e_); }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) { return WeylElement(a.e_ * b.e_); }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.e_ == b.e_; }

    WeylElement pow(unsigned e) const { return WeylElement(e_.pow(e)); }
    std::string to_string() const { return e_.to_string("y"); }

private:
    OreElement e_;
};

/// Image under Y -> y*h.
WeylElement to_weyl(const OreElement& a);

/// Preimage in A_h; throws NotInSubalgebraError at the first i with h^i not
/// dividing the coefficient of y^i.
OreElement from_weyl(const WeylElement& w, const AhContext& ctx);

enum class Side { Left, Right };

/// Right: Y(Y + h')(Y + 2h')...(Y + (i-1)h'), equal to y^i h^i.
/// Left: (Y - ih')(Y - (i-1)h')...(Y - h'), equal to h^i y^i.
OreElement product_formula_lhs(int i, Side side, const AhContext& ctx);

/// The embedding A_g -> A_f for f | g, x -> x and Y_g -> Y_f * (g/f).
/// a lives in A_g; throws NotDivisible unless f divides g.
OreElement embed(const OreElement& a, const Poly& f);

/// Right: a * s1 = f * a1.  Left: s1 * a = a1 * f.  s1 is a power of f.
struct OreWitness {
    OreElement a1;
    Poly s1;
};

/// s1 = f^(ydeg a + 1). Throws ZeroDenominator for f = 0.
OreWitness ore_witness(const OreElement& a, const Poly& f, Side side);

/// Compares the right fractions a h^-m (a in A_h) and b h^-n (b in A_1).
bool localized_equal(const OreElement& a, int m, const WeylElement& b, int n);

/// The anti-automorphism of A_1 fixing x with y -> -y.
WeylElement weyl_antiautomorphism(const WeylElement& w);

}  // namespace ah

#endif  // AH_WEYL_HPP
