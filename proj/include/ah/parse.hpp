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

#ifndef AH_PARSE_HPP
#define AH_PARSE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ah/factor.hpp"
#include "ah/weyl.hpp"

namespace ah {

/// Expression tree for
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' nat)?
///   atom   := scalar | 'x' | 'Y' | 'y' | '(' expr ')'
///   scalar := digits ('/' digits)?
/// A leading minus binds looser than '^', so "-x^2" is -(x^2).
struct ParseNode {
    enum class Kind { Scalar, Var, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    std::size_t position = 0;
    std::string text;  // Scalar literal, or the variable letter
    unsigned long exponent = 0;
    std::vector<std::unique_ptr<ParseNode>> children;
};

/// Throws ParseError (SyntaxError, NegativeExponent, MixedGenerators).
std::unique_ptr<ParseNode> parse_expression(std::string_view src);

Scalar parse_scalar(std::string_view src, const FieldSpec& spec);
/// Only x may appear; Y or y raises WrongGenerator.
Poly parse_poly(std::string_view src, const FieldSpec& spec);
/// Generators x and Y.
OreElement parse_element(std::string_view src, const AhContext& ctx);
/// Generators x and y.
WeylElement parse_weyl(std::string_view src, const FieldSpec& spec);

/// "u1^a1,u2^a2,...,unit": factors with multiplicities, an optional trailing
/// scalar unit. Factors are made monic and marked verified.
FactoredPoly parse_factored(std::string_view src, const FieldSpec& spec);

}  // namespace ah

#endif  // AH_PARSE_HPP
