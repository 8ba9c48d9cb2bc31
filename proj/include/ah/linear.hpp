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

#ifndef AH_LINEAR_HPP
#define AH_LINEAR_HPP

#include <optional>
#include <vector>

#include "ah/ore.hpp"

namespace ah {

/// Coefficients c with sum c_k * gens[k] = target, or nullopt when target is
/// outside the F-span. Exact Gaussian elimination on x^i Y^j coordinates.
std::optional<std::vector<Scalar>> solve_span(const std::vector<OreElement>& gens, const OreElement& target);

}  // namespace ah

#endif  // AH_LINEAR_HPP
