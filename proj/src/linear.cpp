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

#include "ah/linear.hpp"

#include <map>
#include <utility>

namespace ah {

namespace {

using Key = std::pair<int, int>;  // (ydeg, xdeg)
using Vec = std::map<Key, Scalar>;

Vec coords(const OreElement& a) {
    Vec v;
    for (int i = 0; i <= a.ydeg(); ++i) {
        const Poly& f = a.coeffs()[static_cast<std::size_t>(i)];
        for (int j = 0; j <= f.degree(); ++j) {
            if (!f.coeff(j).is_zero()) v.insert_or_assign({i, j}, f.coeff(j));
        }
    }
    return v;
}

// v -= c * w
void axpy(Vec& v, const Scalar& c, const Vec& w) {
    for (const auto& [k, x] : w) {
        auto it = v.find(k);
        if (it == v.end()) {
            v.insert_or_assign(k, -(c * x));
        } else {
            it->second -= c * x;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

}  // namespace

std::optional<std::vector<Scalar>> solve_span(const std::vector<OreElement>& gens, const OreElement& target) {
    const FieldSpec& spec = target.spec();
    const std::size_t n = gens.size();
    // Echelon rows keyed by pivot; each carries its combination of gens.
    struct Row {
        Vec v;
        std::vector<Scalar> combo;
    };
    std::map<Key, Row> rows;
    for (std::size_t k = 0; k < n; ++k) {
        Row r{coords(gens[k]), std::vector<Scalar>(n, Scalar::zero(spec))};
        r.combo[k] = Scalar::one(spec);
        while (!r.v.empty()) {
            auto pivot = r.v.rbegin()->first;
            auto it = rows.find(pivot);
            if (it == rows.end()) break;
            Scalar c = r.v.rbegin()->second / it->second.v.rbegin()->second;
            axpy(r.v, c, it->second.v);
            for (std::size_t m = 0; m < n; ++m) r.combo[m] -= c * it->second.combo[m];
        }
        if (!r.v.empty()) {
            Key pivot = r.v.rbegin()->first;
            rows.insert_or_assign(pivot, std::move(r));
        }
    }
    Vec t = coords(target);
    std::vector<Scalar> sol(n, Scalar::zero(spec));
    while (!t.empty()) {
        auto pivot = t.rbegin()->first;
        auto it = rows.find(pivot);
        if (it == rows.end()) return std::nullopt;
        Scalar c = t.rbegin()->second / it->second.v.rbegin()->second;
        axpy(t, c, it->second.v);
        for (std::size_t m = 0; m < n; ++m) sol[m] += c * it->second.combo[m];
    }
    return sol;
}

}  // namespace ah
