// Copyright 2026 The spr Authors
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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "spr/bench.hpp"

namespace spr {

CostPayoff review(const ReviewList& list, std::size_t k) {
  CostPayoff out;
  for (std::size_t i = 0; i < std::min(k, list.size()); ++i) {
    out.cost += 1;
    if (list[i]) {
      out.payoff = 1;
      break;
    }
  }
  return out;
}

CostPayoff expected_random_review(const ReviewList& list, std::size_t k) {
  const double n = static_cast<double>(list.size());
  const double m = static_cast<double>(std::count(list.begin(), list.end(), true));
  const std::size_t depth = std::min(k, list.size());
  // p = probability that the first j reviewed patches are all incorrect.
  CostPayoff out;
  double p = 1;
  for (std::size_t j = 0; j < depth; ++j) {
    out.cost += p;
    const double jj = static_cast<double>(j);
    p *= std::max(0.0, n - m - jj) / (n - jj);
  }
  out.payoff = 1 - p;
  return out;
}

OrderComparison compare_orders(const std::vector<Sweep>& full_sweeps, std::size_t budget, std::size_t k,
                               std::size_t seeds, std::uint64_t seed) {
  OrderComparison cmp;
  cmp.k = k;
  cmp.seeds = seeds;
  auto add = [](CostPayoff& acc, const CostPayoff& x, double weight = 1) {
    acc.cost += x.cost * weight;
    acc.payoff += x.payoff * weight;
  };
  auto to_list = [](const ExploreReport& r) {
    ReviewList list;
    for (const auto& p : r.patches) list.push_back(p.correct);
    return list;
  };
  for (const auto& s : full_sweeps) {
    const ExploreReport tiers = explore(s, budget, Order::spr_tiers());
    if (!tiers.correct_in_space) continue;
    ++cmp.defects_considered;
    const ReviewList list = to_list(tiers);
    add(cmp.spr_tiers, review(list, k));
    add(cmp.random_expected, expected_random_review(list, k));
    for (std::size_t i = 0; i < seeds; ++i) {
      add(cmp.random_mean, review(to_list(explore(s, budget, Order::random(seed + i))), k),
          1.0 / static_cast<double>(seeds));
    }
  }
  return cmp;
}

std::string format_cost_payoff(const CostPayoff& cp) {
  auto num = [](double v) {
    if (std::abs(v - std::round(v)) < 1e-9) return std::to_string(static_cast<long long>(std::llround(v)));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  return num(cp.cost) + " / " + num(cp.payoff);
}

}  // namespace spr
