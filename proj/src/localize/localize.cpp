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

#include "spr/localize.hpp"

#include <algorithm>

namespace spr {

TimestampLog instrument_run(const Program& prog, const TestCase& test, std::uint64_t fuel) {
  Machine m(prog);
  std::vector<std::uint64_t> stamps(m.labels().size(), 0);
  std::uint64_t clock = 0;
  Machine::StepObserver observer = [&](std::size_t idx) { stamps[idx] = ++clock; };
  m.run(test.input, AbstPlan::none(), fuel, &observer);
  TimestampLog log;
  for (std::size_t i = 0; i < stamps.size(); ++i) log.emplace(m.labels()[i], stamps[i]);
  return log;
}

std::vector<LocalizationScore> score_statements(const Program& prog, const TestSuite& neg, const TestSuite& pos,
                                                std::uint64_t fuel) {
  std::map<Label, LocalizationScore> scores;
  for (const auto& label : prog.labels()) scores[label].label = label;
  for (const auto& t : neg) {
    for (const auto& [label, stamp] : instrument_run(prog, t, fuel)) {
      if (stamp != 0) ++scores[label].a;
      scores[label].c += stamp;
    }
  }
  for (const auto& t : pos) {
    for (const auto& [label, stamp] : instrument_run(prog, t, fuel)) {
      if (stamp == 0) ++scores[label].b;
    }
  }
  std::vector<LocalizationScore> ranked;
  ranked.reserve(scores.size());
  for (auto& [_, s] : scores) ranked.push_back(std::move(s));
  std::sort(ranked.begin(), ranked.end(), [](const LocalizationScore& x, const LocalizationScore& y) {
    if (x.a != y.a) return x.a > y.a;
    if (x.b != y.b) return x.b > y.b;
    if (x.c != y.c) return x.c > y.c;
    return x.label < y.label;
  });
  for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].rank = i + 1;
  return ranked;
}

std::vector<Label> localize(const Program& prog, const TestSuite& neg, const TestSuite& pos, std::size_t limit,
                            std::uint64_t fuel) {
  std::vector<Label> out;
  for (const auto& s : score_statements(prog, neg, pos, fuel)) {
    if (out.size() >= limit) break;
    out.push_back(s.label);
  }
  return out;
}

}  // namespace spr
