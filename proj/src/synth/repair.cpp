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

#include <stdexcept>

#include "spr/localize.hpp"
#include "spr/synth.hpp"

namespace spr {

RepairResult repair(const Program& prog, const TestSuite& neg, const TestSuite& pos, const RepairOptions& options) {
  {
    Machine m(prog);
    bool fails_some = false;
    for (const auto& t : neg) fails_some = fails_some || !passes(m, t, options.synth.fuel);
    if (!fails_some) throw std::invalid_argument("program already passes every negative test case");
  }

  const auto targets = localize(prog, neg, pos, options.space.loc_limit, options.synth.fuel);
  SynthConfig synth = options.synth;
  synth.ext_cond = synth.ext_cond || options.space.ext_cond;
  const auto space = generate_space(prog, targets, options.space);

  RepairResult result;
  result.stats.space_size = space.size();
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options.budget.max_seconds > 0) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(options.budget.max_seconds));
  }
  const std::size_t limit = std::min(options.budget.max_templates, space.size());
  auto& stats = result.stats;
  std::size_t evaluated = evaluate_in_order(
      space, limit, neg, pos, synth, 1, options.jobs, deadline, [&](std::size_t i, TemplateOutcome&& outcome) {
        const Marker marker = space[i].marker();
        if (marker == Marker::abstc) {
          ++stats.abstc_templates;
          if (outcome.entered_stage2) ++stats.stage2_entries;
        } else if (marker == Marker::abstval) {
          ++stats.abstval_templates;
          if (outcome.entered_stage2) ++stats.value_stage2_entries;
        }
        stats.validations += outcome.validations;
        if (outcome.patches.empty()) return true;
        result.patch = std::move(outcome.patches.front());
        return false;
      });
  stats.templates_evaluated = evaluated;
  stats.budget_exhausted = !result.found() && evaluated < space.size();
  return result;
}

}  // namespace spr
