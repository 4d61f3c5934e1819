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
#include <random>

#include "spr/bench.hpp"
#include "spr/localize.hpp"

namespace spr {

Sweep sweep(const Defect& defect, const AnalysisConfig& cfg, std::size_t template_budget) {
  const auto targets = localize(defect.buggy, defect.neg, defect.pos, cfg.space.loc_limit, cfg.synth.fuel);
  const auto space = generate_space(defect.buggy, targets, cfg.space);
  SynthConfig synth = cfg.synth;
  synth.ext_cond = synth.ext_cond || cfg.space.ext_cond;
  const Adjudicator adjudicator(defect, cfg.adjudication);

  Sweep out;
  out.defect_id = defect.id;
  out.cfg = cfg.space;
  out.space_size = space.size();
  const std::size_t limit = std::min(template_budget, space.size());
  out.templates_evaluated = evaluate_in_order(
      space, limit, defect.neg, defect.pos, synth, cfg.max_patches_per_template, cfg.jobs, std::nullopt,
      [&](std::size_t i, TemplateOutcome&& outcome) {
        const Marker marker = space[i].marker();
        if (marker == Marker::abstc) {
          ++out.abstc_templates;
          if (outcome.entered_stage2) ++out.stage2_entries;
        } else if (marker == Marker::abstval) {
          ++out.abstval_templates;
          if (outcome.entered_stage2) ++out.value_stage2_entries;
        }
        for (auto& p : outcome.patches) {
          PlausiblePatch pp;
          pp.text = render_program(p.program);
          pp.synthesized = p.synthesized;
          pp.template_rank = p.template_rank;
          pp.schema = p.schema;
          pp.target = p.target;
          pp.tier = p.tier;
          pp.correct = adjudicator(p.program).correct;
          out.plausible.push_back(std::move(pp));
        }
        return true;
      });
  return out;
}

SpaceReport space_report(const Sweep& full) {
  SpaceReport r;
  r.defect_id = full.defect_id;
  r.cfg = full.cfg;
  r.space_size = full.space_size;
  r.plausible_in_space = full.plausible.size();
  r.truncated = !full.complete();
  r.abstc_templates = full.abstc_templates;
  r.stage2_entries = full.stage2_entries;
  for (const auto& p : full.plausible) {
    if (p.correct) {
      r.correct_in_space = true;
      r.correct_rank = p.template_rank;
      break;
    }
  }
  return r;
}

SpaceReport analyze_space(const Defect& defect, const AnalysisConfig& cfg, std::size_t template_budget) {
  return space_report(sweep(defect, cfg, template_budget));
}

std::string Order::name() const {
  return kind == Kind::spr_tiers ? std::string("spr_tiers") : "random(" + std::to_string(seed) + ")";
}

ExploreReport explore(const Sweep& full, std::size_t budget, const Order& order) {
  ExploreReport r;
  r.defect_id = full.defect_id;
  r.cfg = full.cfg;
  r.budget = budget;
  r.order = order.name();
  r.templates_evaluated = std::min(budget, full.templates_evaluated);
  r.correct_in_space = std::any_of(full.plausible.begin(), full.plausible.end(),
                                   [](const PlausiblePatch& p) { return p.correct; });
  for (const auto& p : full.plausible) {
    if (p.template_rank <= budget) r.patches.push_back(p);
  }
  if (order.kind == Order::Kind::random) {
    std::mt19937_64 rng(order.seed);
    std::shuffle(r.patches.begin(), r.patches.end(), rng);
  }
  r.plausible_found = r.patches.size();
  r.correct_found = static_cast<std::size_t>(
      std::count_if(r.patches.begin(), r.patches.end(), [](const PlausiblePatch& p) { return p.correct; }));
  r.first_plausible_is_correct = !r.patches.empty() && r.patches.front().correct;
  r.blocked = !r.patches.empty() && !r.first_plausible_is_correct && r.correct_in_space;
  r.timed_out = r.patches.empty();
  return r;
}

ExploreReport explore(const Defect& defect, const AnalysisConfig& cfg, std::size_t budget, const Order& order) {
  return explore(sweep(defect, cfg, std::numeric_limits<std::size_t>::max()), budget, order);
}

std::string config_name(const SpaceConfig& cfg) {
  std::string ext;
  if (cfg.ext_cond) ext = "CExt";
  if (cfg.ext_rep) ext += ext.empty() ? "RExt" : "+RExt";
  if (ext.empty()) ext = "No";
  return std::to_string(cfg.loc_limit) + " " + ext;
}

}  // namespace spr
