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
#include <atomic>
#include <numeric>
#include <thread>

#include "spr/synth.hpp"

namespace spr {

Validator::Validator(const TestSuite& neg, const TestSuite& pos, std::uint64_t fuel)
    : neg_(neg), pos_(pos), pos_order_(pos.size()), fuel_(fuel) {
  std::iota(pos_order_.begin(), pos_order_.end(), std::size_t{0});
}

bool Validator::operator()(const Program& candidate) {
  ++validations_;
  Machine m(candidate);
  for (const auto& t : neg_) {
    if (!passes(m, t, fuel_)) return false;
  }
  for (std::size_t i = 0; i < pos_order_.size(); ++i) {
    if (!passes(m, pos_[pos_order_[i]], fuel_)) {
      std::rotate(pos_order_.begin(), pos_order_.begin() + static_cast<std::ptrdiff_t>(i),
                  pos_order_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return false;
    }
  }
  return true;
}

TemplateOutcome evaluate_template(const PatchTemplate& tmpl, const TestSuite& neg, const TestSuite& pos,
                                  Validator& validate, const SynthConfig& cfg, std::size_t max_patches) {
  switch (tmpl.marker()) {
    case Marker::abstc:
      return synthesize_condition(tmpl, neg, pos, validate, cfg, max_patches);
    case Marker::abstval:
      return synthesize_value(tmpl, neg, validate, cfg, max_patches);
    case Marker::none:
      break;
  }
  TemplateOutcome out;
  out.stage1_passed = true;
  out.validations = 1;
  if (max_patches > 0 && validate(tmpl.program)) {
    CandidatePatch patch;
    patch.program = tmpl.program;
    patch.text = tmpl.text;
    patch.schema = tmpl.schema;
    patch.target = tmpl.target;
    patch.tier = tmpl.tier;
    patch.provenance = tmpl.provenance;
    out.patches.push_back(std::move(patch));
  }
  return out;
}

std::size_t evaluate_in_order(const std::vector<PatchTemplate>& templates, std::size_t limit, const TestSuite& neg,
                              const TestSuite& pos, const SynthConfig& cfg, std::size_t max_patches,
                              std::size_t jobs, std::optional<std::chrono::steady_clock::time_point> deadline,
                              const CommitFn& commit) {
  limit = std::min(limit, templates.size());
  jobs = std::max<std::size_t>(jobs, 1);
  auto expired = [&] { return deadline && std::chrono::steady_clock::now() >= *deadline; };

  auto finish = [&](std::size_t i, TemplateOutcome&& outcome) {
    for (auto& p : outcome.patches) p.template_rank = i + 1;
    return commit(i, std::move(outcome));
  };

  if (jobs == 1) {
    Validator validate(neg, pos, cfg.fuel);
    for (std::size_t i = 0; i < limit; ++i) {
      if (expired()) return i;
      if (!finish(i, evaluate_template(templates[i], neg, pos, validate, cfg, max_patches))) return i + 1;
    }
    return limit;
  }

  // Speculative batches; results are committed in index order.
  std::vector<Validator> validators;
  validators.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) validators.emplace_back(neg, pos, cfg.fuel);
  const std::size_t batch = jobs * 8;
  std::size_t committed = 0;
  while (committed < limit) {
    if (expired()) return committed;
    const std::size_t end = std::min(limit, committed + batch);
    std::vector<TemplateOutcome> results(end - committed);
    std::atomic<std::size_t> cursor{committed};
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = cursor++; i < end; i = cursor++) {
          results[i - committed] = evaluate_template(templates[i], neg, pos, validators[w], cfg, max_patches);
        }
      });
    }
    workers.clear();
    for (std::size_t i = committed; i < end; ++i) {
      if (!finish(i, std::move(results[i - committed]))) return i + 1;
    }
    committed = end;
  }
  return committed;
}

}  // namespace spr
