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

#include <random>

#include "spr/bench.hpp"

namespace spr {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool same_behaviour(const ExecOutcome& a, const ExecOutcome& b) {
  if (a.index() != b.index()) return false;
  if (const auto* sa = std::get_if<ExecSuccess>(&a)) return sa->output == std::get<ExecSuccess>(b).output;
  return std::get<ExecBottom>(a).cause == std::get<ExecBottom>(b).cause;
}

std::string show(const std::vector<std::int64_t>& input) {
  std::string s;
  for (auto v : input) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "[" + s + "]";
}

}  // namespace

std::vector<std::vector<std::int64_t>> fuzz_battery(const Defect& defect, const AdjudicationConfig& cfg) {
  std::vector<std::size_t> lengths;
  std::vector<std::int64_t> pool{0};
  for (const auto* suite : {&defect.neg, &defect.pos, &defect.heldout}) {
    for (const auto& t : *suite) {
      lengths.push_back(t.input.size());
      pool.insert(pool.end(), t.input.begin(), t.input.end());
    }
  }
  for (auto k : consts(defect.buggy)) pool.push_back(k);
  if (defect.reference) {
    for (auto k : consts(*defect.reference)) pool.push_back(k);
  }
  if (lengths.empty()) lengths.push_back(0);

  std::mt19937_64 rng(cfg.seed ^ fnv1a(defect.id));
  std::uniform_int_distribution<std::size_t> pick_len(0, lengths.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_val(0, pool.size() - 1);
  std::uniform_int_distribution<std::int64_t> jitter(-cfg.value_spread, cfg.value_spread);
  std::vector<std::vector<std::int64_t>> battery;
  battery.reserve(cfg.battery_size);
  for (std::size_t i = 0; i < cfg.battery_size; ++i) {
    std::vector<std::int64_t> input(lengths[pick_len(rng)]);
    for (auto& v : input) {
      // Half the values sit exactly on interesting constants.
      v = pool[pick_val(rng)];
      if (rng() & 1) v += jitter(rng);
    }
    battery.push_back(std::move(input));
  }
  return battery;
}

Adjudicator::Adjudicator(const Defect& defect, const AdjudicationConfig& cfg) : defect_(defect), cfg_(cfg) {
  if (defect.reference) {
    battery_ = fuzz_battery(defect, cfg);
    Machine ref(*defect.reference);
    expected_.reserve(battery_.size());
    for (const auto& in : battery_) expected_.push_back(ref.run(in, AbstPlan::none(), cfg.fuel));
  }
}

Verdict Adjudicator::operator()(const Program& patched) const {
  Machine m(patched);
  for (const auto* suite : {&defect_.neg, &defect_.pos, &defect_.heldout}) {
    for (const auto& t : *suite) {
      if (!passes(m, t, cfg_.fuel)) return {false, "fails case " + t.name};
    }
  }
  for (std::size_t i = 0; i < battery_.size(); ++i) {
    if (!same_behaviour(m.run(battery_[i], AbstPlan::none(), cfg_.fuel), expected_[i])) {
      return {false, "differs from reference on input " + show(battery_[i])};
    }
  }
  return {true, {}};
}

Verdict adjudicate(const Program& patched, const Defect& defect, const AdjudicationConfig& cfg) {
  return Adjudicator(defect, cfg)(patched);
}

}  // namespace spr
