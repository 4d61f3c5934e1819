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

#pragma once

// Staged repair. A template containing `abstc` first has to show that some
// sequence of abstract-condition outcomes fixes every negative case (stage
// one); only then are concrete conditions generated from the recorded
// environments and validated (stage two). Templates containing `abstval`
// narrow the printable values against the expected outputs before
// validating each survivor.

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spr/interp.hpp"
#include "spr/lang.hpp"
#include "spr/transform.hpp"

namespace spr {

struct SynthConfig {
  std::size_t max_flip_trials = 11;  // executions per negative case, the last one forcing 1s
  std::size_t top_conditions = 20;
  std::uint64_t fuel = kDefaultFuel;
  bool ext_cond = false;
};

// Drops trailing 1s and turns the last 0 into a 1; flip([]) = [].
Bits flip(const Bits& r);

// Number of positions where `c` evaluated on s[i] equals r[i]. Throws
// std::invalid_argument when the sequences differ in length.
std::size_t score_condition(const Bits& r, const std::vector<Env>& s, const Cond& c);

// Recorded abstract-condition outcomes and the environment at each one.
struct Evidence {
  Bits recorded;
  std::vector<Env> envs;
};

// Searches, per negative case, for an outcome sequence making the case
// pass. nullopt as soon as one case exhausts its trials.
std::optional<Evidence> condition_value_search(const Program& tmpl, const TestSuite& neg, const SynthConfig& cfg);

// Candidate conditions drawn from the values observed in `envs`:
// (v==k) and !(v==k); with `ext` also </> against constants and
// comparisons between variables, each with its negation.
std::vector<Cond> condition_space(const std::vector<Env>& envs, bool ext);

// Total order used to break score ties: compared variable, then the
// right-hand side (constants before variables), then operator, then
// positive before negated.
bool condition_before(const Cond& a, const Cond& b);

struct ScoredCondition {
  Cond cond;
  std::size_t score = 0;
};

// condition_space(evidence.envs) ordered by descending score, ties by
// condition_before.
std::vector<ScoredCondition> rank_conditions(const Evidence& evidence, bool ext);

// Explicit set of replacement values, or the universal set.
class ValueCandidateSet {
 public:
  static ValueCandidateSet universal() { return ValueCandidateSet(true, {}); }
  static ValueCandidateSet of(std::set<Atom> values) { return ValueCandidateSet(false, std::move(values)); }

  bool is_universal() const { return universal_; }
  bool empty() const { return !universal_ && values_.empty(); }
  bool contains(const Atom& a) const { return universal_ || values_.contains(a); }
  // Only meaningful for explicit sets. Variables order before constants.
  const std::set<Atom>& values() const { return values_; }

  friend bool operator==(const ValueCandidateSet&, const ValueCandidateSet&) = default;

 private:
  ValueCandidateSet(bool universal, std::set<Atom> values) : universal_(universal), values_(std::move(values)) {}
  bool universal_;
  std::set<Atom> values_;
};

// Values that, printed in place of each abstval token, turn `actual` into
// `expected`. `s` holds one environment per element of `actual`.
ValueCandidateSet narrow_values(const Output& actual, std::span<const std::int64_t> expected,
                                const std::vector<Env>& s, const ValueCandidateSet& c);

// A fully concrete program produced from a template.
struct CandidatePatch {
  Program program;
  std::string text;
  Schema schema = Schema::rep;
  Label target;
  int tier = 0;
  std::string provenance;
  std::string synthesized;         // condition or value filled in, if any
  std::size_t template_rank = 0;   // 1-based position in the space
};

// Runs test_all with negative cases first. A positive case that rejects a
// candidate is moved to the front for the next one.
class Validator {
 public:
  Validator(const TestSuite& neg, const TestSuite& pos, std::uint64_t fuel = kDefaultFuel);

  bool operator()(const Program& candidate);
  std::size_t validations() const { return validations_; }

 private:
  TestSuite neg_;
  TestSuite pos_;
  std::vector<std::size_t> pos_order_;
  std::uint64_t fuel_;
  std::size_t validations_ = 0;
};

struct TemplateOutcome {
  std::vector<CandidatePatch> patches;
  bool stage1_passed = false;
  bool entered_stage2 = false;
  std::size_t validations = 0;
};

// Each synthesize_* returns up to `max_patches` validated patches, in the
// order they were tried.
TemplateOutcome synthesize_condition(const PatchTemplate& tmpl, const TestSuite& neg, const TestSuite& pos,
                                     Validator& validate, const SynthConfig& cfg, std::size_t max_patches = 1);
TemplateOutcome synthesize_value(const PatchTemplate& tmpl, const TestSuite& neg, Validator& validate,
                                 const SynthConfig& cfg, std::size_t max_patches = 1);
TemplateOutcome evaluate_template(const PatchTemplate& tmpl, const TestSuite& neg, const TestSuite& pos,
                                  Validator& validate, const SynthConfig& cfg, std::size_t max_patches = 1);

// Convenience forms returning the first validated patch.
std::optional<CandidatePatch> synthesize_condition(const PatchTemplate& tmpl, const TestSuite& neg,
                                                   const TestSuite& pos, const SynthConfig& cfg = {});
std::optional<CandidatePatch> synthesize_value(const PatchTemplate& tmpl, const TestSuite& neg,
                                               const TestSuite& pos, const SynthConfig& cfg = {});

struct Budget {
  std::size_t max_templates = std::numeric_limits<std::size_t>::max();
  double max_seconds = 0;  // 0 disables the wall-clock cap
};

// Evaluates templates [0, limit) on `jobs` workers and hands outcomes to
// `commit` strictly in template order. Workers may run ahead; anything
// after the point where `commit` returns false is discarded. Returns the
// number of committed templates.
using CommitFn = std::function<bool(std::size_t index, TemplateOutcome&& outcome)>;
std::size_t evaluate_in_order(const std::vector<PatchTemplate>& templates, std::size_t limit, const TestSuite& neg,
                              const TestSuite& pos, const SynthConfig& cfg, std::size_t max_patches,
                              std::size_t jobs, std::optional<std::chrono::steady_clock::time_point> deadline,
                              const CommitFn& commit);

struct RepairOptions {
  SpaceConfig space;
  SynthConfig synth;
  Budget budget;
  std::size_t jobs = 1;
};

struct RepairStats {
  std::size_t space_size = 0;
  std::size_t templates_evaluated = 0;
  std::size_t abstc_templates = 0;
  std::size_t stage2_entries = 0;
  std::size_t abstval_templates = 0;
  std::size_t value_stage2_entries = 0;
  std::size_t validations = 0;
  bool budget_exhausted = false;
};

struct RepairResult {
  std::optional<CandidatePatch> patch;
  RepairStats stats;

  bool found() const { return patch.has_value(); }
  std::optional<std::size_t> plausible_rank() const {
    if (!patch) return std::nullopt;
    return patch->template_rank;
  }
};

// Throws std::invalid_argument if `prog` already passes every negative case.
RepairResult repair(const Program& prog, const TestSuite& neg, const TestSuite& pos, const RepairOptions& options);

}  // namespace spr
