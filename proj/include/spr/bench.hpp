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

// Seeded-defect corpus, patch adjudication, search-space analysis and the
// comparison of patch orderings, plus the `spr` command line.

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spr/interp.hpp"
#include "spr/lang.hpp"
#include "spr/synth.hpp"
#include "spr/transform.hpp"

namespace spr {

// Malformed corpus entry; `path` points at the offending file.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::filesystem::path path, const std::string& message);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

struct Defect {
  std::string id;
  std::string description;
  std::filesystem::path dir;
  Program buggy;
  TestSuite neg;
  TestSuite pos;
  TestSuite heldout;  // only used to adjudicate correctness
  std::optional<Program> reference;
  std::map<std::string, std::string> meta;
};

struct Corpus {
  std::filesystem::path dir;
  std::vector<Defect> defects;  // ordered by id
  std::map<std::string, std::string> meta;

  // Integer metadata value, or `fallback` when absent.
  long long meta_int(const std::string& key, long long fallback) const;
};

// Reads `program.spr`, `tests/neg`, `tests/pos`, `heldout`, optional
// `reference.spr` and `meta`. Throws CorpusError.
Defect load_defect(const std::filesystem::path& dir);
// Every subdirectory of `dir` is a defect; `dir/corpus.meta` holds
// corpus-wide key=value settings.
Corpus load_corpus(const std::filesystem::path& dir);
// `key=value` lines; `#` starts a comment.
std::map<std::string, std::string> parse_meta(std::string_view text);

// Problems with a loaded defect (buggy passes every negative case,
// reference fails a case, ...). Empty when consistent.
std::vector<std::string> check_defect(const Defect& defect, std::uint64_t fuel = kDefaultFuel);

struct AdjudicationConfig {
  std::size_t battery_size = 200;  // fuzz inputs compared against the reference
  std::uint64_t seed = 1;
  std::uint64_t fuel = 100'000;
  std::int64_t value_spread = 16;  // fuzz values range over consts +- spread
};

// Deterministic fuzz inputs shaped like the defect's own test inputs.
std::vector<std::vector<std::int64_t>> fuzz_battery(const Defect& defect, const AdjudicationConfig& cfg);

struct Verdict {
  bool correct = false;
  std::string reason;  // first distinguishing case when incorrect
};

// Correct iff the program passes validation and held-out cases and, when
// a reference exists, behaves like it on every battery input.
Verdict adjudicate(const Program& patched, const Defect& defect, const AdjudicationConfig& cfg = {});

// Adjudication with the battery computed once.
class Adjudicator {
 public:
  Adjudicator(const Defect& defect, const AdjudicationConfig& cfg = {});
  Verdict operator()(const Program& patched) const;
  std::size_t battery_size() const { return battery_.size(); }

 private:
  const Defect& defect_;
  AdjudicationConfig cfg_;
  std::vector<std::vector<std::int64_t>> battery_;
  std::vector<ExecOutcome> expected_;
};

struct AnalysisConfig {
  SpaceConfig space;
  SynthConfig synth;
  AdjudicationConfig adjudication;
  std::size_t max_patches_per_template = 64;
  std::size_t jobs = 1;
};

struct PlausiblePatch {
  std::string text;         // rendered patched program
  std::string synthesized;  // condition or value chosen, if any
  std::size_t template_rank = 0;
  Schema schema = Schema::rep;
  Label target;
  int tier = 0;
  bool correct = false;
};

// Every plausible patch found in the first `templates_evaluated` templates
// of the space, in discovery order.
struct Sweep {
  std::string defect_id;
  SpaceConfig cfg;
  std::size_t space_size = 0;
  std::size_t templates_evaluated = 0;
  std::size_t abstc_templates = 0;
  std::size_t stage2_entries = 0;
  std::size_t abstval_templates = 0;
  std::size_t value_stage2_entries = 0;
  std::vector<PlausiblePatch> plausible;

  bool complete() const { return templates_evaluated == space_size; }
};

Sweep sweep(const Defect& defect, const AnalysisConfig& cfg, std::size_t template_budget);

struct SpaceReport {
  std::string defect_id;
  SpaceConfig cfg;
  std::size_t space_size = 0;
  bool correct_in_space = false;
  std::optional<std::size_t> correct_rank;  // 1-based template rank
  std::size_t plausible_in_space = 0;
  bool truncated = false;  // not every template was evaluated
  std::size_t abstc_templates = 0;
  std::size_t stage2_entries = 0;
};

SpaceReport space_report(const Sweep& full);
SpaceReport analyze_space(const Defect& defect, const AnalysisConfig& cfg,
                          std::size_t template_budget = std::numeric_limits<std::size_t>::max());

struct Order {
  enum class Kind { spr_tiers, random };
  Kind kind = Kind::spr_tiers;
  std::uint64_t seed = 0;

  static Order spr_tiers() { return {}; }
  static Order random(std::uint64_t seed) { return {Kind::random, seed}; }
  std::string name() const;
};

struct ExploreReport {
  std::string defect_id;
  SpaceConfig cfg;
  std::size_t budget = 0;
  std::string order;
  std::size_t templates_evaluated = 0;
  std::size_t plausible_found = 0;
  std::size_t correct_found = 0;
  bool first_plausible_is_correct = false;
  bool blocked = false;
  bool timed_out = false;
  bool correct_in_space = false;
  std::vector<PlausiblePatch> patches;  // in review order
};

// Explores the first `budget` templates of an already computed full sweep.
ExploreReport explore(const Sweep& full, std::size_t budget, const Order& order);
ExploreReport explore(const Defect& defect, const AnalysisConfig& cfg, std::size_t budget, const Order& order);

// Plausible patches in review order, each marked correct or not.
using ReviewList = std::vector<bool>;

struct CostPayoff {
  double cost = 0;
  double payoff = 0;
};

// Reviewing up to k patches: cost counts patches looked at until the first
// correct one (or k, or the list end), payoff is 1 if a correct one was seen.
CostPayoff review(const ReviewList& list, std::size_t k);
// Expected review outcome over all orderings of `list`.
CostPayoff expected_random_review(const ReviewList& list, std::size_t k);

struct OrderComparison {
  std::size_t k = 10;
  std::size_t seeds = 0;
  std::size_t defects_considered = 0;
  CostPayoff spr_tiers;
  CostPayoff random_mean;      // averaged over seeded shuffles
  CostPayoff random_expected;  // exact expectation over all orderings
};

// Sums over the defects whose space contains a correct patch.
OrderComparison compare_orders(const std::vector<Sweep>& full_sweeps, std::size_t budget, std::size_t k,
                               std::size_t seeds, std::uint64_t seed = 1);

// "X / Y" with X the cost and Y the payoff.
std::string format_cost_payoff(const CostPayoff& cp);

// Config label in the style "200 CExt+RExt".
std::string config_name(const SpaceConfig& cfg);

// Reports. JSON documents use nlohmann::json; TSV has a header line.
std::string space_reports_json(const std::vector<SpaceReport>& reports);
std::string space_reports_tsv(const std::vector<SpaceReport>& reports);
std::string explore_reports_json(const std::vector<ExploreReport>& reports);
std::string explore_reports_tsv(const std::vector<ExploreReport>& reports);
std::string comparison_json(const OrderComparison& cmp, const SpaceConfig& cfg);
std::string comparison_tsv(const OrderComparison& cmp, const SpaceConfig& cfg);

// One corpus-level summary row: config, correct in space, correct first,
// plausible & blocked X(Y), timeout X(Y), mean space size, mean correct
// rank, plausible X(Y), correct X(Y).
struct SummaryRow {
  std::string config;
  std::size_t correct_in_space = 0;
  std::size_t correct_first = 0;
  std::size_t plausible_first = 0;  // first plausible is incorrect
  std::size_t blocked = 0;
  std::size_t timeout = 0;
  std::size_t timeout_with_correct = 0;
  double mean_space_size = 0;
  double mean_correct_rank = 0;
  std::size_t defects_with_plausible = 0;
  std::size_t plausible_total = 0;
  std::size_t defects_with_correct = 0;
  std::size_t correct_total = 0;
};

SummaryRow summarize(const std::vector<SpaceReport>& spaces, const std::vector<ExploreReport>& explores);
std::string summary_tsv(const std::vector<SummaryRow>& rows);

// Unified diff of two texts, three lines of context.
std::string unified_diff(const std::string& before, const std::string& after, const std::string& before_name = "a",
                         const std::string& after_name = "b");

// Entry point of the `spr` tool. Exit 0 on success, 1 when no repair was
// found, 2 on usage or corpus errors.
int run_cli(int argc, const char* const* argv);

}  // namespace spr
