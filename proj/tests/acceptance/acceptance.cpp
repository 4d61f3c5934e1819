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

// Acceptance run over the bundled corpus and generated programs. Prints one
// PASS/FAIL line per criterion and exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "spr/bench.hpp"
#include "spr/localize.hpp"
#include "spr/synth.hpp"

namespace {

using namespace spr;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool same_run(const ExecOutcome& a, const ExecOutcome& b) {
  if (succeeded(a) != succeeded(b)) return false;
  return output_of(a) == output_of(b);
}

// Shared corpus state, computed once.
struct CorpusRun {
  Corpus corpus;
  std::vector<Sweep> baseline;  // full sweeps, default config
  std::vector<Sweep> extended;  // full sweeps, CExt + RExt, unbounded localization
  double baseline_seconds = 0;
  double extended_seconds = 0;
};

AnalysisConfig baseline_cfg() { return {}; }

AnalysisConfig extended_cfg() {
  AnalysisConfig cfg;
  cfg.space.loc_limit = 2000;  // covers every statement of the corpus programs
  cfg.space.ext_cond = true;
  cfg.space.ext_rep = true;
  return cfg;
}

Outcome semantics_preservation(const Corpus& corpus) {
  const auto t0 = Clock::now();
  std::set<std::string> seen;
  std::size_t templates = 0, runs = 0, mismatches = 0;
  for (const auto& d : corpus.defects) {
    TestSuite inputs = d.neg;
    inputs.insert(inputs.end(), d.pos.begin(), d.pos.end());
    inputs.insert(inputs.end(), d.heldout.begin(), d.heldout.end());
    Machine original(d.buggy);
    std::vector<ExecOutcome> expected;
    for (const auto& t : inputs) expected.push_back(original.run(t.input, AbstPlan::none()));
    for (bool goto_control : {false, true}) {
      SpaceConfig cfg;
      cfg.loc_limit = std::numeric_limits<std::size_t>::max();
      cfg.goto_control = goto_control;
      const auto targets = localize(d.buggy, d.neg, d.pos, cfg.loc_limit);
      for (const auto& tmpl : generate_space(d.buggy, targets, cfg)) {
        if (tmpl.marker() != Marker::abstc) continue;
        if (!seen.insert(d.id + "\n" + tmpl.text).second) continue;
        ++templates;
        Machine m(tmpl.program);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
          ++runs;
          if (!same_run(m.run(inputs[i].input, AbstPlan::none()), expected[i])) ++mismatches;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {templates > 200 && mismatches == 0 && secs < 30,
          fmt("%zu condition-schema templates, %zu runs, %zu mismatches, %.2f s", templates, runs, mismatches, secs)};
}

Bits increment(const Bits& r) {
  Bits out = r;
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i] == 0) {
      out[i] = 1;
      return out;
    }
    out[i] = 0;
  }
  return out;  // overflow: all zeros
}

Cond random_condition(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 5), val(0, 3), coin(0, 1);
  const std::string v = coin(rng) ? "x" : "y";
  Cond c = Cond::equals(v, val(rng));
  switch (pick(rng)) {
    case 0: c = Cond::compare(CmpOp::lt, v, std::int64_t{val(rng)}); break;
    case 1: c = Cond::compare(CmpOp::gt, v, Var{v == "x" ? "y" : "x"}); break;
    default: break;
  }
  return coin(rng) ? Cond::negation(c) : c;
}

Outcome flip_f_v_properties() {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> bit(0, 1), len16(0, 16), len12(0, 12), val(0, 3);
  std::size_t flip_fail = 0, f_fail = 0, v_fail = 0, v_incomplete = 0;

  for (int i = 0; i < 1000; ++i) {
    Bits r(static_cast<std::size_t>(len16(rng)));
    for (auto& b : r) b = bit(rng);
    Bits got = flip(r);
    const bool all_ones = std::all_of(r.begin(), r.end(), [](int b) { return b == 1; });
    if (all_ones) {
      if (!got.empty()) ++flip_fail;
      continue;
    }
    if (got.size() > r.size()) {
      ++flip_fail;
      continue;
    }
    got.resize(r.size(), 0);
    if (got != increment(r)) ++flip_fail;
  }

  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(len12(rng));
    Bits r(n);
    std::vector<Env> s(n);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = bit(rng);
      s[j].set("x", val(rng));
      s[j].set("y", val(rng));
    }
    const Cond c = random_condition(rng);
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    const Bits r1(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(cut)), r2(r.begin() + static_cast<std::ptrdiff_t>(cut), r.end());
    const std::vector<Env> s1(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cut)), s2(s.begin() + static_cast<std::ptrdiff_t>(cut), s.end());
    if (score_condition(r, s, c) != score_condition(r1, s1, c) + score_condition(r2, s2, c)) ++f_fail;
  }

  // Abstract-value cases: a print in a random program is replaced by
  // `print abstval`; expected outputs come from printing a hidden value.
  std::size_t cases = 0;
  while (cases < 200) {
    Program p = oracle::random_tiny_program(rng);
    std::vector<Label> prints;
    for (const auto& [l, s] : p.stmt_of) {
      if (std::holds_alternative<Print>(s)) prints.push_back(l);
    }
    if (prints.empty()) continue;
    const Label at = prints[std::uniform_int_distribution<std::size_t>(0, prints.size() - 1)(rng)];
    Program tmpl = p;
    tmpl.stmt_of[at] = PrintAbstval{};
    std::vector<Atom> pool;
    // Only variables still present once the print is replaced.
    for (const auto& v : vars(tmpl)) pool.emplace_back(Var{v});
    for (std::int64_t k = 0; k <= 2; ++k) pool.emplace_back(k);
    const Atom hidden = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    Program truth = p;
    truth.stmt_of[at] = Print{hidden};

    ValueCandidateSet set = ValueCandidateSet::universal();
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> negs;
    bool reached = false;
    for (int t = 0; t < 3; ++t) {
      std::vector<std::int64_t> in(oracle::read_count(p));
      for (auto& v : in) v = val(rng);
      const ExecOutcome want = exec(truth, in);
      const ExecOutcome got = exec(tmpl, in);
      std::vector<std::int64_t> expected;
      for (const auto& tok : output_of(want)) expected.push_back(tok.value);
      for (const auto& tok : output_of(got)) reached = reached || tok.abstval;
      set = narrow_values(output_of(got), expected, envlog_of(got), set);
      negs.emplace_back(in, expected);
    }
    if (!reached) continue;
    ++cases;
    if (set.is_universal() || !set.contains(hidden)) ++v_incomplete;
    if (set.is_universal()) continue;
    for (const auto& value : set.values()) {
      Program sub = p;
      sub.stmt_of[at] = Print{value};
      for (const auto& [in, expected] : negs) {
        if (!output_equals(output_of(exec(sub, in)), expected)) {
          ++v_fail;
          break;
        }
      }
    }
  }
  return {flip_fail == 0 && f_fail == 0 && v_fail == 0 && v_incomplete == 0,
          fmt("flip: 1000 sequences, %zu failures; F additivity: 500 splits, %zu failures; "
              "V: %zu cases, %zu unsound, %zu missing the hidden value",
              flip_fail, f_fail, cases, v_fail, v_incomplete)};
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  std::size_t agree = 0, plausible = 0;
  std::string first_disagreement;
  for (int i = 0; i < 100; ++i) {
    const auto inst = oracle::random_instance(rng);
    const bool engine = repair(inst.buggy, inst.neg, inst.pos, RepairOptions{}).found();
    const bool brute = oracle::brute_force_plausible(inst.buggy, inst.neg, inst.pos);
    if (engine == brute) {
      ++agree;
    } else if (first_disagreement.empty()) {
      first_disagreement = fmt("; first disagreement on instance %d (engine %d, oracle %d)", i, engine, brute);
    }
    plausible += brute ? 1 : 0;
  }
  const double secs = seconds_since(t0);
  return {agree == 100 && secs < 300,
          fmt("%zu/100 verdicts agree (%zu with a plausible patch), %.1f s%s", agree, plausible, secs,
              first_disagreement.c_str())};
}

Outcome corpus_repair(const CorpusRun& run) {
  const auto t0 = Clock::now();
  const long long threshold = run.corpus.meta_int("correct_first_threshold", 7);
  std::size_t correct_first = 0, missed = 0, abstc = 0, stage2 = 0;
  std::string missed_ids;
  for (std::size_t i = 0; i < run.corpus.defects.size(); ++i) {
    const Defect& d = run.corpus.defects[i];
    RepairOptions opt;
    opt.budget.max_templates = 5000;
    const RepairResult r = repair(d.buggy, d.neg, d.pos, opt);
    abstc += r.stats.abstc_templates;
    stage2 += r.stats.stage2_entries;
    const bool space_has_plausible = !run.baseline[i].plausible.empty();
    if (space_has_plausible && !r.found()) {
      ++missed;
      missed_ids += " " + d.id;
    }
    if (r.found() && adjudicate(r.patch->program, d).correct) ++correct_first;
  }
  const double secs = seconds_since(t0) + run.baseline_seconds;
  return {missed == 0 && static_cast<long long>(correct_first) >= threshold && secs < 600,
          fmt("%zu/%zu defects correct first (threshold %lld), %zu missed plausible%s; repair-mode staging "
              "%zu/%zu; %.1f s",
              correct_first, run.corpus.defects.size(), threshold, missed, missed_ids.c_str(), stage2, abstc, secs)};
}

Outcome staging_filter(const CorpusRun& run) {
  std::size_t abstc = 0, stage2 = 0;
  for (const auto& s : run.baseline) {
    abstc += s.abstc_templates;
    stage2 += s.stage2_entries;
  }
  const double ratio = abstc ? static_cast<double>(stage2) / static_cast<double>(abstc) : 0.0;
  return {abstc > 0 && ratio <= 0.20,
          fmt("%zu of %zu abstc templates reached condition generation (ratio %.4f, limit 0.20)", stage2, abstc,
              ratio)};
}

Outcome space_tradeoff(const CorpusRun& run) {
  std::size_t grew = 0, rank_ok = 0, incorrect_ok = 0, flips = 0;
  std::string problems, flipped;
  const std::size_t n = run.corpus.defects.size();
  for (std::size_t i = 0; i < n; ++i) {
    const SpaceReport a = space_report(run.baseline[i]);
    const SpaceReport b = space_report(run.extended[i]);
    const ExploreReport ea = explore(run.baseline[i], 1000, Order::spr_tiers());
    const ExploreReport eb = explore(run.extended[i], 1000, Order::spr_tiers());
    const std::string& id = a.defect_id;
    if (b.space_size > a.space_size) {
      ++grew;
    } else {
      problems += " " + id + ":space";
    }
    const bool rank_monotone = (!a.correct_in_space || b.correct_in_space) &&
                               (!a.correct_rank || !b.correct_rank || *b.correct_rank >= *a.correct_rank);
    if (rank_monotone) {
      ++rank_ok;
    } else {
      problems += " " + id + ":rank";
    }
    if (eb.plausible_found - eb.correct_found >= ea.plausible_found - ea.correct_found) {
      ++incorrect_ok;
    } else {
      problems += " " + id + ":incorrect";
    }
    if (!ea.blocked && eb.blocked) {
      ++flips;
      flipped += " " + id;
    }
  }
  return {grew == n && rank_ok == n && incorrect_ok == n && flips >= 1,
          fmt("space grew on %zu/%zu, rank monotone on %zu/%zu, incorrect-found monotone on %zu/%zu, "
              "unblocked->blocked:%s%s",
              grew, n, rank_ok, n, incorrect_ok, n, flipped.empty() ? " none" : flipped.c_str(),
              problems.empty() ? "" : ("; problems:" + problems).c_str())};
}

Outcome prioritization(const CorpusRun& run) {
  const std::regex shape(R"(^\d+(\.\d+)? / \d+(\.\d+)?$)");
  bool ok = true;
  std::string detail;
  for (const auto* sweeps : {&run.baseline, &run.extended}) {
    const OrderComparison cmp = compare_orders(*sweeps, 5000, 10, 100);
    const std::string tiers = format_cost_payoff(cmp.spr_tiers);
    const std::string random = format_cost_payoff(cmp.random_mean);
    ok = ok && cmp.spr_tiers.payoff + 1e-9 >= cmp.random_mean.payoff &&
         cmp.spr_tiers.payoff + 1e-9 >= cmp.random_expected.payoff && std::regex_match(tiers, shape) &&
         std::regex_match(random, shape);
    detail += fmt("%s%s: spr_tiers %s, random %s (exact %s) over %zu defects",
                  detail.empty() ? "" : "; ", config_name(sweeps->front().cfg).c_str(), tiers.c_str(),
                  random.c_str(), format_cost_payoff(cmp.random_expected).c_str(), cmp.defects_considered);
  }
  return {ok, detail};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const char* name, const Outcome& o) {
    std::printf("%s  criterion %d  %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  CorpusRun run;
  try {
    run.corpus = load_corpus(SPR_CORPUS_DIR);
  } catch (const std::exception& e) {
    std::printf("FAIL  corpus could not be loaded: %s\n", e.what());
    return 1;
  }

  report(1, "semantics preservation", semantics_preservation(run.corpus));
  report(2, "flip / F / V properties", flip_f_v_properties());
  report(3, "oracle equivalence", oracle_equivalence());

  auto t0 = Clock::now();
  for (const auto& d : run.corpus.defects) run.baseline.push_back(sweep(d, baseline_cfg(), 5000));
  run.baseline_seconds = seconds_since(t0);
  report(4, "corpus repair", corpus_repair(run));
  report(5, "staging filter", staging_filter(run));

  t0 = Clock::now();
  for (const auto& d : run.corpus.defects) {
    run.extended.push_back(sweep(d, extended_cfg(), std::numeric_limits<std::size_t>::max()));
  }
  run.extended_seconds = seconds_since(t0);
  report(6, "search-space tradeoff", space_tradeoff(run));
  report(7, "prioritization comparison", prioritization(run));

  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
