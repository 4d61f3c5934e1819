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
#include <map>

#include "spr/synth.hpp"

namespace spr {

namespace {

bool solved(const ExecOutcome& o, const TestCase& t) {
  const auto* ok = std::get_if<ExecSuccess>(&o);
  return ok && output_equals(ok->output, t.output);
}

// Sort key for a candidate: (var, rhs, op, negated).
struct CondKey {
  std::string var;
  Atom rhs;
  CmpOp op = CmpOp::eq;
  bool negated = false;
};

std::optional<CondKey> key_of(const Cond& c) {
  bool negated = false;
  const Cond* base = &c;
  if (c.kind() == Cond::Kind::negation) {
    negated = true;
    base = &c.operand();
  }
  if (base->kind() != Cond::Kind::compare) return std::nullopt;
  return CondKey{base->var(), base->atom(), base->op(), negated};
}

// Constants order before variables on the right-hand side.
int rhs_class(const Atom& a) { return std::holds_alternative<std::int64_t>(a) ? 0 : 1; }

Program substitute_condition(const Program& tmpl, const Cond& c) {
  Program p = tmpl;
  for (auto& [_, s] : p.stmt_of) {
    if (auto* b = std::get_if<Branch>(&s); b && b->cond.contains_abstract()) {
      b->cond = b->cond.substitute_abstract(c);
    }
  }
  return p;
}

}  // namespace

std::optional<Evidence> condition_value_search(const Program& tmpl, const TestSuite& neg, const SynthConfig& cfg) {
  Machine m(tmpl);
  Evidence ev;
  for (const auto& t : neg) {
    ExecOutcome o = m.run(t.input, AbstPlan::none(), cfg.fuel);
    std::size_t trials = 1;
    while (!solved(o, t) && trials < cfg.max_flip_trials) {
      AbstPlan plan = trials + 1 == cfg.max_flip_trials ? AbstPlan::all_ones() : AbstPlan::replay(flip(recorded_of(o)));
      o = m.run(t.input, plan, cfg.fuel);
      ++trials;
    }
    if (!solved(o, t)) return std::nullopt;
    const auto& ok = std::get<ExecSuccess>(o);
    ev.recorded.insert(ev.recorded.end(), ok.recorded.begin(), ok.recorded.end());
    ev.envs.insert(ev.envs.end(), ok.envlog.begin(), ok.envlog.end());
  }
  return ev;
}

bool condition_before(const Cond& a, const Cond& b) {
  auto ka = key_of(a);
  auto kb = key_of(b);
  if (!ka || !kb) {
    if (ka.has_value() != kb.has_value()) return ka.has_value();
    return render_cond(a) < render_cond(b);
  }
  if (ka->var != kb->var) return ka->var < kb->var;
  if (rhs_class(ka->rhs) != rhs_class(kb->rhs)) return rhs_class(ka->rhs) < rhs_class(kb->rhs);
  if (ka->rhs != kb->rhs) return ka->rhs < kb->rhs;
  if (ka->op != kb->op) return ka->op < kb->op;
  return !ka->negated && kb->negated;
}

std::vector<Cond> condition_space(const std::vector<Env>& envs, bool ext) {
  std::map<std::string, std::set<std::int64_t>> observed;
  for (const auto& env : envs) {
    for (const auto& [v, k] : env.values()) observed[v].insert(k);
  }
  std::vector<Cond> out;
  auto both = [&](Cond c) {
    out.push_back(c);
    out.push_back(Cond::negation(std::move(c)));
  };
  for (const auto& [v, ks] : observed) {
    for (auto k : ks) {
      both(Cond::compare(CmpOp::eq, v, k));
      if (ext) {
        both(Cond::compare(CmpOp::lt, v, k));
        both(Cond::compare(CmpOp::gt, v, k));
      }
    }
  }
  if (ext) {
    for (auto i = observed.begin(); i != observed.end(); ++i) {
      for (auto j = std::next(i); j != observed.end(); ++j) {
        for (CmpOp op : {CmpOp::eq, CmpOp::lt, CmpOp::gt}) both(Cond::compare(op, i->first, Var{j->first}));
      }
    }
  }
  return out;
}

std::vector<ScoredCondition> rank_conditions(const Evidence& evidence, bool ext) {
  std::vector<ScoredCondition> scored;
  for (auto& c : condition_space(evidence.envs, ext)) {
    std::size_t s = score_condition(evidence.recorded, evidence.envs, c);
    scored.push_back({std::move(c), s});
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredCondition& a, const ScoredCondition& b) {
    if (a.score != b.score) return a.score > b.score;
    return condition_before(a.cond, b.cond);
  });
  return scored;
}

TemplateOutcome synthesize_condition(const PatchTemplate& tmpl, const TestSuite& neg, const TestSuite& pos,
                                     Validator& validate, const SynthConfig& cfg, std::size_t max_patches) {
  TemplateOutcome out;
  auto evidence = condition_value_search(tmpl.program, neg, cfg);
  if (!evidence) return out;
  out.stage1_passed = true;
  out.entered_stage2 = true;

  // Positive cases run with the semantics-preserving plan.
  Machine m(tmpl.program);
  for (const auto& t : pos) {
    ExecOutcome o = m.run(t.input, AbstPlan::none(), cfg.fuel);
    const Bits& r = recorded_of(o);
    const auto& s = envlog_of(o);
    evidence->recorded.insert(evidence->recorded.end(), r.begin(), r.end());
    evidence->envs.insert(evidence->envs.end(), s.begin(), s.end());
  }

  const auto ranked = rank_conditions(*evidence, cfg.ext_cond);
  const std::size_t n = std::min(cfg.top_conditions, ranked.size());
  for (std::size_t i = 0; i < n && out.patches.size() < max_patches; ++i) {
    Program candidate = substitute_condition(tmpl.program, ranked[i].cond);
    ++out.validations;
    if (!validate(candidate)) continue;
    CandidatePatch patch;
    patch.text = render_program(candidate);
    patch.program = std::move(candidate);
    patch.schema = tmpl.schema;
    patch.target = tmpl.target;
    patch.tier = tmpl.tier;
    patch.provenance = tmpl.provenance;
    patch.synthesized = render_cond(ranked[i].cond);
    out.patches.push_back(std::move(patch));
  }
  return out;
}

std::optional<CandidatePatch> synthesize_condition(const PatchTemplate& tmpl, const TestSuite& neg,
                                                   const TestSuite& pos, const SynthConfig& cfg) {
  Validator v(neg, pos, cfg.fuel);
  auto out = synthesize_condition(tmpl, neg, pos, v, cfg, 1);
  if (out.patches.empty()) return std::nullopt;
  return std::move(out.patches.front());
}

}  // namespace spr
