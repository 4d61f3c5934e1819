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

#include "spr/synth.hpp"

namespace spr {

namespace {

// {v in c | sigma(v) = y} U {y | y in c}
ValueCandidateSet restrict_to(const ValueCandidateSet& c, const Env& sigma, std::int64_t y) {
  std::set<Atom> out;
  if (c.is_universal()) {
    for (const auto& [v, value] : sigma.values()) {
      if (value == y) out.insert(Var{v});
    }
    out.insert(y);
    return ValueCandidateSet::of(std::move(out));
  }
  for (const auto& a : c.values()) {
    if (const auto* v = std::get_if<Var>(&a)) {
      if (sigma.get(v->name) == y) out.insert(a);
    } else if (std::get<std::int64_t>(a) == y) {
      out.insert(a);
    }
  }
  return ValueCandidateSet::of(std::move(out));
}

Program substitute_value(const Program& tmpl, const Atom& value) {
  Program p = tmpl;
  for (auto& [_, s] : p.stmt_of) {
    if (std::holds_alternative<PrintAbstval>(s)) s = Print{value};
  }
  return p;
}

}  // namespace

ValueCandidateSet narrow_values(const Output& actual, std::span<const std::int64_t> expected,
                                const std::vector<Env>& s, const ValueCandidateSet& c) {
  // A length mismatch ends in an empty-versus-nonempty comparison.
  if (actual.size() != expected.size()) return ValueCandidateSet::of({});
  if (s.size() < actual.size()) {
    throw std::invalid_argument("narrow_values: fewer environments than output elements");
  }
  // The tail is narrowed before its head is filtered.
  ValueCandidateSet result = c;
  for (std::size_t i = actual.size(); i-- > 0;) {
    if (!actual[i].abstval) {
      if (actual[i].value != expected[i]) return ValueCandidateSet::of({});
      continue;
    }
    result = restrict_to(result, s[i], expected[i]);
  }
  return result;
}

TemplateOutcome synthesize_value(const PatchTemplate& tmpl, const TestSuite& neg, Validator& validate,
                                 const SynthConfig& cfg, std::size_t max_patches) {
  TemplateOutcome out;
  Machine m(tmpl.program);
  ValueCandidateSet candidates = ValueCandidateSet::universal();
  for (const auto& t : neg) {
    ExecOutcome o = m.run(t.input, AbstPlan::none(), cfg.fuel);
    const auto* ok = std::get_if<ExecSuccess>(&o);
    if (!ok) return out;
    candidates = narrow_values(ok->output, t.output, ok->envlog, candidates);
    if (candidates.empty()) return out;
  }
  out.stage1_passed = true;
  out.entered_stage2 = true;

  std::set<Atom> pool;
  if (candidates.is_universal()) {
    // Never narrowed: fall back to what the program itself mentions.
    for (const auto& v : vars(tmpl.program)) pool.insert(Var{v});
    for (auto k : consts(tmpl.program)) pool.insert(k);
  } else {
    pool = candidates.values();
  }
  for (const auto& value : pool) {
    if (out.patches.size() >= max_patches) break;
    Program candidate = substitute_value(tmpl.program, value);
    ++out.validations;
    if (!validate(candidate)) continue;
    CandidatePatch patch;
    patch.text = render_program(candidate);
    patch.program = std::move(candidate);
    patch.schema = tmpl.schema;
    patch.target = tmpl.target;
    patch.tier = tmpl.tier;
    patch.provenance = tmpl.provenance;
    patch.synthesized = render_atom(value);
    out.patches.push_back(std::move(patch));
  }
  return out;
}

std::optional<CandidatePatch> synthesize_value(const PatchTemplate& tmpl, const TestSuite& neg,
                                               const TestSuite& pos, const SynthConfig& cfg) {
  Validator v(neg, pos, cfg.fuel);
  auto out = synthesize_value(tmpl, neg, v, cfg, 1);
  if (out.patches.empty()) return std::nullopt;
  return std::move(out.patches.front());
}

}  // namespace spr
