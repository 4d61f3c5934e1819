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

#include "spr/transform.hpp"

namespace spr {

namespace {

PatchTemplate make_template(Program prog, Schema schema, const Label& target, std::string provenance) {
  PatchTemplate t;
  t.text = render_program(prog);
  t.schema = schema;
  t.target = target;
  t.tier = tier_of(schema, marker_of(prog));
  t.provenance = std::move(provenance);
  t.program = std::move(prog);
  return t;
}

// Places `s` at `label`, keeping next_of consistent with the statement kind.
void put(Program& prog, const Label& label, Statement s, std::optional<Label> next) {
  if (has_successor(s)) {
    prog.next_of[label] = std::move(*next);
  } else {
    prog.next_of.erase(label);
  }
  prog.stmt_of[label] = std::move(s);
}

// Copies the statement at `from` (with its successor) to the fresh label `to`.
void relocate(Program& prog, const Label& from, const Label& to) {
  put(prog, to, prog.at(from), prog.next(from));
}

}  // namespace

std::string_view to_string(Schema schema) {
  switch (schema) {
    case Schema::tighten: return "tighten";
    case Schema::loosen: return "loosen";
    case Schema::control: return "control";
    case Schema::guard: return "guard";
    case Schema::init: return "init";
    case Schema::rep: return "rep";
    case Schema::cprep: return "cprep";
  }
  return "?";
}

std::string_view to_string(Marker marker) {
  switch (marker) {
    case Marker::none: return "none";
    case Marker::abstc: return "abstc";
    case Marker::abstval: return "abstval";
  }
  return "?";
}

Marker marker_of(const Program& prog) {
  if (prog.contains_abstc()) return Marker::abstc;
  if (prog.contains_abstval()) return Marker::abstval;
  return Marker::none;
}

int tier_of(Schema schema, Marker marker) {
  switch (schema) {
    case Schema::tighten:
    case Schema::loosen:
      return 1;
    case Schema::control:
      return 2;
    case Schema::guard:
      return 3;
    case Schema::init:
      return 5;
    case Schema::rep:
      return marker == Marker::abstval ? 4 : 6;
    case Schema::cprep:
      return marker == Marker::abstval ? 4 : 7;
  }
  return 8;
}

std::vector<PatchTemplate> m_tighten(const Program& prog, const Label& target) {
  const auto* b = std::get_if<Branch>(&prog.at(target));
  if (!b) return {};
  Program p = prog;
  std::get<Branch>(p.stmt_of[target]).cond = Cond::conj(b->cond, Cond::negation(Cond::abstract()));
  return {make_template(std::move(p), Schema::tighten, target, "tighten " + target.str())};
}

std::vector<PatchTemplate> m_loosen(const Program& prog, const Label& target) {
  const auto* b = std::get_if<Branch>(&prog.at(target));
  if (!b) return {};
  Program p = prog;
  std::get<Branch>(p.stmt_of[target]).cond = Cond::disj(b->cond, Cond::abstract());
  return {make_template(std::move(p), Schema::loosen, target, "loosen " + target.str())};
}

std::vector<PatchTemplate> m_guard(const Program& prog, const Label& target) {
  const Statement& s = prog.at(target);
  if (!has_successor(s)) return {};
  const Label relocated = fresh_labels(prog, 1).front();
  const Label after = *prog.next(target);
  Program p = prog;
  relocate(p, target, relocated);
  put(p, target, Branch{Cond::conj(Cond::literal(true), Cond::negation(Cond::abstract())), relocated, after},
      std::nullopt);
  return {make_template(std::move(p), Schema::guard, target, "guard " + target.str())};
}

std::vector<PatchTemplate> m_control(const Program& prog, const Label& target, bool goto_control) {
  const auto fresh = fresh_labels(prog, 2);
  const Label& relocated = fresh[0];
  const Label& stop_label = fresh[1];
  std::vector<PatchTemplate> out;

  auto build = [&](const Label& jump, bool insert_stop, std::string provenance) {
    Program p = prog;
    relocate(p, target, relocated);
    if (insert_stop) put(p, stop_label, Stop{}, std::nullopt);
    put(p, target, Branch{Cond::disj(Cond::literal(false), Cond::abstract()), jump, relocated}, std::nullopt);
    out.push_back(make_template(std::move(p), Schema::control, target, std::move(provenance)));
  };

  build(stop_label, true, "control " + target.str() + " -> stop");
  if (goto_control) {
    for (const auto& l : prog.labels()) {
      // A jump back onto the inserted check itself can only spin.
      if (l == target) continue;
      build(l, false, "control " + target.str() + " -> goto " + l.str());
    }
  }
  return out;
}

std::vector<PatchTemplate> m_init(const Program& prog, const Label& target) {
  std::vector<PatchTemplate> out;
  const Label relocated = fresh_labels(prog, 1).front();
  for (const auto& v : vars(prog.at(target))) {
    Program p = prog;
    relocate(p, target, relocated);
    put(p, target, AssignConst{v, 0}, relocated);
    out.push_back(make_template(std::move(p), Schema::init, target, "init " + v + " before " + target.str()));
  }
  return out;
}

std::vector<PatchTemplate> m_rep(const Program& prog, const Label& target, bool ext_rep) {
  std::vector<PatchTemplate> out;
  const Statement& original = prog.at(target);
  for (auto& s : reps(prog, original, ext_rep)) {
    Program p = prog;
    std::string provenance = "rep " + target.str() + ": " + render_statement(original) + " => " + render_statement(s);
    put(p, target, std::move(s), prog.next(target));
    out.push_back(make_template(std::move(p), Schema::rep, target, std::move(provenance)));
  }
  return out;
}

std::vector<PatchTemplate> m_cprep(const Program& prog, const Label& target, bool ext_rep) {
  const Label relocated = fresh_labels(prog, 1).front();
  std::map<std::string, Statement> inserts;
  for (const auto& [_, s] : simple_statements(prog)) {
    inserts.emplace(render_statement(s), s);
    for (auto& r : reps(prog, s, ext_rep)) inserts.emplace(render_statement(r), std::move(r));
  }
  std::vector<PatchTemplate> out;
  out.reserve(inserts.size());
  for (auto& [text, s] : inserts) {
    Program p = prog;
    relocate(p, target, relocated);
    put(p, target, std::move(s), relocated);
    out.push_back(make_template(std::move(p), Schema::cprep, target, "cprep before " + target.str() + ": " + text));
  }
  return out;
}

}  // namespace spr
