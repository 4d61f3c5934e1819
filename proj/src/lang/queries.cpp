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

#include "spr/lang.hpp"

namespace spr {

namespace {

void collect_vars(const Cond& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case Cond::Kind::compare:
      out.insert(c.var());
      if (const auto* v = std::get_if<Var>(&c.atom())) out.insert(v->name);
      break;
    case Cond::Kind::conj:
    case Cond::Kind::disj:
      collect_vars(c.lhs(), out);
      collect_vars(c.rhs(), out);
      break;
    case Cond::Kind::negation:
      collect_vars(c.operand(), out);
      break;
    case Cond::Kind::literal:
    case Cond::Kind::abstract:
      break;
  }
}

void collect_consts(const Cond& c, std::set<std::int64_t>& out) {
  switch (c.kind()) {
    case Cond::Kind::compare:
      if (const auto* k = std::get_if<std::int64_t>(&c.atom())) out.insert(*k);
      break;
    case Cond::Kind::conj:
    case Cond::Kind::disj:
      collect_consts(c.lhs(), out);
      collect_consts(c.rhs(), out);
      break;
    case Cond::Kind::negation:
      collect_consts(c.operand(), out);
      break;
    case Cond::Kind::literal:
    case Cond::Kind::abstract:
      break;
  }
}

void add_atom_var(const Atom& a, std::set<std::string>& out) {
  if (const auto* v = std::get_if<Var>(&a)) out.insert(v->name);
}

void add_atom_const(const Atom& a, std::set<std::int64_t>& out) {
  if (const auto* k = std::get_if<std::int64_t>(&a)) out.insert(*k);
}

}  // namespace

std::set<std::string> vars(const Cond& c) {
  std::set<std::string> out;
  collect_vars(c, out);
  return out;
}

std::set<std::string> vars(const Statement& s) {
  std::set<std::string> out;
  if (const auto* a = std::get_if<Assign>(&s)) {
    out.insert(a->dst);
    add_atom_var(a->lhs, out);
    add_atom_var(a->rhs, out);
  } else if (const auto* ac = std::get_if<AssignConst>(&s)) {
    out.insert(ac->dst);
  } else if (const auto* r = std::get_if<Read>(&s)) {
    out.insert(r->dst);
  } else if (const auto* p = std::get_if<Print>(&s)) {
    add_atom_var(p->value, out);
  } else if (const auto* b = std::get_if<Branch>(&s)) {
    collect_vars(b->cond, out);
  }
  return out;
}

std::set<std::string> vars(const Program& prog) {
  std::set<std::string> out;
  for (const auto& [_, s] : prog.stmt_of) out.merge(vars(s));
  return out;
}

std::set<std::int64_t> consts(const Program& prog) {
  std::set<std::int64_t> out;
  for (const auto& [_, s] : prog.stmt_of) {
    if (const auto* a = std::get_if<Assign>(&s)) {
      add_atom_const(a->lhs, out);
      add_atom_const(a->rhs, out);
    } else if (const auto* ac = std::get_if<AssignConst>(&s)) {
      out.insert(ac->value);
    } else if (const auto* p = std::get_if<Print>(&s)) {
      add_atom_const(p->value, out);
    } else if (const auto* b = std::get_if<Branch>(&s)) {
      // Bare 1/0 literals of the condition grammar are booleans, not values.
      collect_consts(b->cond, out);
    }
  }
  return out;
}

std::vector<std::pair<Label, Statement>> simple_statements(const Program& prog) {
  std::vector<std::pair<Label, Statement>> out;
  for (const auto& [label, s] : prog.stmt_of) {
    if (is_simple(s)) out.emplace_back(label, s);
  }
  return out;
}

std::vector<Label> fresh_labels(const Program& prog, std::size_t count) {
  std::vector<Label> out;
  out.reserve(count);
  for (std::size_t n = 1; out.size() < count; ++n) {
    Label candidate("G" + std::to_string(n));
    if (!prog.defines(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace spr
