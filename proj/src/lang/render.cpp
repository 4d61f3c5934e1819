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

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string render_operand_of_not(const Cond& c) {
  std::string inner = render_cond(c);
  if (c.kind() == Cond::Kind::conj || c.kind() == Cond::Kind::disj) return "(" + inner + ")";
  return inner;
}

}  // namespace

std::string render_atom(const Atom& a) {
  if (const auto* v = std::get_if<Var>(&a)) return v->name;
  return std::to_string(std::get<std::int64_t>(a));
}

std::string render_cond(const Cond& c) {
  switch (c.kind()) {
    case Cond::Kind::literal:
      return c.bit() ? "1" : "0";
    case Cond::Kind::abstract:
      return "abstc";
    case Cond::Kind::compare:
      return "(" + c.var() + std::string(to_string(c.op())) + render_atom(c.atom()) + ")";
    case Cond::Kind::negation:
      return "!" + render_operand_of_not(c.operand());
    case Cond::Kind::conj: {
      std::string l = render_cond(c.lhs());
      if (c.lhs().kind() == Cond::Kind::disj) l = "(" + l + ")";
      std::string r = render_cond(c.rhs());
      if (c.rhs().kind() == Cond::Kind::disj || c.rhs().kind() == Cond::Kind::conj) r = "(" + r + ")";
      return l + " && " + r;
    }
    case Cond::Kind::disj: {
      std::string l = render_cond(c.lhs());
      std::string r = render_cond(c.rhs());
      if (c.rhs().kind() == Cond::Kind::disj) r = "(" + r + ")";
      return l + " || " + r;
    }
  }
  return "?";
}

std::string render_statement(const Statement& s) {
  return std::visit(
      overloaded{
          [](const Skip&) -> std::string { return "skip"; },
          [](const Stop&) -> std::string { return "stop"; },
          [](const Assign& a) -> std::string {
            return a.dst + " = " + render_atom(a.lhs) + " " + std::string(to_string(a.op)) + " " +
                   render_atom(a.rhs);
          },
          [](const AssignConst& a) -> std::string { return a.dst + " = " + std::to_string(a.value); },
          [](const Read& r) -> std::string { return r.dst + " = read"; },
          [](const Print& p) -> std::string { return "print " + render_atom(p.value); },
          [](const PrintAbstval&) -> std::string { return "print abstval"; },
          [](const Branch& b) -> std::string {
            std::string cond = render_cond(b.cond);
            if (b.cond.kind() != Cond::Kind::compare) cond = "(" + cond + ")";
            return "if " + cond + " " + b.on_true.str() + " " + b.on_false.str();
          },
      },
      s);
}

std::string render_program(const Program& prog) {
  std::string out;
  auto emit = [&](const Label& label, const Statement& s) {
    out += label.str();
    out += ": ";
    out += render_statement(s);
    if (auto n = prog.next(label); n && has_successor(s)) {
      out += " -> ";
      out += n->str();
    }
    out += '\n';
  };
  if (auto it = prog.stmt_of.find(prog.entry); it != prog.stmt_of.end()) emit(it->first, it->second);
  for (const auto& [label, s] : prog.stmt_of) {
    if (label != prog.entry) emit(label, s);
  }
  return out;
}

}  // namespace spr
