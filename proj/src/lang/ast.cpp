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

#include <cassert>

#include "spr/lang.hpp"

namespace spr {

struct Cond::Node {
  Kind kind = Kind::literal;
  bool bit = false;
  CmpOp op = CmpOp::eq;
  std::string var;
  Atom atom;
  std::optional<Cond> a;
  std::optional<Cond> b;
  bool has_abstract = false;
};

Cond Cond::literal(bool bit) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::literal;
  n->bit = bit;
  return Cond(std::move(n));
}

Cond Cond::conj(Cond lhs, Cond rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::conj;
  n->has_abstract = lhs.contains_abstract() || rhs.contains_abstract();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Cond(std::move(n));
}

Cond Cond::disj(Cond lhs, Cond rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::disj;
  n->has_abstract = lhs.contains_abstract() || rhs.contains_abstract();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Cond(std::move(n));
}

Cond Cond::negation(Cond operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::negation;
  n->has_abstract = operand.contains_abstract();
  n->a = std::move(operand);
  return Cond(std::move(n));
}

Cond Cond::compare(CmpOp op, std::string var, Atom rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::compare;
  n->op = op;
  n->var = std::move(var);
  n->atom = std::move(rhs);
  return Cond(std::move(n));
}

Cond Cond::abstract() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::abstract;
  n->has_abstract = true;
  return Cond(std::move(n));
}

Cond::Kind Cond::kind() const { return node_->kind; }
bool Cond::bit() const { return node_->bit; }
const Cond& Cond::lhs() const { return *node_->a; }
const Cond& Cond::rhs() const { return *node_->b; }
const Cond& Cond::operand() const { return *node_->a; }
CmpOp Cond::op() const { return node_->op; }
const std::string& Cond::var() const { return node_->var; }
const Atom& Cond::atom() const { return node_->atom; }
bool Cond::contains_abstract() const { return node_->has_abstract; }

Cond Cond::substitute_abstract(const Cond& replacement) const {
  if (!contains_abstract()) return *this;
  switch (kind()) {
    case Kind::abstract:
      return replacement;
    case Kind::conj:
      return conj(lhs().substitute_abstract(replacement), rhs().substitute_abstract(replacement));
    case Kind::disj:
      return disj(lhs().substitute_abstract(replacement), rhs().substitute_abstract(replacement));
    case Kind::negation:
      return negation(operand().substitute_abstract(replacement));
    case Kind::literal:
    case Kind::compare:
      break;
  }
  return *this;
}

bool operator==(const Cond& x, const Cond& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Cond::Kind::literal:
      return x.bit() == y.bit();
    case Cond::Kind::conj:
    case Cond::Kind::disj:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
    case Cond::Kind::negation:
      return x.operand() == y.operand();
    case Cond::Kind::compare:
      return x.op() == y.op() && x.var() == y.var() && x.atom() == y.atom();
    case Cond::Kind::abstract:
      return true;
  }
  return false;
}

std::string_view to_string(BinOp op) {
  switch (op) {
    case BinOp::add: return "+";
    case BinOp::sub: return "-";
    case BinOp::mul: return "*";
    case BinOp::div: return "/";
    case BinOp::mod: return "%";
    case BinOp::eq: return "==";
    case BinOp::ne: return "!=";
    case BinOp::lt: return "<";
    case BinOp::le: return "<=";
    case BinOp::gt: return ">";
    case BinOp::ge: return ">=";
  }
  return "?";
}

std::optional<BinOp> parse_binop(std::string_view t) {
  static constexpr std::pair<std::string_view, BinOp> kOps[] = {
      {"+", BinOp::add}, {"-", BinOp::sub}, {"*", BinOp::mul},  {"/", BinOp::div},
      {"%", BinOp::mod}, {"==", BinOp::eq}, {"!=", BinOp::ne},  {"<", BinOp::lt},
      {"<=", BinOp::le}, {">", BinOp::gt},  {">=", BinOp::ge},
  };
  for (const auto& [text, op] : kOps) {
    if (text == t) return op;
  }
  return std::nullopt;
}

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::eq: return "==";
    case CmpOp::lt: return "<";
    case CmpOp::gt: return ">";
  }
  return "?";
}

bool is_simple(const Statement& s) {
  return std::holds_alternative<Assign>(s) || std::holds_alternative<AssignConst>(s) ||
         std::holds_alternative<Read>(s) || std::holds_alternative<Print>(s);
}

bool is_branch(const Statement& s) { return std::holds_alternative<Branch>(s); }
bool is_stop(const Statement& s) { return std::holds_alternative<Stop>(s); }
bool has_successor(const Statement& s) { return !is_branch(s) && !is_stop(s); }

const Statement& Program::at(const Label& l) const {
  auto it = stmt_of.find(l);
  if (it == stmt_of.end()) throw std::out_of_range("undefined label " + l.str());
  return it->second;
}

std::optional<Label> Program::next(const Label& l) const {
  auto it = next_of.find(l);
  if (it == next_of.end()) return std::nullopt;
  return it->second;
}

std::vector<Label> Program::labels() const {
  std::vector<Label> out;
  out.reserve(stmt_of.size());
  for (const auto& [l, _] : stmt_of) out.push_back(l);
  return out;
}

bool Program::contains_abstc() const {
  for (const auto& [_, s] : stmt_of) {
    if (const auto* b = std::get_if<Branch>(&s); b && b->cond.contains_abstract()) return true;
  }
  return false;
}

bool Program::contains_abstval() const {
  for (const auto& [_, s] : stmt_of) {
    if (std::holds_alternative<PrintAbstval>(s)) return true;
  }
  return false;
}

ParseError::ParseError(Kind kind, int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

void check_well_formed(const Program& prog) {
  if (!prog.defines(prog.entry)) throw IllFormedProgram("entry label " + prog.entry.str() + " is not defined");
  int abstract_markers = 0;
  for (const auto& [label, s] : prog.stmt_of) {
    if (has_successor(s)) {
      auto n = prog.next(label);
      if (!n) throw IllFormedProgram("label " + label.str() + " has no successor");
      if (!prog.defines(*n)) {
        throw IllFormedProgram("successor " + n->str() + " of " + label.str() + " is not defined");
      }
    } else if (prog.next_of.contains(label)) {
      throw IllFormedProgram("label " + label.str() + " must not have a successor entry");
    }
    if (const auto* b = std::get_if<Branch>(&s)) {
      for (const Label* t : {&b->on_true, &b->on_false}) {
        if (!prog.defines(*t)) {
          throw IllFormedProgram("branch target " + t->str() + " of " + label.str() + " is not defined");
        }
      }
      if (b->cond.contains_abstract()) ++abstract_markers;
    }
    if (std::holds_alternative<PrintAbstval>(s)) ++abstract_markers;
  }
  for (const auto& [label, _] : prog.next_of) {
    if (!prog.defines(label)) throw IllFormedProgram("successor entry for undefined label " + label.str());
  }
  if (abstract_markers > 1) throw IllFormedProgram("more than one abstract marker");
}

}  // namespace spr
