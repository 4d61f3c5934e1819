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

#include <unordered_map>

#include "arith.hpp"
#include "spr/interp.hpp"

namespace spr {

namespace {

constexpr int kTerminated = -1;

struct CAtom {
  int slot = -1;  // -1 for constants
  std::int64_t value = 0;
};

struct CNode {
  Cond::Kind kind = Cond::Kind::literal;
  bool bit = false;
  CmpOp op = CmpOp::eq;
  int slot = -1;
  CAtom rhs;
  int a = -1;
  int b = -1;
};

enum class Op { skip, stop, assign, assign_const, read, print, print_abstval, branch };

struct CStmt {
  Op op = Op::skip;
  int dst = -1;
  CAtom lhs;
  CAtom rhs;
  BinOp bin = BinOp::add;
  int cond = -1;
  int on_true = kTerminated;
  int on_false = kTerminated;
  int next = kTerminated;
};

}  // namespace

struct Machine::Impl {
  std::vector<Label> labels;
  std::vector<std::string> var_names;
  std::vector<CStmt> code;
  std::vector<CNode> nodes;
  int entry = 0;
  bool abstc = false;
  bool abstval = false;

  std::unordered_map<std::string, int> slot_of;

  int slot(const std::string& name) {
    auto it = slot_of.find(name);
    if (it != slot_of.end()) return it->second;
    int s = static_cast<int>(var_names.size());
    var_names.push_back(name);
    slot_of.emplace(name, s);
    return s;
  }

  CAtom atom(const Atom& a) {
    if (const auto* v = std::get_if<Var>(&a)) return {slot(v->name), 0};
    return {-1, std::get<std::int64_t>(a)};
  }

  int compile(const Cond& c) {
    CNode n;
    n.kind = c.kind();
    switch (c.kind()) {
      case Cond::Kind::literal:
        n.bit = c.bit();
        break;
      case Cond::Kind::conj:
      case Cond::Kind::disj:
        n.a = compile(c.lhs());
        n.b = compile(c.rhs());
        break;
      case Cond::Kind::negation:
        n.a = compile(c.operand());
        break;
      case Cond::Kind::compare:
        n.op = c.op();
        n.slot = slot(c.var());
        n.rhs = atom(c.atom());
        break;
      case Cond::Kind::abstract:
        break;
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  struct Run {
    const Impl& m;
    std::vector<std::int64_t> env;
    const AbstPlan& plan;
    std::size_t cursor = 0;
    Output output;
    Bits recorded;
    std::vector<Env> envlog;

    std::int64_t value(const CAtom& a) const { return a.slot < 0 ? a.value : env[a.slot]; }

    Env snapshot() const {
      std::map<std::string, std::int64_t> values;
      for (std::size_t i = 0; i < m.var_names.size(); ++i) values.emplace(m.var_names[i], env[i]);
      return Env(std::move(values));
    }

    bool eval(int idx) {
      const CNode& n = m.nodes[idx];
      switch (n.kind) {
        case Cond::Kind::literal: return n.bit;
        case Cond::Kind::conj: return eval(n.a) && eval(n.b);
        case Cond::Kind::disj: return eval(n.a) || eval(n.b);
        case Cond::Kind::negation: return !eval(n.a);
        case Cond::Kind::compare: return detail::apply_cmp(n.op, env[n.slot], value(n.rhs));
        case Cond::Kind::abstract: {
          int bit = plan.at(cursor++);
          recorded.push_back(bit);
          envlog.push_back(snapshot());
          return bit != 0;
        }
      }
      return false;
    }

    ExecBottom fault(FaultCause cause) {
      return ExecBottom{cause, std::move(output), std::move(recorded), std::move(envlog)};
    }
  };
};

Machine::Machine(const Program& prog) : impl_(std::make_unique<Impl>()) {
  Impl& m = *impl_;
  std::unordered_map<std::string, int> index;
  for (const auto& [label, _] : prog.stmt_of) {
    index.emplace(label.str(), static_cast<int>(m.labels.size()));
    m.labels.push_back(label);
  }
  // Every program variable gets a slot up front so snapshots cover all of
  // them, defaulting to 0.
  for (const auto& v : vars(prog)) m.slot(v);
  auto target = [&](const Label& l) {
    auto it = index.find(l.str());
    if (it == index.end()) throw IllFormedProgram("undefined label " + l.str());
    return it->second;
  };
  m.entry = target(prog.entry);
  m.code.resize(m.labels.size());
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    const Statement& s = prog.stmt_of.at(m.labels[i]);
    CStmt& c = m.code[i];
    if (auto n = prog.next(m.labels[i]); n && has_successor(s)) c.next = target(*n);
    if (std::holds_alternative<Skip>(s)) {
      c.op = Op::skip;
    } else if (std::holds_alternative<Stop>(s)) {
      c.op = Op::stop;
    } else if (const auto* a = std::get_if<Assign>(&s)) {
      c.op = Op::assign;
      c.dst = m.slot(a->dst);
      c.lhs = m.atom(a->lhs);
      c.rhs = m.atom(a->rhs);
      c.bin = a->op;
    } else if (const auto* ac = std::get_if<AssignConst>(&s)) {
      c.op = Op::assign_const;
      c.dst = m.slot(ac->dst);
      c.lhs = {-1, ac->value};
    } else if (const auto* r = std::get_if<Read>(&s)) {
      c.op = Op::read;
      c.dst = m.slot(r->dst);
    } else if (const auto* p = std::get_if<Print>(&s)) {
      c.op = Op::print;
      c.lhs = m.atom(p->value);
    } else if (std::holds_alternative<PrintAbstval>(s)) {
      c.op = Op::print_abstval;
      m.abstval = true;
    } else if (const auto* b = std::get_if<Branch>(&s)) {
      c.op = Op::branch;
      c.cond = m.compile(b->cond);
      c.on_true = target(b->on_true);
      c.on_false = target(b->on_false);
      m.abstc = m.abstc || b->cond.contains_abstract();
    }
    if (has_successor(s) && c.next == kTerminated) {
      throw IllFormedProgram("label " + m.labels[i].str() + " has no successor");
    }
  }
}

Machine::~Machine() = default;
Machine::Machine(Machine&&) noexcept = default;
Machine& Machine::operator=(Machine&&) noexcept = default;

const std::vector<Label>& Machine::labels() const { return impl_->labels; }
bool Machine::abstract_condition_mode() const { return impl_->abstc; }
bool Machine::abstract_value_mode() const { return impl_->abstval; }

ExecOutcome Machine::run(std::span<const std::int64_t> input, const AbstPlan& plan, std::uint64_t fuel,
                         const StepObserver* observer) const {
  const Impl& m = *impl_;
  Impl::Run r{m, std::vector<std::int64_t>(m.var_names.size(), 0), plan, 0, {}, {}, {}};
  std::size_t in = 0;
  int pc = m.entry;
  std::uint64_t steps = 0;
  while (pc != kTerminated) {
    if (steps >= fuel) return r.fault(FaultCause::fuel_exhausted);
    if (observer) (*observer)(static_cast<std::size_t>(pc));
    const CStmt& s = m.code[pc];
    switch (s.op) {
      case Op::skip:
        pc = s.next;
        break;
      case Op::stop:
        pc = kTerminated;
        break;
      case Op::assign: {
        auto v = detail::apply_binop(s.bin, r.value(s.lhs), r.value(s.rhs));
        if (!v) return r.fault(FaultCause::arithmetic_fault);
        r.env[s.dst] = *v;
        pc = s.next;
        break;
      }
      case Op::assign_const:
        r.env[s.dst] = s.lhs.value;
        pc = s.next;
        break;
      case Op::read:
        if (in >= input.size()) return r.fault(FaultCause::input_exhausted);
        r.env[s.dst] = input[in++];
        pc = s.next;
        break;
      case Op::print:
        r.output.push_back(OutToken::of(r.value(s.lhs)));
        if (m.abstval) r.envlog.push_back(r.snapshot());
        pc = s.next;
        break;
      case Op::print_abstval:
        r.output.push_back(OutToken::placeholder());
        r.envlog.push_back(r.snapshot());
        pc = s.next;
        break;
      case Op::branch:
        pc = r.eval(s.cond) ? s.on_true : s.on_false;
        break;
    }
    ++steps;
  }
  return ExecSuccess{std::move(r.output), std::move(r.recorded), std::move(r.envlog), steps};
}

ExecOutcome exec(const Program& prog, std::span<const std::int64_t> input, const AbstPlan& plan,
                 std::uint64_t fuel) {
  return Machine(prog).run(input, plan, fuel);
}

}  // namespace spr
