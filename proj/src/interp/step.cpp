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

#include "arith.hpp"
#include "spr/interp.hpp"

namespace spr {

namespace {

std::int64_t value_of(const Env& env, const Atom& a) {
  if (const auto* v = std::get_if<Var>(&a)) return env.get(v->name);
  return std::get<std::int64_t>(a);
}

Env snapshot(const Env& env, const Program& prog) {
  std::map<std::string, std::int64_t> values;
  for (const auto& v : vars(prog)) values.emplace(v, env.get(v));
  return Env(std::move(values));
}

// Short-circuit evaluation in which the abstract marker consults the plan.
int eval_consulting(const Cond& c, MachineState& st, const Program& prog) {
  switch (c.kind()) {
    case Cond::Kind::abstract: {
      int bit = st.plan.at(st.plan_cursor++);
      st.recorded.push_back(bit);
      st.envlog.push_back(snapshot(st.env, prog));
      return bit;
    }
    case Cond::Kind::conj:
      return eval_consulting(c.lhs(), st, prog) && eval_consulting(c.rhs(), st, prog) ? 1 : 0;
    case Cond::Kind::disj:
      return eval_consulting(c.lhs(), st, prog) || eval_consulting(c.rhs(), st, prog) ? 1 : 0;
    case Cond::Kind::negation:
      return eval_consulting(c.operand(), st, prog) ? 0 : 1;
    case Cond::Kind::literal:
    case Cond::Kind::compare:
      return eval_cond(st.env, c);
  }
  return 0;
}

}  // namespace

MachineState initial_state(const Program& prog, std::span<const std::int64_t> input, AbstPlan plan) {
  MachineState st;
  st.pc = prog.entry;
  st.input.assign(input.begin(), input.end());
  st.plan = std::move(plan);
  return st;
}

StepResult step(const MachineState& state, const Program& prog) {
  MachineState st = state;
  const Label pc = *st.pc;
  const Statement& s = prog.at(pc);
  const bool value_mode = prog.contains_abstval();
  auto advance = [&] { st.pc = prog.next(pc); };

  if (std::holds_alternative<Skip>(s)) {
    advance();
  } else if (std::holds_alternative<Stop>(s)) {
    st.pc.reset();
  } else if (const auto* a = std::get_if<Assign>(&s)) {
    auto r = detail::apply_binop(a->op, value_of(st.env, a->lhs), value_of(st.env, a->rhs));
    if (!r) return FaultCause::arithmetic_fault;
    st.env.set(a->dst, *r);
    advance();
  } else if (const auto* ac = std::get_if<AssignConst>(&s)) {
    st.env.set(ac->dst, ac->value);
    advance();
  } else if (const auto* rd = std::get_if<Read>(&s)) {
    if (st.input.empty()) return FaultCause::input_exhausted;
    st.env.set(rd->dst, st.input.front());
    st.input.pop_front();
    advance();
  } else if (const auto* p = std::get_if<Print>(&s)) {
    st.output.push_back(OutToken::of(value_of(st.env, p->value)));
    if (value_mode) st.envlog.push_back(snapshot(st.env, prog));
    advance();
  } else if (std::holds_alternative<PrintAbstval>(s)) {
    st.output.push_back(OutToken::placeholder());
    st.envlog.push_back(snapshot(st.env, prog));
    advance();
  } else if (const auto* b = std::get_if<Branch>(&s)) {
    int taken = b->cond.contains_abstract() ? eval_consulting(b->cond, st, prog) : eval_cond(st.env, b->cond);
    st.pc = taken ? b->on_true : b->on_false;
  }
  return st;
}

ExecOutcome exec_by_steps(const Program& prog, std::span<const std::int64_t> input, const AbstPlan& plan,
                          std::uint64_t fuel) {
  MachineState st = initial_state(prog, input, plan);
  std::uint64_t steps = 0;
  while (st.pc) {
    if (steps >= fuel) return ExecBottom{FaultCause::fuel_exhausted, st.output, st.recorded, st.envlog};
    StepResult r = step(st, prog);
    if (const auto* fault = std::get_if<FaultCause>(&r)) {
      return ExecBottom{*fault, st.output, st.recorded, st.envlog};
    }
    st = std::get<MachineState>(std::move(r));
    ++steps;
  }
  return ExecSuccess{std::move(st.output), std::move(st.recorded), std::move(st.envlog), steps};
}

}  // namespace spr
