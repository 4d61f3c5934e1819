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

#include "arith.hpp"
#include "spr/interp.hpp"

namespace spr {

std::int64_t Env::get(const std::string& name) const {
  auto it = values_.find(name);
  return it == values_.end() ? 0 : it->second;
}

Output to_output(std::span<const std::int64_t> values) {
  Output out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(OutToken::of(v));
  return out;
}

bool output_equals(const Output& actual, std::span<const std::int64_t> expected) {
  if (actual.size() != expected.size()) return false;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (actual[i].abstval || actual[i].value != expected[i]) return false;
  }
  return true;
}

std::string render_output(const Output& out) {
  std::string s;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) s += ' ';
    s += out[i].abstval ? std::string("abstval") : std::to_string(out[i].value);
  }
  return s;
}

std::string_view to_string(FaultCause cause) {
  switch (cause) {
    case FaultCause::input_exhausted: return "input-exhausted";
    case FaultCause::fuel_exhausted: return "fuel-exhausted";
    case FaultCause::arithmetic_fault: return "arithmetic-fault";
  }
  return "?";
}

const Output& output_of(const ExecOutcome& o) {
  return std::visit([](const auto& r) -> const Output& { return r.output; }, o);
}

const Bits& recorded_of(const ExecOutcome& o) {
  return std::visit([](const auto& r) -> const Bits& { return r.recorded; }, o);
}

const std::vector<Env>& envlog_of(const ExecOutcome& o) {
  return std::visit([](const auto& r) -> const std::vector<Env>& { return r.envlog; }, o);
}

int eval_cond(const Env& env, const Cond& cond) {
  switch (cond.kind()) {
    case Cond::Kind::literal:
      return cond.bit() ? 1 : 0;
    case Cond::Kind::conj:
      return eval_cond(env, cond.lhs()) && eval_cond(env, cond.rhs()) ? 1 : 0;
    case Cond::Kind::disj:
      return eval_cond(env, cond.lhs()) || eval_cond(env, cond.rhs()) ? 1 : 0;
    case Cond::Kind::negation:
      return eval_cond(env, cond.operand()) ? 0 : 1;
    case Cond::Kind::compare: {
      std::int64_t rhs = 0;
      if (const auto* v = std::get_if<Var>(&cond.atom())) {
        rhs = env.get(v->name);
      } else {
        rhs = std::get<std::int64_t>(cond.atom());
      }
      return detail::apply_cmp(cond.op(), env.get(cond.var()), rhs) ? 1 : 0;
    }
    case Cond::Kind::abstract:
      throw std::logic_error("eval_cond: abstract condition has no concrete value");
  }
  return 0;
}

}  // namespace spr
