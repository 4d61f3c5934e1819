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

#include <map>

#include "spr/transform.hpp"

namespace spr {

namespace {

constexpr BinOp kExtOps[] = {BinOp::add, BinOp::sub, BinOp::mul, BinOp::eq, BinOp::ne};

class StatementSet {
 public:
  explicit StatementSet(const Statement& original) : original_(render_statement(original)) {}

  void add(Statement s) {
    std::string key = render_statement(s);
    if (key == original_) return;
    items_.emplace(std::move(key), std::move(s));
  }

  std::vector<Statement> take() {
    std::vector<Statement> out;
    out.reserve(items_.size());
    for (auto& [_, s] : items_) out.push_back(std::move(s));
    return out;
  }

 private:
  std::string original_;
  std::map<std::string, Statement> items_;
};

}  // namespace

std::vector<Statement> reps(const Program& prog, const Statement& s, bool ext_rep) {
  const auto all_vars = vars(prog);
  const auto all_consts = consts(prog);
  StatementSet out(s);

  auto replace_atom = [&](const Atom& a, auto&& emit) {
    if (std::holds_alternative<Var>(a)) {
      for (const auto& v : all_vars) emit(Atom{Var{v}});
    } else {
      for (auto k : all_consts) emit(Atom{k});
    }
  };

  auto add_ext = [&](const std::string& dst) {
    std::vector<Atom> atoms;
    for (const auto& v : all_vars) atoms.emplace_back(Var{v});
    for (auto k : all_consts) atoms.emplace_back(k);
    for (BinOp op : kExtOps) {
      for (const auto& a : atoms) {
        for (const auto& b : atoms) {
          // Constant-only expressions fold to a constant.
          if (!std::holds_alternative<Var>(a) && !std::holds_alternative<Var>(b)) continue;
          out.add(Assign{dst, a, op, b});
        }
      }
    }
  };

  if (const auto* a = std::get_if<Assign>(&s)) {
    for (const auto& v : all_vars) out.add(Assign{v, a->lhs, a->op, a->rhs});
    replace_atom(a->lhs, [&](Atom x) { out.add(Assign{a->dst, std::move(x), a->op, a->rhs}); });
    replace_atom(a->rhs, [&](Atom x) { out.add(Assign{a->dst, a->lhs, a->op, std::move(x)}); });
    if (ext_rep) add_ext(a->dst);
  } else if (const auto* ac = std::get_if<AssignConst>(&s)) {
    for (const auto& v : all_vars) out.add(AssignConst{v, ac->value});
    for (auto k : all_consts) out.add(AssignConst{ac->dst, k});
    if (ext_rep) add_ext(ac->dst);
  } else if (const auto* r = std::get_if<Read>(&s)) {
    for (const auto& v : all_vars) out.add(Read{v});
    if (ext_rep) add_ext(r->dst);
  } else if (std::holds_alternative<Print>(s)) {
    out.add(PrintAbstval{});
  }
  return out.take();
}

}  // namespace spr
