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

#pragma once

// The core imperative language: labelled statements wired together by an
// explicit successor map. A program is the pair (stmt_of, next_of) plus an
// entry label. Branches carry both of their targets inline and have no
// successor entry; neither does `stop`.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace spr {

// Opaque statement label. Ordering is "natural": digit runs compare
// numerically, so L2 < L10.
class Label {
 public:
  Label() = default;
  explicit Label(std::string name) : name_(std::move(name)) {}

  const std::string& str() const { return name_; }
  bool empty() const { return name_.empty(); }

  friend bool operator==(const Label& a, const Label& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  std::string name_;
};

// True for labels in the namespace reserved for schema-inserted statements.
bool is_reserved_label(std::string_view name);

struct Var {
  std::string name;
  friend auto operator<=>(const Var&, const Var&) = default;
};

// A value position: either a variable or an integer constant. Variables
// order before constants.
using Atom = std::variant<Var, std::int64_t>;

enum class BinOp { add, sub, mul, div, mod, eq, ne, lt, le, gt, ge };

std::string_view to_string(BinOp op);
std::optional<BinOp> parse_binop(std::string_view token);

enum class CmpOp { eq, lt, gt };

std::string_view to_string(CmpOp op);

// Branch condition. Immutable tree with shared children; copying is cheap.
// Parentheses in source text are grouping only and do not produce nodes.
class Cond {
 public:
  enum class Kind { literal, conj, disj, negation, compare, abstract };

  static Cond literal(bool bit);
  static Cond conj(Cond lhs, Cond rhs);
  static Cond disj(Cond lhs, Cond rhs);
  static Cond negation(Cond operand);
  static Cond compare(CmpOp op, std::string var, Atom rhs);
  static Cond equals(std::string var, std::int64_t value) {
    return compare(CmpOp::eq, std::move(var), value);
  }
  static Cond abstract();

  Kind kind() const;
  bool bit() const;             // literal
  const Cond& lhs() const;      // conj, disj
  const Cond& rhs() const;      // conj, disj
  const Cond& operand() const;  // negation
  CmpOp op() const;             // compare
  const std::string& var() const;  // compare
  const Atom& atom() const;        // compare

  bool contains_abstract() const;

  // Replaces every abstract marker with `replacement`.
  Cond substitute_abstract(const Cond& replacement) const;

  friend bool operator==(const Cond& a, const Cond& b);

 private:
  struct Node;
  explicit Cond(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Skip {
  friend bool operator==(const Skip&, const Skip&) = default;
};
struct Stop {
  friend bool operator==(const Stop&, const Stop&) = default;
};
// v = a op b
struct Assign {
  std::string dst;
  Atom lhs;
  BinOp op = BinOp::add;
  Atom rhs;
  friend bool operator==(const Assign&, const Assign&) = default;
};
// v = const
struct AssignConst {
  std::string dst;
  std::int64_t value = 0;
  friend bool operator==(const AssignConst&, const AssignConst&) = default;
};
// v = read
struct Read {
  std::string dst;
  friend bool operator==(const Read&, const Read&) = default;
};
// print v | print const
struct Print {
  Atom value;
  friend bool operator==(const Print&, const Print&) = default;
};
struct PrintAbstval {
  friend bool operator==(const PrintAbstval&, const PrintAbstval&) = default;
};
// if (cond) on_true on_false
struct Branch {
  Cond cond;
  Label on_true;
  Label on_false;
  friend bool operator==(const Branch&, const Branch&) = default;
};

using Statement = std::variant<Skip, Stop, Assign, AssignConst, Read, Print, PrintAbstval, Branch>;

bool is_simple(const Statement& s);  // assignments, reads, concrete prints
bool is_branch(const Statement& s);
bool is_stop(const Statement& s);
// Statements that fall through to a successor label.
bool has_successor(const Statement& s);

struct Program {
  Label entry;
  std::map<Label, Statement> stmt_of;
  std::map<Label, Label> next_of;

  const Statement& at(const Label& l) const;
  std::optional<Label> next(const Label& l) const;
  bool defines(const Label& l) const { return stmt_of.contains(l); }
  std::vector<Label> labels() const;

  bool contains_abstc() const;
  bool contains_abstval() const;

  friend bool operator==(const Program&, const Program&) = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, undefined_label, duplicate_label, reserved };

  ParseError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

// Thrown by check_well_formed.
class IllFormedProgram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  // Accept `abstc`, `abstval` and reserved G<n> labels. Used when reading
  // back rendered templates; user program files keep this off.
  bool allow_reserved = false;
};

Program parse_program(std::string_view text, const ParseOptions& options = {});
Cond parse_cond(std::string_view text, const ParseOptions& options = {.allow_reserved = true});
Statement parse_statement(std::string_view text, const ParseOptions& options = {.allow_reserved = true});

std::string render_program(const Program& prog);
std::string render_statement(const Statement& s);
std::string render_cond(const Cond& c);
std::string render_atom(const Atom& a);

// Throws IllFormedProgram describing the first violated invariant.
void check_well_formed(const Program& prog);

std::set<std::string> vars(const Program& prog);
std::set<std::string> vars(const Statement& s);
std::set<std::string> vars(const Cond& c);
std::set<std::int64_t> consts(const Program& prog);
std::vector<std::pair<Label, Statement>> simple_statements(const Program& prog);
std::vector<Label> fresh_labels(const Program& prog, std::size_t count);

}  // namespace spr
