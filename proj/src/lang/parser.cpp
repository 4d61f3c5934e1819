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

#include <cctype>
#include <charconv>
#include <unordered_map>

#include "spr/lang.hpp"

namespace spr {

namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t pos = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_keyword(std::string_view w) {
  return w == "read" || w == "print" || w == "if" || w == "skip" || w == "stop" || w == "abstc" ||
         w == "abstval";
}

bool valid_var_name(std::string_view w) {
  if (w.empty() || !std::islower(static_cast<unsigned char>(w[0]))) return false;
  for (char c : w) {
    if (!(std::islower(static_cast<unsigned char>(c)) || digit(c) || c == '_')) return false;
  }
  return !is_keyword(w);
}

std::vector<Token> lex(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      t.kind = Tok::ident;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < line.size() && digit(line[j])) ++j;
      t.kind = Tok::integer;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else {
      static constexpr std::string_view kTwo[] = {"->", "==", "!=", "<=", ">=", "&&", "||"};
      t.kind = Tok::punct;
      bool matched = false;
      for (auto two : kTwo) {
        if (line.substr(i, 2) == two) {
          t.text = std::string(two);
          i += 2;
          matched = true;
          break;
        }
      }
      if (!matched) {
        static constexpr std::string_view kOne = ":=+-*/%<>()!";
        if (kOne.find(c) == std::string_view::npos) {
          throw ParseError(ParseError::Kind::syntax, lineno, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
        ++i;
      }
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::end, "", line.size()});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int lineno, const ParseOptions& opts)
      : toks_(std::move(toks)), line_(lineno), opts_(opts) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::end; }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::punct && peek(ahead).text == p;
  }
  bool is_word(std::string_view w) const { return peek().kind == Tok::ident && peek().text == w; }

  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::syntax, line_, msg);
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "' near '" + peek().text + "'");
    take();
  }

  void check_reserved(std::string_view word) const {
    if (!opts_.allow_reserved && (word == "abstc" || word == "abstval")) {
      throw ParseError(ParseError::Kind::reserved, line_, "reserved token '" + std::string(word) + "'");
    }
  }

  Label label() {
    if (peek().kind != Tok::ident) fail("expected a label near '" + peek().text + "'");
    std::string name = take().text;
    if (!opts_.allow_reserved && is_reserved_label(name)) {
      throw ParseError(ParseError::Kind::reserved, line_, "label " + name + " is in the reserved G<n> namespace");
    }
    return Label(std::move(name));
  }

  std::string variable() {
    if (peek().kind != Tok::ident) fail("expected a variable near '" + peek().text + "'");
    std::string name = take().text;
    if (!valid_var_name(name)) fail("invalid variable name '" + name + "'");
    return name;
  }

  bool at_integer() const {
    if (peek().kind == Tok::integer) return true;
    return (is_punct("-") || is_punct("+")) && peek(1).kind == Tok::integer &&
           peek(1).pos == peek().pos + 1;
  }

  std::int64_t integer() {
    bool negative = false;
    if (is_punct("-") || is_punct("+")) negative = take().text == "-";
    if (peek().kind != Tok::integer) fail("expected an integer near '" + peek().text + "'");
    std::string digits = take().text;
    if (negative) digits.insert(digits.begin(), '-');
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("integer out of range: " + digits);
    return value;
  }

  Atom atom() {
    if (at_integer()) return integer();
    return Var{variable()};
  }

  Cond cond() { return disjunction(); }

  Cond disjunction() {
    Cond c = conjunction();
    while (is_punct("||")) {
      take();
      c = Cond::disj(std::move(c), conjunction());
    }
    return c;
  }

  Cond conjunction() {
    Cond c = unary();
    while (is_punct("&&")) {
      take();
      c = Cond::conj(std::move(c), unary());
    }
    return c;
  }

  Cond unary() {
    if (is_punct("!")) {
      take();
      return Cond::negation(unary());
    }
    return primary();
  }

  Cond primary() {
    if (is_punct("(")) {
      take();
      Cond c = cond();
      expect_punct(")");
      return c;
    }
    if (peek().kind == Tok::integer && (peek().text == "0" || peek().text == "1")) {
      return Cond::literal(take().text == "1");
    }
    if (is_word("abstc")) {
      check_reserved("abstc");
      take();
      return Cond::abstract();
    }
    std::string v = variable();
    CmpOp op;
    if (is_punct("==")) {
      op = CmpOp::eq;
    } else if (is_punct("<")) {
      op = CmpOp::lt;
    } else if (is_punct(">")) {
      op = CmpOp::gt;
    } else {
      fail("expected a comparison after '" + v + "'");
    }
    take();
    return Cond::compare(op, std::move(v), atom());
  }

  Statement statement() {
    if (is_word("skip")) {
      take();
      return Skip{};
    }
    if (is_word("stop")) {
      take();
      return Stop{};
    }
    if (is_word("print")) {
      take();
      if (is_word("abstval")) {
        check_reserved("abstval");
        take();
        return PrintAbstval{};
      }
      return Print{atom()};
    }
    if (is_word("if")) {
      take();
      Cond c = cond();
      Label t = label();
      Label f = label();
      return Branch{std::move(c), std::move(t), std::move(f)};
    }
    std::string dst = variable();
    expect_punct("=");
    if (is_word("read")) {
      take();
      return Read{std::move(dst)};
    }
    Atom lhs = atom();
    if (at_end() || is_punct("->")) {
      if (const auto* k = std::get_if<std::int64_t>(&lhs)) return AssignConst{std::move(dst), *k};
      fail("plain copy '" + dst + " = " + std::get<Var>(lhs).name + "' is not a statement; write an operator");
    }
    if (peek().kind != Tok::punct) fail("expected an operator near '" + peek().text + "'");
    auto op = parse_binop(peek().text);
    if (!op) fail("unknown operator '" + peek().text + "'");
    take();
    Atom rhs = atom();
    return Assign{std::move(dst), std::move(lhs), *op, std::move(rhs)};
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  const ParseOptions& opts_;
};

struct PendingLine {
  Label label;
  Statement stmt;
  std::optional<Label> next;
  int line = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Program parse_program(std::string_view text, const ParseOptions& options) {
  std::vector<PendingLine> lines;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    std::string_view body = strip_comment(raw);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    if (blank(body)) {
      if (end == text.size()) break;
      continue;
    }
    LineParser p(lex(body, lineno), lineno, options);
    PendingLine pl;
    pl.line = lineno;
    pl.label = p.label();
    p.expect_punct(":");
    pl.stmt = p.statement();
    if (p.is_punct("->")) {
      p.take();
      pl.next = p.label();
    }
    if (!p.at_end()) p.fail("unexpected trailing '" + p.peek().text + "'");
    lines.push_back(std::move(pl));
    if (end == text.size()) break;
  }
  if (lines.empty()) throw ParseError(ParseError::Kind::syntax, lineno, "program has no statements");

  Program prog;
  prog.entry = lines.front().label;
  std::unordered_map<std::string, int> defined_at;
  for (const auto& pl : lines) {
    auto [it, inserted] = defined_at.emplace(pl.label.str(), pl.line);
    if (!inserted) {
      throw ParseError(ParseError::Kind::duplicate_label, pl.line,
                       "label " + pl.label.str() + " already defined on line " + std::to_string(it->second));
    }
    prog.stmt_of.emplace(pl.label, pl.stmt);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& pl = lines[i];
    auto require = [&](const Label& target) {
      if (!prog.defines(target)) {
        throw ParseError(ParseError::Kind::undefined_label, pl.line, "undefined label " + target.str());
      }
    };
    if (const auto* b = std::get_if<Branch>(&pl.stmt)) {
      require(b->on_true);
      require(b->on_false);
      // A trailing `-> L` on a branch is accepted and ignored.
      continue;
    }
    if (!has_successor(pl.stmt)) continue;
    Label next;
    if (pl.next) {
      next = *pl.next;
    } else if (i + 1 < lines.size()) {
      next = lines[i + 1].label;
    } else {
      throw ParseError(ParseError::Kind::syntax, pl.line, "last statement needs an explicit '-> LABEL'");
    }
    require(next);
    prog.next_of.emplace(pl.label, std::move(next));
  }
  try {
    check_well_formed(prog);
  } catch (const IllFormedProgram& e) {
    throw ParseError(ParseError::Kind::syntax, lines.front().line, e.what());
  }
  return prog;
}

Cond parse_cond(std::string_view text, const ParseOptions& options) {
  LineParser p(lex(text, 1), 1, options);
  Cond c = p.cond();
  if (!p.at_end()) p.fail("unexpected trailing '" + p.peek().text + "'");
  return c;
}

Statement parse_statement(std::string_view text, const ParseOptions& options) {
  LineParser p(lex(text, 1), 1, options);
  Statement s = p.statement();
  if (!p.at_end()) p.fail("unexpected trailing '" + p.peek().text + "'");
  return s;
}

}  // namespace spr
