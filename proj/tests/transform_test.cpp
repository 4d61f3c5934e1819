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


#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "spr/transform.hpp"

using namespace spr;

namespace {

constexpr const char* kExample =
    "L0: x = read -> L1\n"
    "L1: if (x==5) L2 L3\n"
    "L2: print 1 -> L4\n"
    "L3: print 0 -> L4\n"
    "L4: stop\n";

const Label L0("L0"), L1("L1"), L2("L2"), L3("L3"), L4("L4");

std::vector<Label> all_labels(const Program& p) { return p.labels(); }

std::set<std::string> texts(const std::vector<PatchTemplate>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.text);
  return out;
}

std::vector<std::int64_t> values(const Output& out) {
  std::vector<std::int64_t> v;
  for (const auto& t : out) v.push_back(t.value);
  return v;
}

}  // namespace

TEST_CASE("tighten and loosen") {
  const Program p = parse_program(kExample);
  const auto t = m_tighten(p, L1);
  REQUIRE(t.size() == 1);
  CHECK(std::get<Branch>(t[0].program.at(L1)).cond == parse_cond("(x==5) && !abstc"));
  CHECK(t[0].schema == Schema::tighten);
  CHECK(t[0].tier == 1);
  const auto l = m_loosen(p, L1);
  REQUIRE(l.size() == 1);
  CHECK(std::get<Branch>(l[0].program.at(L1)).cond == parse_cond("(x==5) || abstc"));
  CHECK(m_tighten(p, L0).empty());
  CHECK(m_loosen(p, L3).empty());
}

TEST_CASE("guard") {
  const Program p = parse_program(kExample);
  const auto g = m_guard(p, L3);
  REQUIRE(g.size() == 1);
  const Program expected = parse_program(
      "L0: x = read -> L1\nL1: if (x==5) L2 L3\nL2: print 1 -> L4\nL3: if (1 && !abstc) G1 L4\nG1: print 0 -> L4\n"
      "L4: stop\n",
      {.allow_reserved = true});
  CHECK(g[0].program == expected);
  CHECK(g[0].tier == 3);
  CHECK(m_guard(p, L1).empty());
  CHECK(m_guard(p, L4).empty());
}

TEST_CASE("control") {
  const Program p = parse_program(kExample);
  const auto c = m_control(p, L3);
  REQUIRE(c.size() == 1);
  CHECK(c[0].tier == 2);
  const std::vector<std::int64_t> in{3};
  CHECK(output_of(exec(c[0].program, in, AbstPlan::all_ones())).empty());
  CHECK(values(output_of(exec(c[0].program, in, AbstPlan::none()))) == std::vector<std::int64_t>{0});
  CHECK(m_control(p, L1).size() == 1);
  CHECK(m_control(p, L1, true).size() > 1);
}

TEST_CASE("init") {
  const Program p = parse_program("L0: x = read -> L1\nL1: z = x + y -> L2\nL2: print z -> L3\nL3: stop\n");
  const auto i = m_init(p, Label("L2"));
  REQUIRE(i.size() == 1);
  CHECK(i[0].program.at(Label("L2")) == Statement{AssignConst{"z", 0}});
  CHECK(i[0].tier == 5);
  CHECK(m_init(p, Label("L1")).size() == 3);
  CHECK(m_init(p, Label("L3")).empty());
}

TEST_CASE("replacement statements") {
  const Program p = parse_program("L0: x = read -> L1\nL1: y = 2 -> L2\nL2: print 1 -> L3\nL3: stop\n");
  CHECK(reps(p, parse_statement("print 1")) == std::vector<Statement>{PrintAbstval{}});
  CHECK(reps(p, parse_statement("stop")).empty());
  CHECK(reps(p, parse_statement("x = read")) == std::vector<Statement>{Read{"y"}});
  const auto c = reps(p, parse_statement("y = 2"));
  // x = 2, y = 1 (2 is the identity and 1 comes from `print 1`)
  CHECK(c.size() == 2);
  const auto ext = reps(p, parse_statement("y = 2"), true);
  CHECK(ext.size() > c.size());
  for (const auto& s : ext) CHECK(s != parse_statement("y = 2"));
}

TEST_CASE("rep and cprep counts") {
  const Program p = parse_program("L0: x = read -> L1\nL1: print x -> L2\nL2: stop\n");
  CHECK(m_rep(p, L0).size() == reps(p, p.at(L0)).size());
  const auto r = m_rep(p, L1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].marker() == Marker::abstval);
  CHECK(r[0].tier == 4);
  // Verbatim copies of both simple statements plus print abstval; x = read
  // has no other variable to read into.
  const auto cp = m_cprep(p, L2);
  CHECK(cp.size() == 3);
  for (const auto& t : cp) CHECK_NOTHROW(check_well_formed(t.program));
}

TEST_CASE("worked example space") {
  const Program p = parse_program(kExample);
  const auto space = generate_space(p, all_labels(p), SpaceConfig{});
  std::set<std::string> tier1;
  for (const auto& t : space) {
    if (t.tier == 1) tier1.insert(std::string(to_string(t.schema)) + " " + t.target.str());
  }
  CHECK(tier1 == std::set<std::string>{"tighten L1", "loosen L1"});
  CHECK(std::is_sorted(space.begin(), space.end(),
                       [](const PatchTemplate& a, const PatchTemplate& b) { return a.tier < b.tier; }));
}

TEST_CASE("space without branches has no tier 1") {
  const Program p = parse_program("L0: x = read -> L1\nL1: print x -> L2\nL2: stop\n");
  for (const auto& t : generate_space(p, all_labels(p), SpaceConfig{})) CHECK(t.tier != 1);
}

TEST_CASE("template invariants on random programs") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const Program p = oracle::random_tiny_program(rng);
    SpaceConfig cfg;
    cfg.ext_rep = i % 2 == 0;
    cfg.goto_control = i % 3 == 0;
    const auto space = generate_space(p, all_labels(p), cfg);
    std::set<std::string> seen;
    const std::string original = render_program(p);
    for (const auto& t : space) {
      CHECK_NOTHROW(check_well_formed(t.program));
      CHECK(t.text == render_program(t.program));
      CHECK(t.text != original);
      CHECK(seen.insert(t.text).second);
      const int markers = (t.program.contains_abstc() ? 1 : 0) + (t.program.contains_abstval() ? 1 : 0);
      CHECK(markers <= 1);
      CHECK(t.tier == tier_of(t.schema, t.marker()));
      switch (t.schema) {
        case Schema::tighten:
        case Schema::loosen:
        case Schema::guard:
        case Schema::control: CHECK(t.marker() == Marker::abstc); break;
        case Schema::init: CHECK(t.marker() == Marker::none); break;
        default: CHECK(t.marker() != Marker::abstc); break;
      }
    }
  }
}

TEST_CASE("space matches an independent enumeration") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const Program p = oracle::random_tiny_program(rng);
    std::set<std::string> expected;
    for (const auto& t : oracle::fig3_templates(p)) expected.insert(t.text);
    const auto got = texts(generate_space(p, all_labels(p), SpaceConfig{}));
    CHECK(got == expected);
    if (got != expected) {
      MESSAGE(render_program(p));
      break;
    }
  }
}

TEST_CASE("condition schemas preserve semantics under the preserve plan") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> val(-1, 3);
  for (int i = 0; i < 150; ++i) {
    const Program p = oracle::random_tiny_program(rng);
    SpaceConfig cfg;
    cfg.goto_control = true;
    for (const auto& t : generate_space(p, all_labels(p), cfg)) {
      if (t.marker() != Marker::abstc) continue;
      for (int k = 0; k < 4; ++k) {
        std::vector<std::int64_t> in(oracle::read_count(p));
        for (auto& v : in) v = val(rng);
        const auto a = exec(p, in);
        const auto b = exec(t.program, in, AbstPlan::none());
        CHECK(succeeded(a) == succeeded(b));
        CHECK(output_of(a) == output_of(b));
      }
    }
  }
}

TEST_CASE("space grows with the configuration") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const auto inst = oracle::random_instance(rng);
    const auto tl = all_labels(inst.buggy);
    const std::vector<Label> head(tl.begin(), tl.begin() + static_cast<std::ptrdiff_t>(tl.size() / 2));
    const auto base = texts(generate_space(inst.buggy, head, SpaceConfig{}));
    const auto wider = texts(generate_space(inst.buggy, tl, SpaceConfig{}));
    SpaceConfig ext;
    ext.ext_rep = true;
    ext.ext_cond = true;
    ext.goto_control = true;
    const auto richest = texts(generate_space(inst.buggy, tl, ext));
    CHECK(std::includes(wider.begin(), wider.end(), base.begin(), base.end()));
    CHECK(std::includes(richest.begin(), richest.end(), wider.begin(), wider.end()));
  }
}
