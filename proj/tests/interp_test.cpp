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


#include <random>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "spr/interp.hpp"

using namespace spr;

namespace {

constexpr const char* kExample =
    "L0: x = read -> L1\n"
    "L1: if (x==5) L2 L3\n"
    "L2: print 1 -> L4\n"
    "L3: print 0 -> L4\n"
    "L4: stop\n";

constexpr const char* kLoosened =
    "L0: x = read -> L1\n"
    "L1: if ((x==5) || abstc) L2 L3\n"
    "L2: print 1 -> L4\n"
    "L3: print 0 -> L4\n"
    "L4: stop\n";

Program reserved(const char* text) { return parse_program(text, {.allow_reserved = true}); }

Env env(std::map<std::string, std::int64_t> m) { return Env(std::move(m)); }

std::vector<std::int64_t> values(const Output& out) {
  std::vector<std::int64_t> v;
  for (const auto& t : out) v.push_back(t.value);
  return v;
}

}  // namespace

TEST_CASE("eval_cond") {
  CHECK(eval_cond(env({{"x", 3}}), parse_cond("(x==3)")) == 1);
  CHECK(eval_cond(Env{}, parse_cond("!(y==0)")) == 0);
  CHECK(eval_cond(env({{"x", 5}}), parse_cond("(x==5) || (x==3)")) == 1);
  CHECK(eval_cond(env({{"x", 1}, {"y", 2}}), parse_cond("(x<y) && !(y>x)")) == 0);
  CHECK(eval_cond(Env{}, parse_cond("1 && !0")) == 1);
  CHECK_THROWS_AS(eval_cond(Env{}, parse_cond("abstc")), std::logic_error);
}

TEST_CASE("step: read") {
  const Program p = parse_program(kExample);
  const std::vector<std::int64_t> in{3};
  const MachineState s0 = initial_state(p, in, AbstPlan::none());
  const auto r = step(s0, p);
  REQUIRE(std::holds_alternative<MachineState>(r));
  const auto& s1 = std::get<MachineState>(r);
  CHECK(s1.env.get("x") == 3);
  CHECK(s1.input.empty());
  CHECK(s1.pc == Label("L1"));
}

TEST_CASE("step: read on empty input faults") {
  const Program p = parse_program(kExample);
  const auto r = step(initial_state(p, {}, AbstPlan::none()), p);
  REQUIRE(std::holds_alternative<FaultCause>(r));
  CHECK(std::get<FaultCause>(r) == FaultCause::input_exhausted);
}

TEST_CASE("step: abstract condition consults the plan") {
  const Program p = reserved(kLoosened);
  MachineState s = initial_state(p, {}, AbstPlan::replay({1}));
  s.pc = Label("L1");
  s.env.set("x", 3);
  auto r = step(s, p);
  REQUIRE(std::holds_alternative<MachineState>(r));
  const auto& t = std::get<MachineState>(r);
  CHECK(t.pc == Label("L2"));
  CHECK(t.recorded == Bits{1});
  REQUIRE(t.envlog.size() == 1);
  CHECK(t.envlog[0].get("x") == 3);

  // Short-circuit: the plan is not consulted.
  s.env.set("x", 5);
  r = step(s, p);
  REQUIRE(std::holds_alternative<MachineState>(r));
  const auto& u = std::get<MachineState>(r);
  CHECK(u.pc == Label("L2"));
  CHECK(u.recorded.empty());
  CHECK(u.envlog.empty());
}

TEST_CASE("exec examples") {
  const auto o = exec(parse_program("L0: print 7 -> L1\nL1: stop\n"), {});
  REQUIRE(succeeded(o));
  CHECK(values(output_of(o)) == std::vector<std::int64_t>{7});
  CHECK(recorded_of(o).empty());
  CHECK(envlog_of(o).empty());

  const std::vector<std::int64_t> three{3};
  CHECK(values(output_of(exec(parse_program(kExample), three))) == std::vector<std::int64_t>{0});

  const auto l = exec(reserved(kLoosened), three, AbstPlan::replay({1}));
  REQUIRE(succeeded(l));
  CHECK(values(output_of(l)) == std::vector<std::int64_t>{1});
  CHECK(recorded_of(l) == Bits{1});
  REQUIRE(envlog_of(l).size() == 1);
  CHECK(envlog_of(l)[0].get("x") == 3);
}

TEST_CASE("exhaustion policies") {
  const Program p = reserved(kLoosened);
  const std::vector<std::int64_t> three{3};
  CHECK(values(output_of(exec(p, three, AbstPlan::none()))) == std::vector<std::int64_t>{0});
  CHECK(values(output_of(exec(p, three, AbstPlan::all_ones()))) == std::vector<std::int64_t>{1});
}

TEST_CASE("faults") {
  const auto div = exec(parse_program("L0: x = read -> L1\nL1: y = 1 / x -> L2\nL2: stop\n"), std::vector<std::int64_t>{0});
  REQUIRE_FALSE(succeeded(div));
  CHECK(std::get<ExecBottom>(div).cause == FaultCause::arithmetic_fault);

  const Program loop = parse_program("L0: x = x + 1 -> L1\nL1: print x -> L0\n");
  const auto spin = exec(loop, {}, AbstPlan::none(), 100);
  REQUIRE_FALSE(succeeded(spin));
  CHECK(std::get<ExecBottom>(spin).cause == FaultCause::fuel_exhausted);
  CHECK(!output_of(spin).empty());  // partial output is kept
}

TEST_CASE("wrapping arithmetic") {
  const auto o = exec(parse_program("L0: x = 9223372036854775807 -> L1\nL1: x = x + 1 -> L2\nL2: print x -> L3\nL3: stop\n"), {});
  REQUIRE(succeeded(o));
  CHECK(output_of(o)[0].value == std::numeric_limits<std::int64_t>::min());
}

TEST_CASE("test_all") {
  const Program buggy = parse_program(kExample);
  const Program fixed = parse_program(
      "L0: x = read -> L1\nL1: if ((x==5) || (x==3)) L2 L3\nL2: print 1 -> L4\nL3: print 0 -> L4\nL4: stop\n");
  const TestSuite neg{{"n", {3}, {1}}};
  const TestSuite pos{{"p", {7}, {0}}, {"h", {5}, {1}}};
  CHECK(test_all(fixed, neg, pos));
  CHECK_FALSE(test_all(buggy, neg, pos));
  CHECK(test_all(buggy, {}, {}));
  // A faulting run never passes, whatever it printed.
  CHECK_FALSE(test_all(buggy, {{"short", {}, {}}}, {}));
}

TEST_CASE("test case files") {
  const TestCase t = parse_test_case("in: 1 -2 3\nout: 4\n", "t");
  CHECK(t.input == std::vector<std::int64_t>{1, -2, 3});
  CHECK(t.output == std::vector<std::int64_t>{4});
  CHECK(parse_test_case(render_test_case(t), "t") == t);
  const TestCase e = parse_test_case("in:\nout:\n");
  CHECK(e.input.empty());
  CHECK(e.output.empty());
}

TEST_CASE("Machine agrees with the reference semantics on random programs") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> val(-2, 3);
  for (int i = 0; i < 400; ++i) {
    const Program p = oracle::random_tiny_program(rng, 8);
    std::vector<std::int64_t> in(oracle::read_count(p) + (i % 3 == 0 ? 0 : 1));
    for (auto& v : in) v = val(rng);
    if (i % 5 == 0 && !in.empty()) in.pop_back();  // sometimes run dry
    const ExecOutcome a = exec_by_steps(p, in, AbstPlan::none());
    const ExecOutcome b = Machine(p).run(in, AbstPlan::none());
    CHECK(a == b);
  }
}

TEST_CASE("Machine agrees with the reference semantics on templates") {
  const Program p = reserved(kLoosened);
  for (std::int64_t x : {3, 5, 7}) {
    const std::vector<std::int64_t> in{x};
    for (const auto& plan : {AbstPlan::none(), AbstPlan::all_ones(), AbstPlan::replay({1}), AbstPlan::replay({0})}) {
      CHECK(exec_by_steps(p, in, plan) == Machine(p).run(in, plan));
    }
  }
  const Program loop = reserved(
      "L0: x = read -> L1\nL1: if ((x==0) || abstc) L3 L2\nL2: x = x - 1 -> L1\nL3: print x -> L4\nL4: stop\n");
  const std::vector<std::int64_t> in{4};
  const auto plan = AbstPlan::replay({0, 0, 1});
  const auto a = exec_by_steps(loop, in, plan);
  CHECK(a == Machine(loop).run(in, plan));
  CHECK(recorded_of(a) == Bits{0, 0, 1});
  CHECK(envlog_of(a).size() == 3);
  CHECK(output_of(a)[0].value == 2);
}

TEST_CASE("recorded values and environments stay in step") {
  std::mt19937_64 rng(5);
  const Program loop = reserved(
      "L0: x = read -> L1\nL1: if ((x==0) || abstc) L3 L2\nL2: x = x - 1 -> L1\nL3: print x -> L4\nL4: stop\n");
  std::uniform_int_distribution<int> bit(0, 1), val(0, 6);
  for (int i = 0; i < 100; ++i) {
    Bits prefix(static_cast<std::size_t>(val(rng)));
    for (auto& b : prefix) b = bit(rng);
    const std::vector<std::int64_t> in{val(rng)};
    const auto o = exec(loop, in, AbstPlan::replay(prefix), 50);
    CHECK(recorded_of(o).size() == envlog_of(o).size());
    for (std::size_t j = 0; j < recorded_of(o).size() && j < prefix.size(); ++j) CHECK(recorded_of(o)[j] == prefix[j]);
  }
}

TEST_CASE("fuel monotonicity") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Program p = oracle::random_tiny_program(rng, 8);
    std::vector<std::int64_t> in(oracle::read_count(p), 1);
    const auto big = exec(p, in, AbstPlan::none(), 1000);
    for (std::uint64_t f = 1; f < 10; ++f) {
      const auto small = exec(p, in, AbstPlan::none(), f);
      if (succeeded(small)) CHECK(small == big);
    }
  }
}
