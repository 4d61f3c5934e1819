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
#include <random>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "spr/localize.hpp"

using namespace spr;

namespace {

constexpr const char* kExample =
    "L0: x = read -> L1\n"
    "L1: if (x==5) L2 L3\n"
    "L2: print 1 -> L4\n"
    "L3: print 0 -> L4\n"
    "L4: stop\n";

std::vector<Label> labels(std::initializer_list<const char*> names) {
  std::vector<Label> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

}  // namespace

TEST_CASE("timestamps on straight-line code") {
  const Program p = parse_program("L0: x = 1 -> L1\nL1: print x -> L2\nL2: stop\n");
  const auto log = instrument_run(p, TestCase{});
  CHECK(log.at(Label("L0")) == 1);
  CHECK(log.at(Label("L1")) == 2);
  CHECK(log.at(Label("L2")) == 3);
}

TEST_CASE("timestamps on the worked example") {
  const Program p = parse_program(kExample);
  const auto log = instrument_run(p, TestCase{"n", {3}, {1}});
  CHECK(log.at(Label("L3")) > 0);
  CHECK(log.at(Label("L2")) == 0);
}

TEST_CASE("timestamps keep the last execution and survive faults") {
  const Program loop = parse_program(
      "L0: x = read -> L1\nL1: if (x==0) L3 L2\nL2: x = x - 1 -> L1\nL3: y = 1 / x -> L4\nL4: stop\n");
  const auto log = instrument_run(loop, TestCase{"t", {2}, {}});
  // L0, L1, L2, L1, L2, L1, L3 (faults)
  CHECK(log.at(Label("L1")) == 6);
  CHECK(log.at(Label("L2")) == 5);
  CHECK(log.at(Label("L3")) == 7);
  CHECK(log.at(Label("L4")) == 0);
}

TEST_CASE("worked example ranking") {
  const Program p = parse_program(kExample);
  const TestSuite neg{{"n", {3}, {1}}};
  const TestSuite pos{{"p", {7}, {0}}};
  CHECK(localize(p, neg, pos, 10) == labels({"L4", "L3", "L1", "L0", "L2"}));
  CHECK(localize(p, neg, pos, 1) == labels({"L4"}));
  const auto scores = score_statements(p, neg, pos);
  CHECK(scores.back().label == Label("L2"));
  CHECK(scores.back().a == 0);
  CHECK(scores.back().b == 1);
  CHECK(scores.back().c == 0);
}

TEST_CASE("negative-only statements rank first") {
  const Program p = parse_program(
      "L0: x = read -> L1\nL1: if (x==1) L2 L3\nL2: print 7 -> L4\nL3: print 0 -> L4\nL4: stop\n");
  const TestSuite neg{{"n", {1}, {8}}};
  const TestSuite pos{{"p", {2}, {0}}};
  CHECK(localize(p, neg, pos, 1) == labels({"L2"}));
}

TEST_CASE("ranking properties on random programs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto inst = oracle::random_instance(rng);
    const auto full = localize(inst.buggy, inst.neg, inst.pos, 1000);
    CHECK(full.size() == inst.buggy.stmt_of.size());
    for (std::size_t k = 1; k <= full.size(); ++k) {
      const auto prefix = localize(inst.buggy, inst.neg, inst.pos, k);
      CHECK(std::equal(prefix.begin(), prefix.end(), full.begin()));
    }
    TestSuite neg = inst.neg, pos = inst.pos;
    std::shuffle(neg.begin(), neg.end(), rng);
    std::shuffle(pos.begin(), pos.end(), rng);
    CHECK(localize(inst.buggy, neg, pos, 1000) == full);

    for (const auto& s : score_statements(inst.buggy, inst.neg, inst.pos)) {
      std::size_t executed = 0;
      for (const auto& t : inst.neg) executed += instrument_run(inst.buggy, t).at(s.label) != 0 ? 1 : 0;
      CHECK(s.a == executed);
      CHECK(s.a <= inst.neg.size());
      CHECK(s.b <= inst.pos.size());
      if (s.c > 0) CHECK(s.a > 0);
    }
  }
}
