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

// Timestamp-based statement ranking. Each run stamps every executed label
// with the value of a global step counter; scores over the negative and
// positive runs then order labels by suspiciousness.

#include <cstdint>
#include <map>
#include <vector>

#include "spr/interp.hpp"
#include "spr/lang.hpp"

namespace spr {

// Label -> last execution timestamp in one run; 0 if never executed.
using TimestampLog = std::map<Label, std::uint64_t>;

// Runs `test` with a step counter. Faulting runs keep what was stamped
// before the fault.
TimestampLog instrument_run(const Program& prog, const TestCase& test, std::uint64_t fuel = kDefaultFuel);

struct LocalizationScore {
  Label label;
  std::size_t a = 0;    // negative cases executing the label
  std::size_t b = 0;    // positive cases not executing it
  std::uint64_t c = 0;  // sum of last timestamps over negative cases
  std::size_t rank = 0; // 1-based

  friend bool operator==(const LocalizationScore&, const LocalizationScore&) = default;
};

// Every label of `prog`, ordered by (a desc, b desc, c desc, label asc).
std::vector<LocalizationScore> score_statements(const Program& prog, const TestSuite& neg, const TestSuite& pos,
                                                std::uint64_t fuel = kDefaultFuel);

// The first `limit` labels of score_statements.
std::vector<Label> localize(const Program& prog, const TestSuite& neg, const TestSuite& pos, std::size_t limit,
                            std::uint64_t fuel = kDefaultFuel);

}  // namespace spr
