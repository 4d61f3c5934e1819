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

// Small-step interpreter for the core language, including the abstract
// condition / abstract value extensions used while searching for repairs.
//
// Two routes execute a program: `step` rewrites a full MachineState one
// transition at a time and is the reference semantics; `Machine` compiles
// the label graph into flat arrays and is what everything else uses.

#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spr/lang.hpp"

namespace spr {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// Sequence of abstract-condition outcomes, each 0 or 1.
using Bits = std::vector<int>;

// Variable environment. Unset variables read as 0.
class Env {
 public:
  Env() = default;
  explicit Env(std::map<std::string, std::int64_t> values) : values_(std::move(values)) {}

  std::int64_t get(const std::string& name) const;
  void set(const std::string& name, std::int64_t value) { values_[name] = value; }
  const std::map<std::string, std::int64_t>& values() const { return values_; }

  friend bool operator==(const Env&, const Env&) = default;

 private:
  std::map<std::string, std::int64_t> values_;
};

// One output element: an integer, or the placeholder printed by
// `print abstval`.
struct OutToken {
  bool abstval = false;
  std::int64_t value = 0;

  static OutToken of(std::int64_t v) { return {false, v}; }
  static OutToken placeholder() { return {true, 0}; }

  friend bool operator==(const OutToken&, const OutToken&) = default;
};

using Output = std::vector<OutToken>;

Output to_output(std::span<const std::int64_t> values);
bool output_equals(const Output& actual, std::span<const std::int64_t> expected);
std::string render_output(const Output& out);

enum class Exhaustion {
  preserve,   // exhausted plan answers 0, the semantics-preserving value
  force_one,  // exhausted plan answers 1
};

// Future abstract-condition values consumed by the interpreter.
struct AbstPlan {
  Bits prefix;
  Exhaustion exhaustion = Exhaustion::preserve;

  static AbstPlan none() { return {}; }
  static AbstPlan replay(Bits prefix) { return {std::move(prefix), Exhaustion::preserve}; }
  static AbstPlan all_ones() { return {{}, Exhaustion::force_one}; }

  int at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return exhaustion == Exhaustion::force_one ? 1 : 0;
  }
};

enum class FaultCause { input_exhausted, fuel_exhausted, arithmetic_fault };

std::string_view to_string(FaultCause cause);

struct ExecSuccess {
  Output output;
  Bits recorded;
  std::vector<Env> envlog;
  std::uint64_t steps = 0;

  friend bool operator==(const ExecSuccess&, const ExecSuccess&) = default;
};

// Failed execution. The partial recordings up to the fault are kept for
// diagnostics and for deriving the next abstract-condition plan.
struct ExecBottom {
  FaultCause cause = FaultCause::fuel_exhausted;
  Output output;
  Bits recorded;
  std::vector<Env> envlog;

  friend bool operator==(const ExecBottom&, const ExecBottom&) = default;
};

using ExecOutcome = std::variant<ExecSuccess, ExecBottom>;

inline bool succeeded(const ExecOutcome& o) { return std::holds_alternative<ExecSuccess>(o); }
const Output& output_of(const ExecOutcome& o);
const Bits& recorded_of(const ExecOutcome& o);
const std::vector<Env>& envlog_of(const ExecOutcome& o);

// Evaluates a concrete condition; 1 or 0. Throws std::logic_error if the
// condition contains the abstract marker.
int eval_cond(const Env& env, const Cond& cond);

// Full program state <pc, env, input, output, plan, recorded, envlog>.
struct MachineState {
  std::optional<Label> pc;  // nullopt once terminated
  Env env;
  std::deque<std::int64_t> input;
  Output output;
  AbstPlan plan;
  std::size_t plan_cursor = 0;
  Bits recorded;
  std::vector<Env> envlog;
};

MachineState initial_state(const Program& prog, std::span<const std::int64_t> input, AbstPlan plan);

using StepResult = std::variant<MachineState, FaultCause>;

// One transition of the reference semantics. Requires state.pc to be set.
StepResult step(const MachineState& state, const Program& prog);

// Iterates `step` until termination or fuel exhaustion.
ExecOutcome exec_by_steps(const Program& prog, std::span<const std::int64_t> input, const AbstPlan& plan,
                          std::uint64_t fuel = kDefaultFuel);

// Compiled form of a program. Immutable; run() is reentrant.
class Machine {
 public:
  // Called with the index (into labels()) of every statement before it runs.
  using StepObserver = std::function<void(std::size_t)>;

  explicit Machine(const Program& prog);
  ~Machine();
  Machine(Machine&&) noexcept;
  Machine& operator=(Machine&&) noexcept;

  ExecOutcome run(std::span<const std::int64_t> input, const AbstPlan& plan, std::uint64_t fuel = kDefaultFuel,
                  const StepObserver* observer = nullptr) const;

  const std::vector<Label>& labels() const;
  bool abstract_condition_mode() const;
  bool abstract_value_mode() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

ExecOutcome exec(const Program& prog, std::span<const std::int64_t> input, const AbstPlan& plan = AbstPlan::none(),
                 std::uint64_t fuel = kDefaultFuel);

struct TestCase {
  std::string name;
  std::vector<std::int64_t> input;
  std::vector<std::int64_t> output;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

using TestSuite = std::vector<TestCase>;

bool passes(const Machine& machine, const TestCase& test, std::uint64_t fuel = kDefaultFuel);

// True iff every case runs to completion with exactly the expected output.
// Negative cases run first; stops at the first failure.
bool test_all(const Program& prog, const TestSuite& neg, const TestSuite& pos, std::uint64_t fuel = kDefaultFuel);

// Test case files: `in: 1 2 3` / `out: 4` (either list may be empty).
TestCase parse_test_case(std::string_view text, std::string name = {});
std::string render_test_case(const TestCase& test);
TestCase load_test_case(const std::filesystem::path& path);
// All `*.txt` files of a directory in name order; missing directory is empty.
TestSuite load_test_suite(const std::filesystem::path& dir);

}  // namespace spr
