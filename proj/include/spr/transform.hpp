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

// Transformation schemas. Each schema maps a program and a target label to
// a set of patch templates; templates may contain one abstract condition
// (`abstc`) or one abstract print value (`abstval`) to be resolved later
// by synthesis.

#include <string>
#include <string_view>
#include <vector>

#include "spr/lang.hpp"

namespace spr {

enum class Schema { tighten, loosen, control, guard, init, rep, cprep };

std::string_view to_string(Schema schema);

enum class Marker { none, abstc, abstval };

std::string_view to_string(Marker marker);
Marker marker_of(const Program& prog);

struct PatchTemplate {
  Program program;
  Schema schema = Schema::rep;
  Label target;
  int tier = 0;
  std::string provenance;
  std::size_t target_rank = 0;  // position of target in the localization list
  std::string text;             // canonical rendering

  Marker marker() const { return marker_of(program); }
};

struct SpaceConfig {
  std::size_t loc_limit = 200;
  bool ext_cond = false;  // richer condition space during synthesis
  bool ext_rep = false;   // operator expressions as replacement values
  bool goto_control = false;

  friend bool operator==(const SpaceConfig&, const SpaceConfig&) = default;
};

// Priority class: 1 tighten/loosen, 2 control, 3 guard, 4 abstract print,
// 5 init, 6 replace, 7 copy-and-replace.
int tier_of(Schema schema, Marker marker);

std::vector<PatchTemplate> m_tighten(const Program& prog, const Label& target);
std::vector<PatchTemplate> m_loosen(const Program& prog, const Label& target);
std::vector<PatchTemplate> m_guard(const Program& prog, const Label& target);
std::vector<PatchTemplate> m_control(const Program& prog, const Label& target, bool goto_control = false);
std::vector<PatchTemplate> m_init(const Program& prog, const Label& target);
std::vector<PatchTemplate> m_rep(const Program& prog, const Label& target, bool ext_rep = false);
std::vector<PatchTemplate> m_cprep(const Program& prog, const Label& target, bool ext_rep = false);

// Statements obtained from `s` by replacing one variable or constant with
// another from `prog`. Prints map to `print abstval`. With `ext_rep`,
// assignments and reads also get every `dst = a op b` over the program's
// variables and constants. Never contains `s`. Sorted by rendered text.
std::vector<Statement> reps(const Program& prog, const Statement& s, bool ext_rep = false);

// All schemas over the first cfg.loc_limit labels of `targets`, deduplicated
// and ordered by (tier, target rank, canonical text).
std::vector<PatchTemplate> generate_space(const Program& prog, const std::vector<Label>& targets,
                                          const SpaceConfig& cfg);

}  // namespace spr
