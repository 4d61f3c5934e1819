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
#include <unordered_set>

#include "spr/transform.hpp"

namespace spr {

std::vector<PatchTemplate> generate_space(const Program& prog, const std::vector<Label>& targets,
                                          const SpaceConfig& cfg) {
  std::vector<PatchTemplate> all;
  const std::size_t n = std::min(cfg.loc_limit, targets.size());
  for (std::size_t rank = 0; rank < n; ++rank) {
    const Label& l = targets[rank];
    if (!prog.defines(l)) continue;
    auto add = [&](std::vector<PatchTemplate> ts) {
      for (auto& t : ts) {
        t.target_rank = rank;
        all.push_back(std::move(t));
      }
    };
    if (is_branch(prog.at(l))) {
      add(m_tighten(prog, l));
      add(m_loosen(prog, l));
    }
    add(m_control(prog, l, cfg.goto_control));
    add(m_init(prog, l));
    add(m_guard(prog, l));
    add(m_rep(prog, l, cfg.ext_rep));
    add(m_cprep(prog, l, cfg.ext_rep));
  }
  std::stable_sort(all.begin(), all.end(), [](const PatchTemplate& a, const PatchTemplate& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    if (a.target_rank != b.target_rank) return a.target_rank < b.target_rank;
    return a.text < b.text;
  });
  const std::string original = render_program(prog);
  std::unordered_set<std::string> seen;
  std::vector<PatchTemplate> out;
  out.reserve(all.size());
  for (auto& t : all) {
    if (t.text == original || !seen.insert(t.text).second) continue;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace spr
