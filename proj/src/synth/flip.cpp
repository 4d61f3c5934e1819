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

#include <stdexcept>

#include "spr/synth.hpp"

namespace spr {

Bits flip(const Bits& r) {
  Bits out = r;
  while (!out.empty() && out.back() == 1) out.pop_back();
  if (!out.empty()) out.back() = 1;
  return out;
}

std::size_t score_condition(const Bits& r, const std::vector<Env>& s, const Cond& c) {
  if (r.size() != s.size()) {
    throw std::invalid_argument("score_condition: " + std::to_string(r.size()) + " outcomes but " +
                                std::to_string(s.size()) + " environments");
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (eval_cond(s[i], c) == r[i]) ++n;
  }
  return n;
}

}  // namespace spr
