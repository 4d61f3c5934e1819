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

#include <sstream>

#include "spr/bench.hpp"

namespace spr {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct Edit {
  char op;  // ' ', '-', '+'
  std::size_t a;  // index into before (for ' ' and '-')
  std::size_t b;  // index into after (for ' ' and '+')
};

std::vector<Edit> diff_lines(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::size_t>> lcs(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<Edit> edits;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      edits.push_back({' ', i++, j++});
    } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
      edits.push_back({'-', i++, j});
    } else {
      edits.push_back({'+', i, j++});
    }
  }
  return edits;
}

}  // namespace

std::string unified_diff(const std::string& before, const std::string& after, const std::string& before_name,
                         const std::string& after_name) {
  const auto a = split_lines(before);
  const auto b = split_lines(after);
  const auto edits = diff_lines(a, b);
  constexpr std::size_t kContext = 3;

  std::ostringstream out;
  bool any = false;
  std::size_t k = 0;
  while (k < edits.size()) {
    while (k < edits.size() && edits[k].op == ' ') ++k;
    if (k == edits.size()) break;
    // Grow the hunk while changes are within 2 * context of each other.
    std::size_t start = k >= kContext ? k - kContext : 0;
    std::size_t end = k;
    while (true) {
      while (end < edits.size() && edits[end].op != ' ') ++end;
      std::size_t next = end;
      while (next < edits.size() && edits[next].op == ' ') ++next;
      if (next < edits.size() && next - end <= 2 * kContext) {
        end = next;
        continue;
      }
      end = std::min(edits.size(), end + kContext);
      break;
    }
    if (!any) {
      out << "--- " << before_name << "\n+++ " << after_name << "\n";
      any = true;
    }
    std::size_t a_count = 0, b_count = 0;
    for (std::size_t x = start; x < end; ++x) {
      if (edits[x].op != '+') ++a_count;
      if (edits[x].op != '-') ++b_count;
    }
    const std::size_t a_start = a_count ? edits[start].a + 1 : edits[start].a;
    const std::size_t b_start = b_count ? edits[start].b + 1 : edits[start].b;
    out << "@@ -" << a_start << ',' << a_count << " +" << b_start << ',' << b_count << " @@\n";
    for (std::size_t x = start; x < end; ++x) {
      const auto& e = edits[x];
      out << e.op << (e.op == '+' ? b[e.b] : a[e.a]) << '\n';
    }
    k = end;
  }
  return out.str();
}

}  // namespace spr
