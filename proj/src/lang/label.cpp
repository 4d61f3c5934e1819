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

#include "spr/lang.hpp"

namespace spr {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  const std::string& x = a.name_;
  const std::string& y = b.name_;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (is_digit(x[i]) && is_digit(y[j])) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < x.size() && is_digit(x[ei])) ++ei;
      while (ej < y.size() && is_digit(y[ej])) ++ej;
      // Compare digit runs by magnitude, ignoring leading zeros.
      std::size_t zi = i;
      std::size_t zj = j;
      while (zi + 1 < ei && x[zi] == '0') ++zi;
      while (zj + 1 < ej && y[zj] == '0') ++zj;
      if (ei - zi != ej - zj) return (ei - zi) <=> (ej - zj);
      if (int c = x.compare(zi, ei - zi, y, zj, ej - zj); c != 0) return c <=> 0;
      i = ei;
      j = ej;
      continue;
    }
    if (x[i] != y[j]) return x[i] <=> y[j];
    ++i;
    ++j;
  }
  if (x.size() - i != y.size() - j) return (x.size() - i) <=> (y.size() - j);
  // Equal under natural order (e.g. L01 vs L1): fall back to bytes.
  return x.compare(y) <=> 0;
}

bool is_reserved_label(std::string_view name) {
  if (name.size() < 2 || name[0] != 'G') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!is_digit(name[i])) return false;
  }
  return true;
}

}  // namespace spr
