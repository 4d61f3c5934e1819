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

#include <cstdint>
#include <limits>
#include <optional>

#include "spr/lang.hpp"

namespace spr::detail {

// Two's-complement wrapping arithmetic; nullopt on division by zero.
inline std::optional<std::int64_t> apply_binop(BinOp op, std::int64_t a, std::int64_t b) {
  auto ua = static_cast<std::uint64_t>(a);
  auto ub = static_cast<std::uint64_t>(b);
  switch (op) {
    case BinOp::add: return static_cast<std::int64_t>(ua + ub);
    case BinOp::sub: return static_cast<std::int64_t>(ua - ub);
    case BinOp::mul: return static_cast<std::int64_t>(ua * ub);
    case BinOp::div:
      if (b == 0) return std::nullopt;
      if (a == std::numeric_limits<std::int64_t>::min() && b == -1) return a;
      return a / b;
    case BinOp::mod:
      if (b == 0) return std::nullopt;
      if (b == -1) return 0;
      return a % b;
    case BinOp::eq: return a == b;
    case BinOp::ne: return a != b;
    case BinOp::lt: return a < b;
    case BinOp::le: return a <= b;
    case BinOp::gt: return a > b;
    case BinOp::ge: return a >= b;
  }
  return std::nullopt;
}

inline bool apply_cmp(CmpOp op, std::int64_t a, std::int64_t b) {
  switch (op) {
    case CmpOp::eq: return a == b;
    case CmpOp::lt: return a < b;
    case CmpOp::gt: return a > b;
  }
  return false;
}

}  // namespace spr::detail
