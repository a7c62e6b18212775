// Copyright 2026 The nashqcp Authors.
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

#ifndef NASHQCP_LINEAR_H_
#define NASHQCP_LINEAR_H_

#include <cstddef>
#include <string_view>

namespace nashqcp {

using VarId = std::size_t;

enum class Sense : char { kEqual, kLessEqual, kGreaterEqual };

constexpr std::string_view sense_symbol(Sense sense) {
  switch (sense) {
    case Sense::kEqual:
      return "=";
    case Sense::kLessEqual:
      return "<=";
    case Sense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

// How far `activity` is from satisfying `activity sense rhs`; 0 if it does.
template <typename T>
T row_violation(const T& activity, Sense sense, const T& rhs) {
  T gap = activity - rhs;
  switch (sense) {
    case Sense::kEqual:
      return gap < T(0) ? T(-gap) : gap;
    case Sense::kLessEqual:
      return gap > T(0) ? gap : T(0);
    case Sense::kGreaterEqual:
      return gap < T(0) ? T(-gap) : T(0);
  }
  return T(0);
}

}  // namespace nashqcp

#endif  // NASHQCP_LINEAR_H_
