// Copyright 2026 The countkernel Authors
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

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace countkernel {

using BigCount = boost::multiprecision::cpp_int;

/// (minimum solution size, weighted number of minimum solutions).
///
/// size == kInfinite means "no solution within budget"; count is then zero.
struct CountPair {
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();

  std::int64_t size = kInfinite;
  BigCount count = 0;

  static CountPair none() { return {}; }
  static CountPair of(std::int64_t size, BigCount count) { return {size, std::move(count)}; }

  bool is_infinite() const noexcept { return size == kInfinite; }

  friend bool operator==(const CountPair&, const CountPair&) = default;
};

/// Smaller size wins; equal sizes add counts. Identity: (inf, 0).
CountPair oplus(const CountPair& x, const CountPair& y);

/// Element-wise sum; an infinite size absorbs.
CountPair pair_add(const CountPair& x, const CountPair& y);

/// Element-wise product; an infinite size absorbs.
CountPair pair_mul(const CountPair& x, const CountPair& y);

inline CountPair operator+(const CountPair& x, const CountPair& y) { return pair_add(x, y); }
inline CountPair operator*(const CountPair& x, const CountPair& y) { return pair_mul(x, y); }

/// "a b" with a printed as "inf" when infinite.
std::string to_string(const CountPair& p);
std::ostream& operator<<(std::ostream& os, const CountPair& p);

}  // namespace countkernel
