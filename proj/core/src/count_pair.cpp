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

#include "countkernel/count_pair.hpp"

namespace countkernel {

namespace {

CountPair normalized(std::int64_t size, BigCount count) {
  if (size == CountPair::kInfinite) return CountPair::none();
  return {size, std::move(count)};
}

}  // namespace

CountPair oplus(const CountPair& x, const CountPair& y) {
  if (x.size < y.size) return x;
  if (x.size > y.size) return y;
  return normalized(x.size, x.count + y.count);
}

CountPair pair_add(const CountPair& x, const CountPair& y) {
  if (x.is_infinite() || y.is_infinite()) return CountPair::none();
  return normalized(x.size + y.size, x.count + y.count);
}

CountPair pair_mul(const CountPair& x, const CountPair& y) {
  if (x.is_infinite() || y.is_infinite()) return CountPair::none();
  return normalized(x.size * y.size, x.count * y.count);
}

std::string to_string(const CountPair& p) {
  return (p.is_infinite() ? std::string("inf") : std::to_string(p.size)) + " " + p.count.str();
}

std::ostream& operator<<(std::ostream& os, const CountPair& p) { return os << to_string(p); }

}  // namespace countkernel
