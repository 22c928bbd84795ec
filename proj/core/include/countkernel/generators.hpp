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

#include <cstdint>

#include "countkernel/multigraph.hpp"

namespace countkernel {

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///   state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
/// next() returns the top 31 bits of the new state. The state starts at the
/// seed. Fixed so that generated fixtures are reproducible anywhere.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 33);
  }
  /// next() % bound
  std::uint32_t below(std::uint32_t bound) { return next() % bound; }
  /// next() / 2^31, in [0, 1)
  double unit() { return static_cast<double>(next()) / 2147483648.0; }

 private:
  std::uint64_t state_;
};

/// Cycle on vertices 0..n-1 (n >= 2; n == 2 gives a double edge).
MultiGraph make_cycle(std::size_t n);

/// Branch vertices 0 and 1 joined by three paths with l1, l2, l3 edges.
MultiGraph make_theta(std::size_t l1, std::size_t l2, std::size_t l3);

/// r x c grid, vertex (i, j) = i * c + j.
MultiGraph make_grid(std::size_t rows, std::size_t cols);

struct RandomGraphSpec {
  std::size_t n = 0;
  /// Number of distinct vertex pairs.
  std::size_t m = 0;
  std::uint64_t seed = 0;
  /// Probability that a sampled pair becomes a parallel edge.
  double multi_probability = 0.0;
  /// Parallel edges get a multiplicity drawn uniformly from [2, max_multiplicity].
  Multiplicity max_multiplicity = 2;
};

/// Samples m distinct pairs uniformly (u = below(n), v = below(n), redraw on
/// u == v or a repeated pair). Then, per pair in sampling order, unit() <
/// multi_probability promotes it to multiplicity 2 + below(max - 1).
MultiGraph make_random(const RandomGraphSpec& spec);

/// Endpoints 0 and 1 plus members 2..s+1 adjacent to both.
MultiGraph make_diamond_host(std::size_t s);

}  // namespace countkernel
