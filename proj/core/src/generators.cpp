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

#include "countkernel/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace countkernel {

MultiGraph make_cycle(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return g;
}

MultiGraph make_theta(std::size_t l1, std::size_t l2, std::size_t l3) {
  if (l1 == 0 || l2 == 0 || l3 == 0) throw std::invalid_argument("theta path lengths must be positive");
  MultiGraph g(2);
  for (std::size_t len : {l1, l2, l3}) {
    VertexId prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      const VertexId x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

MultiGraph make_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  MultiGraph g(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = static_cast<VertexId>(i * cols + j);
      if (j + 1 < cols) g.add_edge(v, v + 1);
      if (i + 1 < rows) g.add_edge(v, static_cast<VertexId>(v + cols));
    }
  }
  return g;
}

MultiGraph make_random(const RandomGraphSpec& spec) {
  const std::size_t n = spec.n;
  if (n > 1'000'000) throw std::invalid_argument("random: too many vertices");
  if (spec.m > n * (n - (n > 0 ? 1 : 0)) / 2) throw std::invalid_argument("random: more pairs than the graph can hold");
  if (spec.multi_probability < 0.0 || spec.multi_probability > 1.0) {
    throw std::invalid_argument("random: multiplicity probability must lie in [0, 1]");
  }
  if (spec.max_multiplicity < 2) throw std::invalid_argument("random: maximum multiplicity must be at least 2");

  Lcg rng(spec.seed);
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<std::pair<VertexId, VertexId>> order;
  const auto bound = static_cast<std::uint32_t>(n);
  while (order.size() < spec.m) {
    const VertexId u = rng.below(bound);
    const VertexId v = rng.below(bound);
    if (u == v) continue;
    const std::pair key{std::min(u, v), std::max(u, v)};
    if (used.insert(key).second) order.push_back(key);
  }

  MultiGraph g(n);
  for (const auto& [u, v] : order) {
    Multiplicity mult = 1;
    if (spec.multi_probability > 0.0 && rng.unit() < spec.multi_probability) {
      mult = 2 + rng.below(spec.max_multiplicity - 1);
    }
    g.add_edge(u, v, mult);
  }
  return g;
}

MultiGraph make_diamond_host(std::size_t s) {
  MultiGraph g(2 + s);
  for (std::size_t i = 0; i < s; ++i) {
    g.add_edge(0, static_cast<VertexId>(2 + i));
    g.add_edge(1, static_cast<VertexId>(2 + i));
  }
  return g;
}

}  // namespace countkernel
