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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "countkernel/multigraph.hpp"

namespace countkernel {

/// Text instance format:
///
///     # comment
///     p cks <n> <m> [k <K>]
///     e <u> <v> <multiplicity>
///
/// Vertices are numbered 1..n in the file and 0..n-1 in memory. <m> is the
/// number of edge lines; each unordered pair appears at most once.
struct Instance {
  MultiGraph graph;
  std::optional<int> k;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Instance parse_instance(std::string_view text);

/// Canonical form: present vertices renumbered 1..n in ascending id order,
/// edge lines sorted by (min endpoint, max endpoint).
std::string write_instance(const MultiGraph& g, std::optional<int> k = std::nullopt);

/// Plain structural dump in Graphviz syntax, one line per vertex pair.
std::string write_dot(const MultiGraph& g);

Instance read_instance_file(const std::string& path);

}  // namespace countkernel
