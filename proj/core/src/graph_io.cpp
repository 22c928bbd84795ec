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

#include "countkernel/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace countkernel {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_integer(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Instance parse_instance(std::string_view text) {
  Instance out;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long edge_lines = 0;
  std::set<std::pair<long long, long long>> pairs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header line");
      if ((tokens.size() != 4 && tokens.size() != 6) || tokens[1] != "cks") {
        throw ParseError(line_no, "header must read 'p cks <n> <m> [k <K>]'");
      }
      n = to_integer(tokens[2], line_no);
      m = to_integer(tokens[3], line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "negative vertex or edge count");
      if (n > 100'000'000) throw ParseError(line_no, "vertex count too large");
      if (tokens.size() == 6) {
        if (tokens[4] != "k") throw ParseError(line_no, "expected 'k' before the parameter");
        const long long k = to_integer(tokens[5], line_no);
        if (k < 0 || k > 1'000'000'000) throw ParseError(line_no, "parameter k out of range");
        out.k = static_cast<int>(k);
      }
      out.graph = MultiGraph(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }

    if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before header");
      if (tokens.size() != 4) throw ParseError(line_no, "edge line must read 'e <u> <v> <multiplicity>'");
      const long long u = to_integer(tokens[1], line_no);
      const long long v = to_integer(tokens[2], line_no);
      const long long mult = to_integer(tokens[3], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "vertex index out of range [1, " + std::to_string(n) + "]");
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (mult < 1 || mult > 1'000'000'000) throw ParseError(line_no, "multiplicity must be positive");
      if (!pairs.emplace(std::min(u, v), std::max(u, v)).second) {
        throw ParseError(line_no, "duplicate edge line for pair {" + std::to_string(u) + ", " +
                                      std::to_string(v) + "}");
      }
      out.graph.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1),
                         static_cast<Multiplicity>(mult));
      ++edge_lines;
      continue;
    }

    throw ParseError(line_no, "unrecognised line type '" + std::string(tokens[0]) + "'");
  }

  if (!have_header) throw ParseError(line_no, "missing 'p cks' header");
  if (edge_lines != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edge lines, found " +
                                  std::to_string(edge_lines));
  }
  return out;
}

std::string write_instance(const MultiGraph& g, std::optional<int> k) {
  const VertexSet vs = g.vertices();
  std::vector<VertexId> rank(g.id_bound(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) rank[vs[i]] = static_cast<VertexId>(i + 1);

  // Ranks preserve id order, so edges() is already canonically sorted.
  const auto edges = g.edges();
  std::ostringstream os;
  os << "p cks " << vs.size() << ' ' << edges.size();
  if (k) os << " k " << *k;
  os << '\n';
  for (const Edge& e : edges) {
    os << "e " << rank[e.u] << ' ' << rank[e.v] << ' ' << e.multiplicity << '\n';
  }
  return os.str();
}

std::string write_dot(const MultiGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v : g.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (e.multiplicity > 1) os << " [label=\"x" << e.multiplicity << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace countkernel
