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

#include <gtest/gtest.h>

#include "countkernel/generators.hpp"

namespace countkernel {
namespace {

TEST(GraphIoTest, ParsesHeaderAndEdges) {
  const Instance inst = parse_instance(
      "# a triangle with a doubled edge\n"
      "p cks 3 3 k 2\n"
      "e 1 2 1\n"
      "e 2 3 2\n"
      "\n"
      "e 3 1 1\n");
  ASSERT_TRUE(inst.k.has_value());
  EXPECT_EQ(*inst.k, 2);
  EXPECT_EQ(inst.graph.num_vertices(), 3u);
  EXPECT_EQ(inst.graph.multiplicity(1, 2), 2u);
  EXPECT_EQ(inst.graph.multiplicity(0, 2), 1u);
  EXPECT_EQ(inst.graph.num_edges(), 4u);
}

TEST(GraphIoTest, HeaderWithoutK) {
  const Instance inst = parse_instance("p cks 4 0\n");
  EXPECT_FALSE(inst.k.has_value());
  EXPECT_EQ(inst.graph.num_vertices(), 4u);
}

TEST(GraphIoTest, RoundTrip) {
  MultiGraph g = make_random({9, 14, 7, 0.3, 3});
  const std::string text = write_instance(g, 3);
  const Instance back = parse_instance(text);
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(write_instance(back.graph, back.k), text);
}

TEST(GraphIoTest, CanonicalRenumbering) {
  MultiGraph g(5);
  g.add_edge(4, 2);
  g.remove_vertex(0);
  g.remove_vertex(1);
  g.remove_vertex(3);
  EXPECT_EQ(write_instance(g), "p cks 2 1\ne 1 2 1\n");
}

void expect_error_on_line(const std::string& text, std::size_t line) {
  try {
    parse_instance(text);
    FAIL() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

TEST(GraphIoTest, Errors) {
  expect_error_on_line("e 1 2 1\n", 1);
  expect_error_on_line("p cks 3 1\ne 1 4 1\n", 2);
  expect_error_on_line("p cks 3 1\ne 2 2 1\n", 2);
  expect_error_on_line("p cks 3 2\ne 1 2 1\ne 2 1 1\n", 3);
  expect_error_on_line("p cks 3 1\ne 1 2 0\n", 2);
  expect_error_on_line("p cks 3 1\ne 1 x 1\n", 2);
  expect_error_on_line("p cks 3\n", 1);
  expect_error_on_line("p cks 3 0\nq\n", 2);
  expect_error_on_line("p cks 3 0 k -1\n", 1);
  expect_error_on_line("p cks 3 0\np cks 3 0\n", 2);
  EXPECT_THROW(parse_instance("# nothing\n"), ParseError);
  EXPECT_THROW(parse_instance("p cks 3 2\ne 1 2 1\n"), ParseError);
}

TEST(GraphIoTest, ErrorMessageNamesLine) {
  try {
    parse_instance("p cks 2 1\n\ne 1 3 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3:", 0), 0u);
  }
}

TEST(GraphIoTest, Dot) {
  MultiGraph g(2);
  g.add_edge(0, 1, 2);
  const std::string dot = write_dot(g);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1 [label=\"x2\"]"), std::string::npos);
}

TEST(GraphIoTest, MissingFile) {
  EXPECT_THROW(read_instance_file("/nonexistent/instance.cks"), std::runtime_error);
}

}  // namespace
}  // namespace countkernel
