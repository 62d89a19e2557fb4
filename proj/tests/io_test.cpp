// Copyright 2026 The Hyperkernel Authors
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

#include "hyperkernel/io.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hyperkernel/harness.hpp"

namespace hyperkernel {
namespace {

using testing::alternating;
using testing::twin;

ParseError parse_failure(const std::string& doc) {
  try {
    parse(doc);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "document parsed: " << doc;
  return ParseError(ParseError::Kind::kSyntax, 0, 0, "");
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse("nodes: v1 v2\nedge e: v1 v2\n"), twin());
  EXPECT_EQ(parse("nodes:\n"), Hypergraph{});
  EXPECT_EQ(parse(""), Hypergraph{});
}

TEST(Parse, CommentsWhitespaceAndEmptyEdges) {
  auto h = parse(
      "# twin nodes\n"
      "\n"
      "  nodes :v1   v2  # trailing\n"
      "edge e :v1 v2\r\n"
      "edge f:\n");
  EXPECT_EQ(h, Hypergraph::build({"v1", "v2"}, {{"e", {"v1", "v2"}}, {"f", {}}}));
  EXPECT_EQ(parse("edge lonely:\n"), Hypergraph::build({}, {{"lonely", {}}}));
}

TEST(Parse, UnknownNode) {
  auto e = parse_failure("edge e: v9\n");
  EXPECT_EQ(e.kind(), ParseError::Kind::kUnknownNode);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 9u);
}

TEST(Parse, DuplicateIds) {
  auto node = parse_failure("nodes: a b a\n");
  EXPECT_EQ(node.kind(), ParseError::Kind::kDuplicateId);
  EXPECT_EQ(node.column(), 12u);

  auto edge = parse_failure("nodes: a\nedge e: a\nedge e:\n");
  EXPECT_EQ(edge.kind(), ParseError::Kind::kDuplicateId);
  EXPECT_EQ(edge.line(), 3u);

  auto member = parse_failure("nodes: a\nedge e: a a\n");
  EXPECT_EQ(member.kind(), ParseError::Kind::kDuplicateId);
}

TEST(Parse, SyntaxErrors) {
  for (const char* doc : {"vertices: a\n", "nodes a b\n", "nodes: a\nedge : a\n", "nodes: a\nedge e a\n",
                          "nodes: a\nedge e: a: b\n", "nodes: a\nnodes: b\n",
                          "nodes: a\nedge e: a\nnodes: b\n"}) {
    EXPECT_EQ(parse_failure(doc).kind(), ParseError::Kind::kSyntax) << doc;
  }
  auto e = parse_failure("nodes: a\n  bogus\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);
  EXPECT_NE(std::string(e.what()).find("2:3: syntax error"), std::string::npos);
}

TEST(Serialize, Text) {
  EXPECT_EQ(serialize(twin()), "nodes: v1 v2\nedge e: v1 v2\n");
  EXPECT_EQ(serialize(Hypergraph{}), "nodes:\n");
  const std::string alt = serialize(alternating());
  EXPECT_EQ(std::count(alt.begin(), alt.end(), '\n'), 8);
  EXPECT_EQ(alt.substr(0, alt.find('\n')), "nodes: v1 v2 v3 v4 v5 v6 v7");
  EXPECT_NE(alt.find("edge e7: v5 v7\n"), std::string::npos);
}

TEST(Serialize, Json) {
  const auto j = nlohmann::json::parse(serialize(twin(), Format::kJson));
  EXPECT_EQ(j["nodes"], nlohmann::json({"v1", "v2"}));
  ASSERT_EQ(j["edges"].size(), 1u);
  EXPECT_EQ(j["edges"][0]["id"], "e");
  EXPECT_EQ(j["edges"][0]["nodes"], nlohmann::json({"v1", "v2"}));
}

TEST(ParseJson, Errors) {
  auto syntax = parse_failure("{\n  \"nodes\": [\"a\",,]\n}");
  EXPECT_EQ(syntax.kind(), ParseError::Kind::kSyntax);
  EXPECT_EQ(syntax.line(), 2u);
  EXPECT_EQ(parse_failure(R"({"nodes": ["a"], "edges": [{"id": "e", "nodes": ["b"]}]})").kind(),
            ParseError::Kind::kUnknownNode);
  EXPECT_EQ(parse_failure(R"({"nodes": ["a", "a"]})").kind(), ParseError::Kind::kDuplicateId);
  EXPECT_EQ(parse_failure(R"({"nodes": [1]})").kind(), ParseError::Kind::kSyntax);
  EXPECT_EQ(parse_failure(R"({"nodes": ["has space"]})").kind(), ParseError::Kind::kSyntax);
  EXPECT_EQ(parse_failure(R"({"edges": [{"nodes": []}]})").kind(), ParseError::Kind::kSyntax);
}

TEST(ParseJson, IgnoresExtraKeys) {
  EXPECT_EQ(parse(R"({"nodes": ["v1", "v2"], "edges": [{"id": "e", "nodes": ["v2", "v1"]}],
                      "trace": []})"),
            twin());
}

TEST(Dot, ListsEveryIncidence) {
  const std::string dot = to_dot(twin());
  EXPECT_EQ(dot.rfind("graph hypergraph {", 0), 0u);
  EXPECT_NE(dot.find("\"n:v1\" -- \"e:e\""), std::string::npos);
  EXPECT_NE(dot.find("\"n:v2\" -- \"e:e\""), std::string::npos);
}

class IoProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(IoProperty, RoundTripBothFormats) {
  auto h = random_hypergraph({9, 9, 0.35, 2, GetParam()});
  EXPECT_EQ(parse(serialize(h, Format::kText)), h);
  EXPECT_EQ(parse(serialize(h, Format::kJson)), h);
  EXPECT_EQ(serialize(parse(serialize(h))), serialize(h));
}

INSTANTIATE_TEST_SUITE_P(Seeds, IoProperty, ::testing::Range<std::uint64_t>(0, 500));

}  // namespace
}  // namespace hyperkernel
