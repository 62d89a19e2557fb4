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

#include "hyperkernel/rewrite.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hyperkernel/harness.hpp"
#include "hyperkernel/hitting.hpp"
#include "hyperkernel/iso.hpp"
#include "oracles.hpp"

namespace hyperkernel {
namespace {

using testing::alternating;
using testing::dupe;
using testing::twin;

using Rules = std::vector<RuleApplication>;

TEST(FindEdgeDominations, Examples) {
  EXPECT_TRUE(find_edge_dominations(twin()).empty());
  EXPECT_EQ(find_edge_dominations(dupe()),
            (Rules{RuleApplication::edge("e1", "e2"), RuleApplication::edge("e2", "e1")}));
  EXPECT_TRUE(find_edge_dominations(alternating()).empty());
  EXPECT_EQ(find_edge_dominations(remove_node(alternating(), "v1")),
            (Rules{RuleApplication::edge("e2", "e1")}));
}

TEST(FindEdgeDominations, EmptyEdgeDominatesEverything) {
  auto h = Hypergraph::build({"a", "b"}, {{"f", {}}, {"g", {"a"}}, {"h", {"a", "b"}}});
  EXPECT_EQ(find_edge_dominations(h),
            (Rules{RuleApplication::edge("g", "f"), RuleApplication::edge("h", "f"),
                   RuleApplication::edge("h", "g")}));
}

TEST(FindNodeDominations, Examples) {
  EXPECT_EQ(find_node_dominations(twin()),
            (Rules{RuleApplication::node("v1", "v2"), RuleApplication::node("v2", "v1")}));
  EXPECT_EQ(find_node_dominations(alternating()), (Rules{RuleApplication::node("v1", "v2")}));
  auto no_edges = Hypergraph::build({"a", "b"}, {});
  EXPECT_EQ(find_node_dominations(no_edges),
            (Rules{RuleApplication::node("a", "b"), RuleApplication::node("b", "a")}));
}

TEST(FindNodeDominations, IsolatedNodeIsDominatedByAll) {
  auto h = Hypergraph::build({"a", "b", "u"}, {{"e", {"a"}}, {"f", {"b"}}});
  EXPECT_EQ(find_node_dominations(h),
            (Rules{RuleApplication::node("u", "a"), RuleApplication::node("u", "b")}));
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(twin(), RuleApplication::node("v1", "v2")),
            Hypergraph::build({"v2"}, {{"e", {"v2"}}}));
  EXPECT_EQ(apply(dupe(), RuleApplication::edge("e2", "e1")),
            Hypergraph::build({"v1"}, {{"e1", {"v1"}}}));
}

TEST(Apply, InapplicableRuleNamesTheInclusion) {
  try {
    apply(alternating(), RuleApplication::edge("e2", "e1"));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("{v1, v2}"), std::string::npos) << msg;
    EXPECT_NE(msg.find("{v2, v3}"), std::string::npos) << msg;
  }
  EXPECT_THROW(apply(twin(), RuleApplication::node("v1", "v1")), PreconditionError);
  EXPECT_THROW(apply(twin(), RuleApplication::node("v1", "zz")), PreconditionError);
  EXPECT_THROW(apply(twin(), RuleApplication::edge("e", "zz")), PreconditionError);
}

TEST(Step, LexicographicChoice) {
  auto s = step(twin(), Strategy::lex_node_first());
  ASSERT_TRUE(s);
  EXPECT_EQ(s->rule, RuleApplication::node("v1", "v2"));
  EXPECT_EQ(s->result, Hypergraph::build({"v2"}, {{"e", {"v2"}}}));

  auto both = Hypergraph::build({"a", "b"}, {{"e", {"a", "b"}}, {"f", {"a", "b"}}});
  EXPECT_TRUE(step(both, Strategy::lex_node_first())->rule.is_node());
  EXPECT_TRUE(step(both, Strategy::lex_edge_first())->rule.is_edge());
  EXPECT_EQ(step(both, Strategy::lex_edge_first())->rule, RuleApplication::edge("e", "f"));
}

TEST(Step, MinimalHasNoStep) {
  EXPECT_FALSE(step(Hypergraph{}, Strategy::lex_node_first()));
  EXPECT_FALSE(step(Hypergraph::build({"v"}, {{"e", {"v"}}}), Strategy::random(5)));
}

TEST(Step, SingletonCandidateForAnyStrategy) {
  for (auto s : {Strategy::lex_node_first(), Strategy::lex_edge_first(), Strategy::random(1),
                 Strategy::random(99)}) {
    auto r = step(alternating(), s);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->rule, RuleApplication::node("v1", "v2"));
  }
}

TEST(Step, RandomIsDeterministicPerSeed) {
  auto h = random_hypergraph({8, 8, 0.5, 3, 17});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(reduce(h, Strategy::random(seed)).trace, reduce(h, Strategy::random(seed)).trace);
  }
}

TEST(Reduce, AlternatingExample) {
  auto red = reduce(alternating(), Strategy::lex_node_first());
  EXPECT_EQ(red.trace.steps,
            (Rules{RuleApplication::node("v1", "v2"), RuleApplication::edge("e2", "e1"),
                   RuleApplication::node("v3", "v4"), RuleApplication::edge("e4", "e3")}));
  EXPECT_EQ(red.result.nodes(), (std::set<NodeId>{"v2", "v4", "v5", "v6", "v7"}));
  EXPECT_EQ(red.result.edges(), (std::set<EdgeId>{"e1", "e3", "e5", "e6", "e7"}));
  EXPECT_TRUE(is_minimal(red.result));
  EXPECT_EQ(replay(alternating(), red.trace), red.result);
}

TEST(Reduce, MinimalIsFixedPoint) {
  auto h = Hypergraph::build({"a", "b", "c"}, {{"x", {"a", "b"}}, {"y", {"b", "c"}}, {"z", {"a", "c"}}});
  ASSERT_TRUE(is_minimal(h));
  auto red = reduce(h, Strategy::lex_edge_first());
  EXPECT_EQ(red.result, h);
  EXPECT_TRUE(red.trace.empty());
}

TEST(Reduce, IsolatedPair) {
  auto red = reduce(Hypergraph::build({"u", "w"}, {}), Strategy::lex_node_first());
  EXPECT_EQ(red.result.num_nodes(), 1u);
  EXPECT_EQ(red.result.num_edges(), 0u);
  ASSERT_EQ(red.trace.size(), 1u);
  EXPECT_TRUE(red.trace.steps[0].is_node());
}

TEST(IsMinimal, Examples) {
  EXPECT_TRUE(is_minimal(Hypergraph{}));
  EXPECT_FALSE(is_minimal(twin()));
  EXPECT_TRUE(is_minimal(reduce(alternating(), Strategy::random(3)).result));
}

TEST(RuleText, RoundTrip) {
  const auto r = RuleApplication::edge("e4", "e3");
  EXPECT_EQ(to_string(r), "edge remove=e4 witness=e3");
  EXPECT_EQ(parse_rule(to_string(r)), r);
  EXPECT_EQ(parse_rule("node remove=v1 witness=v2"), RuleApplication::node("v1", "v2"));
  EXPECT_FALSE(parse_rule("vertex remove=v1 witness=v2"));
  EXPECT_FALSE(parse_rule("node v1 v2"));
  EXPECT_FALSE(parse_rule("node remove=v1 witness=v2 extra"));
}

// Brute-force agreement for every hypergraph up to 3x3 and random ones up
// to 6x6.
TEST(Completeness, ExhaustiveSmall) {
  std::size_t seen = 0;
  for_each_hypergraph(3, 3, [&](const Hypergraph& h) {
    ++seen;
    auto found = find_rules(h);
    EXPECT_EQ(std::set<RuleApplication>(found.begin(), found.end()), testing::brute_rules(h));
  });
  EXPECT_EQ(seen, 689u);
}

class RewriteProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RewriteProperty, CompletenessAndSoundness) {
  auto h = random_hypergraph({6, 6, 0.4, 2, GetParam()});
  auto found = find_rules(h);
  EXPECT_EQ(std::set<RuleApplication>(found.begin(), found.end()), testing::brute_rules(h));
  for (const auto& r : found) EXPECT_TRUE(is_applicable(h, r));
  auto edges = find_edge_dominations(h);
  auto nodes = find_node_dominations(h);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  EXPECT_TRUE(std::is_sorted(nodes.begin(), nodes.end()));
}

TEST_P(RewriteProperty, TerminationAndMonotoneDecrease) {
  auto h = random_hypergraph({8, 8, 0.35, 2, GetParam()});
  for (const auto& s : standard_strategies(4, GetParam())) {
    auto red = reduce(h, s);
    EXPECT_LE(red.trace.size(), h.size());
    EXPECT_TRUE(check_reduction(h, red));
  }
}

TEST_P(RewriteProperty, SingleStepPreservesHittingSetSize) {
  auto h = random_hypergraph({10, 10, 0.35, 2, GetParam()});
  auto base = min_hitting_set(h);
  for (const auto& r : find_rules(h)) {
    EXPECT_TRUE(min_hitting_set(apply(h, r)).same_outcome(base)) << to_string(r);
  }
}

TEST_P(RewriteProperty, StrategiesAgreeUpToIsomorphism) {
  auto h = random_hypergraph({8, 8, 0.35, 2, GetParam()});
  auto a = reduce(h, Strategy::lex_node_first()).result;
  auto b = reduce(h, Strategy::lex_edge_first()).result;
  auto c = reduce(h, Strategy::random(GetParam())).result;
  EXPECT_TRUE(is_isomorphic(a, b));
  EXPECT_TRUE(is_isomorphic(a, c));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RewriteProperty, ::testing::Range<std::uint64_t>(100, 160));

}  // namespace
}  // namespace hyperkernel
