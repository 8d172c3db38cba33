// Copyright 2026 The semlab Authors.
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

#include "semlab/graph.h"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <utility>

#include "gtest/gtest.h"
#include "support/corpus.h"

namespace semlab {
namespace {

std::set<std::pair<int, int>> EdgeSet(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) {
    out.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  return out;
}

bool Connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == g.order();
}

TEST(GraphTest, RejectsLoopsDuplicatesAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{-1, 2}}), std::invalid_argument);
  EXPECT_NO_THROW(Graph(3, {}));
}

TEST(GraphTest, FindEdgeIsUnordered) {
  const Graph g(3, {{0, 1}, {2, 1}});
  EXPECT_EQ(g.FindEdge(1, 0), 0u);
  EXPECT_EQ(g.FindEdge(1, 2), 1u);
  EXPECT_FALSE(g.FindEdge(0, 2).has_value());
}

TEST(MakeCycleTest, Triangle) {
  const Graph g = make_cycle(3);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(EdgeSet(g), (std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}));
}

TEST(MakeCycleTest, OrderEqualsSize) {
  const Graph g = make_cycle(5);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 5);
  EXPECT_EQ(degree_sequence(make_cycle(4)), (DegreeSequence{2, 2, 2, 2}));
}

TEST(MakeCycleTest, RejectsShortCycles) {
  EXPECT_THROW(make_cycle(2), std::invalid_argument);
  EXPECT_THROW(make_cycle(0), std::invalid_argument);
}

TEST(MakeTwoCycleTest, Examples) {
  const Graph g35 = make_two_cycle(3, 5);
  EXPECT_EQ(g35.order(), 7);
  EXPECT_EQ(g35.size(), 8);
  EXPECT_EQ(degree_sequence(g35), (DegreeSequence{4, 2, 2, 2, 2, 2, 2}));

  const Graph g33 = make_two_cycle(3, 3);
  EXPECT_EQ(g33.order(), 5);
  EXPECT_EQ(g33.size(), 6);

  const Graph g45 = make_two_cycle(4, 5);
  EXPECT_EQ(g45.order(), 8);
  EXPECT_EQ(g45.size(), 9);
}

TEST(MakeTwoCycleTest, RejectsShortCycles) {
  EXPECT_THROW(make_two_cycle(2, 5), std::invalid_argument);
  EXPECT_THROW(make_two_cycle(5, 2), std::invalid_argument);
}

TEST(MakeTwoCycleTest, OneDegreeFourVertexForAllSmallParameters) {
  for (int m = 3; m <= 8; ++m) {
    for (int n = 3; n <= 8; ++n) {
      const Graph g = make_two_cycle(m, n);
      const DegreeSequence d = degree_sequence(g);
      EXPECT_EQ(std::count(d.begin(), d.end(), 4), 1) << m << "," << n;
      EXPECT_EQ(std::count(d.begin(), d.end(), 2), m + n - 2) << m << "," << n;
      EXPECT_EQ(g.order(), m + n - 1);
      EXPECT_TRUE(Connected(g));
    }
  }
}

TEST(MakeCactusTest, SingleCycleMatchesMakeCycle) {
  for (int n = 3; n <= 9; ++n) {
    const Graph g = make_cactus({{n}, {}});
    EXPECT_EQ(g, make_cycle(n));
  }
}

TEST(MakeCactusTest, TwoCyclesMatchTwoCycle) {
  const Graph g = make_cactus({{3, 5}, {{0, 0}}});
  const Graph h = make_two_cycle(3, 5);
  EXPECT_EQ(g.order(), h.order());
  EXPECT_EQ(g.size(), h.size());
  EXPECT_EQ(degree_sequence(g), degree_sequence(h));
}

TEST(MakeCactusTest, ChainOfTrianglesAtDistinctCutVertices) {
  // Triangle 0-1-2; second triangle on vertex 0 (adds 3, 4); third triangle
  // on position 1 of the second one, i.e. vertex 3 (adds 5, 6). Degrees:
  // vertices 0 and 3 have 4, the other five have 2.
  const Graph g = make_cactus({{3, 3, 3}, {{0, 0}, {1, 1}}});
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 9);
  EXPECT_EQ(degree_sequence(g), (DegreeSequence{4, 4, 2, 2, 2, 2, 2}));
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_EQ(g.degree(3), 4);
}

TEST(MakeCactusTest, FlowerSharesOneCutVertex) {
  const Graph g = make_cactus({{3, 3, 3}, {{0, 0}, {0, 0}}});
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(degree_sequence(g), (DegreeSequence{6, 2, 2, 2, 2, 2, 2}));
}

TEST(MakeCactusTest, RejectsBadAttachments) {
  EXPECT_THROW(make_cactus({{3, 3}, {{1, 0}}}), std::invalid_argument);
  EXPECT_THROW(make_cactus({{3, 3}, {{0, 3}}}), std::invalid_argument);
  EXPECT_THROW(make_cactus({{3, 3}, {}}), std::invalid_argument);
  EXPECT_THROW(make_cactus({{3, 2}, {{0, 0}}}), std::invalid_argument);
  EXPECT_THROW(make_cactus({{}, {}}), std::invalid_argument);
}

TEST(MakeCactusTest, RandomSpecsGiveConnectedCactiWithConsistentCounts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const CactusSpec spec = testing::random_cactus_spec(rng, 14);
    const Graph g = make_cactus(spec);
    int total = 0;
    for (int len : spec.cycle_lengths) total += len;
    const int cycles = static_cast<int>(spec.cycle_lengths.size());
    EXPECT_EQ(g.order(), total - static_cast<int>(spec.attachments.size()));
    EXPECT_EQ(g.size(), total);
    // Connected with every block a cycle: cyclomatic number = #cycles.
    EXPECT_EQ(g.size() - g.order() + 1, cycles);
    EXPECT_TRUE(Connected(g));
    const DegreeSequence d = degree_sequence(g);
    int sum = 0;
    for (int x : d) {
      sum += x;
      EXPECT_EQ(x % 2, 0);
    }
    EXPECT_EQ(sum, 2 * g.size());
    EXPECT_EQ(static_cast<int>(d.size()), g.order());
    EXPECT_TRUE(std::is_sorted(d.rbegin(), d.rend()));
  }
}

TEST(DegreeSequenceTest, Examples) {
  EXPECT_EQ(degree_sequence(make_two_cycle(3, 5)),
            (DegreeSequence{4, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(degree_sequence(make_cycle(4)), (DegreeSequence{2, 2, 2, 2}));
  EXPECT_EQ(degree_sequence(Graph(3, {})), (DegreeSequence{0, 0, 0}));
}

TEST(DisjointUnionTest, ShiftsSecondOperand) {
  const Graph g = disjoint_union(make_cycle(3), make_cycle(4));
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 7);
  EXPECT_TRUE(g.adjacent(3, 4));
  EXPECT_TRUE(g.adjacent(6, 3));
  EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(Degseq42Test, RealizationsOfSmallOrders) {
  EXPECT_TRUE(degseq_4_2_realizations(4).empty());
  auto five = degseq_4_2_realizations(5);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].Name(), "C(3,3)");

  auto six = degseq_4_2_realizations(6);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0].Name(), "C(3,4)");

  std::vector<std::string> eight;
  for (const auto& r : degseq_4_2_realizations(8)) eight.push_back(r.Name());
  EXPECT_EQ(eight, (std::vector<std::string>{"C(3,3)+C3", "C(3,6)", "C(4,5)"}));

  for (int order = 5; order <= 14; ++order) {
    for (const auto& r : degseq_4_2_realizations(order)) {
      const Graph g = r.Build();
      EXPECT_EQ(g.order(), order) << r.Name();
      DegreeSequence expected(order, 2);
      expected[0] = 4;
      EXPECT_EQ(degree_sequence(g), expected) << r.Name();
    }
  }
}

TEST(ParseEdgeListTest, Triangle) {
  const Graph g = parse_graph("3\n0 1\n1 2\n2 0", GraphFormat::kEdgeList);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(EdgeSet(g), EdgeSet(make_cycle(3)));
}

TEST(ParseEdgeListTest, CommentsAndBlankLines) {
  const Graph g = parse_graph(
      "# a path\n\n3   # vertices\n 0\t1 \n# middle\n1 2\n",
      GraphFormat::kEdgeList);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
}

TEST(ParseEdgeListTest, Errors) {
  EXPECT_THROW(parse_graph("3\n0 0\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("3\n0 1\n1 0\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("3\n0 3\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("3 4\n0 1\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("x\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("3\n0 1 2\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("3\n0 a\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("# nothing\n", GraphFormat::kEdgeList), ParseError);
  EXPECT_THROW(parse_graph("-2\n", GraphFormat::kEdgeList), ParseError);
}

TEST(Graph6Test, TriangleIsBw) {
  const Graph g = parse_graph("Bw", GraphFormat::kGraph6);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(EdgeSet(g), EdgeSet(make_cycle(3)));
  EXPECT_EQ(to_graph6(make_cycle(3)), "Bw");
}

// Encodings produced by networkx.to_graph6_bytes for the same vertex
// numbering.
TEST(Graph6Test, MatchesReferenceEncoder) {
  EXPECT_EQ(to_graph6(make_cycle(5)), "Dhc");
  EXPECT_EQ(to_graph6(make_two_cycle(3, 5)), "F{CKG");
  EXPECT_EQ(to_graph6(make_two_cycle(3, 6)), "G{CGKC");
  EXPECT_EQ(to_graph6(make_cycle(70)).substr(0, 10), "~?@EhCGGC@");

  EXPECT_EQ(EdgeSet(parse_graph("F{CKG", GraphFormat::kGraph6)),
            EdgeSet(make_two_cycle(3, 5)));
  EXPECT_EQ(EdgeSet(parse_graph(to_graph6(make_cycle(70)), GraphFormat::kGraph6)),
            EdgeSet(make_cycle(70)));
}

TEST(Graph6Test, AcceptsHeaderAndTrailingNewline) {
  const Graph g = parse_graph(">>graph6<<Bw\n", GraphFormat::kGraph6);
  EXPECT_EQ(g.size(), 3);
}

TEST(Graph6Test, Errors) {
  EXPECT_THROW(parse_graph("", GraphFormat::kGraph6), ParseError);
  EXPECT_THROW(parse_graph("B", GraphFormat::kGraph6), ParseError);
  EXPECT_THROW(parse_graph("Bww", GraphFormat::kGraph6), ParseError);
  EXPECT_THROW(parse_graph("B!", GraphFormat::kGraph6), ParseError);
  // Triangle uses 3 of 6 bits; 'x' sets a padding bit.
  EXPECT_THROW(parse_graph("Bx", GraphFormat::kGraph6), ParseError);
  EXPECT_THROW(parse_graph("~?", GraphFormat::kGraph6), ParseError);
}

TEST(ParseAutoTest, DetectsFormat) {
  EXPECT_EQ(parse_graph_auto("3\n0 1\n").size(), 1);
  EXPECT_EQ(parse_graph_auto("# c\n3\n0 1\n").size(), 1);
  EXPECT_EQ(parse_graph_auto("Bw\n").size(), 3);
}

TEST(RoundTripTest, BothFormatsOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = std::uniform_int_distribution<int>(0, 80)(rng);
    const int q = std::uniform_int_distribution<int>(0, p * (p - 1) / 2)(rng);
    const Graph g = testing::random_graph(rng, p, std::min(q, 200));
    EXPECT_EQ(parse_graph(to_edge_list(g), GraphFormat::kEdgeList), g);
    const Graph h = parse_graph(to_graph6(g), GraphFormat::kGraph6);
    EXPECT_EQ(h.order(), g.order());
    EXPECT_EQ(EdgeSet(h), EdgeSet(g));
  }
}

}  // namespace
}  // namespace semlab
