// Copyright 2026 The histk Authors
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

#include <gtest/gtest.h>

#include "histk/certificates.hpp"
#include "histk/error.hpp"
#include "histk/families.hpp"
#include "histk/forest.hpp"
#include "histk/testing/naive_enumeration.hpp"
#include "test_graphs.hpp"

namespace histk {
namespace {

std::vector<Edge> star_edges(Vertex n, Vertex center = 0) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) {
    if (v != center) e.push_back(make_edge(center, v));
  }
  return e;
}

std::vector<Edge> path_edges(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return e;
}

TEST(SpanningForest, RejectsCycleAndForeignEdge) {
  const Graph k4 = complete_graph(4);
  EXPECT_THROW(SpanningForest(k4, {{0, 1}, {1, 2}, {0, 2}}), Error);
  EXPECT_THROW(SpanningForest(test::path_graph(4), {{0, 2}}), Error);
}

TEST(SpanningTree, StarAndTwoComponents) {
  const Graph k4 = complete_graph(4);
  EXPECT_TRUE(verify_spanning_tree(SpanningForest(k4, star_edges(4))));
  const SpanningForest two(k4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(verify_spanning_tree(two));
  EXPECT_EQ(two.component_count(), 2u);
}

TEST(TwoKSt, StarOnCompleteGraph) {
  for (int k = 2; k <= 5; ++k) {
    const Graph g = complete_graph(k + 2);
    EXPECT_TRUE(verify_2k_st(SpanningForest(g, star_edges(k + 2)), k));
  }
  // Centre degree k lands inside [2, k].
  const Graph small = complete_graph(4);
  EXPECT_FALSE(verify_2k_st(SpanningForest(small, star_edges(4)), 3));
}

TEST(TwoKSt, HamiltonianPathFails) {
  const Graph k5 = complete_graph(5);
  const CertificateReport r = check_2k_st(SpanningForest(k5, path_edges(5)), 2);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 3u);
  EXPECT_EQ(r.violations[0].vertex, 1);
  EXPECT_EQ(r.violations[0].degree, 2);
}

TEST(TwoKSt, SpiderWithLongLegsFails) {
  // Centre 0, legs 0-1-2, 0-3-4, 0-5-6.
  const std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  const Graph g = build_graph(7, e);
  EXPECT_FALSE(verify_2k_st(SpanningForest(g, e), 2));
}

TEST(TwoKSt, NotSpanning) {
  const Graph k4 = complete_graph(4);
  const CertificateReport r = check_2k_st(SpanningForest(k4, {{0, 1}, {0, 2}}), 2);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.reason.empty());
}

TEST(GoodTree, ExemptionAtDegreeK) {
  const Graph p3 = test::path_graph(3);
  const SpanningForest f(p3, path_edges(3));
  EXPECT_TRUE(verify_good_tree(f, GoodnessSpec{2, {1}}));
  EXPECT_FALSE(verify_good_tree(f, GoodnessSpec{2, {}}));
  // A U vertex of degree 1 < k fails.
  EXPECT_FALSE(verify_good_tree(f, GoodnessSpec{2, {0}}));
  const Graph k5 = complete_graph(5);
  EXPECT_TRUE(verify_good_tree(SpanningForest(k5, star_edges(5)), GoodnessSpec{3, {}}));
  EXPECT_THROW(verify_good_tree(f, GoodnessSpec{2, {9}}), Error);
}

TEST(GoodForest, OneRootPerComponent) {
  // Two stars on K8: centres 0 and 4, each with three leaves.
  const Graph k8 = complete_graph(8);
  const SpanningForest f(k8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}});
  const std::vector<Vertex> centres = {0, 4};
  EXPECT_TRUE(verify_good_forest(f, 2, centres));
  // A leaf as root: degree 1 < k.
  const std::vector<Vertex> leaf_root = {0, 5};
  EXPECT_FALSE(verify_good_forest(f, 2, leaf_root));
  const std::vector<Vertex> same_component = {0, 1};
  EXPECT_FALSE(verify_good_forest(f, 2, same_component));
  const std::vector<Vertex> too_few = {0};
  EXPECT_FALSE(verify_good_forest(f, 2, too_few));
  EXPECT_TRUE(verify_good_component(f, 0, GoodnessSpec{2, {0}}));
  EXPECT_THROW(verify_good_component(f, 0, GoodnessSpec{2, {4}}), Error);
}

TEST(BlockingSet, Definition) {
  const Graph p5 = test::path_graph(5);
  EXPECT_TRUE(is_k_blocking_set(p5, 2, std::vector<Vertex>{2}));
  // Endpoint: degree 1 and not a cut.
  EXPECT_FALSE(is_k_blocking_set(p5, 2, std::vector<Vertex>{0}));
  const Graph k4 = complete_graph(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_FALSE(is_k_blocking_set(k4, 2, std::vector<Vertex>{v}));
  EXPECT_FALSE(is_k_blocking_set(k4, 3, std::vector<Vertex>{0, 1}));
  // C6 minus two opposite vertices splits; both have degree 2.
  EXPECT_TRUE(is_k_blocking_set(test::cycle_graph(6), 2, std::vector<Vertex>{0, 3}));
  EXPECT_FALSE(is_k_blocking_set(test::cycle_graph(6), 2, std::vector<Vertex>{0, 1}));
}

TEST(BlockingSet, SearchOrder) {
  const Graph p5 = test::path_graph(5);
  EXPECT_EQ(find_k_blocking_set(p5, 2, 3), (std::vector<Vertex>{1}));
  EXPECT_FALSE(find_k_blocking_set(complete_graph(5), 2, 5).has_value());
  const BlockingSearch c6 = search_k_blocking_set(test::cycle_graph(6), 2, 1);
  EXPECT_FALSE(c6.blocking_set.has_value());
  EXPECT_TRUE(c6.cap_binding);
  EXPECT_EQ(find_k_blocking_set(test::cycle_graph(6), 2, 2), (std::vector<Vertex>{0, 2}));
}

TEST(BlockingSet, FourPartFamilyBlockedInsideL2) {
  FamilyParams params;
  params.k = 2;
  params.sizes = {1, 1, 1, 6};
  const LFamilyInstance inst = gen_L_family(params);
  EXPECT_TRUE(is_k_blocking_set(inst.graph, 2, inst.partition.parts[1]));
  const auto found = find_k_blocking_set(inst.graph, 2, default_blocking_cap(2));
  ASSERT_TRUE(found.has_value());
  for (Vertex v : *found) {
    EXPECT_TRUE(std::binary_search(inst.partition.parts[1].begin(), inst.partition.parts[1].end(), v));
  }
}

TEST(ExactSearch, SmallCases) {
  EXPECT_EQ(decide_2k_st_exact(test::cycle_graph(4), 2, 1000).outcome, ExactOutcome::kNone);
  const ExactResult k4 = decide_2k_st_exact(complete_graph(4), 2, 1000);
  ASSERT_EQ(k4.outcome, ExactOutcome::kWitness);
  EXPECT_TRUE(verify_2k_st(SpanningForest(complete_graph(4), k4.witness), 2));
  EXPECT_EQ(decide_2k_st_exact(test::complete_bipartite(2, 3), 2, 100000).outcome, ExactOutcome::kNone);
  EXPECT_EQ(decide_2k_st_exact(complete_graph(1), 2, 10).outcome, ExactOutcome::kWitness);
  EXPECT_THROW(decide_2k_st_exact(build_graph(3, std::vector<Edge>{{0, 1}}), 2, 10), Error);
}

TEST(ExactSearch, BudgetExhausts) {
  EXPECT_EQ(decide_2k_st_exact(test::cycle_graph(12), 2, 1).outcome, ExactOutcome::kBudgetExhausted);
}

TEST(NaiveOracle, CountsSpanningTrees) {
  // Cayley: n^(n-2); cycles have n trees; K_{2,3} has 12.
  EXPECT_EQ(testing::count_spanning_trees(complete_graph(5)), 125u);
  EXPECT_EQ(testing::count_spanning_trees(test::cycle_graph(7)), 7u);
  EXPECT_EQ(testing::count_spanning_trees(test::complete_bipartite(2, 3)), 12u);
  EXPECT_EQ(testing::count_spanning_trees(test::cycle_graph(4)), 4u);
}

TEST(ExactSearch, AgreesWithNaiveEnumeration) {
  int witnesses = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Vertex n = static_cast<Vertex>(2 + seed % 7);
    const Graph g = test::random_connected(n, 0.15 + 0.05 * static_cast<double>(seed % 12), seed);
    for (int k : {2, 3}) {
      const ExactResult exact = decide_2k_st_exact(g, k, 10'000'000);
      ASSERT_NE(exact.outcome, ExactOutcome::kBudgetExhausted);
      const bool naive = testing::naive_find_2k_st(g, k).has_value();
      EXPECT_EQ(exact.outcome == ExactOutcome::kWitness, naive) << "seed " << seed << " k " << k;
      if (find_k_blocking_set(g, k, n)) {
        EXPECT_FALSE(naive);
      }
      witnesses += naive;
    }
  }
  EXPECT_GT(witnesses, 0);
}

}  // namespace
}  // namespace histk
