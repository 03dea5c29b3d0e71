#include "msfw/exact_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "test_util.hpp"

namespace msfw {
namespace {

using testutil::RefEdge;

TEST(LevelScheme, PowersOfTwoForEpsOne) {
  LevelScheme scheme(1.0, 8.0);
  EXPECT_EQ(scheme.r, 3);
  ASSERT_EQ(scheme.thresholds.size(), 4u);
  EXPECT_DOUBLE_EQ(scheme.thresholds[0], 1.0);
  EXPECT_DOUBLE_EQ(scheme.thresholds[1], 2.0);
  EXPECT_DOUBLE_EQ(scheme.thresholds[2], 4.0);
  EXPECT_DOUBLE_EQ(scheme.thresholds[3], 8.0);
  ASSERT_EQ(scheme.gaps.size(), 3u);
  EXPECT_DOUBLE_EQ(scheme.gaps[0], 1.0);
  EXPECT_DOUBLE_EQ(scheme.gaps[1], 2.0);
  EXPECT_DOUBLE_EQ(scheme.gaps[2], 4.0);
}

TEST(LevelScheme, BaseOnePointFiveReachesEightInSixSteps) {
  LevelScheme scheme(0.5, 8.0);
  EXPECT_EQ(scheme.r, 6);
  EXPECT_GE(scheme.thresholds[6], 8.0);
  EXPECT_LT(scheme.thresholds[5], 8.0);
}

TEST(LevelScheme, UnitCapMeansSingleLevel) {
  LevelScheme scheme(0.3, 1.0);
  EXPECT_EQ(scheme.r, 0);
  EXPECT_TRUE(scheme.gaps.empty());
  EXPECT_DOUBLE_EQ(scheme.thresholds[0], 1.0);
}

TEST(LevelScheme, GapsTelescopeToTopThreshold) {
  for (double eps : {0.1, 0.25, 0.5, 1.0}) {
    for (double w : {1.5, 8.0, 64.0, 1000.0}) {
      LevelScheme scheme(eps, w);
      double sum = 0.0;
      for (double gap : scheme.gaps) sum += gap;
      double top = scheme.thresholds[static_cast<std::size_t>(scheme.r)];
      EXPECT_NEAR(sum, top - 1.0, 1e-9 * static_cast<double>(scheme.r + 1))
          << "eps " << eps << " w " << w;
      EXPECT_GE(top, w);
    }
  }
}

TEST(LevelScheme, MinLevelForMatchesThresholdScan) {
  LevelScheme scheme(0.5, 8.0);
  EXPECT_EQ(scheme.minLevelFor(1.0), 0);
  EXPECT_EQ(scheme.minLevelFor(1.4), 1);
  EXPECT_EQ(scheme.minLevelFor(1.5), 1);
  EXPECT_EQ(scheme.minLevelFor(1.6), 2);
  EXPECT_EQ(scheme.minLevelFor(8.0), 6);
  EXPECT_THROW(scheme.minLevelFor(scheme.thresholds[6] * 1.01),
               WeightOutOfRange);
}

TEST(LevelScheme, RejectsBadParameters) {
  EXPECT_THROW(LevelScheme(0.0, 8.0), std::invalid_argument);
  EXPECT_THROW(LevelScheme(-0.5, 8.0), std::invalid_argument);
  EXPECT_THROW(LevelScheme(0.5, 0.5), std::invalid_argument);
}

TEST(ExactOracle, KruskalMatchesReference) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const VertexId n = 20;
    auto edges = testutil::randomSimpleEdges(n, 5 + trial, 8.0, rng);
    DynamicGraph g = testutil::buildGraph(n, edges, 8.0);
    EXPECT_NEAR(kruskalMsfWeight(g), testutil::refMsfWeight(n, edges), 1e-9);
  }
}

TEST(ExactOracle, NccMatchesReference) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const VertexId n = 25;
    auto edges = testutil::randomSimpleEdges(n, trial, 1.0, rng);
    DynamicGraph g = testutil::buildGraph(n, edges, 1.0);
    EXPECT_EQ(exactNcc(g), testutil::refNcc(n, edges));
  }
}

TEST(ExactOracle, SmallCensusMatchesReference) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const VertexId n = 22;
    auto edges = testutil::randomSimpleEdges(n, 14, 1.0, rng);
    DynamicGraph g = testutil::buildGraph(n, edges, 1.0);
    for (std::int64_t cap : {1, 2, 4, 22}) {
      SmallComponentCount census = exactSmallCc(g, cap);
      EXPECT_EQ(census.count, testutil::refSmallCount(n, edges, cap));
      std::int64_t by_size_total = 0;
      for (std::int64_t k : census.bySize) by_size_total += k;
      EXPECT_EQ(by_size_total, census.count);
    }
  }
}

TEST(ExactOracle, LevelCountsMatchPerLevelReference) {
  std::mt19937 rng(6);
  LevelScheme scheme(0.5, 8.0);
  for (int trial = 0; trial < 20; ++trial) {
    const VertexId n = 18;
    auto edges = testutil::randomSimpleEdges(n, 20, 8.0, rng);
    DynamicGraph g = testutil::buildGraph(n, edges, 8.0);
    auto counts = levelComponentCounts(g, scheme);
    ASSERT_EQ(counts.size(), static_cast<std::size_t>(scheme.r) + 1);
    for (int j = 0; j <= scheme.r; ++j) {
      std::vector<RefEdge> filtered;
      for (const RefEdge& e : edges)
        if (e.w <= scheme.thresholds[static_cast<std::size_t>(j)])
          filtered.push_back(e);
      EXPECT_EQ(counts[static_cast<std::size_t>(j)],
                testutil::refNcc(n, filtered));
    }
  }
}

// Four-cycle with weights 1,1,2,2 at eps = 1: two levels, X equals the MSF
// weight exactly.
TEST(ExactOracle, FormulaXOnFourCycle) {
  std::vector<WeightedEdge> edges{
      {0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.0}, {3, 0, 2.0}};
  DynamicGraph g(4, edges, DynamicGraph::Options{2.0, false});
  LevelScheme scheme(1.0, 2.0);
  EXPECT_EQ(scheme.r, 1);
  auto counts = levelComponentCounts(g, scheme);
  EXPECT_EQ(counts[0], 2);
  EXPECT_EQ(counts[1], 1);
  EXPECT_DOUBLE_EQ(formulaX(g, scheme), 4.0);
  EXPECT_DOUBLE_EQ(kruskalMsfWeight(g), 4.0);
}

TEST(ExactOracle, FormulaXOnEmptyGraphIsZero) {
  DynamicGraph g(50, DynamicGraph::Options{64.0, false});
  for (double eps : {0.1, 0.5, 1.0}) {
    LevelScheme scheme(eps, 64.0);
    EXPECT_NEAR(formulaX(g, scheme), 0.0,
                1e-9 * 50.0 * static_cast<double>(scheme.r + 1));
  }
}

// M <= X <= (1+eps) M for every graph; checked against the independent
// Kruskal reference across weights and rates.
TEST(ExactOracle, FormulaXSandwichesMsfWeight) {
  std::mt19937 rng(7);
  for (double eps : {0.1, 0.25, 0.5, 1.0}) {
    for (double w : {1.0, 2.0, 8.0, 64.0}) {
      LevelScheme scheme(eps, w);
      for (int trial = 0; trial < 25; ++trial) {
        const VertexId n = 16;
        auto edges = testutil::randomSimpleEdges(n, 3 + 2 * trial, w, rng);
        DynamicGraph g = testutil::buildGraph(n, edges, w);
        double m_exact = testutil::refMsfWeight(n, edges);
        double x = formulaX(g, scheme);
        double slack = 1e-9 * std::max(1.0, m_exact);
        EXPECT_GE(x, m_exact - slack);
        EXPECT_LE(x, (1.0 + eps) * m_exact + slack);
      }
    }
  }
}

}  // namespace
}  // namespace msfw
