#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "meshtree/metrics.hpp"
#include "oracles.hpp"

using namespace meshtree;

TEST(ConnectedComponents, Basic) {
  EXPECT_EQ(connected_components({3, {}}).count, 3u);
  EXPECT_EQ(connected_components({6, oracle::path_edges(6)}).count, 1u);
  const auto two = connected_components({6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}});
  EXPECT_EQ(two.count, 2u);
  EXPECT_EQ(two.component_id, (std::vector<std::size_t>{0, 0, 0, 1, 1, 1}));
}

TEST(HopDiameter, Basic) {
  EXPECT_EQ(hop_diameter({7, oracle::path_edges(7)}), 6u);
  EXPECT_EQ(hop_diameter({6, oracle::complete_edges(6)}), 1u);
  EXPECT_EQ(hop_diameter({1, {}}), 0u);
  EXPECT_EQ(hop_diameter({2, {}}), std::nullopt);
  EXPECT_EQ(hop_diameter({2, {}}, DiameterMode::sampled(1)), std::nullopt);
}

TEST(HopDiameter, Grid64) {
  EXPECT_EQ(hop_diameter({64 * 64, oracle::grid_edges(64, 64)}), 126u);
}

TEST(HopDiameter, MatchesFloydWarshallAndSampledIsLowerBound) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) * 3;
    const auto edges = oracle::random_edges(n, 0.08, rng);
    const auto fw = oracle::floyd_warshall(n, edges);
    std::size_t expected = 0;
    bool connected = true;
    for (const auto& row : fw)
      for (std::size_t d : row) {
        if (d >= oracle::kInf) connected = false;
        else expected = std::max(expected, d);
      }
    const auto exact = hop_diameter({n, edges});
    if (!connected) {
      EXPECT_EQ(exact, std::nullopt);
      continue;
    }
    ASSERT_TRUE(exact.has_value());
    EXPECT_EQ(*exact, expected);
    const auto sampled = hop_diameter({n, edges}, DiameterMode::sampled(3));
    ASSERT_TRUE(sampled.has_value());
    EXPECT_LE(*sampled, *exact);
  }
}

TEST(StridedSources, EvenlySpaced) {
  EXPECT_EQ(strided_sources(10, 5), (std::vector<NodeId>{0, 2, 4, 6, 8}));
  EXPECT_EQ(strided_sources(3, 8), (std::vector<NodeId>{0, 1, 2}));
}

TEST(DegreeReport, Basic) {
  const auto path = degree_report({3, oracle::path_edges(3)});
  EXPECT_EQ(path.degrees, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(path.isolated.empty());
  const auto empty = degree_report({2, {}});
  EXPECT_EQ(empty.isolated, (std::vector<NodeId>{0, 1}));
  const auto star = degree_report({5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}});
  EXPECT_EQ(star.degrees[0], 4u);
  EXPECT_EQ(star.histogram, (std::map<std::size_t, std::size_t>{{1, 4}, {4, 1}}));
}

TEST(GraphReport, UnreachableIffDisconnected) {
  const auto r = graph_report({4, {{0, 1}, {2, 3}}}, DiameterMode::exact());
  EXPECT_EQ(r.component_count, 2u);
  EXPECT_FALSE(r.hop_diameter.has_value());
  const auto c = graph_report({3, oracle::path_edges(3)}, DiameterMode::exact());
  EXPECT_EQ(c.hop_diameter, 2u);
}

TEST(DensityKde, SingleNodePeak) {
  // Odd resolution puts a cell centre exactly on the node.
  const auto g = density_kde(PointSet(2, {0, 0}), 1.0, 7);
  EXPECT_DOUBLE_EQ(g.lower[0], -3.0);
  EXPECT_DOUBLE_EQ(g.upper[1], 3.0);
  EXPECT_NEAR(g.values[3 * 7 + 3], 1.0 / (2.0 * std::numbers::pi), 1e-15);
}

TEST(DensityKde, SymmetricPeaks) {
  const auto g = density_kde(PointSet(1, {-10, 10}), 0.5, 41);
  EXPECT_NEAR(g.values.front(), g.values.back(), 1e-12 * g.values.front());
  const auto peak = std::max_element(g.values.begin(), g.values.end());
  const auto mirrored = g.values.end() - 1 - (peak - g.values.begin());
  EXPECT_NEAR(*peak, *mirrored, 1e-12 * *peak);
}

TEST(DensityKde, ScottBandwidth) {
  std::mt19937_64 rng(3);
  const PointSet pts(2, oracle::random_coords(200, 2, rng));
  const auto h = scott_bandwidth(pts);
  for (std::size_t a = 0; a < 2; ++a) {
    double mean = 0, ss = 0;
    for (std::size_t i = 0; i < 200; ++i) mean += pts.coord(i, a);
    mean /= 200;
    for (std::size_t i = 0; i < 200; ++i) ss += std::pow(pts.coord(i, a) - mean, 2);
    EXPECT_NEAR(h[a], std::pow(200.0, -1.0 / 6.0) * std::sqrt(ss / 199), 1e-14);
  }
}

TEST(DensityKde, Errors) {
  EXPECT_THROW(density_kde(PointSet(2, {0, 0, 1, 0}), AutoBandwidth{}, 16), Error);
  EXPECT_THROW(density_kde(PointSet(2, {0, 0}), AutoBandwidth{}, 16), Error);
  EXPECT_THROW(density_kde(PointSet(2, {0, 0}), 1.0, 1), Error);
  EXPECT_THROW(density_kde(PointSet(2, {0, 0}), -1.0, 8), Error);
  EXPECT_NO_THROW(density_kde(PointSet(2, {0, 0, 1, 0}), 0.3, 16));
}

TEST(DensityKde, MassNearOne) {
  std::mt19937_64 rng(12);
  const PointSet pts(2, oracle::random_coords(300, 2, rng));
  EXPECT_NEAR(density_kde(pts, AutoBandwidth{}, 128).mass(), 1.0, 0.01);
  const PointSet line(1, oracle::random_coords(300, 1, rng));
  EXPECT_NEAR(density_kde(line, AutoBandwidth{}, 512).mass(), 1.0, 0.01);
}

TEST(DensityKde, TranslationEquivariant) {
  std::mt19937_64 rng(21);
  auto c = oracle::random_coords(100, 2, rng);
  auto shifted = c;
  for (std::size_t i = 0; i < c.size(); ++i) shifted[i] += (i % 2 ? -5.0 : 12.5);
  const auto a = density_kde(PointSet(2, c), AutoBandwidth{}, 32);
  const auto b = density_kde(PointSet(2, shifted), AutoBandwidth{}, 32);
  EXPECT_NEAR(b.lower[0] - a.lower[0], 12.5, 1e-12);
  EXPECT_NEAR(b.lower[1] - a.lower[1], -5.0, 1e-12);
  ASSERT_EQ(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    EXPECT_NEAR(a.values[i], b.values[i], 1e-9 * (1.0 + a.values[i]));
}
