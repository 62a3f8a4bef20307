#include <gtest/gtest.h>

#include <set>

#include "hist/conditions.hpp"
#include "hist/instances.hpp"
#include "hist/obstructions.hpp"
#include "hist/random.hpp"

#include "common.hpp"

using namespace hist;
using namespace testing_graphs;

namespace {

// Direct definition, no bitsets.
std::optional<std::size_t> nc_naive(const Graph& g) {
  std::optional<std::size_t> best;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      std::set<Vertex> s(g.neighbors(u).begin(), g.neighbors(u).end());
      s.insert(g.neighbors(v).begin(), g.neighbors(v).end());
      if (!best || s.size() < *best) best = s.size();
    }
  return best;
}

}  // namespace

TEST(ConditionReport, Petersen) {
  auto r = condition_report(petersen());
  EXPECT_EQ(r.n, 10u);
  EXPECT_EQ(r.m, 15u);
  EXPECT_EQ(r.delta, 3u);
  EXPECT_EQ(r.sigma, 6u);
  EXPECT_EQ(r.nc, 5u);
  EXPECT_FALSE(r.meets_thm12);
  EXPECT_FALSE(r.meets_thm13);
  EXPECT_FALSE(r.meets_thm15);
  EXPECT_FALSE(r.complete);
  EXPECT_TRUE(nc_condition_holds(r.n, r.nc));
}

TEST(ConditionReport, CompleteIsInfinite) {
  auto r = condition_report(complete(4));
  EXPECT_EQ(r.delta, 3u);
  EXPECT_FALSE(r.sigma.has_value());
  EXPECT_FALSE(r.nc.has_value());
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(condition_report(Graph::from_edges(1, {})).complete);
}

TEST(ConditionReport, P4) {
  auto r = condition_report(path(4));
  EXPECT_EQ(r.delta, 1u);
  EXPECT_EQ(r.sigma, 2u);
  EXPECT_EQ(r.nc, 2u);
}

TEST(ConditionReport, Thresholds) {
  // delta^2 >= 16n: K_17 has delta 16, 256 >= 272 fails; K_18: 289 >= 288.
  EXPECT_FALSE(condition_report(complete(17)).meets_thm12);
  EXPECT_TRUE(condition_report(complete(18)).meets_thm12);
  // sigma >= n-1 needs n >= 8 as well.
  EXPECT_TRUE(condition_report(cycle(4)).sigma >= 3u);
  EXPECT_FALSE(condition_report(cycle(4)).meets_thm13);
  // 2 NC >= n-1 needs n >= 270.
  auto k = complete(271);
  std::vector<Edge> e = k.edges();
  e.erase(e.begin());
  auto r = condition_report(Graph::from_edges(271, e));
  EXPECT_TRUE(r.meets_thm15);
  EXPECT_TRUE(r.meets_thm13);
  EXPECT_TRUE(r.meets_thm12);
}

TEST(ConditionReport, DisconnectedIsDomainError) {
  EXPECT_THROW(condition_report(Graph::from_edges(3, {{0, 1}})), DomainError);
  EXPECT_THROW(condition_report(Graph::from_edges(0, {})), DomainError);
}

TEST(NcWitness, Examples) {
  auto p = nc_pair_witness(path(4));
  EXPECT_EQ(p.u, 0u);
  EXPECT_EQ(p.v, 2u);
  EXPECT_EQ(p.value, 2u);

  auto h = nc_pair_witness(generate_H(Family::H1, 9));
  EXPECT_EQ(h.value, 4u);
  EXPECT_FALSE(generate_H(Family::H1, 9).adjacent(h.u, h.v));

  EXPECT_EQ(nc_pair_witness(cycle(5)).value, 3u);
  EXPECT_THROW(nc_pair_witness(complete(5)), DomainError);
}

TEST(Implication, Examples) {
  EXPECT_TRUE(implication_check(petersen()));
  EXPECT_TRUE(implication_check(complete(6)));
  // K_{2,3} has sigma = 4 = n-1, and NC = 2 >= 2.
  auto k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_GE(*condition_report(k23).sigma, 4u);
  EXPECT_TRUE(implication_check(k23));
}

TEST(Conditions, FuzzInvariants) {
  SplitMix64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const auto n = 1 + rng.below(12);
    auto g = random_connected(n, 0.2 + 0.7 * rng.uniform01(), rng);
    auto r = condition_report(g);
    EXPECT_EQ(r.complete, !r.sigma.has_value());
    EXPECT_EQ(r.complete, !r.nc.has_value());
    EXPECT_EQ(r.nc, nc_naive(g));
    EXPECT_TRUE(implication_check(g));
    if (!r.complete) {
      EXPECT_LE(r.delta, *r.nc);
      EXPECT_LE(*r.nc, *r.sigma);
      auto w = nc_pair_witness(g);
      EXPECT_EQ(w.value, *r.nc);
      EXPECT_FALSE(g.adjacent(w.u, w.v));
    }
  }
}

TEST(Conditions, FamiliesSitExactlyAtTheNcBound) {
  for (std::size_t n = 9; n <= 41; n += 2) {
    for (auto [f, c] : {std::pair{Family::H1, false}, std::pair{Family::H2, false}, std::pair{Family::H3, false},
                        std::pair{Family::H3, true}}) {
      auto r = condition_report(generate_H(f, n, c));
      ASSERT_TRUE(r.nc.has_value());
      EXPECT_EQ(*r.nc, (n - 1) / 2) << "n=" << n;
    }
  }
}
