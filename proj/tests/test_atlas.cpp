#include <gtest/gtest.h>

#include <set>

#include "hist/atlas.hpp"
#include "hist/random.hpp"

#include "common.hpp"

using namespace hist;
using namespace testing_graphs;

namespace {

Graph permuted(const Graph& g, SplitMix64& rng) {
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
  rng.shuffle(perm);
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
  return Graph::from_edges(g.order(), e);
}

}  // namespace

// Number of connected unlabeled graphs on n vertices (OEIS A001349).
TEST(Atlas, KnownCounts) {
  const std::size_t expect[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(connected_atlas_codes(n).size(), expect[n]) << "n=" << n;
}

TEST(Atlas, GraphsAreConnectedAndPairwiseNonIsomorphic) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> seen;
    for (const auto& g : connected_atlas(n)) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(seen.insert(canonical_code(g)).second);
    }
  }
}

TEST(Atlas, IndependentOfThreadCount) {
  EXPECT_EQ(connected_atlas_codes(7, 1), connected_atlas_codes(7, 3));
}

TEST(Atlas, OrderRange) {
  EXPECT_THROW(connected_atlas_codes(0), RangeError);
  EXPECT_THROW(connected_atlas_codes(kAtlasMaxOrder + 1), RangeError);
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  SplitMix64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const auto n = 1 + rng.below(11);
    auto g = gnp(n, rng.uniform01(), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(permuted(g, rng)));
  }
  EXPECT_EQ(canonical_code(petersen()), canonical_code(permuted(petersen(), rng)));
}

TEST(CanonicalCode, SeparatesNonIsomorphicGraphs) {
  // Same degree sequence (2-regular on 6): C6 versus two triangles.
  auto two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NE(canonical_code(cycle(6)), canonical_code(two_triangles));
  // Two 3-regular graphs on 8 vertices: the cube and the Wagner graph.
  std::vector<Edge> cube, wagner;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) cube.emplace_back(v, v ^ b);
  for (Vertex v = 0; v < 8; ++v) {
    wagner.emplace_back(v, (v + 1) % 8);
    if (v < 4) wagner.emplace_back(v, v + 4);
  }
  EXPECT_NE(canonical_code(Graph::from_edges(8, cube)), canonical_code(Graph::from_edges(8, wagner)));
  EXPECT_THROW(canonical_code(complete(12)), RangeError);
}

TEST(CanonicalCode, DecodesToAnIsomorphicGraph) {
  SplitMix64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto n = 1 + rng.below(10);
    auto g = gnp(n, rng.uniform01(), rng);
    const auto code = canonical_code(g);
    auto h = graph_from_code(n, code);
    EXPECT_EQ(h.size(), g.size());
    EXPECT_EQ(canonical_code(h), code);
  }
}
