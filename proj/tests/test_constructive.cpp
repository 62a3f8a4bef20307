#include <gtest/gtest.h>

#include "hist/constructive.hpp"
#include "hist/instances.hpp"
#include "hist/search.hpp"

#include "common.hpp"

using namespace hist;
using namespace testing_graphs;

namespace {

bool trace_has(const ConstructionTrace& t, const std::string& id) {
  for (const auto& s : t.steps)
    if (s.case_id == id) return true;
  return false;
}

std::string trace_ids(const ConstructionTrace& t) {
  std::string out;
  for (const auto& s : t.steps) out += s.case_id + " ";
  return out;
}

// K_m on 0..m-1 plus u_l = m adjacent to `nbrs`.
Graph clique_plus(std::size_t m, std::initializer_list<Vertex> nbrs) {
  auto e = complete(m).edges();
  for (Vertex x : nbrs) e.emplace_back(static_cast<Vertex>(m), x);
  return Graph::from_edges(m + 1, e);
}

void expect_lemma214_shape(const Graph& g, const VertexSet& c, Vertex ul, const Subtree& t) {
  EXPECT_EQ(t.vertices, c.with(VertexSet{ul}));
  EXPECT_EQ(t.edges.size(), c.size());
  for (const auto& e : t.edges) EXPECT_TRUE(g.adjacent(e.u, e.v));
  auto q = classify_quasi(t);
  EXPECT_TRUE(q.deg2_vertices.empty() || q.deg2_vertices == VertexSet{ul});
  EXPECT_GE(t.degree(ul), std::min<std::size_t>(2, g.degree_in(ul, c)));
}

}  // namespace

TEST(BuildContext, H1) {
  auto g = generate_H(Family::H1, 9);
  auto ctx = build_context(g);
  EXPECT_EQ(ctx.u, 0u);
  EXPECT_EQ(ctx.delta, 2u);
  ASSERT_EQ(ctx.w_components.size(), 2u);
  for (const auto& c : ctx.w_components) EXPECT_LE(c.size(), 4u);
  EXPECT_TRUE(lemma28_clique_check(ctx, g));
}

TEST(BuildContext, Petersen) {
  auto ctx = build_context(petersen());
  EXPECT_EQ(ctx.delta, 3u);
  EXPECT_EQ(ctx.w_set.size(), 6u);
  EXPECT_EQ(ctx.closed.size(), 4u);
  for (std::size_t i = 0; i < ctx.nbrs.size(); ++i) {
    EXPECT_TRUE(petersen().adjacent(ctx.u, ctx.nbrs[i]));
    if (i) { EXPECT_GE(ctx.u_sets[i - 1].size(), ctx.u_sets[i].size()); }
  }
}

TEST(BuildContext, Errors) {
  EXPECT_THROW(build_context(complete(4)), DomainError);
  EXPECT_THROW(build_context(Graph::from_edges(4, {{0, 1}, {2, 3}})), DomainError);
  // Inequality (e4) fails on a long path.
  EXPECT_THROW(build_context(path(9)), HypothesisViolation);
}

TEST(NbrClique, VacuousWhenEveryUiIsLarge) {
  auto g = complete(8);
  auto e = g.edges();
  e.erase(std::find(e.begin(), e.end(), Edge(0, 7)));
  auto h = Graph::from_edges(8, e);
  EXPECT_TRUE(lemma28_clique_check(build_context(h), h));
}

TEST(NbrClique, HoldsOnFuzzedGraphsMeetingTheHypotheses) {
  SplitMix64 rng(28);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    auto g = random_connected(40, 0.6, rng);
    auto r = condition_report(g);
    if (r.complete || !nc_condition_holds(r.n, r.nc) || 2 * r.delta + 3 >= r.n) continue;
    ++checked;
    EXPECT_TRUE(lemma28_clique_check(build_context(g, false), g));
  }
  EXPECT_GT(checked, 30);
}

TEST(ComponentHist, Examples) {
  auto k6 = complete(6);
  auto t = component_hist(k6, VertexSet::range(6), VertexSet{4, 5});
  EXPECT_EQ(t.vertices, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(classify_quasi(t).kind, QuasiKind::HIT);
  EXPECT_EQ(t.degree(0), 3u);

  auto g = gnp(60, 0.8, 6);
  auto u = component_hist(g, VertexSet::range(60), VertexSet{17});
  EXPECT_TRUE(check_subtree_hist(g, u).ok);
  EXPECT_FALSE(u.vertices.contains(17));

  EXPECT_THROW(component_hist(complete(3), VertexSet::range(3), {}), HypothesisViolation);
  EXPECT_THROW(component_hist(k6, VertexSet::range(6), VertexSet{0, 1, 2}), DomainError);
}

TEST(ComponentTree, CliqueFullyAdjacent) {
  auto g = clique_plus(5, {0, 1, 2, 3, 4});
  auto r = lemma214_component_tree(g, VertexSet::range(5), 5);
  expect_lemma214_shape(g, VertexSet::range(5), 5, r.tree);
  EXPECT_EQ(r.tree.degree(5), 5u);
  EXPECT_EQ(r.step.case_id, "L2.14-full");
}

TEST(ComponentTree, CliqueSingleNeighbor) {
  auto g = clique_plus(5, {0});
  auto r = lemma214_component_tree(g, VertexSet::range(5), 5);
  expect_lemma214_shape(g, VertexSet::range(5), 5, r.tree);
  EXPECT_EQ(r.tree.degree(5), 1u);
  EXPECT_EQ(r.step.case_id, "L2.14-one");
  EXPECT_EQ(classify_quasi(r.tree).kind, QuasiKind::HIT);
}

TEST(ComponentTree, CliqueTwoNeighbors) {
  auto g = clique_plus(5, {0, 2});
  auto r = lemma214_component_tree(g, VertexSet::range(5), 5);
  expect_lemma214_shape(g, VertexSet::range(5), 5, r.tree);
  EXPECT_EQ(r.tree.degree(5), 2u);
  EXPECT_EQ(classify_quasi(r.tree).deg2_vertices, VertexSet{5});
}

TEST(ComponentTree, NoNeighborIsDomainError) {
  auto g = clique_plus(5, {0});
  EXPECT_THROW(lemma214_component_tree(g, VertexSet{1, 2, 3, 4}, 5), DomainError);
  EXPECT_THROW(lemma214_component_tree(g, VertexSet::range(6), 5), DomainError);
}

TEST(ComponentTree, SeededCliqueAttachments) {
  SplitMix64 rng(214);
  for (int t = 0; t < 100; ++t) {
    auto f = clique_attachment(4 + detail::uniform_in(0, 20, rng), rng);
    auto r = lemma214_component_tree(f.graph, f.component, f.u_l);
    expect_lemma214_shape(f.graph, f.component, f.u_l, r.tree);
  }
}

TEST(QuasiExtension, SingletonSIsRejected) {
  SplitMix64 rng(3);
  auto inst = make_instance("planted", 281, rng);
  auto ctx = build_context(inst.graph);
  ASSERT_EQ(ctx.w_components.size(), 1u);
  const Vertex u1 = ctx.nbrs[0];
  const Vertex x = ctx.u_sets[0].front();
  auto edges = detail::star(ctx.u, ctx.nbr_set);
  edges.emplace_back(u1, x);
  Subtree quasi(ctx.closed.with(VertexSet{x}), edges);
  try {
    lemma213_extend(inst.graph, ctx, quasi, x);
    FAIL() << "accepted |S| = 1";
  } catch (const HypothesisViolation& e) {
    EXPECT_NE(std::string(e.what()).find("|S| >= 2"), std::string::npos);
  }
}

TEST(QuasiExtension, ExtendsAQuasiHitOnADenseGraph) {
  // T(x1): star at u over N(u), u1 ~ x1, x3 and x1 ~ x2, so x1 is the only
  // degree-2 vertex (u has degree delta >= 3).
  SplitMix64 rng(7);
  Graph g;
  for (;;) {
    g = gnp(300, 0.7, rng);
    auto r = condition_report(g);
    if (is_connected(g) && nc_condition_holds(r.n, r.nc)) break;
  }
  auto ctx = build_context(g);
  const Vertex u1 = ctx.nbrs[0];
  const auto& U1 = ctx.u_sets[0];
  ASSERT_GE(U1.size(), 2u);
  const Vertex x1 = U1.members()[0], x3 = U1.members()[1];
  Vertex x2 = x1;
  for (Vertex w : g.neighbors(x1))
    if (ctx.w_set.contains(w) && w != x3 && !g.adjacent(u1, w)) {
      x2 = w;
      break;
    }
  ASSERT_NE(x2, x1);
  auto edges = detail::star(ctx.u, ctx.nbr_set);
  edges.insert(edges.end(), {Edge(u1, x1), Edge(u1, x3), Edge(x1, x2)});
  Subtree quasi(ctx.closed.with(VertexSet{x1, x2, x3}), edges);
  ASSERT_EQ(classify_quasi(quasi).kind, QuasiKind::Quasi1);
  ConstructionTrace trace;
  auto t = lemma213_extend(g, ctx, quasi, x1, &trace);
  EXPECT_TRUE(verify_hist(g, t));
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(trace.steps[0].case_id.rfind("L2.13-case", 0), 0u);
}

TEST(Construct, Examples) {
  auto h1 = construct_theorem15(generate_H(Family::H1, 271));
  EXPECT_EQ(h1.status, ConstructionStatus::NoHist);
  EXPECT_EQ(h1.obstruction.kind, ObstructionKind::H1);

  auto k = construct_theorem15(complete(300));
  ASSERT_EQ(k.status, ConstructionStatus::Hist);
  EXPECT_TRUE(verify_hist(complete(300), *k.tree));
  EXPECT_EQ(k.tree->edges.front(), Edge(0, 1));

  EXPECT_EQ(construct_theorem15(complete(3)).status, ConstructionStatus::NoHist);
  EXPECT_EQ(construct_theorem15(complete(1)).status, ConstructionStatus::Hist);
  EXPECT_EQ(construct_theorem15(complete(2)).status, ConstructionStatus::Hist);
}

TEST(Construct, DenseRandomGraphUsesTheConnectedWCase) {
  SplitMix64 rng(300);
  int runs = 0;
  while (runs < 5) {
    auto g = gnp(300, 0.7, rng);
    auto r = condition_report(g);
    if (!is_connected(g) || !nc_condition_holds(r.n, r.nc)) continue;
    ++runs;
    auto c = construct_theorem15(g);
    ASSERT_EQ(c.status, ConstructionStatus::Hist) << c.reason;
    EXPECT_TRUE(verify_hist(g, *c.tree));
    ASSERT_FALSE(c.trace.steps.empty());
    EXPECT_EQ(c.trace.steps.front().case_id.rfind("5.1.", 0), 0u) << trace_ids(c.trace);
  }
}

TEST(Construct, NcFailureIsFallback) {
  // C8: two vertices at distance 2 see only 3 vertices, and 2*3 < 7.
  auto c = construct_theorem15(cycle(8));
  EXPECT_EQ(c.status, ConstructionStatus::Fallback);
  EXPECT_NE(c.reason.find("NC(G)=3"), std::string::npos) << c.reason;
}

// Every fixture kind reaches the case it was built for, the trace replays to
// the tree, and the tree verifies.
TEST(Construct, FixtureKindsHitTheirCases) {
  SplitMix64 rng(15);
  for (auto kind : instance_kinds()) {
    for (int rep = 0; rep < 3; ++rep) {
      auto inst = make_instance(kind, 271 + 10 * static_cast<std::size_t>(rep), rng);
      auto c = construct_theorem15(inst.graph);
      ASSERT_EQ(c.status, ConstructionStatus::Hist) << kind << ": " << c.reason;
      EXPECT_TRUE(verify_hist(inst.graph, *c.tree)) << kind;
      EXPECT_EQ(c.trace.edges(), c.tree->edges) << kind;
      if (!inst.expect.empty()) { EXPECT_TRUE(trace_has(c.trace, inst.expect)) << kind << ": " << trace_ids(c.trace); }
    }
  }
}

TEST(Construct, SmallGraphsNeverBreakInvariants) {
  SplitMix64 rng(99);
  int hist = 0, fallback = 0;
  for (int t = 0; t < 3000; ++t) {
    const auto n = 1 + rng.below(12);
    auto g = random_connected(n, 0.3 + 0.7 * rng.uniform01(), rng);
    ConstructionResult c;
    ASSERT_NO_THROW(c = construct_theorem15(g));
    switch (c.status) {
      case ConstructionStatus::Hist:
        ++hist;
        EXPECT_TRUE(verify_hist(g, *c.tree));
        EXPECT_EQ(c.trace.edges(), c.tree->edges);
        break;
      case ConstructionStatus::NoHist:
        EXPECT_EQ(exact_search(g).status, SearchStatus::NoHist);
        break;
      case ConstructionStatus::Fallback:
        ++fallback;
        EXPECT_FALSE(c.reason.empty());
        break;
    }
  }
  EXPECT_GT(hist, 1000);
}
