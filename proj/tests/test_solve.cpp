#include <gtest/gtest.h>

#include "hist/instances.hpp"
#include "hist/solve.hpp"

#include "common.hpp"

using namespace hist;
using namespace testing_graphs;

TEST(Solve, Petersen) {
  auto r = solve(petersen());
  ASSERT_EQ(r.status, SolveStatus::Hist);
  EXPECT_TRUE(verify_hist(petersen(), *r.tree));
  EXPECT_TRUE(r.method == SolveMethod::Greedy || r.method == SolveMethod::Exact);
}

TEST(Solve, FamiliesByObstruction) {
  auto r = solve(generate_H(Family::H2, 9));
  EXPECT_EQ(r.status, SolveStatus::NoHist);
  EXPECT_EQ(r.method, SolveMethod::Obstruction);
  EXPECT_EQ(r.obstruction.kind, ObstructionKind::H2);
  EXPECT_FALSE(r.tree.has_value());
}

TEST(Solve, CycleByExactSearch) {
  auto r = solve(cycle(5));
  EXPECT_EQ(r.status, SolveStatus::NoHist);
  EXPECT_EQ(r.method, SolveMethod::Exact);
  EXPECT_FALSE(r.note.empty());
}

TEST(Solve, TriangleIsDecidedBySearch) {
  auto r = solve(complete(3));
  EXPECT_EQ(r.status, SolveStatus::NoHist);
  EXPECT_EQ(r.method, SolveMethod::Exact);
}

TEST(Solve, TheoremScaleUsesTheCaseMachine) {
  SplitMix64 rng(4);
  auto inst = make_instance("522-case1", 281, rng);
  auto r = solve(inst.graph);
  ASSERT_EQ(r.status, SolveStatus::Hist);
  EXPECT_EQ(r.method, SolveMethod::Constructive);
  ASSERT_TRUE(r.trace.has_value());
  EXPECT_FALSE(r.trace->steps.empty());
}

TEST(Solve, BudgetExhaustionIsUnknown) {
  SolveOptions opt;
  opt.strategy = SolveStrategy::Exact;
  opt.budget = 1;
  auto r = solve(generate_H(Family::H2, 21), opt);
  EXPECT_EQ(r.status, SolveStatus::Unknown);
  EXPECT_FALSE(r.tree.has_value());
}

TEST(Solve, Strategies) {
  auto g = petersen();
  for (auto s : {SolveStrategy::Exact, SolveStrategy::Greedy}) {
    SolveOptions opt;
    opt.strategy = s;
    auto r = solve(g, opt);
    if (r.status == SolveStatus::Hist) { EXPECT_TRUE(verify_hist(g, *r.tree)); }
  }
  SolveOptions opt;
  opt.strategy = SolveStrategy::Constructive;
  EXPECT_EQ(solve(complete(6), opt).status, SolveStatus::Hist);
  EXPECT_EQ(solve(complete(3), opt).status, SolveStatus::NoHist);
}

TEST(Solve, DisconnectedIsDomainError) {
  EXPECT_THROW(solve(Graph::from_edges(4, {{0, 1}, {2, 3}})), DomainError);
}

TEST(Solve, SoundOnRandomGraphs) {
  SplitMix64 rng(55);
  for (int t = 0; t < 500; ++t) {
    const auto n = 1 + rng.below(11);
    auto g = random_connected(n, 0.2 + 0.7 * rng.uniform01(), rng);
    auto r = solve(g);
    auto truth = exact_search(g);
    ASSERT_NE(r.status, SolveStatus::Unknown);
    EXPECT_EQ(r.status == SolveStatus::Hist, truth.status == SearchStatus::Found);
    if (r.tree) { EXPECT_TRUE(verify_hist(g, *r.tree)); }
    if (r.status == SolveStatus::NoHist) {
      EXPECT_TRUE(r.method == SolveMethod::Exact || r.method == SolveMethod::Obstruction);
    }
  }
}

TEST(Greedy, SeedChangesOnlyTheRelabelings) {
  auto g = gnp(40, 0.4, 3);
  auto a = greedy_hist(g, 1);
  auto b = greedy_hist(g, 1);
  EXPECT_EQ(a, b);
  if (a) { EXPECT_TRUE(verify_hist(g, *a)); }
}

TEST(SolveJson, ShapeAndDeterminism) {
  auto r = solve(petersen());
  auto j = to_json(r);
  for (const char* key : {"status", "method", "tree", "trace", "report", "obstruction", "stats"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(j["stats"].contains("elapsed_ms"));
  EXPECT_TRUE(to_json(r, true)["stats"].contains("elapsed_ms"));
  EXPECT_EQ(j["report"]["nc"], 5);
  EXPECT_EQ(to_json(solve(petersen())).dump(), j.dump());
  EXPECT_EQ(to_json(solve(complete(4)).report)["sigma"], "inf");
}

TEST(SolveJson, TraceRoundTrip) {
  SplitMix64 rng(8);
  auto inst = make_instance("l213-2.2", 301, rng);
  auto r = solve(inst.graph);
  ASSERT_TRUE(r.trace.has_value());
  auto back = trace_from_json(to_json(*r.trace));
  ASSERT_EQ(back.steps.size(), r.trace->steps.size());
  for (std::size_t i = 0; i < back.steps.size(); ++i) {
    EXPECT_EQ(back.steps[i].case_id, r.trace->steps[i].case_id);
    EXPECT_EQ(back.steps[i].detail, r.trace->steps[i].detail);
    EXPECT_EQ(back.steps[i].edges_added, r.trace->steps[i].edges_added);
  }
  EXPECT_EQ(back.edges(), r.tree->edges);
}
