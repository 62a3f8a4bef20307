#include <gtest/gtest.h>

#include <sstream>

#include "hist/cli.hpp"

#include "common.hpp"

using namespace hist;
using namespace hist::cli;
using testing_graphs::data_path;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out, err;
  Run r;
  r.code = f(out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Run check(const std::string& file) {
  return run([&](auto& o, auto& e) { return cmd_check(data_path(file), "", o, e); });
}

Run solve_file(const std::string& file, const std::string& method = "auto") {
  SolveArgs a;
  a.path = data_path(file);
  a.method = method;
  return run([&](auto& o, auto& e) { return cmd_solve(a, o, e); });
}

Run verify(const std::string& g, const std::string& t) {
  return run([&](auto& o, auto& e) { return cmd_verify(data_path(g), data_path(t), "", o, e); });
}

Run gen(GenArgs a) {
  return run([&](auto& o, auto& e) { return cmd_gen(a, o, e); });
}

Run oracle(const std::string& file) {
  return run([&](auto& o, auto& e) { return cmd_oracle(data_path(file), "", kDefaultOracleCap, o, e); });
}

}  // namespace

TEST(Check, Examples) {
  auto p = check("petersen.g6");
  ASSERT_EQ(p.code, kOk);
  EXPECT_EQ(p.json()["report"]["nc"], 5);
  EXPECT_EQ(p.json()["report"]["sigma"], 6);
  EXPECT_EQ(p.json()["obstruction"]["kind"], "None");

  EXPECT_EQ(check("h1_9.el").json()["obstruction"]["kind"], "H1");
  auto k4 = check("k4.g6").json()["report"];
  EXPECT_EQ(k4["complete"], true);
  EXPECT_EQ(k4["nc"], "inf");
}

TEST(Check, ReportKeysInOrder) {
  auto r = check("petersen.g6").json()["report"];
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "m", "delta", "sigma", "nc", "meets_thm12", "meets_thm13",
                                            "meets_thm15", "complete"}));
}

TEST(Check, InputErrors) {
  auto missing = check("no_such_file.el");
  EXPECT_EQ(missing.code, kUsage);
  EXPECT_FALSE(missing.err.empty());
  EXPECT_TRUE(missing.out.empty());
  auto bad = run([](auto& o, auto& e) { return cmd_check(data_path("p4.tree"), "graph6", o, e); });
  EXPECT_EQ(bad.code, kUsage);
  auto fmt = run([](auto& o, auto& e) { return cmd_check(data_path("c5.el"), "dot", o, e); });
  EXPECT_EQ(fmt.code, kUsage);
}

TEST(Solve, Examples) {
  auto p = solve_file("petersen.g6");
  ASSERT_EQ(p.code, kOk);
  auto j = p.json();
  EXPECT_EQ(j["status"], "Hist");
  std::vector<Edge> edges;
  for (const auto& e : j["tree"]["edges"]) edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  EXPECT_TRUE(verify_hist(read_graph(data_path("petersen.g6"), ""), SpanningTree(10, edges)));

  auto h2 = solve_file("h2_9.el").json();
  EXPECT_EQ(h2["status"], "NoHist");
  EXPECT_EQ(h2["method"], "obstruction");

  auto c5 = solve_file("c5.el").json();
  EXPECT_EQ(c5["status"], "NoHist");
  EXPECT_EQ(c5["method"], "exact");
}

TEST(Solve, ConstructiveTraceAtTheoremScale) {
  auto r = solve_file("l213_22_301.el");
  ASSERT_EQ(r.code, kOk);
  auto j = r.json();
  EXPECT_EQ(j["status"], "Hist");
  EXPECT_EQ(j["method"], "constructive");
  bool cited = false;
  for (const auto& s : j["trace"]) cited |= s["case_id"] == "L2.13-case2.2";
  EXPECT_TRUE(cited);
}

TEST(Solve, BudgetUnknownExitCode) {
  SolveArgs a;
  a.path = data_path("h2_9.el");
  a.method = "exact";
  a.budget = 1;
  auto r = run([&](auto& o, auto& e) { return cmd_solve(a, o, e); });
  EXPECT_EQ(r.code, kBudget);
  EXPECT_EQ(r.json()["status"], "Unknown");
}

TEST(Solve, DisconnectedAndBadMethod) {
  SolveArgs a;
  a.path = data_path("foreign.tree");  // "0 1 / 0 2 / 0 4": vertex 3 isolated
  a.format = "edgelist";
  auto r = run([&](auto& o, auto& e) { return cmd_solve(a, o, e); });
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("connected"), std::string::npos) << r.err;
  EXPECT_EQ(solve_file("c5.el", "magic").code, kUsage);
}

TEST(Solve, ByteIdenticalReruns) {
  for (const char* f : {"petersen.g6", "c5.el", "gnp300.el", "h3c_9.el"}) EXPECT_EQ(solve_file(f).out, solve_file(f).out);
}

TEST(Solve, VerboseSummaryGoesToErr) {
  SolveArgs a;
  a.path = data_path("petersen.g6");
  a.verbose = true;
  auto r = run([&](auto& o, auto& e) { return cmd_solve(a, o, e); });
  EXPECT_EQ(r.err.rfind("Hist via", 0), 0u);
  EXPECT_EQ(r.out, solve_file("petersen.g6").out);
}

TEST(Verify, Examples) {
  auto ok = verify("k4.g6", "star.tree");
  EXPECT_EQ(ok.code, kOk);
  EXPECT_EQ(ok.json()["hist"], true);

  auto p4 = verify("p4.el", "p4.tree");
  EXPECT_EQ(p4.code, kFalse);
  EXPECT_EQ(p4.json()["reason"], "degree-2 vertices: 1,2");

  auto foreign = verify("c4.el", "foreign.tree");
  EXPECT_EQ(foreign.code, kFalse);
  EXPECT_EQ(foreign.json()["reason"], "edge not in graph");

  EXPECT_EQ(verify("k4.g6", "missing.tree").code, kUsage);
}

TEST(Gen, Examples) {
  GenArgs h1;
  h1.family = "h1";
  h1.n = 9;
  auto r = gen(h1);
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(parse_edgelist(r.out).size(), 14u);

  GenArgs g;
  g.family = "gnp";
  g.n = 20;
  g.p = 0.5;
  g.seed = 7;
  EXPECT_EQ(gen(g).out, gen(g).out);
  g.seed = 8;
  EXPECT_NE(gen(g).out, gen(GenArgs{"gnp", 20, 0.5, 7, false, "edgelist", ""}).out);

  GenArgs h3;
  h3.family = "h3";
  h3.n = 9;
  h3.coincide = true;
  EXPECT_EQ(parse_edgelist(gen(h3).out), generate_H(Family::H3, 9, true));
}

TEST(Gen, Graph6AndFixtures) {
  GenArgs k;
  k.family = "clique";
  k.n = 4;
  k.format = "graph6";
  EXPECT_EQ(gen(k).out, "C~\n");
  GenArgs f;
  f.family = "fixture";
  f.kind = "522-eq1";
  f.n = 271;
  f.seed = 3;
  auto r = gen(f);
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(parse_edgelist(r.out).order(), 271u);
}

TEST(Gen, InvalidParameters) {
  GenArgs even;
  even.family = "h2";
  even.n = 10;
  EXPECT_EQ(gen(even).code, kUsage);
  GenArgs unknown;
  unknown.family = "petersen";
  unknown.n = 10;
  EXPECT_EQ(gen(unknown).code, kUsage);
  GenArgs kind;
  kind.family = "fixture";
  kind.kind = "nope";
  kind.n = 271;
  EXPECT_EQ(gen(kind).code, kUsage);
}

TEST(Oracle, Examples) {
  auto k4 = oracle("k4.g6").json();
  EXPECT_EQ(k4["tree_count"], 16);
  EXPECT_EQ(k4["hist_count"], 4);
  auto c4 = oracle("c4.el").json();
  EXPECT_EQ(c4["tree_count"], 4);
  EXPECT_EQ(c4["hist_count"], 0);
  auto k13 = oracle("k13.el").json();
  EXPECT_EQ(k13["tree_count"], 1);
  EXPECT_EQ(k13["hist_count"], 1);
}

TEST(Oracle, CapIsAStatusNotAnError) {
  auto r = run([](auto& o, auto& e) { return cmd_oracle(data_path("petersen.g6"), "", 10, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["status"], "CapExceeded");
}

TEST(Sweep, AtlasSmall) {
  SweepArgs a;
  a.mode = "atlas";
  a.n_max = 6;
  auto r = run([&](auto& o, auto& e) { return cmd_sweep(a, o, e); });
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["agreement"], "100%");
  EXPECT_EQ(r.out, run([&](auto& o, auto& e) { return cmd_sweep(a, o, e); }).out);
  a.n_max = 10;
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_sweep(a, o, e); }).code, kUsage);
}

TEST(Sweep, RandomAndFamilies) {
  SweepArgs a;
  a.mode = "random";
  a.samples = 100;
  a.n_max = 8;
  auto r = run([&](auto& o, auto& e) { return cmd_sweep(a, o, e); });
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.json()["violations"].size(), 0u) << r.out;

  SweepArgs f;
  f.mode = "families";
  f.n_max = 15;
  auto fam = run([&](auto& o, auto& e) { return cmd_sweep(f, o, e); });
  ASSERT_EQ(fam.code, kOk) << fam.err;
  EXPECT_EQ(fam.json()["flagged"], fam.json()["graphs"]) << fam.out;
}
