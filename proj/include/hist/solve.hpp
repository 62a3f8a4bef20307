#pragma once

// One-call decision: obstruction certificates, the constructive case machine
// when the NC condition engages it, the greedy heuristic, then exact search.
// Hist is only ever reported with a tree that passed verify_hist here.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "conditions.hpp"
#include "constructive.hpp"
#include "dense.hpp"
#include "json.hpp"
#include "obstructions.hpp"
#include "random.hpp"
#include "search.hpp"
#include "tree.hpp"

namespace hist {

enum class SolveStatus { Hist, NoHist, Unknown };
enum class SolveMethod { Constructive, Exact, Greedy, Oracle, Obstruction };
enum class SolveStrategy { Auto, Constructive, Exact, Greedy };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Hist: return "Hist";
    case SolveStatus::NoHist: return "NoHist";
    case SolveStatus::Unknown: return "Unknown";
  }
  return "?";
}

inline const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Constructive: return "constructive";
    case SolveMethod::Exact: return "exact";
    case SolveMethod::Greedy: return "greedy";
    case SolveMethod::Oracle: return "oracle";
    case SolveMethod::Obstruction: return "obstruction";
  }
  return "?";
}

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  SolveMethod method = SolveMethod::Exact;
  std::optional<SpanningTree> tree;
  std::optional<ConstructionTrace> trace;
  ConditionReport report;
  ObstructionReport obstruction;
  SolveStats stats;
  std::string note;  // why earlier stages passed the graph on
};

struct SolveOptions {
  SolveStrategy strategy = SolveStrategy::Auto;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t seed = 0;
  unsigned greedy_attempts = 8;
};

// dense_hist on g, then on seeded random relabelings of g (tie-breaking is by
// vertex id, so relabeling explores different greedy runs).
inline std::optional<SpanningTree> greedy_hist(const Graph& g, std::uint64_t seed, unsigned attempts = 8) {
  if (auto t = dense_hist(g)) return t;
  SplitMix64 rng(seed);
  const auto n = g.order();
  for (unsigned a = 1; a < attempts; ++a) {
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    rng.shuffle(perm);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    auto t = dense_hist(Graph::from_edges(n, edges));
    if (!t) continue;
    std::vector<Vertex> inv(n);
    for (Vertex v = 0; v < n; ++v) inv[perm[v]] = v;
    std::vector<Edge> back;
    for (const auto& e : t->edges) back.emplace_back(inv[e.u], inv[e.v]);
    SpanningTree out(n, std::move(back));
    if (verify_hist(g, out)) return out;
  }
  return std::nullopt;
}

inline SolveResult solve(const Graph& g, const SolveOptions& opt = {}) {
  require_connected(g, "solve");
  const auto start = std::chrono::steady_clock::now();
  SolveResult r;
  r.report = condition_report(g);
  r.obstruction = match_family(g);

  auto done = [&](SolveStatus status, SolveMethod method, std::optional<SpanningTree> tree = std::nullopt) {
    if (tree && !verify_hist(g, *tree)) throw CaseInvariantError("solver produced an unverified tree", {});
    r.status = status;
    r.method = method;
    r.tree = std::move(tree);
    r.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  auto note = [&](const std::string& s) { r.note += (r.note.empty() ? "" : "; ") + s; };

  auto exact = [&] {
    auto s = exact_search(g, opt.budget);
    r.stats.nodes_explored = s.nodes;
    if (s.status == SearchStatus::Found) return done(SolveStatus::Hist, SolveMethod::Exact, s.tree);
    if (s.status == SearchStatus::NoHist) return done(SolveStatus::NoHist, SolveMethod::Exact);
    note("exact search budget of " + std::to_string(opt.budget) + " nodes exhausted");
    return done(SolveStatus::Unknown, SolveMethod::Exact);
  };
  auto greedy = [&]() -> std::optional<SolveResult> {
    if (auto t = greedy_hist(g, opt.seed, opt.greedy_attempts)) return done(SolveStatus::Hist, SolveMethod::Greedy, t);
    note("greedy heuristic found no HIST");
    return std::nullopt;
  };
  // Returns a result when the case machine decides; K3 is left to exact
  // search so that NoHist always carries a search or obstruction certificate.
  auto constructive = [&]() -> std::optional<SolveResult> {
    auto c = construct_theorem15(g, {opt.budget});
    if (c.status == ConstructionStatus::Hist) {
      r.trace = c.trace;
      return done(SolveStatus::Hist, SolveMethod::Constructive, c.tree);
    }
    if (c.status == ConstructionStatus::NoHist && c.obstruction.kind != ObstructionKind::None)
      return done(SolveStatus::NoHist, SolveMethod::Obstruction);
    note(c.reason);
    return std::nullopt;
  };

  switch (opt.strategy) {
    case SolveStrategy::Exact: return exact();
    case SolveStrategy::Greedy:
      if (auto res = greedy()) return *res;
      return done(SolveStatus::Unknown, SolveMethod::Greedy);
    case SolveStrategy::Constructive:
      if (auto res = constructive()) return *res;
      if (g.is_complete()) return exact();
      return done(SolveStatus::Unknown, SolveMethod::Constructive);
    case SolveStrategy::Auto: break;
  }

  if (r.obstruction.kind != ObstructionKind::None) return done(SolveStatus::NoHist, SolveMethod::Obstruction);
  if (g.is_complete() || nc_condition_holds(g.order(), r.report.nc))
    if (auto res = constructive()) return *res;
  if (auto res = greedy()) return *res;
  return exact();
}

inline Json to_json(const SolveResult& r, bool timing = false) {
  Json j{{"status", to_string(r.status)}, {"method", to_string(r.method)}};
  j["tree"] = r.tree ? to_json(*r.tree) : Json(nullptr);
  j["trace"] = r.trace ? to_json(*r.trace) : Json(nullptr);
  j["report"] = to_json(r.report);
  j["obstruction"] = to_json(r.obstruction);
  Json stats{{"nodes_explored", r.stats.nodes_explored}};
  if (timing) stats["elapsed_ms"] = r.stats.elapsed_ms;
  j["stats"] = stats;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace hist
