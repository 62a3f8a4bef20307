#pragma once

// Command implementations behind tools/hist_cli. Each command writes JSON (or
// a graph) to `out`, diagnostics to `err`, and returns the process exit code:
// 0 decided/ok, 1 verification false, 2 usage or input error, 3 budget
// exhausted, 4 internal case invariant failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "atlas.hpp"
#include "conditions.hpp"
#include "constructive.hpp"
#include "errors.hpp"
#include "instances.hpp"
#include "io.hpp"
#include "json.hpp"
#include "obstructions.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "search.hpp"
#include "solve.hpp"

namespace hist::cli {

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3, kInvariant = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline GraphFormat format_for(const std::string& path, const std::string& override_format) {
  if (override_format == "graph6" || override_format == "g6") return GraphFormat::Graph6;
  if (override_format == "edgelist" || override_format == "el") return GraphFormat::EdgeList;
  if (!override_format.empty()) throw InputError("unknown format '" + override_format + "' (graph6 or edgelist)");
  auto ends = [&](const std::string& suf) {
    return path.size() >= suf.size() && path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends(".g6")) return GraphFormat::Graph6;
  if (ends(".el")) return GraphFormat::EdgeList;
  throw InputError("cannot infer format of '" + path + "' (use .g6/.el or --format)");
}

inline std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph read_graph(const std::string& path, const std::string& format) {
  const auto f = format_for(path, format);
  return parse_graph(read_text(path), f);
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Runs `body`, mapping library exceptions to exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const CaseInvariantError& e) {
    err << "error: case invariant failed: " << e.what() << '\n';
    for (const auto& s : e.trace().steps) err << "  after " << s.case_id << ": " << s.detail << '\n';
    return kInvariant;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
  } catch (const RangeError& e) {
    err << "error: range: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

// ---- check ------------------------------------------------------------------

inline int cmd_check(const std::string& path, const std::string& format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = read_graph(path, format);
    emit(out, Json{{"report", to_json(condition_report(g))}, {"obstruction", to_json(match_family(g))}});
    return kOk;
  });
}

// ---- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string path;
  std::string format;
  std::string method = "auto";
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t seed = 0;
  bool timing = false;
  bool verbose = false;
};

inline int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SolveOptions opt;
    if (a.method == "auto")
      opt.strategy = SolveStrategy::Auto;
    else if (a.method == "constructive")
      opt.strategy = SolveStrategy::Constructive;
    else if (a.method == "exact")
      opt.strategy = SolveStrategy::Exact;
    else if (a.method == "greedy")
      opt.strategy = SolveStrategy::Greedy;
    else
      throw InputError("unknown method '" + a.method + "'");
    opt.budget = a.budget;
    opt.seed = a.seed;
    const auto g = read_graph(a.path, a.format);
    const auto r = solve(g, opt);
    emit(out, to_json(r, a.timing));
    if (a.verbose) {
      err << to_string(r.status) << " via " << to_string(r.method) << " (n=" << g.order() << ", m=" << g.size()
          << ", nodes=" << r.stats.nodes_explored << ")\n";
      if (r.trace)
        for (const auto& s : r.trace->steps) err << "  " << s.case_id << ": " << s.detail << '\n';
      if (!r.note.empty()) err << "  note: " << r.note << '\n';
    }
    return r.status == SolveStatus::Unknown ? kBudget : kOk;
  });
}

// ---- verify -----------------------------------------------------------------

inline int cmd_verify(const std::string& graph_path, const std::string& tree_path, const std::string& format,
                      std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = read_graph(graph_path, format);
    const auto t = parse_tree(read_text(tree_path), g.order());
    const auto c = check_hist(g, t);
    Json j{{"hist", c.ok}};
    if (!c.ok) {
      j["reason"] = c.reason;
      err << "not a HIST: " << c.reason << '\n';
    }
    emit(out, j);
    return c.ok ? kOk : kFalse;
  });
}

// ---- gen --------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool coincide = false;
  std::string format = "edgelist";
  std::string kind;  // fixture kind for family "fixture"
};

inline int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Graph g;
    if (a.family == "h1")
      g = generate_H(Family::H1, a.n);
    else if (a.family == "h2")
      g = generate_H(Family::H2, a.n);
    else if (a.family == "h3")
      g = generate_H(Family::H3, a.n, a.coincide);
    else if (a.family == "gnp")
      g = gnp(a.n, a.p, a.seed);
    else if (a.family == "clique") {
      std::vector<Edge> e;
      for (Vertex j = 1; j < a.n; ++j)
        for (Vertex i = 0; i < j; ++i) e.emplace_back(i, j);
      g = Graph::from_edges(a.n, e);
    } else if (a.family == "fixture") {
      SplitMix64 rng(a.seed);
      g = make_instance(a.kind, a.n, rng).graph;
    } else {
      throw InputError("unknown family '" + a.family + "' (h1, h2, h3, gnp, clique, fixture)");
    }
    const auto f = format_for("", a.format);
    out << encode_graph(g, f);
    return kOk;
  });
}

// ---- oracle -----------------------------------------------------------------

inline int cmd_oracle(const std::string& path, const std::string& format, std::uint64_t cap, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const auto g = read_graph(path, format);
    emit(out, to_json(oracle_enumerate(g, cap)));
    return kOk;
  });
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string mode = "atlas";
  std::size_t n_max = 7;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t cap = kDefaultOracleCap;
};

namespace detail {

// Applies f to every index in parallel; results land by index, so the output
// does not depend on scheduling.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, unsigned threads, F&& f) {
  std::vector<R> out(count);
  unsigned workers = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, count)));
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < count; i += workers) out[i] = f(i);
  };
  if (workers == 1) {
    work(0);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  for (auto& t : pool) t.join();
  return out;
}

struct AtlasRow {
  bool exact_hist = false;
  bool exact_decided = true;
  bool oracle_complete = true;
  bool oracle_hist = false;
  bool nc = false;
};

inline Json sweep_atlas(const SweepArgs& a) {
  if (a.n_max < 1 || a.n_max > kAtlasMaxOrder) throw InputError("atlas mode requires 1 <= n-max <= 9");
  Json orders = Json::array();
  std::size_t total = 0, agree = 0, compared = 0;
  for (std::size_t n = 1; n <= a.n_max; ++n) {
    const auto codes = connected_atlas_codes(n, a.threads);
    auto rows = parallel_map<AtlasRow>(codes.size(), a.threads, [&](std::size_t i) {
      const auto g = graph_from_code(n, codes[i]);
      AtlasRow row;
      const auto s = exact_search(g, a.budget);
      row.exact_decided = s.status != SearchStatus::BudgetExceeded;
      row.exact_hist = s.status == SearchStatus::Found;
      const auto o = oracle_enumerate(g, a.cap);
      row.oracle_complete = o.status == OracleStatus::Complete;
      row.oracle_hist = o.hist_exists();
      row.nc = nc_condition_holds(n, condition_report(g).nc);
      return row;
    });
    std::size_t with_hist = 0, capped = 0, agreed = 0, nc_graphs = 0, undecided = 0;
    Json disagreements = Json::array(), nc_without = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      with_hist += row.exact_hist;
      undecided += !row.exact_decided;
      if (!row.oracle_complete) {
        ++capped;
      } else if (row.exact_decided && row.exact_hist == row.oracle_hist) {
        ++agreed;
      } else {
        disagreements.push_back(encode_graph6(graph_from_code(n, codes[i])));
      }
      if (row.nc) {
        ++nc_graphs;
        if (row.exact_decided && !row.exact_hist) nc_without.push_back(encode_graph6(graph_from_code(n, codes[i])));
      }
    }
    total += rows.size();
    agree += agreed;
    compared += rows.size() - capped;
    orders.push_back(Json{{"n", n},
                          {"graphs", rows.size()},
                          {"with_hist", with_hist},
                          {"exact_undecided", undecided},
                          {"oracle_capped", capped},
                          {"agree", agreed},
                          {"disagree", disagreements},
                          {"nc_graphs", nc_graphs},
                          {"nc_without_hist", nc_without}});
  }
  return Json{{"mode", "atlas"},
              {"n_max", a.n_max},
              {"graphs", total},
              {"compared", compared},
              {"agree", agree},
              {"agreement", compared == agree ? "100%" : std::to_string(agree) + "/" + std::to_string(compared)},
              {"orders", orders}};
}

// Invariants checked per random graph; each failure is reported by name.
inline std::vector<std::string> random_checks(const Graph& g, const SweepArgs& a) {
  std::vector<std::string> bad;
  const auto n = g.order();
  const auto r = condition_report(g);
  if (r.complete != !r.nc.has_value() || r.complete != !r.sigma.has_value()) bad.push_back("inf-iff-complete");
  if (r.nc && r.sigma && !(r.delta <= *r.nc && *r.nc <= *r.sigma)) bad.push_back("delta<=nc<=sigma");
  if (!implication_check(g)) bad.push_back("sigma>=n-1 implies 2nc>=n-1");

  const auto s = exact_search(g, a.budget);
  const auto o = oracle_enumerate(g, a.cap);
  if (s.status == SearchStatus::Found) {
    if (!verify_hist(g, *s.tree)) bad.push_back("exact tree verifies");
    if (classify_quasi(*s.tree).kind != QuasiKind::HIT) bad.push_back("verified tree classifies HIT");
  }
  if (o.status == OracleStatus::Complete && s.status != SearchStatus::BudgetExceeded &&
      o.hist_exists() != (s.status == SearchStatus::Found))
    bad.push_back("exact == oracle");

  const auto obs = match_family(g);
  if (obs.kind != ObstructionKind::None && s.status == SearchStatus::Found) bad.push_back("obstruction implies no HIST");

  try {
    const auto c = construct_theorem15(g, {a.budget});
    if (c.status == ConstructionStatus::Hist) {
      if (!verify_hist(g, *c.tree)) bad.push_back("constructive tree verifies");
      SpanningTree replay(n, c.trace.edges());
      if (replay.edges != c.tree->edges) bad.push_back("trace replay reproduces tree");
    }
    if (c.status == ConstructionStatus::NoHist && s.status == SearchStatus::Found) bad.push_back("constructive NoHist");
  } catch (const CaseInvariantError& e) {
    bad.push_back(std::string("case invariant: ") + e.what());
  }

  if (!r.complete && nc_condition_holds(n, r.nc) && 2 * r.delta + 3 < n) {
    const auto ctx = build_context(g);
    if (!lemma28_clique_check(ctx, g)) bad.push_back("low-attachment neighbors form a clique");
  }

  const auto sr = solve(g, {SolveStrategy::Auto, a.budget, a.seed, 8});
  if (sr.status == SolveStatus::Hist && !verify_hist(g, *sr.tree)) bad.push_back("solve tree verifies");
  if (sr.status == SolveStatus::NoHist && s.status == SearchStatus::Found) bad.push_back("solve NoHist is sound");
  return bad;
}

inline Json sweep_random(const SweepArgs& a) {
  if (a.n_max < 4) throw InputError("random mode requires n-max >= 4");
  SplitMix64 rng(a.seed);
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < a.samples; ++i) {
    const auto n = 4 + static_cast<std::size_t>(rng.below(a.n_max - 3));
    graphs.push_back(random_connected(n, 0.25 + 0.7 * rng.uniform01(), rng));
  }
  auto results = parallel_map<std::vector<std::string>>(graphs.size(), a.threads,
                                                        [&](std::size_t i) { return random_checks(graphs[i], a); });
  Json violations = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i)
    for (const auto& what : results[i]) violations.push_back(Json{{"graph6", encode_graph6(graphs[i])}, {"check", what}});
  return Json{{"mode", "random"},
              {"samples", a.samples},
              {"n_max", a.n_max},
              {"seed", a.seed},
              {"violation_count", violations.size()},
              {"violations", violations}};
}

inline Json sweep_families(const SweepArgs& a) {
  if (a.n_max < 9) throw InputError("families mode requires n-max >= 9");
  struct Job {
    std::size_t n;
    Family fam;
    bool coincide;
    const char* name;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 9; n <= a.n_max; n += 2) {
    jobs.push_back({n, Family::H1, false, "H1"});
    jobs.push_back({n, Family::H2, false, "H2"});
    jobs.push_back({n, Family::H3, false, "H3"});
    jobs.push_back({n, Family::H3, true, "H3-coincide"});
  }
  auto rows = parallel_map<Json>(jobs.size(), a.threads, [&](std::size_t i) {
    const auto& j = jobs[i];
    const auto g = generate_H(j.fam, j.n, j.coincide);
    const auto r = solve(g, {SolveStrategy::Auto, a.budget, a.seed, 8});
    const auto rep = condition_report(g);
    Json row{{"family", j.name},
             {"n", j.n},
             {"status", to_string(r.status)},
             {"method", to_string(r.method)},
             {"kind", to_string(r.obstruction.kind)},
             {"nc", finite_or_inf(rep.nc)}};
    if (j.n <= 13) row["exact"] = to_string(exact_search(g, a.budget).status);
    return row;
  });
  std::size_t flagged = 0;
  for (const auto& row : rows) flagged += row["status"] == "NoHist" && row["method"] == "obstruction";
  return Json{{"mode", "families"}, {"n_max", a.n_max}, {"graphs", rows.size()}, {"flagged", flagged}, {"rows", rows}};
}

}  // namespace detail

inline int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Json j;
    if (a.mode == "atlas")
      j = detail::sweep_atlas(a);
    else if (a.mode == "random")
      j = detail::sweep_random(a);
    else if (a.mode == "families")
      j = detail::sweep_families(a);
    else
      throw InputError("unknown sweep mode '" + a.mode + "' (atlas, random, families)");
    emit(out, j);
    return kOk;
  });
}

}  // namespace hist::cli
