#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conditions.hpp"
#include "dense.hpp"
#include "graph.hpp"
#include "obstructions.hpp"
#include "search.hpp"
#include "tree.hpp"

namespace hist {

struct TraceStep {
  std::string case_id;
  std::string detail;
  std::vector<Edge> edges_added;
};

struct ConstructionTrace {
  std::vector<TraceStep> steps;

  // Union of all steps; constructions only ever add edges.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& s : steps) out.insert(out.end(), s.edges_added.begin(), s.edges_added.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// A construction prerequisite does not hold for this input.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The stand-in for the external dense-graph construction ran out of budget.
class SubstituteFailure : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

// A structural claim that must hold under the hypotheses failed.
class CaseInvariantError : public std::logic_error {
 public:
  CaseInvariantError(const std::string& what, ConstructionTrace trace)
      : std::logic_error(what), trace_(std::move(trace)) {}
  const ConstructionTrace& trace() const noexcept { return trace_; }

 private:
  ConstructionTrace trace_;
};

struct DecompositionContext {
  std::size_t n = 0;
  std::size_t delta = 0;
  Vertex u = 0;
  std::vector<Vertex> nbrs;       // u_1..u_delta: |U_i| descending, then id
  std::vector<VertexSet> u_sets;  // U_i, aligned with nbrs
  VertexSet nbr_set;              // N(u)
  VertexSet closed;               // N[u]
  VertexSet w_set;                // W = V \ N[u]
  std::vector<VertexSet> w_components;

  const VertexSet& U(Vertex ui) const {
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      if (nbrs[i] == ui) return u_sets[i];
    throw DomainError("vertex " + std::to_string(ui) + " is not a neighbor of u");
  }
};

namespace detail {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

inline std::string ids(const VertexSet& s) { return "{" + join_ids(s) + "}"; }

inline std::vector<Edge> star(Vertex c, const VertexSet& leaves) {
  std::vector<Edge> out;
  for (Vertex x : leaves)
    if (x != c) out.emplace_back(c, x);
  return out;
}

inline void append(std::vector<Edge>& to, const std::vector<Edge>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisViolation(what);
}

}  // namespace detail

// Checks inequality (e4), d_W(w) >= (n-1)/2 - delta for every w in W, which
// follows from the neighborhood-union condition.
inline DecompositionContext build_context(const Graph& g, bool check_e4 = true) {
  require_connected(g, "build_context");
  if (g.is_complete()) throw DomainError("build_context: graph is complete");
  DecompositionContext ctx;
  ctx.n = g.order();
  ctx.delta = g.min_degree();
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == ctx.delta) {
      ctx.u = v;
      break;
    }
  auto nb = g.neighbors(ctx.u);
  ctx.nbr_set = VertexSet(std::vector<Vertex>(nb.begin(), nb.end()));
  ctx.closed = ctx.nbr_set.with(ctx.u);
  ctx.w_set = VertexSet::range(ctx.n).without(ctx.closed);
  ctx.nbrs = ctx.nbr_set.members();
  std::stable_sort(ctx.nbrs.begin(), ctx.nbrs.end(), [&](Vertex a, Vertex b) {
    return g.degree_in(a, ctx.w_set) > g.degree_in(b, ctx.w_set);
  });
  for (Vertex ui : ctx.nbrs) ctx.u_sets.push_back(g.neighbors_in(ui, ctx.w_set));
  ctx.w_components = components(g, ctx.w_set);
  if (check_e4) {
    const long long bound = static_cast<long long>(ctx.n) - 1 - 2 * static_cast<long long>(ctx.delta);
    for (Vertex w : ctx.w_set)
      if (2 * static_cast<long long>(g.degree_in(w, ctx.w_set)) < bound)
        throw HypothesisViolation(detail::cat("inequality (e4) fails at w=", w, ": d_W(w)=",
                                              g.degree_in(w, ctx.w_set), " < (n-1)/2 - delta"));
  }
  return ctx;
}

// The set {u_i : |U_i| <= 1} is a clique.
inline bool lemma28_clique_check(const DecompositionContext& ctx, const Graph& g) {
  std::vector<Vertex> small;
  for (std::size_t i = 0; i < ctx.nbrs.size(); ++i)
    if (ctx.u_sets[i].size() <= 1) small.push_back(ctx.nbrs[i]);
  return g.is_clique(VertexSet(std::move(small)));
}

// HIST of G[component \ removed]: a star for cliques (centered at `hint`
// when given), otherwise the dense heuristic followed by exact search.
inline Subtree component_hist(const Graph& g, const VertexSet& component, const VertexSet& removed,
                              std::optional<Vertex> hint = std::nullopt,
                              std::uint64_t budget = kDefaultSearchBudget) {
  if (removed.size() > 2) throw DomainError("component_hist: at most two removed vertices");
  const auto h = component.without(removed);
  detail::require(!h.empty(), "component_hist: nothing left after removal");
  if (h.size() == 1) return Subtree(h, {});
  if (hint && !h.contains(*hint)) hint.reset();
  if (h.size() == 2) {
    detail::require(g.adjacent(h.members()[0], h.members()[1]),
                    "component_hist: two nonadjacent vertices " + detail::ids(h));
    return Subtree(h, {Edge(h.members()[0], h.members()[1])});
  }
  const Vertex center = hint ? *hint : h.front();
  if (g.degree_in(center, h) + 1 == h.size()) {
    detail::require(h.size() != 3, "component_hist: " + detail::ids(h) + " induces K3, which has no HIST");
    return Subtree(h, detail::star(center, h));
  }
  auto sub = induced_subgraph(g, h);
  detail::require(is_connected(sub.graph), "component_hist: " + detail::ids(h) + " is disconnected");
  auto to_host = [&](const SpanningTree& t) {
    std::vector<Edge> edges;
    for (const auto& e : t.edges) edges.emplace_back(sub.to_host[e.u], sub.to_host[e.v]);
    return Subtree(h, std::move(edges));
  };
  if (auto t = dense_hist(sub.graph)) return to_host(*t);
  auto r = exact_search(sub.graph, budget);
  if (r.status == SearchStatus::Found) return to_host(*r.tree);
  if (r.status == SearchStatus::NoHist)
    throw HypothesisViolation("component_hist: G[" + detail::ids(h) + "] has no HIST");
  throw SubstituteFailure(detail::cat("component_hist: search budget of ", budget, " nodes exhausted on ",
                                      h.size(), " vertices"));
}

namespace detail {

// Executes the case analysis. Every handler records the edges it adds as a
// trace step; the final tree is the union of all steps.
class CaseMachine {
 public:
  CaseMachine(const Graph& g, const DecompositionContext& ctx, std::uint64_t budget)
      : g_(g), ctx_(ctx), budget_(budget), n_(ctx.n), delta_(ctx.delta) {}

  ConstructionTrace trace;

  void run() {
    if (ctx_.w_components.size() == 1)
      case_connected();
    else
      case_disconnected();
  }

  SpanningTree finish() {
    SpanningTree t(n_, trace.edges());
    auto check = check_hist(g_, t);
    claim(check.ok, "assembled tree is not a HIST: " + check.reason);
    return t;
  }

  void claim(bool ok, const std::string& what) const {
    if (!ok) throw CaseInvariantError(what, trace);
  }
  // A claim when the cited lemma's hypotheses hold, otherwise a prerequisite.
  void check(bool hyp, bool ok, const std::string& what) const {
    if (hyp)
      claim(ok, what);
    else
      require(ok, what);
  }

  void emit(std::string id, std::string detail, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    trace.steps.push_back({std::move(id), std::move(detail), std::move(edges)});
  }

  // Extends a 1-quasi-HIT on N[u] + S centered at v, S a subset of W, to a
  // spanning tree; records one step with the added edges.
  void lemma213(const Subtree& quasi, Vertex v) {
    const auto& w = ctx_.w_set;
    require(ctx_.w_components.size() == 1, "extension needs G[W] connected");
    require(quasi.vertices.intersect(ctx_.closed) == ctx_.closed, "quasi-HIT must contain N[u]");
    const auto s = quasi.vertices.without(ctx_.closed);
    require(s.contains(v), cat("center ", v, " must lie in S"));
    require(s.size() >= 2, "extension needs |S| >= 2");
    for (const auto& e : quasi.edges) require(g_.adjacent(e.u, e.v), "quasi-HIT edge not in graph");
    const auto q = classify_quasi(quasi);
    require(q.kind == QuasiKind::Quasi1 && q.deg2_vertices == VertexSet{v},
            cat("input is not a 1-quasi-HIT centered at ", v));

    const auto s_prime = s.without(v);
    const auto rest = w.without(s_prime);
    const auto comps = components(g_, rest);
    check(4 * (s_prime.size() + delta_) < n_ + 5, comps.size() <= 2,
          cat("G[W \\ S'] has ", comps.size(), " components, expected at most 2"));

    if (comps.size() == 1) {
      auto t_rest = component_hist(g_, rest, {}, v, budget_);
      require(t_rest.degree(v) >= 1, "W \\ S' is just the center");
      guard([&] { extend_quasi1(g_, quasi, v, t_rest); });
      emit("L2.13-case1", cat("S'=", ids(s_prime), ", HIST of G[W \\ S'] on ", rest.size(), " vertices at v=", v),
           t_rest.edges);
      return;
    }

    const auto& c1 = comps[0].contains(v) ? comps[0] : comps[1];
    const auto& c2 = comps[0].contains(v) ? comps[1] : comps[0];
    std::optional<Vertex> x;
    for (Vertex y : s_prime)
      if (g_.degree_in(y, c2) > 0) {
        x = y;
        break;
      }
    claim(x.has_value(), "G[W] connected but no vertex of S' reaches C2");
    const auto n_c2 = g_.neighbors_in(*x, c2);

    if (n_c2.size() == c2.size()) {
      auto added = star(*x, c2);
      Subtree grown = grow(quasi, added);
      auto t1 = component_hist(g_, c1, {}, v, budget_);
      guard([&] { extend_quasi1(g_, grown, v, t1); });
      append(added, t1.edges);
      emit("L2.13-case2.1", cat("x=", *x, " adjacent to all of C2 (", c2.size(), " vertices); HIST of C1 at v=", v),
           added);
      return;
    }

    const auto [x1, x2] = find_induced_p3(g_, c2, *x);
    if (n_c2.size() == 1) {
      const auto cand = g_.neighbors_in(*x, c1).without(v);
      require(!cand.empty(), cat("x=", *x, " has no C1-neighbor besides v"));
      const Vertex x3 = cand.front();
      std::vector<Edge> added{{*x, x1}, {*x, x3}, {x1, x2}};
      Subtree grown = grow(quasi, added);
      auto ts = component_hist(g_, c1, {x3}, v, budget_);
      auto tu = component_hist(g_, c2, {x2}, x1, budget_);
      guard([&] { extend_quasi2(g_, grown, v, x1, ts, tu); });
      append(added, ts.edges);
      append(added, tu.edges);
      emit("L2.13-case2.2", cat("x=", *x, " x1=", x1, " x2=", x2, " x3=", x3), added);
      return;
    }

    const Vertex x4 = n_c2.without(x1).front();
    std::vector<Edge> added{{*x, x1}, {*x, x4}, {x1, x2}};
    Subtree grown = grow(quasi, added);
    auto ts = component_hist(g_, c1, {}, v, budget_);
    auto tu = component_hist(g_, c2, {x2, x4}, x1, budget_);
    guard([&] { extend_quasi2(g_, grown, v, x1, ts, tu); });
    append(added, ts.edges);
    append(added, tu.edges);
    emit("L2.13-case2.3", cat("x=", *x, " x1=", x1, " x2=", x2, " x4=", x4), added);
  }

  // Spanning tree of C + u_l in which only u_l may have degree 2 and
  // d(u_l) >= min(2, |N_C(u_l)|); records one step.
  Subtree lemma214(const VertexSet& c, Vertex ul) {
    const auto nc = g_.neighbors_in(ul, c);
    if (nc.empty()) throw DomainError(cat("lemma214: u_l=", ul, " has no neighbor in the component"));
    const bool hyp = n_ >= 143 && 4 * delta_ < n_ + 1;
    const auto all = c.with(ul);
    std::string id;
    std::string detail;
    std::vector<Edge> edges;

    auto valid = [&](const std::vector<Edge>& e) {
      Subtree t(all, e);
      if (!check_tree(&g_, g_.order(), all, t.edges, false)) return false;
      for (Vertex y : c)
        if (t.degree(y) == 2) return false;
      return t.degree(ul) >= std::min<std::size_t>(2, nc.size());
    };

    if (nc.size() == c.size()) {
      id = "L2.14-full";
      detail = cat("u_l=", ul, " adjacent to all ", c.size(), " vertices");
      edges = star(ul, c);
    } else {
      const auto [x1, x2] = find_induced_p3(g_, c, ul);
      std::optional<Vertex> x3;
      if (nc.size() == 1) {
        id = "L2.14-one";
        detail = cat("u_l=", ul, " x1=", x1, " x2=", x2);
      } else {
        id = "L2.14-mid";
        x3 = nc.without(x1).front();
        detail = cat("u_l=", ul, " x1=", x1, " x2=", x2, " x3=", *x3);
      }
      std::optional<HypothesisViolation> failure;
      try {
        auto t0 = component_hist(g_, c, x3 ? VertexSet{x2, *x3} : VertexSet{x2}, std::nullopt, budget_);
        edges = t0.edges;
        edges.emplace_back(ul, x1);
        edges.emplace_back(x1, x2);
        if (x3) edges.emplace_back(ul, *x3);
      } catch (const SubstituteFailure&) {
        throw;
      } catch (const HypothesisViolation& e) {
        failure = e;
      }
      if (failure || !valid(edges)) {
        // Variant: keep x1 internal in a HIST of C (minus x3) and hang u_l on it.
        auto t1 = component_hist(g_, c, x3 ? VertexSet{*x3} : VertexSet{}, x1, budget_);
        edges = t1.edges;
        edges.emplace_back(ul, x1);
        if (x3) edges.emplace_back(ul, *x3);
        detail += "; variant with x1 internal in a HIST of C";
        if (x3) detail += " - x3";
      }
    }
    check(hyp, valid(edges),
          cat("no spanning tree of C+u_l with only u_l at degree 2 for u_l=", ul, " and |C|=", c.size()));
    emit(id, detail, edges);
    return Subtree(all, edges);
  }

 private:
  template <typename F>
  static void guard(F&& f) {
    try {
      f();
    } catch (const DomainError& e) {
      throw HypothesisViolation(e.what());
    }
  }

  static Subtree grow(const Subtree& t, const std::vector<Edge>& added) {
    std::vector<Vertex> vs = t.vertices.members();
    for (const auto& e : added) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    std::vector<Edge> edges = t.edges;
    append(edges, added);
    return Subtree(VertexSet(std::move(vs)), std::move(edges));
  }

  Subtree quasi_from(const std::vector<Edge>& edges, const VertexSet& s) const {
    return Subtree(ctx_.closed.with(s), edges);
  }

  // ---- G[W] connected -------------------------------------------------

  void case_connected() {
    const Vertex u = ctx_.u;
    const Vertex u1 = ctx_.nbrs[0];
    const auto& w = ctx_.w_set;
    const auto& u1_set = ctx_.u_sets[0];
    claim(!u1_set.empty(), "no edge between N(u) and W in a connected graph");
    const bool adj12 = delta_ == 2 && g_.adjacent(ctx_.nbrs[0], ctx_.nbrs[1]);

    if (delta_ == 2 && !adj12) return case_delta2_nonadjacent();

    if (u1_set.size() == w.size()) {
      if (delta_ != 2 && w.size() == 1) {
        // u1 would keep degree 2 in the plain star; it takes one leaf of u
        const auto cand = g_.neighbors_in(u1, ctx_.nbr_set);
        require(delta_ >= 4 && !cand.empty(), "U1=W={w} needs delta >= 4 and a neighbor of u1 in N(u)");
        const Vertex uj = cand.front();
        auto edges = star(u, ctx_.nbr_set.without(uj));
        append(edges, {{u1, uj}, {u1, w.front()}});
        emit("5.1.1-star", cat("u=", u, " u1=", u1, " U1=W={", w.front(), "}; u1 takes u_j=", uj), edges);
      } else if (delta_ != 2) {
        auto edges = star(u, ctx_.nbr_set);
        append(edges, star(u1, u1_set));
        emit("5.1.1-star", cat("u=", u, " u1=", u1, " U1=W"), edges);
      } else {
        auto nb = g_.neighbors(u1);
        emit("5.1.1-star", cat("u=", u, " u1=", u1, " U1=W, delta=2, u1u2 in E"),
             star(u1, VertexSet(std::vector<Vertex>(nb.begin(), nb.end()))));
      }
      return;
    }

    const auto [x1, x2] = find_induced_p3(g_, w, u1);
    if (u1_set.size() == 1) {
      claim(delta_ >= 2, "delta=1 with |U1|=1 puts a pendant next to a degree-2 vertex");
      check(2 * delta_ + 3 < n_, g_.is_clique(ctx_.nbr_set), "N(u) is a clique");
      auto edges = star(u1, ctx_.closed.without(u1));
      append(edges, {{u1, x1}, {x1, x2}});
      const VertexSet s{x1, x2};
      emit("5.1.1-U1eq1", cat("u=", u, " u1=", u1, " x1=", x1, " x2=", x2), edges);
      lemma213(quasi_from(edges, s), x1);
      return;
    }

    const Vertex x3 = u1_set.without(x1).front();
    auto edges = adj12 ? star(u1, ctx_.closed.without(u1)) : star(u, ctx_.nbr_set);
    append(edges, {{u1, x1}, {x1, x2}, {u1, x3}});
    const VertexSet s{x1, x2, x3};
    emit("5.1.1-U1ge2",
         cat("u=", u, " u1=", u1, " x1=", x1, " x2=", x2, " x3=", x3, adj12 ? "; hub u1 (delta=2, u1u2 in E)" : ""),
         edges);
    lemma213(quasi_from(edges, s), x1);
  }

  void case_delta2_nonadjacent() {
    const Vertex u = ctx_.u;
    const Vertex u1 = ctx_.nbrs[0], u2 = ctx_.nbrs[1];
    const auto& s1 = ctx_.u_sets[0];
    const auto& s2 = ctx_.u_sets[1];
    claim(2 * s1.with(s2).size() + 3 >= n_, "NC condition on (u1,u2): |U1 u U2| >= (n-3)/2");
    claim(!s2.empty(), "u2 has no W-neighbor");
    claim(s1.size() >= 2, "|U1| >= 2");
    const auto common = s1.intersect(s2);
    if (!common.empty()) {
      const Vertex v1 = common.front();
      const Vertex u1p = s1.without(v1).front();
      std::vector<Edge> edges{{u, u1}, {u1, v1}, {u1, u1p}, {u2, v1}};
      emit("5.1.2-common-nbr", cat("u=", u, " u1=", u1, " u2=", u2, " v1=", v1, " u1'=", u1p), edges);
      lemma213(quasi_from(edges, VertexSet{v1, u1p}), v1);
      return;
    }
    const auto path = find_xy_path(g_, s1, s2, ctx_.w_set);
    const std::size_t k = path.size();
    claim(k <= 5, cat("shortest (U1,U2)-path has k=", k, " > 5"));
    const Vertex v1 = path.front(), vk = path.back();
    const Vertex u2p = s1.without(v1).front();
    std::vector<Edge> edges{{u, u1}, {u1, u2p}, {u1, v1}, {u2, vk}};
    VertexSet used(std::vector<Vertex>(path.begin(), path.end()));
    used = used.with(u2p);
    std::string primes;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      edges.emplace_back(path[i], path[i + 1]);
      const auto cand = g_.neighbors_in(path[i], ctx_.w_set).without(used);
      require(!cand.empty(), cat("path vertex ", path[i], " has no private W-neighbor"));
      edges.emplace_back(path[i], cand.front());
      used = used.with(cand.front());
      primes += cat(" v", i + 1, "'=", cand.front());
    }
    std::string p;
    for (Vertex x : path) p += cat(p.empty() ? "" : "-", x);
    emit("5.1.2-path-k", cat("k=", k, " P=", p, " u2'=", u2p, primes), edges);
    lemma213(quasi_from(edges, used), vk);
  }

  // ---- G[W] disconnected ----------------------------------------------

  void case_disconnected() {
    const auto& comps = ctx_.w_components;
    check(4 * delta_ < n_ + 5, comps.size() <= 2, cat("G[W] has ", comps.size(), " components"));
    require(comps.size() == 2, "G[W] must have exactly two components");
    for (const auto& c : comps)
      claim(2 * c.size() + 2 * delta_ >= n_ + 1 && 2 * c.size() + 3 <= n_,
            cat("size bounds fail for a component of size ", c.size()));
    claim(delta_ >= 2, "delta=1 forces G[W] connected");
    if (delta_ == 2)
      case_521();
    else
      case_522();
  }

  std::size_t side_of(const VertexSet& s) const {
    const auto& comps = ctx_.w_components;
    if (s.empty()) return 2;
    const bool in0 = !s.intersect(comps[0]).empty(), in1 = !s.intersect(comps[1]).empty();
    if (in0 && in1) return 3;
    return in0 ? 0 : 1;
  }

  void case_521() {
    const Vertex u = ctx_.u;
    const auto& c = ctx_.w_components;
    for (const auto& comp : c)
      claim(2 * comp.size() + 3 == n_ && g_.is_clique(comp), "with delta=2 both W-components are (n-3)/2-cliques");
    const Vertex p = ctx_.nbr_set.members()[0], q = ctx_.nbr_set.members()[1];

    std::optional<Vertex> cross;
    for (Vertex x : {p, q})
      if (side_of(ctx_.U(x)) == 3) {
        cross = x;
        break;
      }
    if (cross) {
      const Vertex u1 = *cross, u2 = u1 == p ? q : p;
      const auto& s1 = ctx_.U(u1);
      const Vertex a1 = s1.intersect(c[0]).front(), a2 = s1.intersect(c[1]).front();
      const auto others = VertexSet(std::vector<Vertex>(g_.neighbors(u2).begin(), g_.neighbors(u2).end())).without(u);
      const Vertex x = others.front();
      std::vector<Edge> edges{{u, u1}, {u1, a1}, {u1, a2}, {x, u2}};
      if (x == u1 || x == a1 || x == a2) {
        append(edges, star(a1, c[0]));
        append(edges, star(a2, c[1]));
        emit("5.2.1-cross", cat("u1=", u1, " u1'=", a1, " u1''=", a2, " x=", x), edges);
        return;
      }
      const std::size_t k = c[0].contains(x) ? 0 : 1;
      const Vertex hub = k == 0 ? a1 : a2, other_hub = k == 0 ? a2 : a1;
      const auto cand = g_.neighbors_in(x, c[k]).without(hub);
      claim(!cand.empty(), "x has a neighbor in its clique besides the hub");
      const Vertex xp = cand.front();
      append(edges, star(hub, c[k].without(xp)));
      append(edges, star(other_hub, c[1 - k]));
      edges.emplace_back(x, xp);
      emit("5.2.1-cross", cat("u1=", u1, " u1'=", a1, " u1''=", a2, " x=", x, " x'=", xp), edges);
      return;
    }

    const auto sp = side_of(ctx_.U(p)), sq = side_of(ctx_.U(q));
    claim(sp < 2 && sq < 2 && sp != sq, "N(u) attaches to both W-components from different sides");
    claim(g_.adjacent(p, q), "u1u2 not in E would make G isomorphic to H1");
    claim(ctx_.U(p).size() >= 2 || ctx_.U(q).size() >= 2, "|U1|=|U2|=1 would make G isomorphic to H2");
    const Vertex u1 = ctx_.U(p).size() >= ctx_.U(q).size() ? p : q, u2 = u1 == p ? q : p;
    const auto& s1 = ctx_.U(u1);
    const auto& ca = c[side_of(s1)];
    const auto& cb = c[1 - side_of(s1)];
    const Vertex y1 = s1.members()[0], y2 = s1.members()[1], y3 = ctx_.U(u2).front();
    std::vector<Edge> edges{{u, u2}, {u1, u2}, {u1, y1}, {u1, y2}, {u2, y3}};
    append(edges, star(y1, ca.without(y2)));
    append(edges, star(y3, cb));
    emit("5.2.1-adj", cat("u1=", u1, " u2=", u2, " u2'=", y1, " u2''=", y2, " u3'=", y3), edges);
  }

  void case_522() {
    const Vertex u = ctx_.u;
    const auto& c = ctx_.w_components;
    const auto& by_id = ctx_.nbr_set.members();

    for (Vertex uj : by_id)
      if (side_of(ctx_.U(uj)) == 3) {
        emit("5.2.2-case1", cat("u_j=", uj, " meets both W-components"), star(u, ctx_.nbr_set));
        lemma214(c[0], uj);
        lemma214(c[1], uj);
        return;
      }

    std::vector<Vertex> q[2];
    std::optional<Vertex> big[2];
    for (Vertex uj : by_id) {
      const auto s = side_of(ctx_.U(uj));
      if (s > 1) continue;
      q[s].push_back(uj);
      if (!big[s] && ctx_.U(uj).size() >= 2) big[s] = uj;
    }
    claim(!q[0].empty() && !q[1].empty(), "both W-components attach to N(u)");

    if (big[0] && big[1]) {
      emit("5.2.2-case2-ge2", cat("u1=", *big[0], " u2=", *big[1]), star(u, ctx_.nbr_set));
      for (int i = 0; i < 2; ++i) {
        auto t = lemma214(c[i], *big[i]);
        claim(t.degree(*big[i]) >= 2, "component tree has d(u_i) >= 2");
      }
      return;
    }

    if (!big[0] && !big[1]) {
      check(2 * delta_ + 3 < n_, g_.is_clique(ctx_.nbr_set), "N(u) is a clique");
      const Vertex u1 = q[0].front(), u2 = q[1].front();
      const Vertex ud = ctx_.nbr_set.without(VertexSet{u1, u2}).front();
      auto edges = star(u1, ctx_.closed.without(VertexSet{u1, ud}));
      edges.emplace_back(u2, ud);
      emit("5.2.2-case2-eq1", cat("u1=", u1, " u2=", u2, " u_delta=", ud), edges);
      lemma214(c[0], u1);
      lemma214(c[1], u2);
      return;
    }

    const std::size_t a = big[0] ? 0 : 1, b = 1 - a;
    const Vertex u1 = *big[a], u2 = q[b].front();
    const auto& ca = c[a];
    const auto& cb = c[b];
    claim(ctx_.U(u2).size() == 1, "small side members have exactly one W-neighbor");

    if (delta_ >= 4) {
      const auto cand = g_.neighbors_in(u2, ctx_.nbr_set);
      claim(!cand.empty(), "u2 has a neighbor in N(u)");
      const Vertex uj = cand.front();
      auto edges = star(u, ctx_.nbr_set.without(uj));
      edges.emplace_back(uj, u2);
      emit("5.2.2-case2-mixed", cat("u1=", u1, " u2=", u2, " u_j=", uj), edges);
      auto t = lemma214(ca, u1);
      claim(t.degree(u1) >= 2, "component tree has d(u1) >= 2");
      lemma214(cb, u2);
      return;
    }

    for (const auto& comp : c) {
      claim(g_.is_clique(comp), "with delta=3 both W-components are cliques");
      claim(2 * comp.size() + 5 >= n_, "with delta=3 each W-component has at least (n-5)/2 vertices");
    }
    const Vertex u3 = ctx_.nbr_set.without(VertexSet{u1, u2}).front();
    const auto& s1 = ctx_.U(u1);
    const Vertex yp = ctx_.U(u2).front();

    if (g_.adjacent(u1, u2)) {
      const Vertex y1 = s1.members()[0], y2 = s1.members()[1];
      const VertexSet special{u1, u2, y1, y2, yp};
      const auto ny = VertexSet(std::vector<Vertex>(g_.neighbors(u3).begin(), g_.neighbors(u3).end())).without(u);
      claim(!ny.empty(), "u3 has a neighbor besides u");
      const auto hit = ny.intersect(special);
      std::vector<Edge> edges{{u, u2}, {u1, u2}, {u1, y1}, {u1, y2}, {u2, yp}};
      append(edges, star(yp, cb));
      if (!hit.empty()) {
        const Vertex y = hit.front();
        const Vertex yi = y == y2 ? y2 : y1, yo = yi == y1 ? y2 : y1;
        append(edges, star(yi, ca.without(yo)));
        edges.emplace_back(u3, y);
        emit("5.2.2-case2-d3-adj-a", cat("u1=", u1, " u2=", u2, " u3=", u3, " y=", y, " y_i=", yi), edges);
        return;
      }
      const Vertex y = ny.front();
      claim(ca.contains(y), "u3's neighbors lie in the component of U1");
      const auto cand = g_.neighbors_in(y1, ca).without(VertexSet{y, y2});
      claim(!cand.empty(), "y1 has a clique neighbor outside {y, y2}");
      const Vertex y3 = cand.front();
      append(edges, star(y, ca.without(VertexSet{y2, y3})));
      edges.emplace_back(u3, y);
      edges.emplace_back(y1, y3);
      emit("5.2.2-case2-d3-adj-b", cat("u1=", u1, " u2=", u2, " u3=", u3, " y=", y, " y3=", y3), edges);
      return;
    }

    claim(g_.adjacent(u2, u3), "u2u3 in E (otherwise d(u2) < 3)");
    claim(2 * ca.size() + 5 == n_, "|C1| = (n-5)/2");
    const auto c1p = ca.with(u1);
    claim(g_.is_clique(c1p), "C1 + u1 is a clique");
    const auto na = g_.neighbors_in(u3, c1p), nb = g_.neighbors_in(u3, cb);
    if (na.size() >= 2) {
      const Vertex x1 = na.members()[0], x2 = na.members()[1];
      std::vector<Edge> edges{{u, u2}, {u2, u3}, {u2, yp}, {u3, x1}, {u3, x2}};
      append(edges, star(x1, c1p.without(x2)));
      append(edges, star(yp, cb));
      emit("5.2.2-case2-d3-nonadj-a", cat("u1=", u1, " u2=", u2, " u3=", u3, " x1=", x1, " x2=", x2, " x3=", yp),
           edges);
      return;
    }
    claim(na.size() + nb.size() >= 2, "u3 has one neighbor in C1' u C2: G would be isomorphic to H3");
    claim(na == VertexSet{u1} && nb.size() == 1, "u3's outside neighbors are u1 and one z in C2");
    const Vertex z = nb.front();
    std::vector<Edge> edges{{u, u1}, {u1, u3}, {u3, u2}, {u3, z}};
    append(edges, star(u1, ca));
    append(edges, star(z, cb));
    emit("5.2.2-case2-d3-nonadj-b", cat("u1=", u1, " u2=", u2, " u3=", u3, " z=", z), edges);
  }

  const Graph& g_;
  const DecompositionContext& ctx_;
  std::uint64_t budget_;
  std::size_t n_;
  std::size_t delta_;
};

}  // namespace detail

// Extends a 1-quasi-HIT T(v) with V(T) = N[u] + S (S a subset of W, v in S)
// to a HIST of g. The extension step is appended to `trace` when given.
inline SpanningTree lemma213_extend(const Graph& g, const DecompositionContext& ctx, const Subtree& quasi, Vertex v,
                                    ConstructionTrace* trace = nullptr,
                                    std::uint64_t budget = kDefaultSearchBudget) {
  detail::CaseMachine m(g, ctx, budget);
  m.lemma213(quasi, v);
  std::vector<Edge> edges = quasi.edges;
  detail::append(edges, m.trace.steps.back().edges_added);
  SpanningTree t(g.order(), std::move(edges));
  auto c = check_hist(g, t);
  if (!c) throw HypothesisViolation("lemma213_extend: result is not a HIST (" + c.reason + ")");
  if (trace) trace->steps.push_back(m.trace.steps.back());
  return t;
}

struct Lemma214Result {
  Subtree tree;
  TraceStep step;
};

inline Lemma214Result lemma214_component_tree(const Graph& g, const VertexSet& component, Vertex u_l,
                                              std::uint64_t budget = kDefaultSearchBudget) {
  if (component.contains(u_l)) throw DomainError("lemma214_component_tree: u_l lies in the component");
  DecompositionContext ctx;
  ctx.n = g.order();
  ctx.delta = g.min_degree();
  detail::CaseMachine m(g, ctx, budget);
  auto t = m.lemma214(component, u_l);
  return {std::move(t), m.trace.steps.back()};
}

enum class ConstructionStatus { Hist, NoHist, Fallback };

inline const char* to_string(ConstructionStatus s) {
  switch (s) {
    case ConstructionStatus::Hist: return "Hist";
    case ConstructionStatus::NoHist: return "NoHist";
    case ConstructionStatus::Fallback: return "Fallback";
  }
  return "?";
}

struct ConstructionResult {
  ConstructionStatus status = ConstructionStatus::Fallback;
  std::optional<SpanningTree> tree;
  ConstructionTrace trace;
  ObstructionReport obstruction;
  std::string reason;  // Fallback cause, or the NoHist argument when no certificate kind applies
};

struct ConstructOptions {
  std::uint64_t budget = kDefaultSearchBudget;
};

inline constexpr std::size_t kTheoremOrder = 270;

// Complete graphs, then obstruction certificates, then the case analysis
// when NC(G) >= (n-1)/2. See the decisions in README for the regimes.
inline ConstructionResult construct_theorem15(const Graph& g, const ConstructOptions& opt = {}) {
  if (g.order() == 0) throw DomainError("construct_theorem15: empty graph");
  require_connected(g, "construct_theorem15");
  const auto n = g.order();
  ConstructionResult r;

  if (g.is_complete()) {
    if (n == 3) {
      r.status = ConstructionStatus::NoHist;
      r.reason = "K3: every spanning tree is a path with a degree-2 vertex";
      return r;
    }
    auto edges = detail::star(0, VertexSet::range(n));
    r.trace.steps.push_back({"complete-star", detail::cat("K", n, ": star at 0"), edges});
    r.tree = SpanningTree(n, std::move(edges));
    r.status = ConstructionStatus::Hist;
    return r;
  }

  r.obstruction = match_family(g);
  if (r.obstruction.kind != ObstructionKind::None) {
    r.status = ConstructionStatus::NoHist;
    return r;
  }

  const auto report = condition_report(g);
  if (!nc_condition_holds(n, report.nc)) {
    r.reason = detail::cat("NC(G)=", *report.nc, " < (n-1)/2");
    return r;
  }
  const bool dense = report.meets_thm12;
  const bool strict = n >= kTheoremOrder && !dense;

  auto substitute = [&](const std::string& why) {
    std::optional<SpanningTree> t = dense_hist(g);
    std::string how = "greedy star expansion";
    if (!t) {
      auto s = exact_search(g, opt.budget);
      if (s.status == SearchStatus::Found) {
        t = s.tree;
        how = detail::cat("exact search, ", s.nodes, " nodes");
      }
    }
    if (!t) {
      r.reason = why + "; dense-regime substitute failed";
      return;
    }
    r.trace.steps.push_back({"dense-substitute", detail::cat("delta^2 >= 16n; ", how, " (case analysis: ", why, ")"),
                             t->edges});
    r.tree = std::move(t);
    r.status = ConstructionStatus::Hist;
  };

  // Below the theorem order the claims lose their footing too.
  const bool theorem = n >= kTheoremOrder;
  std::optional<DecompositionContext> ctx;
  try {
    ctx = build_context(g);
  } catch (const HypothesisViolation& e) {
    if (theorem) throw CaseInvariantError(e.what(), {});
    r.reason = e.what();
    return r;
  }
  detail::CaseMachine m(g, *ctx, opt.budget);
  try {
    m.run();
    r.tree = m.finish();
    r.trace = std::move(m.trace);
    r.status = ConstructionStatus::Hist;
    return r;
  } catch (const SubstituteFailure& e) {
    if (dense) {
      substitute(e.what());
    } else {
      r.trace = std::move(m.trace);
      r.reason = e.what();
    }
  } catch (const HypothesisViolation& e) {
    if (strict) throw CaseInvariantError(e.what(), m.trace);
    if (dense) {
      substitute(e.what());
    } else {
      r.trace = std::move(m.trace);
      r.reason = e.what();
    }
  } catch (const CaseInvariantError& e) {
    if (theorem) throw;
    if (dense) {
      substitute(e.what());
    } else {
      r.trace = e.trace();
      r.reason = e.what();
    }
  }
  if (r.tree && !verify_hist(g, *r.tree)) throw CaseInvariantError("substitute tree failed verification", r.trace);
  return r;
}

}  // namespace hist
