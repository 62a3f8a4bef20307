#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hist {

struct SpanningTree {
  std::size_t host_n = 0;
  std::vector<Edge> edges;  // sorted

  SpanningTree() = default;
  SpanningTree(std::size_t n, std::vector<Edge> e) : host_n(n), edges(std::move(e)) {
    std::sort(edges.begin(), edges.end());
  }

  bool operator==(const SpanningTree&) const = default;
};

// A tree on a subset of the host vertices. `vertices` is kept explicitly so
// that a single-vertex subtree (no edges) is representable.
struct Subtree {
  VertexSet vertices;
  std::vector<Edge> edges;  // sorted

  Subtree() = default;
  Subtree(VertexSet vs, std::vector<Edge> e) : vertices(std::move(vs)), edges(std::move(e)) {
    std::sort(edges.begin(), edges.end());
  }
  static Subtree from_edges(std::vector<Edge> e) {
    std::vector<Vertex> vs;
    for (const auto& x : e) {
      vs.push_back(x.u);
      vs.push_back(x.v);
    }
    return Subtree(VertexSet(std::move(vs)), std::move(e));
  }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (const auto& e : edges) d += (e.u == v) + (e.v == v);
    return d;
  }
};

enum class QuasiKind { HIT, Quasi1, Quasi2, Neither };

inline const char* to_string(QuasiKind k) {
  switch (k) {
    case QuasiKind::HIT: return "HIT";
    case QuasiKind::Quasi1: return "Quasi1";
    case QuasiKind::Quasi2: return "Quasi2";
    case QuasiKind::Neither: return "Neither";
  }
  return "?";
}

struct QuasiClass {
  QuasiKind kind = QuasiKind::Neither;
  VertexSet deg2_vertices;
};

// Outcome of a structural check; `reason` is empty on success.
struct TreeCheck {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

namespace detail {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

inline std::string join_ids(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

// Checks that `edges` form a tree spanning exactly `vertices` inside g (when
// given) and that no vertex has degree 2.
inline TreeCheck check_tree(const Graph* g, std::size_t host_n, const VertexSet& vertices,
                            const std::vector<Edge>& edges, bool forbid_deg2) {
  std::vector<Vertex> local(host_n, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices.members()[i] >= host_n) return {false, "vertex outside host graph"};
    local[vertices.members()[i]] = static_cast<Vertex>(i);
  }
  for (const auto& e : edges) {
    if (e.u >= host_n || e.v >= host_n || (g && !g->adjacent(e.u, e.v))) return {false, "edge not in graph"};
    if (local[e.u] == static_cast<Vertex>(-1) || local[e.v] == static_cast<Vertex>(-1))
      return {false, "edge leaves the vertex set"};
  }
  if (vertices.empty()) return {false, "empty vertex set"};
  if (edges.size() != vertices.size() - 1)
    return {false, "wrong edge count: expected " + std::to_string(vertices.size() - 1) + ", found " +
                       std::to_string(edges.size())};
  Dsu dsu(vertices.size());
  for (const auto& e : edges)
    if (!dsu.unite(local[e.u], local[e.v])) return {false, "cycle"};
  // n-1 edges and acyclic implies connected; kept as an explicit check.
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (dsu.find(i) != dsu.find(0)) return {false, "disconnected"};
  if (forbid_deg2) {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& e : edges) {
      ++deg[local[e.u]];
      ++deg[local[e.v]];
    }
    std::vector<Vertex> bad;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (deg[i] == 2) bad.push_back(vertices.members()[i]);
    if (!bad.empty()) return {false, "degree-2 vertices: " + join_ids(VertexSet(bad))};
  }
  return {};
}

}  // namespace detail

// Full check with a failure reason: "edge not in graph", "wrong edge count",
// "cycle", "disconnected", or "degree-2 vertices: a,b,...".
inline TreeCheck check_hist(const Graph& g, const SpanningTree& t) {
  if (t.host_n != g.order())
    return {false, "host order mismatch: tree has " + std::to_string(t.host_n) + ", graph has " +
                       std::to_string(g.order())};
  if (g.order() == 0) return {false, "empty graph"};
  return detail::check_tree(&g, g.order(), VertexSet::range(g.order()), t.edges, true);
}

inline bool verify_hist(const Graph& g, const SpanningTree& t) { return check_hist(g, t).ok; }

// HIST of the subgraph of g induced by t.vertices.
inline TreeCheck check_subtree_hist(const Graph& g, const Subtree& t) {
  return detail::check_tree(&g, g.order(), t.vertices, t.edges, true);
}

inline QuasiClass classify_quasi(const Subtree& t) {
  std::size_t host = t.vertices.empty() ? 0 : t.vertices.members().back() + 1;
  for (const auto& e : t.edges) host = std::max<std::size_t>(host, e.v + 1);
  auto check = detail::check_tree(nullptr, host, t.vertices, t.edges, false);
  if (!check) throw DomainError("classify_quasi: not a tree (" + check.reason + ")");
  std::vector<Vertex> deg2;
  for (Vertex v : t.vertices)
    if (t.degree(v) == 2) deg2.push_back(v);
  QuasiClass q;
  q.deg2_vertices = VertexSet(std::move(deg2));
  switch (q.deg2_vertices.size()) {
    case 0: q.kind = QuasiKind::HIT; break;
    case 1: q.kind = QuasiKind::Quasi1; break;
    case 2: q.kind = QuasiKind::Quasi2; break;
    default: q.kind = QuasiKind::Neither;
  }
  return q;
}

inline QuasiClass classify_quasi(const std::vector<Edge>& edges) {
  return classify_quasi(Subtree::from_edges(edges));
}

inline QuasiClass classify_quasi(const SpanningTree& t) {
  return classify_quasi(Subtree(VertexSet::range(t.host_n), t.edges));
}

namespace detail {

inline void require_attachment(const Graph& g, const Subtree& t, Vertex center, const Subtree& s,
                               const char* op, const char* name) {
  if (auto c = check_subtree_hist(g, s); !c)
    throw DomainError(std::string(op) + ": " + name + " is not a HIST of the induced subgraph (" + c.reason + ")");
  if (t.vertices.intersect(s.vertices) != VertexSet{center})
    throw DomainError(std::string(op) + ": " + name + " must meet the tree exactly in its center");
  if (s.degree(center) < 1) throw DomainError(std::string(op) + ": center has no edge in " + name);
}

inline Subtree merge(const Subtree& a, const Subtree& b) {
  std::vector<Edge> e = a.edges;
  e.insert(e.end(), b.edges.begin(), b.edges.end());
  return Subtree(a.vertices.with(b.vertices), std::move(e));
}

}  // namespace detail

// A 1-quasi-HIT centered at v plus a HIST of G[S] with S meeting it only in v.
inline Subtree extend_quasi1(const Graph& g, const Subtree& t, Vertex v, const Subtree& s_tree) {
  for (const auto& e : t.edges)
    if (!g.adjacent(e.u, e.v)) throw DomainError("extend_quasi1: tree edge not in graph");
  auto q = classify_quasi(t);
  if (q.kind != QuasiKind::Quasi1 || q.deg2_vertices != VertexSet{v})
    throw DomainError("extend_quasi1: input is not a 1-quasi-HIT centered at " + std::to_string(v));
  detail::require_attachment(g, t, v, s_tree, "extend_quasi1", "s_tree");
  auto out = detail::merge(t, s_tree);
  if (classify_quasi(out).kind != QuasiKind::HIT) throw DomainError("extend_quasi1: result is not a HIT");
  return out;
}

// A 2-quasi-HIT with centers v, w plus HISTs of G[S] at v and G[U] at w.
inline Subtree extend_quasi2(const Graph& g, const Subtree& t, Vertex v, Vertex w, const Subtree& s_tree,
                             const Subtree& u_tree) {
  for (const auto& e : t.edges)
    if (!g.adjacent(e.u, e.v)) throw DomainError("extend_quasi2: tree edge not in graph");
  auto q = classify_quasi(t);
  if (q.kind != QuasiKind::Quasi2 || q.deg2_vertices != VertexSet{v, w})
    throw DomainError("extend_quasi2: input is not a 2-quasi-HIT centered at " + std::to_string(v) + "," +
                      std::to_string(w));
  if (!s_tree.vertices.intersect(u_tree.vertices).empty())
    throw DomainError("extend_quasi2: S and U must be disjoint");
  detail::require_attachment(g, t, v, s_tree, "extend_quasi2", "s_tree");
  detail::require_attachment(g, t, w, u_tree, "extend_quasi2", "u_tree");
  auto out = detail::merge(detail::merge(t, s_tree), u_tree);
  if (classify_quasi(out).kind != QuasiKind::HIT) throw DomainError("extend_quasi2: result is not a HIT");
  return out;
}

}  // namespace hist
