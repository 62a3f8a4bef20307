#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace hist {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : members_(init) { normalize(); }
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) { normalize(); }

  static VertexSet range(std::size_t n) {
    VertexSet s;
    s.members_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<Vertex>(i);
    return s;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  Vertex front() const { return members_.front(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  VertexSet without(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }
  VertexSet with(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }
  VertexSet intersect(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }
  VertexSet without(Vertex v) const { return without(VertexSet{v}); }
  VertexSet with(Vertex v) const { return with(VertexSet{v}); }

  bool operator==(const VertexSet&) const = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate and reversed pairs collapse;
  // self-loops are rejected, as are endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.assign(n, {});
    g.rows_.assign(n, Bitset(n));
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n)
        throw RangeError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") out of range for n=" + std::to_string(n));
      if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
      if (g.rows_[e.u].test(e.v)) continue;
      g.rows_[e.u].set(e.v);
      g.rows_[e.v].set(e.u);
      ++g.m_;
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& list = g.adj_[v];
      list.reserve(g.rows_[v].count());
      g.rows_[v].for_each([&](std::size_t w) { list.push_back(static_cast<Vertex>(w)); });
    }
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const Bitset& row(Vertex v) const { return rows_[v]; }

  std::size_t min_degree() const {
    std::size_t d = adj_.empty() ? 0 : adj_[0].size();
    for (const auto& l : adj_) d = std::min(d, l.size());
    return d;
  }

  bool is_complete() const {
    const auto n = order();
    return m_ == n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex v = 0; v < order(); ++v)
      for (Vertex w : adj_[v])
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  // N_S(v) for a vertex set S.
  VertexSet neighbors_in(Vertex v, const VertexSet& s) const {
    std::vector<Vertex> out;
    for (Vertex w : s)
      if (adjacent(v, w)) out.push_back(w);
    return VertexSet(std::move(out));
  }
  std::size_t degree_in(Vertex v, const VertexSet& s) const {
    std::size_t d = 0;
    for (Vertex w : s)
      if (adjacent(v, w)) ++d;
    return d;
  }

  bool is_clique(const VertexSet& s) const {
    for (auto a = s.begin(); a != s.end(); ++a)
      for (auto b = std::next(a); b != s.end(); ++b)
        if (!adjacent(*a, *b)) return false;
    return true;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
  std::size_t m_ = 0;
};

// Induced subgraph with the id map back to the host graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // local id -> host id (ascending)
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> local(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < s.size(); ++i) local[s.members()[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex a : s)
    for (Vertex b : g.neighbors(a))
      if (a < b && local[b] != static_cast<Vertex>(-1)) edges.emplace_back(local[a], local[b]);
  return {Graph::from_edges(s.size(), edges), s.members()};
}

// Edges with exactly one endpoint in `side`, each reported as (inside, outside).
struct EdgeCut {
  VertexSet side;
  std::vector<std::pair<Vertex, Vertex>> boundary;
};

// Connected components of the subgraph induced by `restrict` (all of V when
// absent). Each component is sorted; the list is ordered by minimum vertex.
inline std::vector<VertexSet> components(const Graph& g,
                                         const std::optional<VertexSet>& restrict = std::nullopt) {
  const auto n = g.order();
  std::vector<char> allowed(n, restrict ? 0 : 1);
  if (restrict) {
    for (Vertex v : *restrict) {
      if (v >= n) throw RangeError("vertex " + std::to_string(v) + " outside graph");
      allowed[v] = 1;
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (!allowed[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

inline void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw DomainError(std::string(op) + ": graph is disconnected");
}

inline EdgeCut edge_cut(const Graph& g, const VertexSet& side) {
  if (side.empty() || side.size() >= g.order())
    throw DomainError("edge_cut: side must be a proper nonempty subset");
  if (side.members().back() >= g.order()) throw RangeError("edge_cut: vertex outside graph");
  EdgeCut cut{side, {}};
  for (Vertex a : side)
    for (Vertex b : g.neighbors(a))
      if (!side.contains(b)) cut.boundary.emplace_back(a, b);
  std::sort(cut.boundary.begin(), cut.boundary.end());
  return cut;
}

// Articulation points (iterative Tarjan lowpoint).
inline VertexSet cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  const auto n = g.order();
  std::vector<Vertex> out;
  if (n < 3) return {};
  constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0), parent(n, kUnseen);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<char> is_cut(n, 0);
  std::uint32_t timer = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  std::size_t root_children = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next_edge[v] < nbrs.size()) {
      Vertex w = nbrs[next_edge[v]++];
      if (disc[w] == kUnseen) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (parent[v] != kUnseen) {
        Vertex p = parent[v];
        low[p] = std::min(low[p], low[v]);
        if (parent[p] != kUnseen && low[v] >= disc[p]) is_cut[p] = 1;
      }
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

// Bridges of g restricted to the edges flagged in `alive` (indexed like
// `edges`). Returns a flag per edge.
inline std::vector<char> bridge_flags(std::size_t n, std::span<const Edge> edges,
                                      std::span<const char> alive) {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) {
      inc[edges[i].u].emplace_back(edges[i].v, i);
      inc[edges[i].v].emplace_back(edges[i].u, i);
    }
  constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<std::size_t> via(n, static_cast<std::size_t>(-1)), next(n, 0);
  std::vector<char> bridge(edges.size(), 0);
  std::uint32_t timer = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      if (next[v] < inc[v].size()) {
        auto [w, id] = inc[v][next[v]++];
        if (id == via[v]) continue;
        if (disc[w] == kUnseen) {
          via[w] = id;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (via[v] != static_cast<std::size_t>(-1)) {
          const Edge& e = edges[via[v]];
          Vertex p = e.u == v ? e.v : e.u;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridge[via[v]] = 1;
        }
      }
    }
  }
  return bridge;
}

// Induced path z-x-y with x,y in x_set: zx, xy in E and zy not in E. Returns
// the lexicographically least valid (x, y).
inline std::pair<Vertex, Vertex> find_induced_p3(const Graph& g, const VertexSet& x_set, Vertex z) {
  if (x_set.contains(z)) throw DomainError("find_induced_p3: z must lie outside x_set");
  const auto nz = g.degree_in(z, x_set);
  if (nz < 1) throw DomainError("find_induced_p3: |N(z) ∩ X| >= 1 fails");
  if (nz >= x_set.size()) throw DomainError("find_induced_p3: |N(z) ∩ X| < |X| fails");
  if (components(g, x_set).size() != 1)
    throw DomainError("find_induced_p3: induced subgraph on x_set is not connected");
  for (Vertex x : x_set) {
    if (!g.adjacent(z, x)) continue;
    for (Vertex y : x_set)
      if (y != x && g.adjacent(x, y) && !g.adjacent(z, y)) return {x, y};
  }
  throw DomainError("find_induced_p3: no induced path found");  // unreachable under the preconditions
}

// Shortest (X,Y)-path: starts in x_set, ends in y_set, internal vertices in
// neither. Optionally confined to the vertices of `within`. BFS from the
// sources in increasing id order fixes ties.
inline std::vector<Vertex> find_xy_path(const Graph& g, const VertexSet& x_set, const VertexSet& y_set,
                                        const std::optional<VertexSet>& within = std::nullopt) {
  if (x_set.empty() || y_set.empty()) throw DomainError("find_xy_path: sets must be nonempty");
  auto common = x_set.intersect(y_set);
  if (!common.empty()) return {common.front()};
  const auto n = g.order();
  std::vector<char> allowed(n, within ? 0 : 1);
  if (within)
    for (Vertex v : *within) allowed[v] = 1;
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> pred(n, kNone);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue;
  for (Vertex s : x_set) {
    seen[s] = 1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w] || !allowed[w]) continue;
      if (y_set.contains(w)) {
        std::vector<Vertex> path{w};
        for (Vertex c = v; c != kNone; c = pred[c]) path.push_back(c);
        std::reverse(path.begin(), path.end());
        return path;
      }
      seen[w] = 1;
      pred[w] = v;
      queue.push_back(w);
    }
  }
  throw DomainError("find_xy_path: no (X,Y)-path exists");
}

// Cheap sufficient test for connectivity: 2*delta > n-2.
inline bool min_degree_connectivity_guard(const Graph& g) {
  const auto n = static_cast<long long>(g.order());
  return 2 * static_cast<long long>(g.min_degree()) > n - 2;
}

}  // namespace hist
