#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace hist {

enum class ObstructionKind { None, CutVertexDeg2, PendantAtDeg2, TriangleSplit, H1, H2, H3 };

inline const char* to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::None: return "None";
    case ObstructionKind::CutVertexDeg2: return "CutVertexDeg2";
    case ObstructionKind::PendantAtDeg2: return "PendantAtDeg2";
    case ObstructionKind::TriangleSplit: return "TriangleSplit";
    case ObstructionKind::H1: return "H1";
    case ObstructionKind::H2: return "H2";
    case ObstructionKind::H3: return "H3";
  }
  return "?";
}

// A certificate that the graph has no HIST. `witness` holds the certifying
// vertices: the cut vertex; the pendant and its neighbor; the triangle; or
// the family skeleton (v and its two neighbors for H1, the triangle plus its
// outside attachments for H2/H3).
struct ObstructionReport {
  ObstructionKind kind = ObstructionKind::None;
  VertexSet witness;
};

inline std::optional<Vertex> detect_cut_vertex_deg2(const Graph& g) {
  if (g.order() < 2) throw DomainError("detect_cut_vertex_deg2: need n >= 2");
  for (Vertex v : cut_vertices(g))
    if (g.degree(v) == 2) return v;
  return std::nullopt;
}

inline std::optional<std::pair<Vertex, Vertex>> detect_pendant_at_deg2(const Graph& g) {
  require_connected(g, "detect_pendant_at_deg2");
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 2) return std::pair{v, g.neighbors(v)[0]};
  return std::nullopt;
}

namespace detail {

// Triangles {a<b<c} whose three vertices all have degree <= 3, in
// lexicographic order.
inline std::vector<std::array<Vertex, 3>> low_degree_triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) > 3) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b <= a || g.degree(b) > 3) continue;
      for (Vertex c : g.neighbors(a))
        if (c > b && g.degree(c) <= 3 && g.adjacent(b, c)) out.push_back({a, b, c});
    }
  }
  return out;
}

inline std::size_t component_index(const std::vector<VertexSet>& comps, Vertex v) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].contains(v)) return i;
  return comps.size();
}

inline std::optional<ObstructionReport> match_h1(const Graph& g) {
  const auto n = g.order();
  if (n < 5 || n % 2 == 0) return std::nullopt;
  const auto k = (n - 1) / 2;
  if (g.size() != k * (k - 1) + 2) return std::nullopt;
  const auto all = VertexSet::range(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) continue;
    auto comps = components(g, all.without(v));
    if (comps.size() != 2 || comps[0].size() != k || comps[1].size() != k) continue;
    if (!g.is_clique(comps[0]) || !g.is_clique(comps[1])) continue;
    const Vertex a = g.neighbors(v)[0], b = g.neighbors(v)[1];
    if (component_index(comps, a) == component_index(comps, b)) continue;
    return ObstructionReport{ObstructionKind::H1, VertexSet{v, a, b}};
  }
  return std::nullopt;
}

inline std::optional<ObstructionReport> match_h2_h3(const Graph& g) {
  const auto n = g.order();
  if (n < 5 || n % 2 == 0) return std::nullopt;
  const auto k = (n - 3) / 2;
  const auto all = VertexSet::range(n);
  for (const auto& tri : low_degree_triangles(g)) {
    VertexSet s{tri[0], tri[1], tri[2]};
    auto comps = components(g, all.without(s));
    if (comps.size() != 2 || comps[0].size() != k || comps[1].size() != k) continue;
    if (!g.is_clique(comps[0]) || !g.is_clique(comps[1])) continue;
    // Outside attachment of each triangle vertex (at most one, degree <= 3).
    std::array<std::optional<Vertex>, 3> out;
    for (int i = 0; i < 3; ++i)
      for (Vertex w : g.neighbors(tri[i]))
        if (!s.contains(w)) out[i] = w;
    int attached = 0;
    std::array<std::size_t, 3> side{};
    for (int i = 0; i < 3; ++i)
      if (out[i]) {
        ++attached;
        side[i] = component_index(comps, *out[i]);
      }
    std::vector<Vertex> witness(tri.begin(), tri.end());
    for (const auto& o : out)
      if (o) witness.push_back(*o);
    if (attached == 2) {
      std::vector<std::size_t> sides;
      for (int i = 0; i < 3; ++i)
        if (out[i]) sides.push_back(side[i]);
      if (sides[0] != sides[1]) return ObstructionReport{ObstructionKind::H2, VertexSet(witness)};
    } else if (attached == 3) {
      const bool split = !(side[0] == side[1] && side[1] == side[2]);
      if (split) return ObstructionReport{ObstructionKind::H3, VertexSet(witness)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// A triangle S with every degree <= 3 such that G - S has exactly two
// components. Scanned in lexicographic order.
inline std::optional<VertexSet> detect_triangle_split(const Graph& g) {
  require_connected(g, "detect_triangle_split");
  const auto all = VertexSet::range(g.order());
  for (const auto& tri : detail::low_degree_triangles(g)) {
    VertexSet s{tri[0], tri[1], tri[2]};
    if (components(g, all.without(s)).size() == 2) return s;
  }
  return std::nullopt;
}

// Families first, then the generic certificates in fixed order.
inline ObstructionReport match_family(const Graph& g) {
  require_connected(g, "match_family");
  if (auto r = detail::match_h1(g)) return *r;
  if (auto r = detail::match_h2_h3(g)) return *r;
  if (g.order() >= 2)
    if (auto v = detect_cut_vertex_deg2(g)) return {ObstructionKind::CutVertexDeg2, VertexSet{*v}};
  if (auto p = detect_pendant_at_deg2(g)) return {ObstructionKind::PendantAtDeg2, VertexSet{p->first, p->second}};
  if (auto t = detect_triangle_split(g)) return {ObstructionKind::TriangleSplit, *t};
  return {};
}

enum class Family { H1, H2, H3 };

// Canonical labelings:
//   H1: v = 0, cliques {1..k} and {k+1..2k} (k = (n-1)/2), v ~ 1 and v ~ k+1.
//   H2: triangle v1=0, v2=1, v3=2; cliques G1 = {3..k+2}, G2 = {k+3..2k+2}
//       (k = (n-3)/2); v1 ~ u1 = 3, v2 ~ u2 = k+3.
//   H3: H2 plus v3 ~ u3, where u3 = k+4, or u3 = u2 when `coincide`.
inline Graph generate_H(Family which, std::size_t n, bool coincide = false) {
  if (n % 2 == 0) throw DomainError("generate_H: n must be odd");
  if (which == Family::H1 ? n < 5 : n < 9)
    throw DomainError("generate_H: n too small (need n >= 5 for H1, n >= 9 for H2/H3)");
  std::vector<Edge> edges;
  auto clique = [&](Vertex first, std::size_t size) {
    for (Vertex a = first; a < first + size; ++a)
      for (Vertex b = a + 1; b < first + size; ++b) edges.emplace_back(a, b);
  };
  if (which == Family::H1) {
    const auto k = static_cast<Vertex>((n - 1) / 2);
    clique(1, k);
    clique(k + 1, k);
    edges.emplace_back(0, 1);
    edges.emplace_back(0, k + 1);
  } else {
    const auto k = static_cast<Vertex>((n - 3) / 2);
    clique(0, 3);
    clique(3, k);
    clique(k + 3, k);
    edges.emplace_back(0, 3);
    edges.emplace_back(1, k + 3);
    if (which == Family::H3) edges.emplace_back(2, coincide ? k + 3 : k + 4);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace hist
