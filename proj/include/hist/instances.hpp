#pragma once

// Seeded instance generators for the construction tests and sweeps. Each
// theorem-scale family plants the structure that drives one branch of the
// case analysis, relabels at random with the low-degree vertex kept at 0, and
// is rejection-checked (connected, NC >= (n-1)/2, no obstruction).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conditions.hpp"
#include "graph.hpp"
#include "obstructions.hpp"
#include "random.hpp"

namespace hist {

struct Instance {
  std::string kind;
  std::string expect;  // case id expected somewhere in the trace; empty when not fixed
  Graph graph;
};

namespace detail {

class Builder {
 public:
  explicit Builder(std::size_t n) : n_(n) {}

  void edge(Vertex a, Vertex b) {
    if (a != b) edges_.emplace_back(a, b);
  }
  void clique(const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) edge(s[i], s[j]);
  }
  void biclique(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
      for (Vertex y : b) edge(x, y);
  }
  void star(Vertex c, const std::vector<Vertex>& s) {
    for (Vertex y : s) edge(c, y);
  }
  void random(const std::vector<Vertex>& s, double p, SplitMix64& rng) {
    for (std::size_t j = 1; j < s.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (rng.bernoulli(p)) edge(s[i], s[j]);
  }
  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

inline std::vector<Vertex> iota_range(Vertex first, std::size_t count) {
  std::vector<Vertex> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = first + static_cast<Vertex>(i);
  return v;
}

// `count` distinct members of `from`, chosen uniformly.
inline std::vector<Vertex> sample(std::vector<Vertex> from, std::size_t count, SplitMix64& rng) {
  rng.shuffle(from);
  from.resize(std::min(count, from.size()));
  std::sort(from.begin(), from.end());
  return from;
}

inline std::size_t uniform_in(std::size_t lo, std::size_t hi, SplitMix64& rng) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

// Random relabeling fixing 0. When `least` is given, that vertex receives the
// smallest label among `group`; the vertices in `ordered` keep their relative
// order.
inline Graph relabel(const Graph& g, SplitMix64& rng, std::optional<Vertex> least = std::nullopt,
                     const std::vector<Vertex>& group = {}, const std::vector<Vertex>& ordered = {}) {
  const auto n = g.order();
  std::vector<Vertex> labels = iota_range(1, n - 1);
  rng.shuffle(labels);
  std::vector<Vertex> map(n, 0);
  for (Vertex v = 1; v < n; ++v) map[v] = labels[v - 1];
  if (least) {
    Vertex best = *least;
    for (Vertex v : group)
      if (map[v] < map[best]) best = v;
    std::swap(map[*least], map[best]);
  }
  std::vector<Vertex> picked;
  for (Vertex v : ordered) picked.push_back(map[v]);
  std::sort(picked.begin(), picked.end());
  for (std::size_t i = 0; i < ordered.size(); ++i) map[ordered[i]] = picked[i];
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.emplace_back(map[e.u], map[e.v]);
  return Graph::from_edges(n, edges);
}

inline bool acceptable(const Graph& g, bool u_at_zero) {
  if (!is_connected(g)) return false;
  const auto report = condition_report(g);
  if (!nc_condition_holds(g.order(), report.nc)) return false;
  if (u_at_zero && g.degree(0) != report.delta) return false;
  return match_family(g).kind == ObstructionKind::None;
}

struct Planted {
  Graph graph;
  std::optional<Vertex> least;
  std::vector<Vertex> group;
  std::vector<Vertex> ordered;
};

// Vertex 0 joined to 1..d; the rest G(n-1, p).
inline Planted planted(std::size_t n, std::size_t d, double p, bool nonadjacent12, bool hub, SplitMix64& rng) {
  Builder b(n);
  b.star(0, iota_range(1, d));
  b.random(iota_range(1, n - 1), p, rng);
  if (hub) b.star(1, iota_range(static_cast<Vertex>(d + 1), n - d - 1));
  auto g = b.build();
  if (nonadjacent12 && d >= 2) {
    auto edges = g.edges();
    std::erase(edges, Edge(1, 2));
    g = Graph::from_edges(n, edges);
  }
  return {g, {}, {}, {}};
}

// delta = 2, u1u2 not in E, W layered so the shortest (U1,U2)-path has k
// vertices (k in 2..4).
inline Planted delta2_path(std::size_t n, std::size_t k, SplitMix64& rng) {
  Builder b(n);
  b.star(0, {1, 2});
  const auto w = n - 3;
  if (k == 2) {
    const auto xs = uniform_in(w / 2, w / 2 + w / 8, rng);
    auto x = iota_range(3, xs), y = iota_range(static_cast<Vertex>(3 + xs), w - xs);
    b.random(iota_range(3, w), 0.8, rng);
    b.star(1, x);
    b.star(2, y);
    return {b.build(), {}, {}, {}};
  }
  std::vector<std::vector<Vertex>> layers;
  if (k == 3) {
    const auto m = uniform_in(4, 10, rng);
    const auto xs = (w - m) / 2;
    layers = {iota_range(3, xs), iota_range(static_cast<Vertex>(3 + xs), m),
              iota_range(static_cast<Vertex>(3 + xs + m), w - xs - m)};
  } else {
    const auto half = w / 2;
    const auto m1 = uniform_in(4, 8, rng), m2 = uniform_in(4, 8, rng);
    layers = {iota_range(3, half - m1), iota_range(static_cast<Vertex>(3 + half - m1), m1),
              iota_range(static_cast<Vertex>(3 + half), m2),
              iota_range(static_cast<Vertex>(3 + half + m2), w - half - m2)};
  }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    b.clique(layers[i]);
    if (i + 1 < layers.size()) b.biclique(layers[i], layers[i + 1]);
  }
  b.star(1, layers.front());
  b.star(2, layers.back());
  return {b.build(), {}, {}, {}};
}

// N[u] a clique, every u_i with exactly one W-neighbor, W dense.
inline Planted clique_pendant(std::size_t n, std::size_t d, SplitMix64& rng) {
  Builder b(n);
  b.clique(iota_range(0, d + 1));
  const auto w = iota_range(static_cast<Vertex>(d + 1), n - d - 1);
  b.random(w, 0.8, rng);
  for (Vertex i = 1; i <= d; ++i) b.edge(i, w[rng.below(w.size())]);
  return {b.build(), {}, {}, {}};
}

// W = A + B + {s}: A, B cliques joined only through s, which is adjacent to
// all of A and to all / one / some of B (sub = 1, 2, 3). u1 reaches a few
// vertices of A. After the 1-quasi-HIT is built, removing S' = {s, x3}
// splits W.
inline Planted l213_case2(std::size_t n, std::size_t d, int sub, SplitMix64& rng) {
  Builder b(n);
  b.clique(iota_range(0, d + 1));
  const Vertex s = static_cast<Vertex>(d + 1);
  const auto rest = n - d - 2;
  const auto as = (n - 2 - d) / 2;
  auto a = iota_range(s + 1, as), bb = iota_range(static_cast<Vertex>(s + 1 + as), rest - as);
  b.clique(a);
  b.clique(bb);
  b.star(s, a);
  if (sub == 1)
    b.star(s, bb);
  else if (sub == 2)
    b.edge(s, bb[rng.below(bb.size())]);
  else
    b.star(s, sample(bb, uniform_in(2, bb.size() - 1, rng), rng));
  b.star(1, sample(a, uniform_in(2, 5, rng), rng));
  auto ab = a;
  ab.insert(ab.end(), bb.begin(), bb.end());
  for (Vertex i = 2; i <= d; ++i)
    if (rng.bernoulli(0.5)) b.edge(i, ab[rng.below(ab.size())]);
  auto w = ab;
  w.push_back(s);
  return {b.build(), s, w, {}};
}

enum class TwoClique { Cross521Hub, Cross521Far, Adj521, Case1, Ge2, Eq1, Mixed, D3AdjA, D3NonadjA, D3NonadjB };

// W = C1 + C2, both cliques, N(u) = {1..d}. The attachment pattern selects
// the branch.
inline Planted two_clique(std::size_t n, TwoClique kind, SplitMix64& rng) {
  std::size_t d = 2;
  switch (kind) {
    case TwoClique::Cross521Hub:
    case TwoClique::Cross521Far:
    case TwoClique::Adj521: d = 2; break;
    case TwoClique::D3AdjA:
    case TwoClique::D3NonadjA:
    case TwoClique::D3NonadjB: d = 3; break;
    case TwoClique::Mixed: d = uniform_in(4, 12, rng); break;
    default: d = uniform_in(3, 12, rng);
  }
  const auto w = n - 1 - d;
  std::size_t s1 = w / 2;
  if (kind == TwoClique::D3NonadjA || kind == TwoClique::D3NonadjB) s1 = (n - 5) / 2;
  const auto c1 = iota_range(static_cast<Vertex>(d + 1), s1);
  const auto c2 = iota_range(static_cast<Vertex>(d + 1 + s1), w - s1);
  const std::vector<Vertex>* side[2] = {&c1, &c2};
  Builder b(n);
  b.star(0, iota_range(1, d));
  b.clique(c1);
  b.clique(c2);
  auto some = [&](const std::vector<Vertex>& c, std::size_t lo, std::size_t hi) {
    return sample(c, uniform_in(lo, std::min(hi, c.size()), rng), rng);
  };
  // Component-tree branch mix for the attachments: one neighbor, a proper subset, or all.
  auto attach = [&](Vertex ui, const std::vector<Vertex>& c, bool at_least_two) {
    const auto r = rng.below(3);
    if (r == 0 && !at_least_two)
      b.edge(ui, c[rng.below(c.size())]);
    else if (r == 2)
      b.star(ui, c);
    else
      b.star(ui, some(c, 2, c.size() - 1));
  };
  switch (kind) {
    case TwoClique::Cross521Hub:
      b.edge(1, 2);
      b.star(1, some(c1, 2, c1.size() - 1));
      b.star(1, some(c2, 2, c2.size() - 1));
      b.star(2, some(c2, 0, 3));
      return {b.build(), 1, iota_range(1, n - 1), {}};
    case TwoClique::Cross521Far:
      b.star(1, some(c1, c1.size() * 2 / 3, c1.size() - 1));
      b.star(1, some(c2, c2.size() * 2 / 3, c2.size() - 1));
      b.star(2, some(c1, 1, 3));
      b.star(2, some(c2, 1, 3));
      break;
    case TwoClique::Adj521:
      b.edge(1, 2);
      b.star(1, some(c1, 2, c1.size() - 1));
      b.star(2, some(c2, 1, c2.size() - 1));
      break;
    case TwoClique::Case1:
      b.clique(iota_range(1, d));
      attach(1, c1, false);
      attach(1, c2, false);
      for (Vertex i = 2; i <= d; ++i)
        if (rng.bernoulli(0.7)) attach(i, *side[rng.below(2)], false);
      break;
    case TwoClique::Ge2:
      b.clique(iota_range(1, d));
      attach(1, c1, true);
      attach(2, c2, true);
      for (Vertex i = 3; i <= d; ++i)
        if (rng.bernoulli(0.7)) attach(i, *side[rng.below(2)], false);
      break;
    case TwoClique::Eq1:
      b.clique(iota_range(1, d));
      b.edge(1, c1[rng.below(c1.size())]);
      b.edge(2, c2[rng.below(c2.size())]);
      for (Vertex i = 3; i <= d; ++i)
        if (rng.bernoulli(0.7)) {
          const auto& c = *side[rng.below(2)];
          b.edge(i, c[rng.below(c.size())]);
        }
      break;
    case TwoClique::Mixed:
      b.clique(iota_range(1, d));
      attach(1, c1, true);
      b.edge(2, c2[rng.below(c2.size())]);
      for (Vertex i = 3; i <= d; ++i) {
        const auto r = rng.below(3);
        if (r == 0) b.edge(i, c2[rng.below(c2.size())]);
        if (r == 1) attach(i, c1, false);
      }
      break;
    case TwoClique::D3AdjA:
      b.clique({1, 2, 3});
      attach(1, c1, true);
      b.edge(2, c2[rng.below(c2.size())]);
      if (rng.bernoulli(0.5))
        b.star(3, some(c1, 1, c1.size()));
      else if (rng.bernoulli(0.5))
        b.edge(3, c2[rng.below(c2.size())]);
      break;
    case TwoClique::D3NonadjA:
    case TwoClique::D3NonadjB: {
      b.star(1, c1);
      b.edge(2, 3);
      b.edge(2, c2[rng.below(c2.size())]);
      if (kind == TwoClique::D3NonadjB) {
        b.edge(3, 1);
        b.edge(3, c2[rng.below(c2.size())]);
      } else if (rng.bernoulli(0.5)) {
        b.edge(3, 1);
        b.star(3, some(c1, 1, 4));
      } else {
        b.star(3, some(c1, 2, 5));
      }
      // u1 and u2 are the least-id candidates on their sides
      return {b.build(), {}, {}, {1, 2, 3}};
    }
  }
  return {b.build(), {}, {}, {}};
}

}  // namespace detail

// Theorem-scale families.
inline const std::vector<std::string_view>& instance_kinds() {
  static const std::vector<std::string_view> kinds = {
      "gnp",           "planted",      "hub",          "delta2-common", "delta2-path2",  "delta2-path3",
      "delta2-path4",  "clique-pendant", "l213-2.1",   "l213-2.2",      "l213-2.3",      "521-cross-hub",
      "521-cross-far", "521-adj",      "522-case1",    "522-ge2",       "522-eq1",       "522-mixed",
      "522-d3-adj-a",  "522-d3-nonadj-a", "522-d3-nonadj-b"};
  return kinds;
}

// One accepted instance of the given kind with order close to n (odd orders
// are forced where the structure requires them). Throws DomainError after
// 200 rejected draws.
inline Instance make_instance(std::string_view kind, std::size_t n, SplitMix64& rng) {
  using detail::TwoClique;
  const bool odd = kind == "delta2-path4" || kind.substr(0, 3) == "521" || kind.substr(0, 6) == "522-d3";
  if (odd && n % 2 == 0) ++n;
  for (int attempt = 0; attempt < 200; ++attempt) {
    detail::Planted p;
    std::string expect;
    bool keep_labels = false;
    if (kind == "gnp") {
      p.graph = gnp(n, 0.6 + 0.2 * rng.uniform01(), rng);
      keep_labels = true;
    } else if (kind == "planted") {
      const auto d = detail::uniform_in(1, 40, rng);
      p = detail::planted(n, d, 0.7, false, false, rng);
    } else if (kind == "hub") {
      auto d = detail::uniform_in(1, 30, rng);
      if (d == 2) d = 3;
      p = detail::planted(n, d, 0.7, false, true, rng);
      expect = "5.1.1-star";
    } else if (kind == "delta2-common") {
      p = detail::planted(n, 2, 0.7, true, false, rng);
      expect = "5.1.2-common-nbr";
    } else if (kind.substr(0, 11) == "delta2-path") {
      p = detail::delta2_path(n, static_cast<std::size_t>(kind.back() - '0'), rng);
      expect = "5.1.2-path-k";
    } else if (kind == "clique-pendant") {
      p = detail::clique_pendant(n, detail::uniform_in(2, 30, rng), rng);
      expect = "5.1.1-U1eq1";
    } else if (kind.substr(0, 4) == "l213") {
      const int sub = kind.back() - '0';
      p = detail::l213_case2(n, detail::uniform_in(4, 10, rng), sub, rng);
      expect = "L2.13-case2." + std::to_string(sub);
    } else {
      static const std::pair<std::string_view, std::pair<TwoClique, const char*>> table[] = {
          {"521-cross-hub", {TwoClique::Cross521Hub, "5.2.1-cross"}},
          {"521-cross-far", {TwoClique::Cross521Far, "5.2.1-cross"}},
          {"521-adj", {TwoClique::Adj521, "5.2.1-adj"}},
          {"522-case1", {TwoClique::Case1, "5.2.2-case1"}},
          {"522-ge2", {TwoClique::Ge2, "5.2.2-case2-ge2"}},
          {"522-eq1", {TwoClique::Eq1, "5.2.2-case2-eq1"}},
          {"522-mixed", {TwoClique::Mixed, "5.2.2-case2-mixed"}},
          {"522-d3-adj-a", {TwoClique::D3AdjA, "5.2.2-case2-d3-adj-a"}},
          {"522-d3-nonadj-a", {TwoClique::D3NonadjA, "5.2.2-case2-d3-nonadj-a"}},
          {"522-d3-nonadj-b", {TwoClique::D3NonadjB, "5.2.2-case2-d3-nonadj-b"}},
      };
      const auto* hit = std::find_if(std::begin(table), std::end(table), [&](const auto& t) { return t.first == kind; });
      if (hit == std::end(table)) throw DomainError("make_instance: unknown kind " + std::string(kind));
      p = detail::two_clique(n, hit->second.first, rng);
      expect = hit->second.second;
    }
    Graph g = keep_labels ? p.graph : detail::relabel(p.graph, rng, p.least, p.group, p.ordered);
    if (detail::acceptable(g, !keep_labels)) return {std::string(kind), expect, std::move(g)};
  }
  throw DomainError("make_instance: no acceptable " + std::string(kind) + " instance after 200 draws");
}

// `count` instances with n uniform in [n_lo, n_hi], cycling through the kinds
// (gnp and planted twice as often as the fixed-structure kinds).
inline std::vector<Instance> theorem_scale_suite(std::size_t count, std::uint64_t seed, std::size_t n_lo = 270,
                                                 std::size_t n_hi = 400) {
  SplitMix64 rng(seed);
  std::vector<std::string_view> cycle;
  for (auto k : instance_kinds()) {
    cycle.push_back(k);
    if (k == "gnp" || k == "planted") cycle.push_back(k);
  }
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto n = detail::uniform_in(n_lo, n_hi, rng);
    if (n == n_hi && n % 2 == 0) --n;
    out.push_back(make_instance(cycle[i % cycle.size()], n, rng));
  }
  return out;
}

// Connected G(n, p) by rejection.
inline Graph random_connected(std::size_t n, double p, SplitMix64& rng) {
  for (;;) {
    auto g = gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
}

// A clique on 0..m-1 plus u_l = m joined to a random nonempty subset.
struct CliqueAttachment {
  Graph graph;
  VertexSet component;
  Vertex u_l = 0;
};

inline CliqueAttachment clique_attachment(std::size_t m, SplitMix64& rng) {
  detail::Builder b(m + 1);
  const auto c = detail::iota_range(0, m);
  b.clique(c);
  const auto k = detail::uniform_in(1, m, rng);
  b.star(static_cast<Vertex>(m), detail::sample(c, k, rng));
  return {b.build(), VertexSet::range(m), static_cast<Vertex>(m)};
}

}  // namespace hist
