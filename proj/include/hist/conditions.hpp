#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>

#include "graph.hpp"

namespace hist {

// Degree and neighborhood-union parameters of a connected graph. sigma and
// nc are std::nullopt ("infinite") exactly when the graph is complete.
struct ConditionReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::optional<std::size_t> sigma;
  std::optional<std::size_t> nc;
  bool meets_thm12 = false;  // delta^2 >= 16 n
  bool meets_thm13 = false;  // sigma >= n-1 and n >= 8
  bool meets_thm15 = false;  // 2 nc >= n-1 and n >= 270
  bool complete = false;
};

namespace detail {

struct PairScan {
  std::optional<std::size_t> sigma;
  std::optional<std::size_t> nc;
  Vertex nc_u = 0;
  Vertex nc_v = 0;
};

// One pass over all nonadjacent pairs u < v. The first pair attaining the
// minimum union size is kept, which makes it the lexicographically least.
inline PairScan scan_pairs(const Graph& g) {
  PairScan r;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const auto s = g.degree(u) + g.degree(v);
      if (!r.sigma || s < *r.sigma) r.sigma = s;
      const auto c = Bitset::union_count(g.row(u), g.row(v));
      if (!r.nc || c < *r.nc) {
        r.nc = c;
        r.nc_u = u;
        r.nc_v = v;
      }
    }
  return r;
}

}  // namespace detail

// 2 * NC >= n - 1, with the infinite value counting as satisfied.
inline bool nc_condition_holds(std::size_t n, const std::optional<std::size_t>& nc) {
  return !nc || 2 * *nc + 1 >= n;
}

inline ConditionReport condition_report(const Graph& g) {
  if (g.order() == 0) throw DomainError("condition_report: empty graph");
  require_connected(g, "condition_report");
  ConditionReport r;
  r.n = g.order();
  r.m = g.size();
  r.delta = g.min_degree();
  r.complete = g.is_complete();
  auto scan = detail::scan_pairs(g);
  r.sigma = scan.sigma;
  r.nc = scan.nc;
  r.meets_thm12 = r.delta * r.delta >= 16 * r.n;
  r.meets_thm13 = r.n >= 8 && (!r.sigma || *r.sigma + 1 >= r.n);
  r.meets_thm15 = r.n >= 270 && nc_condition_holds(r.n, r.nc);
  return r;
}

struct NcWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t value = 0;
};

// Lexicographically least nonadjacent pair attaining NC(G).
inline NcWitness nc_pair_witness(const Graph& g) {
  if (g.is_complete()) throw DomainError("nc_pair_witness: graph is complete");
  auto scan = detail::scan_pairs(g);
  return {scan.nc_u, scan.nc_v, *scan.nc};
}

// sigma >= n-1 implies 2 NC >= n-1. Returns whether the implication holds.
inline bool implication_check(const Graph& g) {
  auto r = condition_report(g);
  const bool antecedent = !r.sigma || *r.sigma + 1 >= r.n;
  return !antecedent || nc_condition_holds(r.n, r.nc);
}

}  // namespace hist
