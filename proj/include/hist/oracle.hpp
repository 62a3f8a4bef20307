#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace hist {

enum class OracleStatus { Complete, CapExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::Complete;
  std::uint64_t tree_count = 0;
  std::uint64_t hist_count = 0;

  bool hist_exists() const { return hist_count > 0; }
};

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;
inline constexpr std::size_t kOracleMaxOrder = 64;

namespace detail {

// Deletion-contraction over the edge list: every edge is either contracted
// into the current forest or deleted, and a deletion is only taken when the
// remaining graph stays connected. Each leaf of the recursion is a distinct
// spanning tree.
class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, std::uint64_t cap)
      : n_(g.order()), cap_(cap), edges_(g.edges()), avail_(n_, 0), deg_(n_, 0), rep_(n_), size_(n_, 1) {
    for (const auto& e : edges_) {
      avail_[e.u] |= std::uint64_t{1} << e.v;
      avail_[e.v] |= std::uint64_t{1} << e.u;
    }
    for (std::size_t v = 0; v < n_; ++v) rep_[v] = static_cast<Vertex>(v);
  }

  OracleResult run() {
    if (n_ <= 1) return {OracleStatus::Complete, 1, 1};
    rec(0, 0);
    if (over_) result_.status = OracleStatus::CapExceeded;
    return result_;
  }

 private:
  Vertex find(Vertex x) const {
    while (rep_[x] != x) x = rep_[x];
    return x;
  }

  bool connected() const {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto f = frontier; f; f &= f - 1) next |= avail_[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == static_cast<int>(n_);
  }

  void rec(std::size_t i, std::size_t chosen) {
    if (over_) return;
    if (chosen == n_ - 1) {
      if (++result_.tree_count > cap_) {
        over_ = true;
        return;
      }
      bool hist = true;
      for (auto d : deg_) hist = hist && d != 2;
      if (hist) ++result_.hist_count;
      return;
    }
    if (i == edges_.size()) return;
    const auto& e = edges_[i];
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      if (size_[a] < size_[b]) std::swap(a, b);
      rep_[b] = a;
      size_[a] += size_[b];
      ++deg_[e.u];
      ++deg_[e.v];
      rec(i + 1, chosen + 1);
      --deg_[e.u];
      --deg_[e.v];
      size_[a] -= size_[b];
      rep_[b] = b;
    }
    avail_[e.u] &= ~(std::uint64_t{1} << e.v);
    avail_[e.v] &= ~(std::uint64_t{1} << e.u);
    if (connected()) rec(i + 1, chosen);
    avail_[e.u] |= std::uint64_t{1} << e.v;
    avail_[e.v] |= std::uint64_t{1} << e.u;
  }

  std::size_t n_;
  std::uint64_t cap_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> avail_;
  std::vector<std::size_t> deg_;
  std::vector<Vertex> rep_;
  std::vector<std::size_t> size_;
  OracleResult result_;
  bool over_ = false;
};

}  // namespace detail

// Counts all spanning trees and those without degree-2 vertices. Stops with
// CapExceeded (counts then reflect the partial run) once more than `cap`
// trees have been seen.
inline OracleResult oracle_enumerate(const Graph& g, std::uint64_t cap = kDefaultOracleCap) {
  require_connected(g, "oracle_enumerate");
  if (g.order() > kOracleMaxOrder) throw DomainError("oracle_enumerate: n must be at most 64");
  return detail::TreeEnumerator(g, cap).run();
}

}  // namespace hist
