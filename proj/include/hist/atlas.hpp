#pragma once

// Non-isomorphic connected graphs of small order, generated in-process.
//
// A connected graph on n vertices arises from one on n-1 by adding a vertex
// whose removal keeps it connected; we only keep children where the new
// vertex has minimum degree among the non-cut vertices (some such vertex
// always exists), then drop isomorphs by canonical code. The canonical code
// is the largest upper-triangle bit string over the leaves of an
// individualization-refinement search with automorphism pruning.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace hist {

inline constexpr std::size_t kAtlasMaxOrder = 9;

namespace detail {

// Adjacency as bit rows; enough for the canonical-code width (n <= 11).
struct SmallGraph {
  std::size_t n = 0;
  std::uint16_t row[16] = {};
};

inline std::uint64_t small_code(const SmallGraph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < g.n; ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((g.row[order[i]] >> order[j]) & 1U);
  return code;
}

class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g) {}

  std::uint64_t run() {
    std::vector<std::vector<int>> cells(1);
    cells[0].resize(g_.n);
    std::iota(cells[0].begin(), cells[0].end(), 0);
    std::vector<int> prefix;
    search(cells, prefix);
    return best_;
  }

 private:
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::uint16_t mask = 0;
        for (int v : cells[s]) mask |= static_cast<std::uint16_t>(1U << v);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() == 1) continue;
          auto key = [&](int v) { return std::popcount(static_cast<unsigned>(g_.row[v] & mask)); };
          auto cell = cells[c];
          std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return key(a) < key(b); });
          if (key(cell.front()) == key(cell.back())) continue;
          std::vector<std::vector<int>> parts;
          for (int v : cell) {
            if (parts.empty() || key(parts.back().front()) != key(v)) parts.emplace_back();
            parts.back().push_back(v);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  // Orbits of the automorphisms found so far that fix `prefix` pointwise.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(g_.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (int p : prefix)
        if (gamma[p] != p) fixes = false;
      if (!fixes) continue;
      for (std::size_t v = 0; v < g_.n; ++v) parent[find(static_cast<int>(v))] = find(gamma[v]);
    }
    for (std::size_t v = 0; v < g_.n; ++v) parent[v] = find(static_cast<int>(v));
    return parent;
  }

  void search(std::vector<std::vector<int>> cells, std::vector<int>& prefix) {
    refine(cells);
    if (cells.size() == g_.n) {
      std::vector<int> order(g_.n);
      for (std::size_t i = 0; i < g_.n; ++i) order[i] = cells[i][0];
      const auto code = small_code(g_, order);
      if (!have_) {
        have_ = true;
        best_ = first_code_ = code;
        first_ = order;
        best_order_ = order;
      } else if (code == best_) {
        record(best_order_, order);
      } else if (code > best_) {
        best_ = code;
        best_order_ = order;
      }
      if (code == first_code_) record(first_, order);
      return;
    }
    std::size_t target = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (cells[target].size() == 1 || cells[i].size() < cells[target].size())) target = i;
    const auto cell = cells[target];
    std::vector<int> done;
    for (int v : cell) {
      if (!done.empty()) {
        const auto orb = orbits(prefix);
        if (std::any_of(done.begin(), done.end(), [&](int x) { return orb[x] == orb[v]; })) continue;
      }
      auto next = cells;
      next[target].erase(std::find(next[target].begin(), next[target].end(), v));
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), std::vector<int>{v});
      prefix.push_back(v);
      search(std::move(next), prefix);
      prefix.pop_back();
      done.push_back(v);
    }
  }

  // Two leaves with equal codes differ by an automorphism a[i] -> b[i].
  void record(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return;
    std::vector<int> gamma(g_.n);
    for (std::size_t i = 0; i < g_.n; ++i) gamma[a[i]] = b[i];
    autos_.push_back(std::move(gamma));
  }

  const SmallGraph& g_;
  bool have_ = false;
  std::uint64_t best_ = 0, first_code_ = 0;
  std::vector<int> first_, best_order_;
  std::vector<std::vector<int>> autos_;
};

inline SmallGraph small_from_code(std::size_t n, std::uint64_t code) {
  SmallGraph g;
  g.n = n;
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((code >> (bits - 1 - k)) & 1U) {
        g.row[i] |= static_cast<std::uint16_t>(1U << j);
        g.row[j] |= static_cast<std::uint16_t>(1U << i);
      }
  return g;
}

inline bool small_connected_without(const SmallGraph& g, int drop) {
  const std::uint16_t all = static_cast<std::uint16_t>(((1U << g.n) - 1) & ~(1U << drop));
  if (all == 0) return true;
  std::uint16_t seen = static_cast<std::uint16_t>(all & (~all + 1));
  std::uint16_t frontier = seen;
  while (frontier) {
    std::uint16_t next = 0;
    for (std::uint16_t f = frontier; f; f &= static_cast<std::uint16_t>(f - 1)) next |= g.row[std::countr_zero(f)];
    next &= static_cast<std::uint16_t>(all & ~seen);
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

// Children of `parent` (order n-1) accepted by the minimum-degree rule.
inline void extend(const SmallGraph& parent, std::unordered_set<std::uint64_t>& out) {
  const std::size_t n = parent.n + 1;
  const int v = static_cast<int>(parent.n);
  for (std::uint32_t s = 1; s < (1U << parent.n); ++s) {
    SmallGraph child = parent;
    child.n = n;
    child.row[v] = static_cast<std::uint16_t>(s);
    for (std::uint32_t t = s; t; t &= t - 1) child.row[std::countr_zero(t)] |= static_cast<std::uint16_t>(1U << v);
    const int d = std::popcount(s);
    bool ok = true;
    for (int w = 0; w < v && ok; ++w)
      if (std::popcount(static_cast<unsigned>(child.row[w])) < d && small_connected_without(child, w)) ok = false;
    if (ok) out.insert(Canonizer(child).run());
  }
}

}  // namespace detail

// Canonical code of a graph with at most 11 vertices: equal iff isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > 11) throw RangeError("canonical_code: order above 11");
  detail::SmallGraph s;
  s.n = g.order();
  for (const auto& e : g.edges()) {
    s.row[e.u] |= static_cast<std::uint16_t>(1U << e.v);
    s.row[e.v] |= static_cast<std::uint16_t>(1U << e.u);
  }
  return detail::Canonizer(s).run();
}

inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  const auto s = detail::small_from_code(n, code);
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((s.row[i] >> j) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, edges);
}

// Canonical codes of all connected graphs of order n, ascending. Work is split
// over `threads` workers (0 = hardware concurrency); the result does not
// depend on the split.
inline std::vector<std::uint64_t> connected_atlas_codes(std::size_t n, unsigned threads = 0) {
  if (n == 0 || n > kAtlasMaxOrder) throw RangeError("atlas: order must be in 1.." + std::to_string(kAtlasMaxOrder));
  std::vector<std::uint64_t> level{0};  // K1
  for (std::size_t k = 2; k <= n; ++k) {
    unsigned workers = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, level.size()));
    std::vector<std::unordered_set<std::uint64_t>> found(workers);
    auto work = [&](unsigned id) {
      for (std::size_t i = id; i < level.size(); i += workers)
        detail::extend(detail::small_from_code(k - 1, level[i]), found[id]);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
      for (auto& t : pool) t.join();
    }
    std::unordered_set<std::uint64_t> merged;
    for (auto& f : found) merged.insert(f.begin(), f.end());
    level.assign(merged.begin(), merged.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

inline std::vector<Graph> connected_atlas(std::size_t n, unsigned threads = 0) {
  std::vector<Graph> out;
  for (auto code : connected_atlas_codes(n, threads)) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace hist
