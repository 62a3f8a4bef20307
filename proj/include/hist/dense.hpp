#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "tree.hpp"

namespace hist {

namespace detail {

class DenseBuilder {
 public:
  explicit DenseBuilder(const Graph& g) : g_(g), n_(g.order()), parent_(n_, kNone), deg_(n_, 0), in_(n_, 0) {}

  std::optional<SpanningTree> run() {
    if (n_ <= 1) return SpanningTree(n_, {});
    Vertex root = 0;
    for (Vertex v = 1; v < n_; ++v)
      if (g_.degree(v) > g_.degree(root)) root = v;
    in_[root] = 1;
    reached_ = 1;
    for (Vertex w : g_.neighbors(root)) hang(w, root);
    while (reached_ < n_) {
      if (attach_to_internal()) continue;
      if (expand_leaf()) continue;
      if (!attach_any()) return std::nullopt;
    }
    repair();
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n_; ++v)
      if (parent_[v] != kNone) edges.emplace_back(v, parent_[v]);
    SpanningTree t(n_, std::move(edges));
    if (!verify_hist(g_, t)) return std::nullopt;
    return t;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  void hang(Vertex child, Vertex par) {
    parent_[child] = par;
    in_[child] = 1;
    ++deg_[child];
    ++deg_[par];
    ++reached_;
  }

  // Unreached vertices next to a degree-2 tree vertex go there first (which
  // fixes it), then onto any vertex of degree >= 3.
  bool attach_to_internal() {
    bool any = false;
    for (Vertex x = 0; x < n_; ++x) {
      if (in_[x]) continue;
      Vertex best = kNone;
      for (Vertex y : g_.neighbors(x)) {
        if (!in_[y] || deg_[y] < 2) continue;
        if (best == kNone || (deg_[y] == 2 && deg_[best] != 2)) best = y;
      }
      if (best != kNone) {
        hang(x, best);
        any = true;
      }
    }
    return any;
  }

  bool expand_leaf() {
    Vertex best = kNone;
    std::size_t best_count = 1;
    for (Vertex l = 0; l < n_; ++l) {
      if (!in_[l] || deg_[l] != 1) continue;
      std::size_t c = 0;
      for (Vertex y : g_.neighbors(l)) c += !in_[y];
      if (c > best_count) {
        best = l;
        best_count = c;
      }
    }
    if (best == kNone) return false;
    for (Vertex y : g_.neighbors(best))
      if (!in_[y]) hang(y, best);
    return true;
  }

  bool attach_any() {
    for (Vertex x = 0; x < n_; ++x) {
      if (in_[x]) continue;
      for (Vertex y : g_.neighbors(x))
        if (in_[y]) {
          hang(x, y);
          return true;
        }
    }
    return false;
  }

  bool is_ancestor(Vertex anc, Vertex v) const {
    for (Vertex c = v; c != kNone; c = parent_[c])
      if (c == anc) return true;
    return false;
  }

  void move(Vertex child, Vertex new_parent) {
    --deg_[parent_[child]];
    parent_[child] = new_parent;
    ++deg_[new_parent];
  }

  // Removes degree-2 vertices by re-hanging one of their children elsewhere
  // (the vertex becomes a leaf) or by stealing a subtree from a vertex of
  // degree >= 4 (the vertex becomes internal).
  void repair() {
    for (std::size_t round = 0; round < 4 * n_; ++round) {
      bool progress = false;
      for (Vertex w = 0; w < n_; ++w) {
        if (deg_[w] != 2) continue;
        if (rehang_child(w) || steal(w)) progress = true;
      }
      if (!progress) return;
    }
  }

  bool rehang_child(Vertex w) {
    for (Vertex c = 0; c < n_; ++c) {
      if (parent_[c] != w) continue;
      for (Vertex y : g_.neighbors(c)) {
        if (y == w || deg_[y] < 2 || is_ancestor(c, y)) continue;
        move(c, y);
        return true;
      }
    }
    return false;
  }

  bool steal(Vertex w) {
    for (Vertex z : g_.neighbors(w)) {
      if (parent_[z] == kNone || parent_[z] == w || deg_[parent_[z]] < 4) continue;
      if (is_ancestor(z, w)) continue;
      move(z, w);
      return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> deg_;
  std::vector<char> in_;
  std::size_t reached_ = 0;
};

}  // namespace detail

// Greedy star expansion from a maximum-degree vertex followed by a repair
// pass. Best effort: returns a verified HIST or nothing.
inline std::optional<SpanningTree> dense_hist(const Graph& g) {
  require_connected(g, "dense_hist");
  return detail::DenseBuilder(g).run();
}

}  // namespace hist
