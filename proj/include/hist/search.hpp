#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "tree.hpp"

namespace hist {

enum class SearchStatus { Found, NoHist, BudgetExceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::NoHist: return "NoHist";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

struct SearchResult {
  SearchStatus status = SearchStatus::NoHist;
  std::optional<SpanningTree> tree;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000;

namespace detail {

// Branch-and-bound over edge inclusion. Each node owns a copy of the state;
// propagation enforces, per vertex, that the final tree degree is never 2.
class HistSearch {
 public:
  HistSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.order()), budget_(budget) {
    edges_ = g.edges();
    // Hubs first: endpoints of larger degree resolve their constraints early.
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
      auto key = [&](const Edge& e) {
        auto du = g.degree(e.u), dv = g.degree(e.v);
        return std::pair{std::max(du, dv), std::min(du, dv)};
      };
      return key(a) > key(b);
    });
    inc_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      inc_[edges_[i].u].push_back(i);
      inc_[edges_[i].v].push_back(i);
    }
  }

  SearchResult run() {
    SearchResult r;
    if (n_ <= 1) {
      r.status = SearchStatus::Found;
      r.tree = SpanningTree(n_, {});
      return r;
    }
    State s;
    s.status.assign(edges_.size(), kFree);
    s.in.assign(n_, 0);
    s.avail.assign(n_, 0);
    s.comp.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      s.comp[v] = static_cast<Vertex>(v);
      s.avail[v] = g_.degree(static_cast<Vertex>(v));
    }
    auto found = dfs(std::move(s));
    r.nodes = nodes_;
    if (found) {
      r.status = SearchStatus::Found;
      r.tree = std::move(found);
    } else {
      r.status = exhausted_ ? SearchStatus::BudgetExceeded : SearchStatus::NoHist;
    }
    return r;
  }

 private:
  static constexpr char kFree = 0, kIn = 1, kOut = 2;

  struct State {
    std::vector<char> status;
    std::vector<std::size_t> in, avail;
    std::vector<Vertex> comp;  // component label of the chosen forest
    std::size_t chosen = 0;
  };

  Vertex find(State& s, Vertex x) const {
    while (s.comp[x] != x) x = s.comp[x] = s.comp[s.comp[x]];
    return x;
  }

  // Returns false on contradiction.
  bool include(State& s, std::size_t id) {
    const auto& e = edges_[id];
    Vertex a = find(s, e.u), b = find(s, e.v);
    if (a == b) return false;
    s.comp[std::max(a, b)] = std::min(a, b);
    s.status[id] = kIn;
    ++s.in[e.u];
    ++s.in[e.v];
    ++s.chosen;
    return s.chosen <= n_ - 1;
  }

  void exclude(State& s, std::size_t id) {
    s.status[id] = kOut;
    --s.avail[edges_[id].u];
    --s.avail[edges_[id].v];
  }

  bool propagate(State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t id = 0; id < edges_.size(); ++id)
        if (s.status[id] == kFree && find(s, edges_[id].u) == find(s, edges_[id].v)) {
          exclude(s, id);
          changed = true;
        }
      if (s.chosen == n_ - 1) {
        for (std::size_t id = 0; id < edges_.size(); ++id)
          if (s.status[id] == kFree) exclude(s, id);
        for (std::size_t v = 0; v < n_; ++v)
          if (s.in[v] == 2) return false;
        return true;
      }
      std::size_t forced_internal = 0;
      for (Vertex v = 0; v < n_; ++v) {
        const auto in = s.in[v], avail = s.avail[v];
        if (avail == 0) return false;
        if (in >= 2 && avail < 3) return false;
        if (in >= 2) ++forced_internal;
        if (in == avail) continue;
        if (avail == 1 || (in == 2 && avail == 3)) {
          for (auto id : inc_[v])
            if (s.status[id] == kFree) {
              if (!include(s, id)) return false;
              changed = true;
            }
        } else if (avail == 2 && in == 1) {
          for (auto id : inc_[v])
            if (s.status[id] == kFree) {
              exclude(s, id);
              changed = true;
            }
        }
      }
      // Internal vertices of a tree without degree-2 vertices: at most (n-2)/2.
      if (2 * forced_internal > n_ - 2) return false;
      if (changed) continue;
      std::vector<char> alive(edges_.size());
      for (std::size_t id = 0; id < edges_.size(); ++id) alive[id] = s.status[id] != kOut;
      if (!available_connected(alive)) return false;
      auto bridges = bridge_flags(n_, edges_, alive);
      for (std::size_t id = 0; id < edges_.size(); ++id)
        if (bridges[id] && s.status[id] == kFree) {
          if (!include(s, id)) return false;
          changed = true;
        }
    }
    return true;
  }

  bool available_connected(const std::vector<char>& alive) const {
    Dsu dsu(n_);
    std::size_t merged = 0;
    for (std::size_t id = 0; id < edges_.size(); ++id)
      if (alive[id] && dsu.unite(edges_[id].u, edges_[id].v)) ++merged;
    return merged == n_ - 1;
  }

  std::size_t pick(const State& s) const {
    for (Vertex v = 0; v < n_; ++v)
      if (s.in[v] == 2)
        for (auto id : inc_[v])
          if (s.status[id] == kFree) return id;
    for (std::size_t id = 0; id < edges_.size(); ++id)
      if (s.status[id] == kFree) return id;
    return edges_.size();
  }

  // Include branches recurse (depth <= n-1); exclude branches loop.
  std::optional<SpanningTree> dfs(State s) {
    for (;;) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return std::nullopt;
      }
      ++nodes_;
      if (!propagate(s)) return std::nullopt;
      if (s.chosen == n_ - 1) {
        std::vector<Edge> out;
        for (std::size_t id = 0; id < edges_.size(); ++id)
          if (s.status[id] == kIn) out.push_back(edges_[id]);
        SpanningTree t(n_, std::move(out));
        if (verify_hist(g_, t)) return t;
        return std::nullopt;
      }
      const auto id = pick(s);
      if (id == edges_.size()) return std::nullopt;
      {
        State child = s;
        if (include(child, id))
          if (auto t = dfs(std::move(child))) return t;
      }
      if (exhausted_) return std::nullopt;
      exclude(s, id);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> inc_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

// Exact decision: Found, NoHist (exhaustive), or BudgetExceeded. `budget`
// limits the number of search nodes, so results are platform-independent.
inline SearchResult exact_search(const Graph& g, std::uint64_t budget = kDefaultSearchBudget) {
  require_connected(g, "exact_search");
  return detail::HistSearch(g, budget).run();
}

}  // namespace hist
