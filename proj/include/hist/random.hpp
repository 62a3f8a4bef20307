#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace hist {

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
// the xor-shift-multiply finalizer. Fixed here so that every seeded stream is
// identical across compilers and platforms; <random> distributions are not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Top 53 bits scaled to [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

// G(n, p): pairs (i, j), i < j, visited with j outer and i inner; one draw
// per pair.
inline Graph gnp(std::size_t n, double p, SplitMix64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gnp: p must lie in [0, 1]");
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return gnp(n, p, rng);
}

}  // namespace hist
