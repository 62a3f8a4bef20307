#pragma once

// Small named graphs shared by the unit tests.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hist/graph.hpp"
#include "hist/io.hpp"

namespace testing_graphs {

using hist::Edge;
using hist::Graph;
using hist::Vertex;

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

inline std::string data_path(const std::string& name) { return std::string(HIST_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_graphs
