#pragma once

// JSON views of the library's results. Keys keep insertion order so the
// output is byte-stable; infinite sigma/NC (complete graphs) print as "inf".

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conditions.hpp"
#include "constructive.hpp"
#include "obstructions.hpp"
#include "oracle.hpp"
#include "tree.hpp"

namespace hist {

using Json = nlohmann::ordered_json;

inline Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

inline Json vertices_json(const VertexSet& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

inline Json finite_or_inf(const std::optional<std::size_t>& x) {
  return x ? Json(*x) : Json("inf");
}

inline Json to_json(const ConditionReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"delta", r.delta},
              {"sigma", finite_or_inf(r.sigma)},
              {"nc", finite_or_inf(r.nc)},
              {"meets_thm12", r.meets_thm12},
              {"meets_thm13", r.meets_thm13},
              {"meets_thm15", r.meets_thm15},
              {"complete", r.complete}};
}

inline Json to_json(const ObstructionReport& r) {
  return Json{{"kind", to_string(r.kind)}, {"witness", vertices_json(r.witness)}};
}

inline Json to_json(const SpanningTree& t) { return Json{{"host_n", t.host_n}, {"edges", edges_json(t.edges)}}; }

inline Json to_json(const ConstructionTrace& t) {
  Json a = Json::array();
  for (const auto& s : t.steps)
    a.push_back(Json{{"case_id", s.case_id}, {"detail", s.detail}, {"edges_added", edges_json(s.edges_added)}});
  return a;
}

inline Json to_json(const OracleResult& r) {
  return Json{{"status", r.status == OracleStatus::Complete ? "Complete" : "CapExceeded"},
              {"tree_count", r.tree_count},
              {"hist_count", r.hist_count}};
}

inline ConstructionTrace trace_from_json(const Json& j) {
  ConstructionTrace t;
  for (const auto& s : j) {
    TraceStep step{s.at("case_id").get<std::string>(), s.at("detail").get<std::string>(), {}};
    for (const auto& e : s.at("edges_added")) step.edges_added.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    t.steps.push_back(std::move(step));
  }
  return t;
}

}  // namespace hist
