#pragma once

#include <variant>

#include "ugt/io/json.hpp"
#include "ugt/oracles/oracles.hpp"
#include "ugt/params/params.hpp"
#include "ugt/structure/shape.hpp"

namespace ugt::io {

inline json write_witness(const uncertain_graph& g, const param_witness& w) {
  return std::visit(
      [&](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, vertex_set>) {
          return {{"vertices", write_ids(g, x.members)}};
        } else if constexpr (std::is_same_v<T, edge_set>) {
          return {{"edges", write_pairs(g, x.edges)}};
        } else if constexpr (std::is_same_v<T, coloring_witness>) {
          json levels = json::array();
          for (const auto& lc : x.levels) {
            json colors = json::object();
            for (std::size_t i = 0; i < lc.vertices.size(); ++i) colors[g.id(lc.vertices[i])] = lc.color[i];
            levels.push_back({{"level", write_degree(lc.level)}, {"colors", lc.colors}, {"coloring", std::move(colors)}});
          }
          return {{"levels", std::move(levels)}};
        } else if constexpr (std::is_same_v<T, tree_decomposition>) {
          json bags = json::array(), tree = json::array();
          for (const auto& b : x.bags) bags.push_back(write_ids(g, b));
          for (auto [a, b] : x.tree) tree.push_back(json::array({a, b}));
          return {{"bags", std::move(bags)}, {"tree", std::move(tree)}};
        } else {
          return nullptr;
        }
      },
      w);
}

inline json write_param(const std::string& kind, const uncertain_graph& g, const param_result& r) {
  json j{{"kind", kind}, {"value", write_rational(r.value)}, {"exact", r.exact}, {"witness", write_witness(g, r.witness)}};
  if (const auto* b = std::get_if<interval_bounds>(&r.witness))
    j["bounds"] = json::array({write_rational(b->lower), write_rational(b->upper)});
  return j;
}

inline json write_shape(const uncertain_graph& g, const shape_report& s) {
  json j{{"connected", s.connected}, {"complete", s.complete}, {"eulerian", s.eulerian}};
  j["star"] = s.star ? json{{"center", g.id(s.star->center)}, {"leaves", write_ids(g, s.star->leaves)}} : json(nullptr);
  j["wheel"] = s.wheel ? json{{"hub", g.id(s.wheel->hub)}, {"rim", write_ids(g, s.wheel->rim)}} : json(nullptr);
  j["bipartite"] =
      s.bipartite ? json::array({write_ids(g, s.bipartite->first), write_ids(g, s.bipartite->second)}) : json(nullptr);
  j["regular"] = s.regular ? write_rational(*s.regular) : json(nullptr);
  if (!s.hamiltonian_decided) {
    j["hamiltonian"] = "undecided";
  } else {
    j["hamiltonian"] = s.hamiltonian;
    if (s.hamiltonian) j["hamiltonian_cycle"] = write_ids(g, s.hamiltonian_cycle);
  }
  return j;
}

inline json write_spectrum(const spectrum& s) {
  return {{"eigenvalues", write_floats(s.eigenvalues)}, {"energy", write_float(s.energy)}};
}

inline json write_oracle(const oracle::report& r) {
  json j{{"kind", oracle::to_string(r.what)}, {"enumerated", r.enumerated}};
  j["value"] = r.value ? write_rational(*r.value) : json(nullptr);
  if (r.what == oracle::kind::balanced) j["balanced"] = r.balanced;
  if (r.agrees) j["agrees"] = *r.agrees;
  return j;
}

inline json undecided(const size_cap_exceeded& e) {
  return {{"undecided", true}, {"check", e.check}, {"cap", e.limit}, {"size", e.actual}};
}

}  // namespace ugt::io
