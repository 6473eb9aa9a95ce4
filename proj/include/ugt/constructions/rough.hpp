#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ugt/core/validation.hpp"

namespace ugt {

// Interval-valued graph data with equivalence classes on vertices and edges.
struct rough_input {
  std::vector<std::string> vertices;
  std::vector<degree> sigma;                                   // [lower, upper]
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<degree> p;                                       // [lower, upper], one per edge
  std::vector<std::vector<std::string>> vertex_classes;
  std::vector<std::vector<std::pair<std::string, std::string>>> edge_classes;
};

struct rough_pair {
  uncertain_graph lower, upper;
};

namespace detail {

inline std::pair<std::string, std::string> edge_key(const std::string& u, const std::string& v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

// Class-wise componentwise min (lower) and max (upper) of a degree table.
template <class Key>
std::pair<std::map<Key, degree>, std::map<Key, degree>> approximate(const std::map<Key, degree>& base,
                                                                     const std::vector<std::vector<Key>>& classes,
                                                                     const std::string& what) {
  std::map<Key, degree> lo, hi;
  for (const auto& cls : classes) {
    if (cls.empty()) throw invalid_argument("rough graph: empty " + what + " class");
    degree mn = base.at(cls.front()), mx = mn;
    for (const auto& x : cls) {
      mn = componentwise_min(mn, base.at(x));
      mx = componentwise_max(mx, base.at(x));
    }
    for (const auto& x : cls) {
      if (!lo.emplace(x, mn).second) throw invalid_argument("rough graph: " + what + " in two classes");
      hi.emplace(x, mx);
    }
  }
  if (lo.size() != base.size()) throw invalid_argument("rough graph: " + what + " classes do not cover every " + what);
  return {lo, hi};
}

}  // namespace detail

struct rough_approximation {
  std::shared_ptr<const model> m;
  std::map<std::string, degree> vlo, vhi;
  std::map<std::pair<std::string, std::string>, degree> elo, ehi;
};

// Throws on malformed input or partitions.
inline rough_approximation rough_approximate(const rough_input& in) {
  rough_approximation a;
  a.m = std::make_shared<const model>(make_model(model_kind::interval));
  if (in.vertices.size() != in.sigma.size() || in.edges.size() != in.p.size())
    throw invalid_argument("rough graph: degree list lengths");
  std::map<std::string, degree> sv;
  for (std::size_t i = 0; i < in.vertices.size(); ++i) {
    if (!a.m->admissible(in.sigma[i]))
      throw invalid_argument("rough graph: vertex " + in.vertices[i] + " is not an interval");
    if (!sv.emplace(in.vertices[i], in.sigma[i]).second) throw invalid_argument("rough graph: duplicate vertex");
  }
  std::map<std::pair<std::string, std::string>, degree> se;
  for (std::size_t i = 0; i < in.edges.size(); ++i) {
    auto key = detail::edge_key(in.edges[i].first, in.edges[i].second);
    if (!sv.count(key.first) || !sv.count(key.second)) throw invalid_argument("rough graph: edge with unknown endpoint");
    if (!a.m->admissible(in.p[i])) throw invalid_argument("rough graph: edge degree is not an interval");
    if (!se.emplace(key, in.p[i]).second) throw invalid_argument("rough graph: duplicate edge");
  }
  std::vector<std::vector<std::pair<std::string, std::string>>> eclasses;
  for (const auto& cls : in.edge_classes) {
    eclasses.emplace_back();
    for (const auto& [u, v] : cls) {
      auto key = detail::edge_key(u, v);
      if (!se.count(key)) throw invalid_argument("rough graph: class names unknown edge {" + u + "," + v + "}");
      eclasses.back().push_back(key);
    }
  }
  for (const auto& cls : in.vertex_classes)
    for (const auto& v : cls)
      if (!sv.count(v)) throw invalid_argument("rough graph: class names unknown vertex " + v);
  std::tie(a.vlo, a.vhi) = detail::approximate(sv, in.vertex_classes, "vertex");
  std::tie(a.elo, a.ehi) = detail::approximate(se, eclasses, "edge");
  return a;
}

// Edge approximations against the meet of their endpoint approximations.
inline validation_report rough_compatibility(const rough_approximation& a) {
  validation_report r;
  for (const auto& [key, lo] : a.elo) {
    std::string where = "{" + key.first + "," + key.second + "}";
    if (!componentwise_leq(lo, componentwise_min(a.vlo.at(key.first), a.vlo.at(key.second))))
      r.add(where, "lower-compatibility", to_string(lo));
    const degree& hi = a.ehi.at(key);
    if (!componentwise_leq(hi, componentwise_min(a.vhi.at(key.first), a.vhi.at(key.second))))
      r.add(where, "upper-compatibility", to_string(hi));
  }
  return r;
}

inline rough_pair rough_graph(const rough_input& in) {
  auto a = rough_approximate(in);
  auto r = rough_compatibility(a);
  if (!r.ok()) {
    std::string msg = "rough graph: compatibility violated at";
    for (const auto& v : r.violations) msg += " " + v.where + " (" + v.rule + ")";
    throw invalid_argument(msg);
  }
  graph_builder lo(a.m, constraint_profile::fuzzy_cap), hi(a.m, constraint_profile::fuzzy_cap);
  for (const auto& v : in.vertices) {
    lo.vertex(v, a.vlo.at(v));
    hi.vertex(v, a.vhi.at(v));
  }
  for (const auto& [u, v] : in.edges) {
    auto key = detail::edge_key(u, v);
    lo.edge(u, v, a.elo.at(key));
    hi.edge(u, v, a.ehi.at(key));
  }
  return {lo.build(), hi.build()};
}

}  // namespace ugt
