#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ugt/core/graph.hpp"

namespace ugt {

struct violation {
  std::string where;  // vertex id, "{u,v}", arc id, ...
  std::string rule;
  std::string detail;
};

struct validation_report {
  std::vector<violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string where, std::string rule, std::string detail = {}) {
    violations.push_back({std::move(where), std::move(rule), std::move(detail)});
  }
  bool mentions(const std::string& where) const {
    for (const auto& v : violations)
      if (v.where == where) return true;
    return false;
  }
};

// Edge degree against its endpoint degrees under the given profile.
// Returns an empty string when the rule holds.
inline std::string profile_rule_failure(constraint_profile p, const degree& edge, const degree& a, const degree& b) {
  switch (p) {
    case constraint_profile::none: return {};
    case constraint_profile::fuzzy_cap:
      if (!componentwise_leq(edge, componentwise_min(a, b))) return "edge degree exceeds the endpoint minimum";
      return {};
    case constraint_profile::intuitionistic_cap:
      if (edge.size() != 2) return "intuitionistic cap needs k=2";
      if (edge[0] > std::min(a[0], b[0])) return "membership exceeds the endpoint minimum";
      if (edge[1] < std::max(a[1], b[1])) return "non-membership below the endpoint maximum";
      return {};
    case constraint_profile::svn_cap:
      if (edge.size() != 3) return "neutrosophic cap needs k=3";
      if (edge[0] > std::min(a[0], b[0])) return "truth exceeds the endpoint minimum";
      if (edge[1] > std::min(a[1], b[1])) return "indeterminacy exceeds the endpoint minimum";
      if (edge[2] < std::max(a[2], b[2])) return "falsity below the endpoint maximum";
      return {};
  }
  return {};
}

inline validation_report validate_graph(const uncertain_graph& g) {
  validation_report r;
  const model& m = g.m();
  for (std::size_t i = 0; i < g.n(); ++i) {
    auto why = m.admissibility(g.sigma(i));
    if (!why.empty()) r.add(g.id(i), "vertex-degree", why);
  }
  for (auto [i, j] : g.nonzero_pairs()) {
    const degree& e = g.eta(i, j);
    auto why = m.admissibility(e);
    if (!why.empty()) r.add(g.pair_name(i, j), "edge-degree", why);
    auto cap = profile_rule_failure(g.profile(), e, g.sigma(i), g.sigma(j));
    if (!cap.empty()) r.add(g.pair_name(i, j), std::string("profile:") + to_string(g.profile()), cap);
  }
  return r;
}

// Plithogenic attribute data in cube form: every attribute value carries a degree tuple.
struct plithogenic_spec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> values;
  std::map<std::pair<std::string, std::string>, degree> adf;  // (vertex, value)
  // ((u,v) as listed in edges, (a,b)) -> degree
  std::map<std::tuple<std::string, std::string, std::string, std::string>, degree> bdf;
  std::map<std::pair<std::string, std::string>, rational> acf;  // missing means 0
  // ((a,b),(c,d)); when absent, the minimum of the vertex contradictions is used
  std::optional<std::map<std::tuple<std::string, std::string, std::string, std::string>, rational>> bcf;
  std::size_t k = 1;
};

inline validation_report validate_plithogenic(const plithogenic_spec& s) {
  validation_report r;
  auto zero = filled_degree(s.k, 0);
  auto adf = [&](const std::string& v, const std::string& a) -> degree {
    auto it = s.adf.find({v, a});
    return it == s.adf.end() ? zero : it->second;
  };
  auto acf = [&](const std::string& a, const std::string& b) -> rational {
    auto it = s.acf.find({a, b});
    return it == s.acf.end() ? rational(0) : it->second;
  };
  auto bcf = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) -> rational {
    if (!s.bcf) return std::min(acf(a, c), acf(b, d));
    auto it = s.bcf->find({a, b, c, d});
    return it == s.bcf->end() ? rational(0) : it->second;
  };
  auto box = [&](const degree& d) {
    if (d.size() != s.k) return false;
    for (const auto& x : d.c)
      if (x < 0 || x > 1) return false;
    return true;
  };
  for (const auto& [key, d] : s.adf)
    if (!box(d)) r.add(key.first, "adf-range", key.second);
  for (const auto& [key, d] : s.bdf)
    if (!box(d)) r.add("{" + std::get<0>(key) + "," + std::get<1>(key) + "}", "bdf-range");

  // (A1) edge attribute degree bounded by its endpoints' attribute degrees
  for (const auto& [x, y] : s.edges)
    for (const auto& a : s.values)
      for (const auto& b : s.values) {
        auto it = s.bdf.find({x, y, a, b});
        if (it == s.bdf.end()) continue;
        if (!componentwise_leq(it->second, componentwise_min(adf(x, a), adf(y, b))))
          r.add("{" + x + "," + y + "}", "A1", "(" + a + "," + b + ")");
      }
  // (A2) edge contradiction bounded by vertex contradictions
  for (const auto& a : s.values)
    for (const auto& b : s.values)
      for (const auto& c : s.values)
        for (const auto& d : s.values)
          if (bcf(a, b, c, d) > std::min(acf(a, c), acf(b, d)))
            r.add("(" + a + "," + b + "),(" + c + "," + d + ")", "A2");
  // (A3) zero diagonal and symmetry for both contradiction maps
  for (const auto& a : s.values) {
    if (acf(a, a) != 0) r.add("(" + a + "," + a + ")", "A3", "vertex contradiction diagonal");
    for (const auto& b : s.values)
      if (a < b && acf(a, b) != acf(b, a)) r.add("(" + a + "," + b + ")", "A3", "vertex contradiction symmetry");
  }
  for (const auto& [key, x] : s.acf)
    if (x < 0 || x > 1) r.add("(" + key.first + "," + key.second + ")", "A3", "contradiction outside [0,1]");
  if (s.bcf) {
    for (const auto& a : s.values)
      for (const auto& b : s.values) {
        if (bcf(a, b, a, b) != 0) r.add("(" + a + "," + b + ")", "A3", "edge contradiction diagonal");
        for (const auto& c : s.values)
          for (const auto& d : s.values)
            if (std::tie(a, b) < std::tie(c, d) && bcf(a, b, c, d) != bcf(c, d, a, b))
              r.add("(" + a + "," + b + "),(" + c + "," + d + ")", "A3", "edge contradiction symmetry");
      }
  }
  return r;
}

}  // namespace ugt
