#pragma once

#include <cstdint>
#include <vector>

#include "ugt/core/graph.hpp"

namespace ugt {

// Which vertex pairs enter the density denominator.
enum class density_convention { distinct_plus_diagonal, distinct_only };

inline constexpr std::size_t balanced_cap = 8;

struct density_result {
  rational density;
  rational densest;  // largest density over nonempty subgraphs
  bool balanced = false;
};

namespace detail {

inline rational pair_capacity(const model& m, const degree& a, const degree& b) {
  return m.evaluate(eval_map::delta, componentwise_min(a, b));
}

// Density of the subgraph on `verts` using every support edge among them.
// Returns false when the denominator vanishes.
inline bool induced_density(const uncertain_graph& g, const std::vector<std::size_t>& verts,
                            const std::vector<std::vector<bool>>& edge, density_convention conv, rational& out) {
  const model& m = g.m();
  rational num = 0, den = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (conv == density_convention::distinct_plus_diagonal)
      den += pair_capacity(m, g.sigma(verts[i]), g.sigma(verts[i]));
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      den += pair_capacity(m, g.sigma(verts[i]), g.sigma(verts[j]));
      if (edge[verts[i]][verts[j]]) num += m.evaluate(eval_map::delta, g.eta(verts[i], verts[j]));
    }
  }
  if (den == 0) return false;
  out = 2 * num / den;
  return true;
}

}  // namespace detail

inline rational density(const uncertain_graph& g, density_convention conv = density_convention::distinct_plus_diagonal) {
  auto s = support(g);
  if (s.vertices.empty()) throw invalid_argument("density needs a nonempty support");
  std::vector<std::vector<bool>> edge(g.n(), std::vector<bool>(g.n(), false));
  for (auto [a, b] : s.edges) edge[a][b] = edge[b][a] = true;
  rational d;
  if (!detail::induced_density(g, s.vertices, edge, conv, d))
    throw invalid_argument("density denominator is zero under this convention");
  return d;
}

// Balanced iff no nonempty subgraph is denser than the whole graph. For a fixed
// vertex set the densest edge choice keeps every induced support edge, so only
// vertex subsets are enumerated.
inline density_result density_balanced(const uncertain_graph& g,
                                       density_convention conv = density_convention::distinct_plus_diagonal) {
  auto s = support(g);
  density_result r;
  r.density = density(g, conv);
  const auto& vs = s.vertices;
  if (vs.size() > balanced_cap) throw size_cap_exceeded("balanced check", balanced_cap, vs.size());
  std::vector<std::vector<bool>> edge(g.n(), std::vector<bool>(g.n(), false));
  for (auto [a, b] : s.edges) edge[a][b] = edge[b][a] = true;
  r.densest = r.density;
  for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1u) sub.push_back(vs[i]);
    rational d;
    if (detail::induced_density(g, sub, edge, conv, d) && d > r.densest) r.densest = d;
  }
  r.balanced = r.densest == r.density;
  return r;
}

}  // namespace ugt
