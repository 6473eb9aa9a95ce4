#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <vector>

#include "ugt/params/result.hpp"

namespace ugt {

inline bool support_is_planar(const support_graph& s) {
  using crisp_graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  std::vector<std::size_t> pos(s.n, 0);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) pos[s.vertices[i]] = i;
  crisp_graph cg(s.vertices.size());
  for (auto [a, b] : s.edges) boost::add_edge(pos[a], pos[b], cg);
  return boost::boyer_myrvold_planarity_test(cg);
}

// Edge degree relative to the join of its endpoint degrees.
inline rational edge_strength(const uncertain_graph& g, std::size_t a, std::size_t b) {
  const model& m = g.m();
  rational cap = m.evaluate(eval_map::delta, m.combine(combine_op::complete_edge, g.sigma(a), g.sigma(b)));
  if (cap == 0) throw invalid_argument("edge " + g.pair_name(a, b) + " has endpoints with zero joint score");
  return m.evaluate(eval_map::delta, g.eta(a, b)) / cap;
}

// One when the support is planar; otherwise bounds from the convex drawing (lower)
// and from a single cheapest crossing (upper).
inline param_result planarity_value(const uncertain_graph& g) {
  auto s = support(g);
  if (support_is_planar(s)) return {rational(1), std::monostate{}, true};
  const auto& es = s.edges;
  std::vector<rational> strength(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) strength[i] = edge_strength(g, es[i].first, es[i].second);

  std::vector<std::size_t> pos(g.n(), 0);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) pos[s.vertices[i]] = i;
  auto strictly_between = [](std::size_t x, std::size_t lo, std::size_t hi) { return lo < x && x < hi; };
  rational convex_total = 0, cheapest;
  bool have_cheapest = false;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      rational value = (strength[i] + strength[j]) / 2;
      if (!have_cheapest || value < cheapest) cheapest = value;
      have_cheapest = true;
      std::size_t a = pos[es[i].first], b = pos[es[i].second], c = pos[es[j].first], d = pos[es[j].second];
      if (a == c || a == d || b == c || b == d) continue;
      if (strictly_between(c, a, b) != strictly_between(d, a, b)) convex_total += value;
    }
  interval_bounds bounds{1 / (1 + convex_total), 1 / (1 + cheapest)};
  rational lower = bounds.lower;
  return {lower, bounds, false};
}

}  // namespace ugt
