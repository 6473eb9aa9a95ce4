#pragma once

#include <vector>

#include "ugt/core/graph.hpp"
#include "ugt/structure/crisp.hpp"
#include "ugt/structure/paths.hpp"

namespace ugt {

enum class median_mode { support, strong };

inline constexpr std::size_t median_graph_cap = 20;

struct median_result {
  std::vector<std::size_t> members;
  bool singleton = false;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> median_adjacency(const uncertain_graph& g, const support_graph& s,
                                                              median_mode mode) {
  if (mode == median_mode::support) return s.adj;
  return crisp::adjacency(g.n(), strong_edges(g, strength_variant::geq_without_edge));
}

inline median_result median_from_hops(const support_graph& s, const std::vector<std::vector<std::size_t>>& hops,
                                      std::size_t x, std::size_t y, std::size_t z) {
  auto in_interval = [&](std::size_t a, std::size_t b, std::size_t u) {
    return hops[a][b] == hops[a][u] + hops[u][b];
  };
  median_result r;
  for (auto u : s.vertices)
    if (in_interval(x, y, u) && in_interval(x, z, u) && in_interval(y, z, u)) r.members.push_back(u);
  r.singleton = r.members.size() == 1;
  return r;
}

inline std::vector<std::vector<std::size_t>> all_hops(const support_graph& s,
                                                      const std::vector<std::vector<std::size_t>>& adj,
                                                      const std::vector<std::size_t>& sources) {
  std::vector<std::vector<std::size_t>> hops(s.n);
  for (auto v : sources) {
    hops[v] = crisp::bfs_hops(adj, v);
    for (auto w : s.vertices)
      if (hops[v][w] == crisp::unreachable) throw disconnected("median intervals need a connected graph");
  }
  return hops;
}

}  // namespace detail

// Intersection of the three hop-count geodesic intervals.
inline median_result median(const uncertain_graph& g, std::size_t x, std::size_t y, std::size_t z,
                            median_mode mode = median_mode::support) {
  auto s = support(g);
  for (auto v : {x, y, z})
    if (v >= g.n() || !s.in_support[v]) throw invalid_argument("median needs support vertices");
  if (x == y || y == z || x == z) throw invalid_argument("median needs three distinct vertices");
  auto adj = detail::median_adjacency(g, s, mode);
  auto hops = detail::all_hops(s, adj, s.vertices);
  return detail::median_from_hops(s, hops, x, y, z);
}

inline bool is_median_graph(const uncertain_graph& g) {
  auto s = support(g);
  const auto& vs = s.vertices;
  if (vs.size() > median_graph_cap) throw size_cap_exceeded("median graph check", median_graph_cap, vs.size());
  if (vs.empty()) return true;
  if (!crisp::connected(s)) throw disconnected("median graph check needs a connected support");
  auto hops = detail::all_hops(s, s.adj, vs);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      for (std::size_t c = b + 1; c < vs.size(); ++c)
        if (!detail::median_from_hops(s, hops, vs[a], vs[b], vs[c]).singleton) return false;
  return true;
}

}  // namespace ugt
