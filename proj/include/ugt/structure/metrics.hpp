#pragma once

#include <optional>
#include <vector>

#include "ugt/core/graph.hpp"
#include "ugt/structure/crisp.hpp"

namespace ugt {

struct degree_summary {
  std::vector<rational> vertex_degree;  // host-indexed; zero outside the support
  rational order;
  rational size;
};

inline degree_summary degree_order_size(const uncertain_graph& g) {
  const model& m = g.m();
  auto s = support(g);
  degree_summary r;
  r.vertex_degree.assign(g.n(), 0);
  r.order = 0;
  r.size = 0;
  for (std::size_t i = 0; i < g.n(); ++i) r.order += m.evaluate(eval_map::delta, g.sigma(i));
  for (auto [a, b] : s.edges) {
    rational w = m.evaluate(eval_map::delta, g.eta(a, b));
    r.vertex_degree[a] += w;
    r.vertex_degree[b] += w;
    r.size += w;
  }
  return r;
}

struct metric_report {
  std::vector<std::size_t> vertices;           // support vertices, host indices
  std::vector<std::vector<rational>> distance;  // indexed like `vertices`
  std::vector<rational> eccentricity;
  rational radius;
  rational diameter;

  const rational& d(std::size_t host_a, std::size_t host_b) const {
    return distance[pos(host_a)][pos(host_b)];
  }
  std::size_t pos(std::size_t host) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == host) return i;
    throw invalid_argument("vertex is not in the support");
  }
};

// Single-source shortest paths over support edges with edge-length weights.
inline std::vector<std::optional<rational>> shortest_lengths(const uncertain_graph& g, const support_graph& s,
                                                             std::size_t src) {
  const model& m = g.m();
  std::vector<std::optional<rational>> dist(g.n());
  std::vector<bool> done(g.n(), false);
  dist[src] = rational(0);
  for (;;) {
    std::size_t pick = crisp::unreachable;
    for (auto v : s.vertices)
      if (!done[v] && dist[v] && (pick == crisp::unreachable || *dist[v] < *dist[pick])) pick = v;
    if (pick == crisp::unreachable) break;
    done[pick] = true;
    for (auto w : s.adj[pick]) {
      rational cand = *dist[pick] + m.evaluate(eval_map::lambda_len, g.eta(pick, w));
      if (!dist[w] || cand < *dist[w]) dist[w] = cand;
    }
  }
  return dist;
}

inline metric_report metrics(const uncertain_graph& g) {
  auto s = support(g);
  if (s.vertices.empty()) throw invalid_argument("metrics need a nonempty support");
  if (!crisp::connected(s)) throw disconnected("support graph is disconnected");
  metric_report r;
  r.vertices = s.vertices;
  const std::size_t n = s.vertices.size();
  r.distance.assign(n, std::vector<rational>(n, 0));
  r.eccentricity.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto dist = shortest_lengths(g, s, s.vertices[i]);
    for (std::size_t j = 0; j < n; ++j) {
      r.distance[i][j] = *dist[s.vertices[j]];
      if (r.distance[i][j] > r.eccentricity[i]) r.eccentricity[i] = r.distance[i][j];
    }
  }
  r.radius = *std::min_element(r.eccentricity.begin(), r.eccentricity.end());
  r.diameter = *std::max_element(r.eccentricity.begin(), r.eccentricity.end());
  return r;
}

}  // namespace ugt
