#pragma once

#include <cmath>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/structure/metrics.hpp"
#include "ugt/structure/paths.hpp"

namespace ugt {

enum class index_kind { wiener_uncertain, wiener_fuzzy, sombor_uncertain, sombor_fuzzy };

inline index_kind parse_index_kind(const std::string& s) {
  if (s == "wiener_uncertain" || s == "wiener") return index_kind::wiener_uncertain;
  if (s == "wiener_fuzzy") return index_kind::wiener_fuzzy;
  if (s == "sombor_uncertain" || s == "sombor") return index_kind::sombor_uncertain;
  if (s == "sombor_fuzzy") return index_kind::sombor_fuzzy;
  throw invalid_argument("unknown index kind: " + s);
}

inline const char* to_string(index_kind k) {
  switch (k) {
    case index_kind::wiener_uncertain: return "wiener_uncertain";
    case index_kind::wiener_fuzzy: return "wiener_fuzzy";
    case index_kind::sombor_uncertain: return "sombor_uncertain";
    case index_kind::sombor_fuzzy: return "sombor_fuzzy";
  }
  return "?";
}

// Sum over support pairs of weight products times the length-based distance.
inline rational wiener_uncertain(const uncertain_graph& g) {
  auto s = support(g);
  if (s.vertices.size() <= 1) return 0;
  auto r = metrics(g);
  const model& m = g.m();
  rational total = 0;
  for (std::size_t i = 0; i < r.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < r.vertices.size(); ++j)
      total += m.evaluate(eval_map::omega, g.sigma(r.vertices[i])) * m.evaluate(eval_map::omega, g.sigma(r.vertices[j])) *
               r.distance[i][j];
  return total;
}

// Distances along strong edges: fewest hops first, then the lightest total edge score.
inline std::vector<std::vector<std::optional<rational>>> strong_geodesic_weights(const uncertain_graph& g) {
  const model& m = g.m();
  std::vector<std::vector<std::size_t>> adj(g.n());
  for (auto [a, b] : strong_edges(g, strength_variant::geq_without_edge)) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<std::optional<rational>>> out(g.n(), std::vector<std::optional<rational>>(g.n()));
  for (std::size_t src = 0; src < g.n(); ++src) {
    std::vector<std::size_t> hops(g.n(), crisp::unreachable);
    auto& wt = out[src];
    hops[src] = 0;
    wt[src] = rational(0);
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        rational via = *wt[x] + m.evaluate(eval_map::delta, g.eta(x, y));
        if (hops[y] == crisp::unreachable) {
          hops[y] = hops[x] + 1;
          wt[y] = via;
          queue.push_back(y);
        } else if (hops[y] == hops[x] + 1 && via < *wt[y]) {
          wt[y] = via;
        }
      }
    }
  }
  return out;
}

inline rational wiener_fuzzy(const uncertain_graph& g) {
  auto s = support(g);
  auto d = strong_geodesic_weights(g);
  const model& m = g.m();
  rational total = 0;
  for (std::size_t i = 0; i < s.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
      auto u = s.vertices[i], v = s.vertices[j];
      if (!d[u][v]) throw disconnected("no strong path between " + g.id(u) + " and " + g.id(v));
      total += m.evaluate(eval_map::omega, g.sigma(u)) * m.evaluate(eval_map::omega, g.sigma(v)) * *d[u][v];
    }
  return total;
}

// Sum over support edges of the Euclidean norm of the two weighted endpoint degrees.
inline double sombor_index(const uncertain_graph& g) {
  const model& m = g.m();
  auto s = support(g);
  std::vector<rational> deg(g.n(), 0);
  for (auto [a, b] : s.edges) {
    rational d = m.evaluate(eval_map::delta_edge, g.eta(a, b));
    deg[a] += d;
    deg[b] += d;
  }
  double total = 0;
  for (auto [a, b] : s.edges) {
    rational x = m.evaluate(eval_map::omega, g.sigma(a)) * deg[a];
    rational y = m.evaluate(eval_map::omega, g.sigma(b)) * deg[b];
    total += std::sqrt(to_double(x * x + y * y));
  }
  return total;
}

}  // namespace ugt
