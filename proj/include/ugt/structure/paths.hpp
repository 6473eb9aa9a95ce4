#pragma once

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ugt/core/graph.hpp"
#include "ugt/structure/crisp.hpp"

namespace ugt {

enum class strength_variant { geq_without_edge, eq_conn, geq_conn };

inline strength_variant parse_strength_variant(const std::string& s) {
  if (s == "geq_without_edge") return strength_variant::geq_without_edge;
  if (s == "eq_conn") return strength_variant::eq_conn;
  if (s == "geq_conn") return strength_variant::geq_conn;
  throw invalid_argument("unknown strong-edge variant '" + s + "'");
}

struct connectedness {
  degree strength;
  std::vector<std::size_t> path;  // a strongest path, host indices
};

namespace detail {

inline bool uses_scalar_bottleneck(const model& m) {
  const auto& o = m.overrides();
  return m.k() == 1 && !o.delta && !o.path_strength;
}

inline std::vector<std::vector<std::size_t>> support_adjacency_without(const support_graph& s,
                                                                        std::optional<vertex_pair> removed) {
  std::vector<vertex_pair> edges;
  for (auto e : s.edges)
    if (!removed || e != ordered_pair(removed->first, removed->second)) edges.push_back(e);
  return crisp::adjacency(s.n, edges);
}

inline std::optional<connectedness> widest_path(const uncertain_graph& g,
                                                const std::vector<std::vector<std::size_t>>& adj, std::size_t u,
                                                std::size_t v) {
  const std::size_t n = g.n();
  std::vector<std::optional<rational>> best(n);
  std::vector<std::size_t> parent(n, crisp::unreachable);
  std::vector<bool> done(n, false);
  using item = std::pair<rational, std::size_t>;
  auto worse = [](const item& a, const item& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<item, std::vector<item>, decltype(worse)> pq(worse);
  best[u] = rational(2);  // above any degree
  pq.push({*best[u], u});
  while (!pq.empty()) {
    auto [b, x] = pq.top();
    pq.pop();
    if (done[x]) continue;
    done[x] = true;
    if (x == v) break;
    for (auto y : adj[x]) {
      if (done[y]) continue;
      rational cand = std::min(b, g.eta(x, y)[0]);
      if (!best[y] || cand > *best[y]) {
        best[y] = cand;
        parent[y] = x;
        pq.push({cand, y});
      }
    }
  }
  if (!done[v]) return std::nullopt;
  connectedness c;
  for (std::size_t x = v; x != crisp::unreachable; x = parent[x]) c.path.push_back(x);
  std::reverse(c.path.begin(), c.path.end());
  c.strength = degree(std::vector<rational>{*best[v]});
  return c;
}

inline std::optional<connectedness> enumerate_paths(const uncertain_graph& g,
                                                    const std::vector<std::vector<std::size_t>>& adj,
                                                    std::size_t u, std::size_t v) {
  const model& m = g.m();
  const bool incremental = !m.overrides().path_strength;
  std::optional<connectedness> best;
  std::vector<bool> on(g.n(), false);
  std::vector<std::size_t> path{u};
  std::vector<degree> parts;
  on[u] = true;
  auto visit = [&](auto&& self, std::size_t x, const degree* running) -> void {
    for (auto y : adj[x]) {
      if (on[y]) continue;
      const degree& e = g.eta(x, y);
      degree next = running ? componentwise_min(*running, e) : e;
      parts.push_back(e);
      path.push_back(y);
      if (y == v) {
        degree s = incremental ? next : m.path_strength(parts);
        if (!best || m.less(best->strength, s)) best = connectedness{s, path};
      } else {
        on[y] = true;
        self(self, y, &next);
        on[y] = false;
      }
      path.pop_back();
      parts.pop_back();
    }
  };
  visit(visit, u, nullptr);
  return best;
}

}  // namespace detail

// Strength of connectedness: the order-maximum path strength over simple
// support paths, optionally with one edge removed. Throws no_path.
inline connectedness conn_strength(const uncertain_graph& g, std::size_t u, std::size_t v,
                                   std::optional<vertex_pair> deleted = std::nullopt) {
  auto s = support(g);
  if (u >= g.n() || v >= g.n()) throw invalid_argument("vertex index out of range");
  if (u == v) throw invalid_argument("strength of connectedness needs distinct vertices");
  if (!s.in_support[u] || !s.in_support[v])
    throw invalid_argument("strength of connectedness needs support vertices");
  auto adj = detail::support_adjacency_without(s, deleted);
  auto r = detail::uses_scalar_bottleneck(g.m()) ? detail::widest_path(g, adj, u, v)
                                                 : detail::enumerate_paths(g, adj, u, v);
  if (!r) throw no_path("no path between " + g.id(u) + " and " + g.id(v));
  return *r;
}

inline connectedness conn_strength(const uncertain_graph& g, const std::string& u, const std::string& v) {
  return conn_strength(g, g.index_of(u), g.index_of(v));
}

inline std::vector<vertex_pair> strong_edges(const uncertain_graph& g, strength_variant variant) {
  auto s = support(g);
  const model& m = g.m();
  std::vector<vertex_pair> out;
  for (auto e : s.edges) {
    const degree& mu = g.eta(e.first, e.second);
    bool strong = false;
    switch (variant) {
      case strength_variant::geq_without_edge:
        try {
          strong = m.leq(conn_strength(g, e.first, e.second, e).strength, mu);
        } catch (const no_path&) {
          strong = true;
        }
        break;
      case strength_variant::eq_conn:
        strong = conn_strength(g, e.first, e.second).strength == mu;
        break;
      case strength_variant::geq_conn:
        strong = m.leq(conn_strength(g, e.first, e.second).strength, mu);
        break;
    }
    if (strong) out.push_back(e);
  }
  return out;
}

}  // namespace ugt
