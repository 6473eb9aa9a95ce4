#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "ugt/core/graph.hpp"

namespace ugt::crisp {

// Small crisp helpers over host-indexed adjacency lists restricted to a vertex mask.

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> bfs_hops(const std::vector<std::vector<std::size_t>>& adj, std::size_t src) {
  std::vector<std::size_t> d(adj.size(), unreachable);
  std::queue<std::size_t> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto w : adj[u])
      if (d[w] == unreachable) {
        d[w] = d[u] + 1;
        q.push(w);
      }
  }
  return d;
}

// Connectivity of the support graph over its own vertex set (empty counts as disconnected).
inline bool connected(const support_graph& s) {
  if (s.vertices.empty()) return false;
  auto d = bfs_hops(s.adj, s.vertices.front());
  for (auto v : s.vertices)
    if (d[v] == unreachable) return false;
  return true;
}

// Adjacency restricted to a set of host edges.
inline std::vector<std::vector<std::size_t>> adjacency(std::size_t n, const std::vector<vertex_pair>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

// Bitmask adjacency over a compacted vertex list (size <= 32).
struct mask_graph {
  std::vector<std::size_t> host;   // compact index -> host index
  std::vector<std::uint32_t> nbr;  // compact adjacency masks

  std::size_t size() const { return host.size(); }
};

inline mask_graph compact(const support_graph& s, const std::vector<vertex_pair>& edges) {
  mask_graph m;
  m.host = s.vertices;
  std::vector<std::size_t> pos(s.n, unreachable);
  for (std::size_t i = 0; i < m.host.size(); ++i) pos[m.host[i]] = i;
  m.nbr.assign(m.host.size(), 0);
  for (auto [a, b] : edges) {
    if (pos[a] == unreachable || pos[b] == unreachable) continue;
    m.nbr[pos[a]] |= 1u << pos[b];
    m.nbr[pos[b]] |= 1u << pos[a];
  }
  return m;
}

}  // namespace ugt::crisp
