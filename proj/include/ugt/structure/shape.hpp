#pragma once

#include <optional>
#include <vector>

#include "ugt/core/graph.hpp"
#include "ugt/structure/crisp.hpp"
#include "ugt/structure/metrics.hpp"

namespace ugt {

inline constexpr std::size_t hamiltonian_cap = 12;

struct star_witness {
  std::size_t center;
  std::vector<std::size_t> leaves;
};

struct wheel_witness {
  std::size_t hub;
  std::vector<std::size_t> rim;  // in cycle order
};

struct shape_report {
  bool connected = false;
  bool complete = false;
  std::optional<star_witness> star;
  std::optional<wheel_witness> wheel;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> bipartite;
  std::optional<rational> regular;
  bool eulerian = false;
  bool hamiltonian_decided = false;
  bool hamiltonian = false;
  std::vector<std::size_t> hamiltonian_cycle;
};

namespace detail {

// Ordered traversal of a 2-regular connected vertex set; empty if not a single cycle.
inline std::vector<std::size_t> cycle_order(const std::vector<std::size_t>& verts,
                                            const std::vector<std::vector<std::size_t>>& adj,
                                            const std::vector<bool>& keep) {
  if (verts.size() < 3) return {};
  auto nbrs = [&](std::size_t v) {
    std::vector<std::size_t> r;
    for (auto w : adj[v])
      if (keep[w]) r.push_back(w);
    std::sort(r.begin(), r.end());
    return r;
  };
  for (auto v : verts)
    if (nbrs(v).size() != 2) return {};
  std::vector<std::size_t> order{verts.front()};
  std::size_t prev = verts.front(), cur = nbrs(verts.front())[0];
  while (cur != verts.front()) {
    order.push_back(cur);
    auto nb = nbrs(cur);
    std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (order.size() > verts.size()) return {};
  }
  if (order.size() != verts.size()) return {};
  return order;
}

inline bool hamiltonian_search(const support_graph& s, std::vector<std::size_t>& cycle) {
  const auto& vs = s.vertices;
  if (vs.size() < 3) return false;
  std::vector<bool> used(s.n, false);
  cycle.assign(1, vs.front());
  used[vs.front()] = true;
  auto extend = [&](auto&& self) -> bool {
    std::size_t last = cycle.back();
    if (cycle.size() == vs.size()) return s.adjacent(last, vs.front());
    std::vector<std::size_t> nb = s.adj[last];
    std::sort(nb.begin(), nb.end());
    for (auto w : nb) {
      if (used[w]) continue;
      used[w] = true;
      cycle.push_back(w);
      if (self(self)) return true;
      cycle.pop_back();
      used[w] = false;
    }
    return false;
  };
  if (extend(extend)) return true;
  cycle.clear();
  return false;
}

}  // namespace detail

inline shape_report shape(const uncertain_graph& g) {
  auto s = support(g);
  shape_report r;
  const std::size_t nv = s.vertices.size();
  r.connected = crisp::connected(s);
  r.complete = nv >= 1 && s.edges.size() == nv * (nv - 1) / 2;

  // star K_{1,m}, m >= 1; the smallest qualifying index is the center
  if (r.connected && nv >= 2 && s.edges.size() == nv - 1) {
    for (auto c : s.vertices)
      if (s.adj[c].size() == nv - 1) {
        star_witness w{c, {}};
        for (auto v : s.vertices)
          if (v != c) w.leaves.push_back(v);
        r.star = w;
        break;
      }
  }

  // wheel K_1 + C_m, m >= 3
  if (r.connected && nv >= 4 && s.edges.size() == 2 * (nv - 1)) {
    for (auto h : s.vertices) {
      if (s.adj[h].size() != nv - 1) continue;
      std::vector<bool> keep = s.in_support;
      keep[h] = false;
      std::vector<std::size_t> rest;
      for (auto v : s.vertices)
        if (v != h) rest.push_back(v);
      auto order = detail::cycle_order(rest, s.adj, keep);
      if (!order.empty()) {
        r.wheel = wheel_witness{h, order};
        break;
      }
    }
  }

  // bipartition with both parts nonempty
  if (nv >= 2) {
    std::vector<int> side(s.n, -1);
    bool ok = true;
    std::vector<std::size_t> roots;
    for (auto v : s.vertices) {
      if (side[v] != -1) continue;
      roots.push_back(v);
      side[v] = 0;
      std::vector<std::size_t> stack{v};
      while (!stack.empty() && ok) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : s.adj[x]) {
          if (side[y] == -1) {
            side[y] = 1 - side[x];
            stack.push_back(y);
          } else if (side[y] == side[x]) {
            ok = false;
          }
        }
      }
    }
    if (ok) {
      bool has_one = false;
      for (auto v : s.vertices) has_one = has_one || side[v] == 1;
      if (!has_one) side[roots.back()] = 1;  // edgeless: put the last isolated vertex on the other side
      std::vector<std::size_t> a, b;
      for (auto v : s.vertices) (side[v] == 0 ? a : b).push_back(v);
      r.bipartite = std::make_pair(a, b);
    }
  }

  if (nv >= 1) {
    auto d = degree_order_size(g);
    rational first = d.vertex_degree[s.vertices.front()];
    bool same = true;
    for (auto v : s.vertices) same = same && d.vertex_degree[v] == first;
    if (same) r.regular = first;
  }

  bool even = true;
  for (auto v : s.vertices) even = even && s.adj[v].size() % 2 == 0;
  r.eulerian = r.connected && even;

  if (nv <= hamiltonian_cap) {
    r.hamiltonian_decided = true;
    r.hamiltonian = detail::hamiltonian_search(s, r.hamiltonian_cycle);
  }
  return r;
}

}  // namespace ugt
