#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/params/result.hpp"

namespace ugt {

inline constexpr std::size_t treewidth_cap = 10;

namespace detail {

// Every support edge must fit inside a bag holding both endpoints at full degree.
inline void require_edge_coverage(const uncertain_graph& g, const support_graph& s) {
  const model& m = g.m();
  for (auto [a, b] : s.edges)
    if (!m.leq(g.eta(a, b), m.combine(combine_op::complete_edge, g.sigma(a), g.sigma(b))))
      throw invalid_argument("edge " + g.pair_name(a, b) + " exceeds the join of its endpoint degrees; no decomposition covers it");
}

inline rational bag_weight(const std::vector<std::size_t>& bag, const std::vector<rational>& w) {
  rational t = 0;
  for (auto v : bag) t += w[v];
  return t;
}

// Tree of bags from an elimination ordering; bags swallowed by a neighbour are merged away.
inline tree_decomposition decomposition_from_order(const support_graph& s, const std::vector<std::size_t>& order) {
  const std::size_t k = order.size();
  tree_decomposition td;
  if (k == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::size_t> rank(s.n, 0);
  for (std::size_t i = 0; i < k; ++i) rank[order[i]] = i;
  std::vector<std::vector<bool>> fill(s.n, std::vector<bool>(s.n, false));
  for (auto [a, b] : s.edges) fill[a][b] = fill[b][a] = true;
  std::vector<std::vector<std::size_t>> later(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t v = order[i];
    for (std::size_t j = i + 1; j < k; ++j)
      if (fill[v][order[j]]) later[i].push_back(order[j]);
    for (auto a : later[i])
      for (auto b : later[i])
        if (a != b) fill[a][b] = true;
  }
  std::vector<std::vector<std::size_t>> bags(k);
  std::vector<std::size_t> parent(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    bags[i] = later[i];
    bags[i].push_back(order[i]);
    std::sort(bags[i].begin(), bags[i].end());
    std::size_t first = k;
    for (auto u : later[i]) first = std::min(first, rank[u]);
    parent[i] = first != k ? first : (i + 1 < k ? i + 1 : k);
  }
  // Contract tree edges whose bags nest, keeping the larger bag.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < k; ++i)
    if (parent[i] != k) edges.emplace_back(i, parent[i]);
  std::vector<bool> alive(k, true);
  auto nested = [&](std::size_t x, std::size_t y) {
    return std::includes(bags[y].begin(), bags[y].end(), bags[x].begin(), bags[x].end());
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < edges.size() && !changed; ++e) {
      auto [x, y] = edges[e];
      if (!nested(x, y) && !nested(y, x)) continue;
      std::size_t keep = nested(x, y) ? y : x, drop = keep == y ? x : y;
      alive[drop] = false;
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
      for (auto& [a, b] : edges) {
        if (a == drop) a = keep;
        if (b == drop) b = keep;
      }
      changed = true;
    }
  }
  std::vector<std::size_t> index(k, k);
  for (std::size_t i = 0; i < k; ++i)
    if (alive[i]) {
      index[i] = td.bags.size();
      td.bags.push_back(bags[i]);
    }
  for (auto [x, y] : edges) td.tree.emplace_back(index[x], index[y]);
  return td;
}

}  // namespace detail

// Checks the four decomposition rules for two-valued bags.
inline std::string decomposition_failure(const uncertain_graph& g, const tree_decomposition& td) {
  const model& m = g.m();
  auto s = support(g);
  const std::size_t t = td.bags.size();
  if (t == 0) return "no bags";
  if (td.tree.size() != t - 1) return "bag tree has the wrong number of edges";
  std::vector<std::vector<std::size_t>> adj(t);
  for (auto [a, b] : td.tree) {
    if (a >= t || b >= t || a == b) return "bad tree edge";
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto reach_all = [&](const std::vector<bool>& allowed) {
    std::size_t start = t, count = 0, want = 0;
    for (std::size_t i = 0; i < t; ++i)
      if (allowed[i]) {
        ++want;
        if (start == t) start = i;
      }
    if (want == 0) return true;
    std::vector<bool> seen(t, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      ++count;
      for (auto y : adj[x])
        if (allowed[y] && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    return count == want;
  };
  if (!reach_all(std::vector<bool>(t, true))) return "bag tree is disconnected";
  for (const auto& bag : td.bags)
    for (auto v : bag)
      if (v >= g.n() || !s.in_support[v]) return "bag holds a vertex outside the support";
  for (auto v : s.vertices) {
    std::vector<bool> holds(t, false);
    bool any = false;
    for (std::size_t i = 0; i < t; ++i)
      if (std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end()) holds[i] = any = true;
    if (!any) return "vertex " + g.id(v) + " is in no bag";
    if (!reach_all(holds)) return "bags holding " + g.id(v) + " are not connected";
  }
  for (auto [a, b] : s.edges) {
    bool covered = false;
    for (const auto& bag : td.bags)
      covered = covered || (std::find(bag.begin(), bag.end(), a) != bag.end() &&
                            std::find(bag.begin(), bag.end(), b) != bag.end());
    if (!covered) return "edge " + g.pair_name(a, b) + " is in no bag";
    if (!m.leq(g.eta(a, b), m.combine(combine_op::complete_edge, g.sigma(a), g.sigma(b))))
      return "edge " + g.pair_name(a, b) + " exceeds its bag join";
  }
  return {};
}

inline rational decomposition_width(const uncertain_graph& g, const tree_decomposition& td) {
  auto w = detail::omega_weights(g);
  rational best = 0;
  bool first = true;
  for (const auto& bag : td.bags) {
    rational b = detail::bag_weight(bag, w);
    if (first || b > best) best = b;
    first = false;
  }
  return best - 1;
}

// Minimum over decompositions of the heaviest bag weight, minus one. Dynamic
// programming over the set of already eliminated support vertices.
inline param_result treewidth(const uncertain_graph& g) {
  auto s = support(g);
  const auto& vs = s.vertices;
  const std::size_t k = vs.size();
  if (k > treewidth_cap) throw size_cap_exceeded("treewidth", treewidth_cap, k);
  detail::require_edge_coverage(g, s);
  auto w = detail::omega_weights(g);
  if (k == 0) return {rational(-1), detail::decomposition_from_order(s, {}), true};

  std::vector<std::size_t> pos(g.n(), 0);
  for (std::size_t i = 0; i < k; ++i) pos[vs[i]] = i;
  std::vector<std::uint32_t> nbr(k, 0);
  for (auto [a, b] : s.edges) {
    nbr[pos[a]] |= 1u << pos[b];
    nbr[pos[b]] |= 1u << pos[a];
  }
  // Neighbours of v outside done, reachable from v through done.
  auto frontier = [&](std::uint32_t done, std::size_t v) {
    std::uint32_t seen = 1u << v, stack = 1u << v, out = 0;
    while (stack) {
      std::size_t x = static_cast<std::size_t>(__builtin_ctz(stack));
      stack &= stack - 1;
      for (std::uint32_t m = nbr[x] & ~seen; m; m &= m - 1) {
        std::size_t y = static_cast<std::size_t>(__builtin_ctz(m));
        seen |= 1u << y;
        if (done >> y & 1u) stack |= 1u << y;
        else out |= 1u << y;
      }
    }
    return out;
  };

  const std::uint32_t total = 1u << k;
  std::vector<rational> best(total);
  std::vector<std::size_t> choice(total, k);
  std::vector<bool> set(total, false);
  set[0] = true;
  best[0] = 0;  // bag weights are nonnegative, so this never wins the max
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    for (std::size_t v = 0; v < k; ++v) {
      if (!(mask >> v & 1u)) continue;
      std::uint32_t prev = mask & ~(1u << v);
      rational bag = w[vs[v]];
      for (std::uint32_t q = frontier(prev, v); q; q &= q - 1) bag += w[vs[static_cast<std::size_t>(__builtin_ctz(q))]];
      rational cand = best[prev] > bag ? best[prev] : bag;
      if (!set[mask] || cand < best[mask]) {
        best[mask] = cand;
        choice[mask] = v;
        set[mask] = true;
      }
    }
  }
  std::vector<std::size_t> order(k);
  std::uint32_t mask = total - 1;
  for (std::size_t i = k; i-- > 0;) {
    order[i] = vs[choice[mask]];
    mask &= ~(1u << choice[mask]);
  }
  return {best[total - 1] - 1, detail::decomposition_from_order(s, order), true};
}

}  // namespace ugt
