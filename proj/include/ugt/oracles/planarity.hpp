#pragma once

#include <functional>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/core/graph.hpp"

namespace ugt::oracle {

inline constexpr std::size_t planarity_cap = 8;

// Planar iff there is no K5 or K3,3 minor. Each vertex is either deleted or put in
// one of t branch sets (labels in restricted-growth order); a labeling with t
// nonempty connected branch sets and the right set adjacencies is a minor.
inline bool oracle_planar(const uncertain_graph& g) {
  const model& m = g.m();
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (!m.is_zero(g.sigma(v))) vs.push_back(v);
  const std::size_t n = vs.size();
  if (n > planarity_cap) throw size_cap_exceeded("oracle planarity", planarity_cap, n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = i != j && !m.is_zero(g.eta(vs[i], vs[j]));

  auto has_minor = [&](std::size_t t, bool bipartite) {
    std::vector<int> label(n, -1);
    auto check = [&] {
      // branch sets connected
      for (std::size_t b = 0; b < t; ++b) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
          if (label[i] == static_cast<int>(b)) members.push_back(i);
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{members[0]};
        seen[members[0]] = true;
        std::size_t count = 0;
        while (!stack.empty()) {
          auto x = stack.back();
          stack.pop_back();
          ++count;
          for (auto y : members)
            if (!seen[y] && adj[x][y]) {
              seen[y] = true;
              stack.push_back(y);
            }
        }
        if (count != members.size()) return false;
      }
      std::vector<std::vector<bool>> touch(t, std::vector<bool>(t, false));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (adj[i][j] && label[i] >= 0 && label[j] >= 0) touch[label[i]][label[j]] = true;
      if (!bipartite) {
        for (std::size_t a = 0; a < t; ++a)
          for (std::size_t b = a + 1; b < t; ++b)
            if (!touch[a][b]) return false;
        return true;
      }
      // any split of the six sets into two triples with all cross pairs touching
      for (unsigned side = 0; side < (1u << t); ++side) {
        if (__builtin_popcount(side) != 3 || !(side & 1u)) continue;
        bool ok = true;
        for (std::size_t a = 0; a < t && ok; ++a)
          for (std::size_t b = 0; b < t && ok; ++b)
            if ((side >> a & 1u) && !(side >> b & 1u)) ok = touch[a][b];
        if (ok) return true;
      }
      return false;
    };
    std::function<bool(std::size_t, int)> go = [&](std::size_t i, int used) {
      if (i == n) return used == static_cast<int>(t) && check();
      for (int l = -1; l <= used && l < static_cast<int>(t); ++l) {
        label[i] = l;
        if (go(i + 1, l == used ? used + 1 : used)) return true;
      }
      label[i] = -1;
      return false;
    };
    return go(0, 0);
  };
  return !has_minor(5, false) && !has_minor(6, true);
}

}  // namespace ugt::oracle
