#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/params/result.hpp"

namespace ugt {

inline constexpr std::size_t chromatic_cap = 15;

struct crisp_coloring {
  std::size_t colors = 0;
  std::vector<std::size_t> color;
};

// Exact coloring: DSATUR branching, pruned by the best count found and a greedy clique bound.
inline crisp_coloring exact_coloring(const std::vector<std::uint32_t>& nbr) {
  const std::size_t n = nbr.size();
  crisp_coloring best;
  if (n == 0) return best;

  // Greedy clique in index order for a lower bound.
  std::size_t clique = 0;
  for (std::size_t start = 0; start < n; ++start) {
    std::uint32_t cand = nbr[start], members = 1;
    while (cand) {
      std::uint32_t v = static_cast<std::uint32_t>(__builtin_ctz(cand));
      ++members;
      cand &= nbr[v];
    }
    clique = std::max<std::size_t>(clique, members);
  }

  best.colors = n + 1;
  std::vector<std::size_t> color(n, n);  // n = uncolored
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t done, std::size_t used) {
    if (used >= best.colors || best.colors == clique) return;
    if (done == n) {
      best.colors = used;
      best.color = color;
      return;
    }
    std::size_t pick = n, pick_sat = 0, pick_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != n) continue;
      std::uint32_t seen = 0;
      std::size_t deg = 0;
      for (std::uint32_t m = nbr[v]; m; m &= m - 1) {
        std::size_t w = static_cast<std::size_t>(__builtin_ctz(m));
        if (color[w] != n) seen |= 1u << color[w];
        else ++deg;
      }
      std::size_t sat = static_cast<std::size_t>(__builtin_popcount(seen));
      if (pick == n || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    for (std::size_t c = 0; c <= used && c < best.colors - 1; ++c) {
      bool clash = false;
      for (std::uint32_t m = nbr[pick]; m && !clash; m &= m - 1)
        clash = color[static_cast<std::size_t>(__builtin_ctz(m))] == c;
      if (clash) continue;
      color[pick] = c;
      go(done + 1, std::max(used, c + 1));
      color[pick] = n;
    }
  };
  go(0, 0);
  return best;
}

// Realized nonzero vertex and edge degrees, ascending in the model order, without repeats.
inline std::vector<degree> realized_levels(const uncertain_graph& g) {
  const model& m = g.m();
  std::vector<degree> levels;
  auto add = [&](const degree& d) {
    if (m.is_zero(d)) return;
    for (const auto& x : levels)
      if (x == d) return;
    levels.push_back(d);
  };
  for (const auto& s : g.sigmas()) add(s);
  for (auto [a, b] : g.nonzero_pairs()) add(g.eta(a, b));
  std::sort(levels.begin(), levels.end(), [&](const degree& a, const degree& b) { return m.less(a, b); });
  return levels;
}

// Chromatic number of the crisp cut at one level.
inline level_coloring cut_chromatic(const uncertain_graph& g, const degree& level) {
  const model& m = g.m();
  level_coloring out;
  out.level = level;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (m.leq(level, g.sigma(v))) out.vertices.push_back(v);
  if (out.vertices.size() > chromatic_cap) throw size_cap_exceeded("chromatic", chromatic_cap, out.vertices.size());
  const std::size_t k = out.vertices.size();
  std::vector<std::uint32_t> nbr(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const degree& e = g.eta(out.vertices[i], out.vertices[j]);
      if (!m.is_zero(e) && m.leq(level, e)) {
        nbr[i] |= 1u << j;
        nbr[j] |= 1u << i;
      }
    }
  auto c = exact_coloring(nbr);
  out.colors = c.colors;
  out.color = c.color;
  return out;
}

inline bool is_proper_coloring(const uncertain_graph& g, const level_coloring& lc) {
  const model& m = g.m();
  if (lc.color.size() != lc.vertices.size()) return false;
  std::set<std::size_t> used(lc.color.begin(), lc.color.end());
  if (used.size() != lc.colors) return false;
  for (std::size_t i = 0; i < lc.vertices.size(); ++i) {
    if (!m.leq(lc.level, g.sigma(lc.vertices[i]))) return false;
    for (std::size_t j = i + 1; j < lc.vertices.size(); ++j) {
      const degree& e = g.eta(lc.vertices[i], lc.vertices[j]);
      if (!m.is_zero(e) && m.leq(lc.level, e) && lc.color[i] == lc.color[j]) return false;
    }
  }
  return true;
}

// Maximum chromatic number over all realized level cuts; zero when no level exists.
inline param_result chromatic_number(const uncertain_graph& g) {
  coloring_witness w;
  std::size_t best = 0;
  for (const auto& level : realized_levels(g)) {
    auto lc = cut_chromatic(g, level);
    if (lc.colors > best) {
      best = lc.colors;
      w.levels.clear();
    }
    if (lc.colors == best && best > 0) w.levels.push_back(std::move(lc));
  }
  return {rational(static_cast<long>(best)), std::move(w), true};
}

}  // namespace ugt
