#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/params/result.hpp"
#include "ugt/structure/paths.hpp"

namespace ugt {

enum class domination_variant { strong_arc, effective_edge };

inline domination_variant parse_domination_variant(const std::string& s) {
  if (s == "strong_arc") return domination_variant::strong_arc;
  if (s == "effective_edge") return domination_variant::effective_edge;
  throw invalid_argument("unknown domination variant: " + s);
}

inline const char* to_string(domination_variant v) {
  return v == domination_variant::strong_arc ? "strong_arc" : "effective_edge";
}

inline constexpr std::size_t domination_cap = 16;

// dominates[u][v]: u dominates v under the chosen variant.
inline std::vector<std::vector<bool>> domination_relation(const uncertain_graph& g, domination_variant variant) {
  const model& m = g.m();
  std::vector<std::vector<bool>> rel(g.n(), std::vector<bool>(g.n(), false));
  if (variant == domination_variant::strong_arc) {
    for (auto [a, b] : strong_edges(g, strength_variant::eq_conn)) {
      if (m.leq(g.sigma(b), g.sigma(a))) rel[a][b] = true;
      if (m.leq(g.sigma(a), g.sigma(b))) rel[b][a] = true;
    }
  } else {
    for (auto [a, b] : g.nonzero_pairs())
      if (g.eta(a, b) == m.combine(combine_op::complete_edge, g.sigma(a), g.sigma(b))) rel[a][b] = rel[b][a] = true;
  }
  return rel;
}

inline bool is_dominating(const std::vector<std::vector<bool>>& rel, const std::vector<std::size_t>& set) {
  const std::size_t n = rel.size();
  std::vector<bool> in(n, false);
  for (auto v : set) in[v] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (in[x]) continue;
    bool covered = false;
    for (auto y : set) covered = covered || rel[y][x];
    if (!covered) return false;
  }
  return true;
}

inline bool is_secure_dominating(const uncertain_graph& g, const std::vector<std::vector<bool>>& rel,
                                 const std::vector<std::size_t>& set) {
  if (!is_dominating(rel, set)) return false;
  std::vector<bool> in(g.n(), false);
  for (auto v : set) in[v] = true;
  for (std::size_t x = 0; x < g.n(); ++x) {
    if (in[x]) continue;
    bool ok = false;
    for (std::size_t k = 0; k < set.size() && !ok; ++k) {
      std::size_t y = set[k];
      if (g.m().is_zero(g.eta(x, y))) continue;
      auto swapped = set;
      swapped[k] = x;
      ok = is_dominating(rel, swapped);
    }
    if (!ok) return false;
  }
  return true;
}

// Minimum total vertex weight of a (secure) dominating set.
inline param_result domination_number(const uncertain_graph& g, domination_variant variant, bool secure = false) {
  const std::size_t n = g.n();
  if (n > domination_cap) throw size_cap_exceeded(secure ? "secure domination" : "domination", domination_cap, n);
  auto rel = domination_relation(g, variant);
  auto w = detail::omega_weights(g);

  std::vector<std::uint32_t> reach(n, 0);  // vertices covered by choosing v
  for (std::size_t v = 0; v < n; ++v) {
    reach[v] = 1u << v;
    for (std::size_t x = 0; x < n; ++x)
      if (rel[v][x]) reach[v] |= 1u << x;
  }
  std::vector<std::uint32_t> nonzero(n, 0);
  for (auto [a, b] : g.nonzero_pairs()) {
    nonzero[a] |= 1u << b;
    nonzero[b] |= 1u << a;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  const std::uint32_t total = 1u << n;
  std::vector<std::uint32_t> covered(total, 0);
  std::vector<rational> weight(total);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::uint32_t low = static_cast<std::uint32_t>(__builtin_ctz(mask));
    covered[mask] = covered[mask & (mask - 1)] | reach[low];
    weight[mask] = weight[mask & (mask - 1)] + w[low];
  }
  auto dominating = [&](std::uint32_t mask) { return covered[mask] == full; };
  auto secure_ok = [&](std::uint32_t mask) {
    for (std::size_t x = 0; x < n; ++x) {
      if (mask >> x & 1u) continue;
      bool ok = false;
      for (std::uint32_t ys = mask & nonzero[x]; ys && !ok; ys &= ys - 1) {
        std::uint32_t y = static_cast<std::uint32_t>(__builtin_ctz(ys));
        ok = dominating((mask & ~(1u << y)) | (1u << x));
      }
      if (!ok) return false;
    }
    return true;
  };

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::optional<std::pair<rational, std::vector<std::size_t>>> best;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!dominating(mask)) continue;
    if (best && weight[mask] > best->first) continue;
    if (secure && !secure_ok(mask)) continue;
    detail::take_candidate(best, weight[mask], detail::mask_members(mask, all), std::less<rational>());
  }
  // V itself always qualifies, so best is set.
  return {best->first, vertex_set{best->second}, true};
}

}  // namespace ugt
