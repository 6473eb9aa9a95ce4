#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ugt/core/graph.hpp"
#include "ugt/structure/crisp.hpp"
#include "ugt/structure/cycles.hpp"

namespace ugt {

inline constexpr std::size_t threshold_cap = 16;

struct class_result {
  bool holds = true;
  std::vector<std::string> failures;  // offending vertices or pairs

  void fail(std::string where) {
    holds = false;
    failures.push_back(std::move(where));
  }
};

inline class_result check_clique(const uncertain_graph& g, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw invalid_argument("clique check needs a nonempty subset");
  const model& m = g.m();
  class_result r;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      std::size_t u = subset[a], v = subset[b];
      if (u == v) throw invalid_argument("clique subset repeats a vertex");
      if (g.eta(u, v) != m.combine(combine_op::complete_edge, g.sigma(u), g.sigma(v))) r.fail(g.pair_name(u, v));
    }
  return r;
}

inline class_result check_complete(const uncertain_graph& g) {
  if (g.n() == 0) return {};
  std::vector<std::size_t> all(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) all[i] = i;
  return check_clique(g, all);
}

inline class_result check_dombi(const uncertain_graph& g) {
  const model& m = g.m();
  class_result r;
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v)
      if (!m.leq(g.eta(u, v), m.combine(combine_op::dombi, g.sigma(u), g.sigma(v)))) r.fail(g.pair_name(u, v));
  return r;
}

inline class_result check_product(const uncertain_graph& g) {
  class_result r;
  for (auto [u, v] : g.nonzero_pairs()) {
    const degree &e = g.eta(u, v), &a = g.sigma(u), &b = g.sigma(v);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > a[i] * b[i]) {
        r.fail(g.pair_name(u, v));
        break;
      }
  }
  return r;
}

// Injective vertex labels, injective edge labels, disjoint label sets, and
// every edge label strictly below both endpoint labels.
inline class_result check_labeling(const uncertain_graph& g) {
  const model& m = g.m();
  class_result r;
  std::set<degree, degree_lex_less> vertex_labels, edge_labels;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (!vertex_labels.insert(g.sigma(v)).second) r.fail(g.id(v));
  for (auto [u, v] : g.nonzero_pairs()) {
    const degree& e = g.eta(u, v);
    if (!edge_labels.insert(e).second) r.fail(g.pair_name(u, v));
    if (vertex_labels.count(e)) r.fail(g.pair_name(u, v));
    if (!m.less(e, g.sigma(u)) || !m.less(e, g.sigma(v))) r.fail(g.pair_name(u, v));
  }
  return r;
}

// The chosen edges (kept at their full degree) must form a spanning tree of the support graph.
inline class_result check_spanning_tree(const uncertain_graph& g, const std::vector<vertex_pair>& tree_edges) {
  auto s = support(g);
  class_result r;
  if (!crisp::connected(s)) {
    r.fail("support graph is disconnected");
    return r;
  }
  std::vector<vertex_pair> f;
  for (auto [a, b] : tree_edges) {
    auto e = ordered_pair(a, b);
    if (std::find(s.edges.begin(), s.edges.end(), e) == s.edges.end())
      r.fail(g.pair_name(e.first, e.second));
    else
      f.push_back(e);
  }
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) r.fail("repeated edge");
  if (r.holds && !detail::spans_as_tree(s, f)) r.fail("edges do not form a spanning tree of the support");
  return r;
}

namespace detail {

struct subset_weights {
  std::vector<rational> weight;  // per subset mask of all vertices
  std::vector<bool> stable;
};

inline subset_weights enumerate_subsets(const uncertain_graph& g) {
  const std::size_t n = g.n();
  if (n > threshold_cap) throw size_cap_exceeded("threshold check", threshold_cap, n);
  const model& m = g.m();
  auto s = support(g);
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [a, b] : s.edges) {
    nbr[a] |= 1u << b;
    nbr[b] |= 1u << a;
  }
  std::vector<rational> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = m.evaluate(eval_map::omega, g.sigma(i));
  subset_weights out;
  const std::uint32_t total = 1u << n;
  out.weight.assign(total, 0);
  out.stable.assign(total, true);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctz(mask));
    std::uint32_t rest = mask & (mask - 1);
    out.weight[mask] = out.weight[rest] + w[low];
    out.stable[mask] = out.stable[rest] && (nbr[low] & rest) == 0;
  }
  return out;
}

}  // namespace detail

inline class_result check_threshold(const uncertain_graph& g, const rational& t) {
  if (t < 0) throw invalid_argument("threshold must be nonnegative");
  auto sw = detail::enumerate_subsets(g);
  class_result r;
  for (std::size_t mask = 0; mask < sw.weight.size(); ++mask)
    if ((sw.weight[mask] <= t) != sw.stable[mask]) {
      std::string name = "{";
      for (std::size_t i = 0; i < g.n(); ++i)
        if (mask >> i & 1u) name += (name.size() > 1 ? "," : "") + g.id(i);
      r.fail(name + "}");
      break;
    }
  return r;
}

// The largest stable weight, when it lies strictly below every unstable weight.
inline std::optional<rational> find_threshold(const uncertain_graph& g) {
  auto sw = detail::enumerate_subsets(g);
  std::optional<rational> max_stable, min_unstable;
  for (std::size_t mask = 0; mask < sw.weight.size(); ++mask) {
    if (sw.stable[mask]) {
      if (!max_stable || sw.weight[mask] > *max_stable) max_stable = sw.weight[mask];
    } else if (!min_unstable || sw.weight[mask] < *min_unstable) {
      min_unstable = sw.weight[mask];
    }
  }
  if (min_unstable && !(*max_stable < *min_unstable)) return std::nullopt;
  return max_stable;
}

}  // namespace ugt
