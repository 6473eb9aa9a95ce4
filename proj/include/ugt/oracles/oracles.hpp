#pragma once

// Brute-force references. Everything here is transcribed straight from the
// definitions over full enumeration and uses only the core headers, so a bug in a
// solver cannot be mirrored here.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/core/graph.hpp"

namespace ugt::oracle {

enum class kind { domination, secure_domination, independence, matching, vertex_cover, chromatic, treewidth, balanced, threshold };

inline const char* to_string(kind k) {
  switch (k) {
    case kind::domination: return "domination";
    case kind::secure_domination: return "secure_domination";
    case kind::independence: return "independence";
    case kind::matching: return "matching";
    case kind::vertex_cover: return "vertex_cover";
    case kind::chromatic: return "chromatic";
    case kind::treewidth: return "treewidth";
    case kind::balanced: return "balanced";
    case kind::threshold: return "threshold";
  }
  return "?";
}

inline kind parse_kind(const std::string& s) {
  for (auto k : {kind::domination, kind::secure_domination, kind::independence, kind::matching, kind::vertex_cover,
                 kind::chromatic, kind::treewidth, kind::balanced, kind::threshold})
    if (s == to_string(k)) return k;
  throw invalid_argument("unknown oracle kind: " + s);
}

inline constexpr std::size_t general_cap = 8;
inline constexpr std::size_t small_cap = 7;  // chromatic and treewidth

struct report {
  kind what;
  // Exhaustive value. For threshold, empty when no threshold exists. For balanced,
  // the largest density over all subgraphs (balanced iff it equals the graph's own).
  std::optional<rational> value;
  bool balanced = false;  // balanced only
  std::uint64_t enumerated = 0;
  std::optional<bool> agrees;  // filled in by the comparison helper
};

inline report make_report(kind k) {
  report r{};
  r.what = k;
  return r;
}

struct options {
  bool effective_edge = false;    // domination: effective edges instead of strong arcs
  bool diagonal_pairs = true;     // balanced: count each vertex with itself in the denominator
};

namespace detail {

struct plain {
  const uncertain_graph& g;
  const model& m;
  std::vector<std::size_t> support_vertices;
  std::vector<std::pair<std::size_t, std::size_t>> support_edges;

  explicit plain(const uncertain_graph& graph) : g(graph), m(graph.m()) {
    for (std::size_t v = 0; v < g.n(); ++v)
      if (!m.is_zero(g.sigma(v))) support_vertices.push_back(v);
    for (std::size_t a = 0; a < g.n(); ++a)
      for (std::size_t b = a + 1; b < g.n(); ++b)
        if (!m.is_zero(g.sigma(a)) && !m.is_zero(g.sigma(b)) && !m.is_zero(g.eta(a, b))) support_edges.push_back({a, b});
  }

  bool edge(std::size_t a, std::size_t b) const {
    return a != b && !m.is_zero(g.sigma(a)) && !m.is_zero(g.sigma(b)) && !m.is_zero(g.eta(a, b));
  }
  rational weight(std::size_t v) const { return m.evaluate(eval_map::omega, g.sigma(v)); }
  rational weight(const std::vector<std::size_t>& s) const {
    rational t = 0;
    for (auto v : s) t += weight(v);
    return t;
  }
  bool contains(const std::vector<std::size_t>& s, std::size_t v) const {
    return std::find(s.begin(), s.end(), v) != s.end();
  }

  // Best path strength over every simple support path from a to b.
  std::optional<degree> conn(std::size_t a, std::size_t b) const {
    std::optional<degree> best;
    std::vector<std::size_t> path{a};
    std::vector<bool> on(g.n(), false);
    on[a] = true;
    std::function<void(std::size_t)> walk = [&](std::size_t x) {
      if (x == b) {
        std::vector<degree> parts;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) parts.push_back(g.eta(path[i], path[i + 1]));
        degree s = m.path_strength(parts);
        if (!best || m.less(*best, s)) best = s;
        return;
      }
      for (std::size_t y = 0; y < g.n(); ++y)
        if (!on[y] && edge(x, y)) {
          on[y] = true;
          path.push_back(y);
          walk(y);
          path.pop_back();
          on[y] = false;
        }
    };
    walk(a);
    return best;
  }

  // Edge degree at least the best connection between its ends.
  bool strong(std::size_t a, std::size_t b) const {
    if (!edge(a, b)) return false;
    auto c = conn(a, b);
    return m.leq(*c, g.eta(a, b));
  }
};

inline std::vector<std::vector<std::size_t>> all_subsets(const std::vector<std::size_t>& universe) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1u) s.push_back(universe[i]);
    out.push_back(std::move(s));
  }
  return out;
}

inline void require(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) throw size_cap_exceeded(std::string("oracle ") + what, cap, size);
}

inline report domination(const plain& p, bool secure, bool effective) {
  const auto& g = p.g;
  require(g.n(), general_cap, secure ? "secure_domination" : "domination");
  // dominates[y][x]: y dominates x.
  std::vector<std::vector<bool>> dominates(g.n(), std::vector<bool>(g.n(), false));
  for (std::size_t y = 0; y < g.n(); ++y)
    for (std::size_t x = 0; x < g.n(); ++x) {
      if (!p.edge(x, y)) continue;
      if (effective)
        dominates[y][x] = g.eta(x, y) == p.m.combine(combine_op::complete_edge, g.sigma(x), g.sigma(y));
      else
        dominates[y][x] = g.eta(x, y) == *p.conn(x, y) && p.m.leq(g.sigma(x), g.sigma(y));
    }
  auto is_dominating = [&](const std::vector<std::size_t>& s) {
    for (std::size_t x = 0; x < g.n(); ++x) {
      if (p.contains(s, x)) continue;
      bool ok = false;
      for (auto y : s) ok = ok || dominates[y][x];
      if (!ok) return false;
    }
    return true;
  };
  std::vector<std::size_t> all(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) all[i] = i;
  report r = make_report(secure ? kind::secure_domination : kind::domination);
  for (const auto& s : all_subsets(all)) {
    ++r.enumerated;
    if (!is_dominating(s)) continue;
    if (secure) {
      bool ok = true;
      for (std::size_t x = 0; x < g.n() && ok; ++x) {
        if (p.contains(s, x)) continue;
        bool found = false;
        for (auto y : s) {
          if (p.m.is_zero(g.eta(x, y))) continue;
          std::vector<std::size_t> t;
          for (auto z : s)
            if (z != y) t.push_back(z);
          t.push_back(x);
          if (is_dominating(t)) found = true;
        }
        ok = found;
      }
      if (!ok) continue;
    }
    rational w = p.weight(s);
    if (!r.value || w < *r.value) r.value = w;
  }
  return r;
}

inline report independence(const plain& p) {
  require(p.g.n(), general_cap, "independence");
  report r = make_report(kind::independence);
  std::vector<std::vector<bool>> strong(p.g.n(), std::vector<bool>(p.g.n(), false));
  for (auto [a, b] : p.support_edges) strong[a][b] = strong[b][a] = p.strong(a, b);
  for (const auto& s : all_subsets(p.support_vertices)) {
    ++r.enumerated;
    bool ok = true;
    for (auto a : s)
      for (auto b : s)
        if (a < b && strong[a][b]) ok = false;
    if (!ok) continue;
    rational w = p.weight(s);
    if (!r.value || w > *r.value) r.value = w;
  }
  return r;
}

// Every edge subset, visited in Gray-code order so loads change by one edge per step.
inline report matching(const plain& p) {
  require(p.g.n(), general_cap, "matching");
  report r = make_report(kind::matching);
  const auto& es = p.support_edges;
  std::vector<rational> w(es.size()), cap(p.g.n());
  for (std::size_t i = 0; i < es.size(); ++i) w[i] = p.m.evaluate(eval_map::delta_edge, p.g.eta(es[i].first, es[i].second));
  for (std::size_t v = 0; v < p.g.n(); ++v) cap[v] = p.weight(v);
  std::vector<rational> load(p.g.n(), 0);
  rational total = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 0; step < (std::uint64_t{1} << es.size()); ++step) {
    ++r.enumerated;
    if (step > 0) {
      std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(step));
      gray ^= std::uint64_t{1} << bit;
      bool added = gray >> bit & 1u;
      for (auto v : {es[bit].first, es[bit].second}) {
        if (added) load[v] += w[bit];
        else load[v] -= w[bit];
      }
      if (added) total += w[bit];
      else total -= w[bit];
    }
    bool ok = true;
    for (std::size_t v = 0; v < p.g.n() && ok; ++v) ok = load[v] <= cap[v];
    if (ok && (!r.value || total > *r.value)) r.value = total;
  }
  return r;
}

inline report vertex_cover(const plain& p) {
  require(p.g.n(), general_cap, "vertex_cover");
  report r = make_report(kind::vertex_cover);
  for (const auto& s : all_subsets(p.support_vertices)) {
    ++r.enumerated;
    bool ok = true;
    for (auto [a, b] : p.support_edges) ok = ok && (p.contains(s, a) || p.contains(s, b));
    if (!ok) continue;
    rational w = p.weight(s);
    if (!r.value || w < *r.value) r.value = w;
  }
  return r;
}

inline report chromatic(const plain& p) {
  const auto& g = p.g;
  require(g.n(), small_cap, "chromatic");
  report r = make_report(kind::chromatic);
  std::vector<degree> levels;
  auto note = [&](const degree& d) {
    if (!p.m.is_zero(d) && std::find(levels.begin(), levels.end(), d) == levels.end()) levels.push_back(d);
  };
  for (std::size_t v = 0; v < g.n(); ++v) note(g.sigma(v));
  for (std::size_t a = 0; a < g.n(); ++a)
    for (std::size_t b = a + 1; b < g.n(); ++b) note(g.eta(a, b));
  std::size_t best = 0;
  for (const auto& level : levels) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < g.n(); ++v)
      if (p.m.leq(level, g.sigma(v))) vs.push_back(v);
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        const degree& e = g.eta(vs[i], vs[j]);
        if (!p.m.is_zero(e) && p.m.leq(level, e)) es.push_back({i, j});
      }
    // Smallest k admitting a proper coloring, trying every map into k colors.
    std::size_t chi = vs.size();
    for (std::size_t k = vs.empty() ? 0 : 1; k <= vs.size(); ++k) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < vs.size(); ++i) count *= k;
      bool found = false;
      for (std::uint64_t code = 0; code < count; ++code) {
        ++r.enumerated;
        std::vector<std::size_t> color(vs.size());
        std::uint64_t c = code;
        for (auto& x : color) {
          x = c % k;
          c /= k;
        }
        bool proper = true;
        for (auto [a, b] : es) proper = proper && color[a] != color[b];
        if (proper) found = true;
      }
      if (found) {
        chi = k;
        break;
      }
    }
    best = std::max(best, chi);
  }
  r.value = rational(static_cast<long>(best));
  return r;
}

inline report treewidth(const plain& p) {
  const auto& g = p.g;
  require(p.support_vertices.size(), small_cap, "treewidth");
  report r = make_report(kind::treewidth);
  for (auto [a, b] : p.support_edges)
    if (!p.m.leq(g.eta(a, b), p.m.combine(combine_op::complete_edge, g.sigma(a), g.sigma(b))))
      throw invalid_argument("edge " + g.pair_name(a, b) + " cannot be covered by any bag");
  auto order = p.support_vertices;
  if (order.empty()) {
    r.enumerated = 1;
    r.value = rational(-1);
    return r;
  }
  do {
    ++r.enumerated;
    std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
    for (auto [a, b] : p.support_edges) adj[a][b] = adj[b][a] = true;
    std::vector<bool> gone(g.n(), false);
    rational widest = 0;
    for (auto v : order) {
      std::vector<std::size_t> nb;
      for (auto u : order)
        if (!gone[u] && u != v && adj[v][u]) nb.push_back(u);
      rational bag = p.weight(v) + p.weight(nb);
      if (bag > widest) widest = bag;
      for (auto a : nb)
        for (auto b : nb)
          if (a != b) adj[a][b] = true;
      gone[v] = true;
    }
    if (!r.value || widest - 1 < *r.value) r.value = widest - 1;
  } while (std::next_permutation(order.begin(), order.end()));
  return r;
}

// Every pair (vertex subset, edge subset inside it) is a candidate subgraph. Edge
// subsets are walked in Gray-code order so each step changes the numerator by one edge.
inline report balanced(const plain& p, bool diagonal) {
  const auto& g = p.g;
  require(g.n(), general_cap, "balanced");
  if (p.support_vertices.empty()) throw invalid_argument("density needs a nonempty support");
  report r = make_report(kind::balanced);
  auto denominator = [&](const std::vector<std::size_t>& xs) {
    rational den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i; j < xs.size(); ++j)
        if (i != j || diagonal) den += p.m.evaluate(eval_map::delta, componentwise_min(g.sigma(xs[i]), g.sigma(xs[j])));
    return den;
  };
  rational whole_num = 0;
  for (auto [a, b] : p.support_edges) whole_num += p.m.evaluate(eval_map::delta, g.eta(a, b));
  rational whole_den = denominator(p.support_vertices);
  if (whole_den == 0) throw invalid_argument("density denominator is zero");
  rational whole = 2 * whole_num / whole_den;
  for (const auto& xs : all_subsets(p.support_vertices)) {
    if (xs.empty()) continue;
    rational den = denominator(xs);
    std::vector<rational> inside;
    for (auto [a, b] : p.support_edges)
      if (p.contains(xs, a) && p.contains(xs, b)) inside.push_back(p.m.evaluate(eval_map::delta, g.eta(a, b)));
    rational num = 0, top = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t step = 0; step < (std::uint64_t{1} << inside.size()); ++step) {
      ++r.enumerated;
      if (step > 0) {
        std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(step));
        gray ^= std::uint64_t{1} << bit;
        if (gray >> bit & 1u) num += inside[bit];
        else num -= inside[bit];
      }
      if (num > top) top = num;
    }
    if (den == 0) continue;
    rational d = 2 * top / den;
    if (!r.value || d > *r.value) r.value = d;
  }
  r.balanced = *r.value <= whole;
  return r;
}

// Tries every subset weight as the cut-off; the smallest that works is reported.
inline report threshold(const plain& p) {
  const auto& g = p.g;
  require(g.n(), general_cap, "threshold");
  report r = make_report(kind::threshold);
  std::vector<std::size_t> all(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) all[i] = i;
  auto subsets = all_subsets(all);
  std::vector<rational> weight;
  std::vector<bool> stable;
  for (const auto& s : subsets) {
    weight.push_back(p.weight(s));
    bool ok = true;
    for (auto a : s)
      for (auto b : s)
        if (a < b && p.edge(a, b)) ok = false;
    stable.push_back(ok);
  }
  for (const auto& t : weight) {
    bool works = true;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      ++r.enumerated;
      if ((weight[i] <= t) != stable[i]) works = false;
    }
    if (works && (!r.value || t < *r.value)) r.value = t;
  }
  return r;
}

}  // namespace detail

inline report oracle_parameter(const uncertain_graph& g, kind k, const options& opt = {}) {
  detail::plain p(g);
  switch (k) {
    case kind::domination: return detail::domination(p, false, opt.effective_edge);
    case kind::secure_domination: return detail::domination(p, true, opt.effective_edge);
    case kind::independence: return detail::independence(p);
    case kind::matching: return detail::matching(p);
    case kind::vertex_cover: return detail::vertex_cover(p);
    case kind::chromatic: return detail::chromatic(p);
    case kind::treewidth: return detail::treewidth(p);
    case kind::balanced: return detail::balanced(p, opt.diagonal_pairs);
    case kind::threshold: return detail::threshold(p);
  }
  throw invalid_argument("unknown oracle kind");
}

// Heaviest set of support vertices with no support edge inside, ignoring strength.
inline rational support_independence(const uncertain_graph& g) {
  detail::plain p(g);
  detail::require(g.n(), general_cap, "support independence");
  rational best = 0;
  for (const auto& s : detail::all_subsets(p.support_vertices)) {
    bool ok = true;
    for (auto a : s)
      for (auto b : s)
        if (a < b && p.edge(a, b)) ok = false;
    if (ok && p.weight(s) > best) best = p.weight(s);
  }
  return best;
}

}  // namespace ugt::oracle
