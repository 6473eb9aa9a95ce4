#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/params/result.hpp"
#include "ugt/structure/paths.hpp"

namespace ugt {

inline constexpr std::size_t independence_cap = 20;
inline constexpr std::size_t matching_edge_cap = 20;
inline constexpr std::size_t vertex_cover_cap = 20;

inline bool is_independent(const std::vector<vertex_pair>& forbidden, const std::vector<std::size_t>& set) {
  for (auto [a, b] : forbidden) {
    bool ina = std::find(set.begin(), set.end(), a) != set.end();
    bool inb = std::find(set.begin(), set.end(), b) != set.end();
    if (ina && inb) return false;
  }
  return true;
}

// Maximum weight of a support vertex set with no strong support edge inside.
inline param_result independence_number(const uncertain_graph& g) {
  if (g.n() > independence_cap) throw size_cap_exceeded("independence", independence_cap, g.n());
  auto s = support(g);
  auto w = detail::omega_weights(g);
  const auto& vs = s.vertices;
  std::vector<std::size_t> pos(g.n(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  std::vector<std::uint32_t> conflict(vs.size(), 0);
  for (auto [a, b] : strong_edges(g, strength_variant::geq_conn)) {
    conflict[pos[a]] |= 1u << pos[b];
    conflict[pos[b]] |= 1u << pos[a];
  }
  // Suffix weights bound what the remaining vertices can still add.
  std::vector<rational> rest(vs.size() + 1, 0);
  for (std::size_t i = vs.size(); i-- > 0;) rest[i] = rest[i + 1] + w[vs[i]];

  std::optional<std::pair<rational, std::vector<std::size_t>>> best;
  std::function<void(std::size_t, std::uint32_t, const rational&)> go = [&](std::size_t i, std::uint32_t chosen,
                                                                          const rational& acc) {
    if (best && acc + rest[i] < best->first) return;
    if (i == vs.size()) {
      detail::take_candidate(best, acc, detail::mask_members(chosen, vs), std::greater<rational>());
      return;
    }
    if ((conflict[i] & chosen) == 0) go(i + 1, chosen | (1u << i), acc + w[vs[i]]);
    go(i + 1, chosen, acc);
  };
  go(0, 0, rational(0));
  return {best->first, vertex_set{best->second}, true};
}

inline bool is_matching(const uncertain_graph& g, const std::vector<vertex_pair>& edges) {
  const model& m = g.m();
  std::vector<rational> load(g.n(), 0);
  for (auto [a, b] : edges) {
    if (m.is_zero(g.eta(a, b))) return false;
    rational d = m.evaluate(eval_map::delta_edge, g.eta(a, b));
    load[a] += d;
    load[b] += d;
  }
  for (std::size_t v = 0; v < g.n(); ++v)
    if (load[v] > m.evaluate(eval_map::omega, g.sigma(v))) return false;
  return true;
}

// Maximum total edge weight subject to each vertex's load staying within its own weight.
inline param_result matching_number(const uncertain_graph& g) {
  const model& m = g.m();
  auto s = support(g);
  const auto& es = s.edges;
  if (es.size() > matching_edge_cap) throw size_cap_exceeded("matching", matching_edge_cap, es.size());
  auto cap = detail::omega_weights(g);
  std::vector<rational> ew(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) ew[i] = m.evaluate(eval_map::delta_edge, g.eta(es[i].first, es[i].second));
  std::vector<rational> rest(es.size() + 1, 0);
  for (std::size_t i = es.size(); i-- > 0;) rest[i] = rest[i + 1] + ew[i];

  std::vector<rational> load(g.n(), 0);
  std::vector<vertex_pair> chosen;
  std::optional<std::pair<rational, std::vector<vertex_pair>>> best;
  std::function<void(std::size_t, const rational&)> go = [&](std::size_t i, const rational& acc) {
    if (best && acc + rest[i] < best->first) return;
    if (i == es.size()) {
      detail::take_candidate(best, acc, chosen, std::greater<rational>());
      return;
    }
    auto [a, b] = es[i];
    if (load[a] + ew[i] <= cap[a] && load[b] + ew[i] <= cap[b]) {
      load[a] += ew[i];
      load[b] += ew[i];
      chosen.push_back(es[i]);
      go(i + 1, acc + ew[i]);
      chosen.pop_back();
      load[a] -= ew[i];
      load[b] -= ew[i];
    }
    go(i + 1, acc);
  };
  go(0, rational(0));
  return {best->first, edge_set{best->second}, true};
}

inline bool is_vertex_cover(const uncertain_graph& g, const std::vector<std::size_t>& set) {
  auto s = support(g);
  for (auto v : set)
    if (v >= g.n() || !s.in_support[v]) return false;
  return std::all_of(s.edges.begin(), s.edges.end(), [&](vertex_pair e) {
           return std::find(set.begin(), set.end(), e.first) != set.end() ||
                  std::find(set.begin(), set.end(), e.second) != set.end();
         });
}

// Minimum weight support vertex set touching every support edge. Branches on an
// uncovered edge, which reaches every inclusion-minimal cover.
inline param_result vertex_cover_number(const uncertain_graph& g) {
  auto s = support(g);
  if (s.vertices.size() > vertex_cover_cap) throw size_cap_exceeded("vertex cover", vertex_cover_cap, s.vertices.size());
  auto w = detail::omega_weights(g);
  std::vector<bool> in(g.n(), false);
  std::optional<std::pair<rational, std::vector<std::size_t>>> best;
  std::function<void(const rational&)> go = [&](const rational& acc) {
    if (best && acc > best->first) return;
    const vertex_pair* open = nullptr;
    for (const auto& e : s.edges)
      if (!in[e.first] && !in[e.second]) {
        open = &e;
        break;
      }
    if (!open) {
      std::vector<std::size_t> members;
      for (auto v : s.vertices)
        if (in[v]) members.push_back(v);
      detail::take_candidate(best, acc, members, std::less<rational>());
      return;
    }
    for (auto v : {open->first, open->second}) {
      in[v] = true;
      go(acc + w[v]);
      in[v] = false;
    }
  };
  go(rational(0));
  return {best->first, vertex_set{best->second}, true};
}

}  // namespace ugt
