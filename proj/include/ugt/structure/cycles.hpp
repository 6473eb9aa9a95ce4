#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ugt/core/graph.hpp"
#include "ugt/structure/crisp.hpp"

namespace ugt {

inline constexpr std::size_t tree_search_edge_cap = 16;
inline constexpr std::size_t cycle_enumeration_cap = 12;

struct cycle_witness {
  std::vector<std::size_t> sequence;  // u0..u_{n-1}, closing edge implied
  std::vector<vertex_pair> edges;     // sorted
  std::vector<vertex_pair> weakest;   // sorted
};

// Accepts the sequence with or without the repeated closing vertex.
inline cycle_witness support_cycle(const uncertain_graph& g, std::vector<std::size_t> seq) {
  if (seq.size() >= 2 && seq.front() == seq.back()) seq.pop_back();
  if (seq.size() < 3) throw invalid_argument("a cycle needs at least three vertices");
  auto s = support(g);
  std::set<std::size_t> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) throw invalid_argument("cycle vertices must be distinct");
  cycle_witness w;
  w.sequence = seq;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::size_t a = seq[i], b = seq[(i + 1) % seq.size()];
    if (a >= g.n() || b >= g.n() || !s.in_support[a] || !s.in_support[b] || !s.adjacent(a, b))
      throw invalid_argument("sequence is not a cycle of the support graph");
    w.edges.push_back(ordered_pair(a, b));
  }
  std::sort(w.edges.begin(), w.edges.end());
  const model& m = g.m();
  const degree* low = nullptr;
  for (auto [a, b] : w.edges)
    if (!low || m.less(g.eta(a, b), *low)) low = &g.eta(a, b);
  for (auto [a, b] : w.edges)
    if (g.eta(a, b) == *low) w.weakest.push_back({a, b});
  return w;
}

// An uncertain cycle attains its weakest degree on at least two edges.
inline std::pair<bool, cycle_witness> is_uncertain_cycle(const uncertain_graph& g,
                                                         const std::vector<std::size_t>& seq) {
  auto w = support_cycle(g, seq);
  return {w.weakest.size() >= 2, w};
}

// Every simple cycle of the given crisp graph, each listed once, starting at its smallest vertex.
inline std::vector<std::vector<std::size_t>> simple_cycles(const std::vector<std::size_t>& vertices,
                                                           const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> allowed(adj.size(), false), on(adj.size(), false);
  for (auto v : vertices) allowed[v] = true;
  for (auto start : vertices) {
    std::vector<std::size_t> path{start};
    on[start] = true;
    auto walk = [&](auto&& self, std::size_t x) -> void {
      for (auto y : adj[x]) {
        if (!allowed[y] || y < start) continue;
        if (y == start && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        if (on[y]) continue;
        on[y] = true;
        path.push_back(y);
        self(self, y);
        path.pop_back();
        on[y] = false;
      }
    };
    walk(walk, start);
    on[start] = false;
  }
  return out;
}

struct tree_check {
  bool holds = false;
  std::vector<vertex_pair> tree_edges;  // the spanning tree F
};

namespace detail {

inline std::vector<std::size_t> tree_path(std::size_t n, const std::vector<vertex_pair>& tree, std::size_t a,
                                          std::size_t b) {
  auto adj = crisp::adjacency(n, tree);
  std::vector<std::size_t> parent(n, crisp::unreachable);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        stack.push_back(y);
      }
  }
  if (!seen[b]) return {};
  std::vector<std::size_t> p;
  for (auto x = b; x != crisp::unreachable; x = parent[x]) p.push_back(x);
  std::reverse(p.begin(), p.end());
  return p;
}

inline bool spans_as_tree(const support_graph& s, const std::vector<vertex_pair>& f) {
  if (s.vertices.empty() || f.size() + 1 != s.vertices.size()) return false;
  auto adj = crisp::adjacency(s.n, f);
  auto d = crisp::bfs_hops(adj, s.vertices.front());
  for (auto v : s.vertices)
    if (d[v] == crisp::unreachable) return false;
  return true;
}

inline bool tree_conditions(const uncertain_graph& g, const support_graph& s, const std::vector<vertex_pair>& f) {
  if (!spans_as_tree(s, f)) return false;
  const model& m = g.m();
  std::set<vertex_pair> in_f(f.begin(), f.end());
  for (auto e : s.edges) {
    if (in_f.count(e)) continue;
    auto p = tree_path(s.n, f, e.first, e.second);
    std::vector<degree> parts;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) parts.push_back(g.eta(p[i], p[i + 1]));
    if (!m.less(g.eta(e.first, e.second), m.path_strength(parts))) return false;
  }
  return true;
}

}  // namespace detail

// With a witness, checks it; otherwise searches the spanning trees of the support graph.
inline tree_check is_uncertain_tree(const uncertain_graph& g,
                                    const std::optional<std::vector<vertex_pair>>& witness = std::nullopt) {
  auto s = support(g);
  tree_check r;
  if (!crisp::connected(s)) return r;
  if (witness) {
    std::vector<vertex_pair> f;
    for (auto [a, b] : *witness) {
      auto e = ordered_pair(a, b);
      if (std::find(s.edges.begin(), s.edges.end(), e) == s.edges.end())
        throw invalid_argument("witness edge is not a support edge");
      f.push_back(e);
    }
    std::sort(f.begin(), f.end());
    r.holds = detail::tree_conditions(g, s, f);
    if (r.holds) r.tree_edges = f;
    return r;
  }
  const std::size_t m = s.edges.size();
  if (m > tree_search_edge_cap) throw size_cap_exceeded("uncertain tree search", tree_search_edge_cap, m);
  const std::size_t need = s.vertices.size() - 1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != need) continue;
    std::vector<vertex_pair> f;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) f.push_back(s.edges[i]);
    if (detail::tree_conditions(g, s, f)) {
      r.holds = true;
      r.tree_edges = f;
      return r;
    }
  }
  return r;
}

enum class chordality_mode { support, fuzzy_chord };

// Maximum cardinality search followed by a perfect-elimination check.
inline bool crisp_chordal(const support_graph& s) {
  const auto& vs = s.vertices;
  std::vector<std::size_t> weight(s.n, 0), order;
  std::vector<bool> numbered(s.n, false);
  for (std::size_t step = 0; step < vs.size(); ++step) {
    std::size_t pick = crisp::unreachable;
    for (auto v : vs)
      if (!numbered[v] && (pick == crisp::unreachable || weight[v] > weight[pick])) pick = v;
    numbered[pick] = true;
    order.push_back(pick);
    for (auto w : s.adj[pick])
      if (!numbered[w]) ++weight[w];
  }
  // reverse of the visit order is a perfect elimination ordering iff chordal
  std::vector<std::size_t> pos(s.n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (auto v : vs) {
    // earlier-visited neighbours must form a clique with the latest of them
    std::size_t parent = crisp::unreachable;
    for (auto w : s.adj[v])
      if (pos[w] < pos[v] && (parent == crisp::unreachable || pos[w] > pos[parent])) parent = w;
    if (parent == crisp::unreachable) continue;
    for (auto w : s.adj[v])
      if (pos[w] < pos[v] && w != parent && !s.adjacent(parent, w)) return false;
  }
  return true;
}

inline bool chordality(const uncertain_graph& g, chordality_mode mode) {
  auto s = support(g);
  if (mode == chordality_mode::support) return crisp_chordal(s);
  if (s.vertices.size() > cycle_enumeration_cap)
    throw size_cap_exceeded("cycle enumeration", cycle_enumeration_cap, s.vertices.size());
  const model& m = g.m();
  for (const auto& c : simple_cycles(s.vertices, s.adj)) {
    if (c.size() < 4) continue;
    const degree* low = nullptr;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const degree& e = g.eta(c[i], c[(i + 1) % c.size()]);
      if (!low || m.less(e, *low)) low = &e;
    }
    bool found = false;
    for (std::size_t j = 0; j < c.size() && !found; ++j)
      for (std::size_t k = j + 2; k < c.size() && !found; ++k) {
        if (j == 0 && k == c.size() - 1) continue;
        if (s.adjacent(c[j], c[k]) && m.leq(*low, g.eta(c[j], c[k]))) found = true;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace ugt
