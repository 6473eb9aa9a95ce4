#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ugt/core/graph.hpp"

namespace ugt {

struct vertex_set {
  std::vector<std::size_t> members;
};

struct edge_set {
  std::vector<vertex_pair> edges;
};

// Proper coloring of one level cut.
struct level_coloring {
  degree level;
  std::size_t colors = 0;
  std::vector<std::size_t> vertices;  // host indices in the cut
  std::vector<std::size_t> color;     // parallel to vertices
};

struct coloring_witness {
  std::vector<level_coloring> levels;  // every attaining level
};

// Two-valued bags: a listed vertex carries its full vertex degree, others carry zero.
struct tree_decomposition {
  std::vector<std::vector<std::size_t>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree;
};

struct interval_bounds {
  rational lower, upper;
};

using param_witness = std::variant<std::monostate, vertex_set, edge_set, coloring_witness, tree_decomposition,
                                   interval_bounds>;

struct param_result {
  rational value;
  param_witness witness;
  bool exact = true;
};

namespace detail {

inline std::vector<std::size_t> mask_members(std::uint64_t mask, const std::vector<std::size_t>& universe) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (mask >> i & 1u) r.push_back(universe[i]);
  return r;
}

inline std::vector<rational> omega_weights(const uncertain_graph& g) {
  std::vector<rational> w(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) w[i] = g.m().evaluate(eval_map::omega, g.sigma(i));
  return w;
}

// Keep the candidate when it improves the value, or ties it with a lexicographically smaller witness.
template <class T, class Better>
bool take_candidate(std::optional<std::pair<rational, T>>& best, const rational& value, const T& witness,
                    Better better) {
  if (!best || better(value, best->first) || (value == best->first && witness < best->second)) {
    best.emplace(value, witness);
    return true;
  }
  return false;
}

}  // namespace detail

}  // namespace ugt
