#pragma once

#include "ugt/oracles/oracles.hpp"
#include "ugt/params/params.hpp"
#include "ugt/structure/classes.hpp"
#include "ugt/structure/density.hpp"

namespace ugt::oracle {

// Runs the oracle and the library computation for the same question and records
// whether they match exactly.
inline report checked_parameter(const uncertain_graph& g, kind k, const options& opt = {}) {
  report r = oracle_parameter(g, k, opt);
  auto variant = opt.effective_edge ? domination_variant::effective_edge : domination_variant::strong_arc;
  switch (k) {
    case kind::domination: r.agrees = r.value == domination_number(g, variant).value; break;
    case kind::secure_domination: r.agrees = r.value == domination_number(g, variant, true).value; break;
    case kind::independence: r.agrees = r.value == independence_number(g).value; break;
    case kind::matching: r.agrees = r.value == matching_number(g).value; break;
    case kind::vertex_cover: r.agrees = r.value == vertex_cover_number(g).value; break;
    case kind::chromatic: r.agrees = r.value == chromatic_number(g).value; break;
    case kind::treewidth: r.agrees = r.value == treewidth(g).value; break;
    case kind::threshold: r.agrees = r.value == find_threshold(g); break;
    case kind::balanced: {
      auto conv = opt.diagonal_pairs ? density_convention::distinct_plus_diagonal : density_convention::distinct_only;
      auto d = density_balanced(g, conv);
      r.agrees = r.value == d.densest && r.balanced == d.balanced;
      break;
    }
  }
  return r;
}

}  // namespace ugt::oracle
