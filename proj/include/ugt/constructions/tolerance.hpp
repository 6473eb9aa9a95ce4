#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "ugt/core/graph.hpp"

namespace ugt {

// Trapezoidal fuzzy interval: support [a,d], core [b,c].
struct trapezoid {
  rational a, b, c, d;

  void check() const {
    if (!(a <= b && b <= c && c <= d)) throw invalid_argument("trapezoid breakpoints must satisfy a <= b <= c <= d");
  }
  rational support_length() const { return d - a; }
  rational core_length() const { return c - b; }
};

inline rational overlap(const rational& lo1, const rational& hi1, const rational& lo2, const rational& hi2) {
  rational len = std::min(hi1, hi2) - std::max(lo1, lo2);
  return len > 0 ? len : rational(0);
}

// Core and support lengths of the pointwise minimum of two trapezoids.
inline rational core_overlap(const trapezoid& x, const trapezoid& y) { return overlap(x.b, x.c, y.b, y.c); }
inline rational support_overlap(const trapezoid& x, const trapezoid& y) { return overlap(x.a, x.d, y.a, y.d); }

// Membership between two interval/tolerance pairs. The middle branch ratio is at
// least 1 whenever it applies, so it is clamped to the unit interval.
inline rational tolerance_degree(const trapezoid& ii, const trapezoid& ij, const trapezoid& ti, const trapezoid& tj) {
  rational core = core_overlap(ii, ij), supp = support_overlap(ii, ij);
  rational core_tol = std::min(ti.core_length(), tj.core_length());
  rational supp_tol = std::min(ti.support_length(), tj.support_length());
  if (core >= core_tol) return 1;
  if (supp >= supp_tol) return std::min(rational(1), rational(supp / supp_tol));
  return 0;
}

// Fuzzy graph on v1..vn with unit vertex degrees.
inline uncertain_graph tolerance_graph(const std::vector<trapezoid>& intervals, const std::vector<trapezoid>& tolerances) {
  if (intervals.size() != tolerances.size())
    throw invalid_argument("tolerance graph: interval and tolerance lists differ in length");
  for (const auto& t : intervals) t.check();
  for (std::size_t i = 0; i < tolerances.size(); ++i) {
    tolerances[i].check();
    if (tolerances[i].core_length() <= 0)
      throw invalid_argument("tolerance graph: tolerance " + std::to_string(i + 1) + " has an empty core");
  }
  auto m = std::make_shared<const model>(make_model(model_kind::fuzzy));
  graph_builder b(m, constraint_profile::fuzzy_cap);
  const std::size_t n = intervals.size();
  for (std::size_t i = 0; i < n; ++i) b.vertex("v" + std::to_string(i + 1), m->unit());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      rational mu = tolerance_degree(intervals[i], intervals[j], tolerances[i], tolerances[j]);
      if (mu != 0) b.edge("v" + std::to_string(i + 1), "v" + std::to_string(j + 1), degree(std::vector<rational>{mu}));
    }
  return b.build();
}

}  // namespace ugt
