#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/core/graph.hpp"

namespace ugt {

struct spectrum {
  std::vector<double> eigenvalues;  // ascending
  double energy = 0;
  std::vector<std::vector<double>> matrix;
};

inline constexpr double jacobi_tolerance = 1e-12;
inline constexpr int jacobi_max_sweeps = 100;

inline std::vector<std::vector<double>> adjacency_matrix(const uncertain_graph& g) {
  const model& m = g.m();
  std::vector<std::vector<double>> a(g.n(), std::vector<double>(g.n(), 0.0));
  for (auto [i, j] : g.nonzero_pairs()) a[i][j] = a[j][i] = to_double(m.evaluate(eval_map::phi, g.eta(i, j)));
  return a;
}

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below the tolerance.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };
  int sweep = 0;
  while (off_norm() > jacobi_tolerance) {
    if (sweep++ == jacobi_max_sweeps) throw not_converged("Jacobi rotations did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline spectrum spectrum_energy(const uncertain_graph& g) {
  spectrum out;
  out.matrix = adjacency_matrix(g);
  out.eigenvalues = symmetric_eigenvalues(out.matrix);
  for (double x : out.eigenvalues) out.energy += std::fabs(x);
  return out;
}

}  // namespace ugt
