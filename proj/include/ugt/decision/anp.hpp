#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/core/rational.hpp"

namespace ugt {

// Positive trapezoid a <= b <= c <= d, a > 0. With `inverted` set the number is
// the reciprocal: each alpha-cut [lo, hi] becomes [1/hi, 1/lo].
struct uncertain_number {
  rational a = 1, b = 1, c = 1, d = 1;
  bool inverted = false;

  static uncertain_number crisp(const rational& x) { return {x, x, x, x, false}; }

  void check() const {
    if (!(0 < a && a <= b && b <= c && c <= d))
      throw invalid_argument("uncertain number needs 0 < a <= b <= c <= d");
  }

  uncertain_number inverse() const {
    uncertain_number r = *this;
    r.inverted = !inverted;
    return r;
  }

  std::pair<double, double> cut(double alpha) const {
    double lo = to_double(a) + alpha * to_double(b - a);
    double hi = to_double(d) - alpha * to_double(d - c);
    if (inverted) return {1.0 / hi, 1.0 / lo};
    return {lo, hi};
  }

  bool is_unit() const { return a == 1 && d == 1; }
};

// Geometric mean over alpha in {0, 1/2, 1} of sqrt(lo * hi).
inline double score(const uncertain_number& x) {
  double logsum = 0;
  for (double alpha : {0.0, 0.5, 1.0}) {
    auto [lo, hi] = x.cut(alpha);
    logsum += 0.5 * (std::log(lo) + std::log(hi));
  }
  return std::exp(logsum / 3);
}

using judgment_matrix = std::vector<std::vector<uncertain_number>>;

// Unit diagonal and alpha-cut reciprocity at alpha in {0, 1/2, 1}.
inline void check_judgment(const judgment_matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw invalid_argument("judgment matrix is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw invalid_argument("judgment matrix must be square");
    for (const auto& x : m[r]) x.check();
    if (!m[r][r].is_unit()) throw invalid_argument("judgment diagonal must be the unit number");
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      for (double alpha : {0.0, 0.5, 1.0}) {
        auto [lo, hi] = m[r][s].cut(alpha);
        auto [ilo, ihi] = m[s][r].cut(alpha);
        auto close = [](double x, double y) { return std::fabs(x - y) <= 1e-12 * std::max(1.0, std::fabs(y)); };
        if (!close(ilo, 1.0 / hi) || !close(ihi, 1.0 / lo))
          throw invalid_argument("judgment matrix is not reciprocal at (" + std::to_string(s + 1) + "," +
                                 std::to_string(r + 1) + ")");
      }
}

// Fill the lower triangle with reciprocals of the upper one.
inline judgment_matrix complete_reciprocal(judgment_matrix m) {
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t s = 0; s < r && s < m[r].size(); ++s) m[r][s] = m[s][r].inverse();
  return m;
}

// Normalised Perron vector of a positive matrix by power iteration.
inline std::vector<double> perron_vector(const std::vector<std::vector<double>>& a, double tol = 1e-12,
                                         std::size_t max_steps = 100000) {
  const std::size_t n = a.size();
  std::vector<double> w(n, 1.0 / static_cast<double>(n)), next(n);
  for (std::size_t step = 0; step < max_steps; ++step) {
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0;
      for (std::size_t j = 0; j < n; ++j) next[i] += a[i][j] * w[j];
      total += next[i];
    }
    double diff = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      diff = std::max(diff, std::fabs(next[i] - w[i]));
    }
    w.swap(next);
    if (diff < tol) return w;
  }
  throw not_converged("power iteration did not converge in " + std::to_string(max_steps) + " steps");
}

inline std::vector<double> anp_priorities(const judgment_matrix& m) {
  check_judgment(m);
  const std::size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) a[r][s] = score(m[r][s]);
  return perron_vector(a);
}

using dense_matrix = std::vector<std::vector<double>>;

inline dense_matrix multiply(const dense_matrix& x, const dense_matrix& y) {
  const std::size_t n = x.size();
  dense_matrix z(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  return z;
}

inline double max_difference(const dense_matrix& x, const dense_matrix& y) {
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) d = std::max(d, std::fabs(x[i][j] - y[i][j]));
  return d;
}

// Some power up to n^2 has no zero entry.
inline bool is_primitive(const dense_matrix& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n)), p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = w[i][j] > 0;
  p = base;
  for (std::size_t k = 1; k <= n * n; ++k) {
    bool full = true;
    for (std::size_t i = 0; i < n && full; ++i)
      for (std::size_t j = 0; j < n && full; ++j) full = p[i][j];
    if (full) return true;
    std::vector<std::vector<bool>> q(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m)
        if (p[i][m])
          for (std::size_t j = 0; j < n; ++j)
            if (base[m][j]) q[i][j] = true;
    p = std::move(q);
  }
  return false;
}

struct limit_result {
  dense_matrix limit;
  bool primitive = false;
};

// Every column must sum to 1 within 1e-9; a zero column names an uninfluenced element.
inline void check_column_stochastic(const dense_matrix& w, const std::vector<std::string>& names = {}) {
  const std::size_t n = w.size();
  for (const auto& row : w)
    if (row.size() != n) throw invalid_argument("supermatrix must be square");
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i][j] < 0) throw invalid_argument("supermatrix has a negative entry");
      s += w[i][j];
    }
    std::string who = j < names.size() ? names[j] : "column " + std::to_string(j + 1);
    if (s == 0) throw invalid_argument(who + " is influenced by no cluster");
    if (std::fabs(s - 1) > 1e-9) throw invalid_argument(who + " does not sum to 1");
  }
}

// Primitive: limit of plain powers. Otherwise the Cesaro limit, taken as the
// limit of powers of (I + W)/2, which has the same fixed projector and converges
// geometrically. Both by repeated squaring.
inline limit_result anp_limit_matrix(const dense_matrix& w, double tol = 1e-12, std::size_t max_squarings = 64) {
  check_column_stochastic(w);
  const std::size_t n = w.size();
  limit_result r;
  r.primitive = is_primitive(w);
  dense_matrix m = w;
  if (!r.primitive)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = (w[i][j] + (i == j ? 1.0 : 0.0)) / 2;
  for (std::size_t k = 0; k < max_squarings; ++k) {
    dense_matrix next = multiply(m, m);
    double diff = max_difference(next, m);
    m = std::move(next);
    if (diff < tol) {
      r.limit = std::move(m);
      return r;
    }
  }
  throw not_converged("supermatrix powers did not stabilise");
}

struct anp_cluster {
  std::string name;
  std::vector<std::string> elements;
};

// Comparison of the elements of `source` with respect to one element of a target cluster.
struct element_judgment {
  std::string source;
  std::string target_element;
  judgment_matrix matrix;
};

// Comparison of the clusters influencing `target`, in the listed order.
struct cluster_judgment {
  std::string target;
  std::vector<std::string> sources;
  judgment_matrix matrix;
};

struct anp_network {
  std::vector<anp_cluster> clusters;
  std::vector<std::pair<std::string, std::string>> dependence;  // (source cluster, target cluster)
  std::vector<element_judgment> element_judgments;
  std::vector<cluster_judgment> cluster_judgments;
  std::vector<std::string> alternatives;
};

struct anp_result {
  std::vector<std::string> elements;
  dense_matrix weighted;
  dense_matrix limit;
  bool primitive = false;
  std::vector<std::pair<std::string, double>> priorities;  // over the alternatives
};

inline dense_matrix weighted_supermatrix(const anp_network& net, std::vector<std::string>* element_names = nullptr) {
  std::map<std::string, std::size_t> cluster_index, element_index;
  std::vector<std::string> names;
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < net.clusters.size(); ++c) {
    if (!cluster_index.emplace(net.clusters[c].name, c).second)
      throw invalid_argument("duplicate cluster '" + net.clusters[c].name + "'");
    if (net.clusters[c].elements.empty()) throw invalid_argument("cluster '" + net.clusters[c].name + "' is empty");
    for (const auto& e : net.clusters[c].elements) {
      if (!element_index.emplace(e, names.size()).second) throw invalid_argument("duplicate element '" + e + "'");
      names.push_back(e);
      owner.push_back(c);
    }
  }
  auto cluster_of = [&](const std::string& name) {
    auto it = cluster_index.find(name);
    if (it == cluster_index.end()) throw invalid_argument("unknown cluster '" + name + "'");
    return it->second;
  };
  const std::size_t nc = net.clusters.size(), n = names.size();
  std::vector<std::vector<bool>> depends(nc, std::vector<bool>(nc, false));
  for (const auto& [s, t] : net.dependence) depends[cluster_of(s)][cluster_of(t)] = true;

  // cluster weights alpha[source][target]
  std::vector<std::vector<double>> alpha(nc, std::vector<double>(nc, 0));
  std::vector<bool> weighted(nc, false);
  for (const auto& cj : net.cluster_judgments) {
    auto t = cluster_of(cj.target);
    if (weighted[t]) throw invalid_argument("two cluster judgments for '" + cj.target + "'");
    weighted[t] = true;
    if (cj.sources.size() != cj.matrix.size())
      throw invalid_argument("cluster judgment for '" + cj.target + "' has the wrong size");
    auto w = anp_priorities(cj.matrix);
    for (std::size_t i = 0; i < cj.sources.size(); ++i) {
      auto s = cluster_of(cj.sources[i]);
      if (!depends[s][t]) throw invalid_argument("cluster '" + cj.sources[i] + "' does not influence '" + cj.target + "'");
      alpha[s][t] = w[i];
    }
    for (std::size_t s = 0; s < nc; ++s)
      if (depends[s][t] && alpha[s][t] == 0)
        throw invalid_argument("cluster judgment for '" + cj.target + "' omits an influencing cluster");
  }
  for (std::size_t t = 0; t < nc; ++t) {
    if (weighted[t]) continue;
    std::size_t count = 0;
    for (std::size_t s = 0; s < nc; ++s) count += depends[s][t];
    if (count > 1) throw invalid_argument("cluster '" + net.clusters[t].name + "' needs a cluster judgment");
    for (std::size_t s = 0; s < nc; ++s)
      if (depends[s][t]) alpha[s][t] = 1;
  }

  dense_matrix w(n, std::vector<double>(n, 0));
  std::map<std::pair<std::size_t, std::size_t>, bool> filled;
  for (const auto& ej : net.element_judgments) {
    auto s = cluster_of(ej.source);
    auto it = element_index.find(ej.target_element);
    if (it == element_index.end()) throw invalid_argument("unknown element '" + ej.target_element + "'");
    auto k = it->second;
    if (!depends[s][owner[k]])
      throw invalid_argument("cluster '" + ej.source + "' does not influence the cluster of '" + ej.target_element + "'");
    if (ej.matrix.size() != net.clusters[s].elements.size())
      throw invalid_argument("judgment of '" + ej.source + "' for '" + ej.target_element + "' has the wrong size");
    if (!filled.emplace(std::pair{s, k}, true).second)
      throw invalid_argument("duplicate judgment of '" + ej.source + "' for '" + ej.target_element + "'");
    auto local = anp_priorities(ej.matrix);
    for (std::size_t i = 0; i < local.size(); ++i)
      w[element_index.at(net.clusters[s].elements[i])][k] = alpha[s][owner[k]] * local[i];
  }
  if (element_names) *element_names = names;
  return w;
}

inline anp_result anp_limit(const anp_network& net) {
  anp_result r;
  r.weighted = weighted_supermatrix(net, &r.elements);
  check_column_stochastic(r.weighted, r.elements);
  if (net.alternatives.empty()) throw invalid_argument("network lists no alternatives");
  auto lim = anp_limit_matrix(r.weighted);
  r.limit = lim.limit;
  r.primitive = lim.primitive;
  const std::size_t n = r.elements.size();
  double total = 0;
  for (const auto& a : net.alternatives) {
    auto it = std::find(r.elements.begin(), r.elements.end(), a);
    if (it == r.elements.end()) throw invalid_argument("unknown alternative '" + a + "'");
    auto i = static_cast<std::size_t>(it - r.elements.begin());
    double mean = 0;
    for (std::size_t j = 0; j < n; ++j) mean += r.limit[i][j];
    mean /= static_cast<double>(n);
    r.priorities.push_back({a, mean});
    total += mean;
  }
  if (total <= 0) throw invalid_argument("alternatives carry no limit weight");
  for (auto& p : r.priorities) p.second /= total;
  return r;
}

}  // namespace ugt
