#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "ugt/core/errors.hpp"
#include "ugt/core/graph.hpp"

namespace ugt::oracle {

inline constexpr std::size_t spectrum_cap = 6;

// Coefficients, lowest degree first, trailing zeros trimmed.
using polynomial = std::vector<rational>;

namespace poly {

inline void trim(polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline polynomial derivative(const polynomial& p) {
  polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline polynomial subtract(polynomial a, const polynomial& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder; b must be nonzero.
inline std::pair<polynomial, polynomial> divide(polynomial a, const polynomial& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  polynomial q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    rational c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline polynomial monic(polynomial p) {
  trim(p);
  if (p.empty()) return p;
  rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline polynomial gcd(polynomial a, polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline rational eval(const polynomial& p, const rational& x) {
  rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Sign of p at x, with x converted to a rational without rounding.
inline int sign_at(const polynomial& p, long double x) {
  double hi = static_cast<double>(x);
  double lo = static_cast<double>(x - hi);
  rational r = rational(hi) + rational(lo);
  return sgn(eval(p, r));
}

}  // namespace poly

// det(x I - A) by the Faddeev-LeVerrier recurrence, exact over the rationals.
inline polynomial characteristic_polynomial(const std::vector<std::vector<rational>>& a) {
  const std::size_t n = a.size();
  polynomial c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<rational>> m(n, std::vector<rational>(n, 0)), am(n, std::vector<rational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        rational s = 0;
        for (std::size_t t = 0; t < n; ++t) s += a[i][t] * m[t][j];
        am[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += a[i][t] * m[t][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

namespace detail {

// Real roots of a square-free polynomial whose roots are all real, ascending.
inline std::vector<long double> simple_real_roots(const polynomial& p) {
  const std::size_t deg = p.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {static_cast<long double>(to_double(-p[0] / p[1]))};
  auto critical = simple_real_roots(poly::derivative(p));
  rational bound = 0;
  for (std::size_t i = 0; i < deg; ++i) {
    rational r = abs(p[i] / p[deg]);
    if (r > bound) bound = r;
  }
  long double b = to_long_double(bound) + 1;
  std::vector<long double> cuts{-b};
  cuts.insert(cuts.end(), critical.begin(), critical.end());
  cuts.push_back(b);
  std::vector<long double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    long double lo = cuts[i], hi = cuts[i + 1];
    int slo = poly::sign_at(p, lo);
    if (slo == 0) {
      roots.push_back(lo);
      continue;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15L * std::max<long double>(1, std::fabs(lo)); ++it) {
      long double mid = (lo + hi) / 2;
      int s = poly::sign_at(p, mid);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      if (s == slo) lo = mid;
      else hi = mid;
    }
    roots.push_back((lo + hi) / 2);
  }
  return roots;
}

}  // namespace detail

// Eigenvalues with multiplicity: square-free factors by Yun's method, then each
// factor's roots isolated between the roots of its derivative and bisected.
inline std::vector<double> oracle_spectrum(const uncertain_graph& g) {
  if (g.n() > spectrum_cap) throw size_cap_exceeded("oracle spectrum", spectrum_cap, g.n());
  const model& m = g.m();
  std::vector<std::vector<rational>> a(g.n(), std::vector<rational>(g.n(), 0));
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j)
      if (i != j) a[i][j] = m.evaluate(eval_map::phi, g.eta(i, j));
  std::vector<double> out;
  if (g.n() == 0) return out;
  polynomial p = characteristic_polynomial(a);
  polynomial dp = poly::derivative(p);
  polynomial a0 = poly::gcd(p, dp);
  polynomial b = poly::divide(p, a0).first;
  polynomial c = poly::divide(dp, a0).first;
  polynomial d = poly::subtract(c, poly::derivative(b));
  for (std::size_t mult = 1; b.size() > 1; ++mult) {
    polynomial factor = poly::gcd(b, d);
    for (auto r : detail::simple_real_roots(factor))
      for (std::size_t k = 0; k < mult; ++k) out.push_back(static_cast<double>(r));
    polynomial nb = poly::divide(b, factor).first;
    polynomial nc = poly::divide(d, factor).first;
    b = nb;
    d = poly::subtract(nc, poly::derivative(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ugt::oracle
