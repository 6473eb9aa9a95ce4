#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ugt/core/errors.hpp"

namespace ugt {

enum class activation_kind { clamp01, bivalent, sigmoid };

inline activation_kind parse_activation(const std::string& s) {
  if (s == "clamp01") return activation_kind::clamp01;
  if (s == "bivalent") return activation_kind::bivalent;
  if (s == "sigmoid") return activation_kind::sigmoid;
  throw invalid_argument("unknown activation '" + s + "'");
}

inline const char* to_string(activation_kind k) {
  switch (k) {
    case activation_kind::clamp01: return "clamp01";
    case activation_kind::bivalent: return "bivalent";
    case activation_kind::sigmoid: return "sigmoid";
  }
  return "?";
}

// bivalent: 1 when x >= theta, else 0. sigmoid: 1 / (1 + exp(-lambda x)).
struct activation {
  activation_kind kind = activation_kind::clamp01;
  double theta = 0;
  double lambda = 1;

  double operator()(double x) const {
    switch (kind) {
      case activation_kind::clamp01: return x < 0 ? 0.0 : x > 1 ? 1.0 : x;
      case activation_kind::bivalent: return x >= theta ? 1.0 : 0.0;
      case activation_kind::sigmoid: return 1.0 / (1.0 + std::exp(-lambda * x));
    }
    return x;
  }
};

struct cognitive_map {
  std::vector<std::vector<double>> w;  // w[i][j]: influence of concept i on concept j
  std::vector<double> initial;
  activation f;
};

enum class fcm_terminal { fixed_point, limit_cycle, max_iters };

inline const char* to_string(fcm_terminal t) {
  switch (t) {
    case fcm_terminal::fixed_point: return "fixed_point";
    case fcm_terminal::limit_cycle: return "limit_cycle";
    case fcm_terminal::max_iters: return "max_iters";
  }
  return "?";
}

struct fcm_result {
  std::vector<std::vector<double>> trajectory;  // A0, A1, ...
  fcm_terminal terminal = fcm_terminal::max_iters;
  std::size_t step = 0;    // fixed_point: t with A(t+1) ~ A(t)
  std::size_t period = 0;  // limit_cycle
};

inline void check_map(const cognitive_map& m) {
  const std::size_t n = m.initial.size();
  if (m.w.size() != n) throw invalid_argument("weight matrix must be n x n with n = |A0|");
  for (std::size_t i = 0; i < n; ++i) {
    if (m.w[i].size() != n) throw invalid_argument("weight matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(std::fabs(m.w[i][j]) <= 1)) throw invalid_argument("weights must lie in [-1,1]");
      if (i == j && m.w[i][j] != 0) throw invalid_argument("weight matrix must have a zero diagonal");
    }
  }
  for (double a : m.initial)
    if (!(a >= 0 && a <= 1)) throw invalid_argument("initial state must lie in [0,1]");
}

// A(t+1) = f(A(t) + A(t) W).
inline std::vector<double> fcm_step(const cognitive_map& m, const std::vector<double>& a) {
  const std::size_t n = a.size();
  std::vector<double> next(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = a[j];
    for (std::size_t i = 0; i < n; ++i) s += a[i] * m.w[i][j];
    next[j] = m.f(s);
  }
  return next;
}

inline fcm_result fcm_run(const cognitive_map& m, double tol, std::size_t max_iters) {
  check_map(m);
  if (!(tol > 0)) throw invalid_argument("tolerance must be positive");
  if (max_iters < 1) throw invalid_argument("max_iters must be at least 1");
  const double cell = tol / 10;
  auto quantize = [&](const std::vector<double>& a) {
    std::vector<long long> k(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) k[i] = std::llround(a[i] / cell);
    return k;
  };
  fcm_result r;
  r.trajectory.push_back(m.initial);
  std::map<std::vector<long long>, std::size_t> seen{{quantize(m.initial), 0}};
  for (std::size_t t = 0; t < max_iters; ++t) {
    const auto& cur = r.trajectory.back();
    auto next = fcm_step(m, cur);
    double diff = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) diff = std::max(diff, std::fabs(next[i] - cur[i]));
    r.trajectory.push_back(next);
    if (diff < tol) {
      r.terminal = fcm_terminal::fixed_point;
      r.step = t;
      return r;
    }
    auto [it, fresh] = seen.emplace(quantize(next), t + 1);
    if (!fresh) {
      r.terminal = fcm_terminal::limit_cycle;
      r.period = t + 1 - it->second;
      r.step = it->second;
      return r;
    }
  }
  return r;
}

}  // namespace ugt
