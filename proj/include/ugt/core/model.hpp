#pragma once

#include <cmath>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ugt/core/degree.hpp"
#include "ugt/core/errors.hpp"

namespace ugt {

enum class model_kind { fuzzy, intuitionistic, neutrosophic, interval, kdim };

// Scalar evaluation maps: score, vertex weight, edge weight, edge length, adjacency value.
enum class eval_map { delta, omega, delta_edge, lambda_len, phi };

enum class combine_op { complete_edge, line_adjacency, dombi };

inline const char* to_string(model_kind k) {
  switch (k) {
    case model_kind::fuzzy: return "fuzzy";
    case model_kind::intuitionistic: return "intuitionistic";
    case model_kind::neutrosophic: return "neutrosophic";
    case model_kind::interval: return "interval";
    case model_kind::kdim: return "kdim";
  }
  return "?";
}

inline model_kind parse_model_kind(const std::string& s) {
  if (s == "fuzzy") return model_kind::fuzzy;
  if (s == "intuitionistic") return model_kind::intuitionistic;
  if (s == "neutrosophic") return model_kind::neutrosophic;
  if (s == "interval") return model_kind::interval;
  if (s == "kdim") return model_kind::kdim;
  throw invalid_argument("unknown model kind '" + s + "'");
}

// Any member left empty falls back to the default operator.
struct operator_overrides {
  std::function<rational(const degree&)> delta;
  std::function<rational(const degree&)> omega;
  std::function<rational(const degree&)> delta_edge;
  std::function<rational(const degree&)> lambda_len;
  std::function<rational(const degree&)> phi;
  std::function<degree(const std::vector<degree>&)> path_strength;
  std::function<degree(const degree&, const degree&)> complete_edge;
  std::function<degree(const degree&, const degree&)> line_adjacency;
};

struct model_params {
  std::optional<rational> dombi_lambda;
  operator_overrides ops;
};

namespace detail {

inline rational dombi_component(const rational& x, const rational& y, const rational& lambda) {
  if (x == 0 || y == 0) return 0;
  if (x == 1) return y;
  if (y == 1) return x;
  if (lambda == 1) return x * y / (x + y - x * y);
  // General exponents are irrational; evaluate in extended precision and
  // round to a bounded-denominator rational.
  long double lx = to_long_double(x), ly = to_long_double(y), l = to_long_double(lambda);
  long double a = std::pow((1.0L - lx) / lx, l), b = std::pow((1.0L - ly) / ly, l);
  long double t = 1.0L / (1.0L + std::pow(a + b, 1.0L / l));
  rational r = rationalize(t);
  if (r < 0) r = 0;
  if (r > 1) r = 1;
  return r;
}

}  // namespace detail

class model {
 public:
  model(model_kind kind, std::size_t k, model_params params) : kind_(kind), k_(k), params_(std::move(params)) {
    zero_ = filled_degree(k_, 0);
    unit_ = filled_degree(k_, 1);
  }

  model_kind kind() const { return kind_; }
  std::size_t k() const { return k_; }
  const degree& zero() const { return zero_; }
  const degree& unit() const { return unit_; }
  const std::optional<rational>& dombi_lambda() const { return params_.dombi_lambda; }
  const operator_overrides& overrides() const { return params_.ops; }

  // Empty string when admissible, otherwise the reason.
  std::string admissibility(const degree& d) const {
    if (d.size() != k_)
      return "dimension " + std::to_string(d.size()) + " != " + std::to_string(k_);
    for (const auto& x : d.c)
      if (x < 0 || x > 1) return "component " + to_string(x) + " outside [0,1]";
    if (kind_ == model_kind::intuitionistic && d[0] + d[1] > 1) return "membership + non-membership > 1";
    if (kind_ == model_kind::interval && d[0] > d[1]) return "lower endpoint above upper endpoint";
    return {};
  }
  bool admissible(const degree& d) const { return admissibility(d).empty(); }

  void require_dimension(const degree& d) const {
    if (d.size() != k_)
      throw invalid_argument("degree " + to_string(d) + " has dimension " + std::to_string(d.size()) +
                             ", model expects " + std::to_string(k_));
  }

  bool is_zero(const degree& d) const { return d == zero_; }

  rational evaluate(eval_map m, const degree& d) const {
    require_dimension(d);
    const auto& o = params_.ops;
    switch (m) {
      case eval_map::delta: return o.delta ? o.delta(d) : component_mean(d);
      case eval_map::omega: return o.omega ? o.omega(d) : component_mean(d);
      case eval_map::delta_edge: return o.delta_edge ? o.delta_edge(d) : component_mean(d);
      case eval_map::phi: return o.phi ? o.phi(d) : component_mean(d);
      case eval_map::lambda_len: {
        if (is_zero(d)) throw invalid_argument("edge length is undefined on the zero degree");
        if (o.lambda_len) return o.lambda_len(d);
        rational s = evaluate(eval_map::delta, d);
        if (s == 0) throw invalid_argument("edge length needs a positive score");
        return 1 / s;
      }
    }
    throw invalid_argument("unknown evaluation map");
  }

  rational score(const degree& d) const { return evaluate(eval_map::delta, d); }

  // Score first, then lexicographic components.
  std::strong_ordering compare(const degree& a, const degree& b) const {
    require_dimension(a);
    require_dimension(b);
    if (k_ == 1 && !params_.ops.delta) return cmp(a[0], b[0]);
    rational sa = score(a), sb = score(b);
    if (sa != sb) return cmp(sa, sb);
    for (std::size_t i = 0; i < k_; ++i)
      if (a[i] != b[i]) return cmp(a[i], b[i]);
    return std::strong_ordering::equal;
  }
  bool leq(const degree& a, const degree& b) const { return compare(a, b) != std::strong_ordering::greater; }
  bool less(const degree& a, const degree& b) const { return compare(a, b) == std::strong_ordering::less; }
  const degree& order_min(const degree& a, const degree& b) const { return leq(a, b) ? a : b; }
  const degree& order_max(const degree& a, const degree& b) const { return leq(a, b) ? b : a; }

  degree path_strength(const std::vector<degree>& parts) const {
    if (parts.empty()) throw invalid_argument("path strength of an empty list");
    for (const auto& d : parts) require_dimension(d);
    if (parts.size() == 1) return parts.front();
    if (params_.ops.path_strength) return params_.ops.path_strength(parts);
    degree r = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) r = componentwise_min(r, parts[i]);
    return r;
  }

  degree combine(combine_op op, const degree& a, const degree& b) const {
    require_dimension(a);
    require_dimension(b);
    const auto& o = params_.ops;
    switch (op) {
      case combine_op::complete_edge:
        return o.complete_edge ? o.complete_edge(a, b) : componentwise_min(a, b);
      case combine_op::line_adjacency:
        if (o.line_adjacency) return o.line_adjacency(a, b);
        if (is_zero(a) || is_zero(b)) return zero_;
        return order_min(a, b);
      case combine_op::dombi: {
        if (!params_.dombi_lambda) throw invalid_argument("Dombi conjunction needs dombi_lambda");
        degree r = a;
        for (std::size_t i = 0; i < k_; ++i) r[i] = detail::dombi_component(a[i], b[i], *params_.dombi_lambda);
        return r;
      }
    }
    throw invalid_argument("unknown combine operator");
  }

 private:
  static std::strong_ordering cmp(const rational& x, const rational& y) {
    int c = ::cmp(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  model_kind kind_;
  std::size_t k_;
  model_params params_;
  degree zero_, unit_;
};

inline std::size_t default_dimension(model_kind kind) {
  switch (kind) {
    case model_kind::fuzzy: return 1;
    case model_kind::intuitionistic: return 2;
    case model_kind::neutrosophic: return 3;
    case model_kind::interval: return 2;
    case model_kind::kdim: return 0;
  }
  return 0;
}

inline model make_model(model_kind kind, std::size_t k, model_params params = {}) {
  std::size_t expected = default_dimension(kind);
  if (k == 0) throw invalid_argument("model dimension must be positive");
  if (expected != 0 && k != expected)
    throw invalid_argument(std::string("model kind ") + to_string(kind) + " requires k=" + std::to_string(expected));
  if (params.dombi_lambda && *params.dombi_lambda <= 0) throw invalid_argument("dombi_lambda must be positive");
  return model(kind, k, std::move(params));
}

inline model make_model(model_kind kind) { return make_model(kind, default_dimension(kind)); }

}  // namespace ugt
