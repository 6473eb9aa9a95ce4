#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ugt/core/rational.hpp"

namespace ugt {

// A tuple of exact rationals; admissibility against a model is checked there.
struct degree {
  std::vector<rational> c;

  degree() = default;
  explicit degree(std::vector<rational> components) : c(std::move(components)) {
    for (auto& x : c) x.canonicalize();
  }

  std::size_t size() const { return c.size(); }
  const rational& operator[](std::size_t i) const { return c[i]; }
  rational& operator[](std::size_t i) { return c[i]; }

  friend bool operator==(const degree& a, const degree& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (a.c[i] != b.c[i]) return false;
    return true;
  }
  friend bool operator!=(const degree& a, const degree& b) { return !(a == b); }
};

// Plain lexicographic order, used only for container keys.
struct degree_lex_less {
  bool operator()(const degree& a, const degree& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }
};

inline degree make_degree(std::initializer_list<std::string_view> parts) {
  std::vector<rational> v;
  v.reserve(parts.size());
  for (auto p : parts) v.push_back(parse_rational(p));
  return degree(std::move(v));
}

inline degree filled_degree(std::size_t k, const rational& value) {
  return degree(std::vector<rational>(k, value));
}

inline std::string to_string(const degree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += to_string(d[i]);
  }
  return out + ")";
}

inline degree componentwise_min(const degree& a, const degree& b) {
  degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (b[i] < r[i]) r[i] = b[i];
  return r;
}

inline degree componentwise_max(const degree& a, const degree& b) {
  degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (b[i] > r[i]) r[i] = b[i];
  return r;
}

inline bool componentwise_leq(const degree& a, const degree& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline rational component_mean(const degree& d) {
  rational s = 0;
  for (const auto& x : d.c) s += x;
  if (d.size() > 1) s /= static_cast<unsigned long>(d.size());
  return s;
}

}  // namespace ugt
