#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ugt/core/graph.hpp"

namespace ugt {

enum class distribution_kind { point, bernoulli, uniform_grid };

inline distribution_kind parse_distribution_kind(const std::string& s) {
  if (s == "point") return distribution_kind::point;
  if (s == "bernoulli") return distribution_kind::bernoulli;
  if (s == "uniform_grid") return distribution_kind::uniform_grid;
  throw invalid_argument("unknown distribution '" + s + "'");
}

inline const char* to_string(distribution_kind k) {
  switch (k) {
    case distribution_kind::point: return "point";
    case distribution_kind::bernoulli: return "bernoulli";
    case distribution_kind::uniform_grid: return "uniform_grid";
  }
  return "?";
}

// point: always hi. bernoulli: hi with probability p, else zero.
// uniform_grid: each component uniform over multiples of 1/denominator in [lo, hi].
struct distribution {
  distribution_kind kind = distribution_kind::point;
  degree lo, hi;
  rational p = 1;
  long denominator = 1;
};

struct random_template {
  std::shared_ptr<const model> m;
  constraint_profile profile = constraint_profile::none;
  std::vector<std::string> vertices;
  std::vector<distribution> vertex_dist;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<distribution> edge_dist;
  std::uint64_t seed = 0;
};

struct realization {
  uncertain_graph graph;
  support_graph support;
};

namespace detail {

// Grid points j/q inside [lo, hi]: first index and count.
inline std::pair<mpz_class, mpz_class> grid_range(const rational& lo, const rational& hi, long q) {
  rational a = lo * q, b = hi * q;
  mpz_class first = a.get_num() / a.get_den(), last = b.get_num() / b.get_den();
  if (first * a.get_den() < a.get_num()) ++first;  // ceil for nonnegative values
  if (last < first) return {first, 0};
  return {first, last - first + 1};
}

inline std::string distribution_failure(const distribution& d, const model& m) {
  auto admissible = [&](const degree& x) { return x.size() == m.k() && m.admissible(x); };
  switch (d.kind) {
    case distribution_kind::point:
      if (!admissible(d.hi)) return "point mass is not an admissible degree";
      return {};
    case distribution_kind::bernoulli:
      if (d.p < 0 || d.p > 1) return "Bernoulli probability outside [0,1]";
      if (!admissible(d.hi)) return "Bernoulli value is not an admissible degree";
      return {};
    case distribution_kind::uniform_grid: {
      if (d.denominator < 1) return "grid denominator must be positive";
      if (!admissible(d.lo) || !admissible(d.hi)) return "grid bounds are not admissible degrees";
      if (!componentwise_leq(d.lo, d.hi)) return "grid lower bound exceeds upper bound";
      for (std::size_t i = 0; i < m.k(); ++i)
        if (grid_range(d.lo[i], d.hi[i], d.denominator).second == 0) return "grid has no point in some component";
      // worst corner of the box must stay admissible
      if (m.kind() == model_kind::intuitionistic && d.hi[0] + d.hi[1] > 1) return "grid box leaves the domain";
      if (m.kind() == model_kind::interval && d.hi[0] > d.lo[1]) return "grid box leaves the domain";
      return {};
    }
  }
  return "unknown distribution";
}

// Engine seeded from the template seed and the element's key only.
inline std::mt19937_64 element_engine(std::uint64_t seed, char tag, const std::string& key) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(tag)};
  for (unsigned char c : key) words.push_back(c);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

inline mpz_class to_mpz(std::uint64_t u) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  return z;
}

// Uniform in [0, count) by rejection.
inline mpz_class uniform_below(std::mt19937_64& eng, const mpz_class& count) {
  const mpz_class span = mpz_class(1) << 64;
  const mpz_class limit = span - span % count;
  while (true) {
    mpz_class u = to_mpz(eng());
    if (u < limit) return u % count;
  }
}

inline degree draw(const distribution& d, const model& m, std::mt19937_64& eng) {
  switch (d.kind) {
    case distribution_kind::point: return d.hi;
    case distribution_kind::bernoulli: {
      // success iff u / 2^64 < p
      mpz_class u = to_mpz(eng());
      rational threshold = d.p * rational(mpz_class(1) << 64);
      return rational(u) < threshold ? d.hi : m.zero();
    }
    case distribution_kind::uniform_grid: {
      std::vector<rational> c;
      for (std::size_t i = 0; i < m.k(); ++i) {
        auto [first, count] = grid_range(d.lo[i], d.hi[i], d.denominator);
        c.push_back(rational(first + uniform_below(eng, count), d.denominator));
      }
      return degree(std::move(c));
    }
  }
  throw invalid_argument("unknown distribution");
}

}  // namespace detail

inline void check_template(const random_template& t) {
  if (!t.m) throw invalid_argument("template needs a model");
  if (t.vertices.size() != t.vertex_dist.size() || t.edges.size() != t.edge_dist.size())
    throw invalid_argument("template: one distribution per vertex and per edge");
  std::set<std::string> ids(t.vertices.begin(), t.vertices.end());
  if (ids.size() != t.vertices.size()) throw invalid_argument("template: duplicate vertex id");
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& [u, v] : t.edges) {
    if (!ids.count(u) || !ids.count(v) || u == v) throw invalid_argument("template: bad edge {" + u + "," + v + "}");
    if (!pairs.insert(std::minmax(u, v)).second) throw invalid_argument("template: duplicate edge {" + u + "," + v + "}");
  }
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    auto why = detail::distribution_failure(t.vertex_dist[i], *t.m);
    if (!why.empty()) throw invalid_argument("template vertex " + t.vertices[i] + ": " + why);
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    auto why = detail::distribution_failure(t.edge_dist[i], *t.m);
    if (!why.empty()) throw invalid_argument("template edge {" + t.edges[i].first + "," + t.edges[i].second + "}: " + why);
  }
}

// Each element draws from its own engine, so the result is independent of
// the order in which elements are listed or visited.
inline realization sample_random(const random_template& t) {
  check_template(t);
  graph_builder b(t.m, t.profile);
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    auto eng = detail::element_engine(t.seed, 'v', t.vertices[i]);
    b.vertex(t.vertices[i], detail::draw(t.vertex_dist[i], *t.m, eng));
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    auto [u, v] = std::minmax(t.edges[i].first, t.edges[i].second);
    auto eng = detail::element_engine(t.seed, 'e', u + '\n' + v);
    b.edge(t.edges[i].first, t.edges[i].second, detail::draw(t.edge_dist[i], *t.m, eng));
  }
  auto g = b.build();
  auto s = support(g);
  return {std::move(g), std::move(s)};
}

}  // namespace ugt
