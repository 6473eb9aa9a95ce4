#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <vector>

#include "ugt/core/graph.hpp"

namespace ugt {

// Componentwise supremum of a set's degrees over its universe.
inline degree height(const uncertain_set& s) {
  degree h = s.m->zero();
  for (const auto& d : s.degrees) h = componentwise_max(h, d);
  return h;
}

// One vertex per set: vertex degree is the set's height, edge degree the height of
// the pointwise minimum. Ids default to S1, S2, ...
inline uncertain_graph intersection_graph(const std::vector<uncertain_set>& sets, std::vector<std::string> ids = {},
                                          constraint_profile profile = constraint_profile::none) {
  if (sets.empty()) throw invalid_argument("intersection graph needs at least one set");
  const auto& first = sets.front();
  for (const auto& s : sets) {
    if (!s.m || s.m->kind() != first.m->kind() || s.m->k() != first.m->k())
      throw invalid_argument("intersection graph: sets use different models");
    if (s.universe != first.universe) throw invalid_argument("intersection graph: universe mismatch");
    if (s.degrees.size() != s.universe.size()) throw invalid_argument("intersection graph: degree list length");
  }
  if (ids.empty())
    for (std::size_t i = 0; i < sets.size(); ++i) ids.push_back("S" + std::to_string(i + 1));
  if (ids.size() != sets.size()) throw invalid_argument("intersection graph: one id per set");
  graph_builder b(first.m, profile);
  for (std::size_t i = 0; i < sets.size(); ++i) b.vertex(ids[i], height(sets[i]));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      degree h = first.m->zero();
      for (std::size_t x = 0; x < first.universe.size(); ++x)
        h = componentwise_max(h, componentwise_min(sets[i].degrees[x], sets[j].degrees[x]));
      b.edge(ids[i], ids[j], h);
    }
  return b.build();
}

// Vertices are the nonzero edges (id "u-v"); two of them are joined when they
// share an endpoint, with the line-adjacency combination of their degrees.
inline uncertain_graph line_graph(const uncertain_graph& g) {
  const auto& es = g.nonzero_pairs();
  graph_builder b(g.model_ptr());
  std::vector<std::string> ids;
  for (auto [i, j] : es) {
    ids.push_back(g.id(i) + "-" + g.id(j));
    b.vertex(ids.back(), g.eta(i, j));
  }
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t c = a + 1; c < es.size(); ++c) {
      auto [p, q] = es[a];
      auto [r, s] = es[c];
      if (p == r || p == s || q == r || q == s)
        b.edge(ids[a], ids[c], g.m().combine(combine_op::line_adjacency, g.eta(p, q), g.eta(r, s)));
    }
  return b.build();
}

// Direct product of cyclic groups Z_{n1} x ... x Z_{nm}.
struct group_spec {
  std::vector<long> factors;

  std::size_t order() const {
    std::size_t n = 1;
    for (long f : factors) n *= static_cast<std::size_t>(f);
    return n;
  }
  void check() const {
    if (factors.empty()) throw invalid_argument("group needs at least one cyclic factor");
    for (long f : factors)
      if (f < 1) throw invalid_argument("cyclic factor must be at least 1");
  }
  std::vector<long> normalize(std::vector<long> x) const {
    if (x.size() != factors.size()) throw invalid_argument("group element has the wrong arity");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ((x[i] % factors[i]) + factors[i]) % factors[i];
    return x;
  }
  // Mixed-radix rank, first factor most significant.
  std::size_t rank(const std::vector<long>& x) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) r = r * static_cast<std::size_t>(factors[i]) + static_cast<std::size_t>(x[i]);
    return r;
  }
  std::vector<long> element(std::size_t r) const {
    std::vector<long> x(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      x[i] = static_cast<long>(r % static_cast<std::size_t>(factors[i]));
      r /= static_cast<std::size_t>(factors[i]);
    }
    return x;
  }
  std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<long> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = (a[i] + b[i]) % factors[i];
    return s;
  }
  std::vector<long> inverse(const std::vector<long>& a) const {
    std::vector<long> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = (factors[i] - a[i]) % factors[i];
    return s;
  }
  std::string name(const std::vector<long>& x) const {
    if (x.size() == 1) return std::to_string(x[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  }
};

using group_subset = std::vector<std::pair<std::vector<long>, degree>>;

// Dense table of subset degrees by element rank; unlisted elements get zero.
inline std::vector<degree> subset_table(const group_spec& grp, const group_subset& subset, const model& m) {
  grp.check();
  std::vector<degree> table(grp.order(), m.zero());
  std::vector<bool> seen(grp.order(), false);
  for (const auto& [x, d] : subset) {
    m.require_dimension(d);
    auto r = grp.rank(grp.normalize(x));
    if (seen[r]) throw invalid_argument("group element " + grp.name(grp.normalize(x)) + " listed twice");
    seen[r] = true;
    table[r] = d;
  }
  return table;
}

// Empty when the subset is a valid connection set, otherwise the reason.
inline std::string cayley_subset_failure(const group_spec& grp, const std::vector<degree>& table, const model& m) {
  if (!m.is_zero(table[0])) return "identity has a nonzero degree";
  for (std::size_t r = 0; r < table.size(); ++r) {
    auto inv = grp.rank(grp.inverse(grp.element(r)));
    if (table[r] != table[inv])
      return "degree of " + grp.name(grp.element(r)) + " differs from its inverse " + grp.name(grp.element(inv));
  }
  std::vector<std::size_t> gens;
  for (std::size_t r = 0; r < table.size(); ++r)
    if (!m.is_zero(table[r])) gens.push_back(r);
  std::vector<bool> reached(table.size(), false);
  std::queue<std::size_t> frontier;
  reached[0] = true;
  frontier.push(0);
  std::size_t count = 1;
  while (!frontier.empty()) {
    auto x = grp.element(frontier.front());
    frontier.pop();
    for (auto gr : gens) {
      auto y = grp.rank(grp.add(x, grp.element(gr)));
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        frontier.push(y);
      }
    }
  }
  if (count != table.size())
    return "support generates a subgroup of order " + std::to_string(count) + ", not " + std::to_string(table.size());
  return {};
}

// Unit vertex degrees; {x,y} gets the subset degree of y - x.
inline uncertain_graph cayley_graph(const group_spec& grp, const group_subset& subset, std::shared_ptr<const model> m) {
  auto table = subset_table(grp, subset, *m);
  auto why = cayley_subset_failure(grp, table, *m);
  if (!why.empty()) throw invalid_argument("cayley graph: " + why);
  graph_builder b(m);
  const std::size_t n = grp.order();
  for (std::size_t r = 0; r < n; ++r) b.vertex(grp.name(grp.element(r)), m->unit());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      auto diff = grp.add(grp.inverse(grp.element(x)), grp.element(y));
      const degree& d = table[grp.rank(diff)];
      if (!m->is_zero(d)) b.edge(grp.name(grp.element(x)), grp.name(grp.element(y)), d);
    }
  return b.build();
}

// Nonzero zero divisors of Z_n, ascending.
inline std::vector<long> zero_divisors(long n) {
  if (n < 2) throw invalid_argument("zero-divisor graph needs n >= 2");
  std::vector<long> out;
  for (long x = 1; x < n; ++x)
    for (long y = 1; y < n; ++y)
      if ((x * y) % n == 0) {
        out.push_back(x);
        break;
      }
  return out;
}

// Vertices are the nonzero zero divisors of Z_n, joined when their product is 0 mod n.
// strong: every edge gets the complete-edge combination of its endpoints;
// otherwise eta must list exactly the edges (keys as unordered pairs of residues).
inline uncertain_graph zero_divisor_graph(long n, const std::map<long, degree>& sigma, bool strong,
                                          std::shared_ptr<const model> m,
                                          const std::map<std::pair<long, long>, degree>& eta = {},
                                          constraint_profile profile = constraint_profile::none) {
  auto zd = zero_divisors(n);
  for (const auto& [x, d] : sigma)
    if (std::find(zd.begin(), zd.end(), x) == zd.end())
      throw invalid_argument("zero-divisor graph: " + std::to_string(x) + " is not a nonzero zero divisor mod " +
                             std::to_string(n));
  graph_builder b(m, profile);
  for (long x : zd) {
    auto it = sigma.find(x);
    if (it == sigma.end()) throw invalid_argument("zero-divisor graph: no degree for " + std::to_string(x));
    b.vertex(std::to_string(x), it->second);
  }
  std::size_t used = 0;
  for (std::size_t i = 0; i < zd.size(); ++i)
    for (std::size_t j = i + 1; j < zd.size(); ++j) {
      long x = zd[i], y = zd[j];
      if ((x * y) % n != 0) continue;
      if (strong) {
        b.edge(std::to_string(x), std::to_string(y), m->combine(combine_op::complete_edge, sigma.at(x), sigma.at(y)));
        continue;
      }
      auto it = eta.find({x, y});
      if (it == eta.end()) it = eta.find({y, x});
      if (it == eta.end())
        throw invalid_argument("zero-divisor graph: no degree for edge {" + std::to_string(x) + "," +
                               std::to_string(y) + "}");
      ++used;
      b.edge(std::to_string(x), std::to_string(y), it->second);
    }
  if (!strong && used != eta.size())
    throw invalid_argument("zero-divisor graph: degree given for a pair whose product is nonzero");
  return b.build();
}

enum class generated_shape { complete, star, wheel };

inline generated_shape parse_generated_shape(const std::string& s) {
  if (s == "complete") return generated_shape::complete;
  if (s == "star") return generated_shape::star;
  if (s == "wheel") return generated_shape::wheel;
  throw invalid_argument("unknown generated shape '" + s + "'");
}

// complete: v1..vn pairwise; star: centre c with leaves l1..lk; wheel: hub h with
// rim r1..rk in a cycle. Every edge gets the complete-edge combination.
inline uncertain_graph generate_graph(generated_shape shape, const std::vector<degree>& sigma, std::shared_ptr<const model> m,
                                const degree& centre = {}, constraint_profile profile = constraint_profile::none) {
  graph_builder b(m, profile);
  auto gamma = [&](const degree& x, const degree& y) { return m->combine(combine_op::complete_edge, x, y); };
  switch (shape) {
    case generated_shape::complete: {
      if (sigma.empty()) throw invalid_argument("complete graph needs at least one vertex");
      for (std::size_t i = 0; i < sigma.size(); ++i) b.vertex("v" + std::to_string(i + 1), sigma[i]);
      for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
          b.edge("v" + std::to_string(i + 1), "v" + std::to_string(j + 1), gamma(sigma[i], sigma[j]));
      break;
    }
    case generated_shape::star: {
      if (sigma.empty()) throw invalid_argument("star needs at least one leaf");
      b.vertex("c", centre);
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        b.vertex("l" + std::to_string(i + 1), sigma[i]);
        b.edge("c", "l" + std::to_string(i + 1), gamma(centre, sigma[i]));
      }
      break;
    }
    case generated_shape::wheel: {
      if (sigma.size() < 3) throw invalid_argument("wheel needs at least three rim vertices");
      b.vertex("h", centre);
      const std::size_t k = sigma.size();
      for (std::size_t i = 0; i < k; ++i) b.vertex("r" + std::to_string(i + 1), sigma[i]);
      for (std::size_t i = 0; i < k; ++i) {
        b.edge("h", "r" + std::to_string(i + 1), gamma(centre, sigma[i]));
        b.edge("r" + std::to_string(i + 1), "r" + std::to_string((i + 1) % k + 1), gamma(sigma[i], sigma[(i + 1) % k]));
      }
      break;
    }
  }
  return b.build();
}

}  // namespace ugt
