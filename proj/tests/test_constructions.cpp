#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "random_graphs.hpp"
#include "ugt/constructions/constructions.hpp"
#include "ugt/structure/classes.hpp"
#include "ugt/structure/crisp.hpp"
#include "ugt/structure/shape.hpp"
#include "variant_fixtures.hpp"

using namespace ugt;
using fixtures::d1;
using fixtures::q;

namespace {

degree iv(const char* lo, const char* hi) { return make_degree({lo, hi}); }

std::shared_ptr<const model> interval_model() {
  static auto m = std::make_shared<const model>(make_model(model_kind::interval));
  return m;
}

std::set<std::pair<std::string, std::string>> support_edges(const uncertain_graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  auto s = support(g);
  for (auto [i, j] : s.edges) out.insert(std::minmax(g.id(i), g.id(j)));
  return out;
}

}  // namespace

// ---- variants

TEST(Variants, SamplesValidateClean) {
  for (const auto& g : {fixtures::directed_sample(), fixtures::bidirected_sample(), fixtures::multidirected_sample(),
                        fixtures::mixed_sample(), fixtures::incidence_sample()}) {
    auto r = validate_variant(g);
    EXPECT_TRUE(r.ok()) << to_string(g.kind) << ": " << (r.ok() ? "" : r.violations[0].where);
  }
}

TEST(Variants, InjectedViolationNamesThePair) {
  auto dg = fixtures::directed_sample();
  dg.arcs[0].alpha = d1("0.8");
  auto r = validate_variant(dg);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].where, "(v1,v2)");

  auto bg = fixtures::bidirected_sample();
  bg.tau[0].dir = 0;
  EXPECT_TRUE(validate_variant(bg).mentions("(v1,e12)"));
  bg = fixtures::bidirected_sample();
  bg.tau.push_back({"v4", "e12", 1});
  EXPECT_TRUE(validate_variant(bg).mentions("(v4,e12)"));
  bg = fixtures::bidirected_sample();
  bg.edges[2].eta = d1("0.8");
  EXPECT_TRUE(validate_variant(bg).mentions("{v1,v3}"));

  auto mg = fixtures::multidirected_sample();
  mg.arcs[1].alpha = d1("0.9");
  r = validate_variant(mg);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].where, "(v1,v2)");

  auto xg = fixtures::mixed_sample();
  xg.arcs[2].alpha = d1("0.7");
  EXPECT_TRUE(validate_variant(xg).mentions("(v4,v2)"));
  xg = fixtures::mixed_sample();
  xg.edges[1].eta = d1("0.75");
  EXPECT_TRUE(validate_variant(xg).mentions("{v2,v3}"));

  auto ig = fixtures::incidence_sample();
  ig.incidence[1].psi = d1("0.7");
  r = validate_variant(ig);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].where, "(v2,e1)");
  ig = fixtures::incidence_sample();
  ig.incidence.pop_back();
  EXPECT_TRUE(validate_variant(ig).mentions("(v3,e2)"));
}

TEST(Variants, DirectedRulesAreStructural) {
  auto g = fixtures::directed_sample();
  fixtures::add_arc(g, "", "v2", "v2", "0.1");
  EXPECT_TRUE(validate_variant(g).mentions("(v2,v2)"));
  g = fixtures::directed_sample();
  fixtures::add_arc(g, "", "v1", "v2", "0.1");
  EXPECT_FALSE(validate_variant(g).ok());
  g = fixtures::directed_sample();
  fixtures::add_arc(g, "", "v1", "zz", "0.1");
  EXPECT_FALSE(validate_variant(g).ok());
  // parallel arcs are the point of the multidirected variant
  EXPECT_TRUE(validate_variant(fixtures::multidirected_sample()).ok());
}

TEST(Variants, OrientedRejectsOppositeArcs) {
  auto g = fixtures::fuzzy_variant(variant_kind::oriented, {{"u", "1"}, {"v", "1"}, {"w", "1"}});
  fixtures::add_arc(g, "", "u", "v", "0.5");
  fixtures::add_arc(g, "", "v", "w", "0.5");
  fixtures::add_arc(g, "", "w", "v", "0");
  EXPECT_TRUE(validate_variant(g).ok());
  EXPECT_EQ(support_digraph(g).size(), 2u);
  fixtures::add_arc(g, "", "v", "u", "0.2");
  auto r = validate_variant(g);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].where, "{u,v}");
  EXPECT_EQ(r.violations[0].rule, "opposite-arcs");
}

TEST(Variants, SignedWeightedMultigraphMolecular) {
  auto s = fixtures::fuzzy_variant(variant_kind::signed_graph, {{"a", "0.5"}, {"b", "0.5"}});
  fixtures::add_edge(s, "e", "a", "b", "0.5");
  s.sign = {{"a", 1}, {"b", -1}, {"e", -1}};
  EXPECT_TRUE(validate_variant(s).ok());
  s.sign.erase("e");
  EXPECT_TRUE(validate_variant(s).mentions("e"));
  s.sign["e"] = 0;
  EXPECT_TRUE(validate_variant(s).mentions("e"));

  auto w = fixtures::fuzzy_variant(variant_kind::weighted, {{"a", "0.5"}, {"b", "0.5"}, {"c", "0.5"}});
  fixtures::add_edge(w, "ab", "a", "b", "0.5");
  fixtures::add_edge(w, "bc", "b", "c", "0");
  w.weights = {{"ab", q("2.5")}};
  EXPECT_TRUE(validate_variant(w).ok());
  w.weights["bc"] = 1;
  EXPECT_TRUE(validate_variant(w).mentions("bc"));
  w.weights.erase("bc");
  w.weights["ab"] = -1;
  EXPECT_TRUE(validate_variant(w).mentions("ab"));

  auto mg = fixtures::fuzzy_variant(variant_kind::multigraph, {{"a", "0.5"}, {"b", "0.5"}});
  fixtures::add_edge(mg, "l1", "a", "b", "0.5");
  fixtures::add_edge(mg, "l2", "a", "b", "0.25");
  EXPECT_TRUE(validate_variant(mg).ok());
  fixtures::add_edge(mg, "l3", "a", "q", "0.25");
  EXPECT_FALSE(validate_variant(mg).ok());

  auto mol = fixtures::fuzzy_variant(variant_kind::molecular, {{"c1", "0.9"}, {"o1", "0.6"}});
  mol.profile = constraint_profile::none;
  fixtures::add_edge(mol, "b1", "c1", "o1", "0.6");
  mol.labels = {{"c1", "C"}, {"o1", "O"}, {"b1", "double"}};
  EXPECT_TRUE(validate_variant(mol).ok());
  mol.edges[0].eta = d1("0.7");
  EXPECT_TRUE(validate_variant(mol).mentions("{c1,o1}"));
  mol.edges[0].eta = d1("0.6");
  mol.labels.erase("o1");
  EXPECT_TRUE(validate_variant(mol).mentions("o1"));
}

// ---- intersection and line graphs

TEST(Intersection, Examples) {
  auto m = fixtures::fuzzy_model();
  uncertain_set a{m, {"x"}, {d1("0.6")}}, b{m, {"x"}, {d1("0.4")}};
  auto g = intersection_graph({a, b});
  EXPECT_EQ(g.sigma(0), d1("0.6"));
  EXPECT_EQ(g.sigma(1), d1("0.4"));
  EXPECT_EQ(g.eta(0, 1), d1("0.4"));

  uncertain_set c{m, {"x", "y"}, {d1("0.5"), d1("0")}}, d{m, {"x", "y"}, {d1("0"), d1("0.7")}};
  auto h = intersection_graph({c, d});
  EXPECT_TRUE(m->is_zero(h.eta(0, 1)));
  EXPECT_EQ(h.sigma(1), d1("0.7"));

  auto single = intersection_graph({a});
  EXPECT_EQ(single.n(), 1u);
  EXPECT_TRUE(single.nonzero_pairs().empty());

  uncertain_set other{m, {"z"}, {d1("0.5")}};
  EXPECT_THROW(intersection_graph({a, other}), invalid_argument);
  EXPECT_THROW(intersection_graph({}), invalid_argument);
}

TEST(Intersection, WellFormedOnRandomSets) {
  auto m = fixtures::fuzzy_model();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<uncertain_set> sets(2 + trial % 4);
    for (auto& s : sets) {
      s = {m, {"a", "b", "c"}, {}};
      for (int i = 0; i < 3; ++i) s.degrees.push_back(fixtures::random_degree(rng, *m));
    }
    auto g = intersection_graph(sets, {}, constraint_profile::fuzzy_cap);
    ASSERT_TRUE(validate_graph(g).ok());
  }
}

TEST(LineGraph, Examples) {
  auto path = fixtures::fuzzy_graph({{"v1", "1"}, {"v2", "1"}, {"v3", "1"}}, {{"v1", "v2", "0.6"}, {"v2", "v3", "0.5"}});
  auto l = line_graph(path);
  ASSERT_EQ(l.n(), 2u);
  EXPECT_EQ(l.sigma(0), d1("0.6"));
  EXPECT_EQ(l.sigma(1), d1("0.5"));
  EXPECT_EQ(l.eta(0, 1), d1("0.5"));

  auto empty = line_graph(fixtures::fuzzy_graph({{"a", "1"}, {"b", "1"}}, {}));
  EXPECT_EQ(empty.n(), 0u);

  auto tri = line_graph(fixtures::complete_triangle());
  EXPECT_EQ(tri.n(), 3u);
  EXPECT_TRUE(shape(tri).complete);
}

TEST(LineGraph, SupportCommutesWithClassicalLineGraph) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = fixtures::random_fuzzy_graph(seed, 2 + seed % 7, 0.5);
    auto s = support(g);
    auto l = line_graph(g);
    std::set<std::pair<std::string, std::string>> expected;
    for (std::size_t a = 0; a < s.edges.size(); ++a)
      for (std::size_t b = a + 1; b < s.edges.size(); ++b) {
        auto [p, q2] = s.edges[a];
        auto [r, t] = s.edges[b];
        if (p == r || p == t || q2 == r || q2 == t) {
          auto x = g.id(p) + "-" + g.id(q2), y = g.id(r) + "-" + g.id(t);
          expected.insert(std::minmax(x, y));
        }
      }
    ASSERT_EQ(support(l).vertices.size(), s.edges.size()) << seed;
    ASSERT_EQ(support_edges(l), expected) << seed;
  }
}

// ---- Cayley graphs

TEST(Cayley, Examples) {
  auto m = fixtures::fuzzy_model();
  auto c5 = cayley_graph({{5}}, {{{1}, d1("0.8")}, {{4}, d1("0.8")}}, m);
  auto sh = shape(c5);
  EXPECT_TRUE(sh.connected);
  EXPECT_EQ(support(c5).edges.size(), 5u);
  for (auto v : support(c5).vertices) EXPECT_EQ(support(c5).adj[v].size(), 2u);
  for (auto [i, j] : c5.nonzero_pairs()) EXPECT_EQ(c5.eta(i, j), d1("0.8"));

  EXPECT_THROW(cayley_graph({{4}}, {{{2}, d1("0.6")}}, m), invalid_argument);

  auto z2 = cayley_graph({{2}}, {{{1}, d1("1")}}, m);
  ASSERT_EQ(z2.n(), 2u);
  EXPECT_EQ(z2.eta(0, 1), d1("1"));

  EXPECT_THROW(cayley_graph({{5}}, {{{1}, d1("0.8")}}, m), invalid_argument);                       // asymmetric
  EXPECT_THROW(cayley_graph({{5}}, {{{0}, d1("0.1")}, {{1}, d1("0.8")}, {{4}, d1("0.8")}}, m), invalid_argument);
  EXPECT_THROW(cayley_graph({{0}}, {}, m), invalid_argument);
}

TEST(Cayley, ProductGroup) {
  auto m = fixtures::fuzzy_model();
  // Z2 x Z3 with generators (1,0) and (0,+-1): the prism over a triangle
  auto g = cayley_graph({{2, 3}}, {{{1, 0}, d1("0.5")}, {{0, 1}, d1("0.9")}, {{0, 2}, d1("0.9")}}, m);
  EXPECT_EQ(g.n(), 6u);
  EXPECT_EQ(support(g).edges.size(), 9u);
  EXPECT_EQ(g.id(g.n() - 1), "(1,2)");
}

TEST(Cayley, TranslationInvarianceAndConnectivity) {
  auto m = fixtures::fuzzy_model();
  std::mt19937_64 rng(77);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    group_spec grp;
    grp.factors.push_back(2 + static_cast<long>(rng() % 5));
    if (rng() % 2) grp.factors.push_back(2 + static_cast<long>(rng() % 3));
    auto table = std::vector<degree>(grp.order(), m->zero());
    for (std::size_t r = 1; r < grp.order(); ++r) {
      auto inv = grp.rank(grp.inverse(grp.element(r)));
      if (inv < r) continue;
      if (rng() % 2) table[r] = table[inv] = degree({rational(static_cast<long>(1 + rng() % 10), 10)});
    }
    group_subset subset;
    for (std::size_t r = 0; r < table.size(); ++r)
      if (!m->is_zero(table[r])) subset.push_back({grp.element(r), table[r]});
    if (!cayley_subset_failure(grp, table, *m).empty()) {
      EXPECT_THROW(cayley_graph(grp, subset, m), invalid_argument);
      continue;
    }
    ++built;
    auto g = cayley_graph(grp, subset, m);
    ASSERT_TRUE(crisp::connected(support(g)));
    for (std::size_t t = 0; t < grp.order(); ++t)
      for (std::size_t x = 0; x < grp.order(); ++x)
        for (std::size_t y = 0; y < grp.order(); ++y) {
          if (x == y) continue;
          auto tx = grp.rank(grp.add(grp.element(x), grp.element(t)));
          auto ty = grp.rank(grp.add(grp.element(y), grp.element(t)));
          ASSERT_EQ(g.eta(x, y), g.eta(tx, ty));
        }
  }
  EXPECT_GT(built, 50);
}

// ---- zero-divisor graphs

TEST(ZeroDivisor, Examples) {
  auto m = fixtures::fuzzy_model();
  auto z6 = zero_divisor_graph(6, {{2, d1("0.8")}, {3, d1("0.9")}, {4, d1("0.7")}}, true, m);
  EXPECT_EQ(z6.ids(), (std::vector<std::string>{"2", "3", "4"}));
  EXPECT_EQ(support_edges(z6), (std::set<std::pair<std::string, std::string>>{{"2", "3"}, {"3", "4"}}));
  EXPECT_EQ(z6.eta(0, 1), d1("4/5"));
  EXPECT_EQ(z6.eta(1, 2), d1("7/10"));

  auto z5 = zero_divisor_graph(5, {}, true, m);
  EXPECT_EQ(z5.n(), 0u);

  auto z8 = zero_divisor_graph(8, {{2, d1("0.3")}, {4, d1("0.6")}, {6, d1("0.9")}}, true, m);
  EXPECT_EQ(support_edges(z8), (std::set<std::pair<std::string, std::string>>{{"2", "4"}, {"4", "6"}}));

  EXPECT_THROW(zero_divisor_graph(1, {}, true, m), invalid_argument);
  EXPECT_THROW(zero_divisor_graph(6, {{2, d1("0.8")}, {3, d1("0.9")}}, true, m), invalid_argument);
  EXPECT_THROW(zero_divisor_graph(6, {{1, d1("0.8")}}, true, m), invalid_argument);
}

TEST(ZeroDivisor, CallerSuppliedDegrees) {
  auto m = fixtures::fuzzy_model();
  std::map<long, degree> sig{{2, d1("0.8")}, {3, d1("0.9")}, {4, d1("0.7")}};
  auto g = zero_divisor_graph(6, sig, false, m, {{{3, 2}, d1("0.5")}, {{3, 4}, d1("0.1")}});
  EXPECT_EQ(g.eta(0, 1), d1("0.5"));
  EXPECT_THROW(zero_divisor_graph(6, sig, false, m, {{{2, 3}, d1("0.5")}}), invalid_argument);
  EXPECT_THROW(zero_divisor_graph(6, sig, false, m, {{{2, 3}, d1("0.5")}, {{3, 4}, d1("0.1")}, {{2, 4}, d1("0.1")}}),
               invalid_argument);
}

TEST(ZeroDivisor, EdgesAnnihilateForAllModuli) {
  auto m = fixtures::fuzzy_model();
  for (long n = 2; n <= 40; ++n) {
    std::map<long, degree> sig;
    for (long x : zero_divisors(n)) sig[x] = d1("0.5");
    auto g = zero_divisor_graph(n, sig, true, m);
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j) {
        if (i == j) continue;
        long x = std::stol(g.id(i)), y = std::stol(g.id(j));
        ASSERT_EQ(!m->is_zero(g.eta(i, j)), (x * y) % n == 0) << n;
        ASSERT_EQ(g.eta(i, j), g.eta(j, i));
      }
  }
}

// ---- tolerance graphs

TEST(Tolerance, Examples) {
  trapezoid i1{0, 1, 3, 4}, i2{2, 3, 5, 6};
  trapezoid t1{0, 0, 1, 2}, t2{0, 1, 2, 3};  // cores 1 and 1, supports 2 and 3
  EXPECT_EQ(core_overlap(i1, i2), 0);
  EXPECT_EQ(support_overlap(i1, i2), 2);
  auto g = tolerance_graph({i1, i2}, {t1, t2});
  EXPECT_EQ(g.eta(0, 1), d1("1"));
  EXPECT_EQ(g.sigma(0), d1("1"));

  auto same = tolerance_graph({i1, i1}, {trapezoid{0, 0, 2, 9}, trapezoid{0, 0, 1, 9}});
  EXPECT_EQ(same.eta(0, 1), d1("1"));
  // identical intervals fall through when the core tolerance exceeds the core
  auto wide = tolerance_graph({i1, i1}, {trapezoid{0, 0, 5, 9}, trapezoid{0, 0, 7, 9}});
  EXPECT_TRUE(wide.nonzero_pairs().empty());

  auto apart = tolerance_graph({trapezoid{0, 1, 2, 3}, trapezoid{5, 6, 7, 8}}, {t1, t2});
  EXPECT_TRUE(apart.nonzero_pairs().empty());

  EXPECT_THROW(tolerance_graph({i1}, {trapezoid{0, 1, 1, 2}}), invalid_argument);
  EXPECT_THROW(tolerance_graph({i1}, {}), invalid_argument);
  EXPECT_THROW(tolerance_graph({trapezoid{2, 1, 3, 4}}, {t1}), invalid_argument);
}

TEST(Tolerance, ValuesInUnitIntervalAndBranchOneIsExact) {
  std::mt19937_64 rng(3);
  auto trap = [&] {
    std::vector<long> p(4);
    for (auto& x : p) x = static_cast<long>(rng() % 12);
    std::sort(p.begin(), p.end());
    return trapezoid{p[0], p[1], p[2], p[3]};
  };
  for (int trial = 0; trial < 500; ++trial) {
    trapezoid a = trap(), b = trap(), ta = trap(), tb = trap();
    if (ta.core_length() == 0) ta.c += 1;
    if (tb.core_length() == 0) tb.c += 1;
    rational mu = tolerance_degree(a, b, ta, tb);
    ASSERT_GE(mu, 0);
    ASSERT_LE(mu, 1);
    if (core_overlap(a, b) >= std::min(ta.core_length(), tb.core_length())) {
      ASSERT_EQ(mu, 1);
    }
  }
}

// ---- rough graphs

TEST(Rough, Examples) {
  rough_input in;
  in.vertices = {"a", "b", "c"};
  in.sigma = {iv("0.2", "0.4"), iv("0.6", "0.8"), iv("0.5", "0.9")};
  in.edges = {{"a", "c"}, {"b", "c"}};
  in.p = {iv("0.1", "0.2"), iv("0.3", "0.5")};
  in.vertex_classes = {{"a", "b"}, {"c"}};
  in.edge_classes = {{{"a", "c"}, {"c", "b"}}};
  auto r = rough_graph(in);
  EXPECT_EQ(r.lower.sigma(0), iv("0.2", "0.4"));
  EXPECT_EQ(r.lower.sigma(1), iv("0.2", "0.4"));
  EXPECT_EQ(r.upper.sigma(0), iv("0.6", "0.8"));
  EXPECT_EQ(r.upper.sigma(1), iv("0.6", "0.8"));
  EXPECT_EQ(r.lower.eta(0, 2), iv("0.1", "0.2"));
  EXPECT_EQ(r.upper.eta(1, 2), iv("0.3", "0.5"));

  in.vertex_classes = {{"a"}, {"b"}, {"c"}};
  in.edge_classes = {{{"a", "c"}}, {{"b", "c"}}};
  auto s = rough_graph(in);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(s.lower.sigma(i), s.upper.sigma(i));
  EXPECT_EQ(s.lower.eta(1, 2), iv("0.3", "0.5"));
}

TEST(Rough, CompatibilityAndPartitionErrors) {
  rough_input in;
  in.vertices = {"a", "b"};
  in.sigma = {iv("0.2", "0.4"), iv("0.6", "0.8")};
  in.edges = {{"a", "b"}};
  in.p = {iv("0.3", "0.3")};
  in.vertex_classes = {{"a"}, {"b"}};
  in.edge_classes = {{{"a", "b"}}};
  auto report = rough_compatibility(rough_approximate(in));
  EXPECT_TRUE(report.mentions("{a,b}"));
  EXPECT_THROW(rough_graph(in), invalid_argument);
  in.p = {iv("0.1", "0.3")};
  EXPECT_NO_THROW(rough_graph(in));
  in.vertex_classes = {{"a"}};
  EXPECT_THROW(rough_graph(in), invalid_argument);
  in.vertex_classes = {{"a", "b"}, {"b"}};
  EXPECT_THROW(rough_graph(in), invalid_argument);
}

TEST(Rough, LowerBelowUpperOnRandomInputs) {
  std::mt19937_64 rng(9);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    rough_input in;
    const std::size_t n = 3 + trial % 4;
    for (std::size_t i = 0; i < n; ++i) {
      in.vertices.push_back("x" + std::to_string(i));
      long lo = static_cast<long>(rng() % 6) + 5, hi = lo + static_cast<long>(rng() % (11 - lo));
      in.sigma.push_back(degree({rational(lo, 10), rational(hi, 10)}));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 2) {
          in.edges.push_back({in.vertices[i], in.vertices[j]});
          long lo = static_cast<long>(rng() % 3), hi = lo + static_cast<long>(rng() % 3);
          in.p.push_back(degree({rational(lo, 10), rational(hi, 10)}));
        }
    // random partitions: vertices by residue, edges in pairs
    std::size_t parts = 1 + rng() % 3;
    in.vertex_classes.assign(parts, {});
    for (std::size_t i = 0; i < n; ++i) in.vertex_classes[i % parts].push_back(in.vertices[i]);
    std::erase_if(in.vertex_classes, [](const auto& c) { return c.empty(); });
    for (std::size_t e = 0; e < in.edges.size(); e += 2) {
      in.edge_classes.push_back({in.edges[e]});
      if (e + 1 < in.edges.size()) in.edge_classes.back().push_back(in.edges[e + 1]);
    }
    auto approx = rough_approximate(in);
    if (!rough_compatibility(approx).ok()) {
      EXPECT_THROW(rough_graph(in), invalid_argument);
      continue;
    }
    ++built;
    auto r = rough_graph(in);
    ASSERT_TRUE(validate_graph(r.lower).ok());
    ASSERT_TRUE(validate_graph(r.upper).ok());
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(componentwise_leq(r.lower.sigma(i), r.upper.sigma(i)));
    for (auto [i, j] : r.upper.nonzero_pairs()) ASSERT_TRUE(componentwise_leq(r.lower.eta(i, j), r.upper.eta(i, j)));
  }
  EXPECT_GT(built, 100);
}

// ---- families

namespace {

graph_family soft_family() {
  graph_family f;
  f.kind = family_kind::soft;
  f.m = interval_model();
  f.vertices = {"u", "v", "w"};
  f.members.push_back({{"cheap"}, {iv("0.5", "0.9"), iv("0.4", "0.6"), iv("0.7", "0.8")}, {{"u", "v", iv("0.3", "0.6")}}});
  f.members.push_back({{"fast"},
                       {iv("0.2", "0.3"), iv("0.4", "0.6"), iv("0.7", "0.8")},
                       {{"u", "w", iv("0.2", "0.3")}, {"v", "w", iv("0.4", "0.5")}}});
  return f;
}

}  // namespace

TEST(Family, SoftSlices) {
  auto f = ingest_family(soft_family());
  for (const auto& key : {family_key{"cheap"}, family_key{"fast"}}) {
    auto g = family_slice(f, key);
    EXPECT_TRUE(validate_graph(g).ok());
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j)
        if (i != j) {
          ASSERT_EQ(g.eta(i, j), g.eta(j, i));
          ASSERT_TRUE(componentwise_leq(g.eta(i, j), componentwise_min(g.sigma(i), g.sigma(j))));
        }
  }
  auto fast = family_slice(f, {"fast"});
  EXPECT_EQ(fast.eta(0, 1), iv("0", "0"));
  EXPECT_THROW(family_slice(f, {"slow"}), invalid_argument);
}

TEST(Family, ExpertKeysAreTriples) {
  auto f = soft_family();
  f.kind = family_kind::expert;
  EXPECT_FALSE(validate_family(f).ok());
  f.members[0].key = {"cheap", "e1", "agree"};
  f.members[1].key = {"cheap", "e2", "disagree"};
  f = ingest_family(f);
  EXPECT_NO_THROW(family_slice(f, {"cheap", "e2", "disagree"}));
  EXPECT_THROW(family_slice(f, {"cheap", "e3", "agree"}), invalid_argument);
}

TEST(Family, DynamicRejectsEdgeAtZeroVertex) {
  graph_family f;
  f.kind = family_kind::dynamic;
  f.m = interval_model();
  f.vertices = {"u", "v"};
  f.members.push_back({{"t0"}, {iv("0.5", "0.6"), iv("0.5", "0.6")}, {{"u", "v", iv("0.1", "0.2")}}});
  f.members.push_back({{"t1"}, {iv("0", "0"), iv("0.5", "0.6")}, {{"u", "v", iv("0.1", "0.2")}}});
  auto r = validate_family(f);
  EXPECT_TRUE(r.mentions("t1:{u,v}"));
  EXPECT_THROW(ingest_family(f), invalid_argument);
}

TEST(Family, KnowledgeGraphRelationSlice) {
  knowledge_graph kg{{"h", "t"}, {"r", "s"}, {{"h", "r", "t", q("0.7")}, {"h", "s", "t", q("0.2")}}};
  auto g = relation_slice(kg, "r");
  ASSERT_EQ(g.arcs.size(), 1u);
  EXPECT_EQ(g.arcs[0].source, "h");
  EXPECT_EQ(g.arcs[0].target, "t");
  EXPECT_EQ(g.arcs[0].alpha, d1("0.7"));
  EXPECT_TRUE(validate_variant(g).ok());
  EXPECT_THROW(relation_slice(kg, "zz"), invalid_argument);
  kg.facts.push_back({"h", "r", "h", q("0.5")});
  EXPECT_FALSE(validate_variant(relation_slice(kg, "r")).ok());
  kg.facts.back().truth = 0;
  EXPECT_THROW(relation_slice(kg, "r"), invalid_argument);
}

// ---- sampling

namespace {

random_template sample_template(distribution edge) {
  random_template t;
  t.m = fixtures::fuzzy_model();
  t.vertices = {"a", "b", "c", "d"};
  t.vertex_dist.assign(4, distribution{distribution_kind::uniform_grid, d1("0.5"), d1("1"), 1, 10});
  t.edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}, {"a", "c"}};
  t.edge_dist.assign(t.edges.size(), edge);
  t.seed = 42;
  return t;
}

}  // namespace

TEST(Sampling, BernoulliExtremes) {
  auto all = sample_random(sample_template({distribution_kind::bernoulli, {}, d1("0.3"), 1, 1}));
  EXPECT_EQ(all.support.edges.size(), 5u);
  auto none = sample_random(sample_template({distribution_kind::bernoulli, {}, d1("0.3"), 0, 1}));
  EXPECT_TRUE(none.support.edges.empty());
}

TEST(Sampling, DeterministicAndOrderIndependent) {
  auto t = sample_template({distribution_kind::bernoulli, {}, d1("0.3"), q("1/2"), 1});
  auto a = sample_random(t), b = sample_random(t);
  EXPECT_EQ(a.graph.sigmas(), b.graph.sigmas());
  EXPECT_EQ(a.graph.nonzero_pairs(), b.graph.nonzero_pairs());

  auto r = t;
  std::reverse(r.vertices.begin(), r.vertices.end());
  std::reverse(r.edges.begin(), r.edges.end());
  for (auto& e : r.edges) std::swap(e.first, e.second);
  auto c = sample_random(r);
  for (const auto& id : t.vertices) EXPECT_EQ(a.graph.sigma(a.graph.index_of(id)), c.graph.sigma(c.graph.index_of(id)));
  for (const auto& [u, v] : t.edges)
    EXPECT_EQ(a.graph.eta(a.graph.index_of(u), a.graph.index_of(v)), c.graph.eta(c.graph.index_of(u), c.graph.index_of(v)));

  // different seeds disagree somewhere
  bool differs = false;
  for (std::uint64_t s = 1; s < 20 && !differs; ++s) {
    auto u = t;
    u.seed = s;
    differs = sample_random(u).graph.sigmas() != a.graph.sigmas();
  }
  EXPECT_TRUE(differs);
}

TEST(Sampling, GridValuesStayOnGridAndSupportMatches) {
  auto t = sample_template({distribution_kind::uniform_grid, d1("0"), d1("0.4"), 1, 5});
  for (std::uint64_t s = 0; s < 200; ++s) {
    t.seed = s;
    auto r = sample_random(t);
    for (const auto& d : r.graph.sigmas()) {
      ASSERT_GE(d[0], q("0.5"));
      ASSERT_LE(d[0], 1);
      ASSERT_EQ(rational(d[0] * 10).get_den(), 1);
    }
    std::size_t nonzero = 0;
    for (const auto& [u, v] : t.edges) {
      const auto& e = r.graph.eta(r.graph.index_of(u), r.graph.index_of(v));
      ASSERT_LE(e[0], q("0.4"));
      ASSERT_EQ(rational(e[0] * 5).get_den(), 1);
      nonzero += e[0] != 0;
    }
    ASSERT_EQ(r.support.edges.size(), nonzero);
  }
}

TEST(Sampling, RejectsBadTemplates) {
  auto t = sample_template({distribution_kind::bernoulli, {}, d1("0.3"), q("3/2"), 1});
  EXPECT_THROW(sample_random(t), invalid_argument);
  t = sample_template({distribution_kind::uniform_grid, d1("0.31"), d1("0.39"), 1, 10});
  EXPECT_THROW(sample_random(t), invalid_argument);
  random_template it;
  it.m = std::make_shared<const model>(make_model(model_kind::intuitionistic));
  it.vertices = {"a"};
  it.vertex_dist = {{distribution_kind::uniform_grid, make_degree({"0", "0"}), make_degree({"0.6", "0.6"}), 1, 10}};
  EXPECT_THROW(sample_random(it), invalid_argument);
  it.vertex_dist[0].hi = make_degree({"0.6", "0.4"});
  EXPECT_NO_THROW(sample_random(it));
}

// ---- generators

TEST(Generate, CompleteStarWheel) {
  auto m = fixtures::fuzzy_model();
  auto k3 = generate_graph(generated_shape::complete, {d1("0.9"), d1("0.7"), d1("0.5")}, m);
  EXPECT_EQ(k3.eta(0, 1), d1("0.7"));
  EXPECT_EQ(k3.eta(0, 2), d1("0.5"));
  EXPECT_EQ(k3.eta(1, 2), d1("0.5"));
  EXPECT_TRUE(check_complete(k3).holds);

  auto star = generate_graph(generated_shape::star, {d1("0.7"), d1("0.6"), d1("0.8"), d1("0.5")}, m, d1("0.9"));
  auto ss = shape(star);
  ASSERT_TRUE(ss.star.has_value());
  EXPECT_EQ(star.id(ss.star->center), "c");
  EXPECT_EQ(ss.star->leaves.size(), 4u);

  auto wheel = generate_graph(generated_shape::wheel, {d1("0.7"), d1("0.6"), d1("0.8")}, m, d1("0.9"));
  auto ws = shape(wheel);
  ASSERT_TRUE(ws.wheel.has_value());
  EXPECT_EQ(ws.wheel->rim.size(), 3u);

  auto w6 = generate_graph(generated_shape::wheel, {d1("0.7"), d1("0.6"), d1("0.8"), d1("0.5"), d1("0.4")}, m, d1("0.9"));
  ASSERT_TRUE(shape(w6).wheel.has_value());
  EXPECT_EQ(wheel.id(shape(w6).wheel->hub), "h");

  EXPECT_THROW(generate_graph(generated_shape::complete, {}, m), invalid_argument);
  EXPECT_THROW(generate_graph(generated_shape::star, {}, m, d1("1")), invalid_argument);
  EXPECT_THROW(generate_graph(generated_shape::wheel, {d1("1"), d1("1")}, m, d1("1")), invalid_argument);
}
