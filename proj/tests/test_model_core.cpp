#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "random_graphs.hpp"
#include "ugt/core/validation.hpp"

using namespace ugt;
using fixtures::d1;
using fixtures::q;

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("3/5"), rational(3, 5));
  EXPECT_EQ(parse_rational("6/10"), rational(3, 5));
  EXPECT_EQ(parse_rational("0.35"), rational(7, 20));
  EXPECT_EQ(parse_rational("-1.5"), rational(-3, 2));
  EXPECT_EQ(parse_rational("25e-2"), rational(1, 4));
  EXPECT_EQ(parse_rational("1"), rational(1));
  EXPECT_THROW(parse_rational("1/0"), invalid_argument);
  EXPECT_THROW(parse_rational("abc"), invalid_argument);
  EXPECT_THROW(parse_rational(""), invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), invalid_argument);
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(rational(2281, 200)), "2281/200");
  EXPECT_EQ(to_string(rational(6, 2)), "3");
  EXPECT_EQ(to_string(rational(-7, 5)), "-7/5");
  EXPECT_EQ(to_string(rational(0)), "0");
}

TEST(MakeModel, CanonicalZeroAndUnit) {
  auto m = make_model(model_kind::fuzzy, 1);
  EXPECT_EQ(m.zero(), d1("0"));
  EXPECT_EQ(m.unit(), d1("1"));
  auto iv = make_model(model_kind::interval, 2);
  EXPECT_EQ(iv.zero(), make_degree({"0", "0"}));
  EXPECT_EQ(iv.unit(), make_degree({"1", "1"}));
}

TEST(MakeModel, KindConstraints) {
  auto ifs = make_model(model_kind::intuitionistic, 2);
  EXPECT_FALSE(ifs.admissible(make_degree({"0.7", "0.4"})));
  EXPECT_TRUE(ifs.admissible(make_degree({"0.7", "0.3"})));
  auto iv = make_model(model_kind::interval, 2);
  EXPECT_FALSE(iv.admissible(make_degree({"0.6", "0.4"})));
  auto nm = make_model(model_kind::neutrosophic, 3);
  EXPECT_TRUE(nm.admissible(make_degree({"1", "1", "1"})));
  EXPECT_FALSE(nm.admissible(make_degree({"1.1", "0", "0"})));
}

TEST(MakeModel, RejectsBadParameters) {
  EXPECT_THROW(make_model(model_kind::fuzzy, 2), invalid_argument);
  EXPECT_THROW(make_model(model_kind::kdim, 0), invalid_argument);
  model_params p;
  p.dombi_lambda = rational(0);
  EXPECT_THROW(make_model(model_kind::fuzzy, 1, p), invalid_argument);
  EXPECT_NO_THROW(make_model(model_kind::kdim, 5));
}

TEST(Compare, ScalarAndReflexive) {
  auto m = make_model(model_kind::fuzzy, 1);
  EXPECT_EQ(m.compare(d1("0.3"), d1("0.5")), std::strong_ordering::less);
  EXPECT_EQ(m.compare(d1("0.5"), d1("0.5")), std::strong_ordering::equal);
  EXPECT_THROW((void)m.compare(d1("0.5"), make_degree({"0.1", "0.2"})), invalid_argument);
}

TEST(Compare, LexicographicTieBreakOnEqualScore) {
  model_params p;
  p.ops.delta = [](const degree& d) { return d[0]; };
  auto m = make_model(model_kind::kdim, 2, p);
  EXPECT_EQ(m.compare(make_degree({"0.5", "0.1"}), make_degree({"0.5", "0.9"})), std::strong_ordering::less);
}

TEST(Compare, IsATotalOrderOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (auto kind : {model_kind::fuzzy, model_kind::intuitionistic, model_kind::neutrosophic, model_kind::interval}) {
    auto m = make_model(kind);
    for (int i = 0; i < 10000; ++i) {
      auto a = fixtures::random_degree(rng, m), b = fixtures::random_degree(rng, m),
           c = fixtures::random_degree(rng, m);
      auto ab = m.compare(a, b), ba = m.compare(b, a);
      ASSERT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
      ASSERT_EQ(ab == std::strong_ordering::equal, a == b);
      if (m.leq(a, b) && m.leq(b, c)) {
        ASSERT_TRUE(m.leq(a, c));
      }
    }
  }
}

TEST(PathStrength, ComponentwiseMinimum) {
  auto m = make_model(model_kind::fuzzy, 1);
  EXPECT_EQ(m.path_strength({d1("0.6"), d1("0.5"), d1("0.4")}), d1("0.4"));
  EXPECT_EQ(m.path_strength({d1("0.37")}), d1("0.37"));
  auto k2 = make_model(model_kind::kdim, 2);
  EXPECT_EQ(k2.path_strength({make_degree({"0.5", "0.8"}), make_degree({"0.7", "0.2"})}), make_degree({"0.5", "0.2"}));
  EXPECT_THROW(m.path_strength({}), invalid_argument);
}

TEST(PathStrength, PermutationInvariantAndUnitNeutral) {
  std::mt19937_64 rng(11);
  auto m = make_model(model_kind::fuzzy, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<degree> parts;
    for (int i = 0; i < 5; ++i) parts.push_back(fixtures::random_degree(rng, m));
    auto base = m.path_strength(parts);
    std::shuffle(parts.begin(), parts.end(), rng);
    EXPECT_EQ(m.path_strength(parts), base);
    parts.push_back(m.unit());
    EXPECT_EQ(m.path_strength(parts), base);
  }
}

TEST(Evaluate, Defaults) {
  auto m = make_model(model_kind::fuzzy, 1);
  EXPECT_EQ(m.evaluate(eval_map::lambda_len, d1("0.8")), rational(5, 4));
  EXPECT_EQ(m.evaluate(eval_map::delta, m.zero()), 0);
  EXPECT_EQ(m.evaluate(eval_map::omega, m.zero()), 0);
  EXPECT_THROW(m.evaluate(eval_map::lambda_len, m.zero()), invalid_argument);
  auto k3 = make_model(model_kind::kdim, 3);
  EXPECT_EQ(k3.evaluate(eval_map::delta, make_degree({"0.3", "0.6", "0.9"})), rational(3, 5));
}

TEST(Evaluate, LengthTimesScoreIsOne) {
  std::mt19937_64 rng(3);
  for (auto kind : {model_kind::fuzzy, model_kind::intuitionistic, model_kind::neutrosophic}) {
    auto m = make_model(kind);
    for (int i = 0; i < 500; ++i) {
      auto d = fixtures::random_degree(rng, m);
      if (m.is_zero(d)) continue;
      EXPECT_EQ(m.evaluate(eval_map::lambda_len, d) * m.evaluate(eval_map::delta, d), 1);
    }
  }
}

TEST(Combine, CompleteEdgeLineAdjacencyDombi) {
  model_params p;
  p.dombi_lambda = rational(1);
  auto m = make_model(model_kind::fuzzy, 1, p);
  EXPECT_EQ(m.combine(combine_op::complete_edge, d1("0.9"), d1("0.7")), d1("0.7"));
  EXPECT_EQ(m.combine(combine_op::line_adjacency, m.zero(), d1("0.7")), m.zero());
  EXPECT_EQ(m.combine(combine_op::dombi, d1("0.5"), d1("0.5")), degree({rational(1, 3)}));
  EXPECT_EQ(m.combine(combine_op::dombi, d1("0"), d1("0.5")), d1("0"));
  auto plain = make_model(model_kind::fuzzy, 1);
  EXPECT_THROW(plain.combine(combine_op::dombi, d1("0.5"), d1("0.5")), invalid_argument);
}

TEST(Combine, DombiGeneralExponentIsBoundedByMinimum) {
  model_params p;
  p.dombi_lambda = rational(2);
  auto m = make_model(model_kind::fuzzy, 1, p);
  auto r = m.combine(combine_op::dombi, d1("0.5"), d1("0.5"));
  // 1 / (1 + sqrt(2))
  EXPECT_NEAR(to_double(r[0]), 1.0 / (1.0 + std::sqrt(2.0)), 1e-12);
  EXPECT_EQ(m.combine(combine_op::dombi, d1("1"), d1("0.3")), d1("0.3"));
}

TEST(Combine, SymmetryAndLineAdjacencyZeroCharacterisation) {
  std::mt19937_64 rng(5);
  for (auto kind : {model_kind::fuzzy, model_kind::intuitionistic, model_kind::neutrosophic}) {
    auto m = make_model(kind);
    for (int i = 0; i < 1000; ++i) {
      auto a = fixtures::random_degree(rng, m), b = fixtures::random_degree(rng, m);
      EXPECT_EQ(m.combine(combine_op::complete_edge, a, b), m.combine(combine_op::complete_edge, b, a));
      auto la = m.combine(combine_op::line_adjacency, a, b);
      EXPECT_EQ(la, m.combine(combine_op::line_adjacency, b, a));
      EXPECT_EQ(m.is_zero(la), m.is_zero(a) || m.is_zero(b));
    }
  }
}

TEST(Support, StarInput) {
  auto g = fixtures::four_leaf_star();
  auto s = support(g);
  EXPECT_EQ(s.vertices.size(), 5u);
  ASSERT_EQ(s.edges.size(), 4u);
  for (auto [a, b] : s.edges) EXPECT_TRUE(g.id(a) == "c" || g.id(b) == "c");
}

TEST(Support, ZeroVerticesDropTheirEdges) {
  auto g = fixtures::fuzzy_graph({{"a", "0"}, {"b", "0"}}, {}, constraint_profile::none);
  EXPECT_TRUE(support(g).vertices.empty());
  auto h = fixtures::fuzzy_graph({{"u", "0"}, {"v", "0.5"}}, {{"u", "v", "0.3"}}, constraint_profile::none);
  auto s = support(h);
  EXPECT_EQ(s.vertices.size(), 1u);
  EXPECT_TRUE(s.edges.empty());
}

TEST(Graph, RejectsStructuralErrors) {
  using fixtures::fuzzy_graph;
  EXPECT_THROW(fuzzy_graph({{"a", "1"}}, {{"a", "a", "0.5"}}), invalid_argument);
  EXPECT_THROW(fuzzy_graph({{"a", "1"}}, {{"a", "b", "0.5"}}), invalid_argument);
  EXPECT_THROW(fuzzy_graph({{"a", "1"}, {"a", "1"}}, {}), invalid_argument);
  EXPECT_THROW(fuzzy_graph({{"a", "1"}, {"b", "1"}}, {{"a", "b", "0.5"}, {"b", "a", "0.5"}}), invalid_argument);
}

TEST(ValidateGraph, PaperGraphsAreClean) {
  EXPECT_TRUE(validate_graph(fixtures::intuitionistic_square()).ok());
  EXPECT_TRUE(validate_graph(fixtures::neutrosophic_square()).ok());
}

TEST(ValidateGraph, CapViolationNamesThePair) {
  auto g = fixtures::fuzzy_graph({{"u", "0.5"}, {"v", "1"}}, {{"u", "v", "0.9"}});
  auto r = validate_graph(g);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.mentions("{u,v}"));
  EXPECT_TRUE(validate_graph(fixtures::fuzzy_graph({{"u", "0.5"}, {"v", "1"}}, {{"u", "v", "0.9"}},
                                                   constraint_profile::none))
                  .ok());
}

TEST(ValidateGraph, MultiDimensionalCaps) {
  auto r = validate_graph(fixtures::intuitionistic_square("0.05"));
  EXPECT_TRUE(r.mentions("{v1,v2}"));
  auto s = validate_graph(fixtures::neutrosophic_square("0.55"));
  EXPECT_TRUE(s.mentions("{v3,v4}"));
}

TEST(ValidateGraph, KindConstraintOnVertices) {
  auto m = std::make_shared<const model>(make_model(model_kind::intuitionistic));
  auto g = graph_builder(m).vertex("a", make_degree({"0.7", "0.4"})).build();
  EXPECT_TRUE(validate_graph(g).mentions("a"));
}

TEST(ValidatePlithogenic, PaperSpecIsClean) { EXPECT_TRUE(validate_plithogenic(fixtures::plithogenic_path()).ok()); }

TEST(ValidatePlithogenic, AsymmetricContradiction) {
  auto s = fixtures::plithogenic_path();
  s.acf[{"L", "H"}] = q("0.5");
  auto r = validate_plithogenic(s);
  EXPECT_FALSE(r.ok());
  bool a3 = false;
  for (const auto& v : r.violations) a3 = a3 || v.rule == "A3";
  EXPECT_TRUE(a3);
}

TEST(ValidatePlithogenic, AppurtenanceBound) {
  auto s = fixtures::plithogenic_path();
  s.bdf[{"v1", "v2", "L", "H"}] = d1("0.9");
  auto r = validate_plithogenic(s);
  EXPECT_TRUE(r.mentions("{v1,v2}"));
}

TEST(ValidatePlithogenic, EdgeContradictionBound) {
  auto s = fixtures::plithogenic_path();
  s.bcf.emplace();
  (*s.bcf)[{"H", "H", "L", "L"}] = q("0.7");
  (*s.bcf)[{"L", "L", "H", "H"}] = q("0.7");
  auto r = validate_plithogenic(s);
  bool a2 = false;
  for (const auto& v : r.violations) a2 = a2 || v.rule == "A2";
  EXPECT_TRUE(a2);
}

TEST(Support, WellFormedOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto g = fixtures::random_fuzzy_graph(seed, 3 + seed % 6, 0.5, true);
    ASSERT_TRUE(validate_graph(g).ok());
    auto s = support(g);
    for (auto [a, b] : s.edges) {
      ASSERT_TRUE(s.in_support[a] && s.in_support[b]);
      ASSERT_TRUE(componentwise_leq(g.eta(a, b), g.m().combine(combine_op::complete_edge, g.sigma(a), g.sigma(b))));
    }
  }
}
