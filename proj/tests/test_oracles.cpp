#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "random_graphs.hpp"
#include "ugt/oracles/oracles.hpp"
#include "ugt/oracles/planarity.hpp"
#include "ugt/oracles/spectrum.hpp"
#include "ugt/params/params.hpp"
#include "ugt/structure/classes.hpp"
#include "ugt/structure/density.hpp"

using namespace ugt;
using fixtures::fuzzy_graph;
using fixtures::q;

TEST(Oracle, ReportsEnumerationCounts) {
  auto g = fixtures::chorded_square();
  auto m = oracle::oracle_parameter(g, oracle::kind::matching);
  EXPECT_EQ(m.value, 1);
  EXPECT_EQ(m.enumerated, 32u);
  auto c = oracle::oracle_parameter(g, oracle::kind::vertex_cover);
  EXPECT_EQ(c.value, q("17/10"));
  EXPECT_EQ(c.enumerated, 16u);
  auto t = oracle::oracle_parameter(g, oracle::kind::treewidth);
  EXPECT_EQ(t.value, q("7/5"));
  EXPECT_EQ(t.enumerated, 24u);
  EXPECT_EQ(oracle::oracle_parameter(g, oracle::kind::chromatic).value, 3);
}

TEST(Oracle, TrivialGraphs) {
  auto e = fuzzy_graph({{"a", "0.4"}, {"b", "0.6"}}, {});
  EXPECT_EQ(oracle::oracle_parameter(e, oracle::kind::matching).value, 0);
  EXPECT_EQ(oracle::oracle_parameter(e, oracle::kind::vertex_cover).value, 0);
  EXPECT_EQ(oracle::oracle_parameter(e, oracle::kind::domination).value, 1);
  EXPECT_EQ(oracle::oracle_parameter(e, oracle::kind::independence).value, 1);
  EXPECT_EQ(oracle::oracle_parameter(e, oracle::kind::chromatic).value, 1);
  EXPECT_EQ(oracle::oracle_parameter(e, oracle::kind::threshold).value, 1);
  auto b = oracle::oracle_parameter(e, oracle::kind::balanced);
  EXPECT_TRUE(b.balanced);
  EXPECT_EQ(b.value, 0);
}

TEST(Oracle, SizeCap) {
  std::vector<std::string> ids;
  for (int i = 0; i < 9; ++i) ids.push_back("x" + std::to_string(i));
  std::vector<fixtures::vtx> vs;
  for (auto& s : ids) vs.push_back({s.c_str(), "1"});
  auto g = fuzzy_graph(vs, {});
  EXPECT_THROW(oracle::oracle_parameter(g, oracle::kind::matching), size_cap_exceeded);
}

namespace {

void expect_agreement(const uncertain_graph& g, std::uint64_t seed) {
  const std::size_t n = g.n();
  for (bool effective : {false, true}) {
    auto variant = effective ? domination_variant::effective_edge : domination_variant::strong_arc;
    oracle::options opt;
    opt.effective_edge = effective;
    ASSERT_EQ(domination_number(g, variant).value, oracle::oracle_parameter(g, oracle::kind::domination, opt).value)
        << seed << " n=" << n;
    ASSERT_EQ(domination_number(g, variant, true).value,
              oracle::oracle_parameter(g, oracle::kind::secure_domination, opt).value)
        << seed << " n=" << n;
  }
  ASSERT_EQ(independence_number(g).value, oracle::oracle_parameter(g, oracle::kind::independence).value) << seed;
  ASSERT_EQ(matching_number(g).value, oracle::oracle_parameter(g, oracle::kind::matching).value) << seed;
  ASSERT_EQ(vertex_cover_number(g).value, oracle::oracle_parameter(g, oracle::kind::vertex_cover).value) << seed;
  if (n <= 7) {
    ASSERT_EQ(chromatic_number(g).value, oracle::oracle_parameter(g, oracle::kind::chromatic).value) << seed;
    ASSERT_EQ(treewidth(g).value, oracle::oracle_parameter(g, oracle::kind::treewidth).value) << seed;
  }
  ASSERT_EQ(find_threshold(g), oracle::oracle_parameter(g, oracle::kind::threshold).value) << seed;
  auto db = density_balanced(g);
  auto ob = oracle::oracle_parameter(g, oracle::kind::balanced);
  ASSERT_EQ(db.densest, ob.value) << seed;
  ASSERT_EQ(db.balanced, ob.balanced) << seed;
}

}  // namespace

class OracleEquivalence : public ::testing::TestWithParam<std::size_t> {};

TEST_P(OracleEquivalence, HundredSeededGraphs) {
  const std::size_t n = GetParam();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = fixtures::random_fuzzy_graph(1000 * n + seed, n);
    expect_agreement(g, seed);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, OracleEquivalence, ::testing::Values(3, 4, 5, 6, 7, 8));

TEST(Oracle, AgreementOnOtherModels) {
  std::mt19937_64 rng(11);
  for (auto kind : {model_kind::intuitionistic, model_kind::neutrosophic}) {
    auto m = std::make_shared<const model>(make_model(kind));
    for (int trial = 0; trial < 40; ++trial) {
      graph_builder b(m, constraint_profile::none);
      const std::size_t n = 3 + trial % 4;
      std::vector<degree> sig;
      for (std::size_t i = 0; i < n; ++i) {
        sig.push_back(fixtures::random_degree(rng, *m));
        b.vertex("v" + std::to_string(i), sig.back());
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          auto d = fixtures::random_degree(rng, *m);
          // keep edges coverable by their endpoints so treewidth stays defined
          auto cap = m->combine(combine_op::complete_edge, sig[i], sig[j]);
          if (!m->leq(d, cap)) d = cap;
          if (!m->is_zero(d)) b.edge("v" + std::to_string(i), "v" + std::to_string(j), d);
        }
      auto g = b.build();
      expect_agreement(g, static_cast<std::uint64_t>(trial));
    }
  }
}

TEST(Properties, GallaiIdentity) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = fixtures::random_fuzzy_graph(seed, 2 + seed % 7, 0.5);
    rational total = 0;
    for (auto v : support(g).vertices) total += g.m().evaluate(eval_map::omega, g.sigma(v));
    ASSERT_EQ(vertex_cover_number(g).value + oracle::support_independence(g), total) << seed;
  }
}

TEST(Properties, ChromaticLevelsAreAntitone) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = fixtures::random_fuzzy_graph(seed, 3 + seed % 6, 0.6);
    auto levels = realized_levels(g);
    std::size_t prev = std::numeric_limits<std::size_t>::max(), top = 0;
    for (const auto& level : levels) {
      auto c = cut_chromatic(g, level).colors;
      ASSERT_LE(c, prev) << seed;
      prev = c;
      top = std::max(top, c);
    }
    ASSERT_EQ(chromatic_number(g).value, rational(static_cast<long>(top)));
  }
}

TEST(Properties, TreewidthCliqueLowerBound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = fixtures::random_fuzzy_graph(seed, 2 + seed % 7, 0.6);
    auto s = support(g);
    const auto& vs = s.vertices;
    rational heaviest = 0;
    for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
      bool clique = true;
      rational w = 0;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        w += g.m().evaluate(eval_map::omega, g.sigma(vs[i]));
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if ((mask >> j & 1u) && !s.adjacent(vs[i], vs[j])) clique = false;
      }
      if (clique && w > heaviest) heaviest = w;
    }
    ASSERT_GE(treewidth(g).value, heaviest - 1) << seed;
  }
}

TEST(Properties, PlanarityMatchesMinorOracle) {
  int nonplanar = 0;
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto g = fixtures::random_fuzzy_graph(1000 * n + seed, n, n >= 7 ? 0.7 : 0.5);
      bool planar = oracle::oracle_planar(g);
      auto r = planarity_value(g);
      ASSERT_EQ(planar, r.exact) << n << " " << seed;
      if (planar) {
        ASSERT_EQ(r.value, 1);
      } else {
        ++nonplanar;
        const auto& b = std::get<interval_bounds>(r.witness);
        ASSERT_LE(b.lower, b.upper);
        ASSERT_LT(b.upper, 1);
      }
    }
  EXPECT_GT(nonplanar, 0);
}

TEST(OracleSpectrum, Examples) {
  auto edge = oracle::oracle_spectrum(fuzzy_graph({{"a", "1"}, {"b", "1"}, {"c", "1"}}, {{"a", "b", "0.5"}}));
  ASSERT_EQ(edge.size(), 3u);
  EXPECT_NEAR(edge[0], -0.5, 1e-12);
  EXPECT_NEAR(edge[1], 0.0, 1e-12);
  EXPECT_NEAR(edge[2], 0.5, 1e-12);
  auto zero = oracle::oracle_spectrum(fuzzy_graph({{"a", "1"}, {"b", "1"}}, {}));
  EXPECT_EQ(zero, (std::vector<double>{0.0, 0.0}));
  auto tri = oracle::oracle_spectrum(fixtures::complete_triangle());
  auto p = oracle::characteristic_polynomial({{0, q("0.7"), q("0.5")}, {q("0.7"), 0, q("0.5")}, {q("0.5"), q("0.5"), 0}});
  EXPECT_EQ(p, (oracle::polynomial{q("-0.35"), q("-0.99"), 0, 1}));
  double energy = 0;
  for (double x : tri) energy += std::fabs(x);
  EXPECT_NEAR(energy, 2.2780, 1e-3);
  EXPECT_GT(tri[2], 0);
  EXPECT_LT(tri[1], 0);
  EXPECT_LT(tri[0], 0);
}

TEST(OracleSpectrum, AgreesWithJacobi) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto g = fixtures::random_fuzzy_graph(1000 * n + seed, n);
      auto a = spectrum_energy(g).eigenvalues;
      auto b = oracle::oracle_spectrum(g);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) ASSERT_NEAR(a[i], b[i], 1e-9) << n << " " << seed;
    }
}

TEST(OracleSpectrum, RepeatedEigenvalues) {
  // unit complete graph on four vertices: 3 once, -1 three times
  std::vector<fixtures::edg> es{{"a", "b", "1"}, {"a", "c", "1"}, {"a", "d", "1"},
                                {"b", "c", "1"}, {"b", "d", "1"}, {"c", "d", "1"}};
  auto k4 = fuzzy_graph({{"a", "1"}, {"b", "1"}, {"c", "1"}, {"d", "1"}}, es);
  auto r = oracle::oracle_spectrum(k4);
  ASSERT_EQ(r.size(), 4u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r[i], -1.0, 1e-12);
  EXPECT_NEAR(r[3], 3.0, 1e-12);
}
