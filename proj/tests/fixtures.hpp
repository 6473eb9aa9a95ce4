#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ugt/core/graph.hpp"

namespace fixtures {

using ugt::degree;
using ugt::make_degree;
using ugt::rational;

inline rational q(const char* s) { return ugt::parse_rational(s); }
inline degree d1(const char* s) { return make_degree({s}); }

inline std::shared_ptr<const ugt::model> fuzzy_model() {
  static auto m = std::make_shared<const ugt::model>(ugt::make_model(ugt::model_kind::fuzzy));
  return m;
}

struct vtx {
  const char* id;
  const char* sigma;
};
struct edg {
  const char* u;
  const char* v;
  const char* eta;
};

inline ugt::uncertain_graph fuzzy_graph(const std::vector<vtx>& vs, const std::vector<edg>& es,
                                        ugt::constraint_profile p = ugt::constraint_profile::fuzzy_cap) {
  ugt::graph_builder b(fuzzy_model(), p);
  for (const auto& v : vs) b.vertex(v.id, d1(v.sigma));
  for (const auto& e : es) b.edge(e.u, e.v, d1(e.eta));
  return b.build();
}

// Path of strength 2/5 sits inside this graph: v1-v2-v3-v4.
inline ugt::uncertain_graph strength_sample() {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.8"}, {"v3", "0.7"}, {"v4", "0.6"}, {"v5", "0.5"}},
                     {{"v1", "v2", "0.6"}, {"v2", "v3", "0.5"}, {"v3", "v4", "0.4"}, {"v2", "v5", "0.3"},
                      {"v4", "v5", "0.2"}});
}

// Square v1..v4 with chord v1v3.
inline ugt::uncertain_graph chorded_square() {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.7"}, {"v3", "0.8"}, {"v4", "0.6"}},
                     {{"v1", "v2", "0.5"}, {"v2", "v3", "0.4"}, {"v3", "v4", "0.3"}, {"v4", "v1", "0.4"},
                      {"v1", "v3", "0.2"}});
}

// Square with a weak chord; used for shortest fuzzy routes.
inline ugt::uncertain_graph route_square() {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.8"}, {"v3", "0.85"}, {"v4", "0.6"}},
                     {{"v1", "v2", "0.8"}, {"v2", "v3", "0.7"}, {"v1", "v4", "0.5"}, {"v4", "v3", "0.5"},
                      {"v1", "v3", "0.3"}});
}

// Complete support on four vertices; {v1,v2,v3} is an effective clique.
inline ugt::uncertain_graph clique_sample() {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.7"}, {"v3", "0.8"}, {"v4", "0.6"}},
                     {{"v1", "v2", "0.7"}, {"v1", "v3", "0.8"}, {"v2", "v3", "0.7"}, {"v1", "v4", "0.5"},
                      {"v2", "v4", "0.4"}, {"v3", "v4", "0.3"}});
}

inline ugt::uncertain_graph four_leaf_star() {
  return fuzzy_graph({{"c", "0.9"}, {"u1", "0.7"}, {"u2", "0.6"}, {"u3", "0.8"}, {"u4", "0.5"}},
                     {{"c", "u1", "0.6"}, {"c", "u2", "0.5"}, {"c", "u3", "0.7"}, {"c", "u4", "0.4"}});
}

inline ugt::uncertain_graph four_path() {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.8"}, {"v3", "0.8"}, {"v4", "0.9"}},
                     {{"v1", "v2", "0.8"}, {"v2", "v3", "0.5"}, {"v3", "v4", "0.8"}});
}

inline ugt::uncertain_graph five_rim_wheel() {
  return fuzzy_graph({{"c", "0.9"}, {"v1", "0.8"}, {"v2", "0.7"}, {"v3", "0.8"}, {"v4", "0.6"}, {"v5", "0.7"}},
                     {{"v1", "v2", "0.6"}, {"v2", "v3", "0.6"}, {"v3", "v4", "0.5"}, {"v4", "v5", "0.5"},
                      {"v5", "v1", "0.6"}, {"c", "v1", "0.7"}, {"c", "v2", "0.6"}, {"c", "v3", "0.7"},
                      {"c", "v4", "0.5"}, {"c", "v5", "0.6"}});
}

inline ugt::uncertain_graph complete_triangle() {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.7"}, {"v3", "0.5"}},
                     {{"v1", "v2", "0.7"}, {"v1", "v3", "0.5"}, {"v2", "v3", "0.5"}});
}

inline ugt::uncertain_graph three_path() {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.8"}, {"v3", "0.7"}}, {{"v1", "v2", "0.6"}, {"v2", "v3", "0.5"}});
}

inline ugt::uncertain_graph chordal_square(const char* chord = "0.4") {
  return fuzzy_graph({{"v1", "0.9"}, {"v2", "0.8"}, {"v3", "0.7"}, {"v4", "0.8"}},
                     {{"v1", "v2", "0.6"}, {"v2", "v3", "0.5"}, {"v3", "v4", "0.4"}, {"v4", "v1", "0.5"},
                      {"v1", "v3", chord}});
}

inline ugt::uncertain_graph unit_triangle() {
  return fuzzy_graph({{"a", "1"}, {"b", "1"}, {"c", "1"}}, {{"a", "b", "0.5"}, {"b", "c", "0.3"}, {"a", "c", "0.4"}});
}

inline ugt::uncertain_graph intuitionistic_square(const char* v1v2_nonmember = "0.2") {
  auto m = std::make_shared<const ugt::model>(ugt::make_model(ugt::model_kind::intuitionistic));
  ugt::graph_builder b(m, ugt::constraint_profile::intuitionistic_cap);
  b.vertex("v1", make_degree({"0.8", "0.1"}))
      .vertex("v2", make_degree({"0.7", "0.2"}))
      .vertex("v3", make_degree({"0.6", "0.2"}))
      .vertex("v4", make_degree({"0.5", "0.3"}));
  b.edge("v1", "v2", make_degree({"0.6", v1v2_nonmember}))
      .edge("v2", "v3", make_degree({"0.5", "0.3"}))
      .edge("v3", "v4", make_degree({"0.4", "0.4"}))
      .edge("v1", "v4", make_degree({"0.4", "0.3"}));
  return b.build();
}

inline ugt::uncertain_graph neutrosophic_square(const char* v3v4_truth = "0.4") {
  auto m = std::make_shared<const ugt::model>(ugt::make_model(ugt::model_kind::neutrosophic));
  ugt::graph_builder b(m, ugt::constraint_profile::svn_cap);
  b.vertex("v1", make_degree({"0.8", "0.2", "0.1"}))
      .vertex("v2", make_degree({"0.7", "0.3", "0.2"}))
      .vertex("v3", make_degree({"0.6", "0.2", "0.3"}))
      .vertex("v4", make_degree({"0.5", "0.4", "0.2"}));
  b.edge("v1", "v2", make_degree({"0.6", "0.2", "0.2"}))
      .edge("v2", "v3", make_degree({"0.5", "0.2", "0.3"}))
      .edge("v3", "v4", make_degree({v3v4_truth, "0.2", "0.3"}))
      .edge("v1", "v4", make_degree({"0.4", "0.2", "0.2"}));
  return b.build();
}

}  // namespace fixtures

#include "ugt/core/validation.hpp"

namespace fixtures {

// Three vertices on a path with a high/low attribute.
inline ugt::plithogenic_spec plithogenic_path() {
  ugt::plithogenic_spec s;
  s.vertices = {"v1", "v2", "v3"};
  s.edges = {{"v1", "v2"}, {"v2", "v3"}};
  s.values = {"H", "L"};
  s.adf = {{{"v1", "H"}, d1("0.9")}, {{"v1", "L"}, d1("0.2")}, {{"v2", "H"}, d1("0.8")},
           {{"v2", "L"}, d1("0.3")}, {{"v3", "H"}, d1("0.4")}, {{"v3", "L"}, d1("0.7")}};
  s.acf = {{{"H", "L"}, q("0.6")}, {{"L", "H"}, q("0.6")}};
  s.bdf = {{{"v1", "v2", "H", "H"}, d1("0.7")}, {{"v1", "v2", "H", "L"}, d1("0.2")},
           {{"v1", "v2", "L", "H"}, d1("0.2")}, {{"v1", "v2", "L", "L"}, d1("0.1")},
           {{"v2", "v3", "H", "H"}, d1("0.4")}, {{"v2", "v3", "H", "L"}, d1("0.5")},
           {{"v2", "v3", "L", "H"}, d1("0.2")}, {{"v2", "v3", "L", "L"}, d1("0.3")}};
  return s;
}

}  // namespace fixtures
