#pragma once

#include <map>
#include <string>
#include <vector>

#include "ugt/constructions/constructions.hpp"
#include "ugt/io/json.hpp"

namespace ugt::io {

// ---- variant graphs

inline variant_graph read_variant(const json& j) {
  expect_fields(j, "variant graph", {"variant", "model", "vertices"},
                {"edges", "arcs", "tau", "incidence", "sign", "weights", "labels", "version"});
  check_version(j);
  variant_graph g;
  g.kind = parse_variant_kind(read_string(j.at("variant"), "variant"));
  auto spec = read_model(j.at("model"));
  g.m = spec.m;
  g.profile = spec.profile;
  auto vs = read_vertices(j.at("vertices"), "vertices");
  g.vertices = std::move(vs.ids);
  g.sigma = std::move(vs.sigma);
  if (j.contains("edges"))
    for (const auto& e : array_at(j, "edges", "variant graph")) {
      expect_fields(e, "edges", {"u", "v", "eta"}, {"id"});
      variant_edge x;
      if (e.contains("id")) x.id = read_string(e.at("id"), "edges.id");
      x.u = read_string(e.at("u"), "edges.u");
      x.v = read_string(e.at("v"), "edges.v");
      x.eta = read_degree(e.at("eta"), "edges {" + x.u + "," + x.v + "}");
      g.edges.push_back(std::move(x));
    }
  if (j.contains("arcs"))
    for (const auto& a : array_at(j, "arcs", "variant graph")) {
      expect_fields(a, "arcs", {"s", "t", "alpha"}, {"id"});
      variant_arc x;
      if (a.contains("id")) x.id = read_string(a.at("id"), "arcs.id");
      x.source = read_string(a.at("s"), "arcs.s");
      x.target = read_string(a.at("t"), "arcs.t");
      x.alpha = read_degree(a.at("alpha"), "arcs (" + x.source + "," + x.target + ")");
      g.arcs.push_back(std::move(x));
    }
  if (j.contains("tau"))
    for (const auto& t : array_at(j, "tau", "variant graph")) {
      expect_fields(t, "tau", {"v", "e", "dir"});
      g.tau.push_back({read_string(t.at("v"), "tau.v"), read_string(t.at("e"), "tau.e"),
                       static_cast<int>(read_integer(t.at("dir"), "tau.dir"))});
    }
  if (j.contains("incidence"))
    for (const auto& t : array_at(j, "incidence", "variant graph")) {
      expect_fields(t, "incidence", {"v", "e", "psi"});
      g.incidence.push_back(
          {read_string(t.at("v"), "incidence.v"), read_string(t.at("e"), "incidence.e"), read_degree(t.at("psi"), "incidence.psi")});
    }
  auto object_at = [&](const char* key) -> const json& {
    const json& o = j.at(key);
    if (!o.is_object()) throw invalid_argument(std::string(key) + ": expected an object");
    return o;
  };
  if (j.contains("sign"))
    for (const auto& [k, v] : object_at("sign").items()) g.sign[k] = static_cast<int>(read_integer(v, "sign." + k));
  if (j.contains("weights"))
    for (const auto& [k, v] : object_at("weights").items()) g.weights[k] = read_rational(v, "weights." + k);
  if (j.contains("labels"))
    for (const auto& [k, v] : object_at("labels").items()) g.labels[k] = read_string(v, "labels." + k);
  return g;
}

inline json write_variant(const variant_graph& g) {
  json j{{"version", format_version}, {"variant", to_string(g.kind)}, {"model", write_model(*g.m, g.profile)}};
  json vs = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    vs.push_back({{"id", g.vertices[i]}, {"sigma", write_degree(g.sigma[i])}});
  j["vertices"] = std::move(vs);
  if (!g.edges.empty()) {
    json es = json::array();
    for (const auto& e : g.edges) {
      json x{{"u", e.u}, {"v", e.v}, {"eta", write_degree(e.eta)}};
      if (!e.id.empty()) x["id"] = e.id;
      es.push_back(std::move(x));
    }
    j["edges"] = std::move(es);
  }
  if (!g.arcs.empty()) {
    json as = json::array();
    for (const auto& a : g.arcs) {
      json x{{"s", a.source}, {"t", a.target}, {"alpha", write_degree(a.alpha)}};
      if (!a.id.empty()) x["id"] = a.id;
      as.push_back(std::move(x));
    }
    j["arcs"] = std::move(as);
  }
  if (!g.tau.empty()) {
    json ts = json::array();
    for (const auto& t : g.tau) ts.push_back({{"v", t.vertex}, {"e", t.edge}, {"dir", t.dir}});
    j["tau"] = std::move(ts);
  }
  if (!g.incidence.empty()) {
    json is = json::array();
    for (const auto& t : g.incidence) is.push_back({{"v", t.vertex}, {"e", t.edge}, {"psi", write_degree(t.psi)}});
    j["incidence"] = std::move(is);
  }
  if (!g.sign.empty()) j["sign"] = g.sign;
  if (!g.weights.empty()) {
    json w = json::object();
    for (const auto& [k, v] : g.weights) w[k] = write_rational(v);
    j["weights"] = std::move(w);
  }
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

// ---- families and knowledge graphs

inline family_key read_key(const json& j) {
  if (j.is_string()) return {j.get<std::string>()};
  return read_strings(j, "params.key");
}

inline graph_family read_family(const json& j) {
  expect_fields(j, "family", {"family", "model", "params"}, {"version"});
  check_version(j);
  graph_family f;
  f.kind = parse_family_kind(read_string(j.at("family"), "family"));
  auto spec = read_model(j.at("model"));
  f.m = spec.m;
  bool first = true;
  for (const auto& p : array_at(j, "params", "family")) {
    expect_fields(p, "params", {"key", "graph"});
    family_member mem;
    mem.key = read_key(p.at("key"));
    const json& g = p.at("graph");
    expect_fields(g, "params.graph", {"vertices"}, {"edges"});
    auto vs = read_vertices(g.at("vertices"), "params.graph.vertices");
    if (first) {
      f.vertices = vs.ids;
      first = false;
    }
    if (vs.ids != f.vertices)
      throw invalid_argument("family member " + key_name(mem.key) + " lists different vertices");
    mem.sigma = std::move(vs.sigma);
    if (g.contains("edges")) mem.edges = read_edges(g.at("edges"), "params.graph.edges");
    f.members.push_back(std::move(mem));
  }
  return f;
}

inline json write_family(const graph_family& f) {
  json ps = json::array();
  for (const auto& mem : f.members) {
    json vs = json::array(), es = json::array();
    for (std::size_t i = 0; i < f.vertices.size(); ++i)
      vs.push_back({{"id", f.vertices[i]}, {"sigma", write_degree(mem.sigma[i])}});
    for (const auto& e : mem.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"eta", write_degree(e.eta)}});
    json key = mem.key.size() == 1 ? json(mem.key[0]) : json(mem.key);
    ps.push_back({{"key", std::move(key)}, {"graph", {{"vertices", std::move(vs)}, {"edges", std::move(es)}}}});
  }
  return {{"version", format_version},
          {"family", to_string(f.kind)},
          {"model", write_model(*f.m, constraint_profile::fuzzy_cap)},
          {"params", std::move(ps)}};
}

inline knowledge_graph read_knowledge_graph(const json& j) {
  expect_fields(j, "knowledge graph", {"entities", "relations", "facts"}, {"version"});
  check_version(j);
  knowledge_graph kg;
  kg.entities = read_strings(j.at("entities"), "entities");
  kg.relations = read_strings(j.at("relations"), "relations");
  for (const auto& f : array_at(j, "facts", "knowledge graph")) {
    expect_fields(f, "facts", {"h", "r", "t", "truth"});
    kg.facts.push_back({read_string(f.at("h"), "facts.h"), read_string(f.at("r"), "facts.r"),
                        read_string(f.at("t"), "facts.t"), read_rational(f.at("truth"), "facts.truth")});
  }
  return kg;
}

// ---- random templates

inline distribution read_distribution(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) throw invalid_argument(where + ": distribution needs a kind");
  distribution d;
  d.kind = parse_distribution_kind(read_string(j.at("kind"), where + ".kind"));
  switch (d.kind) {
    case distribution_kind::point:
      expect_fields(j, where, {"kind", "value"});
      d.hi = d.lo = read_degree(j.at("value"), where + ".value");
      break;
    case distribution_kind::bernoulli:
      expect_fields(j, where, {"kind", "value", "p"});
      d.hi = d.lo = read_degree(j.at("value"), where + ".value");
      d.p = read_rational(j.at("p"), where + ".p");
      break;
    case distribution_kind::uniform_grid: {
      expect_fields(j, where, {"kind", "lo", "hi", "denominator"});
      d.lo = read_degree(j.at("lo"), where + ".lo");
      d.hi = read_degree(j.at("hi"), where + ".hi");
      auto q = read_integer(j.at("denominator"), where + ".denominator");
      if (q <= 0) throw invalid_argument(where + ".denominator must be positive");
      d.denominator = static_cast<long>(q);
      break;
    }
  }
  return d;
}

inline std::uint64_t read_seed(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::uint64_t>(j.get<long long>());
  throw invalid_argument("seed must be a nonnegative integer");
}

inline random_template read_template(const json& j) {
  expect_fields(j, "template", {"model", "vertices"}, {"edges", "seed", "version"});
  check_version(j);
  random_template t;
  auto spec = read_model(j.at("model"));
  t.m = spec.m;
  t.profile = spec.profile;
  if (j.contains("seed")) t.seed = read_seed(j.at("seed"));
  for (const auto& v : array_at(j, "vertices", "template")) {
    expect_fields(v, "template.vertices", {"id", "dist"});
    t.vertices.push_back(read_string(v.at("id"), "template.vertices.id"));
    t.vertex_dist.push_back(read_distribution(v.at("dist"), "vertex " + t.vertices.back()));
  }
  if (j.contains("edges"))
    for (const auto& e : array_at(j, "edges", "template")) {
      expect_fields(e, "template.edges", {"u", "v", "dist"});
      auto u = read_string(e.at("u"), "template.edges.u"), v = read_string(e.at("v"), "template.edges.v");
      t.edges.push_back({u, v});
      t.edge_dist.push_back(read_distribution(e.at("dist"), "edge {" + u + "," + v + "}"));
    }
  return t;
}

// ---- construction inputs

inline uncertain_graph construct_intersection(const json& j) {
  expect_fields(j, "intersection", {"model", "universe", "sets"}, {"version"});
  auto spec = read_model(j.at("model"));
  auto universe = read_strings(j.at("universe"), "universe");
  std::vector<uncertain_set> sets;
  std::vector<std::string> ids;
  for (const auto& s : array_at(j, "sets", "intersection")) {
    expect_fields(s, "sets", {"degrees"}, {"id"});
    if (s.contains("id")) ids.push_back(read_string(s.at("id"), "sets.id"));
    const json& d = s.at("degrees");
    if (!d.is_object()) throw invalid_argument("sets.degrees: expected an object keyed by universe element");
    uncertain_set u{spec.m, universe, std::vector<degree>(universe.size(), spec.m->zero())};
    for (const auto& [k, v] : d.items()) {
      auto it = std::find(universe.begin(), universe.end(), k);
      if (it == universe.end()) throw invalid_argument("sets.degrees: '" + k + "' is not in the universe");
      u.degrees[static_cast<std::size_t>(it - universe.begin())] = read_degree(v, "sets.degrees." + k);
    }
    sets.push_back(std::move(u));
  }
  if (!ids.empty() && ids.size() != sets.size()) throw invalid_argument("sets: give an id for every set or none");
  return intersection_graph(sets, ids, spec.profile);
}

inline std::vector<long> read_element(const json& j, std::size_t arity) {
  std::vector<long> x;
  if (j.is_number_integer()) {
    x.push_back(static_cast<long>(j.get<long long>()));
  } else if (j.is_array()) {
    for (const auto& c : j) x.push_back(static_cast<long>(read_integer(c, "subset.element")));
  } else {
    throw invalid_argument("subset.element: expected an integer or an array of integers");
  }
  if (x.size() != arity) throw invalid_argument("subset.element: wrong number of coordinates");
  return x;
}

inline uncertain_graph construct_cayley(const json& j) {
  expect_fields(j, "cayley", {"model", "factors", "subset"}, {"version"});
  auto spec = read_model(j.at("model"));
  group_spec grp;
  for (const auto& f : array_at(j, "factors", "cayley")) grp.factors.push_back(static_cast<long>(read_integer(f, "factors")));
  group_subset subset;
  for (const auto& s : array_at(j, "subset", "cayley")) {
    expect_fields(s, "subset", {"element", "degree"});
    subset.push_back({read_element(s.at("element"), grp.factors.size()), read_degree(s.at("degree"), "subset.degree")});
  }
  return cayley_graph(grp, subset, spec.m);
}

inline long residue(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    long x = std::stol(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw invalid_argument(where + ": '" + s + "' is not an integer");
}

inline uncertain_graph construct_zero_divisor(const json& j) {
  expect_fields(j, "zero_divisor", {"model", "n", "sigma"}, {"strong", "eta", "version"});
  auto spec = read_model(j.at("model"));
  long n = static_cast<long>(read_integer(j.at("n"), "n"));
  bool strong = true;
  if (j.contains("strong")) {
    if (!j.at("strong").is_boolean()) throw invalid_argument("strong: expected a boolean");
    strong = j.at("strong").get<bool>();
  }
  std::map<long, degree> sigma;
  if (!j.at("sigma").is_object()) throw invalid_argument("sigma: expected an object keyed by residue");
  for (const auto& [k, v] : j.at("sigma").items()) sigma[residue(k, "sigma")] = read_degree(v, "sigma." + k);
  std::map<std::pair<long, long>, degree> eta;
  if (j.contains("eta"))
    for (const auto& e : array_at(j, "eta", "zero_divisor")) {
      expect_fields(e, "eta", {"u", "v", "eta"});
      eta[{static_cast<long>(read_integer(e.at("u"), "eta.u")), static_cast<long>(read_integer(e.at("v"), "eta.v"))}] =
          read_degree(e.at("eta"), "eta.eta");
    }
  if (strong && !eta.empty()) throw invalid_argument("eta is only used when strong is false");
  return zero_divisor_graph(n, sigma, strong, spec.m, eta, spec.profile);
}

inline trapezoid read_trapezoid(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) throw invalid_argument(where + ": expected [a,b,c,d]");
  return {read_rational(j[0], where), read_rational(j[1], where), read_rational(j[2], where), read_rational(j[3], where)};
}

inline uncertain_graph construct_tolerance(const json& j) {
  expect_fields(j, "tolerance", {"intervals", "tolerances"}, {"version"});
  std::vector<trapezoid> is, ts;
  for (const auto& x : array_at(j, "intervals", "tolerance")) is.push_back(read_trapezoid(x, "intervals"));
  for (const auto& x : array_at(j, "tolerances", "tolerance")) ts.push_back(read_trapezoid(x, "tolerances"));
  return tolerance_graph(is, ts);
}

inline std::pair<std::string, std::string> read_pair(const json& j, const std::string& where) {
  auto xs = read_strings(j, where);
  if (xs.size() != 2) throw invalid_argument(where + ": expected a pair [u,v]");
  return {xs[0], xs[1]};
}

inline rough_input read_rough(const json& j) {
  expect_fields(j, "rough", {"vertices", "vertex_classes", "edge_classes"}, {"edges", "version"});
  rough_input in;
  auto vs = read_vertices(j.at("vertices"), "vertices");
  in.vertices = std::move(vs.ids);
  in.sigma = std::move(vs.sigma);
  if (j.contains("edges"))
    for (const auto& e : array_at(j, "edges", "rough")) {
      expect_fields(e, "edges", {"u", "v", "p"});
      in.edges.push_back({read_string(e.at("u"), "edges.u"), read_string(e.at("v"), "edges.v")});
      in.p.push_back(read_degree(e.at("p"), "edges.p"));
    }
  for (const auto& c : array_at(j, "vertex_classes", "rough")) in.vertex_classes.push_back(read_strings(c, "vertex_classes"));
  for (const auto& c : array_at(j, "edge_classes", "rough")) {
    if (!c.is_array()) throw invalid_argument("edge_classes: expected arrays of pairs");
    std::vector<std::pair<std::string, std::string>> cls;
    for (const auto& p : c) cls.push_back(read_pair(p, "edge_classes"));
    in.edge_classes.push_back(std::move(cls));
  }
  return in;
}

inline uncertain_graph construct_generated(generated_shape shape, const json& j) {
  expect_fields(j, "generate", {"model", "sigma"}, {"centre", "version"});
  auto spec = read_model(j.at("model"));
  std::vector<degree> sigma;
  for (const auto& d : array_at(j, "sigma", "generate")) sigma.push_back(read_degree(d, "sigma"));
  degree centre;
  if (shape != generated_shape::complete) {
    if (!j.contains("centre")) throw invalid_argument("star and wheel need a centre degree");
    centre = read_degree(j.at("centre"), "centre");
  } else if (j.contains("centre")) {
    throw invalid_argument("a complete graph has no centre");
  }
  return generate_graph(shape, sigma, spec.m, centre, spec.profile);
}

}  // namespace ugt::io
