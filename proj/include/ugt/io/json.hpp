#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ugt/core/graph.hpp"
#include "ugt/core/validation.hpp"

namespace ugt::io {

using json = nlohmann::json;

// Keys are kept in a std::map, so dumps come out sorted.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Rejects unknown keys and reports missing required ones.
inline void expect_fields(const json& j, const std::string& where, std::initializer_list<const char*> required,
                          std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw invalid_argument(where + ": expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) throw invalid_argument(where + ": missing field '" + k + "'");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw invalid_argument(where + ": unknown field '" + k + "'");
}

inline const json& array_at(const json& j, const char* key, const std::string& where) {
  const json& a = j.at(key);
  if (!a.is_array()) throw invalid_argument(where + ": '" + key + "' must be an array");
  return a;
}

inline std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw invalid_argument(where + ": expected a string");
  return j.get<std::string>();
}

inline std::vector<std::string> read_strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_argument(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(read_string(x, where));
  return out;
}

inline long long read_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw invalid_argument(where + ": expected an integer");
  return j.get<long long>();
}

// Strings "p", "p/q" or decimals; JSON numbers are read through their shortest
// decimal form, so 0.9 means 9/10.
inline rational read_rational(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) {
      if (!std::isfinite(j.get<double>())) throw invalid_argument("non-finite number");
      return parse_rational(j.dump());
    }
  } catch (const invalid_argument& e) {
    throw invalid_argument(where + ": " + e.what());
  }
  throw invalid_argument(where + ": expected a rational");
}

inline double read_double(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  return to_double(read_rational(j, where));
}

inline json write_rational(const rational& r) { return to_string(r); }

// 12 significant digits; the shortest round-trip dump then prints exactly those.
inline json write_float(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double y = std::strtod(buf, nullptr);
  if (y == 0) y = 0;  // no negative zero
  return y;
}

inline json write_floats(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(write_float(x));
  return a;
}

inline json write_matrix(const std::vector<std::vector<double>>& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(write_floats(row));
  return a;
}

inline degree read_degree(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw invalid_argument(where + ": a degree is a nonempty array of rationals");
  std::vector<rational> c;
  for (const auto& x : j) c.push_back(read_rational(x, where));
  return degree(std::move(c));
}

inline json write_degree(const degree& d) {
  json a = json::array();
  for (const auto& x : d.c) a.push_back(write_rational(x));
  return a;
}

// ---- model

struct model_spec {
  std::shared_ptr<const model> m;
  constraint_profile profile = constraint_profile::none;
};

inline model_spec read_model(const json& j) {
  expect_fields(j, "model", {"kind"}, {"k", "profile", "dombi_lambda"});
  auto kind = parse_model_kind(read_string(j.at("kind"), "model.kind"));
  std::size_t k = default_dimension(kind);
  if (j.contains("k")) {
    auto v = read_integer(j.at("k"), "model.k");
    if (v <= 0) throw invalid_argument("model.k must be positive");
    k = static_cast<std::size_t>(v);
  }
  model_params params;
  if (j.contains("dombi_lambda")) params.dombi_lambda = read_rational(j.at("dombi_lambda"), "model.dombi_lambda");
  model_spec s;
  s.m = std::make_shared<const model>(make_model(kind, k, std::move(params)));
  if (j.contains("profile")) s.profile = parse_profile(read_string(j.at("profile"), "model.profile"));
  return s;
}

inline json write_model(const model& m, constraint_profile profile) {
  json j{{"kind", to_string(m.kind())}, {"k", m.k()}, {"profile", to_string(profile)}};
  if (m.dombi_lambda()) j["dombi_lambda"] = write_rational(*m.dombi_lambda());
  return j;
}

// ---- graph document

inline constexpr int format_version = 1;

inline void check_version(const json& j) {
  if (j.contains("version") && read_integer(j.at("version"), "version") != format_version)
    throw invalid_argument("unsupported document version " + j.at("version").dump());
}

struct vertex_list {
  std::vector<std::string> ids;
  std::vector<degree> sigma;
};

inline vertex_list read_vertices(const json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_argument(where + ": expected an array of vertices");
  vertex_list out;
  for (const auto& v : j) {
    expect_fields(v, where, {"id", "sigma"});
    out.ids.push_back(read_string(v.at("id"), where + ".id"));
    out.sigma.push_back(read_degree(v.at("sigma"), where + " '" + out.ids.back() + "'"));
  }
  return out;
}

inline std::vector<edge_input> read_edges(const json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_argument(where + ": expected an array of edges");
  std::vector<edge_input> out;
  for (const auto& e : j) {
    expect_fields(e, where, {"u", "v", "eta"});
    edge_input in;
    in.u = read_string(e.at("u"), where + ".u");
    in.v = read_string(e.at("v"), where + ".v");
    in.eta = read_degree(e.at("eta"), where + " {" + in.u + "," + in.v + "}");
    out.push_back(std::move(in));
  }
  return out;
}

inline uncertain_graph read_graph(const json& j) {
  expect_fields(j, "graph", {"model", "vertices"}, {"edges", "version"});
  check_version(j);
  auto spec = read_model(j.at("model"));
  auto vs = read_vertices(j.at("vertices"), "vertices");
  std::vector<edge_input> es;
  if (j.contains("edges")) es = read_edges(j.at("edges"), "edges");
  return uncertain_graph(spec.m, std::move(vs.ids), std::move(vs.sigma), es, spec.profile);
}

inline json write_vertices(const uncertain_graph& g) {
  json vs = json::array();
  for (std::size_t i = 0; i < g.n(); ++i) vs.push_back({{"id", g.id(i)}, {"sigma", write_degree(g.sigma(i))}});
  return vs;
}

inline json write_edges(const uncertain_graph& g) {
  json es = json::array();
  for (auto [i, j] : g.nonzero_pairs())
    es.push_back({{"u", g.id(i)}, {"v", g.id(j)}, {"eta", write_degree(g.eta(i, j))}});
  return es;
}

// Zero pairs are never written.
inline json write_graph(const uncertain_graph& g) {
  return {{"version", format_version},
          {"model", write_model(g.m(), g.profile())},
          {"vertices", write_vertices(g)},
          {"edges", write_edges(g)}};
}

inline json write_report(const validation_report& r) {
  json vs = json::array();
  for (const auto& v : r.violations) {
    json x{{"where", v.where}, {"rule", v.rule}};
    if (!v.detail.empty()) x["detail"] = v.detail;
    vs.push_back(std::move(x));
  }
  return {{"ok", r.ok()}, {"violations", std::move(vs)}};
}

inline json write_support(const uncertain_graph& g, const support_graph& s) {
  json vs = json::array(), es = json::array();
  for (auto v : s.vertices) vs.push_back(g.id(v));
  for (auto [a, b] : s.edges) es.push_back(json::array({g.id(a), g.id(b)}));
  return {{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

inline json write_ids(const uncertain_graph& g, const std::vector<std::size_t>& idx) {
  json a = json::array();
  for (auto v : idx) a.push_back(g.id(v));
  return a;
}

inline json write_pairs(const uncertain_graph& g, const std::vector<vertex_pair>& pairs) {
  json a = json::array();
  for (auto [x, y] : pairs) a.push_back(json::array({g.id(x), g.id(y)}));
  return a;
}

}  // namespace ugt::io
