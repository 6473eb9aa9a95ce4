#pragma once

#include <string>
#include <vector>

#include "ugt/decision/decision.hpp"
#include "ugt/io/json.hpp"

namespace ugt::io {

inline std::vector<double> read_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_argument(where + ": expected an array of numbers");
  std::vector<double> v;
  for (const auto& x : j) v.push_back(read_double(x, where));
  return v;
}

inline std::vector<std::vector<double>> read_dense(const json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_argument(where + ": expected a matrix");
  std::vector<std::vector<double>> m;
  for (const auto& row : j) m.push_back(read_vector(row, where));
  return m;
}

// ---- cognitive maps

inline activation read_activation(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw invalid_argument("f: expected {\"kind\": ...}");
  activation f;
  f.kind = parse_activation(read_string(j.at("kind"), "f.kind"));
  switch (f.kind) {
    case activation_kind::clamp01: expect_fields(j, "f", {"kind"}); break;
    case activation_kind::bivalent:
      expect_fields(j, "f", {"kind"}, {"theta"});
      if (j.contains("theta")) f.theta = read_double(j.at("theta"), "f.theta");
      break;
    case activation_kind::sigmoid:
      expect_fields(j, "f", {"kind"}, {"lambda"});
      if (j.contains("lambda")) f.lambda = read_double(j.at("lambda"), "f.lambda");
      if (!(f.lambda > 0)) throw invalid_argument("f.lambda must be positive");
      break;
  }
  return f;
}

inline cognitive_map read_cognitive_map(const json& j) {
  expect_fields(j, "cognitive map", {"W", "A0"}, {"f", "concepts", "version"});
  check_version(j);
  cognitive_map m;
  m.w = read_dense(j.at("W"), "W");
  m.initial = read_vector(j.at("A0"), "A0");
  if (j.contains("f")) m.f = read_activation(j.at("f"));
  if (j.contains("concepts") && read_strings(j.at("concepts"), "concepts").size() != m.initial.size())
    throw invalid_argument("concepts: one name per concept");
  check_map(m);
  return m;
}

inline json write_fcm(const fcm_result& r) {
  json j{{"terminal", to_string(r.terminal)},
         {"iterations", r.trajectory.size() - 1},
         {"trajectory", write_matrix(r.trajectory)},
         {"final", write_floats(r.trajectory.back())}};
  if (r.terminal == fcm_terminal::fixed_point) j["step"] = r.step;
  if (r.terminal == fcm_terminal::limit_cycle) {
    j["period"] = r.period;
    j["step"] = r.step;
  }
  return j;
}

// ---- judgments

// An entry is [a,b,c,d], a single rational for a crisp judgment, or null below the
// diagonal for the reciprocal of its mirror.
inline judgment_matrix read_judgment(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw invalid_argument(where + ": expected a square matrix");
  const std::size_t n = j.size();
  judgment_matrix m(n, std::vector<uncertain_number>(n));
  std::vector<std::vector<bool>> missing(n, std::vector<bool>(n, false));
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw invalid_argument(where + ": expected a square matrix");
    for (std::size_t s = 0; s < n; ++s) {
      const json& x = j[r][s];
      std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(s) + "]";
      if (x.is_null()) {
        if (s >= r) throw invalid_argument(at + ": only entries below the diagonal may be omitted");
        missing[r][s] = true;
      } else if (x.is_array()) {
        if (x.size() != 4) throw invalid_argument(at + ": expected [a,b,c,d]");
        m[r][s] = {read_rational(x[0], at), read_rational(x[1], at), read_rational(x[2], at), read_rational(x[3], at),
                   false};
      } else {
        m[r][s] = uncertain_number::crisp(read_rational(x, at));
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < r; ++s)
      if (missing[r][s]) m[r][s] = m[s][r].inverse();
  return m;
}

inline anp_network read_anp(const json& j) {
  expect_fields(j, "anp network", {"clusters", "dependence", "element_judgments", "alternatives"},
                {"cluster_judgments", "version"});
  check_version(j);
  anp_network net;
  for (const auto& c : array_at(j, "clusters", "anp")) {
    expect_fields(c, "clusters", {"name", "elements"});
    net.clusters.push_back({read_string(c.at("name"), "clusters.name"), read_strings(c.at("elements"), "clusters.elements")});
  }
  for (const auto& d : array_at(j, "dependence", "anp")) {
    auto p = read_strings(d, "dependence");
    if (p.size() != 2) throw invalid_argument("dependence: expected [source, target] pairs");
    net.dependence.push_back({p[0], p[1]});
  }
  for (const auto& e : array_at(j, "element_judgments", "anp")) {
    expect_fields(e, "element_judgments", {"source", "target", "matrix"});
    auto src = read_string(e.at("source"), "element_judgments.source");
    auto tgt = read_string(e.at("target"), "element_judgments.target");
    net.element_judgments.push_back({src, tgt, read_judgment(e.at("matrix"), "judgment " + src + " for " + tgt)});
  }
  if (j.contains("cluster_judgments"))
    for (const auto& c : array_at(j, "cluster_judgments", "anp")) {
      expect_fields(c, "cluster_judgments", {"target", "sources", "matrix"});
      auto tgt = read_string(c.at("target"), "cluster_judgments.target");
      net.cluster_judgments.push_back(
          {tgt, read_strings(c.at("sources"), "cluster_judgments.sources"), read_judgment(c.at("matrix"), "cluster judgment for " + tgt)});
    }
  net.alternatives = read_strings(j.at("alternatives"), "alternatives");
  return net;
}

inline json write_anp(const anp_result& r) {
  json pr = json::object();
  for (const auto& [name, p] : r.priorities) pr[name] = write_float(p);
  return {{"elements", r.elements},
          {"weighted", write_matrix(r.weighted)},
          {"limit", write_matrix(r.limit)},
          {"primitive", r.primitive},
          {"priorities", std::move(pr)}};
}

}  // namespace ugt::io
