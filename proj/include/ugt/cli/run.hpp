#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ugt/io/constructions.hpp"
#include "ugt/io/decision.hpp"
#include "ugt/io/results.hpp"
#include "ugt/oracles/compare.hpp"
#include "ugt/oracles/planarity.hpp"
#include "ugt/oracles/spectrum.hpp"
#include "ugt/structure/median.hpp"
#include "ugt/structure/metrics.hpp"

namespace ugt::cli {

enum exit_code : int { ok = 0, failed = 1, usage = 2 };

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw usage_error("cannot read '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

namespace detail {

// Every command but validate refuses graphs that break their own rules.
inline bool require_valid(const uncertain_graph& g, std::ostream& out) {
  auto r = validate_graph(g);
  if (r.ok()) return true;
  out << io::dump(io::write_report(r));
  return false;
}

// Size caps inside a larger report become "undecided" instead of failing the command.
template <class F>
io::json or_undecided(F&& f) {
  try {
    return f();
  } catch (const size_cap_exceeded&) {
    return "undecided";
  }
}

inline io::json class_json(const class_result& c) { return {{"holds", c.holds}, {"failures", c.failures}}; }

inline io::json classify(const uncertain_graph& g) {
  io::json j;
  j["shape"] = io::write_shape(g, shape(g));
  auto ds = degree_order_size(g);
  io::json deg = io::json::object();
  for (std::size_t i = 0; i < g.n(); ++i) deg[g.id(i)] = io::write_rational(ds.vertex_degree[i]);
  j["degrees"] = {{"vertex", std::move(deg)}, {"order", io::write_rational(ds.order)}, {"size", io::write_rational(ds.size)}};

  io::json cls;
  cls["complete"] = class_json(check_complete(g));
  cls["product"] = class_json(check_product(g));
  cls["labeling"] = class_json(check_labeling(g));
  if (g.m().dombi_lambda()) cls["dombi"] = class_json(check_dombi(g));
  cls["threshold"] = or_undecided([&]() -> io::json {
    auto t = find_threshold(g);
    return t ? io::write_rational(*t) : io::json(nullptr);
  });
  cls["chordal"] = {{"support", chordality(g, chordality_mode::support)},
                    {"fuzzy", or_undecided([&] { return io::json(chordality(g, chordality_mode::fuzzy_chord)); })}};
  cls["median_graph"] = or_undecided([&] { return io::json(is_median_graph(g)); });
  cls["tree"] = or_undecided([&]() -> io::json {
    auto t = is_uncertain_tree(g);
    io::json x{{"holds", t.holds}};
    if (t.holds) x["edges"] = io::write_pairs(g, t.tree_edges);
    return x;
  });
  cls["density"] = or_undecided([&]() -> io::json {
    auto d = density_balanced(g);
    return {{"density", io::write_rational(d.density)}, {"densest", io::write_rational(d.densest)}, {"balanced", d.balanced}};
  });
  j["classes"] = std::move(cls);

  auto s = support(g);
  if (!s.vertices.empty() && crisp::connected(s)) {
    auto m = metrics(g);
    io::json ecc = io::json::object();
    for (std::size_t i = 0; i < m.vertices.size(); ++i) ecc[g.id(m.vertices[i])] = io::write_rational(m.eccentricity[i]);
    j["metrics"] = {{"radius", io::write_rational(m.radius)}, {"diameter", io::write_rational(m.diameter)}, {"eccentricity", std::move(ecc)}};
  } else {
    j["metrics"] = nullptr;
  }
  return j;
}

inline io::json param(const uncertain_graph& g, const std::string& kind, const std::string& variant) {
  auto dom = parse_domination_variant(variant.empty() ? "strong_arc" : variant);
  if (!variant.empty() && kind != "domination" && kind != "secure_domination")
    throw usage_error("--variant only applies to domination kinds");
  if (kind == "domination") return io::write_param(kind, g, domination_number(g, dom));
  if (kind == "secure_domination") return io::write_param(kind, g, domination_number(g, dom, true));
  if (kind == "independence") return io::write_param(kind, g, independence_number(g));
  if (kind == "matching") return io::write_param(kind, g, matching_number(g));
  if (kind == "vertex_cover") return io::write_param(kind, g, vertex_cover_number(g));
  if (kind == "chromatic") return io::write_param(kind, g, chromatic_number(g));
  if (kind == "treewidth") return io::write_param(kind, g, treewidth(g));
  if (kind == "planarity") return io::write_param(kind, g, planarity_value(g));
  if (kind == "energy") return {{"kind", kind}, {"value", io::write_float(spectrum_energy(g).energy)}};
  if (kind == "density") {
    auto d = density_balanced(g);
    return {{"kind", kind}, {"value", io::write_rational(d.density)}, {"balanced", d.balanced}};
  }
  index_kind ik;
  try {
    ik = parse_index_kind(kind);
  } catch (const invalid_argument&) {
    throw usage_error("unknown parameter kind '" + kind + "'");
  }
  switch (ik) {
    case index_kind::wiener_uncertain: return {{"kind", to_string(ik)}, {"value", io::write_rational(wiener_uncertain(g))}};
    case index_kind::wiener_fuzzy: return {{"kind", to_string(ik)}, {"value", io::write_rational(wiener_fuzzy(g))}};
    case index_kind::sombor_uncertain:
    case index_kind::sombor_fuzzy: return {{"kind", to_string(ik)}, {"value", io::write_float(sombor_index(g))}};
  }
  throw usage_error("unknown parameter kind '" + kind + "'");
}

inline io::json oracle(const uncertain_graph& g, const std::string& kind, const std::string& variant) {
  if (kind == "spectrum") {
    auto ev = oracle::oracle_spectrum(g);
    auto main = spectrum_energy(g).eigenvalues;
    bool agrees = ev.size() == main.size();
    for (std::size_t i = 0; agrees && i < ev.size(); ++i) agrees = std::fabs(ev[i] - main[i]) <= 1e-9;
    return {{"kind", kind}, {"eigenvalues", io::write_floats(ev)}, {"agrees", agrees}};
  }
  if (kind == "planar") {
    bool p = oracle::oracle_planar(g);
    return {{"kind", kind}, {"value", p}, {"agrees", p == support_is_planar(support(g))}};
  }
  oracle::kind k;
  try {
    k = oracle::parse_kind(kind);
  } catch (const invalid_argument&) {
    throw usage_error("unknown oracle kind '" + kind + "'");
  }
  oracle::options opt;
  if (!variant.empty()) opt.effective_edge = parse_domination_variant(variant) == domination_variant::effective_edge;
  return io::write_oracle(oracle::checked_parameter(g, k, opt));
}

inline io::json validate_any(const io::json& doc, bool& ok) {
  validation_report r;
  if (doc.is_object() && doc.contains("variant")) {
    r = validate_variant(io::read_variant(doc));
  } else if (doc.is_object() && doc.contains("family")) {
    r = validate_family(io::read_family(doc));
  } else if (doc.is_object() && doc.contains("entities")) {
    r = validate_knowledge_graph(io::read_knowledge_graph(doc));
  } else {
    r = validate_graph(io::read_graph(doc));
  }
  ok = r.ok();
  return io::write_report(r);
}

inline io::json construct(const std::string& kind, const io::json& doc, const std::string& key, const std::string& relation) {
  if (kind == "line") return io::write_graph(line_graph(io::read_graph(doc)));
  if (kind == "intersection") return io::write_graph(io::construct_intersection(doc));
  if (kind == "cayley") return io::write_graph(io::construct_cayley(doc));
  if (kind == "zero_divisor") return io::write_graph(io::construct_zero_divisor(doc));
  if (kind == "tolerance") return io::write_graph(io::construct_tolerance(doc));
  if (kind == "rough") {
    auto p = rough_graph(io::read_rough(doc));
    return {{"lower", io::write_graph(p.lower)}, {"upper", io::write_graph(p.upper)}};
  }
  if (kind == "complete" || kind == "star" || kind == "wheel")
    return io::write_graph(io::construct_generated(parse_generated_shape(kind), doc));
  if (kind == "slice") {
    if (doc.is_object() && doc.contains("entities")) {
      if (relation.empty()) throw usage_error("slicing a knowledge graph needs --relation");
      return io::write_variant(relation_slice(io::read_knowledge_graph(doc), relation));
    }
    if (key.empty()) throw usage_error("slicing a family needs --key");
    auto f = ingest_family(io::read_family(doc));
    family_key k;
    std::string part;
    std::istringstream parts(key);
    while (std::getline(parts, part, '/')) k.push_back(part);
    return io::write_graph(family_slice(f, k));
  }
  throw usage_error("unknown construction '" + kind + "'");
}

}  // namespace detail

// Parses argv, runs one command, writes one JSON document to `out`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertain graph toolkit"};
  app.require_subcommand(1);
  std::string file, kind, variant, key, relation;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::size_t max_iters = 1000;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "input JSON, or - for stdin")->required(); };
  auto* validate = app.add_subcommand("validate", "check a graph, variant, family or knowledge graph");
  with_file(validate);
  auto* support_cmd = app.add_subcommand("support", "support graph");
  with_file(support_cmd);
  auto* classify = app.add_subcommand("classify", "shape report and class checks");
  with_file(classify);
  auto* param = app.add_subcommand("param", "graph parameter");
  param->add_option("--kind", kind, "parameter kind")->required();
  param->add_option("--variant", variant, "domination variant: strong_arc or effective_edge");
  with_file(param);
  auto* construct = app.add_subcommand("construct", "build a graph");
  construct->add_option("kind", kind, "construction kind")->required();
  with_file(construct);
  construct->add_option("--key", key, "family key, parts joined by /");
  construct->add_option("--relation", relation, "knowledge-graph relation");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "adjacency spectrum and energy");
  with_file(spectrum_cmd);
  auto* sample = app.add_subcommand("sample", "draw a graph from a random template");
  auto* seed_opt = sample->add_option("--seed", seed, "seed (UGT_SEED overrides)");
  with_file(sample);
  auto* fcm = app.add_subcommand("fcm", "run a cognitive map");
  fcm->add_option("--tol", tol, "fixed-point tolerance")->check(CLI::PositiveNumber);
  fcm->add_option("--max-iters", max_iters, "iteration cap")->check(CLI::PositiveNumber);
  with_file(fcm);
  auto* anp = app.add_subcommand("anp", "network priorities, or local priorities of one matrix");
  with_file(anp);
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference computation");
  oracle_cmd->add_option("--kind", kind, "oracle kind")->required();
  oracle_cmd->add_option("--variant", variant, "domination variant");
  with_file(oracle_cmd);

  std::vector<const char*> argv{"ugt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  try {
    io::json doc = io::parse_text(read_input(file, in));
    io::json result;
    if (validate->parsed()) {
      bool valid = false;
      out << io::dump(detail::validate_any(doc, valid));
      return valid ? ok : failed;
    }
    if (construct->parsed()) {
      result = detail::construct(kind, doc, key, relation);
    } else if (sample->parsed()) {
      auto t = io::read_template(doc);
      if (seed_opt->count()) t.seed = seed;
      if (const char* env = std::getenv("UGT_SEED")) {
        try {
          std::size_t used = 0;
          t.seed = std::stoull(env, &used);
          if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
          throw usage_error(std::string("UGT_SEED is not an unsigned integer: '") + env + "'");
        }
      }
      auto r = sample_random(t);
      result = {{"seed", t.seed}, {"graph", io::write_graph(r.graph)}, {"support", io::write_support(r.graph, r.support)}};
    } else if (fcm->parsed()) {
      result = io::write_fcm(fcm_run(io::read_cognitive_map(doc), tol, max_iters));
    } else if (anp->parsed()) {
      if (doc.is_object() && doc.contains("matrix")) {
        io::expect_fields(doc, "judgment", {"matrix"});
        result = {{"priorities", io::write_floats(anp_priorities(io::read_judgment(doc.at("matrix"), "matrix")))}};
      } else if (doc.is_object() && doc.contains("supermatrix")) {
        io::expect_fields(doc, "supermatrix", {"supermatrix"});
        auto r = anp_limit_matrix(io::read_dense(doc.at("supermatrix"), "supermatrix"));
        result = {{"limit", io::write_matrix(r.limit)}, {"primitive", r.primitive}};
      } else {
        result = io::write_anp(anp_limit(io::read_anp(doc)));
      }
    } else {
      auto g = io::read_graph(doc);
      if (!detail::require_valid(g, out)) return failed;
      if (support_cmd->parsed()) result = io::write_support(g, support(g));
      if (classify->parsed()) result = detail::classify(g);
      if (param->parsed()) result = detail::param(g, kind, variant);
      if (spectrum_cmd->parsed()) result = io::write_spectrum(spectrum_energy(g));
      if (oracle_cmd->parsed()) result = detail::oracle(g, kind, variant);
    }
    out << io::dump(result);
    return ok;
  } catch (const usage_error& e) {
    err << "ugt: " << e.what() << "\n";
    return usage;
  } catch (const size_cap_exceeded& e) {
    out << io::dump(io::undecided(e));
    return usage;
  } catch (const error& e) {
    out << io::dump({{"error", e.what()}});
    return failed;
  }
}

}  // namespace ugt::cli
