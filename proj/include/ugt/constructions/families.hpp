#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ugt/constructions/variants.hpp"
#include "ugt/core/validation.hpp"

namespace ugt {

// soft: key is a parameter; expert: (parameter, expert, opinion); dynamic: a time label.
enum class family_kind { soft, expert, dynamic };

inline const char* to_string(family_kind k) {
  switch (k) {
    case family_kind::soft: return "soft";
    case family_kind::expert: return "expert";
    case family_kind::dynamic: return "dynamic";
  }
  return "?";
}

inline family_kind parse_family_kind(const std::string& s) {
  if (s == "soft") return family_kind::soft;
  if (s == "expert") return family_kind::expert;
  if (s == "dynamic") return family_kind::dynamic;
  throw invalid_argument("unknown family kind '" + s + "'");
}

using family_key = std::vector<std::string>;

inline std::string key_name(const family_key& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "/" : "") + k[i];
  return s;
}

struct family_member {
  family_key key;
  std::vector<degree> sigma;  // aligned with the family's vertex list
  std::vector<edge_input> edges;
};

// Graphs indexed by key over one vertex set; every member obeys edge <= meet of endpoints.
struct graph_family {
  family_kind kind = family_kind::soft;
  std::shared_ptr<const model> m;
  std::vector<std::string> vertices;
  std::vector<family_member> members;
};

inline validation_report validate_family(const graph_family& f) {
  if (!f.m) throw invalid_argument("family needs a model");
  validation_report r;
  const std::size_t arity = f.kind == family_kind::expert ? 3 : 1;
  std::set<family_key> keys;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < f.vertices.size(); ++i)
    if (!index.emplace(f.vertices[i], i).second) r.add(f.vertices[i], "vertex-id", "duplicate");
  for (const auto& mem : f.members) {
    const std::string tag = key_name(mem.key);
    if (mem.key.size() != arity) r.add(tag, "key", "expected " + std::to_string(arity) + " part(s)");
    if (!keys.insert(mem.key).second) r.add(tag, "key", "duplicate");
    if (mem.sigma.size() != f.vertices.size()) {
      r.add(tag, "shape", "one vertex degree per vertex");
      continue;
    }
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      auto why = f.m->admissibility(mem.sigma[i]);
      if (!why.empty()) r.add(tag + ":" + f.vertices[i], "vertex-degree", why);
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : mem.edges) {
      std::string where = tag + ":" + edge_name(e.u, e.v);
      if (!index.count(e.u) || !index.count(e.v) || e.u == e.v) {
        r.add(where, "endpoint", "unknown endpoint or loop");
        continue;
      }
      if (!seen.insert(std::minmax(e.u, e.v)).second) r.add(where, "parallel", "pair listed twice");
      auto why = f.m->admissibility(e.eta);
      if (!why.empty()) {
        r.add(where, "edge-degree", why);
        continue;
      }
      auto cap = profile_rule_failure(constraint_profile::fuzzy_cap, e.eta, mem.sigma[index[e.u]], mem.sigma[index[e.v]]);
      if (!cap.empty()) r.add(where, "meet-bound", cap);
    }
  }
  return r;
}

// Rejects the whole family at ingestion if any member violates its rules.
inline graph_family ingest_family(graph_family f) {
  auto r = validate_family(f);
  if (!r.ok()) {
    const auto& v = r.violations.front();
    throw invalid_argument("family rejected: " + v.where + " " + v.rule + (v.detail.empty() ? "" : ": " + v.detail));
  }
  return f;
}

inline uncertain_graph family_slice(const graph_family& f, const family_key& key) {
  for (const auto& mem : f.members) {
    if (mem.key != key) continue;
    return uncertain_graph(f.m, f.vertices, mem.sigma, mem.edges, constraint_profile::fuzzy_cap);
  }
  throw invalid_argument("family has no member '" + key_name(key) + "'");
}

struct kg_fact {
  std::string head, relation, tail;
  rational truth;
};

struct knowledge_graph {
  std::vector<std::string> entities;
  std::vector<std::string> relations;
  std::vector<kg_fact> facts;  // absent triples have truth 0
};

inline validation_report validate_knowledge_graph(const knowledge_graph& kg) {
  validation_report r;
  std::set<std::string> ents(kg.entities.begin(), kg.entities.end());
  std::set<std::string> rels(kg.relations.begin(), kg.relations.end());
  if (ents.size() != kg.entities.size()) r.add("entities", "duplicate");
  if (rels.size() != kg.relations.size()) r.add("relations", "duplicate");
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& f : kg.facts) {
    std::string where = "(" + f.head + "," + f.relation + "," + f.tail + ")";
    if (!ents.count(f.head) || !ents.count(f.tail)) r.add(where, "entity", "unknown entity");
    if (!rels.count(f.relation)) r.add(where, "relation", "unknown relation");
    if (f.truth <= 0 || f.truth > 1) r.add(where, "truth", "must lie in (0,1]");
    if (!seen.insert({f.head, f.relation, f.tail}).second) r.add(where, "duplicate");
  }
  return r;
}

// Directed fuzzy graph of one relation; entities get unit degree.
inline variant_graph relation_slice(const knowledge_graph& kg, const std::string& relation) {
  auto r = validate_knowledge_graph(kg);
  if (!r.ok()) throw invalid_argument("knowledge graph rejected: " + r.violations.front().where);
  if (std::find(kg.relations.begin(), kg.relations.end(), relation) == kg.relations.end())
    throw invalid_argument("knowledge graph has no relation '" + relation + "'");
  variant_graph g;
  g.kind = variant_kind::directed;
  g.m = std::make_shared<const model>(make_model(model_kind::fuzzy));
  g.profile = constraint_profile::fuzzy_cap;
  g.vertices = kg.entities;
  g.sigma.assign(kg.entities.size(), g.m->unit());
  for (const auto& f : kg.facts)
    if (f.relation == relation) g.arcs.push_back({"", f.head, f.tail, degree(std::vector<rational>{f.truth})});
  return g;
}

}  // namespace ugt
