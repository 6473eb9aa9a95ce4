#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ugt/core/validation.hpp"

namespace ugt {

enum class variant_kind {
  directed,
  bidirected,
  multidirected,
  mixed,
  oriented,
  signed_graph,
  weighted,
  multigraph,
  incidence,
  molecular
};

inline const char* to_string(variant_kind k) {
  switch (k) {
    case variant_kind::directed: return "directed";
    case variant_kind::bidirected: return "bidirected";
    case variant_kind::multidirected: return "multidirected";
    case variant_kind::mixed: return "mixed";
    case variant_kind::oriented: return "oriented";
    case variant_kind::signed_graph: return "signed";
    case variant_kind::weighted: return "weighted";
    case variant_kind::multigraph: return "multigraph";
    case variant_kind::incidence: return "incidence";
    case variant_kind::molecular: return "molecular";
  }
  return "?";
}

inline variant_kind parse_variant_kind(const std::string& s) {
  for (auto k : {variant_kind::directed, variant_kind::bidirected, variant_kind::multidirected, variant_kind::mixed,
                 variant_kind::oriented, variant_kind::signed_graph, variant_kind::weighted, variant_kind::multigraph,
                 variant_kind::incidence, variant_kind::molecular})
    if (s == to_string(k)) return k;
  throw invalid_argument("unknown graph variant '" + s + "'");
}

struct variant_arc {
  std::string id;  // optional except for multidirected
  std::string source, target;
  degree alpha;
};

struct variant_edge {
  std::string id;  // optional except where edges are referenced by id
  std::string u, v;
  degree eta;
};

struct orientation_entry {
  std::string vertex, edge;
  int dir = 0;
};

struct incidence_entry {
  std::string vertex, edge;
  degree psi;
};

// Vertex data plus whichever payload the variant uses; unused members stay empty.
struct variant_graph {
  variant_kind kind = variant_kind::directed;
  std::shared_ptr<const model> m;
  constraint_profile profile = constraint_profile::none;
  std::vector<std::string> vertices;
  std::vector<degree> sigma;
  std::vector<variant_edge> edges;
  std::vector<variant_arc> arcs;
  std::vector<orientation_entry> tau;
  std::vector<incidence_entry> incidence;
  std::map<std::string, int> sign;             // vertex and edge ids
  std::map<std::string, rational> weights;     // edge ids
  std::map<std::string, std::string> labels;   // vertex and edge ids
};

inline std::string arc_name(const std::string& s, const std::string& t) { return "(" + s + "," + t + ")"; }
inline std::string edge_name(const std::string& u, const std::string& v) { return "{" + u + "," + v + "}"; }

// Support digraph of an oriented graph: arcs with a nonzero degree, in input order.
inline std::vector<std::pair<std::string, std::string>> support_digraph(const variant_graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : g.arcs)
    if (!g.m->is_zero(a.alpha)) out.push_back({a.source, a.target});
  return out;
}

namespace detail {

struct variant_checker {
  const variant_graph& g;
  validation_report r;
  std::map<std::string, std::size_t> index;
  std::map<std::string, const variant_edge*> edge_by_id;

  const model& m() const { return *g.m; }

  bool known(const std::string& v, const std::string& where) {
    if (index.count(v)) return true;
    r.add(where, "endpoint", "unknown vertex '" + v + "'");
    return false;
  }

  void degree_ok(const degree& d, const std::string& where, const std::string& what) {
    if (d.size() != m().k()) {
      r.add(where, what, "dimension " + std::to_string(d.size()) + " != " + std::to_string(m().k()));
      return;
    }
    auto why = m().admissibility(d);
    if (!why.empty()) r.add(where, what, why);
  }

  void cap(const degree& d, const std::string& a, const std::string& b, const std::string& where) {
    if (d.size() != m().k() || index[a] >= g.sigma.size() || index[b] >= g.sigma.size()) return;
    auto why = profile_rule_failure(g.profile, d, g.sigma[index[a]], g.sigma[index[b]]);
    if (!why.empty()) r.add(where, std::string("profile:") + to_string(g.profile), why);
  }

  void vertices() {
    if (g.vertices.size() != g.sigma.size()) r.add("vertices", "shape", "id and degree lists differ in length");
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (!index.emplace(g.vertices[i], i).second) r.add(g.vertices[i], "vertex-id", "duplicate");
      if (i < g.sigma.size()) degree_ok(g.sigma[i], g.vertices[i], "vertex-degree");
    }
  }

  // Undirected edges; simple forbids loops and repeated pairs.
  void edges(bool simple) {
    std::set<std::pair<std::string, std::string>> pairs;
    std::set<std::string> ids;
    for (const auto& e : g.edges) {
      std::string where = edge_name(e.u, e.v);
      if (!e.id.empty()) {
        if (!ids.insert(e.id).second) r.add(e.id, "edge-id", "duplicate");
        edge_by_id[e.id] = &e;
      }
      if (!known(e.u, where) || !known(e.v, where)) continue;
      if (simple && e.u == e.v) r.add(where, "loop", "edge joins a vertex to itself");
      if (simple && !pairs.insert(std::minmax(e.u, e.v)).second) r.add(where, "parallel", "pair listed twice");
      degree_ok(e.eta, where, "edge-degree");
      cap(e.eta, e.u, e.v, where);
    }
  }

  void arcs(bool loopless, bool simple) {
    std::set<std::pair<std::string, std::string>> pairs;
    std::set<std::string> ids;
    for (const auto& a : g.arcs) {
      std::string where = arc_name(a.source, a.target);
      if (!a.id.empty() && !ids.insert(a.id).second) r.add(a.id, "arc-id", "duplicate");
      if (!known(a.source, where) || !known(a.target, where)) continue;
      if (loopless && a.source == a.target) r.add(where, "loop", "arc from a vertex to itself");
      if (simple && !pairs.insert({a.source, a.target}).second) r.add(where, "parallel", "arc listed twice");
      degree_ok(a.alpha, where, "arc-degree");
      cap(a.alpha, a.source, a.target, where);
    }
  }

  void unused(bool edges_allowed, bool arcs_allowed) {
    if (!edges_allowed && !g.edges.empty()) r.add("edges", "payload", "variant takes arcs, not edges");
    if (!arcs_allowed && !g.arcs.empty()) r.add("arcs", "payload", "variant takes edges, not arcs");
  }

  void bidirection() {
    std::map<std::pair<std::string, std::string>, int> tau;
    for (const auto& t : g.tau) {
      std::string where = "(" + t.vertex + "," + t.edge + ")";
      if (!index.count(t.vertex)) r.add(where, "tau", "unknown vertex");
      if (!edge_by_id.count(t.edge)) r.add(where, "tau", "unknown edge id");
      if (!tau.emplace(std::pair{t.vertex, t.edge}, t.dir).second) r.add(where, "tau", "listed twice");
    }
    for (const auto& e : g.edges) {
      if (e.id.empty()) {
        r.add(edge_name(e.u, e.v), "tau", "bidirected edges need an id");
        continue;
      }
      for (const auto* end : {&e.u, &e.v}) {
        auto it = tau.find({*end, e.id});
        int d = it == tau.end() ? 0 : it->second;
        if (d != 1 && d != -1)
          r.add("(" + *end + "," + e.id + ")", "tau", "endpoint orientation must be +1 or -1");
      }
    }
    for (const auto& [key, d] : tau) {
      auto it = edge_by_id.find(key.second);
      if (it == edge_by_id.end()) continue;
      bool endpoint = it->second->u == key.first || it->second->v == key.first;
      if (!endpoint && d != 0) r.add("(" + key.first + "," + key.second + ")", "tau", "non-endpoint must be 0");
      if (endpoint && d != 1 && d != -1 && d != 0)
        r.add("(" + key.first + "," + key.second + ")", "tau", "value outside {-1,0,1}");
    }
  }

  void orientation() {
    std::set<std::pair<std::string, std::string>> live;
    for (const auto& [s, t] : support_digraph(g)) live.insert({s, t});
    for (const auto& [s, t] : live)
      if (s < t && live.count({t, s})) r.add(edge_name(s, t), "opposite-arcs", "both directions are nonzero");
  }

  void signs() {
    auto need = [&](const std::string& id, const std::string& what) {
      auto it = g.sign.find(id);
      if (it == g.sign.end()) r.add(id, "sign", what + " has no sign");
      else if (it->second != 1 && it->second != -1) r.add(id, "sign", "sign must be +1 or -1");
    };
    for (const auto& v : g.vertices) need(v, "vertex");
    for (const auto& e : g.edges) {
      if (e.id.empty()) r.add(edge_name(e.u, e.v), "sign", "signed edges need an id");
      else need(e.id, "edge");
    }
    for (const auto& [id, s] : g.sign)
      if (!index.count(id) && !edge_by_id.count(id)) r.add(id, "sign", "unknown vertex or edge");
  }

  void weights() {
    std::set<std::string> live;
    for (const auto& e : g.edges) {
      std::string where = e.id.empty() ? edge_name(e.u, e.v) : e.id;
      bool support = e.eta.size() == m().k() && !m().is_zero(e.eta);
      if (e.id.empty()) {
        r.add(where, "weight", "weighted edges need an id");
        continue;
      }
      auto it = g.weights.find(e.id);
      if (support) {
        live.insert(e.id);
        if (it == g.weights.end()) r.add(where, "weight", "support edge has no weight");
        else if (it->second < 0) r.add(where, "weight", "negative weight");
      } else if (it != g.weights.end()) {
        r.add(where, "weight", "weight on a zero-degree edge");
      }
    }
    for (const auto& [id, w] : g.weights)
      if (!edge_by_id.count(id)) r.add(id, "weight", "unknown edge");
  }

  void incidences() {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& i : g.incidence) {
      std::string where = "(" + i.vertex + "," + i.edge + ")";
      auto it = edge_by_id.find(i.edge);
      if (it == edge_by_id.end() || !index.count(i.vertex)) {
        r.add(where, "incidence", "unknown vertex or edge");
        continue;
      }
      const variant_edge& e = *it->second;
      if (e.u != i.vertex && e.v != i.vertex) r.add(where, "incidence", "vertex is not an endpoint");
      if (!seen.insert({i.vertex, i.edge}).second) r.add(where, "incidence", "listed twice");
      degree_ok(i.psi, where, "incidence-degree");
      if (g.profile == constraint_profile::fuzzy_cap && i.psi.size() == m().k() && e.eta.size() == m().k()) {
        degree bound = componentwise_min(g.sigma[index[i.vertex]], e.eta);
        if (!componentwise_leq(i.psi, bound)) r.add(where, "incidence-cap", "exceeds min(vertex, edge)");
      }
    }
    for (const auto& e : g.edges) {
      if (e.id.empty()) {
        r.add(edge_name(e.u, e.v), "incidence", "incidence edges need an id");
        continue;
      }
      for (const auto* end : {&e.u, &e.v})
        if (!seen.count({*end, e.id})) r.add("(" + *end + "," + e.id + ")", "incidence", "missing degree");
    }
  }

  void molecular() {
    for (const auto& v : g.vertices)
      if (!g.labels.count(v)) r.add(v, "label", "atom has no label");
    for (const auto& e : g.edges) {
      std::string where = edge_name(e.u, e.v);
      if (e.id.empty() || !g.labels.count(e.id)) r.add(where, "label", "bond has no label");
      if (!index.count(e.u) || !index.count(e.v) || e.eta.size() != m().k()) continue;
      degree cap = m().combine(combine_op::complete_edge, g.sigma[index[e.u]], g.sigma[index[e.v]]);
      if (!m().leq(e.eta, cap)) r.add(where, "consistency", "bond degree above the endpoint combination");
    }
  }
};

}  // namespace detail

inline validation_report validate_variant(const variant_graph& g) {
  if (!g.m) throw invalid_argument("variant graph needs a model");
  detail::variant_checker c{g, {}, {}, {}};
  c.vertices();
  switch (g.kind) {
    case variant_kind::directed:
      c.unused(false, true);
      c.arcs(true, true);
      break;
    case variant_kind::multidirected:
      c.unused(false, true);
      for (const auto& a : g.arcs)
        if (a.id.empty()) c.r.add(arc_name(a.source, a.target), "arc-id", "parallel arcs need an id");
      c.arcs(false, false);
      break;
    case variant_kind::oriented:
      c.unused(false, true);
      c.arcs(true, true);
      c.orientation();
      break;
    case variant_kind::mixed:
      c.edges(true);
      c.arcs(true, true);
      break;
    case variant_kind::bidirected:
      c.unused(true, false);
      c.edges(true);
      c.bidirection();
      break;
    case variant_kind::signed_graph:
      c.unused(true, false);
      c.edges(true);
      c.signs();
      break;
    case variant_kind::weighted:
      c.unused(true, false);
      c.edges(true);
      c.weights();
      break;
    case variant_kind::multigraph:
      c.unused(true, false);
      for (const auto& e : g.edges)
        if (e.id.empty()) c.r.add(edge_name(e.u, e.v), "edge-id", "multigraph edges need an id");
      c.edges(false);
      break;
    case variant_kind::incidence:
      c.unused(true, false);
      c.edges(true);
      c.incidences();
      break;
    case variant_kind::molecular:
      c.unused(true, false);
      c.edges(true);
      c.molecular();
      break;
  }
  return c.r;
}

}  // namespace ugt
