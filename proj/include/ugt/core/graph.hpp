#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ugt/core/model.hpp"

namespace ugt {

enum class constraint_profile { none, fuzzy_cap, intuitionistic_cap, svn_cap };

inline const char* to_string(constraint_profile p) {
  switch (p) {
    case constraint_profile::none: return "none";
    case constraint_profile::fuzzy_cap: return "fuzzy_cap";
    case constraint_profile::intuitionistic_cap: return "intuitionistic_cap";
    case constraint_profile::svn_cap: return "svn_cap";
  }
  return "?";
}

inline constraint_profile parse_profile(const std::string& s) {
  if (s == "none") return constraint_profile::none;
  if (s == "fuzzy_cap") return constraint_profile::fuzzy_cap;
  if (s == "intuitionistic_cap") return constraint_profile::intuitionistic_cap;
  if (s == "svn_cap") return constraint_profile::svn_cap;
  throw invalid_argument("unknown constraint profile '" + s + "'");
}

using vertex_pair = std::pair<std::size_t, std::size_t>;

inline vertex_pair ordered_pair(std::size_t a, std::size_t b) { return a < b ? vertex_pair{a, b} : vertex_pair{b, a}; }

struct edge_input {
  std::string u, v;
  degree eta;
};

// Degree decoration of a finite universe.
struct uncertain_set {
  std::shared_ptr<const model> m;
  std::vector<std::string> universe;
  std::vector<degree> degrees;

  const degree& at(std::string_view id) const {
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (universe[i] == id) return degrees[i];
    throw invalid_argument("unknown element '" + std::string(id) + "'");
  }
};

// Immutable after construction. Absent pairs carry the zero degree.
class uncertain_graph {
 public:
  uncertain_graph(std::shared_ptr<const model> m, std::vector<std::string> ids, std::vector<degree> sigma,
                  const std::vector<edge_input>& edges, constraint_profile profile = constraint_profile::none)
      : model_(std::move(m)), profile_(profile), ids_(std::move(ids)), sigma_(std::move(sigma)) {
    if (!model_) throw invalid_argument("graph needs a model");
    if (ids_.size() != sigma_.size()) throw invalid_argument("vertex id and degree lists differ in length");
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (!index_.emplace(ids_[i], i).second) throw invalid_argument("duplicate vertex id '" + ids_[i] + "'");
      model_->require_dimension(sigma_[i]);
    }
    const std::size_t n = ids_.size();
    eta_.assign(n * n, model_->zero());
    std::vector<bool> seen(n * n, false);
    for (const auto& e : edges) {
      std::size_t a = index_of(e.u), b = index_of(e.v);
      if (a == b) throw invalid_argument("diagonal pair {" + e.u + "," + e.v + "} is not allowed");
      model_->require_dimension(e.eta);
      auto [i, j] = ordered_pair(a, b);
      if (seen[i * n + j]) throw invalid_argument("duplicate pair {" + e.u + "," + e.v + "}");
      seen[i * n + j] = true;
      if (model_->is_zero(e.eta)) continue;
      eta_[i * n + j] = e.eta;
      eta_[j * n + i] = e.eta;
      edges_.push_back({i, j});
    }
    std::sort(edges_.begin(), edges_.end());
  }

  const model& m() const { return *model_; }
  const std::shared_ptr<const model>& model_ptr() const { return model_; }
  constraint_profile profile() const { return profile_; }
  std::size_t n() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(std::string_view id) const {
    auto f = find(id);
    if (!f) throw invalid_argument("unknown vertex '" + std::string(id) + "'");
    return *f;
  }

  const degree& sigma(std::size_t i) const { return sigma_.at(i); }
  const std::vector<degree>& sigmas() const { return sigma_; }
  const degree& eta(std::size_t i, std::size_t j) const {
    if (i >= n() || j >= n()) throw invalid_argument("vertex index out of range");
    return eta_[i * n() + j];
  }
  // Pairs with a nonzero degree, i < j, sorted.
  const std::vector<vertex_pair>& nonzero_pairs() const { return edges_; }

  std::string pair_name(std::size_t i, std::size_t j) const { return "{" + id(i) + "," + id(j) + "}"; }

 private:
  std::shared_ptr<const model> model_;
  constraint_profile profile_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<degree> sigma_;
  std::vector<degree> eta_;
  std::vector<vertex_pair> edges_;
};

// Convenience builder used by tests and constructions.
class graph_builder {
 public:
  explicit graph_builder(std::shared_ptr<const model> m, constraint_profile p = constraint_profile::none)
      : model_(std::move(m)), profile_(p) {}
  explicit graph_builder(const model& m, constraint_profile p = constraint_profile::none)
      : graph_builder(std::make_shared<const model>(m), p) {}

  graph_builder& vertex(std::string id, degree sigma) {
    ids_.push_back(std::move(id));
    sigma_.push_back(std::move(sigma));
    return *this;
  }
  graph_builder& edge(std::string u, std::string v, degree eta) {
    edges_.push_back({std::move(u), std::move(v), std::move(eta)});
    return *this;
  }
  uncertain_graph build() const { return uncertain_graph(model_, ids_, sigma_, edges_, profile_); }

 private:
  std::shared_ptr<const model> model_;
  constraint_profile profile_;
  std::vector<std::string> ids_;
  std::vector<degree> sigma_;
  std::vector<edge_input> edges_;
};

// Crisp graph of nonzero vertices and nonzero pairs between them.
struct support_graph {
  std::size_t n = 0;                    // size of the host vertex set
  std::vector<std::size_t> vertices;    // host indices, ascending
  std::vector<vertex_pair> edges;       // host indices, i < j, sorted
  std::vector<bool> in_support;         // host-indexed
  std::vector<std::vector<std::size_t>> adj;  // host-indexed neighbour lists

  bool adjacent(std::size_t a, std::size_t b) const {
    for (auto x : adj[a])
      if (x == b) return true;
    return false;
  }
};

inline support_graph support(const uncertain_graph& g) {
  support_graph s;
  s.n = g.n();
  s.in_support.assign(g.n(), false);
  s.adj.assign(g.n(), {});
  for (std::size_t i = 0; i < g.n(); ++i)
    if (!g.m().is_zero(g.sigma(i))) {
      s.in_support[i] = true;
      s.vertices.push_back(i);
    }
  for (auto [i, j] : g.nonzero_pairs())
    if (s.in_support[i] && s.in_support[j]) {
      s.edges.push_back({i, j});
      s.adj[i].push_back(j);
      s.adj[j].push_back(i);
    }
  return s;
}

}  // namespace ugt
