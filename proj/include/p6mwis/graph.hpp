#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace p6mwis {

using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph with nonnegative vertex weights.
///
/// Subgraphs keep the ids of the parent: `vertices()` is the live set and
/// every other id is absent. Most algorithms only look at live vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Weight> weights = {}) : n_(n), adj_(n), live_(VertexSet::range(n)) {
    check(n >= 0 && n <= kMaxVertices, ErrorKind::Precondition,
          "vertex count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
    if (weights.empty()) weights.assign(n, 1);
    check(static_cast<int>(weights.size()) == n, ErrorKind::Precondition, "weight vector size mismatch");
    for (Weight w : weights) check(w >= 0, ErrorKind::Precondition, "negative weight");
    weights_ = std::move(weights);
  }
  Graph(int n, const std::vector<Edge>& edges, std::vector<Weight> weights = {}) : Graph(n, std::move(weights)) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }
  const VertexSet& vertices() const { return live_; }
  int order() const { return live_.size(); }

  const VertexSet& adj(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  Weight weight(Vertex v) const { return weights_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(const VertexSet& s) const {
    Weight t = 0;
    for (Vertex v : s) t += weights_[v];
    return t;
  }

  /// Number of edges among live vertices.
  int edge_count() const {
    int c = 0;
    for (Vertex v : live_) c += adj_[v].size();
    return c / 2;
  }
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u : live_)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    check(u >= 0 && v >= 0 && u < n_ && v < n_, ErrorKind::Precondition, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::Precondition, "self-loop on vertex " + std::to_string(u));
    check(live_.contains(u) && live_.contains(v), ErrorKind::Precondition, "edge touches a removed vertex");
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void set_weight(Vertex v, Weight w) {
    check(w >= 0, ErrorKind::Precondition, "negative weight");
    weights_[v] = w;
  }

  /// Open neighborhood N(X) = N[X] \ X.
  VertexSet N(const VertexSet& x) const { return N_closed(x) - x; }
  VertexSet N(Vertex v) const { return adj_[v]; }
  /// Closed neighborhood N[X].
  VertexSet N_closed(const VertexSet& x) const {
    VertexSet r = x;
    for (Vertex v : x) r |= adj_[v];
    return r & live_;
  }
  VertexSet N_closed(Vertex v) const {
    VertexSet r = adj_[v];
    r.insert(v);
    return r;
  }

  /// The subgraph induced by `keep` (intersected with the live set).
  Graph induced(const VertexSet& keep) const {
    Graph h = *this;
    h.live_ &= keep;
    for (Vertex v = 0; v < n_; ++v) {
      if (h.live_.contains(v))
        h.adj_[v] &= h.live_;
      else
        h.adj_[v] = VertexSet();
    }
    return h;
  }
  Graph without(const VertexSet& x) const { return induced(live_ - x); }

  /// G plus the given extra edges between live vertices.
  Graph with_edges(const std::vector<Edge>& extra) const {
    Graph h = *this;
    for (auto [u, v] : extra) h.add_edge(u, v);
    return h;
  }

  /// Turns `s` into a clique.
  void saturate(const VertexSet& s) {
    for (Vertex v : s) {
      VertexSet o = s;
      o.erase(v);
      adj_[v] |= o;
    }
  }

  bool is_clique(const VertexSet& s) const {
    for (Vertex v : s)
      if (!(s - VertexSet::single(v)).subset_of(adj_[v])) return false;
    return true;
  }
  bool is_independent(const VertexSet& s) const {
    for (Vertex v : s)
      if (adj_[v].intersects(s)) return false;
    return true;
  }
  /// Every vertex of a is adjacent to every vertex of b.
  bool complete_to(const VertexSet& a, const VertexSet& b) const {
    for (Vertex v : a)
      if (!(b - VertexSet::single(v)).subset_of(adj_[v])) return false;
    return true;
  }
  bool anticomplete_to(const VertexSet& a, const VertexSet& b) const {
    for (Vertex v : a)
      if (adj_[v].intersects(b)) return false;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.live_ == b.live_ && a.adj_ == b.adj_ && a.weights_ == b.weights_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  VertexSet live_;
  std::vector<Weight> weights_;
};

}  // namespace p6mwis
