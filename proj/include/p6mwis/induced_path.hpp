#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace p6mwis {

namespace detail {

inline bool extend_induced_path(const Graph& g, int k, std::vector<Vertex>& path, VertexSet& blocked) {
  if (static_cast<int>(path.size()) == k) return true;
  // Candidates touch the last vertex and nothing earlier on the path.
  VertexSet cand = g.adj(path.back()) - blocked;
  for (Vertex u : cand) {
    VertexSet saved = blocked;
    // Everything adjacent to the old tail is now off limits, except through u.
    blocked |= g.adj(path.back());
    blocked.insert(u);
    path.push_back(u);
    if (extend_induced_path(g, k, path, blocked)) return true;
    path.pop_back();
    blocked = saved;
  }
  return false;
}

}  // namespace detail

/// An induced path on k vertices, or nothing if g is P_k-free.
inline std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int k) {
  check(k >= 1, ErrorKind::Precondition, "path length must be positive");
  for (Vertex s : g.vertices()) {
    std::vector<Vertex> path{s};
    VertexSet blocked = VertexSet::single(s);
    if (detail::extend_induced_path(g, k, path, blocked)) return path;
  }
  return std::nullopt;
}

inline bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.vertices().contains(p[i])) return false;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      bool adj = g.has_edge(p[i], p[j]);
      if (adj != (j == i + 1)) return false;
      if (p[i] == p[j]) return false;
    }
  }
  return true;
}

inline bool is_p6_free(const Graph& g) { return !find_induced_path(g, 6).has_value(); }

}  // namespace p6mwis
