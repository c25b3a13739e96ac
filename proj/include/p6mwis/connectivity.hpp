#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace p6mwis {

/// Vertices reachable from `seeds` inside `within`.
inline VertexSet flood(const Graph& g, const VertexSet& seeds, const VertexSet& within) {
  VertexSet reached = seeds & within;
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.adj(v);
    next &= within;
    next -= reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

/// Connected components of g - removed, in canonical order.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {}) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    VertexSet c = flood(g, VertexSet::single(rest.front()), rest);
    out.push_back(c);
    rest -= c;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Components of g[within].
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  return components(g, g.vertices() - within);
}

inline bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  return flood(g, VertexSet::single(s.front()), s) == s;
}

/// Component of g[within] that contains v.
inline VertexSet component_of(const Graph& g, Vertex v, const VertexSet& within) {
  return flood(g, VertexSet::single(v), within);
}

struct ReachProj {
  VertexSet reach;
  VertexSet proj;
};

/// Reach(x, y): union of components of g - y meeting x; Proj = N(Reach).
inline ReachProj reach_proj(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check(!x.intersects(y), ErrorKind::Precondition, "reach_proj needs disjoint x and y");
  ReachProj r;
  r.reach = flood(g, x, g.vertices() - y);
  r.proj = g.N(r.reach);
  return r;
}

inline VertexSet proj(const Graph& g, Vertex v, const VertexSet& y) {
  return g.N(flood(g, VertexSet::single(v), g.vertices() - y));
}

/// Complement graph restricted to the live vertices.
inline Graph complement(const Graph& g) {
  Graph h(g.n(), g.weights());
  h = h.induced(g.vertices());
  for (Vertex u : g.vertices())
    for (Vertex v : g.vertices())
      if (u < v && !g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

/// Components of the complement of g[within].
inline std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet reached = VertexSet::single(rest.front());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= within - g.adj(v);
      next -= reached;
      reached |= next;
      frontier = next;
    }
    out.push_back(reached);
    rest -= reached;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Shortest path from a to b using only vertices of `within`; empty if none.
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b, const VertexSet& within) {
  std::vector<int> parent(g.n(), -1);
  std::vector<Vertex> queue{a};
  VertexSet seen = VertexSet::single(a);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    if (v == b) break;
    for (Vertex u : (g.adj(v) & within) - seen) {
      seen.insert(u);
      parent[u] = v;
      queue.push_back(u);
    }
  }
  if (!seen.contains(b)) return {};
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace p6mwis
