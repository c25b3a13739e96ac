#pragma once

#include <optional>
#include <vector>

#include "connectivity.hpp"

namespace p6mwis {

enum class QuotientKind { Independent, Clique, Prime };

struct ModularPartition {
  QuotientKind kind = QuotientKind::Prime;
  std::vector<VertexSet> modules;  // maximal proper strong modules, canonical order
  std::vector<std::vector<bool>> quotient_adjacency;

  /// Index of the module that contains v, or -1.
  int module_of(Vertex v) const {
    for (std::size_t i = 0; i < modules.size(); ++i)
      if (modules[i].contains(v)) return static_cast<int>(i);
    return -1;
  }
};

/// True if every vertex of scope outside m sees all of m or none of it.
inline bool is_module(const Graph& g, const VertexSet& scope, const VertexSet& m) {
  if (m.empty()) return false;
  for (Vertex u : scope - m) {
    VertexSet seen = g.adj(u) & m;
    if (!seen.empty() && seen != m) return false;
  }
  return true;
}

/// Smallest module of g[scope] containing `seed`.
inline VertexSet module_closure(const Graph& g, const VertexSet& scope, VertexSet seed) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex u : scope - seed) {
      VertexSet seen = g.adj(u) & seed;
      if (!seen.empty() && seen != seed) {
        seed.insert(u);
        grew = true;
      }
    }
  }
  return seed;
}

/// Maximal proper strong modules of g[scope] and their quotient.
inline ModularPartition modular_partition(const Graph& g, const VertexSet& scope) {
  check(scope.size() >= 2, ErrorKind::Precondition, "modular partition needs at least two vertices");
  ModularPartition mp;
  auto comps = components_within(g, scope);
  if (comps.size() > 1) {
    mp.kind = QuotientKind::Independent;
    mp.modules = comps;
  } else if (auto co = co_components(g, scope); co.size() > 1) {
    mp.kind = QuotientKind::Clique;
    mp.modules = co;
  } else {
    mp.kind = QuotientKind::Prime;
    VertexSet rest = scope;
    while (!rest.empty()) {
      Vertex v = rest.front();
      VertexSet m = VertexSet::single(v);
      for (Vertex w : scope) {
        if (w == v || m.contains(w)) continue;
        VertexSet c = module_closure(g, scope, VertexSet{v, w});
        if (c != scope) m |= c;
      }
      mp.modules.push_back(m);
      rest -= m;
    }
    std::sort(mp.modules.begin(), mp.modules.end());
  }
  const std::size_t k = mp.modules.size();
  mp.quotient_adjacency.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) mp.quotient_adjacency[i][j] = g.adj(mp.modules[i].front()).contains(mp.modules[j].front());
  return mp;
}

enum class MDKind { Leaf, Clique, Independent, Prime };

struct MDNode {
  VertexSet label;
  MDKind kind = MDKind::Leaf;
  std::vector<int> children;
};

struct MDTree {
  std::vector<MDNode> nodes;  // nodes[0] is the root when nonempty
};

namespace detail {
inline int build_md(const Graph& g, const VertexSet& scope, MDTree& t) {
  int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back(MDNode{scope, MDKind::Leaf, {}});
  if (scope.size() == 1) return id;
  auto mp = modular_partition(g, scope);
  MDKind kind = mp.kind == QuotientKind::Independent ? MDKind::Independent
                : mp.kind == QuotientKind::Clique    ? MDKind::Clique
                                                     : MDKind::Prime;
  std::vector<int> kids;
  for (const auto& m : mp.modules) kids.push_back(build_md(g, m, t));
  t.nodes[id].kind = kind;
  t.nodes[id].children = std::move(kids);
  return id;
}
}  // namespace detail

/// Modular decomposition tree of g restricted to scope (default: all vertices).
inline MDTree md_tree(const Graph& g, std::optional<VertexSet> scope = std::nullopt) {
  MDTree t;
  VertexSet s = scope ? *scope : g.vertices();
  if (!s.empty()) detail::build_md(g, s, t);
  return t;
}

/// |scope| >= 2 and the quotient of g[scope] is a clique.
inline bool is_mesh(const Graph& g, const VertexSet& scope) {
  if (scope.size() < 2) return false;
  return co_components(g, scope).size() > 1;
}

/// Modules of g[scope] that induce connected and co-connected subgraphs:
/// the leaves and prime nodes of the decomposition tree.
inline std::vector<VertexSet> connected_coconnected_modules(const Graph& g,
                                                            std::optional<VertexSet> scope = std::nullopt) {
  std::vector<VertexSet> out;
  for (const auto& node : md_tree(g, scope).nodes)
    if (node.kind == MDKind::Leaf || node.kind == MDKind::Prime) out.push_back(node.label);
  std::sort(out.begin(), out.end());
  return out;
}

/// The module of Mod(g[mesh_scope]) meeting indep, if any.
inline std::optional<VertexSet> unique_I_module(const Graph& g, const VertexSet& mesh_scope, const VertexSet& indep) {
  check(is_mesh(g, mesh_scope), ErrorKind::Precondition, "scope is not a mesh");
  check(g.is_independent(indep), ErrorKind::Precondition, "indep is not independent");
  std::optional<VertexSet> found;
  for (const auto& m : modular_partition(g, mesh_scope).modules) {
    if (!m.intersects(indep)) continue;
    check(!found, ErrorKind::Invariant, "two mesh modules meet an independent set");
    found = m;
  }
  return found;
}

}  // namespace p6mwis
