#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "separators.hpp"

namespace p6mwis {

/// Maximum cardinality search; returns a perfect elimination ordering
/// candidate (first element is eliminated first).
inline std::vector<Vertex> mcs_order(const Graph& g) {
  std::vector<int> score(g.n(), 0);
  VertexSet left = g.vertices();
  std::vector<Vertex> visit;
  while (!left.empty()) {
    Vertex best = -1;
    for (Vertex v : left)
      if (best < 0 || score[v] > score[best]) best = v;
    visit.push_back(best);
    left.erase(best);
    for (Vertex u : g.adj(best) & left) ++score[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

/// True if each vertex's later neighbors form a clique.
inline bool is_peo(const Graph& g, const std::vector<Vertex>& order) {
  VertexSet later = g.vertices();
  for (Vertex v : order) {
    later.erase(v);
    if (!g.is_clique(g.adj(v) & later)) return false;
  }
  return true;
}

/// Nothing if g is chordal, otherwise an induced cycle of length at least 4.
inline std::optional<std::vector<Vertex>> is_chordal(const Graph& g) {
  if (is_peo(g, mcs_order(g))) return std::nullopt;
  for (Vertex v : g.vertices()) {
    VertexSet nv = g.adj(v);
    for (Vertex x : nv)
      for (Vertex y : nv) {
        if (y <= x || g.has_edge(x, y)) continue;
        VertexSet within = (g.vertices() - g.N_closed(v)) | VertexSet{x, y};
        auto path = shortest_path(g, x, y, within);
        if (path.empty()) continue;
        std::vector<Vertex> hole{v};
        hole.insert(hole.end(), path.begin(), path.end());
        return hole;
      }
  }
  fail(ErrorKind::Invariant, "elimination check failed but no hole found");
}

inline bool chordal(const Graph& g) { return is_peo(g, mcs_order(g)); }

/// Maximal cliques of a chordal graph, in canonical order.
inline std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) {
  auto order = mcs_order(g);
  check(is_peo(g, order), ErrorKind::Precondition, "graph is not chordal");
  std::vector<VertexSet> cand;
  VertexSet later = g.vertices();
  for (Vertex v : order) {
    later.erase(v);
    cand.push_back((g.adj(v) & later) | VertexSet::single(v));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cand.size() && maximal; ++j)
      if (i != j && cand[i].subset_of(cand[j]) && (cand[i] != cand[j] || j < i)) maximal = false;
    if (maximal) out.push_back(cand[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CliqueTree {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  VertexSet adhesion(std::size_t e) const { return bags[edges[e].first] & bags[edges[e].second]; }
  /// Bags on the side of edge e that contains `side`, with e removed.
  std::vector<int> side_nodes(std::size_t e, int side) const {
    std::vector<int> seen{side};
    std::vector<bool> mark(bags.size(), false);
    mark[side] = true;
    for (std::size_t i = 0; i < seen.size(); ++i)
      for (std::size_t f = 0; f < edges.size(); ++f) {
        if (f == e) continue;
        auto [a, b] = edges[f];
        int other = a == seen[i] ? b : b == seen[i] ? a : -1;
        if (other >= 0 && !mark[other]) {
          mark[other] = true;
          seen.push_back(other);
        }
      }
    return seen;
  }
};

/// Clique tree of a chordal graph: a maximum-weight spanning tree of the
/// clique intersection graph.
inline CliqueTree clique_tree(const Graph& g) {
  CliqueTree t;
  t.bags = maximal_cliques_chordal(g);
  const int k = static_cast<int>(t.bags.size());
  struct Cand {
    int w, a, b;
  };
  std::vector<Cand> cands;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) cands.push_back({(t.bags[a] & t.bags[b]).size(), a, b});
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.w > y.w; });
  std::vector<int> root(k);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& c : cands) {
    int ra = find(c.a), rb = find(c.b);
    if (ra == rb) continue;
    root[ra] = rb;
    t.edges.emplace_back(c.a, c.b);
  }
  return t;
}

/// Checks that every vertex's bags form a connected subtree.
inline bool has_subtree_property(const CliqueTree& t) {
  VertexSet all;
  for (const auto& b : t.bags) all |= b;
  for (Vertex v : all) {
    std::vector<int> holders;
    for (std::size_t i = 0; i < t.bags.size(); ++i)
      if (t.bags[i].contains(v)) holders.push_back(static_cast<int>(i));
    std::vector<int> seen{holders[0]};
    std::vector<bool> mark(t.bags.size(), false);
    mark[holders[0]] = true;
    for (std::size_t i = 0; i < seen.size(); ++i)
      for (auto [a, b] : t.edges) {
        int other = a == seen[i] ? b : b == seen[i] ? a : -1;
        if (other >= 0 && !mark[other] && t.bags[other].contains(v)) {
          mark[other] = true;
          seen.push_back(other);
        }
      }
    if (seen.size() != holders.size()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Completions

struct Completion {
  std::vector<Edge> fill;  // sorted pairs (u < v), all nonedges of the base graph
  bool minimal = false;
  std::optional<Vertex> avoids;
  /// Set when a constrained routine had to give up on a minimality guarantee.
  bool fallback = false;

  Graph apply(const Graph& g) const { return g.with_edges(fill); }
};

inline std::vector<Edge> normalized(std::vector<Edge> es) {
  for (auto& [u, v] : es)
    if (u > v) std::swap(u, v);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

/// Fill edges of h over g.
inline std::vector<Edge> fill_between(const Graph& g, const Graph& h) {
  std::vector<Edge> out;
  for (auto [u, v] : h.edges())
    if (!g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

/// Elimination game along a min-degree order; `first` is eliminated before
/// anything else. Returns the fill.
inline std::vector<Edge> elimination_fill(const Graph& g, std::optional<Vertex> first = std::nullopt) {
  Graph h = g;
  VertexSet left = g.vertices();
  std::vector<Edge> fill;
  while (!left.empty()) {
    Vertex v = -1;
    if (first && left.contains(*first)) {
      v = *first;
    } else {
      for (Vertex u : left)
        if (v < 0 || (h.adj(u) & left).size() < (h.adj(v) & left).size()) v = u;
    }
    VertexSet nb = h.adj(v) & left;
    for (Vertex a : nb)
      for (Vertex b : nb)
        if (a < b && !h.has_edge(a, b)) {
          h.add_edge(a, b);
          fill.emplace_back(a, b);
        }
    left.erase(v);
  }
  return normalized(fill);
}

/// Drops single fill edges while the result stays chordal, until no edge
/// can be dropped. Edges in `keep` are never dropped.
inline std::vector<Edge> refine_fill(const Graph& g, std::vector<Edge> fill, const std::vector<Edge>& keep = {}) {
  fill = normalized(fill);
  std::set<Edge> protect(keep.begin(), keep.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < fill.size(); ++i) {
      if (protect.count(fill[i])) continue;
      std::vector<Edge> trial = fill;
      trial.erase(trial.begin() + i);
      if (chordal(g.with_edges(trial))) {
        fill = std::move(trial);
        changed = true;
        --i;
      }
    }
  }
  return fill;
}

/// True if g + fill is chordal and no single fill edge can be removed.
inline bool audit_minimal(const Graph& g, const std::vector<Edge>& fill) {
  if (!chordal(g.with_edges(fill))) return false;
  for (std::size_t i = 0; i < fill.size(); ++i) {
    std::vector<Edge> trial = fill;
    trial.erase(trial.begin() + i);
    if (chordal(g.with_edges(trial))) return false;
  }
  return true;
}

/// A minimal chordal completion. With `avoid`, no fill edge touches it.
inline Completion minimal_completion(const Graph& g, std::optional<Vertex> avoid = std::nullopt) {
  Completion c;
  c.fill = refine_fill(g, elimination_fill(g, avoid));
  c.minimal = true;
  c.avoids = avoid;
  return c;
}

/// s2 meets at least two components of g - s1.
inline bool crossing(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  check(is_minimal_separator(g, s1) && is_minimal_separator(g, s2), ErrorKind::Precondition,
        "crossing needs two minimal separators");
  int hit = 0;
  for (const auto& c : components(g, s1))
    if (c.intersects(s2)) ++hit;
  return hit >= 2;
}

/// Cap on the number of minimal separators generated when extending a
/// separator set to a maximal noncrossing family.
inline constexpr std::size_t kForceSeparatorGuard = 20000;

/// A minimal completion in which every separator of `seps` is a clique and
/// stays a minimal separator. `seps` must be pairwise noncrossing.
inline Completion force_separators_completion(const Graph& g, const std::vector<VertexSet>& seps) {
  for (std::size_t i = 0; i < seps.size(); ++i) {
    check(is_minimal_separator(g, seps[i]).has_value(), ErrorKind::Precondition,
          "forced set " + seps[i].to_string() + " is not a minimal separator");
    for (std::size_t j = i + 1; j < seps.size(); ++j)
      check(!crossing(g, seps[i], seps[j]), ErrorKind::Precondition, "crossing-separators");
  }
  Completion c;
  std::vector<VertexSet> chosen = seps;
  bool extended = false;
  {
    // Bounded closure generation; if the cap is hit we fall back.
    SetHash seen;
    std::vector<VertexSet> all;
    auto push = [&](const VertexSet& s) {
      if (all.size() > kForceSeparatorGuard || !is_minimal_separator(g, s)) return;
      if (seen.insert(s).second) all.push_back(s);
    };
    push(VertexSet());
    for (Vertex v : g.vertices())
      for (const auto& comp : components(g, g.N_closed(v))) push(g.N(comp));
    for (std::size_t i = 0; i < all.size() && all.size() <= kForceSeparatorGuard; ++i) {
      VertexSet s = all[i];
      for (Vertex x : s)
        for (const auto& comp : components(g, s | g.adj(x))) push(g.N(comp));
    }
    if (all.size() <= kForceSeparatorGuard) {
      std::sort(all.begin(), all.end());
      for (const auto& s : all) {
        bool ok = true;
        for (const auto& t : chosen)
          if (s == t || crossing(g, s, t)) {
            ok = false;
            break;
          }
        if (ok) chosen.push_back(s);
      }
      extended = true;
    }
  }
  Graph h = g;
  for (const auto& s : chosen) h.saturate(s);
  std::vector<Edge> keep = fill_between(g, h);
  if (extended && chordal(h)) {
    // Saturating a maximal noncrossing family is already a minimal triangulation.
    c.fill = normalized(keep);
    c.minimal = true;
  } else {
    std::vector<Edge> fill = keep;
    for (auto e : elimination_fill(h)) fill.push_back(e);
    c.fill = refine_fill(g, fill, keep);
    c.fallback = true;
    c.minimal = audit_minimal(g, c.fill);
  }
  Graph res = c.apply(g);
  for (const auto& s : seps)
    check(is_minimal_separator(res, s).has_value(), ErrorKind::Invariant, "forced separator lost");
  return c;
}

struct MinsepTools {
  std::size_t edge = 0;  // index into tree.edges
  VertexSet omega;
  CliqueTree tree;
};

/// For a minimal separator s of chordal h and a full component d: a clique
/// tree edge with adhesion s whose d-side bag omega satisfies s < omega <= N[d].
inline MinsepTools chordal_minsep_tools(const Graph& h, const VertexSet& s, const VertexSet& d) {
  check(is_minimal_separator(h, s).has_value(), ErrorKind::Precondition, "s is not a minimal separator");
  check(h.N(d) == s && is_connected(h, d), ErrorKind::Precondition, "d is not a full component");
  MinsepTools r;
  r.tree = clique_tree(h);
  VertexSet nd = h.N_closed(d);
  for (std::size_t e = 0; e < r.tree.edges.size(); ++e) {
    if (r.tree.adhesion(e) != s) continue;
    for (int end : {r.tree.edges[e].first, r.tree.edges[e].second}) {
      const VertexSet& bag = r.tree.bags[end];
      if (bag.intersects(d) && bag.subset_of(nd)) {
        r.edge = e;
        r.omega = bag;
        return r;
      }
    }
  }
  fail(ErrorKind::Precondition, "witness-not-found");
}

}  // namespace p6mwis
