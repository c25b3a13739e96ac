#pragma once

#include <array>
#include <optional>
#include <vector>

#include "modular.hpp"

namespace p6mwis {

// ---------------------------------------------------------------------------
// Bi-ranking

/// Two quasi-orders on the same finite universe, given as relation matrices
/// indexed by position in `universe`.
struct QuasiOrderPair {
  std::vector<int> universe;
  std::vector<std::vector<bool>> leq1, leq2;

  std::size_t size() const { return universe.size(); }
};

/// Checks reflexivity and transitivity of both relations and that every
/// pair of distinct elements is comparable in at least one of them.
inline bool valid_quasi_order_pair(const QuasiOrderPair& q) {
  const std::size_t n = q.size();
  for (const auto* rel : {&q.leq1, &q.leq2}) {
    if (rel->size() != n) return false;
    for (std::size_t a = 0; a < n; ++a) {
      if ((*rel)[a].size() != n || !(*rel)[a][a]) return false;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if ((*rel)[a][b] && (*rel)[b][c] && !(*rel)[a][c]) return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && !q.leq1[a][b] && !q.leq1[b][a] && !q.leq2[a][b] && !q.leq2[b][a]) return false;
  return true;
}

/// Arcs of the auxiliary digraph after linearizing each equivalence class
/// by position: arc (a,b) when a is below b in neither order.
inline std::vector<std::vector<bool>> biranking_digraph(const QuasiOrderPair& q) {
  const std::size_t n = q.size();
  auto strict = [&](const std::vector<std::vector<bool>>& rel, std::size_t a, std::size_t b) {
    if (!rel[a][b]) return false;
    if (rel[b][a]) return a <= b;  // equivalent elements ordered by position
    return true;
  };
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && !strict(q.leq1, a, b) && !strict(q.leq2, a, b)) arc[a][b] = true;
  return arc;
}

/// An element x with x <=1 y or x <=2 y for every y, taken as a sink of the
/// auxiliary digraph.
inline int biranking_select(const QuasiOrderPair& q) {
  check(q.size() > 0, ErrorKind::Precondition, "bi-ranking needs a nonempty universe");
  check(valid_quasi_order_pair(q), ErrorKind::Precondition, "comparability or quasi-order condition violated");
  auto arc = biranking_digraph(q);
  const std::size_t n = q.size();
  for (std::size_t x = 0; x < n; ++x) {
    bool sink = true;
    for (std::size_t y = 0; y < n && sink; ++y) sink = !arc[x][y];
    if (!sink) continue;
    for (std::size_t y = 0; y < n; ++y)
      check(q.leq1[x][y] || q.leq2[x][y], ErrorKind::Invariant, "bi-ranking sink is not below everything");
    return q.universe[x];
  }
  fail(ErrorKind::Invariant, "bi-ranking digraph has no sink");
}

inline bool is_acyclic(const std::vector<std::vector<bool>>& arc) {
  const std::size_t n = arc.size();
  std::vector<int> indeg(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (arc[a][b]) ++indeg[b];
  std::vector<std::size_t> stack;
  for (std::size_t a = 0; a < n; ++a)
    if (!indeg[a]) stack.push_back(a);
  std::size_t seen = 0;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t b = 0; b < n; ++b)
      if (arc[a][b] && --indeg[b] == 0) stack.push_back(b);
  }
  return seen == n;
}

// ---------------------------------------------------------------------------
// Neighborhood decomposition

struct NeighborhoodClassification {
  VertexSet p4_class, pq_class, tricky;
  Vertex p = -1, q = -1;
  /// For u in p4_class: an induced path u, a, b, c with a, b, c in D.
  std::vector<std::pair<Vertex, std::array<Vertex, 3>>> p4_witness;
};

/// An induced P4 u-a-b-c with a, b, c in d, if one exists.
inline std::optional<std::array<Vertex, 3>> find_p4_into(const Graph& g, Vertex u, const VertexSet& d) {
  VertexSet nu = g.N_closed(u);
  for (Vertex a : g.adj(u) & d)
    for (Vertex b : (g.adj(a) & d) - nu)
      for (Vertex c : (g.adj(b) & d) - nu - g.N_closed(a)) return std::array<Vertex, 3>{a, b, c};
  return std::nullopt;
}

/// True if p and q lie in different, adjacent modules of Mod(g[d]).
inline bool valid_pq(const Graph& g, const VertexSet& d, Vertex p, Vertex q) {
  if (!d.contains(p) || !d.contains(q) || d.size() < 2) return false;
  auto mp = modular_partition(g, d);
  int i = mp.module_of(p), j = mp.module_of(q);
  return i != j && mp.quotient_adjacency[i][j];
}

/// Lowest-id p, q in different adjacent modules of Mod(g[d]).
inline std::pair<Vertex, Vertex> default_pq(const Graph& g, const VertexSet& d) {
  auto mp = modular_partition(g, d);
  for (std::size_t i = 0; i < mp.modules.size(); ++i)
    for (std::size_t j = i + 1; j < mp.modules.size(); ++j)
      if (mp.quotient_adjacency[i][j]) return {mp.modules[i].front(), mp.modules[j].front()};
  fail(ErrorKind::Precondition, "quotient has no edge; component is not connected");
}

/// Splits N(d) into vertices with a P4 into d, neighbors of p or q, and the
/// remaining tricky vertices. Priority: pq, then P4, then tricky.
inline NeighborhoodClassification neighborhood_decomposition(const Graph& g, const VertexSet& d, Vertex p, Vertex q) {
  check(d.size() >= 2 && is_connected(g, d), ErrorKind::Precondition, "d must be connected with at least two vertices");
  check(valid_pq(g, d, p, q), ErrorKind::Precondition, "p and q must lie in distinct adjacent modules");
  NeighborhoodClassification r;
  r.p = p;
  r.q = q;
  VertexSet npq = g.N_closed(VertexSet{p, q});
  for (Vertex u : g.N(d)) {
    if (npq.contains(u)) {
      r.pq_class.insert(u);
    } else if (auto w = find_p4_into(g, u, d)) {
      r.p4_class.insert(u);
      r.p4_witness.emplace_back(u, *w);
    } else {
      r.tricky.insert(u);
    }
  }
  if (!r.tricky.empty()) {
    check(is_mesh(g, d), ErrorKind::Invariant, "tricky vertex toward a non-mesh component");
    auto mp = modular_partition(g, d);
    for (Vertex u : r.tricky)
      for (const auto& m : mp.modules) {
        VertexSet seen = g.adj(u) & m;
        check(seen.empty() || seen == m, ErrorKind::Invariant, "tricky vertex splits a module");
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Separator covering

struct CoverPins {
  Vertex p1, q1, p2, q2;
};

struct CoverResult {
  VertexSet a1, a2;
  bool used_biranking = false;
};

/// Finds A1 in d1 and A2 in d2, each of size at most 3, with N[A1 u A2]
/// covering s. With pins, p_i and q_i are fixed as in the general version.
inline CoverResult separator_cover(const Graph& g, const VertexSet& s, const VertexSet& d1, const VertexSet& d2,
                                   std::optional<CoverPins> pins = std::nullopt) {
  check(g.N(d1) == s && g.N(d2) == s && is_connected(g, d1) && is_connected(g, d2) && !d1.intersects(d2),
        ErrorKind::Precondition, "d1 and d2 must be full components of g - s");
  CoverResult r;
  auto verify = [&](CoverResult& res) {
    check(res.a1.size() <= 3 && res.a2.size() <= 3 && res.a1.subset_of(d1) && res.a2.subset_of(d2),
          ErrorKind::Invariant, "cover sets out of shape");
    check(s.subset_of(g.N_closed(res.a1 | res.a2)), ErrorKind::NotP6Free, "separator not covered");
    return res;
  };
  if (!pins) {
    if (d1.size() == 1) {
      r.a1 = d1;
      return verify(r);
    }
    if (d2.size() == 1) {
      r.a2 = d2;
      return verify(r);
    }
  }
  check(d1.size() >= 2 && d2.size() >= 2, ErrorKind::Precondition, "pinned covering needs components of size >= 2");
  CoverPins pn;
  if (pins) {
    pn = *pins;
    check(valid_pq(g, d1, pn.p1, pn.q1) && valid_pq(g, d2, pn.p2, pn.q2), ErrorKind::Precondition,
          "pins must lie in distinct adjacent modules");
  } else {
    std::tie(pn.p1, pn.q1) = default_pq(g, d1);
    std::tie(pn.p2, pn.q2) = default_pq(g, d2);
  }
  r.a1 = VertexSet{pn.p1, pn.q1};
  r.a2 = VertexSet{pn.p2, pn.q2};
  VertexSet rest = s - g.N_closed(r.a1 | r.a2);
  if (rest.empty() || !is_mesh(g, d1) || !is_mesh(g, d2)) return verify(r);

  QuasiOrderPair qp;
  qp.universe = rest.to_vector();
  const std::size_t k = qp.universe.size();
  qp.leq1.assign(k, std::vector<bool>(k));
  qp.leq2.assign(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Vertex u = qp.universe[a], v = qp.universe[b];
      qp.leq1[a][b] = (g.adj(u) & d1).subset_of(g.adj(v));
      qp.leq2[a][b] = (g.adj(u) & d2).subset_of(g.adj(v));
    }
  if (!valid_quasi_order_pair(qp)) fail(ErrorKind::NotP6Free, "neighborhood orders are not bi-comparable");
  Vertex w = biranking_select(qp);
  r.a1.insert((g.adj(w) & d1).front());
  r.a2.insert((g.adj(w) & d2).front());
  r.used_biranking = true;
  return verify(r);
}

}  // namespace p6mwis
