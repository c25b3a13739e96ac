#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chordal.hpp"
#include "set_family.hpp"

namespace p6mwis {

struct PMCWitness {
  VertexSet omega;
  std::vector<VertexSet> components;
  std::vector<VertexSet> neighborhoods;
  /// For each nonedge (u < v) inside omega, the index of a covering component.
  std::map<Edge, int> cover_map;
};

/// Fast PMC test (no witness).
inline bool pmc_check(const Graph& g, const VertexSet& omega) {
  if (!omega.subset_of(g.vertices())) return false;
  auto comps = components(g, omega);
  std::vector<VertexSet> nb;
  nb.reserve(comps.size());
  for (const auto& c : comps) {
    VertexSet s = g.N(c);
    if (s == omega) return false;
    nb.push_back(s);
  }
  for (Vertex u : omega) {
    VertexSet seen = g.adj(u);
    seen.insert(u);
    if (omega.subset_of(seen)) continue;
    for (const auto& s : nb)
      if (s.contains(u)) seen |= s;
    if (!omega.subset_of(seen)) return false;
  }
  return true;
}

/// A witness if omega satisfies (PMC1) no full component and (PMC2) every
/// nonedge inside omega is covered by some component.
inline std::optional<PMCWitness> is_pmc(const Graph& g, const VertexSet& omega) {
  if (!omega.subset_of(g.vertices())) return std::nullopt;
  PMCWitness w;
  w.omega = omega;
  w.components = components(g, omega);
  for (const auto& c : w.components) {
    w.neighborhoods.push_back(g.N(c));
    if (w.neighborhoods.back() == omega) return std::nullopt;
  }
  for (Vertex u : omega)
    for (Vertex v : omega) {
      if (v <= u || g.has_edge(u, v)) continue;
      int found = -1;
      for (std::size_t i = 0; i < w.components.size() && found < 0; ++i)
        if (w.neighborhoods[i].contains(u) && w.neighborhoods[i].contains(v)) found = static_cast<int>(i);
      if (found < 0) return std::nullopt;
      w.cover_map[{u, v}] = found;
    }
  return w;
}

/// All PMCs by testing every subset. Guarded by max_n.
inline SetFamily enumerate_all_pmcs_exhaustive(const Graph& g, int max_n = 16) {
  check(g.order() <= max_n, ErrorKind::Guard,
        "exhaustive PMC enumeration limited to " + std::to_string(max_n) + " vertices");
  std::vector<Vertex> vs = g.vertices().to_vector();
  std::vector<VertexSet> found;
  const std::uint64_t total = 1ULL << vs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1) s.insert(vs[i]);
    if (pmc_check(g, s)) found.push_back(s);
  }
  std::sort(found.begin(), found.end());
  SetFamily f;
  for (const auto& s : found) f.insert(s, "oracle");
  return f;
}

struct PMCBlock {
  VertexSet s;
  VertexSet d_omega;
};

/// For a PMC omega and a component d of g - omega: the minimal separator
/// s = N(d) and the other full component of g - s that contains omega \ s.
inline PMCBlock pmc_block(const Graph& g, const VertexSet& omega, const VertexSet& d) {
  check(pmc_check(g, omega), ErrorKind::Precondition, "omega is not a PMC");
  auto comps = components(g, omega);
  check(std::find(comps.begin(), comps.end(), d) != comps.end(), ErrorKind::Precondition,
        "d is not a component of g - omega");
  PMCBlock b;
  b.s = g.N(d);
  b.d_omega = omega - b.s;
  for (const auto& c : comps)
    if (!g.N(c).subset_of(b.s)) b.d_omega |= c;
  check(is_connected(g, b.d_omega) && g.N(b.d_omega) == b.s, ErrorKind::Invariant, "block side is not a full component");
  check(is_minimal_separator(g, b.s).has_value(), ErrorKind::Invariant, "block separator is not minimal");
  return b;
}

struct LiftStep {
  Vertex vertex;
  bool without_ok;  // omega stays a PMC without the vertex
  bool with_ok;     // omega plus the vertex is a PMC
};

/// The unique PMC of g with survival sequence `order` ending in omega_small,
/// a PMC of g - order. Vertices are reintroduced right to left.
inline VertexSet lift_pmc(const Graph& g, const std::vector<Vertex>& order, VertexSet omega_small,
                          std::vector<LiftStep>* trace = nullptr) {
  VertexSet removed = VertexSet::from(order);
  Graph cur = g.without(removed);
  check(pmc_check(cur, omega_small), ErrorKind::Precondition, "start set is not a PMC of the reduced graph");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    removed.erase(*it);
    cur = g.without(removed);
    VertexSet with = omega_small | VertexSet::single(*it);
    bool a = pmc_check(cur, omega_small), b = pmc_check(cur, with);
    if (trace) trace->push_back({*it, a, b});
    if (a == b) fail(ErrorKind::Invariant, "alternative-ambiguity while lifting at vertex " + std::to_string(*it));
    if (b) omega_small = with;
  }
  return omega_small;
}

/// Omega = N(D0) u N(D1) u N(D2) u ((N(v1) n N(v2)) \ D0).
inline VertexSet deduce_social(const Graph& g, Vertex v1, Vertex v2, const VertexSet& d0, const VertexSet& d1,
                               const VertexSet& d2) {
  return g.N(d0) | g.N(d1) | g.N(d2) | ((g.adj(v1) & g.adj(v2)) - d0);
}

/// Omega = (N(v1) \ D0) u N(D0).
inline VertexSet deduce_solitary(const Graph& g, Vertex v1, const VertexSet& d0) {
  return (g.adj(v1) - d0) | g.N(d0);
}

/// Shared lifting stage: keeps candidates that are PMCs of g - prefix and
/// lifts them to g.
class PrefixLifter {
 public:
  PrefixLifter(const Graph& g, std::vector<Vertex> prefix) : g_(g), prefix_(std::move(prefix)) {
    gk_ = g.without(VertexSet::from(prefix_));
  }
  const Graph& reduced() const { return gk_; }
  /// Lifts omega_k when it is a PMC of the reduced graph; returns nothing otherwise.
  std::optional<VertexSet> operator()(const VertexSet& omega_k) {
    auto memo = cache_.find(omega_k);
    if (memo != cache_.end()) return memo->second;
    std::optional<VertexSet> out;
    if (pmc_check(gk_, omega_k)) out = lift_pmc(g_, prefix_, omega_k);
    cache_.emplace(omega_k, out);
    return out;
  }

 private:
  const Graph& g_;
  std::vector<Vertex> prefix_;
  Graph gk_;
  std::unordered_map<VertexSet, std::optional<VertexSet>, VertexSetHash> cache_;
};

/// Components of D - removed for every D in x.
inline std::vector<VertexSet> shrink_family(const Graph& g, const std::vector<VertexSet>& x, const VertexSet& removed) {
  SetHash seen;
  std::vector<VertexSet> out;
  for (const auto& d : x)
    for (const auto& c : components_within(g, d - removed))
      if (seen.insert(c).second) out.push_back(c);
  return out;
}

/// Social candidates {N(D0) u ((N(t1) n N(t2)) \ D0)} x {N(D1) u N(D2)}
/// evaluated in g, calling emit for each distinct union. t1, t2 range over
/// nonadjacent pairs in N(D0) (the only ones for which the formula is used).
/// With an anchor, D0 must contain it.
template <class Emit>
void social_candidates(const Graph& g, const std::vector<VertexSet>& xs, Vertex anchor, Emit&& emit) {
  SetHash left, right;
  std::vector<VertexSet> lv, rv;
  std::vector<VertexSet> nb;
  for (const auto& d : xs) nb.push_back(g.N(d));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (anchor >= 0 && !xs[i].contains(anchor)) continue;
    const VertexSet& nd = nb[i];
    for (Vertex t1 : nd)
      for (Vertex t2 : nd) {
        if (t2 <= t1 || g.has_edge(t1, t2)) continue;
        VertexSet a = nd | ((g.adj(t1) & g.adj(t2)) - xs[i]);
        if (left.insert(a).second) lv.push_back(a);
      }
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) {
      VertexSet b = nb[i] | nb[j];
      if (right.insert(b).second) rv.push_back(b);
    }
  SetHash out;
  for (const auto& a : lv)
    for (const auto& b : rv) {
      VertexSet u = a | b;
      if (out.insert(u).second) emit(u);
    }
}

/// Solitary candidates (N(t1) \ D0) u N(D0) for t1 in N(D0).
template <class Emit>
void solitary_candidates(const Graph& g, const std::vector<VertexSet>& xs, Vertex anchor, Emit&& emit) {
  SetHash out;
  for (const auto& d : xs) {
    if (anchor >= 0 && !d.contains(anchor)) continue;
    VertexSet nd = g.N(d);
    for (Vertex t1 : nd) {
      VertexSet c = (g.adj(t1) - d) | nd;
      if (out.insert(c).second) emit(c);
    }
  }
}

/// Every PMC whose components all belong to x (in a P6-free graph), via
/// survival sequences along ascending vertex ids.
inline SetFamily recover_from_components(const Graph& g, const std::vector<VertexSet>& x) {
  SetFamily out;
  const VertexSet all = g.vertices();
  const int n = all.size();
  if (n <= 1) {
    out.insert(all, "rec1:n1");
    return out;
  }
  std::vector<Vertex> w = all.to_vector();
  // Case 0: survives to the empty graph.
  out.insert(lift_pmc(g, w, VertexSet()), "rec1:case0");
  for (int k = 0; k < n; ++k) {
    std::vector<Vertex> prefix(w.begin(), w.begin() + k);
    PrefixLifter lift(g, prefix);
    const Graph& gk = lift.reduced();
    auto xk = shrink_family(g, x, VertexSet::from(prefix));
    Vertex v = w[k];
    for (const auto& d : xk) {
      if (d.contains(v)) continue;
      VertexSet om = gk.N(d) | VertexSet::single(v);
      if (auto o = lift(om)) out.insert(*o, "rec1:case1");
    }
    social_candidates(gk, xk, v, [&](const VertexSet& om) {
      if (auto o = lift(om)) out.insert(*o, "rec1:case2-social");
    });
    solitary_candidates(gk, xk, v, [&](const VertexSet& om) {
      if (auto o = lift(om)) out.insert(*o, "rec1:case2-solitary");
    });
  }
  return out;
}

inline SetFamily recover_from_components(const Graph& g, const SetFamily& x) {
  return recover_from_components(g, x.members());
}

/// For each X in x and s in X: (N[s] n X) u the union of N(C) over
/// components C of g - X.
inline SetFamily recover_from_union(const Graph& g, const std::vector<VertexSet>& x) {
  SetFamily out;
  for (const auto& big : x) {
    VertexSet outer;
    for (const auto& c : components(g, big)) outer |= g.N(c);
    for (Vertex s : big & g.vertices()) out.insert((g.N_closed(s) & big) | outer, "rec2");
  }
  return out;
}

inline SetFamily recover_from_union(const Graph& g, const SetFamily& x) { return recover_from_union(g, x.members()); }

struct WingsReport {
  bool first_complete = false;   // N(d1) \ N(d2) complete to d1
  bool second_complete = false;  // N(d2) \ N(d1) complete to d2
  bool pairs_ok = true;          // nonadjacent cross pairs are complete to their sides
};

inline WingsReport wings_classify(const Graph& g, const VertexSet& d1, const VertexSet& d2) {
  WingsReport r;
  VertexSet n1 = g.N(d1), n2 = g.N(d2);
  VertexSet a = n1 - n2, b = n2 - n1;
  r.first_complete = g.complete_to(a, d1);
  r.second_complete = g.complete_to(b, d2);
  for (Vertex v1 : a)
    for (Vertex v2 : b)
      if (!g.has_edge(v1, v2) && (!d1.subset_of(g.adj(v1)) || !d2.subset_of(g.adj(v2)))) r.pairs_ok = false;
  return r;
}

/// Checks the two-component neighborhood dichotomy around a PMC.
inline WingsReport wings(const Graph& g, const VertexSet& omega, const VertexSet& d1, const VertexSet& d2) {
  check(pmc_check(g, omega), ErrorKind::Precondition, "omega is not a PMC");
  auto comps = components(g, omega);
  auto has = [&](const VertexSet& d) { return std::find(comps.begin(), comps.end(), d) != comps.end(); };
  check(has(d1) && has(d2), ErrorKind::Precondition, "d1, d2 must be components of g - omega");
  WingsReport r = wings_classify(g, d1, d2);
  if (!(r.first_complete || r.second_complete) || !r.pairs_ok) fail(ErrorKind::NotP6Free, "lemma-violated");
  return r;
}

}  // namespace p6mwis
