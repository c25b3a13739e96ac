#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modular.hpp"
#include "pmc.hpp"
#include "toolbox.hpp"

namespace p6mwis {

/// A component D of G - S together with separator vertices complete to it.
struct FuzzyComponent {
  VertexSet core, halo, whole;
};

/// True if `whole` is a fuzzy version of the component `core` of g - s.
inline bool is_fuzzy_version(const Graph& g, const VertexSet& s, const VertexSet& core, const VertexSet& whole) {
  if (!core.subset_of(whole) || !whole.subset_of(core | s)) return false;
  return g.complete_to(whole - core, core);
}

inline std::optional<FuzzyComponent> make_fuzzy(const Graph& g, const VertexSet& s, const VertexSet& core,
                                                const VertexSet& whole) {
  if (!is_fuzzy_version(g, s, core, whole)) return std::nullopt;
  return FuzzyComponent{core, whole - core, whole};
}

/// Work counter shared by the expensive constructions.
struct WorkBudget {
  static constexpr std::uint64_t kDefault = 4'000'000'000ULL;
  std::uint64_t limit = kDefault;
  std::uint64_t used = 0;

  void spend(std::uint64_t units = 1) {
    used += units;
    if (used > limit) fail(ErrorKind::Budget, "work budget of " + std::to_string(limit) + " units exhausted");
  }
};

namespace detail {

inline void spend(WorkBudget* b, std::uint64_t units = 1) {
  if (b) b->spend(units);
}

/// Distinct values of N[A] over A within `pool`, |A| <= k (including the
/// empty set), computed level by level in graph h.
inline std::vector<VertexSet> closed_unions(const Graph& h, const VertexSet& pool, int k) {
  SetHash seen{VertexSet()};
  std::vector<VertexSet> all{VertexSet()};
  std::vector<VertexSet> level{VertexSet()};
  std::vector<VertexSet> nb;
  for (Vertex v : pool) nb.push_back(h.N_closed(v));
  for (int step = 0; step < k; ++step) {
    std::vector<VertexSet> next;
    for (const auto& a : level)
      for (const auto& b : nb) {
        VertexSet u = a | b;
        if (seen.insert(u).second) next.push_back(u);
      }
    if (next.empty()) break;
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

inline void add_components(SetFamily& out, const Graph& g, const VertexSet& removed, const std::string& tag) {
  for (const auto& c : components(g, removed)) out.insert(c, tag);
}

/// Distinct values N(C) over components C of g - y.
inline void push_component_neighborhoods(const Graph& g, const VertexSet& y, SetHash& seen,
                                         std::vector<VertexSet>& out) {
  for (const auto& c : components(g, y)) {
    VertexSet z = g.N(c);
    if (seen.insert(z).second) out.push_back(z);
  }
}

inline std::vector<VertexSet> distinct_neighborhoods(const Graph& g, const std::vector<VertexSet>& xs) {
  SetHash seen;
  std::vector<VertexSet> out;
  for (const auto& d : xs) {
    VertexSet z = g.N(d);
    if (seen.insert(z).second) out.push_back(z);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hidden separators

struct HiddenFamilies {
  SetFamily s_hidden;
  SetFamily f_hidden;
};

/// Proj(u, N[A]) for |A| <= 6 and u outside N[A], and the components they leave.
inline HiddenFamilies hidden_families(const Graph& g) {
  HiddenFamilies r;
  SetHash seen;
  std::vector<VertexSet> seps;
  for (const auto& y : detail::closed_unions(g, g.vertices(), 6)) detail::push_component_neighborhoods(g, y, seen, seps);
  for (const auto& s : seps) {
    r.s_hidden.insert(s, "hidden:S");
    detail::add_components(r.f_hidden, g, s, "hidden:F");
  }
  return r;
}

/// A minimal separator with at least three full components or strictly
/// inside another minimal separator.
inline bool is_hidden_separator(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& all_minseps) {
  if (!is_minimal_separator(g, s)) return false;
  if (full_components(g, s).size() >= 3) return true;
  for (const auto& t : all_minseps)
    if (t != s && s.subset_of(t)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Components recognized outright

/// Every component of G - Proj(s, N[A]) for |A| <= 6, s outside N[A].
inline SetFamily family_two_not_whole(const Graph& g) {
  SetFamily out;
  SetHash seen;
  std::vector<VertexSet> zs;
  for (const auto& y : detail::closed_unions(g, g.vertices(), 6)) detail::push_component_neighborhoods(g, y, seen, zs);
  for (const auto& z : zs) detail::add_components(out, g, z, "F1");
  return out;
}

/// Components of G - (Proj(v3, N[A]) u N[v2]) for |A| <= 6, together with F1.
inline SetFamily family_one_in_three(const Graph& g) {
  SetFamily out;
  SetHash seen;
  std::vector<VertexSet> projs;
  for (const auto& y : detail::closed_unions(g, g.vertices(), 6))
    detail::push_component_neighborhoods(g, y, seen, projs);
  SetHash zs;
  for (const auto& pr : projs)
    for (Vertex v2 : g.vertices()) {
      VertexSet z = pr | g.N_closed(v2);
      if (zs.insert(z).second) detail::add_components(out, g, z, "F2'");
    }
  for (const auto& z : projs) detail::add_components(out, g, z, "F1");
  return out;
}

/// Singletons plus the two reconstructions around Z = N[p,q] u N(D0).
inline SetFamily family_nonmesh_sticking(const Graph& g, const std::vector<VertexSet>& x) {
  SetFamily out;
  for (Vertex u : g.vertices()) out.insert(VertexSet::single(u), "F3:single");
  std::vector<std::pair<Edge, VertexSet>> pairs;
  for (Vertex p : g.vertices())
    for (Vertex q : g.vertices())
      if (p < q) pairs.push_back({{p, q}, g.N_closed(p) | g.N_closed(q)});
  SetHash zs;
  std::vector<VertexSet> zlist;
  for (const auto& d0 : x) {
    VertexSet nd0 = g.N(d0);
    for (const auto& [pq, npq] : pairs) {
      if (d0.contains(pq.first) || d0.contains(pq.second)) continue;
      VertexSet z = npq | nd0;
      if (zs.insert(z).second) zlist.push_back(z);
    }
  }
  SetHash cuts;
  for (const auto& z : zlist) {
    auto comps = components(g, z);
    std::vector<VertexSet> nbs;
    for (const auto& c : comps) nbs.push_back(g.N(c));
    // s outside Z: Proj(s, Z) is the neighborhood of the component of s.
    for (const auto& pr : nbs)
      if (cuts.insert(pr).second) detail::add_components(out, g, pr, "F3'");
    for (Vertex s : z) {
      VertexSet inner, outer;
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (nbs[i].contains(s)) {
          inner |= comps[i];
          outer |= nbs[i];
        }
      VertexSet cand = outer | (g.N_closed(s) - inner);
      if (cuts.insert(cand).second) detail::add_components(out, g, cand, "F3''");
    }
  }
  return out;
}

inline SetFamily family_nonmesh_sticking(const Graph& g, const SetFamily& x) {
  return family_nonmesh_sticking(g, x.members());
}

/// Connected and co-connected modules of G - N[p,q] over all p, q.
inline SetFamily family_nonmesh_pair(const Graph& g) {
  SetFamily out;
  SetHash seen;
  for (Vertex p : g.vertices())
    for (Vertex q : g.vertices()) {
      if (q < p) continue;
      VertexSet rest = g.vertices() - (g.N_closed(p) | g.N_closed(q));
      if (rest.empty() || !seen.insert(rest).second) continue;
      out.insert_range(connected_coconnected_modules(g, rest), "F5pair");
    }
  return out;
}

// ---------------------------------------------------------------------------
// Fuzzy versions of mesh components

/// N[p1,q1] \ N[p2,q2] over all choices; empty sets dropped.
inline SetFamily family_mesh_fuzzy_nonmesh(const Graph& g) {
  auto vals = detail::closed_unions(g, g.vertices(), 2);
  SetFamily out;
  for (const auto& a : vals)
    for (const auto& b : vals) {
      VertexSet d = a - b;
      if (!d.empty()) out.insert(d, "F6");
    }
  return out;
}

/// N[p,q] \ (N(D0) u N(s)) over D0 in x and p, q, s outside D0.
inline SetFamily family_mesh_fuzzy_sticking(const Graph& g, const std::vector<VertexSet>& x) {
  SetFamily out;
  for (const auto& d0 : x) {
    VertexSet pool = g.vertices() - d0;
    auto heads = detail::closed_unions(g, pool, 2);
    VertexSet nd0 = g.N(d0);
    SetHash cut_seen;
    std::vector<VertexSet> cuts;
    for (Vertex s : pool) {
      VertexSet c = nd0 | g.adj(s);
      if (cut_seen.insert(c).second) cuts.push_back(c);
    }
    for (const auto& h : heads)
      for (const auto& c : cuts) {
        VertexSet d = h - c;
        if (!d.empty()) out.insert(d, "F5X");
      }
  }
  return out;
}

inline SetFamily family_mesh_fuzzy_sticking(const Graph& g, const SetFamily& x) {
  return family_mesh_fuzzy_sticking(g, x.members());
}

// ---------------------------------------------------------------------------
// Covering tricky vertices

struct TrickyCover {
  Vertex w = -1;
  VertexSet d_prime;
};

/// A vertex w of d and another component d' of G - omega with j inside
/// N(w) u N(d'), chosen by bi-ranking over module and component profiles.
inline TrickyCover cover_tricky_select(const Graph& g, const VertexSet& indep, const VertexSet& omega,
                                       const VertexSet& d, Vertex p, Vertex q, const VertexSet& j) {
  check(pmc_check(g, omega), ErrorKind::Precondition, "omega is not a PMC");
  check(!omega.intersects(indep), ErrorKind::Precondition, "omega meets the independent set");
  auto comps = components(g, omega);
  check(std::find(comps.begin(), comps.end(), d) != comps.end(), ErrorKind::Precondition,
        "d is not a component of g - omega");
  check(is_mesh(g, d), ErrorKind::Precondition, "d is not a mesh");
  auto mp = modular_partition(g, d);
  auto imod = unique_I_module(g, d, indep);
  check(imod && imod->contains(p), ErrorKind::Precondition, "p is not in the module meeting the independent set");
  check(!j.empty() && g.is_independent(j), ErrorKind::Precondition, "j must be a nonempty independent set");
  auto cls = neighborhood_decomposition(g, d, p, q);
  check(j.subset_of(cls.tricky), ErrorKind::Precondition, "j must consist of tricky vertices");

  std::vector<std::vector<bool>> xs, ys;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i] != d) others.push_back(i);
  for (Vertex u : j) {
    std::vector<bool> xu(mp.modules.size()), yu(others.size());
    for (std::size_t m = 0; m < mp.modules.size(); ++m) xu[m] = g.adj(u).intersects(mp.modules[m]);
    for (std::size_t c = 0; c < others.size(); ++c) yu[c] = g.adj(u).intersects(comps[others[c]]);
    xs.push_back(std::move(xu));
    ys.push_back(std::move(yu));
  }
  auto sub = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };
  QuasiOrderPair qp;
  qp.universe = j.to_vector();
  const std::size_t k = qp.universe.size();
  qp.leq1.assign(k, std::vector<bool>(k));
  qp.leq2.assign(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      qp.leq1[a][b] = sub(xs[a], xs[b]);
      qp.leq2[a][b] = sub(ys[a], ys[b]);
    }
  if (!valid_quasi_order_pair(qp)) fail(ErrorKind::NotP6Free, "witness-not-found: profiles are not bi-comparable");
  Vertex u = biranking_select(qp);
  std::size_t ui = std::find(qp.universe.begin(), qp.universe.end(), u) - qp.universe.begin();
  TrickyCover r;
  VertexSet du = g.adj(u) & d;
  if (du.empty()) fail(ErrorKind::Precondition, "witness-not-found: selected vertex has no neighbor in d");
  r.w = du.front();
  for (std::size_t c = 0; c < others.size(); ++c)
    if (ys[ui][c]) {
      r.d_prime = comps[others[c]];
      break;
    }
  if (r.d_prime.empty()) fail(ErrorKind::Precondition, "witness-not-found: selected vertex sees no other component");
  check(j.subset_of(g.adj(r.w) | g.N(r.d_prime)), ErrorKind::Precondition, "witness-not-found: cover check failed");
  return r;
}

// ---------------------------------------------------------------------------
// Recovering the last component

namespace detail {

/// Recover-from-union candidates in h filtered to PMCs of h.
inline void union_pmcs(const Graph& h, const std::vector<VertexSet>& ys, SetHash& seen, std::vector<VertexSet>& out) {
  for (const auto& y : ys) {
    VertexSet outer;
    for (const auto& c : components(h, y)) outer |= h.N(c);
    for (Vertex s : y) {
      VertexSet om = (h.N_closed(s) & y) | outer;
      if (seen.insert(om).second && pmc_check(h, om)) out.push_back(om);
    }
  }
}

}  // namespace detail

/// x together with six reconstruction families for a single missing component.
/// The construction does not depend on the independent set, so none is taken.
inline SetFamily family_monster(const Graph& g, const std::vector<VertexSet>& x, WorkBudget* budget = nullptr) {
  SetFamily out;
  for (const auto& d : x) out.insert(d, "F7:X");
  for (Vertex u : g.vertices()) detail::add_components(out, g, g.adj(u), "F7:G1");
  {
    auto f3 = family_nonmesh_sticking(g, x);
    for (const auto& d : f3) out.insert(d, "F7:G2");
  }
  std::vector<VertexSet> nx = detail::distinct_neighborhoods(g, x);
  SetHash lifted_seen;
  auto add_lifted = [&](const VertexSet& om, const char* tag) {
    if (lifted_seen.insert(om).second) detail::add_components(out, g, om, tag);
  };

  for (Vertex s : g.vertices()) {
    std::vector<Vertex> ws = g.adj(s).to_vector();
    for (std::size_t k = 0; k < ws.size(); ++k) {
      std::vector<Vertex> prefix(ws.begin(), ws.begin() + k);
      const Vertex v = ws[k];
      PrefixLifter lift(g, prefix);
      const Graph& gk = lift.reduced();
      auto xk = shrink_family(g, x, VertexSet::from(prefix));
      std::vector<VertexSet> nbk;
      nbk.reserve(xk.size());
      for (const auto& d : xk) nbk.push_back(gk.N(d));
      detail::spend(budget, xk.size() + 1);

      // v in Omega: Omega_k = N(D0) + v.
      for (std::size_t i = 0; i < xk.size(); ++i) {
        if (xk[i].contains(v)) continue;
        if (auto o = lift(nbk[i] | VertexSet::single(v))) add_lifted(*o, "F7:G3");
      }
      // v outside Omega: the component holding v covers the lost nonedge.
      social_candidates(gk, xk, v, [&](const VertexSet& om) {
        detail::spend(budget);
        if (auto o = lift(om)) add_lifted(*o, "F7:G4");
      });
      solitary_candidates(gk, xk, v, [&](const VertexSet& om) {
        if (auto o = lift(om)) add_lifted(*o, "F7:G4");
      });

      SetHash ys_seen, om_seen;
      std::vector<VertexSet> ys;
      for (std::size_t i = 0; i < xk.size(); ++i) {
        const VertexSet& d0 = xk[i];
        if (!d0.contains(v)) continue;
        const VertexSet& nd0 = nbk[i];
        for (Vertex t1 : gk.vertices()) detail::add_components(out, gk, gk.adj(t1) | nd0, "F7:G5");

        // Candidates for X = N[p,q,r,t2(,m0)] u N(D0) (u N(D0')).
        const VertexSet closed0 = nd0 | d0;
        const VertexSet pool = gk.vertices() - closed0;
        auto heads3 = detail::closed_unions(gk, pool, 3);
        auto heads4 = detail::closed_unions(gk, pool, 4);
        SetHash side_seen;
        std::vector<VertexSet> sides;
        for (std::size_t j = 0; j < xk.size(); ++j)
          if (!xk[j].intersects(closed0) && side_seen.insert(nbk[j]).second) sides.push_back(nbk[j]);
        SetHash xs_seen;
        std::vector<VertexSet> xcands;
        auto push_x = [&](const VertexSet& xx) {
          if (xs_seen.insert(xx).second) xcands.push_back(xx);
        };
        for (Vertex t2 : nd0) {
          const VertexSet base = gk.N_closed(t2) | nd0;
          for (const auto& h : heads3) push_x(base | h);
          for (const auto& h : heads4)
            for (const auto& sd : sides) push_x(base | h | sd);
          detail::spend(budget, heads3.size() + heads4.size() * sides.size());
        }
        auto push_y = [&](const VertexSet& yy) {
          if (ys_seen.insert(yy).second) ys.push_back(yy);
        };
        for (const auto& xx : xcands) {
          push_y(xx - d0);
          auto comps = components(gk, xx);
          if (comps.empty()) continue;
          check(comps.size() <= 64, ErrorKind::Guard, "too many components for the component mask");
          // Components of G_k - X meeting N(w) u N(D'): combine per-w and per-D' masks.
          auto mask_of = [&](const VertexSet& t) {
            std::uint64_t m = 0;
            for (std::size_t c = 0; c < comps.size(); ++c)
              if (comps[c].intersects(t)) m |= 1ULL << c;
            return m;
          };
          std::vector<std::uint64_t> mw, md;
          for (Vertex w : g.vertices()) mw.push_back(mask_of(g.adj(w)));
          for (const auto& nd : nx) md.push_back(mask_of(nd));
          std::sort(mw.begin(), mw.end());
          mw.erase(std::unique(mw.begin(), mw.end()), mw.end());
          std::sort(md.begin(), md.end());
          md.erase(std::unique(md.begin(), md.end()), md.end());
          std::vector<std::uint64_t> combos;
          for (auto a : mw)
            for (auto b : md) combos.push_back(a | b);
          std::sort(combos.begin(), combos.end());
          combos.erase(std::unique(combos.begin(), combos.end()), combos.end());
          detail::spend(budget, comps.size() * (g.order() + nx.size()) + combos.size());
          for (auto m : combos) {
            VertexSet w = xx;
            for (std::size_t c = 0; c < comps.size(); ++c)
              if (m >> c & 1) w |= comps[c];
            push_y(w - d0);
          }
        }
      }
      std::vector<VertexSet> oms;
      detail::union_pmcs(gk, ys, om_seen, oms);
      detail::spend(budget, ys.size());
      for (const auto& om : oms) detail::add_components(out, gk, om, "F7:G6");
    }
  }
  return out;
}

inline SetFamily family_monster(const Graph& g, const SetFamily& x, WorkBudget* budget = nullptr) {
  return family_monster(g, x.members(), budget);
}

// ---------------------------------------------------------------------------
// Two mesh components

/// F1 plus closed neighborhoods of up to seven vertices and the W and W'
/// component families.
inline SetFamily family_omplus(const Graph& g) {
  SetFamily out = family_two_not_whole(g);
  for (const auto& x : detail::closed_unions(g, g.vertices(), 6)) out.insert(x, "F8:G1");
  for (const auto& x : detail::closed_unions(g, g.vertices(), 7)) out.insert(x, "F8:G3");
  auto heads = detail::closed_unions(g, g.vertices(), 3);
  auto pairs = detail::closed_unions(g, g.vertices(), 2);
  SetHash w_seen, w2_seen;
  std::vector<VertexSet> ws;
  for (const auto& a : heads)
    for (const auto& b : heads) {
      VertexSet x = a | b;
      VertexSet w = g.N(g.vertices() - x) | b;
      if (w_seen.insert(w).second) ws.push_back(w);
    }
  for (const auto& w : ws) {
    detail::add_components(out, g, w, "F8:G2");
    for (const auto& st : pairs) {
      VertexSet w2 = w | st;
      if (w2_seen.insert(w2).second) detail::add_components(out, g, w2, "F8:G4");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summary

/// The summary families. The triple family G x F5(G) x F5(G) is kept in
/// factored form and queried with `has_triple`.
struct SummaryFamilies {
  SetFamily base;      // F2 u F3(F2) u F8
  SetFamily monster;   // F7(base)
  SetFamily fuzzy;     // F5(base)
  SetFamily f9_1;      // F_rec,1(base) u F_rec,1(F7(base))

  bool has_triple(const VertexSet& whole, const VertexSet& d1p, const VertexSet& d2p) const {
    return base.contains(whole) && fuzzy.contains(d1p) && fuzzy.contains(d2p);
  }
  long double f9_2_size() const {
    return static_cast<long double>(base.size()) * fuzzy.size() * fuzzy.size();
  }
};

inline SummaryFamilies family_summary(const Graph& g, WorkBudget* budget = nullptr) {
  SummaryFamilies r;
  SetFamily f2 = family_one_in_three(g);
  r.base.insert_all(f2);
  r.base.insert_all(family_nonmesh_sticking(g, f2));
  r.base.insert_all(family_omplus(g));
  r.monster = family_monster(g, r.base, budget);
  r.fuzzy = family_mesh_fuzzy_sticking(g, r.base);
  r.f9_1 = recover_from_components(g, r.base);
  r.f9_1.insert_all(recover_from_components(g, r.monster));
  return r;
}

}  // namespace p6mwis
