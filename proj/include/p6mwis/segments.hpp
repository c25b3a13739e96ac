#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "capture.hpp"
#include "chordal.hpp"
#include "modular.hpp"
#include "pmc.hpp"

namespace p6mwis {

// ---------------------------------------------------------------------------
// Potential segments

struct Segment {
  VertexSet gamma;
  VertexSet interior;
  Graph torso;                      // g[gamma] with every N(D) saturated
  std::vector<Edge> closure_edges;  // torso edges absent from g[gamma]
};

/// N(V - N[A]).
inline VertexSet boundary(const Graph& g, const VertexSet& a) {
  return g.N(g.vertices() - g.N_closed(a));
}

/// The segment on gamma, or nothing if some component of g - gamma has a
/// neighborhood that is not a minimal separator.
inline std::optional<Segment> segment(const Graph& g, const VertexSet& gamma) {
  if (!gamma.subset_of(g.vertices()) || gamma.empty()) return std::nullopt;
  Segment seg;
  seg.gamma = gamma;
  seg.interior = g.vertices() - g.N_closed(g.vertices() - gamma);
  seg.torso = g.induced(gamma);
  for (const auto& d : components(g, gamma)) {
    VertexSet nd = g.N(d);
    if (!is_minimal_separator(g, nd)) return std::nullopt;
    seg.torso.saturate(nd);
  }
  seg.closure_edges = fill_between(g.induced(gamma), seg.torso);
  return seg;
}

/// Every fill edge with an endpoint in a component D of g - gamma has its
/// other endpoint in N[D].
inline bool respects(const Graph& g, const std::vector<Edge>& fill, const VertexSet& gamma) {
  for (const auto& d : components(g, gamma)) {
    VertexSet nd = g.N_closed(d);
    for (auto [a, b] : fill) {
      if (d.contains(a) && !nd.contains(b)) return false;
      if (d.contains(b) && !nd.contains(a)) return false;
    }
  }
  return true;
}

/// F[gamma -> f_gamma]: drops the fill inside gamma that is not a closure
/// edge and adds the fill of the torso completion.
inline Completion substitute(const Graph& g, const Completion& f, const Segment& seg, const Completion& f_gamma) {
  check(respects(g, f.fill, seg.gamma), ErrorKind::Precondition, "completion does not respect the segment");
  std::set<Edge> closure(seg.closure_edges.begin(), seg.closure_edges.end());
  std::vector<Edge> out;
  for (auto e : normalized(f.fill)) {
    bool inside = seg.gamma.contains(e.first) && seg.gamma.contains(e.second);
    if (!inside || closure.count(e)) out.push_back(e);
  }
  for (auto e : f_gamma.fill) out.push_back(e);
  Completion r;
  r.fill = normalized(out);
  check(chordal(r.apply(g)), ErrorKind::Invariant, "substitution is not chordal");
  r.minimal = f.minimal && f_gamma.minimal;
  r.fallback = f.fallback || f_gamma.fallback;
  return r;
}

namespace detail {

inline void add_completed_cliques(SetFamily& out, const Graph& torso, const Completion& c, const std::string& tag) {
  for (const auto& k : maximal_cliques_chordal(c.apply(torso))) out.insert(k, tag);
}

}  // namespace detail

/// Maximal cliques of torso(N[u]) + F_u for every u, F_u a u-free minimal
/// completion.
inline SetFamily f_I_family(const Graph& g) {
  SetFamily out;
  for (Vertex u : g.vertices()) {
    auto seg = segment(g, g.N_closed(u));
    check(seg.has_value(), ErrorKind::Invariant, "closed neighborhood is not a potential segment");
    detail::add_completed_cliques(out, seg->torso, minimal_completion(seg->torso, u), "F_I");
  }
  return out;
}

/// Maximal cliques of completed torsos of every potential segment in x.
inline SetFamily f_complete(const Graph& g, const std::vector<VertexSet>& x, WorkBudget* budget = nullptr) {
  SetFamily out;
  for (const auto& gamma : x) {
    detail::spend(budget, 1 + gamma.size());
    auto seg = segment(g, gamma);
    if (!seg) continue;
    if (seg->interior.empty()) {
      detail::add_completed_cliques(out, seg->torso, minimal_completion(seg->torso), "complete");
    } else {
      for (Vertex u : seg->interior)
        detail::add_completed_cliques(out, seg->torso, minimal_completion(seg->torso, u), "complete");
    }
  }
  return out;
}

inline SetFamily f_complete(const Graph& g, const SetFamily& x, WorkBudget* budget = nullptr) {
  return f_complete(g, x.members(), budget);
}

// ---------------------------------------------------------------------------
// Footprints of mesh components

struct Footprint {
  VertexSet s_fd;
  VertexSet omega_fd;
  VertexSet m_fd;
  Vertex q_fd = -1;
  VertexSet d_fd;                  // D(s_fd)
  std::vector<VertexSet> chain;    // D(S') over the separators considered, by size
};

/// Footprint of the mesh component d of g - s inside the chordal supergraph h.
inline Footprint mesh_footprint(const Graph& g, const Graph& h, const VertexSet& s, const VertexSet& d) {
  check(chordal(h), ErrorKind::Precondition, "h is not chordal");
  check(is_minimal_separator(h, s).has_value(), ErrorKind::Precondition, "s is not a minimal separator of h");
  check(g.N(d) == s && is_connected(g, d), ErrorKind::Precondition, "d is not a full component of g - s");
  check(is_mesh(g, d), ErrorKind::Precondition, "d is not a mesh");
  ModularPartition mp = modular_partition(g, d);
  auto in_one_module = [&](const VertexSet& a) {
    for (const auto& m : mp.modules)
      if (a.subset_of(m)) return true;
    return false;
  };

  CliqueTree tree = clique_tree(h);
  SetHash seen;
  std::vector<std::pair<VertexSet, VertexSet>> mesh_seps;  // (S', D(S'))
  VertexSet nd = g.N_closed(d);
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    VertexSet sp = tree.adhesion(e);
    if (!seen.insert(sp).second) continue;
    if (!sp.subset_of(nd)) continue;
    if (sp != s && sp.subset_of(s)) continue;
    VertexSet rest = d - sp;
    if (rest.empty() || in_one_module(rest)) continue;
    mesh_seps.emplace_back(sp, rest);
  }
  if (!seen.count(s)) mesh_seps.emplace_back(s, d);
  std::sort(mesh_seps.begin(), mesh_seps.end(),
            [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });

  Footprint fp;
  for (std::size_t i = 0; i < mesh_seps.size(); ++i) {
    fp.chain.push_back(mesh_seps[i].second);
    if (i > 0)
      check(mesh_seps[i - 1].second.subset_of(mesh_seps[i].second), ErrorKind::Invariant,
            "mesh separators are not nested");
  }
  fp.s_fd = mesh_seps.front().first;
  fp.d_fd = mesh_seps.front().second;
  {
    auto cs = components(g, fp.s_fd);
    check(std::find(cs.begin(), cs.end(), fp.d_fd) != cs.end(), ErrorKind::Invariant, "D(S) is not a component");
  }

  fp.omega_fd = chordal_minsep_tools(h, fp.s_fd, fp.d_fd).omega;

  std::optional<int> mod;
  for (const auto& dp : components(g, fp.omega_fd)) {
    if (g.N(dp).subset_of(fp.s_fd)) continue;
    int k = mp.module_of(dp.front());
    check(k >= 0 && dp.subset_of(mp.modules[k]), ErrorKind::Invariant, "component outside one module");
    check(!mod || *mod == k, ErrorKind::Invariant, "components in two modules");
    mod = k;
  }
  if (!mod) {
    for (std::size_t k = 0; k < mp.modules.size(); ++k)
      if (mp.modules[k].intersects(fp.d_fd)) {
        mod = static_cast<int>(k);
        break;
      }
  }
  check(mod.has_value(), ErrorKind::Invariant, "no module meets D(S)");
  fp.m_fd = mp.modules[*mod];
  VertexSet qs = fp.d_fd - fp.m_fd;
  check(!qs.empty(), ErrorKind::Invariant, "D(S) inside one module");
  fp.q_fd = qs.front();
  check(fp.omega_fd.contains(fp.q_fd) && !fp.s_fd.contains(fp.q_fd), ErrorKind::Invariant, "q outside omega - S");
  VertexSet a = (fp.m_fd & fp.d_fd);
  a.insert(fp.q_fd);
  check(boundary(g, a) == fp.s_fd, ErrorKind::Invariant, "footprint separator is not the boundary");
  return fp;
}

/// F with the segment S u S_FD refilled so that boundary(M u {q}) stays a
/// minimal separator.
inline Completion footprint_replacement(const Graph& g, const Completion& f, const VertexSet& s, const Footprint& fp) {
  auto seg = segment(g, s | fp.s_fd);
  check(seg.has_value(), ErrorKind::Invariant, "S u S_FD is not a potential segment");
  VertexSet a = fp.m_fd;
  a.insert(fp.q_fd);
  VertexSet sp = boundary(g, a);
  check(sp.subset_of(seg->gamma), ErrorKind::Invariant, "replacement separator leaves the segment");
  if (is_minimal_separator(f.apply(g), sp)) return f;
  Completion inner = force_separators_completion(seg->torso, {sp});
  Completion r = substitute(g, f, *seg, inner);
  check(is_minimal_separator(r.apply(g), sp).has_value(), ErrorKind::Invariant, "replacement separator lost");
  return r;
}

// ---------------------------------------------------------------------------
// Splitting between two mesh components

struct ZPair {
  VertexSet z1, z2;
  std::array<Vertex, 6> tuple{};
};

namespace detail {

/// The module of the mesh quotient holding p, or the whole set otherwise.
inline VertexSet splitting_side(const Graph& g, const VertexSet& scope, Vertex p) {
  if (!is_mesh(g, scope)) return scope;
  ModularPartition mp = modular_partition(g, scope);
  int k = mp.module_of(p);
  check(k >= 0, ErrorKind::Invariant, "vertex outside its partition");
  return mp.modules[k];
}

}  // namespace detail

/// One pair (Z1, Z2) per tuple (p1, q1, r1, p2, q2, r2) of distinct vertices,
/// dropped when the sets are not connected, touch, or leave their side.
inline std::vector<ZPair> rozrywanie_pairs(const Graph& g, WorkBudget* budget = nullptr) {
  std::vector<ZPair> out;
  std::vector<Vertex> vs = g.vertices().to_vector();
  const int n = static_cast<int>(vs.size());
  if (n < 6) return out;
  std::map<std::pair<VertexSet, Vertex>, VertexSet> side_memo;
  auto side = [&](const VertexSet& scope, Vertex p) -> const VertexSet& {
    auto key = std::make_pair(scope, p);
    auto it = side_memo.find(key);
    if (it == side_memo.end()) it = side_memo.emplace(key, detail::splitting_side(g, scope, p)).first;
    return it->second;
  };
  std::set<std::pair<VertexSet, VertexSet>> emitted;
  for (Vertex p1 : vs)
    for (Vertex q1 : vs)
      for (Vertex r1 : vs) {
        if (q1 == p1 || r1 == p1 || r1 == q1) continue;
        VertexSet t1 = VertexSet::from({p1, q1, r1});
        VertexSet n1 = g.N_closed(t1);
        for (Vertex p2 : vs)
          for (Vertex q2 : vs)
            for (Vertex r2 : vs) {
              VertexSet t2 = VertexSet::from({p2, q2, r2});
              if (t2.size() != 3 || t1.intersects(t2)) continue;
              detail::spend(budget);
              VertexSet n2 = g.N_closed(t2);
              VertexSet rest = g.vertices() - (n1 | n2);
              VertexSet nr = g.N(rest);
              VertexSet o_s = (n1 & n2) | nr;
              if (o_s.contains(p1) || o_s.contains(p2)) continue;
              VertexSet side1 = side(n1 - o_s, p1);
              VertexSet side2 = side(n2 - o_s, p2);
              VertexSet w1 = side1;
              w1.insert(q1);
              VertexSet w2 = side2;
              w2.insert(q2);
              w1 -= g.N_closed(side2);
              w2 -= g.N_closed(side1);
              if (!w1.contains(p1) || !w1.contains(q1) || !w2.contains(p2) || !w2.contains(q2)) continue;
              VertexSet z1 = component_of(g, p1, w1);
              VertexSet z2 = component_of(g, p2, w2);
              if (!z1.contains(q1) || !z2.contains(q2)) continue;
              if (z1.intersects(g.N_closed(z2))) continue;
              if (!z1.subset_of(n1 - nr) || !z2.subset_of(n2 - nr)) continue;
              if (!emitted.emplace(z1, z2).second) continue;
              out.push_back({z1, z2, {p1, q1, r1, p2, q2, r2}});
            }
      }
  return out;
}

// ---------------------------------------------------------------------------
// Separator family and candidate segments

/// Minimal separators recognized by the capturing families, with tags.
inline SetFamily separator_family_S(const Graph& g, WorkBudget* budget = nullptr) {
  SetFamily out;
  auto add = [&](const VertexSet& s, const std::string& tag) {
    if (out.contains(s)) return;
    if (is_minimal_separator(g, s)) out.insert(s, tag);
  };
  auto add_nbhds = [&](const SetFamily& fam, const std::string& tag) {
    for (const auto& d : fam.members()) add(g.N(d), tag);
  };
  auto add_cut = [&](const VertexSet& gamma, const std::string& tag) {
    for (const auto& d : components(g, gamma)) add(g.N(d), tag);
  };
  SetFamily f2 = family_one_in_three(g);  // contains F1
  SetFamily f8 = family_omplus(g);
  add_nbhds(f2, "S:F2");
  add_nbhds(family_nonmesh_pair(g), "S:F5");
  add_nbhds(f8, "S:F8");
  for (const auto& gamma : f8.members()) add_cut(gamma, "S:cut-F8");
  SetFamily f_i = f_I_family(g);
  SetFamily f6 = family_mesh_fuzzy_nonmesh(g);
  for (const auto& gamma : f_i.members()) add_cut(gamma, "S:cut-FI");
  for (const auto& dplus : f6.members()) {
    if (!is_mesh(g, dplus)) continue;
    for (const auto& m : modular_partition(g, dplus).modules)
      for (Vertex q : dplus - m) {
        VertexSet a = m;
        a.insert(q);
        add_cut(g.N_closed(a), "S:mesh-module");
      }
  }
  for (const auto& zp : rozrywanie_pairs(g, budget)) {
    add_cut(g.N_closed(zp.z1), "S:Z");
    add_cut(g.N_closed(zp.z2), "S:Z");
  }
  return out;
}

/// Components of g - S over the separator family.
inline SetFamily components_of_separators(const Graph& g, const SetFamily& seps) {
  SetFamily out;
  for (const auto& s : seps.members()) detail::add_components(out, g, s, "F");
  return out;
}

/// Candidate segments assembled from the separator family's components.
inline SetFamily family_FX(const Graph& g, const SetFamily& f_family, WorkBudget* budget = nullptr) {
  SetFamily out;
  const std::vector<VertexSet>& fs = f_family.members();
  std::vector<VertexSet> fs0 = fs;
  fs0.insert(fs0.begin(), VertexSet());

  // Isolated nodes.
  out.insert_all(recover_from_components(g, fs));

  // One endpoint of a path.
  SetFamily f7 = family_monster(g, fs, budget);
  for (const auto& d1 : f7.members()) {
    VertexSet nd1 = g.N_closed(d1);
    for (const auto& dg : fs0) {
      if (!dg.subset_of(d1)) continue;
      detail::spend(budget);
      out.insert(nd1 - dg, "FX:end");
    }
  }
  out.insert_all(recover_from_components(g, f7));

  // Unordered pairs of disjoint, nonadjacent members (or empty), by union.
  struct PairKey {
    VertexSet inner, closed;
  };
  std::vector<PairKey> pairs;
  {
    std::set<std::pair<VertexSet, VertexSet>> seen;
    for (std::size_t i = 0; i < fs0.size(); ++i)
      for (std::size_t j = i; j < fs0.size(); ++j) {
        if (i == j && i != 0) continue;
        const VertexSet& a = fs0[i];
        const VertexSet& b = fs0[j];
        if (a.intersects(g.N_closed(b))) continue;
        detail::spend(budget);
        VertexSet inner = a | b;
        VertexSet closed = g.N_closed(a) | g.N_closed(b);
        if (seen.emplace(inner, closed).second) pairs.push_back({inner, closed});
      }
  }

  // Two mesh sides.
  {
    SetHash inners;
    std::vector<VertexSet> cut;
    for (const auto& p : pairs)
      if (inners.insert(p.inner).second) cut.push_back(p.inner);
    SetFamily f8 = family_omplus(g);
    for (const auto& a : f8.members())
      for (const auto& u : cut) {
        if (!u.subset_of(a)) continue;
        detail::spend(budget);
        out.insert(a - u, "FX:two-mesh");
      }
  }

  // A non-mesh side.
  for (const auto& q : detail::closed_unions(g, g.vertices(), 4))
    for (const auto& p : pairs) {
      detail::spend(budget);
      out.insert((q | p.closed) - p.inner, "FX:non-mesh");
    }

  for (Vertex u : g.vertices()) out.insert(g.N_closed(u), "FX:closed");
  return out;
}

}  // namespace p6mwis
