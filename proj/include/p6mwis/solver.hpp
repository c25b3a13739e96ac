#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "capture.hpp"
#include "induced_path.hpp"
#include "pmc.hpp"
#include "segments.hpp"

namespace p6mwis {

// ---------------------------------------------------------------------------
// Candidate family and blocks

struct Block {
  VertexSet s;  // N(c)
  VertexSet c;
  std::vector<int> omegas;  // indices into the family with s <= omega <= s u c, omega meeting c
};

struct CandidateFamily {
  SetFamily pmcs;
  std::vector<Block> blocks;  // increasing |c|; the last one is the root (empty s, c = V)
  std::vector<std::vector<int>> sub_blocks;  // per omega: blocks of the components of g - omega
  std::map<std::string, std::size_t> family_sizes;
};

/// Keeps the PMCs of `raw` and indexes the blocks they induce. g must be connected.
inline CandidateFamily index_family(const Graph& g, const SetFamily& raw, bool filter = true) {
  CandidateFamily fam;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!filter || pmc_check(g, raw[i])) fam.pmcs.insert(raw[i], raw.tag(i));

  std::unordered_map<VertexSet, int> block_id;
  std::vector<VertexSet> cs;
  auto block_of = [&](const VertexSet& c) {
    auto [it, fresh] = block_id.emplace(c, static_cast<int>(cs.size()));
    if (fresh) cs.push_back(c);
    return it->second;
  };
  std::vector<std::vector<VertexSet>> comps(fam.pmcs.size());
  for (std::size_t i = 0; i < fam.pmcs.size(); ++i) {
    comps[i] = components(g, fam.pmcs[i]);
    for (const auto& c : comps[i]) block_of(c);
  }
  block_of(g.vertices());

  std::vector<int> order(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (cs[a].size() != cs[b].size()) return cs[a].size() < cs[b].size();
    return cs[a] < cs[b];
  });
  std::vector<int> rank(cs.size());
  fam.blocks.resize(cs.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = static_cast<int>(r);
    fam.blocks[r].c = cs[order[r]];
    fam.blocks[r].s = g.N(cs[order[r]]);
  }
  fam.sub_blocks.resize(fam.pmcs.size());
  for (std::size_t i = 0; i < fam.pmcs.size(); ++i)
    for (const auto& c : comps[i]) fam.sub_blocks[i].push_back(rank[block_id.at(c)]);

  for (auto& b : fam.blocks) {
    VertexSet sc = b.s | b.c;
    for (std::size_t i = 0; i < fam.pmcs.size(); ++i) {
      const VertexSet& om = fam.pmcs[i];
      if (b.s.subset_of(om) && om.subset_of(sc) && om.intersects(b.c)) b.omegas.push_back(static_cast<int>(i));
    }
  }
  fam.family_sizes = {{"pmcs", fam.pmcs.size()}, {"blocks", fam.blocks.size()}};
  return fam;
}

// ---------------------------------------------------------------------------
// Solutions

struct Solution {
  Weight weight = 0;
  VertexSet vertices;
  std::string mode;
  bool realized = true;
  std::map<std::string, std::size_t> family_sizes;
  std::size_t pmc_count = 0;
  double elapsed_ms = 0;
  std::vector<std::string> warnings;
};

inline void verify_solution(const Graph& g, const Solution& s) {
  check(g.is_independent(s.vertices), ErrorKind::Invariant, "solution is not independent");
  check(s.vertices.subset_of(g.vertices()), ErrorKind::Invariant, "solution leaves the graph");
  check(g.weight(s.vertices) == s.weight, ErrorKind::Invariant, "solution weight mismatch");
}

// ---------------------------------------------------------------------------
// Dynamic program over blocks

/// Best independent set realizable with at most one chosen vertex per bag,
/// over bags from the family. g must be connected.
inline Solution dp_mwis(const Graph& g, const CandidateFamily& fam) {
  constexpr Weight kNone = std::numeric_limits<Weight>::min();
  struct Cell {
    Weight value = kNone;
    int omega = -1;
    Vertex pick = -1;
  };
  const std::size_t nb = fam.blocks.size();
  // memo[b][0] is the state with no chosen vertex in S; memo[b][k+1] for the k-th vertex of S.
  std::vector<std::vector<Cell>> memo(nb);
  std::vector<std::vector<Vertex>> s_list(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    s_list[b] = fam.blocks[b].s.to_vector();
    memo[b].resize(s_list[b].size() + 1);
  }
  auto slot = [&](int b, Vertex u) -> int {
    if (u < 0) return 0;
    const auto& sl = s_list[b];
    auto it = std::lower_bound(sl.begin(), sl.end(), u);
    return it != sl.end() && *it == u ? static_cast<int>(it - sl.begin()) + 1 : 0;
  };
  // Sum over the sub-blocks inside c of omega with `x` chosen (or none).
  auto children = [&](const Block& blk, int om, Vertex x) -> Weight {
    Weight total = 0;
    for (int sb : fam.sub_blocks[om]) {
      if (!fam.blocks[sb].c.subset_of(blk.c)) continue;
      const Cell& cell = memo[sb][slot(sb, x)];
      if (cell.value == kNone) return kNone;
      total += cell.value;
    }
    return total;
  };

  for (std::size_t b = 0; b < nb; ++b) {
    const Block& blk = fam.blocks[b];
    for (std::size_t k = 0; k <= s_list[b].size(); ++k) {
      Vertex u = k == 0 ? -1 : s_list[b][k - 1];
      Cell best;
      for (int om : blk.omegas) {
        if (u >= 0) {
          Weight v = children(blk, om, u);
          if (v != kNone && v > best.value) best = {v, om, -1};
          continue;
        }
        Weight v = children(blk, om, -1);
        if (v != kNone && v > best.value) best = {v, om, -1};
        for (Vertex x : fam.pmcs[om] - blk.s) {
          Weight c = children(blk, om, x);
          if (c == kNone) continue;
          c += g.weight(x);
          if (c > best.value) best = {c, om, x};
        }
      }
      memo[b][k] = best;
    }
  }

  Solution sol;
  sol.mode = "dp";
  sol.pmc_count = fam.pmcs.size();
  sol.family_sizes = fam.family_sizes;
  const int root = static_cast<int>(nb) - 1;
  if (nb == 0 || memo[root][0].value == kNone) {
    sol.realized = false;
    return sol;
  }
  // Reconstruction.
  std::vector<std::pair<int, Vertex>> stack{{root, -1}};
  while (!stack.empty()) {
    auto [b, u] = stack.back();
    stack.pop_back();
    const Cell& cell = memo[b][slot(b, u)];
    Vertex x = u >= 0 ? u : cell.pick;
    if (u < 0 && x >= 0) sol.vertices.insert(x);
    for (int sb : fam.sub_blocks[cell.omega]) {
      if (!fam.blocks[sb].c.subset_of(fam.blocks[b].c)) continue;
      stack.emplace_back(sb, x >= 0 && fam.blocks[sb].s.contains(x) ? x : -1);
    }
  }
  sol.weight = g.weight(sol.vertices);
  check(sol.weight == memo[root][0].value, ErrorKind::Invariant, "reconstruction weight differs from the table");
  verify_solution(g, sol);
  return sol;
}

// ---------------------------------------------------------------------------
// Oracles

inline constexpr int kBruteForceGuard = 24;
inline constexpr int kMaximalIndependentGuard = 40;

/// Exact maximum-weight independent set by branch and bound.
inline Solution brute_force_mwis(const Graph& g, int max_n = kBruteForceGuard) {
  check(g.order() <= max_n, ErrorKind::Guard, "brute force limited to " + std::to_string(max_n) + " vertices");
  Weight best = -1;
  VertexSet best_set;
  VertexSet cur;
  std::function<void(const VertexSet&, Weight)> rec = [&](const VertexSet& p, Weight acc) {
    if (acc + g.weight(p) <= best) return;
    if (p.empty()) {
      best = acc;
      best_set = cur;
      return;
    }
    Vertex v = p.front();
    for (Vertex u : p)
      if ((g.adj(u) & p).size() > (g.adj(v) & p).size()) v = u;
    if ((g.adj(v) & p).empty()) {
      cur.insert(v);
      rec(p - VertexSet::single(v), acc + g.weight(v));
      cur.erase(v);
      return;
    }
    cur.insert(v);
    rec(p - g.N_closed(v), acc + g.weight(v));
    cur.erase(v);
    rec(p - VertexSet::single(v), acc);
  };
  rec(g.vertices(), 0);
  Solution sol;
  sol.mode = "brute";
  sol.weight = best;
  sol.vertices = best_set;
  verify_solution(g, sol);
  return sol;
}

/// All maximal independent sets, by pivoting enumeration of maximal cliques
/// of the complement.
inline std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g,
                                                                 int max_n = kMaximalIndependentGuard) {
  check(g.order() <= max_n, ErrorKind::Guard,
        "maximal independent set enumeration limited to " + std::to_string(max_n) + " vertices");
  std::vector<VertexSet> out;
  auto non_nb = [&](Vertex v) { return g.vertices() - g.N_closed(v); };
  std::function<void(VertexSet, VertexSet, VertexSet)> rec = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    Vertex pivot = -1;
    int most = -1;
    for (Vertex u : p | x) {
      int c = (p & non_nb(u)).size();
      if (c > most) {
        most = c;
        pivot = u;
      }
    }
    for (Vertex v : p - non_nb(pivot)) {
      VertexSet nv = non_nb(v);
      VertexSet r2 = r;
      r2.insert(v);
      rec(r2, p & nv, x & nv);
      p.erase(v);
      x.insert(v);
    }
  };
  rec(VertexSet(), g.vertices(), VertexSet());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Assembly

/// Candidate family for a connected graph: completed candidate segments,
/// F_I, the summary PMCs and every PMC met along the way.
inline CandidateFamily assemble_family(const Graph& g, WorkBudget* budget = nullptr) {
  SummaryFamilies summary = family_summary(g, budget);
  SetFamily seps = separator_family_S(g, budget);
  SetFamily comps = components_of_separators(g, seps);
  SetFamily fx = family_FX(g, comps, budget);
  SetFamily completed = f_complete(g, fx, budget);
  SetFamily f_i = f_I_family(g);

  SetFamily raw;
  raw.insert_all(completed);
  raw.insert_all(f_i);
  raw.insert_all(summary.f9_1);
  for (std::size_t i = 0; i < fx.size(); ++i)
    if (pmc_check(g, fx[i])) raw.insert(fx[i], "spill");
  CandidateFamily fam = index_family(g, raw);
  fam.family_sizes["summary_base"] = summary.base.size();
  fam.family_sizes["summary_monster"] = summary.monster.size();
  fam.family_sizes["summary_rec1"] = summary.f9_1.size();
  fam.family_sizes["separators"] = seps.size();
  fam.family_sizes["separator_components"] = comps.size();
  fam.family_sizes["candidate_segments"] = fx.size();
  fam.family_sizes["completed"] = completed.size();
  fam.family_sizes["f_i"] = f_i.size();
  fam.family_sizes["raw"] = raw.size();
  return fam;
}

enum class SolveMode { Brute, Oracle, Paper };

inline const char* to_string(SolveMode m) {
  switch (m) {
    case SolveMode::Brute: return "brute";
    case SolveMode::Oracle: return "oracle";
    case SolveMode::Paper: return "paper";
  }
  return "?";
}

inline std::optional<SolveMode> parse_mode(const std::string& s) {
  if (s == "brute") return SolveMode::Brute;
  if (s == "oracle" || s == "oracle_allpmc") return SolveMode::Oracle;
  if (s == "paper") return SolveMode::Paper;
  return std::nullopt;
}

struct SolveOptions {
  std::uint64_t budget = WorkBudget::kDefault;
  bool validate_p6 = true;
  int exhaustive_guard = 16;
};

/// Solves each connected component separately and sums.
inline Solution solve(const Graph& g, SolveMode mode, const SolveOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  Solution total;
  total.mode = to_string(mode);
  if (mode == SolveMode::Paper && opt.validate_p6) {
    if (auto p = find_induced_path(g, 6)) {
      std::string w = "input contains an induced P6:";
      for (Vertex v : *p) w += " " + std::to_string(v + 1);
      total.warnings.push_back(w);
    }
  }
  WorkBudget budget;
  budget.limit = opt.budget;
  for (const auto& comp : components(g)) {
    Graph h = g.induced(comp);
    Solution part;
    switch (mode) {
      case SolveMode::Brute:
        part = brute_force_mwis(h);
        break;
      case SolveMode::Oracle: {
        CandidateFamily fam = index_family(h, enumerate_all_pmcs_exhaustive(h, opt.exhaustive_guard), false);
        part = dp_mwis(h, fam);
        break;
      }
      case SolveMode::Paper: {
        CandidateFamily fam = assemble_family(h, &budget);
        part = dp_mwis(h, fam);
        break;
      }
    }
    if (!part.realized) total.realized = false;
    total.weight += part.weight;
    total.vertices |= part.vertices;
    total.pmc_count += part.pmc_count;
    for (const auto& [k, v] : part.family_sizes) total.family_sizes[k] += v;
  }
  if (mode == SolveMode::Paper) total.family_sizes["work_units"] = budget.used;
  verify_solution(g, total);
  total.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace p6mwis
