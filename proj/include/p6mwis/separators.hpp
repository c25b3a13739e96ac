#pragma once

#include <optional>
#include <vector>

#include "connectivity.hpp"
#include "set_family.hpp"

namespace p6mwis {

struct SeparatorWitness {
  VertexSet separator;
  std::vector<VertexSet> full_components;
};

/// Components of g - s whose neighborhood is all of s.
inline std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (const auto& c : components(g, s))
    if (g.N(c) == s) out.push_back(c);
  return out;
}

/// A witness if s is a minimal separator of g (at least two full components).
inline std::optional<SeparatorWitness> is_minimal_separator(const Graph& g, const VertexSet& s) {
  if (!s.subset_of(g.vertices())) return std::nullopt;
  auto full = full_components(g, s);
  if (full.size() < 2) return std::nullopt;
  return SeparatorWitness{s, std::move(full)};
}

/// All minimal separators by testing every subset. Guarded by max_n.
inline std::vector<VertexSet> enumerate_minimal_separators_exhaustive(const Graph& g, int max_n = 18) {
  check(g.order() <= max_n, ErrorKind::Guard,
        "exhaustive separator enumeration limited to " + std::to_string(max_n) + " vertices");
  std::vector<Vertex> vs = g.vertices().to_vector();
  std::vector<VertexSet> out;
  const std::uint64_t total = 1ULL << vs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1) s.insert(vs[i]);
    if (is_minimal_separator(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Minimal separators via the close-neighborhood closure: every minimal
/// separator arises as N(C) for a component C of g - N[v], and the family is
/// closed under S -> N(C) for C in cc(g - (S u N(x))), x in S.
inline std::vector<VertexSet> minimal_separators(const Graph& g) {
  SetHash seen;
  std::vector<VertexSet> queue;
  auto push = [&](const VertexSet& s) {
    if (!is_minimal_separator(g, s)) return;
    if (seen.insert(s).second) queue.push_back(s);
  };
  push(VertexSet());
  for (Vertex v : g.vertices())
    for (const auto& c : components(g, g.N_closed(v))) push(g.N(c));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexSet s = queue[i];
    for (Vertex x : s)
      for (const auto& c : components(g, s | g.adj(x))) push(g.N(c));
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace p6mwis
