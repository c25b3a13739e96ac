#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"
#include "induced_path.hpp"

namespace p6mwis {

using Rng = std::mt19937_64;

/// Uniform weights in [1, max_weight]; unit weights when max_weight <= 1.
inline std::vector<Weight> random_weights(Rng& rng, int n, Weight max_weight) {
  std::vector<Weight> w(n, 1);
  if (max_weight <= 1) return w;
  std::uniform_int_distribution<Weight> pick(1, max_weight);
  for (auto& x : w) x = pick(rng);
  return w;
}

/// Random cograph: vertices are split recursively and each split is a
/// disjoint union or a join, with the join taken with probability p.
inline Graph gen_cograph(std::uint64_t seed, int n, double p = 0.5, Weight max_weight = 1) {
  check(n >= 0 && n <= kMaxVertices, ErrorKind::Precondition, "vertex count out of range");
  Rng rng(seed);
  Graph g(n, random_weights(rng, n, max_weight));
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution join(p);
  std::function<void(int, int)> build = [&](int lo, int hi) {
    if (hi - lo <= 1) return;
    int mid = std::uniform_int_distribution<int>(lo + 1, hi - 1)(rng);
    build(lo, mid);
    build(mid, hi);
    if (join(rng))
      for (int i = lo; i < mid; ++i)
        for (int j = mid; j < hi; ++j) g.add_edge(perm[i], perm[j]);
  };
  build(0, n);
  return g;
}

/// Random split graph: a clique, an independent set, and edges between
/// them with probability p.
inline Graph gen_split(std::uint64_t seed, int n, double p = 0.5, Weight max_weight = 1) {
  check(n >= 0 && n <= kMaxVertices, ErrorKind::Precondition, "vertex count out of range");
  Rng rng(seed);
  Graph g(n, random_weights(rng, n, max_weight));
  int k = n == 0 ? 0 : std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(p);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(perm[i], perm[j]);
  for (int i = 0; i < k; ++i)
    for (int j = k; j < n; ++j)
      if (edge(rng)) g.add_edge(perm[i], perm[j]);
  return g;
}

/// G(n, p) with independent edges.
inline Graph gen_gnp(std::uint64_t seed, int n, double p, Weight max_weight = 1) {
  check(n >= 0 && n <= kMaxVertices, ErrorKind::Precondition, "vertex count out of range");
  Rng rng(seed);
  Graph g(n, random_weights(rng, n, max_weight));
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

inline constexpr int kRejectionTries = 100000;

/// G(n, p) resampled until it has no induced P6.
inline Graph gen_rejection_p6free(std::uint64_t seed, int n, double p, Weight max_weight = 1,
                                  int max_tries = kRejectionTries) {
  Rng rng(seed);
  for (int t = 0; t < max_tries; ++t) {
    Graph g = gen_gnp(rng(), n, p, max_weight);
    if (is_p6_free(g)) return g;
  }
  fail(ErrorKind::Guard, "no P6-free sample within " + std::to_string(max_tries) + " tries");
}

/// Calls make(seed') with derived seeds until the result is connected.
template <class Make>
Graph connected_sample(std::uint64_t seed, Make&& make, int max_tries = kRejectionTries) {
  Rng rng(seed);
  for (int t = 0; t < max_tries; ++t) {
    Graph g = make(rng());
    if (is_connected(g, g.vertices())) return g;
  }
  fail(ErrorKind::Guard, "no connected sample within " + std::to_string(max_tries) + " tries");
}

}  // namespace p6mwis
