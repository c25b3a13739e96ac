#include <gtest/gtest.h>

#include "oracles.hpp"
#include "p6mwis/chordal.hpp"
#include "p6mwis/separators.hpp"
#include "shapes.hpp"

using namespace p6mwis;

namespace {

std::vector<Graph> corpus(std::uint64_t seed, int count, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    int n = lo + static_cast<int>(rng() % (hi - lo + 1));
    out.push_back(oracle::connected_gnp(rng(), n, 0.25 + 0.1 * (i % 4)));
  }
  return out;
}

/// Independent minimality audit on the oracle's adjacency matrix.
bool minimal_by_single_removal(const Graph& g, const std::vector<Edge>& fill) {
  oracle::Matrix h(g.with_edges(fill));
  if (!oracle::is_chordal(h)) return false;
  for (auto [u, v] : fill) {
    oracle::Matrix h2 = h;
    h2.a[u][v] = h2.a[v][u] = false;
    if (oracle::is_chordal(h2)) return false;
  }
  return true;
}

}  // namespace

TEST(Chordality, Examples) {
  EXPECT_FALSE(is_chordal(shapes::star(4)).has_value());
  EXPECT_FALSE(is_chordal(shapes::path(5)).has_value());

  auto hole = is_chordal(shapes::cycle(4));
  ASSERT_TRUE(hole.has_value());
  EXPECT_EQ(hole->size(), 4u);

  Graph c5 = shapes::cycle(5);
  c5.add_edge(0, 2);
  auto h2 = is_chordal(c5);
  ASSERT_TRUE(h2.has_value());
  std::vector<Vertex> sorted = *h2;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<Vertex>{0, 2, 3, 4}));
}

TEST(Chordality, AgreesWithOracleAndHolesAreInduced) {
  for (const auto& g : corpus(41, 150, 3, 9)) {
    auto hole = is_chordal(g);
    EXPECT_EQ(!hole.has_value(), oracle::is_chordal(g));
    if (!hole) continue;
    const auto& c = *hole;
    ASSERT_GE(c.size(), 4u);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        bool consecutive = j == i + 1 || (i == 0 && j + 1 == c.size());
        EXPECT_EQ(g.has_edge(c[i], c[j]), consecutive);
      }
  }
}

TEST(CliqueTree, PathHasThreeBags) {
  auto t = clique_tree(shapes::path(4));
  std::vector<VertexSet> bags = t.bags;
  std::sort(bags.begin(), bags.end());
  EXPECT_EQ(bags, (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
  std::vector<VertexSet> adh;
  for (std::size_t e = 0; e < t.edges.size(); ++e) adh.push_back(t.adhesion(e));
  std::sort(adh.begin(), adh.end());
  EXPECT_EQ(adh, (std::vector<VertexSet>{{1}, {2}}));
}

TEST(CliqueTree, CompleteGraphIsOneBag) {
  auto t = clique_tree(shapes::complete(4));
  EXPECT_EQ(t.bags.size(), 1u);
  EXPECT_TRUE(t.edges.empty());
}

TEST(CliqueTree, DiamondAdhesionIsSharedEdge) {
  auto t = clique_tree(shapes::diamond());
  ASSERT_EQ(t.bags.size(), 2u);
  ASSERT_EQ(t.edges.size(), 1u);
  EXPECT_EQ(t.adhesion(0), (VertexSet{1, 2}));
}

TEST(CliqueTree, BagsAreMaximalCliquesWithSubtreeProperty) {
  for (const auto& g : corpus(42, 150, 2, 9)) {
    Graph h = minimal_completion(g).apply(g);
    auto t = clique_tree(h);
    std::vector<VertexSet> bags = t.bags, want;
    std::sort(bags.begin(), bags.end());
    oracle::Matrix m(h);
    for (auto c : oracle::maximal_cliques(m)) want.push_back(m.set_of(c));
    std::sort(want.begin(), want.end());
    EXPECT_EQ(bags, want);
    EXPECT_TRUE(has_subtree_property(t));
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      EXPECT_TRUE(is_minimal_separator(h, t.adhesion(e)).has_value());
      EXPECT_TRUE(is_minimal_separator(g, t.adhesion(e)).has_value());
    }
  }
}

TEST(MinimalCompletion, ChordalInputNeedsNoFill) {
  auto c = minimal_completion(shapes::diamond());
  EXPECT_TRUE(c.fill.empty());
  EXPECT_TRUE(c.minimal);
}

TEST(MinimalCompletion, FourCycleGetsOneChord) {
  auto c = minimal_completion(shapes::cycle(4));
  ASSERT_EQ(c.fill.size(), 1u);
  auto [u, v] = c.fill[0];
  EXPECT_EQ((u + v) % 2, 0);
}

TEST(MinimalCompletion, AvoidingAVertexPicksTheOtherChord) {
  auto c = minimal_completion(shapes::cycle(4), 0);
  ASSERT_EQ(c.fill.size(), 1u);
  EXPECT_EQ(c.fill[0], (Edge{1, 3}));
  EXPECT_EQ(c.avoids, std::optional<Vertex>(0));
}

TEST(MinimalCompletion, FlaggedResultsSurviveSingleEdgeAudit) {
  for (const auto& g : corpus(43, 120, 3, 9)) {
    std::vector<Completion> fs{minimal_completion(g)};
    for (Vertex v : g.vertices()) fs.push_back(minimal_completion(g, v));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& f = fs[i];
      EXPECT_TRUE(oracle::is_chordal(f.apply(g)));
      if (f.minimal) EXPECT_TRUE(minimal_by_single_removal(g, f.fill));
      EXPECT_EQ(audit_minimal(g, f.fill), minimal_by_single_removal(g, f.fill));
      if (i > 0)
        for (auto [u, v] : f.fill) {
          EXPECT_NE(u, *f.avoids);
          EXPECT_NE(v, *f.avoids);
        }
    }
  }
}

TEST(ForcedSeparators, EmptyRequestIsAnOrdinaryMinimalCompletion) {
  Graph c5 = shapes::cycle(5);
  auto c = force_separators_completion(c5, {});
  EXPECT_TRUE(minimal_by_single_removal(c5, c.fill));
}

TEST(ForcedSeparators, FourCycleKeepsRequestedSeparator) {
  Graph c4 = shapes::cycle(4);
  auto c = force_separators_completion(c4, {{0, 2}});
  EXPECT_EQ(c.fill, (std::vector<Edge>{{0, 2}}));
  EXPECT_TRUE(is_minimal_separator(c.apply(c4), {0, 2}).has_value());
}

TEST(ForcedSeparators, EveryReturnedCompletionKeepsTheSeparators) {
  std::mt19937_64 rng(44);
  for (const auto& g : corpus(44, 120, 4, 9)) {
    auto seps = oracle::minimal_separators(g);
    if (seps.empty()) continue;
    // A random pairwise non-crossing subset.
    std::vector<VertexSet> pick;
    for (const auto& s : seps) {
      if (rng() % 2) continue;
      bool ok = true;
      for (const auto& t : pick) ok = ok && !crossing(g, s, t);
      if (ok) pick.push_back(s);
    }
    auto c = force_separators_completion(g, pick);
    Graph h = c.apply(g);
    EXPECT_TRUE(oracle::is_chordal(h));
    for (const auto& s : pick) EXPECT_TRUE(is_minimal_separator(h, s).has_value());
    if (c.minimal) EXPECT_TRUE(minimal_by_single_removal(g, c.fill));
  }
}

TEST(Crossing, Examples) {
  Graph c4 = shapes::cycle(4);
  EXPECT_TRUE(crossing(c4, {0, 2}, {1, 3}));
  Graph p5 = shapes::path(5);
  EXPECT_FALSE(crossing(p5, {1}, {3}));
  EXPECT_FALSE(crossing(p5, {1}, {1}));
}

TEST(Crossing, IsSymmetric) {
  for (const auto& g : corpus(45, 80, 4, 8)) {
    auto seps = oracle::minimal_separators(g);
    for (const auto& a : seps)
      for (const auto& b : seps) EXPECT_EQ(crossing(g, a, b), crossing(g, b, a));
  }
}

TEST(ChordalMinsepTools, Examples) {
  auto r = chordal_minsep_tools(shapes::path(4), {1}, {0});
  EXPECT_EQ(r.omega, (VertexSet{0, 1}));
  EXPECT_EQ(r.tree.adhesion(r.edge), VertexSet{1});

  auto d = chordal_minsep_tools(shapes::diamond(), {1, 2}, {0});
  EXPECT_EQ(d.omega, (VertexSet{0, 1, 2}));

  EXPECT_THROW(chordal_minsep_tools(shapes::complete(4), {0, 1}, {2}), Error);
}
