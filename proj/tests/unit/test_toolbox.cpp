#include <gtest/gtest.h>

#include "oracles.hpp"
#include "p6mwis/induced_path.hpp"
#include "p6mwis/separators.hpp"
#include "p6mwis/toolbox.hpp"
#include "shapes.hpp"

using namespace p6mwis;

namespace {

QuasiOrderPair reflexive(std::vector<int> universe) {
  QuasiOrderPair q;
  std::size_t n = universe.size();
  q.universe = std::move(universe);
  q.leq1.assign(n, std::vector<bool>(n, false));
  q.leq2 = q.leq1;
  for (std::size_t i = 0; i < n; ++i) q.leq1[i][i] = q.leq2[i][i] = true;
  return q;
}

/// Two total preorders from random ranks; every pair is comparable in both.
QuasiOrderPair random_ranked(std::mt19937_64& rng) {
  int n = 1 + static_cast<int>(rng() % 8);
  std::vector<int> r1(n), r2(n), u(n);
  for (int i = 0; i < n; ++i) {
    r1[i] = static_cast<int>(rng() % 4);
    r2[i] = static_cast<int>(rng() % 4);
    u[i] = i;
  }
  QuasiOrderPair q = reflexive(u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      q.leq1[i][j] = r1[i] <= r1[j];
      q.leq2[i][j] = r2[i] <= r2[j];
    }
  return q;
}

}  // namespace

TEST(Biranking, SingletonUniverse) { EXPECT_EQ(biranking_select(reflexive({1})), 1); }

TEST(Biranking, SmallExampleSelectsTheCommonLowerElement) {
  // Elements 1,2,3 at positions 0,1,2. leq1: 2<=1, 2<=3. leq2: 3<=1.
  QuasiOrderPair q = reflexive({1, 2, 3});
  q.leq1[1][0] = q.leq1[1][2] = true;
  q.leq2[2][0] = true;
  ASSERT_TRUE(valid_quasi_order_pair(q));
  EXPECT_EQ(biranking_select(q), 2);
}

TEST(Biranking, TotalOrderGivesItsMinimum) {
  QuasiOrderPair q = reflexive({7, 8, 9});
  // 9 < 7 < 8 in leq1; leq2 only reflexive.
  int rank[] = {1, 2, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q.leq1[i][j] = rank[i] <= rank[j];
  EXPECT_EQ(biranking_select(q), 9);
}

TEST(Biranking, RejectsIncomparablePairs) {
  EXPECT_THROW(biranking_select(reflexive({1, 2})), Error);
}

TEST(Biranking, DigraphAcyclicAndWinnerBelowAll) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    QuasiOrderPair q = random_ranked(rng);
    ASSERT_TRUE(valid_quasi_order_pair(q));
    EXPECT_TRUE(is_acyclic(biranking_digraph(q)));
    int x = biranking_select(q);
    for (std::size_t y = 0; y < q.size(); ++y) EXPECT_TRUE(q.leq1[x][y] || q.leq2[x][y]);
  }
}

TEST(NeighborhoodDecomposition, PathVertexSeesAnInducedP4) {
  Graph p5 = shapes::path(5);  // u=0, D={1,2,3,4}
  VertexSet d{1, 2, 3, 4};
  auto r = neighborhood_decomposition(p5, d, 3, 4);
  EXPECT_EQ(r.p4_class, VertexSet{0});
  ASSERT_EQ(r.p4_witness.size(), 1u);
  auto [u, w] = r.p4_witness[0];
  EXPECT_EQ(u, 0);
  EXPECT_EQ(w, (std::array<Vertex, 3>{1, 2, 3}));
}

TEST(NeighborhoodDecomposition, NeighborOfPOrQWins) {
  Graph p5 = shapes::path(5);
  auto r = neighborhood_decomposition(p5, {1, 2, 3, 4}, 1, 2);
  EXPECT_EQ(r.pq_class, VertexSet{0});
  EXPECT_TRUE(r.p4_class.empty());
}

TEST(NeighborhoodDecomposition, ClassesPartitionAndTrickyNeedsMesh) {
  for (const auto& g : oracle::p6free_corpus(32, 120, 4, 9)) {
    for (const auto& s : minimal_separators(g))
      for (const auto& d : components(g, s)) {
        if (d.size() < 2) continue;
        auto [p, q] = default_pq(g, d);
        auto r = neighborhood_decomposition(g, d, p, q);
        EXPECT_EQ(r.p4_class | r.pq_class | r.tricky, g.N(d));
        EXPECT_FALSE(r.p4_class.intersects(r.pq_class) || r.p4_class.intersects(r.tricky) ||
                     r.pq_class.intersects(r.tricky));
        if (!is_mesh(g, d)) EXPECT_TRUE(r.tricky.empty());
        for (const auto& [u, w] : r.p4_witness) EXPECT_TRUE(is_induced_path(g, {u, w[0], w[1], w[2]}));
      }
  }
}

TEST(SeparatorCover, SingletonSideCoversAlone) {
  Graph claw = shapes::star(3);
  auto r = separator_cover(claw, {0}, {1}, {2});
  EXPECT_EQ(r.a1, VertexSet{1});
  EXPECT_TRUE(r.a2.empty());
}

TEST(SeparatorCover, SixCycleOppositeCut) {
  Graph c6 = shapes::cycle(6);
  VertexSet s{0, 3}, d1{1, 2}, d2{4, 5};
  auto r = separator_cover(c6, s, d1, d2);
  EXPECT_TRUE(r.a1.subset_of(d1) && r.a2.subset_of(d2));
  EXPECT_LE(r.a1.size(), 3);
  EXPECT_LE(r.a2.size(), 3);
  EXPECT_TRUE(s.subset_of(c6.N_closed(r.a1 | r.a2)));
  // {2,3} in the one-based labeling alone already covers the cut.
  EXPECT_TRUE(s.subset_of(c6.N_closed(d1)));
}

TEST(SeparatorCover, EveryMinimalSeparatorOfP6FreeCorpus) {
  for (const auto& g : oracle::p6free_corpus(33, 150, 4, 9))
    for (const auto& s : oracle::minimal_separators(g)) {
      auto full = full_components(g, s);
      for (std::size_t i = 0; i < full.size(); ++i)
        for (std::size_t j = i + 1; j < full.size(); ++j) {
          auto r = separator_cover(g, s, full[i], full[j]);
          EXPECT_LE(r.a1.size(), 3);
          EXPECT_LE(r.a2.size(), 3);
          EXPECT_TRUE(s.subset_of(g.N_closed(r.a1 | r.a2)));
        }
    }
}

TEST(SeparatorCover, PinnedModeKeepsPinsForEveryValidChoice) {
  long pinned = 0;
  for (const auto& g : oracle::p6free_corpus(34, 80, 5, 8))
    for (const auto& s : oracle::minimal_separators(g)) {
      auto full = full_components(g, s);
      if (full.size() < 2 || full[0].size() < 2 || full[1].size() < 2) continue;
      const VertexSet &d1 = full[0], &d2 = full[1];
      for (Vertex p1 : d1)
        for (Vertex q1 : d1) {
          if (!valid_pq(g, d1, p1, q1)) continue;
          for (Vertex p2 : d2)
            for (Vertex q2 : d2) {
              if (!valid_pq(g, d2, p2, q2)) continue;
              auto r = separator_cover(g, s, d1, d2, CoverPins{p1, q1, p2, q2});
              ++pinned;
              EXPECT_TRUE((VertexSet{p1, q1}).subset_of(r.a1));
              EXPECT_TRUE((VertexSet{p2, q2}).subset_of(r.a2));
              EXPECT_TRUE(s.subset_of(g.N_closed(r.a1 | r.a2)));
            }
        }
    }
  EXPECT_GT(pinned, 0);
}
