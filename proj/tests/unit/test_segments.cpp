#include <gtest/gtest.h>

#include "claims.hpp"
#include "shapes.hpp"

using namespace p6mwis;

namespace {

std::vector<Graph> small_corpus(std::uint64_t seed, int count, int hi) {
  auto out = oracle::p6free_corpus(seed, count, 4, hi);
  for (int i = 0; i < count / 2; ++i) out.push_back(oracle::planted_core(seed + 500 + i, hi));
  return out;
}

}  // namespace

TEST(Segment, WholeVertexSetIsItsOwnTorso) {
  Graph p5 = shapes::path(5);
  auto seg = segment(p5, p5.vertices());
  ASSERT_TRUE(seg.has_value());
  EXPECT_EQ(seg->interior, p5.vertices());
  EXPECT_TRUE(seg->closure_edges.empty());
}

TEST(Segment, ClosedNeighborhoodOnPath) {
  auto seg = segment(shapes::path(5), {1, 2, 3});
  ASSERT_TRUE(seg.has_value());
  EXPECT_EQ(seg->interior, VertexSet{2});
  EXPECT_TRUE(seg->closure_edges.empty());
}

TEST(Segment, RejectionMatchesSeparatorOracle) {
  Graph p4 = shapes::path(4);
  // {1} sees 0 and 2, but {3} only sees 2, so N({1}) is not a minimal separator.
  EXPECT_FALSE(oracle::is_minimal_separator(oracle::Matrix(p4), 0b0101));
  EXPECT_FALSE(segment(p4, {0, 2}).has_value());
}

TEST(Segment, ValidationAgreesWithOracleAndClosureIsTorsoMinusGraph) {
  for (const auto& g : small_corpus(71, 40, 7)) {
    oracle::Matrix m(g);
    for (std::uint64_t mask = 1; mask < (1ULL << m.n); ++mask) {
      VertexSet gamma = m.set_of(mask);
      bool want = true;
      for (const auto& d : oracle::components(g, gamma))
        want = want && oracle::is_minimal_separator(m, m.mask_of(g.N(d)));
      auto seg = segment(g, gamma);
      ASSERT_EQ(seg.has_value(), want) << gamma.to_string();
      if (!seg) continue;
      for (auto [a, b] : seg->closure_edges) {
        EXPECT_FALSE(g.has_edge(a, b));
        EXPECT_TRUE(seg->torso.has_edge(a, b));
      }
      EXPECT_EQ(seg->closure_edges.size() + static_cast<std::size_t>(g.induced(gamma).edge_count()), static_cast<std::size_t>(seg->torso.edge_count()));
    }
  }
}

TEST(Substitute, ReplacingWithTheSameFillIsANoOp) {
  for (const auto& g : small_corpus(72, 30, 8)) {
    Completion f = minimal_completion(g);
    auto seg = segment(g, g.vertices());
    ASSERT_TRUE(seg.has_value());
    Completion r = substitute(g, f, *seg, f);
    EXPECT_EQ(r.fill, normalized(f.fill));
    EXPECT_EQ(r.minimal, f.minimal);
  }
}

TEST(Substitute, OutputIsChordalAndMinimalForClosedNeighborhoods) {
  for (const auto& g : small_corpus(73, 30, 8)) {
    Completion f = minimal_completion(g);
    for (Vertex u : g.vertices()) {
      auto seg = segment(g, g.N_closed(u));
      ASSERT_TRUE(seg.has_value());
      if (!respects(g, f.fill, seg->gamma)) continue;
      Completion r = substitute(g, f, *seg, minimal_completion(seg->torso, u));
      Graph h = r.apply(g);
      EXPECT_TRUE(oracle::is_chordal(h));
      if (r.minimal) EXPECT_TRUE(audit_minimal(g, r.fill));
    }
  }
}

TEST(FI, IsolatedVertex) {
  SetFamily f = f_I_family(Graph(1));
  EXPECT_EQ(f.members(), (std::vector<VertexSet>{{0}}));
}

TEST(FComplete, CliqueSegmentIsItself) {
  Graph k3 = shapes::complete(3);
  SetFamily f = f_complete(k3, std::vector<VertexSet>{k3.vertices()});
  EXPECT_EQ(f.members(), (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(FComplete, ClosedNeighborhoodOnPath) {
  SetFamily f = f_complete(shapes::path(5), std::vector<VertexSet>{{1, 2, 3}});
  EXPECT_EQ(f.sorted(), (std::vector<VertexSet>{{1, 2}, {2, 3}}));
}

TEST(FComplete, InvalidSegmentsAreSkipped) {
  EXPECT_TRUE(f_complete(shapes::path(4), std::vector<VertexSet>{{0, 2}}).empty());
}

TEST(Footprint, ChainAndBoundaryIdentityOnCorpus) {
  claims::Tally t;
  for (const auto& g : small_corpus(74, 40, 8)) t.merge(claims::footprint(claims::Context(g)));
  EXPECT_EQ(t.violations, 0) << t.first;
  EXPECT_GT(t.instances, 0);
}

TEST(Footprint, ReplacementKeepsTheModuleBoundary) {
  long tried = 0;
  for (const auto& g : small_corpus(75, 30, 8)) {
    Completion f = minimal_completion(g);
    Graph h = f.apply(g);
    CliqueTree tree = clique_tree(h);
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
      VertexSet s = tree.adhesion(e);
      for (const auto& d : full_components(g, s)) {
        if (!is_mesh(g, d)) continue;
        Footprint fp = mesh_footprint(g, h, s, d);
        auto seg = segment(g, s | fp.s_fd);
        if (!seg || !respects(g, f.fill, seg->gamma)) continue;
        ++tried;
        Completion r = footprint_replacement(g, f, s, fp);
        VertexSet a = fp.m_fd;
        a.insert(fp.q_fd);
        Graph hr = r.apply(g);
        EXPECT_TRUE(oracle::is_chordal(hr));
        EXPECT_TRUE(is_minimal_separator(hr, boundary(g, a)).has_value());
      }
    }
  }
  EXPECT_GT(tried, 0);
}

TEST(Footprint, ReplacementIsANoOpWhenTheSeparatorIsKept) {
  // Edges of a planted instance where S, S_FD and the module boundary coincide.
  Graph g(6, {{0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {4, 5}});
  Completion f = minimal_completion(g);
  Graph h = f.apply(g);
  Footprint fp = mesh_footprint(g, h, {2, 4, 5}, {1, 3});
  EXPECT_EQ(fp.s_fd, (VertexSet{2, 4, 5}));
  Completion r = footprint_replacement(g, f, {2, 4, 5}, fp);
  EXPECT_EQ(r.fill, f.fill);
}

TEST(Rozrywanie, SmallGraphsGiveNothing) { EXPECT_TRUE(rozrywanie_pairs(shapes::path(5)).empty()); }

TEST(Rozrywanie, PairsAreSeparatedAndHoldTheirAnchors) {
  for (const auto& g : small_corpus(76, 20, 8))
    for (const auto& zp : rozrywanie_pairs(g)) {
      auto [p1, q1, r1, p2, q2, r2] = zp.tuple;
      EXPECT_TRUE(zp.z1.contains(p1) && zp.z1.contains(q1));
      EXPECT_TRUE(zp.z2.contains(p2) && zp.z2.contains(q2));
      EXPECT_FALSE(zp.z1.intersects(g.N_closed(zp.z2)));
      EXPECT_TRUE(is_connected(g, zp.z1) && is_connected(g, zp.z2));
      (void)r1;
      (void)r2;
    }
}

TEST(SeparatorFamily, CompleteGraphHasNone) { EXPECT_TRUE(separator_family_S(shapes::complete(4)).empty()); }

TEST(SeparatorFamily, PathGetsEveryInnerVertex) {
  Graph p5 = shapes::path(5);
  EXPECT_EQ(separator_family_S(p5).sorted(), oracle::minimal_separators(p5));
}

TEST(SeparatorFamily, MembersAreMinimalSeparators) {
  for (const auto& g : small_corpus(77, 20, 8)) {
    oracle::Matrix m(g);
    SetFamily s = separator_family_S(g);
    for (const auto& sep : s.members()) EXPECT_TRUE(oracle::is_minimal_separator(m, m.mask_of(sep)));
    SetFamily comps = components_of_separators(g, s);
    for (const auto& d : comps.members()) EXPECT_TRUE(is_connected(g, d));
  }
}

TEST(FamilyFX, ContainsTheRecoveredPmcs) {
  for (const auto& g : small_corpus(78, 12, 6)) {
    SetFamily f = components_of_separators(g, separator_family_S(g));
    SetFamily fx = family_FX(g, f);
    SetFamily rec = recover_from_components(g, f);
    for (const auto& om : rec.members()) EXPECT_TRUE(fx.contains(om));
  }
}
