#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "hoffman/model.hpp"

using namespace hoffman;

TEST(ValidateHoffman, AcceptsHI) { EXPECT_FALSE(validate_hoffman(catalog::h_i())); }

TEST(ValidateHoffman, RejectsFatFatEdge) {
  const HoffmanGraph g(2, 2, {{0, 2}, {1, 3}, {2, 3}});
  const auto v = validate_hoffman(g);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::FatFatEdge);
  EXPECT_EQ(v->witness, (std::vector<int>{2, 3}));
}

TEST(ValidateHoffman, RejectsIsolatedFat) {
  const auto v = validate_hoffman(HoffmanGraph(1, 1, {}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::IsolatedFat);
}

TEST(ValidateHoffman, RejectsLoopsAndDuplicates) {
  EXPECT_EQ(validate_hoffman(HoffmanGraph(2, 0, {{0, 0}}))->kind, Violation::Kind::Loop);
  EXPECT_EQ(validate_hoffman(HoffmanGraph(2, 0, {{0, 1}, {1, 0}}))->kind, Violation::Kind::DuplicateEdge);
  EXPECT_THROW(HoffmanGraph(2, 0, {{0, 2}}), std::invalid_argument);
}

TEST(Catalog, NamedGraphs) {
  const auto h3 = std::get<HoffmanGraph>(catalog::lookup("H_III"));
  EXPECT_EQ(h3.slim_count(), 2);
  EXPECT_EQ(h3.fat_count(), 1);
  EXPECT_EQ(h3.normalized_edges(), (std::vector<VertexPair>{{0, 2}, {1, 2}}));
  const auto k = std::get<HoffmanGraph>(catalog::lookup("K1T(3)"));
  EXPECT_EQ(k.slim_count(), 1);
  EXPECT_EQ(k.fat_count(), 3);
  EXPECT_EQ(k.fat_degree(0), 3);
  const auto t1 = std::get<EdgeSignedGraph>(catalog::lookup("T1"));
  EXPECT_EQ(t1.plus_edges(), (std::vector<VertexPair>{{0, 1}}));
  EXPECT_EQ(t1.minus_edges(), (std::vector<VertexPair>{{0, 2}, {1, 2}}));
  EXPECT_THROW(catalog::lookup("H_V"), std::invalid_argument);
  EXPECT_THROW(catalog::lookup("Q(1,2)"), std::invalid_argument);
}

TEST(Catalog, EveryNameIsValid) {
  for (const auto& name : catalog::names()) {
    if (name.find('(') != std::string::npos) continue;
    const auto entry = catalog::lookup(name);
    if (auto* h = std::get_if<HoffmanGraph>(&entry)) EXPECT_FALSE(validate_hoffman(*h)) << name;
  }
  for (int t = 0; t <= 6; ++t) EXPECT_FALSE(validate_hoffman(catalog::k1t(t)));
}

TEST(MakeQ, SmallCases) {
  EXPECT_EQ(make_q(0, 0, 1), catalog::s11());
  EXPECT_EQ(make_q(1, 0, 1), catalog::s21());
  const auto q = make_q(3, 2, 6);
  EXPECT_EQ(q.vertex_count(), 11);
  EXPECT_EQ(q.plus_edges().size(), 18u);
  EXPECT_EQ(q.minus_edges().size(), 2u);
  EXPECT_EQ(make_q(0, 0, 0).vertex_count(), 0);
  EXPECT_THROW(make_q(2, 1, 2), std::invalid_argument);
}

TEST(MakeQ, EdgeCountsForAllParameters) {
  for (int r = 0; r <= 8; ++r)
    for (int p = 0; p <= r; ++p)
      for (int q = 0; p + q <= r; ++q) {
        const auto s = make_q(p, q, r);
        EXPECT_EQ(s.vertex_count(), p + q + r);
        EXPECT_EQ(static_cast<int>(s.plus_edges().size()), r * (r - 1) / 2 + p);
        EXPECT_EQ(static_cast<int>(s.minus_edges().size()), q);
      }
}

TEST(InducedHoffmanSubgraph, Examples) {
  EXPECT_EQ(induced_hoffman_subgraph(catalog::h_iv(), {0, 2}), catalog::h_i());
  EXPECT_EQ(induced_hoffman_subgraph(catalog::h_xvi(), {0, 1, 2, 3, 4}), catalog::h_xvi());
  try {
    induced_hoffman_subgraph(catalog::h_ii(), {1});
    FAIL() << "expected an isolated fat error";
  } catch (const InducedSubgraphError& e) {
    EXPECT_EQ(e.vertex(), 1);
  }
}

TEST(SlimSubgraph, Examples) {
  EXPECT_EQ(slim_subgraph(catalog::h_iv()), HoffmanGraph(2, 0, {{0, 1}}));
  EXPECT_EQ(slim_subgraph(catalog::h_iii()), HoffmanGraph(2, 0, {}));
  EXPECT_EQ(slim_subgraph(catalog::k1t(5)), HoffmanGraph(1, 0, {}));
}

TEST(InducedSignedSubgraph, Examples) {
  EXPECT_EQ(induced_signed_subgraph(catalog::t1(), {0, 1}), catalog::s21());
  EXPECT_EQ(induced_signed_subgraph(catalog::t1(), {0, 2}), catalog::s22());
  EXPECT_EQ(induced_signed_subgraph(make_q(1, 1, 2), {0, 1}), EdgeSignedGraph(2, {{0, 1}}, {}));
}

TEST(InducedSignedSubgraph, RestrictionCommutes) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> sign(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const auto s = signed_graph_from(n, [&](int, int) { return sign(rng); });
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(induced_signed_subgraph(s, all), s);
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v)
      if (rng() % 3) a.push_back(v);
    // B is a subset of A, expressed in A's new numbering and in s's numbering.
    std::vector<int> b_local;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (rng() % 2) {
        b.push_back(a[i]);
        b_local.push_back(static_cast<int>(i));
      }
    EXPECT_EQ(induced_signed_subgraph(induced_signed_subgraph(s, a), b_local), induced_signed_subgraph(s, b));
  }
}

TEST(IsFat, Examples) {
  EXPECT_TRUE(is_fat(catalog::h_iv()));
  EXPECT_FALSE(is_fat(HoffmanGraph(2, 0, {{0, 1}})));
  EXPECT_FALSE(is_connected_signed(EdgeSignedGraph(2, {}, {})));
  EXPECT_TRUE(is_connected_signed(catalog::t1()));
}

TEST(EdgeSignedGraph, RejectsOverlapAndLoops) {
  EXPECT_THROW(EdgeSignedGraph(2, {{0, 1}}, {{1, 0}}), std::invalid_argument);
  EXPECT_THROW(EdgeSignedGraph(2, {{1, 1}}, {}), std::invalid_argument);
  EXPECT_THROW(EdgeSignedGraph(2, {{0, 2}}, {}), std::invalid_argument);
}

TEST(Permute, HoffmanRejectsMixingClasses) {
  EXPECT_THROW(permute(catalog::h_i(), {1, 0}), std::invalid_argument);
  EXPECT_EQ(permute(catalog::h_iii(), {1, 0, 2}), catalog::h_iii());
}

TEST(SignedComponents, SplitsByConnectivity) {
  const EdgeSignedGraph s(5, {{0, 1}}, {{2, 4}});
  EXPECT_EQ(signed_components(s), (std::vector<Mask>{0b00011, 0b10100, 0b01000}));
}
