#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "printers.hpp"
#include "random_graphs.hpp"
#include "hoffman/census.hpp"
#include "hoffman/enumerate.hpp"

using namespace hoffman;

namespace {

EnumerateOptions t1_free(int max_n) {
  EnumerateOptions o;
  o.max_n = max_n;
  o.threshold = Threshold::minus_tau();
  o.forbidden = {{"T1", catalog::t1()}};
  o.connected = true;
  return o;
}

// Independent reference: every labeled signed graph on n vertices, filtered by
// Eigen eigenvalues away from the threshold and by exact Sturm counts near it,
// T1 containment by subset scan, deduplicated by canonical key.
std::set<CanonicalKey> reference_census(int n) {
  const double tau = (1 + std::sqrt(5.0)) / 2;
  const int pairs = n * (n - 1) / 2;
  int total = 1;
  for (int i = 0; i < pairs; ++i) total *= 3;
  const CanonicalKey t1 = canonical_key(catalog::t1());
  std::set<CanonicalKey> out;
  for (int code = 0; code < total; ++code) {
    int c = code;
    std::vector<int> sign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        sign[static_cast<std::size_t>(i * n + j)] = (c % 3 == 2) ? -1 : c % 3;
        c /= 3;
      }
    const auto s = signed_graph_from(n, [&](int i, int j) { return sign[static_cast<std::size_t>(i * n + j)]; });
    if (!is_connected_signed(s)) continue;
    bool has_t1 = false;
    for (int a = 0; a < n && !has_t1; ++a)
      for (int b = a + 1; b < n && !has_t1; ++b)
        for (int d = b + 1; d < n && !has_t1; ++d)
          has_t1 = canonical_key(induced_signed_subgraph(s, {a, b, d})) == t1;
    if (has_t1) continue;
    const IntMatrix m = signed_adjacency(s);
    Eigen::MatrixXd e(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e(i, j) = static_cast<double>(m(i, j));
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e).eigenvalues()(0);
    bool ok;
    if (lmin < -tau - 1e-6) ok = false;
    else if (lmin > -tau + 1e-6) ok = true;
    else ok = count_roots_below(char_poly(m), Threshold::minus_tau()) == 0;
    if (ok) out.insert(canonical_key(s));
  }
  return out;
}

std::set<CanonicalKey> keys_at(const Census<EdgeSignedGraph>& c, int n) {
  std::set<CanonicalKey> out;
  if (!c.by_n.count(n)) return out;
  for (const auto& e : c.by_n.at(n)) out.insert(e.key);
  return out;
}

const Classification& classification() {
  static const Classification c = classify_irreducible(2);
  return c;
}

}  // namespace

TEST(EnumerateSigned, UpToTwoVertices) {
  const auto c = enumerate_signed(t1_free(2));
  EXPECT_EQ(c.size(), 3u);
  std::set<CanonicalKey> expected{canonical_key(catalog::s11()), canonical_key(catalog::s21()), canonical_key(catalog::s22())};
  std::set<CanonicalKey> got;
  for (const auto& e : c.all()) got.insert(e.key);
  EXPECT_EQ(got, expected);
}

TEST(EnumerateSigned, ThreeVerticesAreQGraphsPlusOne) {
  const auto c = enumerate_signed(t1_free(3));
  int non_q = 0;
  for (const auto& e : c.by_n.at(3))
    if (!is_q_graph(e.graph)) ++non_q;
  EXPECT_EQ(non_q, 1);
  // Q graphs on three vertices: (0,0,3), (1,0,2), (0,1,2).
  EXPECT_EQ(c.by_n.at(3).size(), 4u);
}

TEST(EnumerateSigned, MatchesIndependentBruteForce) {
  const auto c = enumerate_signed(t1_free(5));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(keys_at(c, n), reference_census(n)) << "n=" << n;
    const auto lib = brute_force_signed(n, Threshold::minus_tau(), {catalog::t1()}, true);
    EXPECT_EQ(keys_at(c, n), std::set<CanonicalKey>(lib.begin(), lib.end())) << "n=" << n;
  }
}

TEST(EnumerateSigned, PruningLosesNothing) {
  auto o = t1_free(5);
  const auto pruned = enumerate_signed(o);
  o.prune_by_threshold = false;
  const auto unpruned = enumerate_signed(o);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(keys_at(pruned, n), keys_at(unpruned, n));
}

TEST(EnumerateSigned, DisconnectedAndUnrestricted) {
  EnumerateOptions o;
  o.max_n = 4;
  o.threshold.reset();
  o.connected = false;
  // All signed graphs up to isomorphism: 1, 2, 10, 66 (two-colored edge graphs).
  const auto c = enumerate_signed(o);
  EXPECT_EQ(c.counts(), (std::map<int, int>{{1, 1}, {2, 3}, {3, 10}, {4, 66}}));
  EXPECT_THROW(enumerate_signed(EnumerateOptions{13}), std::invalid_argument);
}

TEST(EnumerateSigned, DeterministicAcrossWorkerCounts) {
  auto o = t1_free(6);
  o.jobs = 1;
  std::ostringstream a, b;
  write_census(a, enumerate_signed(o));
  o.jobs = 4;
  write_census(b, enumerate_signed(o));
  EXPECT_EQ(a.str(), b.str());
}

TEST(EnumerateSigned, CensusInvariants) {
  const auto c = enumerate_signed(t1_free(7));
  for (const auto& [n, entries] : c.by_n) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      if (i) EXPECT_LT(entries[i - 1].key, e.key);
      EXPECT_EQ(canonical_key(e.graph), e.key);
      EXPECT_EQ(e.graph.vertex_count(), n);
      EXPECT_TRUE(is_connected_signed(e.graph));
      EXPECT_FALSE(contains_induced(e.graph, catalog::t1()));
      EXPECT_TRUE(lambda_min_at_least(signed_adjacency(e.graph), Threshold::minus_tau()));
    }
  }
}

TEST(QGraph, Examples) {
  EXPECT_EQ(is_q_graph(EdgeSignedGraph(2, {}, {{0, 1}})), (std::array<int, 3>{0, 1, 1}));
  EXPECT_FALSE(is_q_graph(catalog::t1()));
  EXPECT_EQ(is_q_graph(make_q(0, 0, 4)), (std::array<int, 3>{0, 0, 4}));
}

TEST(ExtensionStep, Examples) {
  for (auto [p, q, r] : {std::array<int, 3>{0, 0, 4}, {3, 2, 6}, {1, 2, 4}}) {
    const auto rep = verify_extension_step(p, q, r);
    EXPECT_TRUE(rep.ok) << p << "," << q << "," << r;
    EXPECT_EQ(rep.candidates, static_cast<long long>(std::pow(3, p + q + r)) - 1);
  }
  EXPECT_THROW(verify_extension_step(2, 1, 2), std::invalid_argument);
}

TEST(ExtensionStep, SmallFailuresAreExceptionalGraphs) {
  const auto census = enumerate_signed(t1_free(6));
  const auto rep = verify_extension_step(1, 1, 2);
  EXPECT_FALSE(rep.ok);
  ASSERT_FALSE(rep.counterexamples.empty());
  for (const auto& g : rep.counterexamples) {
    EXPECT_FALSE(is_q_graph(g));
    EXPECT_TRUE(keys_at(census, 5).count(canonical_key(g)));
  }
}

TEST(ExtensionStep, HoldsFromSixVerticesOn) {
  for (int r = 3; r <= 6; ++r)
    for (int p = 0; p <= r; ++p)
      for (int q = 0; p + q <= r && p + q + r <= 8; ++q)
        if (p + q + r >= 6) EXPECT_TRUE(verify_extension_step(p, q, r).ok) << p << "," << q << "," << r;
}

TEST(LambdaDescriptor, ContainsExactRoot) {
  const auto d = describe_lambda_min(b_matrix(catalog::h_xvi()), Threshold::minus_one_minus_tau());
  EXPECT_EQ(d.threshold_multiplicity, 1);
  EXPECT_LT(d.squarefree.sign_at(d.lo) * d.squarefree.sign_at(d.hi), 1);
  EXPECT_NEAR(d.approx, -(3 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_EQ(d.to_string().substr(0, 4), "k=1;");
}

TEST(LambdaMinAtLeastFast, AgreesWithExactPath) {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = signed_adjacency(hoffman::testing::random_signed(rng, 2 + trial % 9));
    for (const auto& t : {Threshold::minus_tau(), Threshold::minus_one_minus_tau()})
      EXPECT_EQ(lambda_min_at_least_fast(m, t), lambda_min_at_least(m, t));
  }
}

TEST(DeriveTwoSlim, SixGraphs) {
  const auto graphs = derive_two_slim();
  ASSERT_EQ(graphs.size(), 6u);
  std::multiset<std::string> names;
  int at_one_tau = 0, at_two = 0;
  for (const auto& g : graphs) {
    names.insert(catalog_name(g));
    if (lambda_min_equals(b_matrix(g), Threshold::minus_one_minus_tau())) ++at_one_tau;
    if (lambda_min_equals(b_matrix(g), Threshold::rational(Rational(-2)))) ++at_two;
  }
  EXPECT_EQ(names, (std::multiset<std::string>{"H_I", "H_II", "H_III", "H_IV", "H_XVI", "H_XVII"}));
  EXPECT_EQ(at_one_tau, 2);
  EXPECT_EQ(at_two, 3);
}

TEST(RealizeHoffman, Examples) {
  const auto& c = classification();
  const auto& s31 = c.exceptional.by_n.at(3).at(0);
  EXPECT_EQ(realize_hoffman(s31.graph).size(), 1u);
  // Q(0,0,3) with singleton classes: a slim triangle with three private fats.
  const HoffmanGraph private_fats(3, 3, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
  const CanonicalKey k = canonical_key(private_fats);
  bool found = false;
  for (const auto& g : realize_hoffman(make_q(0, 0, 3))) found = found || canonical_key(g) == k;
  EXPECT_TRUE(found);
}

TEST(RealizeHoffman, RoundTripOnCensus) {
  const auto c = enumerate_signed(t1_free(6));
  for (const auto& e : c.all()) {
    if (e.graph.vertex_count() < 3) continue;
    for (const auto& g : realize_hoffman(e.graph)) {
      EXPECT_TRUE(is_isomorphic(special_graph(g), e.graph));
      for (int x = 0; x < g.slim_count(); ++x) EXPECT_EQ(g.fat_degree(x), 1);
      EXPECT_FALSE(contains_induced(special_graph(g), catalog::t1()));
    }
  }
}

TEST(Classification, MembersSatisfyNecessaryConditions) {
  const auto& c = classification();
  const Threshold t = Threshold::minus_one_minus_tau();
  std::set<CanonicalKey> keys;
  for (const auto& m : c.members) {
    EXPECT_TRUE(keys.insert(m.key).second) << m.name;
    EXPECT_TRUE(is_fat(m.graph)) << m.name;
    EXPECT_FALSE(split_by_special_components(m.graph)) << m.name;
    EXPECT_TRUE(lambda_min_at_least(b_matrix(m.graph), t)) << m.name;
    for (int x = 0; x < m.graph.slim_count(); ++x) EXPECT_LE(m.graph.fat_degree(x), 2) << m.name;
    EXPECT_FALSE(m.reducibility_certificate) << m.name;
  }
  EXPECT_EQ(c.dropped_small, (std::vector<std::string>{"H_IV"}));
  EXPECT_FALSE(lambda_min_at_least(catalog::k1t(3), t));
}

TEST(Classification, SpecialGraphLambdaBound) {
  // lambda_min(S(h)) >= lambda_min(h) + 1, exactly, via shifted matrices.
  const auto& c = classification();
  for (const auto& m : c.members) {
    const IntMatrix ms = signed_adjacency(special_graph(m.graph));
    IntMatrix shifted = b_matrix(m.graph);
    for (int i = 0; i < shifted.size(); ++i) shifted(i, i) += 1;
    EXPECT_NE(compare_lambda_min(ms, shifted), std::strong_ordering::less) << m.name;
  }
}

TEST(LambdaTable, ClassifiesEveryRealizableExceptional) {
  const auto rep = lambda_min_table_check(classification().realizable_exceptional());
  EXPECT_EQ(rep.unmatched, 0);
}

TEST(DiagonalLemma, Sweep) {
  const auto rep = verify_three_vertex_diagonal_lemma();
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.cases, 4 * 7 * 5);
  IntMatrix m = signed_adjacency(catalog::t2());
  m(0, 0) -= 2;
  m(1, 1) -= 1;
  m(2, 2) -= 1;
  EXPECT_FALSE(lambda_min_at_least(m, Threshold::minus_one_minus_tau()));
}

TEST(MaximalMembers, ExcludesContainedGraphs) {
  const std::vector<HoffmanGraph> graphs{catalog::h_i(), catalog::h_ii(), catalog::h_iii(), catalog::h_xvi(), catalog::h_xvii()};
  EXPECT_EQ(maximal_members(graphs), (std::vector<std::size_t>{3, 4}));
}

TEST(CensusIo, RoundTripAndKeyCheck) {
  const auto c = enumerate_signed(t1_free(4));
  std::stringstream ss;
  write_census(ss, c);
  const auto lines = read_census(ss);
  ASSERT_EQ(lines.size(), c.size());
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(lines[i].key, c.all()[i].key);
  std::istringstream bad("# x\n00\tsg 2 +0-1\tk=0\n");
  try {
    read_census(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), "line 2");
  }
}
