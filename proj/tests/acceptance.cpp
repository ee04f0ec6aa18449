// Acceptance harness: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hoffman/hoffman.hpp"
#include "random_graphs.hpp"

using namespace hoffman;

namespace {

constexpr double kInterlacingSlack = 1e-9;
constexpr int kShufflesPerGraph = 100;
constexpr int kRandomGraphs = 500;
constexpr int kInterlacingPairs = 200;
constexpr int kBruteForceMaxN = 5;
constexpr std::uint32_t kSeed = 20241015;

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
}

std::string counts_text(const std::map<int, int>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [n, k] : m) {
    os << (first ? "" : ", ") << n << ":" << k;
    first = false;
  }
  os << "}";
  return os.str();
}

HoffmanGraph random_valid_hoffman(std::mt19937& rng) {
  const int slim = 1 + static_cast<int>(rng() % 6);
  const int fat = static_cast<int>(rng() % 4);
  std::vector<VertexPair> slim_edges;
  for (int u = 0; u < slim; ++u)
    for (int v = u + 1; v < slim; ++v)
      if (rng() % 2) slim_edges.emplace_back(u, v);
  std::vector<Mask> fats;
  for (int f = 0; f < fat; ++f) {
    Mask m = 0;
    for (int x = 0; x < slim; ++x)
      if (rng() % 3 == 0) m |= bit(x);
    if (!m) m = bit(static_cast<int>(rng() % slim));
    fats.push_back(m);
  }
  return hoffman_from_masks(slim, slim_edges, fats);
}

// Fat graphs where no two slim vertices share two fats, so M(S) = B + D applies.
HoffmanGraph random_single_sharing(std::mt19937& rng) {
  const int slim = 1 + static_cast<int>(rng() % 6);
  std::vector<VertexPair> slim_edges;
  for (int u = 0; u < slim; ++u)
    for (int v = u + 1; v < slim; ++v)
      if (rng() % 2) slim_edges.emplace_back(u, v);
  const int fat = 1 + static_cast<int>(rng() % slim);
  std::vector<Mask> fats(static_cast<std::size_t>(fat), 0);
  for (int x = 0; x < slim; ++x) fats[static_cast<std::size_t>(x < fat ? x : static_cast<int>(rng() % fat))] |= bit(x);
  return hoffman_from_masks(slim, slim_edges, fats);
}

std::vector<int> shuffled(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Slim vertices permuted among themselves, fat vertices among themselves.
std::vector<int> shuffled_hoffman(std::mt19937& rng, const HoffmanGraph& g) {
  std::vector<int> slim = shuffled(rng, g.slim_count()), fat = shuffled(rng, g.fat_count());
  for (int& f : fat) f += g.slim_count();
  slim.insert(slim.end(), fat.begin(), fat.end());
  return slim;
}

}  // namespace

int main() {
  std::mt19937 rng(kSeed);
  const Threshold tau = Threshold::minus_tau();
  const Threshold one_tau = Threshold::minus_one_minus_tau();
  const Classification c = classify_irreducible(4);

  // 1
  {
    const std::map<int, int> expected{{3, 1}, {4, 5}, {5, 6}, {6, 3}, {7, 0}};
    std::map<int, int> found;
    for (const auto& [n, k] : c.exceptional.counts())
      if (n >= 3) found[n] = k;
    report(1, "census-15", c.exceptional.size() == 15 && found == expected,
           std::to_string(c.exceptional.size()) + " exceptional graphs, per n " + counts_text(found) + ", expected 15 " +
               counts_text(expected));
  }

  // 2
  {
    const auto graphs = c.realizable_exceptional();
    const auto rep = lambda_min_table_check(graphs);
    const std::map<std::string, int> expected{{"-sqrt(2)", 2},
                                              {"(1-sqrt(17))/2", 3},
                                              {"1+t, t smallest root of x^3-6x+2", 1},
                                              {"-tau", 9}};
    std::ostringstream d;
    d << graphs.size() << " realizable exceptional graphs;";
    for (const auto& [label, k] : rep.counts) d << " " << label << " x" << k << ";";
    d << " unmatched " << rep.unmatched;
    report(2, "lambda-min table", graphs.size() == 15 && rep.counts == expected && rep.unmatched == 0, d.str());
  }

  // 3
  {
    std::ostringstream d;
    d << c.members.size() << " irreducible graphs, expected 37";
    for (const auto& x : c.discrepancies) {
      d << "; n=" << x.n << " expected";
      for (int k : x.expected) d << " " << k;
      d << ", found";
      for (int k : x.found) d << " " << k;
    }
    for (const auto& u : c.unrealizable) d << "; unrealizable " << u;
    report(3, "census-37", c.members.size() == 37 && c.discrepancies.empty() && c.unrealizable.empty(), d.str());
  }

  // 4
  std::vector<IrreducibleMember> maximal;
  {
    std::vector<HoffmanGraph> graphs;
    for (const auto& m : c.members) graphs.push_back(m.graph);
    for (std::size_t i : maximal_members(graphs)) maximal.push_back(c.members[i]);
    std::set<std::string> names;
    for (const auto& m : maximal) names.insert(m.name);
    int six = 0, six_maximal = 0;
    for (const auto& m : c.members)
      if (m.graph.slim_count() == 6) {
        ++six;
        six_maximal += names.count(m.name) ? 1 : 0;
      }
    const bool ok = maximal.size() == 18 && names.count("H_XVI") && names.count("H_XVII") && six == 11 && six_maximal == 11;
    report(4, "census-18", ok,
           std::to_string(maximal.size()) + " maximal, expected 18; H_XVI " + (names.count("H_XVI") ? "in" : "missing") +
               ", H_XVII " + (names.count("H_XVII") ? "in" : "missing") + "; six-slim members " + std::to_string(six) +
               " (expected 11), of which maximal " + std::to_string(six_maximal));
  }

  // 5
  {
    int bad = 0;
    for (int r = 1; r <= 8; ++r) {
      const IntPolynomial expected = IntPolynomial{-1, 1, 1}.pow(2 * r - 1) * IntPolynomial{-1, -(2 * r - 1), 1};
      if (char_poly(signed_adjacency(make_q(r, r, 2 * r))) != expected) ++bad;
    }
    report(5, "char-poly identity", bad == 0, "r = 1..8, " + std::to_string(bad) + " mismatches");
  }

  // 6
  {
    int total = 0, bad = 0;
    for (int r = 0; r <= 10; ++r)
      for (int p = 0; p <= r; ++p)
        for (int q = 0; p + q <= r; ++q) {
          if (p + q + r == 0) continue;
          ++total;
          if (!lambda_min_at_least(signed_adjacency(make_q(p, q, r)), tau)) ++bad;
        }
    report(6, "Q lambda-min bound", bad == 0, std::to_string(total) + " graphs, " + std::to_string(bad) + " below -tau");
  }

  // 7
  {
    int total = 0;
    std::vector<std::string> failed;
    for (int r = 0; r <= 10; ++r)
      for (int p = 0; p <= r; ++p)
        for (int q = 0; p + q <= r && p + q + r <= 10; ++q) {
          if (p + q + r == 0) continue;
          ++total;
          if (!verify_extension_step(p, q, r, 4).ok)
            failed.push_back("(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")");
        }
    std::string d = std::to_string(total) + " triples, " + std::to_string(failed.size()) + " failed";
    for (const auto& f : failed) d += " " + f;
    report(7, "extension step", failed.empty(), d);
  }

  // 8
  {
    const auto graphs = derive_two_slim();
    std::multiset<std::string> found;
    for (const auto& g : graphs) {
      const IntMatrix b = b_matrix(g);
      if (lambda_min_equals(b, Threshold::rational(Rational(-1)))) found.insert("-1");
      else if (lambda_min_equals(b, Threshold::rational(Rational(-2)))) found.insert("-2");
      else if (lambda_min_equals(b, one_tau)) found.insert("-(3+sqrt5)/2");
      else found.insert("other");
    }
    const std::multiset<std::string> expected{"-1", "-2", "-2", "-2", "-(3+sqrt5)/2", "-(3+sqrt5)/2"};
    std::string d = std::to_string(graphs.size()) + " graphs:";
    for (const auto& s : found) d += " " + s;
    report(8, "two-slim derivation", found == expected, d);
  }

  // 9
  {
    const auto rep = verify_three_vertex_diagonal_lemma();
    report(9, "three-vertex diagonal sweep", rep.ok,
           std::to_string(rep.cases) + " cases, " + std::to_string(rep.failures.size()) + " not below -1-tau");
  }

  // 10a
  {
    EnumerateOptions o;
    o.max_n = kBruteForceMaxN;
    o.forbidden = {{"T1", catalog::t1()}};
    const auto census = enumerate_signed(o);
    bool ok = true;
    std::map<int, int> counts;
    for (int n = 1; n <= kBruteForceMaxN; ++n) {
      const auto brute = brute_force_signed(n, tau, {catalog::t1()}, true);
      std::vector<CanonicalKey> got;
      if (census.by_n.count(n))
        for (const auto& e : census.by_n.at(n)) got.push_back(e.key);
      ok = ok && std::set<CanonicalKey>(got.begin(), got.end()) == std::set<CanonicalKey>(brute.begin(), brute.end());
      counts[n] = static_cast<int>(brute.size());
    }
    report(10, "(a) enumeration vs brute force", ok, "n <= 5, brute-force counts " + counts_text(counts));
  }

  // 10b
  {
    std::vector<HoffmanGraph> graphs{catalog::h_i(),  catalog::h_ii(),   catalog::h_iii(), catalog::h_iv(),
                                     catalog::h_xvi(), catalog::h_xvii(), catalog::k1t(3)};
    int b_bad = 0, msbd_bad = 0, msbd_cases = 0;
    for (const auto& g : graphs) {
      b_bad += b_matrix(g) == b_matrix_by_product(g) ? 0 : 1;
      ++msbd_cases;
      msbd_bad += check_msbd(g) ? 0 : 1;
    }
    for (int i = 0; i < kRandomGraphs; ++i) {
      const auto g = random_valid_hoffman(rng);
      b_bad += b_matrix(g) == b_matrix_by_product(g) ? 0 : 1;
      const auto h = random_single_sharing(rng);
      ++msbd_cases;
      msbd_bad += check_msbd(h) ? 0 : 1;
    }
    report(10, "(b) B = A_s - CC^T and M(S) = B + D", b_bad == 0 && msbd_bad == 0,
           std::to_string(graphs.size() + kRandomGraphs) + " B checks, " + std::to_string(b_bad) + " failed; " +
               std::to_string(msbd_cases) + " identity checks, " + std::to_string(msbd_bad) + " failed");
  }

  // 10c
  {
    int bad = 0;
    double worst = 0.0;
    for (int i = 0; i < kInterlacingPairs; ++i) {
      const auto g = random_valid_hoffman(rng);
      const auto h = induced_hoffman_subgraph(g, hoffman::testing::random_induced_subset(rng, g));
      const double gap = lambda_min_approx(h) - lambda_min_approx(g);
      worst = std::min(worst, gap);
      if (gap < -kInterlacingSlack) ++bad;
    }
    std::ostringstream d;
    d << kInterlacingPairs << " pairs, " << bad << " violations, slack " << kInterlacingSlack << ", worst gap " << worst;
    report(10, "(c) interlacing", bad == 0, d.str());
  }

  // 10d
  {
    int graphs = 0, bad = 0;
    for (const auto& e : c.signed_census.all()) {
      ++graphs;
      for (int i = 0; i < kShufflesPerGraph; ++i)
        if (canonical_key(permute(e.graph, shuffled(rng, e.graph.vertex_count()))) != e.key) ++bad;
    }
    for (const auto& m : c.members) {
      ++graphs;
      for (int i = 0; i < kShufflesPerGraph; ++i)
        if (canonical_key(permute(m.graph, shuffled_hoffman(rng, m.graph))) != m.key) ++bad;
    }
    report(10, "(d) canonical key permutation invariance", bad == 0,
           std::to_string(graphs) + " census graphs x " + std::to_string(kShufflesPerGraph) + " shuffles, " +
               std::to_string(bad) + " key changes");
  }

  // 10e
  {
    int checked = 0, bad = 0;
    for (const auto& m : c.members) {
      if (!is_fat(m.graph)) continue;
      ++checked;
      IntMatrix shifted = b_matrix(m.graph);
      for (int i = 0; i < shifted.size(); ++i) shifted(i, i) += 1;
      if (compare_lambda_min(signed_adjacency(special_graph(m.graph)), shifted) == std::strong_ordering::less) ++bad;
    }
    report(10, "(e) special graph lambda-min bound", bad == 0,
           std::to_string(checked) + " fat census graphs, " + std::to_string(bad) + " violations");
  }

  // 10f and 10g
  {
    Family family;
    for (const auto& m : maximal) family.add(m.name, m.graph);
    std::vector<HoffmanGraph> targets{catalog::h_i(), catalog::h_ii(), catalog::h_iii(), catalog::h_iv()};
    for (const auto& m : c.members)
      if (is_fat(m.graph) && !split_by_special_components(m.graph)) targets.push_back(m.graph);
    std::vector<Decomposition> decompositions;
    int missing = 0, invalid = 0;
    std::string first_problem;
    for (const auto& g : targets) {
      const auto w = find_hline_witness(g, family);
      if (!w) {
        ++missing;
        if (first_problem.empty()) first_problem = "no witness for " + to_compact(g);
        continue;
      }
      const auto check = verify_hline_witness(*w, family);
      if (!check) {
        ++invalid;
        if (first_problem.empty()) first_problem = check.diagnostic;
      }
      decompositions.push_back(w->decomposition);
    }
    for (const auto& m : c.members)
      if (auto r = find_reducibility_certificate(m.graph, one_tau)) decompositions.push_back(r->decomposition);
    if (auto r = find_reducibility_certificate(catalog::h_iv(), one_tau)) decompositions.push_back(r->decomposition);
    int sum_bad = 0;
    for (const auto& d : decompositions) sum_bad += lambda_min_of_sum_check(d) ? 0 : 1;
    report(10, "(f) lambda-min of sums", sum_bad == 0,
           std::to_string(decompositions.size()) + " decompositions, " + std::to_string(sum_bad) + " failed");
    report(10, "(g) H-line witnesses", missing == 0 && invalid == 0,
           std::to_string(targets.size()) + " targets, family of " + std::to_string(family.members().size()) + ", " +
               std::to_string(missing) + " missing, " + std::to_string(invalid) + " invalid" +
               (first_problem.empty() ? "" : "; " + first_problem));
  }

  std::cout << (g_failures == 0 ? "ALL PASS" : std::to_string(g_failures) + " FAILED") << std::endl;
  return g_failures == 0 ? 0 : 1;
}
