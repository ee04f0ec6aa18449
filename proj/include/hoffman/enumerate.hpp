#pragma once

// Generation and classification: signed graphs above a threshold, the Q
// extension step, realizations of signed graphs as Hoffman graphs, the
// irreducible census and its maximal members.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hoffman/algebra.hpp"
#include "hoffman/decomp.hpp"
#include "hoffman/format.hpp"
#include "hoffman/iso.hpp"
#include "hoffman/model.hpp"
#include "hoffman/qfamily.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

// ---------------------------------------------------------------------------
// Exact eigenvalue helpers

// True when x^T m x < t * x^T x for the integer vector x, decided exactly.
inline bool rayleigh_below(const IntMatrix& m, const std::vector<std::int64_t>& x, const Threshold& t) {
  BigInt num = 0, den = 0;
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    den += BigInt(x[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
    BigInt row = 0;
    for (int j = 0; j < n; ++j) row += BigInt(m(i, j)) * x[static_cast<std::size_t>(j)];
    num += row * x[static_cast<std::size_t>(i)];
  }
  if (den.is_zero()) return false;
  const GoldenNumber gap = GoldenNumber::rational(Rational(num)) - t.value() * GoldenNumber::rational(Rational(den));
  return golden_sign(gap) < 0;
}

// Fast exact rejection: a floating eigenvector, rounded to integers, whose
// Rayleigh quotient is provably below t. A false result decides nothing.
inline bool certified_below(const IntMatrix& m, const Threshold& t) {
  const int n = m.size();
  if (n == 0) return false;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success || es.eigenvalues()(0) > t.to_double() - 1e-7) return false;
  const Eigen::VectorXd v = es.eigenvectors().col(0);
  std::vector<std::int64_t> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = std::llround(v(i) * 1048576.0);
  return rayleigh_below(m, x, t);
}

// Exact "smallest eigenvalue >= t", trying the cheap certificate first.
inline bool lambda_min_at_least_fast(const IntMatrix& m, const Threshold& t) {
  if (certified_below(m, t)) return false;
  return lambda_min_at_least(m, t);
}

// Exact description of a smallest eigenvalue: the multiplicity of the
// threshold's minimal polynomial in the characteristic polynomial, the
// squarefree characteristic polynomial and an isolating interval (lo, hi]
// for its smallest root.
struct LambdaDescriptor {
  int threshold_multiplicity = 0;
  IntPolynomial squarefree;
  Rational lo, hi;
  double approx = 0.0;

  std::string to_string() const {
    std::ostringstream os;
    os.precision(9);
    os << "k=" << threshold_multiplicity << "; sqf=" << squarefree.to_string() << "; root in (" << hoffman::to_string(lo)
       << ", " << hoffman::to_string(hi) << "]; ~" << approx;
    return os.str();
  }
};

inline LambdaDescriptor describe_lambda_min(const IntMatrix& m, const Threshold& t) {
  const IntPolynomial cp = char_poly(m);
  SmallestRoot root(cp);
  root.refine_until_width(Rational(1, 1 << 20));
  LambdaDescriptor d;
  d.threshold_multiplicity = deflate(cp, t).multiplicity;
  d.squarefree = root.polynomial();
  d.lo = root.lo();
  d.hi = root.hi();
  d.approx = lambda_min_approx(m);
  return d;
}

// ---------------------------------------------------------------------------
// Local rejection tables

namespace detail {

inline int sign_code(int s) { return s == 0 ? 0 : (s > 0 ? 1 : 2); }
inline int code_sign(int c) { return c == 0 ? 0 : (c == 1 ? 1 : -1); }

// Base-3 code of the signed graph induced on vertices, pairs in (i<j) order.
template <typename SignFn>
int local_code(int k, SignFn sign) {
  int code = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) code = code * 3 + sign_code(sign(i, j));
  return code;
}

inline EdgeSignedGraph graph_from_code(int k, int code) {
  std::vector<int> digits;
  const int pairs = k * (k - 1) / 2;
  digits.resize(static_cast<std::size_t>(pairs));
  for (int i = pairs - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = code % 3;
    code /= 3;
  }
  int idx = 0;
  std::vector<std::vector<int>> s(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = code_sign(digits[static_cast<std::size_t>(idx++)]);
  return signed_graph_from(k, [&](int i, int j) { return s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; });
}

}  // namespace detail

// Rejects one-vertex extensions by looking only at 3- and 4-vertex subsets
// that contain the new vertex. Both the threshold and induced-pattern
// conditions are hereditary, so a parent that passed needs no other subsets.
class ExtensionFilter {
 public:
  ExtensionFilter(std::optional<Threshold> threshold, const std::vector<EdgeSignedGraph>& forbidden) {
    for (int k : {3, 4}) {
      const int size = k == 3 ? 27 : 729;
      auto& table = k == 3 ? bad3_ : bad4_;
      table.assign(static_cast<std::size_t>(size), false);
      std::vector<CanonicalKey> pattern_keys;
      for (const auto& f : forbidden)
        if (f.vertex_count() == k) pattern_keys.push_back(canonical_key(f));
      for (int code = 0; code < size; ++code) {
        const EdgeSignedGraph s = detail::graph_from_code(k, code);
        bool bad = threshold && !lambda_min_at_least(signed_adjacency(s), *threshold);
        if (!bad && !pattern_keys.empty()) {
          const CanonicalKey key = canonical_key(s);
          bad = std::find(pattern_keys.begin(), pattern_keys.end(), key) != pattern_keys.end();
        }
        table[static_cast<std::size_t>(code)] = bad;
      }
    }
    for (const auto& f : forbidden)
      if (f.vertex_count() > 4 || f.vertex_count() < 3) large_.push_back(f);
  }

  // signs[i] is the sign between the new vertex and parent vertex i.
  bool rejects(const EdgeSignedGraph& parent, const std::vector<int>& signs) const {
    const int n = parent.vertex_count();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int c3 = (detail::sign_code(parent.sign(i, j)) * 3 + detail::sign_code(signs[static_cast<std::size_t>(i)])) * 3 +
                       detail::sign_code(signs[static_cast<std::size_t>(j)]);
        if (bad3_[static_cast<std::size_t>(c3)]) return true;
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          // Pairs in order (i,j) (i,k) (i,new) (j,k) (j,new) (k,new).
          int c = detail::sign_code(parent.sign(i, j));
          c = c * 3 + detail::sign_code(parent.sign(i, k));
          c = c * 3 + detail::sign_code(signs[static_cast<std::size_t>(i)]);
          c = c * 3 + detail::sign_code(parent.sign(j, k));
          c = c * 3 + detail::sign_code(signs[static_cast<std::size_t>(j)]);
          c = c * 3 + detail::sign_code(signs[static_cast<std::size_t>(k)]);
          if (bad4_[static_cast<std::size_t>(c)]) return true;
        }
    return false;
  }

  // Patterns the tables do not cover; the caller checks them on the child.
  const std::vector<EdgeSignedGraph>& large_patterns() const { return large_; }

 private:
  std::vector<bool> bad3_, bad4_;
  std::vector<EdgeSignedGraph> large_;
};

// Sign vectors over {0,+,-}^n in lexicographic order with 0 < + < -.
template <typename F>
void for_each_sign_vector(int n, bool allow_zero_vector, F&& f) {
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::vector<int> signs(static_cast<std::size_t>(n), 0);
  while (true) {
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      signs[static_cast<std::size_t>(i)] = detail::code_sign(digits[static_cast<std::size_t>(i)]);
      nonzero = nonzero || digits[static_cast<std::size_t>(i)] != 0;
    }
    if (nonzero || allow_zero_vector) f(signs);
    int i = n - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == 2) digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++digits[static_cast<std::size_t>(i)];
  }
}

// Runs f(i) for i in [0, count) over `jobs` threads.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex m;
  std::size_t next = 0;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(m);
          if (next >= count) return;
          i = next++;
        }
        f(i);
      }
    });
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// Census

template <typename Graph>
struct CensusEntry {
  CanonicalKey key;
  Graph graph;  // canonical form
  LambdaDescriptor lambda;
  std::string name;
};

template <typename Graph>
struct Census {
  std::string title;
  std::string predicate;
  std::map<int, std::vector<CensusEntry<Graph>>> by_n;

  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& [n, v] : by_n) s += v.size();
    return s;
  }
  std::vector<CensusEntry<Graph>> all() const {
    std::vector<CensusEntry<Graph>> out;
    for (const auto& [n, v] : by_n) out.insert(out.end(), v.begin(), v.end());
    return out;
  }
  std::map<int, int> counts() const {
    std::map<int, int> c;
    for (const auto& [n, v] : by_n) c[n] = static_cast<int>(v.size());
    return c;
  }
};

struct EnumerateOptions {
  int max_n = 7;
  std::optional<Threshold> threshold = Threshold::minus_tau();
  std::vector<std::pair<std::string, EdgeSignedGraph>> forbidden;
  bool connected = true;
  int jobs = 1;
  // When false the threshold is applied only to the final levels, not
  // while growing (used to check that pruning loses nothing).
  bool prune_by_threshold = true;
};

inline std::string describe_predicate(const EnumerateOptions& o) {
  std::string s = "max_n=" + std::to_string(o.max_n) + " threshold=" + (o.threshold ? o.threshold->to_string() : "none") +
                  " forbid=";
  for (std::size_t i = 0; i < o.forbidden.size(); ++i) s += (i ? "," : "") + o.forbidden[i].first;
  if (o.forbidden.empty()) s += "none";
  s += std::string(" connected=") + (o.connected ? "1" : "0");
  return s;
}

// All edge-signed graphs up to isomorphism with at most max_n vertices that
// satisfy the predicate, built level by level by adding one vertex.
inline Census<EdgeSignedGraph> enumerate_signed(const EnumerateOptions& o) {
  if (o.max_n < 0 || o.max_n > 12) throw std::invalid_argument("enumerate_signed: max_n must be in 0..12");
  std::vector<EdgeSignedGraph> patterns;
  for (const auto& [name, p] : o.forbidden) patterns.push_back(p);
  const std::optional<Threshold> grow_threshold = o.prune_by_threshold ? o.threshold : std::nullopt;
  const ExtensionFilter filter(grow_threshold, patterns);

  auto passes_final = [&](const EdgeSignedGraph& s) {
    if (o.threshold && !lambda_min_at_least_fast(signed_adjacency(s), *o.threshold)) return false;
    return true;
  };

  Census<EdgeSignedGraph> census;
  census.title = "edge-signed graphs";
  census.predicate = describe_predicate(o);
  std::vector<EdgeSignedGraph> level;
  if (o.max_n >= 1) level.push_back(EdgeSignedGraph(1, {}, {}));
  for (int n = 1; n <= o.max_n; ++n) {
    if (n > 1) {
      std::vector<std::map<CanonicalKey, EdgeSignedGraph>> found(level.size());
      parallel_for(level.size(), o.jobs, [&](std::size_t i) {
        const EdgeSignedGraph& parent = level[i];
        for_each_sign_vector(n - 1, !o.connected, [&](const std::vector<int>& signs) {
          if (filter.rejects(parent, signs)) return;
          EdgeSignedGraph child = extend_signed(parent, signs);
          for (const auto& big : filter.large_patterns())
            if (contains_induced(child, big)) return;
          CanonicalKey key = canonical_key(child);
          if (found[i].count(key)) return;
          found[i].emplace(std::move(key), canonical_form(child));
        });
      });
      std::map<CanonicalKey, EdgeSignedGraph> merged;
      for (auto& f : found) merged.insert(f.begin(), f.end());
      std::vector<std::pair<CanonicalKey, EdgeSignedGraph>> candidates(merged.begin(), merged.end());
      std::vector<char> keep(candidates.size(), 1);
      if (grow_threshold)
        parallel_for(candidates.size(), o.jobs, [&](std::size_t i) {
          keep[i] = lambda_min_at_least_fast(signed_adjacency(candidates[i].second), *grow_threshold) ? 1 : 0;
        });
      level.clear();
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) level.push_back(candidates[i].second);
    }
    std::vector<CensusEntry<EdgeSignedGraph>> entries;
    for (const auto& s : level) {
      if (o.connected && !is_connected_signed(s)) continue;
      if (!passes_final(s)) continue;
      entries.push_back({canonical_key(s), s, {}, {}});
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    census.by_n[n] = std::move(entries);
  }
  const Threshold describe_at = o.threshold ? *o.threshold : Threshold::minus_tau();
  for (auto& [n, entries] : census.by_n)
    for (auto& e : entries) e.lambda = describe_lambda_min(signed_adjacency(e.graph), describe_at);
  return census;
}

// Reference enumeration over all labeled sign assignments on exactly n vertices.
inline std::vector<CanonicalKey> brute_force_signed(int n, const Threshold& t, const std::vector<EdgeSignedGraph>& forbidden,
                                                    bool connected) {
  const int pairs = n * (n - 1) / 2;
  std::set<CanonicalKey> keys;
  std::vector<int> digits(static_cast<std::size_t>(pairs), 0);
  long long total = 1;
  for (int i = 0; i < pairs; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < pairs; ++i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
      c /= 3;
    }
    int idx = 0;
    std::vector<std::vector<int>> sg(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = detail::code_sign(digits[static_cast<std::size_t>(idx++)]);
    EdgeSignedGraph s = signed_graph_from(n, [&](int i, int j) { return sg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; });
    if (connected && !is_connected_signed(s)) continue;
    bool bad = false;
    for (const auto& f : forbidden)
      if (contains_induced(s, f)) bad = true;
    if (bad) continue;
    CanonicalKey k = canonical_key(s);
    if (keys.count(k)) continue;
    if (!lambda_min_at_least(signed_adjacency(s), t)) continue;
    keys.insert(std::move(k));
  }
  return {keys.begin(), keys.end()};
}

// Members of a census that are not isomorphic to any Q(p,q,r), named S_{n,k}
// with k counting in key order within each vertex count.
inline Census<EdgeSignedGraph> exceptional_graphs(const Census<EdgeSignedGraph>& census) {
  Census<EdgeSignedGraph> out;
  out.title = "exceptional edge-signed graphs";
  out.predicate = census.predicate + " non_q=1";
  for (const auto& [n, entries] : census.by_n) {
    auto& dest = out.by_n[n];
    for (const auto& e : entries)
      if (!is_q_graph(e.graph)) {
        dest.push_back(e);
        dest.back().name = "S_{" + std::to_string(n) + "," + std::to_string(dest.size()) + "}";
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extension step

struct ExtensionReport {
  bool ok = true;
  long long candidates = 0;
  long long survivors = 0;
  std::vector<EdgeSignedGraph> counterexamples;
};

// Every connected, T1-free, (>= -tau) one-vertex extension of Q(p,q,r) is
// Q(p+1,q,r), Q(p,q+1,r) or Q(p,q,r+1).
inline ExtensionReport verify_extension_step(int p, int q, int r, int jobs = 1) {
  if (p < 0 || q < 0 || p + q > r) throw std::invalid_argument("verify_extension_step: requires p + q <= r");
  if (p + q + r > 11) throw std::invalid_argument("verify_extension_step: requires p + q + r <= 11");
  const Threshold t = Threshold::minus_tau();
  const EdgeSignedGraph base = make_q(p, q, r);
  const int n = base.vertex_count();
  std::vector<CanonicalKey> allowed{canonical_key(make_q(p, q, r + 1))};
  if (p + q < r) {
    allowed.push_back(canonical_key(make_q(p + 1, q, r)));
    allowed.push_back(canonical_key(make_q(p, q + 1, r)));
  }
  const ExtensionFilter filter(t, {catalog::t1()});
  std::vector<std::vector<int>> vectors;
  for_each_sign_vector(n, false, [&](const std::vector<int>& s) { vectors.push_back(s); });
  ExtensionReport report;
  report.candidates = static_cast<long long>(vectors.size());
  std::vector<char> survived(vectors.size(), 0), bad(vectors.size(), 0);
  parallel_for(vectors.size(), jobs, [&](std::size_t i) {
    if (filter.rejects(base, vectors[i])) return;
    const EdgeSignedGraph child = extend_signed(base, vectors[i]);
    if (!lambda_min_at_least_fast(signed_adjacency(child), t)) return;
    if (contains_induced(child, catalog::t1())) return;
    survived[i] = 1;
    const CanonicalKey k = canonical_key(child);
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) bad[i] = 1;
  });
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    report.survivors += survived[i];
    if (bad[i]) {
      report.ok = false;
      if (report.counterexamples.size() < 5) report.counterexamples.push_back(extend_signed(base, vectors[i]));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Smallest-eigenvalue table for the exceptional graphs

struct LambdaClass {
  std::string label;
  IntPolynomial factor;  // the smallest eigenvalue is the smallest root of this
};

inline std::vector<LambdaClass> lambda_classes() {
  return {{"-sqrt(2)", IntPolynomial{-2, 0, 1}},
          {"(1-sqrt(17))/2", IntPolynomial{-4, -1, 1}},
          {"1+t, t smallest root of x^3-6x+2", IntPolynomial{7, -3, -3, 1}},
          {"-tau", IntPolynomial{-1, 1, 1}}};
}

struct LambdaTableReport {
  std::map<std::string, int> counts;
  std::vector<std::string> assignment;  // per input graph, "" if unmatched
  int unmatched = 0;
};

// Classifies each graph's smallest eigenvalue by exact divisibility of its
// characteristic polynomial and equality of smallest roots.
inline LambdaTableReport lambda_min_table_check(const std::vector<EdgeSignedGraph>& graphs) {
  LambdaTableReport rep;
  const auto classes = lambda_classes();
  for (const auto& c : classes) rep.counts[c.label] = 0;
  for (const auto& s : graphs) {
    const IntPolynomial cp = char_poly(signed_adjacency(s));
    std::string hit;
    for (const auto& c : classes) {
      if (!divide_exact(cp, c.factor)) continue;
      if (compare_smallest_roots(cp, c.factor) != std::strong_ordering::equal) continue;
      hit = c.label;
      break;
    }
    if (hit.empty()) ++rep.unmatched;
    else ++rep.counts[hit];
    rep.assignment.push_back(hit);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Hoffman graphs with at most two slim vertices

// Name of a catalog graph isomorphic to g, or "".
inline std::string catalog_name(const HoffmanGraph& g) {
  const CanonicalKey k = canonical_key(g);
  const std::pair<const char*, HoffmanGraph> named[] = {{"H_I", catalog::h_i()},   {"H_II", catalog::h_ii()},
                                                        {"H_III", catalog::h_iii()}, {"H_IV", catalog::h_iv()},
                                                        {"H_XVI", catalog::h_xvi()}, {"H_XVII", catalog::h_xvii()}};
  for (const auto& [name, h] : named)
    if (canonical_key(h) == k) return name;
  return "";
}

// Fat indecomposable graphs with at most two slim vertices, each with at most
// two fat neighbors, and smallest eigenvalue >= -1-tau; sorted by key.
inline std::vector<HoffmanGraph> derive_two_slim() {
  const Threshold t = Threshold::minus_one_minus_tau();
  std::map<CanonicalKey, HoffmanGraph> found;
  for (int n = 1; n <= 2; ++n) {
    const int subsets = (1 << n) - 1;  // nonempty slim neighborhoods of a fat vertex
    // Fat multiset as counts per neighborhood; each slim sees at most two fats, so at most 2n fats.
    std::vector<int> count(static_cast<std::size_t>(subsets), 0);
    std::function<void(int)> choose = [&](int idx) {
      if (idx == subsets) {
        std::vector<Mask> fats;
        for (int s = 0; s < subsets; ++s)
          for (int c = 0; c < count[static_cast<std::size_t>(s)]; ++c) fats.push_back(static_cast<Mask>(s + 1));
        for (int x = 0; x < n; ++x) {
          int d = 0;
          for (Mask f : fats) d += (f >> x) & 1;
          if (d < 1 || d > 2) return;
        }
        for (int adj = 0; adj < (n == 2 ? 2 : 1); ++adj) {
          std::vector<VertexPair> slim_edges;
          if (adj) slim_edges.emplace_back(0, 1);
          const HoffmanGraph g = hoffman_from_masks(n, slim_edges, fats);
          if (!is_connected_signed(special_graph(g))) continue;
          if (!lambda_min_at_least(b_matrix(g), t)) continue;
          found.emplace(canonical_key(g), canonical_form(g));
        }
        return;
      }
      for (int c = 0; c <= 2; ++c) {
        count[static_cast<std::size_t>(idx)] = c;
        choose(idx + 1);
      }
      count[static_cast<std::size_t>(idx)] = 0;
    };
    choose(0);
  }
  std::vector<HoffmanGraph> out;
  for (auto& [k, g] : found) out.push_back(g);
  if (out.size() != 6)
    throw std::logic_error("derive_two_slim: expected 6 graphs, found " + std::to_string(out.size()));
  return out;
}

// ---------------------------------------------------------------------------
// Realizations

// Hoffman graphs with one fat neighbor per slim vertex whose special graph is
// s and whose smallest eigenvalue is >= t; sorted by key.
inline std::vector<HoffmanGraph> realize_hoffman(const EdgeSignedGraph& s,
                                                 const Threshold& t = Threshold::minus_one_minus_tau()) {
  const int n = s.vertex_count();
  if (n > 12) throw std::invalid_argument("realize_hoffman: at most 12 vertices");
  std::map<CanonicalKey, HoffmanGraph> found;
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> partitions = [&](int i, int blocks) {
    if (i == n) {
      std::vector<VertexPair> slim_edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const bool same = cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)];
          const int sg = s.sign(u, v);
          if (same && sg > 0) return;
          if (!same && sg < 0) return;
          if (same ? sg == 0 : sg > 0) slim_edges.emplace_back(u, v);
        }
      std::vector<Mask> fats(static_cast<std::size_t>(blocks), 0);
      for (int u = 0; u < n; ++u) fats[static_cast<std::size_t>(cls[static_cast<std::size_t>(u)])] |= bit(u);
      const HoffmanGraph g = hoffman_from_masks(n, slim_edges, fats);
      if (!(special_graph(g) == s)) return;
      if (!lambda_min_at_least(b_matrix(g), t)) return;
      found.emplace(canonical_key(g), canonical_form(g));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cls[static_cast<std::size_t>(i)] = b;
      partitions(i + 1, std::max(blocks, b + 1));
    }
  };
  partitions(0, 0);
  std::vector<HoffmanGraph> out;
  for (auto& [k, g] : found) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// The irreducible census

// Realization counts per exceptional special graph, grouped by vertex count.
inline std::map<int, std::vector<int>> expected_realization_counts() {
  return {{3, {1}}, {4, {1, 1, 2, 1, 2}}, {5, {3, 1, 1, 4, 3, 1}}, {6, {3, 5, 3}}};
}

struct IrreducibleMember {
  std::string name;
  std::string special_name;  // "" for the small graphs
  HoffmanGraph graph;
  CanonicalKey key;
  LambdaDescriptor lambda;
  bool reducibility_certificate = false;
};

struct CountDiscrepancy {
  int n = 0;
  std::vector<int> expected;  // sorted
  std::vector<int> found;     // sorted
};

struct Classification {
  Census<EdgeSignedGraph> signed_census;  // connected, T1-free, >= -tau, n <= 7
  Census<EdgeSignedGraph> exceptional;    // non-Q members
  std::vector<std::string> unrealizable;  // exceptional graphs without realizations
  std::vector<IrreducibleMember> small;   // from derive_two_slim, minus reducible ones
  std::vector<std::string> dropped_small;
  std::vector<IrreducibleMember> members;  // small + realizations
  std::map<std::string, int> realizations_per_special;
  std::vector<CountDiscrepancy> discrepancies;

  std::size_t total() const { return members.size(); }
  // Exceptional graphs that are special graphs of some realization.
  std::vector<EdgeSignedGraph> realizable_exceptional() const {
    std::vector<EdgeSignedGraph> out;
    for (const auto& e : exceptional.all())
      if (realizations_per_special.at(e.name) > 0) out.push_back(e.graph);
    return out;
  }
};

inline Classification classify_irreducible(int jobs = 1) {
  const Threshold t = Threshold::minus_one_minus_tau();
  Classification c;
  EnumerateOptions o;
  o.max_n = 7;
  o.threshold = Threshold::minus_tau();
  o.forbidden = {{"T1", catalog::t1()}};
  o.connected = true;
  o.jobs = jobs;
  c.signed_census = enumerate_signed(o);
  c.exceptional = exceptional_graphs(c.signed_census);

  for (const auto& g : derive_two_slim()) {
    const std::string name = catalog_name(g);
    if (find_reducibility_certificate(g, t)) {
      c.dropped_small.push_back(name);
      continue;
    }
    c.small.push_back({name, "", g, canonical_key(g), describe_lambda_min(b_matrix(g), t), false});
  }
  c.members = c.small;
  std::map<int, std::vector<int>> found_counts;
  for (const auto& [n, entries] : c.exceptional.by_n) {
    for (const auto& e : entries) {
      const auto reals = realize_hoffman(e.graph, t);
      c.realizations_per_special[e.name] = static_cast<int>(reals.size());
      found_counts[n].push_back(static_cast<int>(reals.size()));
      if (reals.empty()) c.unrealizable.push_back(e.name);
      for (std::size_t j = 0; j < reals.size(); ++j) {
        IrreducibleMember m;
        m.name = "H^" + std::to_string(j + 1) + "_{" + std::to_string(n) + "," + e.name.substr(e.name.find(',') + 1);
        m.special_name = e.name;
        m.graph = reals[j];
        m.key = canonical_key(reals[j]);
        m.lambda = describe_lambda_min(b_matrix(reals[j]), t);
        m.reducibility_certificate = find_reducibility_certificate(reals[j], t).has_value();
        c.members.push_back(std::move(m));
      }
    }
  }
  // Counts with zero realizations are not special graphs and do not count.
  auto expected = expected_realization_counts();
  std::set<int> ns;
  for (const auto& [n, v] : expected) ns.insert(n);
  for (const auto& [n, v] : found_counts) ns.insert(n);
  for (int n : ns) {
    std::vector<int> e = expected.count(n) ? expected[n] : std::vector<int>{};
    std::vector<int> f;
    for (int k : found_counts[n])
      if (k > 0) f.push_back(k);
    std::sort(e.begin(), e.end());
    std::sort(f.begin(), f.end());
    if (e != f) c.discrepancies.push_back({n, e, f});
  }
  return c;
}

// Members not properly contained, as induced Hoffman subgraphs, in another member.
inline std::vector<std::size_t> maximal_members(const std::vector<HoffmanGraph>& graphs) {
  std::vector<CanonicalKey> keys;
  for (const auto& g : graphs) keys.push_back(canonical_key(g));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < graphs.size() && !contained; ++j) {
      if (i == j || keys[i] == keys[j]) continue;
      if (graphs[j].vertex_count() <= graphs[i].vertex_count()) continue;
      contained = contains_induced(graphs[j], graphs[i]).has_value();
    }
    if (!contained) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Three-vertex diagonal check

struct DiagonalReport {
  bool ok = true;
  int cases = 0;
  std::vector<std::pair<EdgeSignedGraph, std::array<int, 3>>> failures;
};

// For every connected signed graph on three labeled vertices and every
// diagonal D with entries in {1,2} and at least one 2, the smallest
// eigenvalue of M - D is below -1-tau.
inline DiagonalReport verify_three_vertex_diagonal_lemma() {
  const Threshold t = Threshold::minus_one_minus_tau();
  DiagonalReport rep;
  for (int code = 0; code < 27; ++code) {
    const EdgeSignedGraph s = detail::graph_from_code(3, code);
    if (!is_connected_signed(s)) continue;
    for (int dmask = 0; dmask < 8; ++dmask) {
      if (dmask == 0) continue;
      std::array<int, 3> d{};
      for (int i = 0; i < 3; ++i) d[static_cast<std::size_t>(i)] = ((dmask >> i) & 1) ? 2 : 1;
      IntMatrix m = signed_adjacency(s);
      for (int i = 0; i < 3; ++i) m(i, i) -= d[static_cast<std::size_t>(i)];
      ++rep.cases;
      if (count_roots_below(char_poly(m), t) == 0) {
        rep.ok = false;
        rep.failures.emplace_back(s, d);
      }
    }
  }
  return rep;
}

}  // namespace hoffman
