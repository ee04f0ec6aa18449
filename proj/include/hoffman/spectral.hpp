#pragma once

// Matrices attached to graphs and the special graph construction.

#include <stdexcept>
#include <string>
#include <utility>

#include "hoffman/algebra.hpp"
#include "hoffman/model.hpp"

namespace hoffman {

// B = A_s - C C^T from the entry formulas: -|N^f(x)| on the diagonal and
// A_xy - |N^f(x) & N^f(y)| off it.
inline IntMatrix b_matrix(const HoffmanGraph& g) {
  require_valid(g, "b_matrix");
  const int n = g.slim_count();
  IntMatrix b(n);
  for (int x = 0; x < n; ++x) {
    b(x, x) = -g.fat_degree(x);
    for (int y = x + 1; y < n; ++y) {
      const std::int64_t v = (g.adjacent(x, y) ? 1 : 0) - popcount(g.fat_neighbors(x) & g.fat_neighbors(y));
      b(x, y) = v;
      b(y, x) = v;
    }
  }
  return b;
}

// B computed as an explicit product A_s - C C^T.
inline IntMatrix b_matrix_by_product(const HoffmanGraph& g) {
  require_valid(g, "b_matrix_by_product");
  const int ns = g.slim_count();
  const int nf = g.fat_count();
  IntMatrix a(ns);
  for (int x = 0; x < ns; ++x)
    for (int y = 0; y < ns; ++y) a(x, y) = g.adjacent(x, y) ? 1 : 0;
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(ns), std::vector<std::int64_t>(static_cast<std::size_t>(nf)));
  for (int x = 0; x < ns; ++x)
    for (int f = 0; f < nf; ++f) c[static_cast<std::size_t>(x)][static_cast<std::size_t>(f)] = g.adjacent(x, ns + f) ? 1 : 0;
  IntMatrix cct(ns);
  for (int x = 0; x < ns; ++x)
    for (int y = 0; y < ns; ++y) {
      std::int64_t s = 0;
      for (int f = 0; f < nf; ++f) s += c[static_cast<std::size_t>(x)][static_cast<std::size_t>(f)] * c[static_cast<std::size_t>(y)][static_cast<std::size_t>(f)];
      cct(x, y) = s;
    }
  return a - cct;
}

inline IntMatrix signed_adjacency(const EdgeSignedGraph& s) {
  const int n = s.vertex_count();
  IntMatrix m(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) m(u, v) = s.sign(u, v);
  return m;
}

// (+) for adjacent slims with disjoint fat neighborhoods, (-) for
// non-adjacent slims with a common fat neighbor.
inline EdgeSignedGraph special_graph(const HoffmanGraph& g) {
  require_valid(g, "special_graph");
  return signed_graph_from(g.slim_count(), [&](int x, int y) {
    const bool share = (g.fat_neighbors(x) & g.fat_neighbors(y)) != 0;
    if (g.adjacent(x, y)) return share ? 0 : 1;
    return share ? -1 : 0;
  });
}

inline IntMatrix d_matrix(const HoffmanGraph& g) {
  require_valid(g, "d_matrix");
  IntMatrix d(g.slim_count());
  for (int x = 0; x < g.slim_count(); ++x) d(x, x) = g.fat_degree(x);
  return d;
}

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, VertexPair pair) : std::invalid_argument(what), pair_(pair) {}
  VertexPair pair() const { return pair_; }

 private:
  VertexPair pair_;
};

// Checks M(S(g)) = B(g) + D(g). Throws PreconditionError if two slim vertices
// share more than one fat neighbor.
inline bool check_msbd(const HoffmanGraph& g) {
  require_valid(g, "check_msbd");
  for (int x = 0; x < g.slim_count(); ++x)
    for (int y = x + 1; y < g.slim_count(); ++y)
      if (popcount(g.fat_neighbors(x) & g.fat_neighbors(y)) > 1)
        throw PreconditionError("check_msbd: slim vertices " + std::to_string(x) + " and " + std::to_string(y) +
                                    " share more than one fat neighbor",
                                {x, y});
  return signed_adjacency(special_graph(g)) == b_matrix(g) + d_matrix(g);
}

inline bool lambda_min_at_least(const HoffmanGraph& g, const Threshold& t) { return lambda_min_at_least(b_matrix(g), t); }
inline bool lambda_min_at_least(const EdgeSignedGraph& s, const Threshold& t) {
  return lambda_min_at_least(signed_adjacency(s), t);
}
inline double lambda_min_approx(const HoffmanGraph& g) { return lambda_min_approx(b_matrix(g)); }
inline double lambda_min_approx(const EdgeSignedGraph& s) { return lambda_min_approx(signed_adjacency(s)); }

}  // namespace hoffman
