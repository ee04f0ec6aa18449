#pragma once

// Hoffman graphs, edge-signed graphs, induced substructures and the catalog
// of named small graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hoffman {

using VertexPair = std::pair<int, int>;
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline VertexPair ordered_pair(int a, int b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

// Calls f(v) for each set bit in ascending order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    const int v = __builtin_ctzll(m);
    m &= m - 1;
    f(v);
  }
}

// ---------------------------------------------------------------------------
// HoffmanGraph

// Vertex ids below slim_count are slim, the rest fat. The edge list is kept
// as given (pairs ordered a <= b) so that validate_hoffman can report loops
// and duplicates; every other operation expects a valid graph.
class HoffmanGraph {
 public:
  HoffmanGraph() = default;
  HoffmanGraph(int slim_count, int fat_count, std::vector<VertexPair> edges)
      : slim_(slim_count), fat_(fat_count) {
    if (slim_count < 0 || fat_count < 0) throw std::invalid_argument("HoffmanGraph: negative vertex count");
    if (slim_count + fat_count > kMaxVertices) throw std::invalid_argument("HoffmanGraph: more than 64 vertices");
    const int n = slim_count + fat_count;
    adj_.assign(static_cast<std::size_t>(n), 0);
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("HoffmanGraph: edge {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} out of range");
      edges_.push_back(ordered_pair(a, b));
      if (a != b) {
        adj_[static_cast<std::size_t>(a)] |= bit(b);
        adj_[static_cast<std::size_t>(b)] |= bit(a);
      }
    }
  }

  int slim_count() const { return slim_; }
  int fat_count() const { return fat_; }
  int vertex_count() const { return slim_ + fat_; }
  const std::vector<VertexPair>& edges() const { return edges_; }

  bool is_slim(int v) const { return v < slim_; }
  bool is_fat_vertex(int v) const { return v >= slim_; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1; }

  Mask slim_mask() const { return slim_ == 0 ? 0 : (slim_ == 64 ? ~Mask{0} : bit(slim_) - 1); }
  Mask fat_mask() const {
    const int n = vertex_count();
    return (n == 64 ? ~Mask{0} : bit(n) - 1) & ~slim_mask();
  }
  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  Mask fat_neighbors(int v) const { return neighbors(v) & fat_mask(); }
  Mask slim_neighbors(int v) const { return neighbors(v) & slim_mask(); }
  int fat_degree(int v) const { return popcount(fat_neighbors(v)); }

  // Sorted, deduplicated edge list.
  std::vector<VertexPair> normalized_edges() const {
    std::vector<VertexPair> e = edges_;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
  }

  friend bool operator==(const HoffmanGraph& x, const HoffmanGraph& y) {
    return x.slim_ == y.slim_ && x.fat_ == y.fat_ && x.normalized_edges() == y.normalized_edges();
  }

 private:
  int slim_ = 0;
  int fat_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<Mask> adj_;
};

struct Violation {
  enum class Kind { Loop, DuplicateEdge, FatFatEdge, IsolatedFat, PlusMinusOverlap };
  Kind kind;
  std::vector<int> witness;
  std::string message;
};

inline std::string_view kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Loop: return "loop";
    case Violation::Kind::DuplicateEdge: return "duplicate edge";
    case Violation::Kind::FatFatEdge: return "fat-fat edge";
    case Violation::Kind::IsolatedFat: return "isolated fat";
    case Violation::Kind::PlusMinusOverlap: return "pair is both (+) and (-)";
  }
  return "unknown";
}

inline Violation make_violation(Violation::Kind kind, std::vector<int> witness) {
  std::string msg(kind_name(kind));
  msg += " at ";
  for (std::size_t i = 0; i < witness.size(); ++i) msg += (i ? "," : "") + std::to_string(witness[i]);
  return {kind, std::move(witness), std::move(msg)};
}

// nullopt when g is a valid Hoffman graph; otherwise the first violated rule.
inline std::optional<Violation> validate_hoffman(const HoffmanGraph& g) {
  std::vector<VertexPair> seen;
  for (auto [a, b] : g.edges()) {
    if (a == b) return make_violation(Violation::Kind::Loop, {a});
    if (std::find(seen.begin(), seen.end(), VertexPair{a, b}) != seen.end())
      return make_violation(Violation::Kind::DuplicateEdge, {a, b});
    seen.emplace_back(a, b);
    if (g.is_fat_vertex(a) && g.is_fat_vertex(b)) return make_violation(Violation::Kind::FatFatEdge, {a, b});
  }
  for (int f = g.slim_count(); f < g.vertex_count(); ++f)
    if (g.slim_neighbors(f) == 0) return make_violation(Violation::Kind::IsolatedFat, {f});
  return std::nullopt;
}

inline void require_valid(const HoffmanGraph& g, std::string_view what) {
  if (auto v = validate_hoffman(g)) throw std::invalid_argument(std::string(what) + ": invalid Hoffman graph: " + v->message);
}

// Every slim vertex has a fat neighbor.
inline bool is_fat(const HoffmanGraph& g) {
  for (int x = 0; x < g.slim_count(); ++x)
    if (g.fat_neighbors(x) == 0) return false;
  return true;
}

class InducedSubgraphError : public std::runtime_error {
 public:
  InducedSubgraphError(const std::string& what, int vertex) : std::runtime_error(what), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

// Induced Hoffman subgraph on `keep`; kept vertices are renumbered in
// ascending id order, so slim vertices still precede fat ones.
inline HoffmanGraph induced_hoffman_subgraph(const HoffmanGraph& g, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  int slim = 0;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int v = keep[i];
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("induced_hoffman_subgraph: vertex out of range");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    if (g.is_slim(v)) ++slim;
  }
  std::vector<VertexPair> edges;
  for (auto [a, b] : g.normalized_edges()) {
    const int ia = index[static_cast<std::size_t>(a)];
    const int ib = index[static_cast<std::size_t>(b)];
    if (ia >= 0 && ib >= 0) edges.emplace_back(ia, ib);
  }
  HoffmanGraph h(slim, static_cast<int>(keep.size()) - slim, std::move(edges));
  for (int f = h.slim_count(); f < h.vertex_count(); ++f)
    if (h.slim_neighbors(f) == 0)
      throw InducedSubgraphError("induced_hoffman_subgraph: fat vertex " + std::to_string(keep[static_cast<std::size_t>(f)]) +
                                     " has no slim neighbor in the kept set",
                                 keep[static_cast<std::size_t>(f)]);
  return h;
}

inline HoffmanGraph slim_subgraph(const HoffmanGraph& g) {
  std::vector<int> keep(static_cast<std::size_t>(g.slim_count()));
  for (int i = 0; i < g.slim_count(); ++i) keep[static_cast<std::size_t>(i)] = i;
  return induced_hoffman_subgraph(g, keep);
}

// Slim vertices `slims` together with all their fat neighbors.
inline HoffmanGraph closed_slim_subgraph(const HoffmanGraph& g, Mask slims) {
  Mask keep = slims;
  for_each_bit(slims, [&](int x) { keep |= g.fat_neighbors(x); });
  std::vector<int> ids;
  for_each_bit(keep, [&](int v) { ids.push_back(v); });
  return induced_hoffman_subgraph(g, ids);
}

// Relabels vertices: vertex v becomes perm[v]. perm must map slim to slim.
inline HoffmanGraph permute(const HoffmanGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw std::invalid_argument("permute: wrong permutation size");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_slim(v) != (perm[static_cast<std::size_t>(v)] < g.slim_count()))
      throw std::invalid_argument("permute: permutation mixes slim and fat vertices");
  std::vector<VertexPair> edges;
  for (auto [a, b] : g.normalized_edges())
    edges.push_back(ordered_pair(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]));
  std::sort(edges.begin(), edges.end());
  return HoffmanGraph(g.slim_count(), g.fat_count(), std::move(edges));
}

// Adds a fat vertex adjacent to the given slim vertices.
inline HoffmanGraph add_fat_vertex(const HoffmanGraph& g, Mask slim_neighbors) {
  std::vector<VertexPair> edges = g.normalized_edges();
  const int f = g.vertex_count();
  for_each_bit(slim_neighbors, [&](int x) { edges.emplace_back(x, f); });
  return HoffmanGraph(g.slim_count(), g.fat_count() + 1, std::move(edges));
}

// Builds a graph from slim adjacency and, for each fat vertex, its slim neighborhood.
inline HoffmanGraph hoffman_from_masks(int slim_count, const std::vector<VertexPair>& slim_edges,
                                       const std::vector<Mask>& fat_neighborhoods) {
  std::vector<VertexPair> edges;
  for (auto [a, b] : slim_edges) edges.push_back(ordered_pair(a, b));
  for (std::size_t i = 0; i < fat_neighborhoods.size(); ++i) {
    const int f = slim_count + static_cast<int>(i);
    for_each_bit(fat_neighborhoods[i], [&](int x) { edges.emplace_back(x, f); });
  }
  std::sort(edges.begin(), edges.end());
  return HoffmanGraph(slim_count, static_cast<int>(fat_neighborhoods.size()), std::move(edges));
}

// ---------------------------------------------------------------------------
// EdgeSignedGraph

class EdgeSignedGraph {
 public:
  EdgeSignedGraph() = default;
  EdgeSignedGraph(int n, std::vector<VertexPair> plus, std::vector<VertexPair> minus) : n_(n) {
    if (n < 0) throw std::invalid_argument("EdgeSignedGraph: negative vertex count");
    if (n > kMaxVertices) throw std::invalid_argument("EdgeSignedGraph: more than 64 vertices");
    plus_mask_.assign(static_cast<std::size_t>(n), 0);
    minus_mask_.assign(static_cast<std::size_t>(n), 0);
    auto load = [&](std::vector<VertexPair>& edges, std::vector<Mask>& mask) {
      for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
          throw std::invalid_argument("EdgeSignedGraph: edge {" + std::to_string(a) + "," + std::to_string(b) +
                                      "} out of range");
        if (a == b) throw std::invalid_argument("EdgeSignedGraph: loop at " + std::to_string(a));
        if (a > b) std::swap(a, b);
        mask[static_cast<std::size_t>(a)] |= bit(b);
        mask[static_cast<std::size_t>(b)] |= bit(a);
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    };
    load(plus, plus_mask_);
    load(minus, minus_mask_);
    for (auto [a, b] : plus)
      if ((minus_mask_[static_cast<std::size_t>(a)] >> b) & 1)
        throw std::invalid_argument("EdgeSignedGraph: pair {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} is both (+) and (-)");
    plus_ = std::move(plus);
    minus_ = std::move(minus);
  }

  int vertex_count() const { return n_; }
  const std::vector<VertexPair>& plus_edges() const { return plus_; }
  const std::vector<VertexPair>& minus_edges() const { return minus_; }

  // +1, -1 or 0.
  int sign(int u, int v) const {
    if ((plus_mask_[static_cast<std::size_t>(u)] >> v) & 1) return 1;
    if ((minus_mask_[static_cast<std::size_t>(u)] >> v) & 1) return -1;
    return 0;
  }
  Mask plus_neighbors(int v) const { return plus_mask_[static_cast<std::size_t>(v)]; }
  Mask minus_neighbors(int v) const { return minus_mask_[static_cast<std::size_t>(v)]; }
  Mask neighbors(int v) const { return plus_neighbors(v) | minus_neighbors(v); }

  friend bool operator==(const EdgeSignedGraph& x, const EdgeSignedGraph& y) {
    return x.n_ == y.n_ && x.plus_ == y.plus_ && x.minus_ == y.minus_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> plus_, minus_;
  std::vector<Mask> plus_mask_, minus_mask_;
};

// Builds a signed graph from a symmetric sign function over pairs u < v.
template <typename SignFn>
EdgeSignedGraph signed_graph_from(int n, SignFn sign) {
  std::vector<VertexPair> plus, minus;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int s = sign(u, v);
      if (s > 0) plus.emplace_back(u, v);
      else if (s < 0) minus.emplace_back(u, v);
    }
  return EdgeSignedGraph(n, std::move(plus), std::move(minus));
}

inline EdgeSignedGraph induced_signed_subgraph(const EdgeSignedGraph& s, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= s.vertex_count()) throw std::invalid_argument("induced_signed_subgraph: vertex out of range");
  return signed_graph_from(static_cast<int>(keep.size()), [&](int i, int j) {
    return s.sign(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  });
}

// Vertex v becomes perm[v].
inline EdgeSignedGraph permute(const EdgeSignedGraph& s, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != s.vertex_count()) throw std::invalid_argument("permute: wrong permutation size");
  std::vector<int> inverse(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) inverse[static_cast<std::size_t>(perm[v])] = static_cast<int>(v);
  return signed_graph_from(s.vertex_count(), [&](int i, int j) {
    return s.sign(inverse[static_cast<std::size_t>(i)], inverse[static_cast<std::size_t>(j)]);
  });
}

// Appends a vertex whose sign towards vertex i is signs[i].
inline EdgeSignedGraph extend_signed(const EdgeSignedGraph& s, const std::vector<int>& signs) {
  const int n = s.vertex_count();
  return signed_graph_from(n + 1, [&](int u, int v) { return v == n ? signs[static_cast<std::size_t>(u)] : s.sign(u, v); });
}

inline bool is_connected_signed(const EdgeSignedGraph& s) {
  const int n = s.vertex_count();
  if (n == 0) return false;
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= s.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return popcount(seen) == n;
}

// Connected components as vertex masks, ordered by smallest vertex.
inline std::vector<Mask> signed_components(const EdgeSignedGraph& s) {
  std::vector<Mask> comps;
  Mask done = 0;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if ((done >> v) & 1) continue;
    Mask seen = bit(v), frontier = bit(v);
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int u) { next |= s.neighbors(u); });
      frontier = next & ~seen;
      seen |= next;
    }
    comps.push_back(seen);
    done |= seen;
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Catalog

// Q(p,q,r): an all-(+) clique on r vertices, p pendant (+)-vertices attached to
// the first p clique vertices and q pendant (-)-vertices attached to the next q.
// Vertex order: clique, then (+)-pendants, then (-)-pendants.
inline EdgeSignedGraph make_q(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("make_q: negative parameter");
  if (p + q > r) throw std::invalid_argument("make_q: requires p + q <= r");
  std::vector<VertexPair> plus, minus;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) plus.emplace_back(i, j);
  for (int i = 0; i < p; ++i) plus.emplace_back(i, r + i);
  for (int i = 0; i < q; ++i) minus.emplace_back(p + i, r + p + i);
  return EdgeSignedGraph(p + q + r, std::move(plus), std::move(minus));
}

namespace catalog {

inline HoffmanGraph h_i() { return HoffmanGraph(1, 1, {{0, 1}}); }
inline HoffmanGraph h_ii() { return HoffmanGraph(1, 2, {{0, 1}, {0, 2}}); }
inline HoffmanGraph h_iii() { return HoffmanGraph(2, 1, {{0, 2}, {1, 2}}); }
inline HoffmanGraph h_iv() { return HoffmanGraph(2, 2, {{0, 1}, {0, 2}, {1, 3}}); }
// Slim edge {0,1}; vertex 0 has two private fats, vertex 1 one.
inline HoffmanGraph h_xvi() { return HoffmanGraph(2, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 4}}); }
// Non-adjacent slims sharing fat 2; vertex 0 also has private fat 3.
inline HoffmanGraph h_xvii() { return HoffmanGraph(2, 2, {{0, 2}, {0, 3}, {1, 2}}); }

inline HoffmanGraph k1t(int t) {
  if (t < 0) throw std::invalid_argument("K1T: requires t >= 0");
  std::vector<VertexPair> edges;
  for (int i = 1; i <= t; ++i) edges.emplace_back(0, i);
  return HoffmanGraph(1, t, std::move(edges));
}

inline EdgeSignedGraph t1() { return EdgeSignedGraph(3, {{0, 1}}, {{0, 2}, {1, 2}}); }
inline EdgeSignedGraph t2() { return EdgeSignedGraph(3, {{0, 2}, {1, 2}}, {{0, 1}}); }
inline EdgeSignedGraph s11() { return EdgeSignedGraph(1, {}, {}); }
inline EdgeSignedGraph s21() { return EdgeSignedGraph(2, {{0, 1}}, {}); }
inline EdgeSignedGraph s22() { return EdgeSignedGraph(2, {}, {{0, 1}}); }

using Entry = std::variant<HoffmanGraph, EdgeSignedGraph>;

inline std::vector<std::string> names() {
  return {"H_I", "H_II", "H_III", "H_IV", "H_XVI", "H_XVII", "K1T(t)", "Q(p,q,r)", "T1", "T2", "S11", "S21", "S22"};
}

namespace detail {
inline std::vector<int> parse_arguments(std::string_view name, std::string_view prefix, std::size_t count) {
  const std::string bad = "catalog: malformed name '" + std::string(name) + "'";
  if (name.size() < prefix.size() + 2 || name.substr(0, prefix.size()) != prefix || name[prefix.size()] != '(' ||
      name.back() != ')')
    throw std::invalid_argument(bad);
  std::string_view body = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string_view tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument(bad);
    out.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) throw std::invalid_argument(bad);
  return out;
}
}  // namespace detail

inline Entry lookup(std::string_view name) {
  if (name == "H_I") return h_i();
  if (name == "H_II") return h_ii();
  if (name == "H_III") return h_iii();
  if (name == "H_IV") return h_iv();
  if (name == "H_XVI") return h_xvi();
  if (name == "H_XVII") return h_xvii();
  if (name == "T1") return t1();
  if (name == "T2") return t2();
  if (name == "S11") return s11();
  if (name == "S21") return s21();
  if (name == "S22") return s22();
  if (name.starts_with("K1T")) return k1t(detail::parse_arguments(name, "K1T", 1)[0]);
  if (name.starts_with("Q")) {
    const auto a = detail::parse_arguments(name, "Q", 3);
    return make_q(a[0], a[1], a[2]);
  }
  throw std::invalid_argument("catalog: unknown name '" + std::string(name) + "'");
}

}  // namespace catalog
}  // namespace hoffman
