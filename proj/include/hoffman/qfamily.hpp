#pragma once

// Recognition of the signed graphs make_q(p, q, r).

#include <array>
#include <optional>
#include <vector>

#include "hoffman/iso.hpp"
#include "hoffman/model.hpp"

namespace hoffman {

// Where the parts of Q(p,q,r) sit inside a graph isomorphic to it:
// plus_pendants[i] hangs off clique[i], minus_pendants[j] off clique[p + j].
struct QLayout {
  int p = 0, q = 0, r = 0;
  std::vector<int> clique;
  std::vector<int> plus_pendants;
  std::vector<int> minus_pendants;
};

// Parameters (p, q, r) with p + q + r = n that match the edge counts of s,
// largest r first. Q(p,q,r) has C(r,2) + p (+)-edges and q (-)-edges.
inline std::vector<std::array<int, 3>> q_parameter_candidates(const EdgeSignedGraph& s) {
  const int n = s.vertex_count();
  const int q = static_cast<int>(s.minus_edges().size());
  const int plus = static_cast<int>(s.plus_edges().size());
  std::vector<std::array<int, 3>> out;
  for (int r = n - q; r >= 0; --r) {
    const int p = n - q - r;
    if (p + q > r) break;
    if (r * (r - 1) / 2 + p == plus) out.push_back({p, q, r});
  }
  return out;
}

// The layout of s as some Q(p,q,r), or nullopt. When several parameter
// triples fit (Q(1,0,1) and Q(0,0,2) are both one (+)-edge) the largest r wins.
inline std::optional<QLayout> q_layout(const EdgeSignedGraph& s) {
  if (s.vertex_count() == 0) return QLayout{};
  for (int v = 0; v < s.vertex_count(); ++v)
    if (popcount(s.minus_neighbors(v)) > 1) return std::nullopt;
  const auto candidates = q_parameter_candidates(s);
  if (candidates.empty()) return std::nullopt;
  const CanonicalKey key = canonical_key(s);
  for (auto [p, q, r] : candidates) {
    const EdgeSignedGraph model = make_q(p, q, r);
    if (canonical_key(model) != key) continue;
    // Compose: model vertex -> canonical position -> vertex of s.
    const auto to_canon_model = canonical_permutation(model);
    const auto to_canon_s = canonical_permutation(s);
    std::vector<int> from_canon_s(to_canon_s.size());
    for (std::size_t v = 0; v < to_canon_s.size(); ++v) from_canon_s[static_cast<std::size_t>(to_canon_s[v])] = static_cast<int>(v);
    auto image = [&](int model_vertex) {
      return from_canon_s[static_cast<std::size_t>(to_canon_model[static_cast<std::size_t>(model_vertex)])];
    };
    QLayout layout{p, q, r, {}, {}, {}};
    for (int i = 0; i < r; ++i) layout.clique.push_back(image(i));
    for (int i = 0; i < p; ++i) layout.plus_pendants.push_back(image(r + i));
    for (int i = 0; i < q; ++i) layout.minus_pendants.push_back(image(r + p + i));
    return layout;
  }
  return std::nullopt;
}

// (p, q, r) when s is isomorphic to make_q(p, q, r).
inline std::optional<std::array<int, 3>> is_q_graph(const EdgeSignedGraph& s) {
  auto layout = q_layout(s);
  if (!layout) return std::nullopt;
  return std::array<int, 3>{layout->p, layout->q, layout->r};
}

// True when layout really describes s.
inline bool layout_matches(const EdgeSignedGraph& s, const QLayout& l) {
  const int n = s.vertex_count();
  if (static_cast<int>(l.clique.size()) != l.r || static_cast<int>(l.plus_pendants.size()) != l.p ||
      static_cast<int>(l.minus_pendants.size()) != l.q || l.p + l.q > l.r || l.p + l.q + l.r != n)
    return false;
  std::vector<int> all = l.clique;
  all.insert(all.end(), l.plus_pendants.begin(), l.plus_pendants.end());
  all.insert(all.end(), l.minus_pendants.begin(), l.minus_pendants.end());
  Mask seen = 0;
  for (int v : all) {
    if (v < 0 || v >= n || ((seen >> v) & 1)) return false;
    seen |= bit(v);
  }
  const EdgeSignedGraph model = make_q(l.p, l.q, l.r);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (model.sign(i, j) != s.sign(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)])) return false;
  return true;
}

}  // namespace hoffman
