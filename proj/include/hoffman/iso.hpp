#pragma once

// Canonical keys, isomorphism tests and induced-subgraph embedding for
// vertex-colored graphs with edge labels. Signed graphs use one color and
// labels {+, -}; Hoffman graphs use colors {slim, fat} and a single label.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoffman/model.hpp"

namespace hoffman {

class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
      s += digits[b >> 4];
      s += digits[b & 15];
    }
    return s;
  }

  static CanonicalKey from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("CanonicalKey: odd-length hex string");
    auto nibble = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      throw std::invalid_argument("CanonicalKey: invalid hex digit");
    };
    std::vector<std::uint8_t> b(hex.size() / 2);
    for (std::size_t i = 0; i < b.size(); ++i)
      b[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]));
    return CanonicalKey(std::move(b));
  }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : k.bytes()) h = (h ^ b) * 1099511628211ull;
    return h;
  }
};

// Vertex colors and a symmetric label matrix (0 = no edge).
struct ColoredGraph {
  int n = 0;
  std::vector<std::uint8_t> color;
  std::vector<std::uint8_t> label;

  std::uint8_t at(int u, int v) const { return label[static_cast<std::size_t>(u) * n + v]; }
};

inline ColoredGraph to_colored(const EdgeSignedGraph& s) {
  ColoredGraph c{s.vertex_count(), std::vector<std::uint8_t>(static_cast<std::size_t>(s.vertex_count()), 0),
                 std::vector<std::uint8_t>(static_cast<std::size_t>(s.vertex_count()) * s.vertex_count(), 0)};
  for (auto [a, b] : s.plus_edges()) c.label[static_cast<std::size_t>(a) * c.n + b] = c.label[static_cast<std::size_t>(b) * c.n + a] = 1;
  for (auto [a, b] : s.minus_edges()) c.label[static_cast<std::size_t>(a) * c.n + b] = c.label[static_cast<std::size_t>(b) * c.n + a] = 2;
  return c;
}

inline ColoredGraph to_colored(const HoffmanGraph& g) {
  const int n = g.vertex_count();
  ColoredGraph c{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
                 std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int v = g.slim_count(); v < n; ++v) c.color[static_cast<std::size_t>(v)] = 1;
  for (auto [a, b] : g.normalized_edges())
    if (a != b) c.label[static_cast<std::size_t>(a) * n + b] = c.label[static_cast<std::size_t>(b) * n + a] = 1;
  return c;
}

namespace detail {

inline constexpr int kLabels = 3;

// Ordered partition of the vertices into cells.
using Partition = std::vector<std::vector<int>>;

// Refines to the coarsest equitable partition below p. New cells are ordered
// by an isomorphism-invariant signature, so the result commutes with relabeling.
inline void refine(const ColoredGraph& g, Partition& p) {
  std::vector<int> cell_of(static_cast<std::size_t>(g.n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < p.size(); ++c)
      for (int v : p[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    const std::size_t width = p.size() * kLabels;
    Partition next;
    next.reserve(p.size());
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::uint8_t>, int>> sig;
      sig.reserve(cell.size());
      for (int v : cell) {
        std::vector<std::uint8_t> counts(width, 0);
        for (int u = 0; u < g.n; ++u) {
          const std::uint8_t l = g.at(v, u);
          if (l != 0 && u != v) ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)]) * kLabels + l];
        }
        sig.emplace_back(std::move(counts), v);
      }
      std::sort(sig.begin(), sig.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= sig.size(); ++i) {
        if (i == sig.size() || sig[i].first != sig[start].first) {
          std::vector<int> piece;
          for (std::size_t k = start; k < i; ++k) piece.push_back(sig[k].second);
          next.push_back(std::move(piece));
          start = i;
        }
      }
    }
    if (next.size() != p.size()) changed = true;
    p = std::move(next);
  }
}

inline std::vector<std::uint8_t> leaf_code(const ColoredGraph& g, const Partition& p) {
  std::vector<std::uint8_t> code;
  code.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.n));
  for (const auto& cell : p) order.push_back(cell[0]);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) code.push_back(g.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
  return code;
}

inline bool are_twins(const ColoredGraph& g, int v, int w) {
  for (int u = 0; u < g.n; ++u)
    if (u != v && u != w && g.at(v, u) != g.at(w, u)) return false;
  return true;
}

struct CanonSearch {
  const ColoredGraph& g;
  std::vector<std::uint8_t> best;
  Partition best_partition;
  bool have = false;

  void search(Partition p) {
    refine(g, p);
    std::size_t target = p.size();
    for (std::size_t c = 0; c < p.size(); ++c)
      if (p[c].size() > 1) {
        target = c;
        break;
      }
    if (target == p.size()) {
      auto code = leaf_code(g, p);
      if (!have || code < best) {
        best = std::move(code);
        best_partition = p;
        have = true;
      }
      return;
    }
    const std::vector<int> cell = p[target];
    std::vector<int> tried;
    for (int v : cell) {
      // Swapping twins fixes every individualized vertex, so their subtrees agree.
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return are_twins(g, v, w); })) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cell)
            if (u != v) rest.push_back(u);
          child.push_back(std::move(rest));
        } else {
          child.push_back(p[c]);
        }
      }
      search(std::move(child));
    }
  }
};

// Canonical ordering of the vertices: position i holds the original vertex.
inline std::vector<int> canonical_order(const ColoredGraph& g, std::vector<std::uint8_t>* code) {
  Partition start;
  std::uint8_t max_color = 0;
  for (auto c : g.color) max_color = std::max(max_color, c);
  for (int c = 0; c <= max_color; ++c) {
    std::vector<int> cell;
    for (int v = 0; v < g.n; ++v)
      if (g.color[static_cast<std::size_t>(v)] == c) cell.push_back(v);
    if (!cell.empty()) start.push_back(std::move(cell));
  }
  CanonSearch s{g, {}, {}, false};
  if (g.n > 0) s.search(std::move(start));
  std::vector<int> order;
  for (const auto& cell : s.best_partition) order.push_back(cell[0]);
  if (code) *code = std::move(s.best);
  return order;
}

inline CanonicalKey make_key(std::uint8_t kind, const ColoredGraph& g) {
  std::vector<std::uint8_t> code;
  canonical_order(g, &code);
  std::vector<std::uint8_t> bytes{kind, static_cast<std::uint8_t>(g.n)};
  std::vector<int> color_counts(2, 0);
  for (auto c : g.color) ++color_counts[c];
  bytes.push_back(static_cast<std::uint8_t>(color_counts[0]));
  bytes.push_back(static_cast<std::uint8_t>(color_counts[1]));
  // Pack the pair codes two bits each.
  std::uint8_t acc = 0;
  int filled = 0;
  for (auto c : code) {
    acc = static_cast<std::uint8_t>(acc | (c << (6 - 2 * filled)));
    if (++filled == 4) {
      bytes.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled) bytes.push_back(acc);
  return CanonicalKey(std::move(bytes));
}

}  // namespace detail

inline CanonicalKey canonical_key(const EdgeSignedGraph& s) { return detail::make_key(0x53, to_colored(s)); }
inline CanonicalKey canonical_key(const HoffmanGraph& g) {
  require_valid(g, "canonical_key");
  return detail::make_key(0x48, to_colored(g));
}

// Relabeling that sends each vertex to its canonical position.
inline std::vector<int> canonical_permutation(const EdgeSignedGraph& s) {
  const auto order = detail::canonical_order(to_colored(s), nullptr);
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return perm;
}
inline std::vector<int> canonical_permutation(const HoffmanGraph& g) {
  const auto order = detail::canonical_order(to_colored(g), nullptr);
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return perm;
}

// The canonical representative: equal for isomorphic inputs.
inline EdgeSignedGraph canonical_form(const EdgeSignedGraph& s) { return permute(s, canonical_permutation(s)); }
inline HoffmanGraph canonical_form(const HoffmanGraph& g) { return permute(g, canonical_permutation(g)); }

inline bool is_isomorphic(const EdgeSignedGraph& x, const EdgeSignedGraph& y) {
  return x.vertex_count() == y.vertex_count() && canonical_key(x) == canonical_key(y);
}
inline bool is_isomorphic(const HoffmanGraph& x, const HoffmanGraph& y) {
  return x.slim_count() == y.slim_count() && x.fat_count() == y.fat_count() && canonical_key(x) == canonical_key(y);
}

namespace detail {

inline std::optional<std::vector<int>> find_embedding(const ColoredGraph& host, const ColoredGraph& pat) {
  if (pat.n == 0) return std::vector<int>{};
  if (pat.n > host.n) return std::nullopt;
  auto label_degrees = [](const ColoredGraph& g, int v) {
    std::array<int, kLabels> d{};
    for (int u = 0; u < g.n; ++u)
      if (u != v) ++d[g.at(v, u)];
    return d;
  };
  // Pattern order: greedy, each next vertex maximizing links to those already placed.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(pat.n), false);
  for (int k = 0; k < pat.n; ++k) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < pat.n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int links = 0, deg = 0;
      for (int u = 0; u < pat.n; ++u) {
        if (u == v || pat.at(v, u) == 0) continue;
        ++deg;
        if (placed[static_cast<std::size_t>(u)]) ++links;
      }
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  std::vector<std::array<int, kLabels>> hdeg(static_cast<std::size_t>(host.n)), pdeg(static_cast<std::size_t>(pat.n));
  for (int v = 0; v < host.n; ++v) hdeg[static_cast<std::size_t>(v)] = label_degrees(host, v);
  for (int v = 0; v < pat.n; ++v) pdeg[static_cast<std::size_t>(v)] = label_degrees(pat, v);

  std::vector<int> map(static_cast<std::size_t>(pat.n), -1);
  std::vector<bool> used(static_cast<std::size_t>(host.n), false);
  std::function<bool(int)> extend = [&](int k) {
    if (k == pat.n) return true;
    const int pv = order[static_cast<std::size_t>(k)];
    for (int hv = 0; hv < host.n; ++hv) {
      if (used[static_cast<std::size_t>(hv)] || host.color[static_cast<std::size_t>(hv)] != pat.color[static_cast<std::size_t>(pv)]) continue;
      bool ok = true;
      for (int l = 1; l < kLabels && ok; ++l)
        if (hdeg[static_cast<std::size_t>(hv)][static_cast<std::size_t>(l)] < pdeg[static_cast<std::size_t>(pv)][static_cast<std::size_t>(l)]) ok = false;
      for (int j = 0; j < k && ok; ++j) {
        const int pu = order[static_cast<std::size_t>(j)];
        if (pat.at(pv, pu) != host.at(hv, map[static_cast<std::size_t>(pu)])) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(pv)] = hv;
      used[static_cast<std::size_t>(hv)] = true;
      if (extend(k + 1)) return true;
      used[static_cast<std::size_t>(hv)] = false;
    }
    map[static_cast<std::size_t>(pv)] = -1;
    return false;
  };
  if (extend(0)) return map;
  return std::nullopt;
}

}  // namespace detail

// Embedding pattern vertex -> host vertex whose image induces a copy of the
// pattern, or nullopt.
inline std::optional<std::vector<int>> contains_induced(const EdgeSignedGraph& host, const EdgeSignedGraph& pattern) {
  return detail::find_embedding(to_colored(host), to_colored(pattern));
}

// Label-preserving induced embedding. The image is an induced Hoffman subgraph
// (every pattern fat keeps a slim neighbor since the pattern is valid).
inline std::optional<std::vector<int>> contains_induced(const HoffmanGraph& host, const HoffmanGraph& pattern) {
  return detail::find_embedding(to_colored(host), to_colored(pattern));
}

}  // namespace hoffman
