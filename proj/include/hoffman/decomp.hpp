#pragma once

// Decompositions of Hoffman graphs, reducibility witnesses and line-graph
// style witnesses over a family of Hoffman graphs.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hoffman/algebra.hpp"
#include "hoffman/format.hpp"
#include "hoffman/iso.hpp"
#include "hoffman/model.hpp"
#include "hoffman/qfamily.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman {

struct Decomposition {
  HoffmanGraph parent;
  std::vector<std::vector<int>> parts;
};

struct DecompositionViolation {
  int condition = 0;  // 1..4
  std::string message;
};

inline HoffmanGraph part_graph(const Decomposition& d, std::size_t i) {
  return induced_hoffman_subgraph(d.parent, d.parts.at(i));
}

inline Mask part_mask(const std::vector<int>& part) {
  Mask m = 0;
  for (int v : part) m |= bit(v);
  return m;
}

// nullopt when all four decomposition conditions hold; otherwise the first
// failing condition. Throws if a part does not induce a valid Hoffman graph.
inline std::optional<DecompositionViolation> validate_decomposition(const Decomposition& d) {
  const HoffmanGraph& g = d.parent;
  require_valid(g, "validate_decomposition");
  std::vector<Mask> masks;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    for (int v : d.parts[i])
      if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("validate_decomposition: vertex out of range");
    part_graph(d, i);
    masks.push_back(part_mask(d.parts[i]));
  }
  const Mask all = g.slim_mask() | g.fat_mask();
  Mask covered = 0;
  for (Mask m : masks) covered |= m;
  if (covered != all) {
    const int v = __builtin_ctzll(all & ~covered);
    return DecompositionViolation{1, "vertex " + std::to_string(v) + " lies in no part"};
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (Mask both = masks[i] & masks[j] & g.slim_mask())
        return DecompositionViolation{2, "slim vertex " + std::to_string(__builtin_ctzll(both)) + " lies in parts " +
                                             std::to_string(i) + " and " + std::to_string(j)};
  for (std::size_t i = 0; i < masks.size(); ++i) {
    Mask missing = 0;
    for_each_bit(masks[i] & g.slim_mask(), [&](int x) { missing |= g.fat_neighbors(x) & ~masks[i]; });
    if (missing)
      return DecompositionViolation{3, "fat vertex " + std::to_string(__builtin_ctzll(missing)) +
                                           " is adjacent to a slim vertex of part " + std::to_string(i) +
                                           " but not in it"};
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      std::optional<DecompositionViolation> bad;
      for_each_bit(masks[i] & g.slim_mask(), [&](int x) {
        for_each_bit(masks[j] & g.slim_mask(), [&](int y) {
          if (bad) return;
          const int c = popcount(g.fat_neighbors(x) & g.fat_neighbors(y));
          if (c > 1 || (c == 1) != g.adjacent(x, y))
            bad = DecompositionViolation{4, "slim vertices " + std::to_string(x) + " and " + std::to_string(y) + " share " +
                                                 std::to_string(c) + " fat neighbors and are " +
                                                 (g.adjacent(x, y) ? "adjacent" : "non-adjacent")};
        });
      });
      if (bad) return bad;
    }
  return std::nullopt;
}

// Slim vertices that every decomposition keeps in one part: special graph
// edges, plus pairs with two or more common fat neighbors.
inline std::vector<Mask> inseparable_components(const HoffmanGraph& g) {
  const EdgeSignedGraph s = special_graph(g);
  const EdgeSignedGraph joined = signed_graph_from(g.slim_count(), [&](int x, int y) {
    return s.sign(x, y) != 0 || popcount(g.fat_neighbors(x) & g.fat_neighbors(y)) > 1 ? 1 : 0;
  });
  return signed_components(joined);
}

// The finest decomposition: one part per inseparable component, each with its
// fat neighbors; nullopt when g is indecomposable. Without slim pairs sharing
// two fats the components are those of the special graph.
inline std::optional<Decomposition> split_by_special_components(const HoffmanGraph& g) {
  const auto comps = inseparable_components(g);
  if (comps.size() <= 1) return std::nullopt;
  Decomposition d{g, {}};
  for (Mask c : comps) {
    Mask keep = c;
    for_each_bit(c, [&](int x) { keep |= g.fat_neighbors(x); });
    std::vector<int> part;
    for_each_bit(keep, [&](int v) { part.push_back(v); });
    d.parts.push_back(std::move(part));
  }
  if (auto v = validate_decomposition(d))
    throw std::logic_error("split_by_special_components: component split is not a decomposition: " + v->message);
  return d;
}

// Exact comparison of the smallest eigenvalues of two symmetric matrices.
inline std::strong_ordering compare_lambda_min(const IntMatrix& a, const IntMatrix& b) {
  return compare_smallest_roots(char_poly(a), char_poly(b));
}

// Smallest eigenvalue of the parent equals the minimum over the parts.
inline bool lambda_min_of_sum_check(const Decomposition& d) {
  std::optional<IntMatrix> lowest;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const HoffmanGraph h = part_graph(d, i);
    if (h.slim_count() == 0) continue;
    IntMatrix b = b_matrix(h);
    if (!lowest || compare_lambda_min(b, *lowest) == std::strong_ordering::less) lowest = std::move(b);
  }
  if (d.parent.slim_count() == 0) return !lowest;
  if (!lowest) return false;
  return compare_lambda_min(b_matrix(d.parent), *lowest) == std::strong_ordering::equal;
}

struct Reduction {
  HoffmanGraph container;
  Decomposition decomposition;
};

// One new fat vertex per edge of a slim graph; part x is x with its fats.
inline Reduction reduce_by_degree(const HoffmanGraph& g) {
  require_valid(g, "reduce_by_degree");
  if (g.fat_count() != 0) throw std::invalid_argument("reduce_by_degree: graph has fat vertices");
  if (g.slim_count() < 2) throw std::invalid_argument("reduce_by_degree: needs at least two vertices");
  const auto slim_edges = g.normalized_edges();
  std::vector<Mask> fats;
  for (auto [a, b] : slim_edges) fats.push_back(bit(a) | bit(b));
  HoffmanGraph container = hoffman_from_masks(g.slim_count(), slim_edges, fats);
  Decomposition d{container, {}};
  for (int x = 0; x < g.slim_count(); ++x) {
    std::vector<int> part{x};
    for_each_bit(container.fat_neighbors(x), [&](int f) { part.push_back(f); });
    d.parts.push_back(std::move(part));
  }
  if (auto v = validate_decomposition(d)) throw std::logic_error("reduce_by_degree: " + v->message);
  return {container, d};
}

// Adds one fat vertex on the clique of a Q-shaped special graph; part i is
// clique vertex i with its pendant (if any) and their fats.
inline Reduction reduce_q_realization(const HoffmanGraph& g, const QLayout& layout) {
  require_valid(g, "reduce_q_realization");
  for (int x = 0; x < g.slim_count(); ++x)
    if (g.fat_degree(x) != 1)
      throw std::invalid_argument("reduce_q_realization: slim vertex " + std::to_string(x) + " does not have exactly one fat neighbor");
  if (!layout_matches(special_graph(g), layout))
    throw std::invalid_argument("reduce_q_realization: layout does not describe the special graph");
  Mask clique = 0;
  for (int v : layout.clique) clique |= bit(v);
  const HoffmanGraph container = add_fat_vertex(g, clique);
  Decomposition d{container, {}};
  for (int i = 0; i < layout.r; ++i) {
    Mask slims = bit(layout.clique[static_cast<std::size_t>(i)]);
    if (i < layout.p) slims |= bit(layout.plus_pendants[static_cast<std::size_t>(i)]);
    else if (i < layout.p + layout.q) slims |= bit(layout.minus_pendants[static_cast<std::size_t>(i - layout.p)]);
    Mask keep = slims;
    for_each_bit(slims, [&](int x) { keep |= container.fat_neighbors(x); });
    std::vector<int> part;
    for_each_bit(keep, [&](int v) { part.push_back(v); });
    d.parts.push_back(std::move(part));
  }
  if (auto v = validate_decomposition(d)) throw std::logic_error("reduce_q_realization: " + v->message);
  return {container, d};
}

namespace detail {

// Exact partitions of a set of pairs (x, y) into complete bipartite blocks A x B.
inline void biclique_partitions(std::vector<VertexPair> pairs,
                                const std::function<bool(const std::vector<std::pair<Mask, Mask>>&)>& visit,
                                std::vector<std::pair<Mask, Mask>>& chosen, bool& stop) {
  if (stop) return;
  if (pairs.empty()) {
    if (visit(chosen)) stop = true;
    return;
  }
  std::sort(pairs.begin(), pairs.end());
  const auto [x, y] = pairs.front();
  auto has = [&](int a, int b) { return std::binary_search(pairs.begin(), pairs.end(), VertexPair{a, b}); };
  std::vector<int> xs, ys;
  for (auto [a, b] : pairs) {
    if (a != x && has(a, y) && std::find(xs.begin(), xs.end(), a) == xs.end()) xs.push_back(a);
    if (b != y && has(x, b) && std::find(ys.begin(), ys.end(), b) == ys.end()) ys.push_back(b);
  }
  for (Mask ma = 0; ma < bit(static_cast<int>(xs.size())) && !stop; ++ma) {
    std::vector<int> left{x};
    for (std::size_t i = 0; i < xs.size(); ++i)
      if ((ma >> i) & 1) left.push_back(xs[i]);
    std::vector<int> right_options;
    for (int b : ys)
      if (std::all_of(left.begin(), left.end(), [&](int a) { return has(a, b); })) right_options.push_back(b);
    for (Mask mb = 0; mb < bit(static_cast<int>(right_options.size())) && !stop; ++mb) {
      std::vector<int> right{y};
      for (std::size_t i = 0; i < right_options.size(); ++i)
        if ((mb >> i) & 1) right.push_back(right_options[i]);
      Mask lm = 0, rm = 0;
      for (int a : left) lm |= bit(a);
      for (int b : right) rm |= bit(b);
      std::vector<VertexPair> rest;
      for (auto e : pairs)
        if (!(((lm >> e.first) & 1) && ((rm >> e.second) & 1))) rest.push_back(e);
      chosen.emplace_back(lm, rm);
      biclique_partitions(std::move(rest), visit, chosen, stop);
      chosen.pop_back();
    }
  }
}

}  // namespace detail

// Searches for a graph containing g and a two-part decomposition of it with
// both parts at or above the threshold, each meeting the slim vertices of g.
// The search is complete: a containing graph can be cut down to the slim
// vertices of g, and only fat vertices seen by both sides matter, each of
// which must cover adjacent cross pairs that have no common fat yet.
inline std::optional<Reduction> find_reducibility_certificate(const HoffmanGraph& g, const Threshold& t) {
  require_valid(g, "find_reducibility_certificate");
  const int n = g.slim_count();
  if (n < 2) return std::nullopt;
  for (Mask side = 1; side < bit(n - 1); ++side) {
    const Mask x1 = side;
    const Mask x2 = g.slim_mask() & ~side;
    std::vector<VertexPair> need;
    bool ok = true;
    for_each_bit(x1, [&](int x) {
      for_each_bit(x2, [&](int y) {
        const int c = popcount(g.fat_neighbors(x) & g.fat_neighbors(y));
        if (c > 1 || (c == 1 && !g.adjacent(x, y))) ok = false;
        if (c == 0 && g.adjacent(x, y)) need.emplace_back(x, y);
      });
    });
    if (!ok) continue;
    std::optional<Reduction> found;
    std::vector<std::pair<Mask, Mask>> chosen;
    bool stop = false;
    detail::biclique_partitions(
        need,
        [&](const std::vector<std::pair<Mask, Mask>>& blocks) {
          HoffmanGraph h = g;
          for (auto [a, b] : blocks) h = add_fat_vertex(h, a | b);
          Decomposition d{h, {}};
          for (Mask side_mask : {x1, x2}) {
            Mask keep = side_mask;
            for_each_bit(side_mask, [&](int x) { keep |= h.fat_neighbors(x); });
            std::vector<int> part;
            for_each_bit(keep, [&](int v) { part.push_back(v); });
            if (!lambda_min_at_least(b_matrix(induced_hoffman_subgraph(h, part)), t)) return false;
            d.parts.push_back(std::move(part));
          }
          if (validate_decomposition(d)) return false;
          found = Reduction{h, d};
          return true;
        },
        chosen, stop);
    if (found) return found;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Witnesses over a family

struct FamilyMember {
  std::string name;
  HoffmanGraph graph;
  CanonicalKey key;
};

class Family {
 public:
  Family() = default;
  explicit Family(std::vector<std::pair<std::string, HoffmanGraph>> members) {
    for (auto& [name, g] : members) add(name, g);
  }

  void add(const std::string& name, const HoffmanGraph& g) {
    CanonicalKey k = canonical_key(g);
    for (const auto& m : members_)
      if (m.key == k) return;
    members_.push_back({name, g, std::move(k)});
    std::sort(members_.begin(), members_.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  }

  const std::vector<FamilyMember>& members() const { return members_; }
  const FamilyMember* find(const CanonicalKey& k) const {
    for (const auto& m : members_)
      if (m.key == k) return &m;
    return nullptr;
  }
  const FamilyMember* find_name(const std::string& name) const {
    for (const auto& m : members_)
      if (m.name == name) return &m;
    return nullptr;
  }

 private:
  std::vector<FamilyMember> members_;
};

struct HLineWitness {
  HoffmanGraph target;
  HoffmanGraph container;
  std::vector<int> embedding;  // target vertex -> container vertex
  Decomposition decomposition;
  std::vector<std::string> family_assignment;  // part index -> member name
  char route = 'a';                            // which search stage found it
};

struct WitnessCheck {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

inline WitnessCheck verify_hline_witness(const HLineWitness& w, const Family& family) {
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  if (validate_hoffman(w.target) || validate_hoffman(w.container)) return fail("invalid target or container");
  if (!(w.decomposition.parent == w.container)) return fail("decomposition is not of the container");
  if (static_cast<int>(w.embedding.size()) != w.target.vertex_count()) return fail("embedding has wrong size");
  Mask used = 0;
  for (int v = 0; v < w.target.vertex_count(); ++v) {
    const int image = w.embedding[static_cast<std::size_t>(v)];
    if (image < 0 || image >= w.container.vertex_count() || ((used >> image) & 1)) return fail("embedding is not injective");
    used |= bit(image);
    if (w.target.is_slim(v) != w.container.is_slim(image)) return fail("embedding does not preserve labels");
  }
  for (int u = 0; u < w.target.vertex_count(); ++u)
    for (int v = u + 1; v < w.target.vertex_count(); ++v)
      if (w.target.adjacent(u, v) != w.container.adjacent(w.embedding[static_cast<std::size_t>(u)], w.embedding[static_cast<std::size_t>(v)]))
        return fail("embedding is not induced at " + std::to_string(u) + "," + std::to_string(v));
  try {
    if (auto v = validate_decomposition(w.decomposition))
      return fail("decomposition violates condition " + std::to_string(v->condition) + ": " + v->message);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (w.family_assignment.size() != w.decomposition.parts.size()) return fail("family assignment has wrong size");
  for (std::size_t i = 0; i < w.decomposition.parts.size(); ++i) {
    const CanonicalKey k = canonical_key(part_graph(w.decomposition, i));
    const FamilyMember* m = family.find(k);
    if (!m) return fail("part " + std::to_string(i) + " is not isomorphic to a family member");
    if (m->name != w.family_assignment[i]) return fail("part " + std::to_string(i) + " is assigned the wrong member");
  }
  return {true, ""};
}

namespace detail {

// A container under construction: slim edges and fat neighborhoods over slim ids.
struct ContainerBuilder {
  int slims = 0;
  std::set<VertexPair> slim_edges;
  std::vector<std::set<int>> fats;
  std::vector<std::set<int>> part_slims;
  std::vector<std::set<int>> part_fats;

  bool adjacent(int x, int y) const { return slim_edges.count(ordered_pair(x, y)) > 0; }
  std::set<int> fats_of(int x) const {
    std::set<int> out;
    for (std::size_t f = 0; f < fats.size(); ++f)
      if (fats[f].count(x)) out.insert(static_cast<int>(f));
    return out;
  }
  int common(int x, int y) const {
    int c = 0;
    for (const auto& nb : fats) c += (nb.count(x) && nb.count(y)) ? 1 : 0;
    return c;
  }
  HoffmanGraph build() const {
    std::vector<VertexPair> edges(slim_edges.begin(), slim_edges.end());
    for (std::size_t f = 0; f < fats.size(); ++f)
      for (int x : fats[f]) edges.emplace_back(x, slims + static_cast<int>(f));
    std::sort(edges.begin(), edges.end());
    return HoffmanGraph(slims, static_cast<int>(fats.size()), std::move(edges));
  }
  std::vector<int> part_vertices(std::size_t i) const {
    std::vector<int> out(part_slims[i].begin(), part_slims[i].end());
    for (int f : part_fats[i]) out.push_back(slims + f);
    return out;
  }
};

inline ContainerBuilder builder_from(const HoffmanGraph& container, const std::vector<std::vector<int>>& parts) {
  ContainerBuilder b;
  b.slims = container.slim_count();
  for (auto [u, v] : container.normalized_edges())
    if (container.is_slim(u) && container.is_slim(v)) b.slim_edges.insert({u, v});
  b.fats.resize(static_cast<std::size_t>(container.fat_count()));
  for (int f = 0; f < container.fat_count(); ++f)
    for_each_bit(container.slim_neighbors(container.slim_count() + f), [&](int x) { b.fats[static_cast<std::size_t>(f)].insert(x); });
  for (const auto& part : parts) {
    std::set<int> s, fs;
    for (int v : part) {
      if (container.is_slim(v)) s.insert(v);
      else fs.insert(v - container.slim_count());
    }
    b.part_slims.push_back(std::move(s));
    b.part_fats.push_back(std::move(fs));
  }
  return b;
}

// Grows part i into a copy of `member`, given an embedding of the current
// part into it. Cross-part slim pairs that come to share one fat are joined;
// returns false if some pair would share two.
inline bool lift_part(ContainerBuilder& b, std::size_t i, const HoffmanGraph& part, const std::vector<int>& part_ids,
                      const HoffmanGraph& member, const std::vector<int>& embedding) {
  ContainerBuilder trial = b;
  // member vertex -> builder id (slim id, or fat index)
  std::vector<int> to_builder(static_cast<std::size_t>(member.vertex_count()), -1);
  for (int v = 0; v < part.vertex_count(); ++v) {
    const int id = part_ids[static_cast<std::size_t>(v)];
    to_builder[static_cast<std::size_t>(embedding[static_cast<std::size_t>(v)])] = part.is_slim(v) ? id : id - b.slims;
  }
  std::vector<int> fresh_slims;
  for (int m = 0; m < member.vertex_count(); ++m) {
    if (to_builder[static_cast<std::size_t>(m)] >= 0) continue;
    if (member.is_slim(m)) {
      to_builder[static_cast<std::size_t>(m)] = trial.slims++;
      fresh_slims.push_back(to_builder[static_cast<std::size_t>(m)]);
      trial.part_slims[i].insert(to_builder[static_cast<std::size_t>(m)]);
    } else {
      to_builder[static_cast<std::size_t>(m)] = static_cast<int>(trial.fats.size());
      trial.fats.emplace_back();
      trial.part_fats[i].insert(to_builder[static_cast<std::size_t>(m)]);
    }
  }
  if (fresh_slims.empty() && trial.fats.size() == b.fats.size()) return false;
  for (auto [u, v] : member.normalized_edges()) {
    const int bu = to_builder[static_cast<std::size_t>(u)];
    const int bv = to_builder[static_cast<std::size_t>(v)];
    if (member.is_slim(u) && member.is_slim(v)) trial.slim_edges.insert(ordered_pair(bu, bv));
    else if (member.is_slim(u)) trial.fats[static_cast<std::size_t>(bv)].insert(bu);
    else trial.fats[static_cast<std::size_t>(bu)].insert(bv);
  }
  for (int y : fresh_slims)
    for (std::size_t j = 0; j < trial.part_slims.size(); ++j) {
      if (j == i) continue;
      for (int z : trial.part_slims[j]) {
        const int c = trial.common(y, z);
        if (c > 1) return false;
        if (c == 1) trial.slim_edges.insert(ordered_pair(y, z));
      }
    }
  b = std::move(trial);
  return true;
}

// Turns a container and decomposition into a witness whose parts are all
// family members, growing parts as needed.
inline std::optional<HLineWitness> lift_to_family(const HoffmanGraph& target, const std::vector<int>& target_embedding,
                                                  const HoffmanGraph& container,
                                                  const std::vector<std::vector<int>>& parts, const Family& family,
                                                  char route) {
  ContainerBuilder b = builder_from(container, parts);
  std::vector<std::string> names(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // Current part as a Hoffman graph with ids in ascending builder order.
    HoffmanGraph current = b.build();
    std::vector<int> ids = b.part_vertices(i);
    HoffmanGraph part;
    try {
      part = induced_hoffman_subgraph(current, ids);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    std::sort(ids.begin(), ids.end());
    if (const FamilyMember* m = family.find(canonical_key(part))) {
      names[i] = m->name;
      continue;
    }
    bool lifted = false;
    for (const auto& m : family.members()) {
      if (m.graph.slim_count() < part.slim_count() || m.graph.fat_count() < part.fat_count()) continue;
      auto emb = contains_induced(m.graph, part);
      if (!emb) continue;
      if (lift_part(b, i, part, ids, m.graph, *emb)) {
        names[i] = m.name;
        lifted = true;
        break;
      }
    }
    if (!lifted) return std::nullopt;
  }
  HLineWitness w;
  w.target = target;
  w.container = b.build();
  w.decomposition.parent = w.container;
  for (std::size_t i = 0; i < parts.size(); ++i) w.decomposition.parts.push_back(b.part_vertices(i));
  // Original container ids: slims keep their id, fat f becomes slims + f in the grown container.
  for (int v : target_embedding) w.embedding.push_back(container.is_slim(v) ? v : b.slims + (v - container.slim_count()));
  w.family_assignment = std::move(names);
  w.route = route;
  if (!verify_hline_witness(w, family)) return std::nullopt;
  return w;
}

// Exact covers of the pairs by sets whose cross-part pairs are all in `pairs`.
inline void multipartite_covers(const std::vector<VertexPair>& pairs, const std::vector<int>& part_of, int n,
                                int budget, std::vector<Mask>& chosen,
                                const std::function<bool(const std::vector<Mask>&)>& visit, bool& stop) {
  if (stop) return;
  if (pairs.empty()) {
    if (visit(chosen)) stop = true;
    return;
  }
  if (budget == 0) return;
  auto has = [&](int a, int b) { return std::find(pairs.begin(), pairs.end(), ordered_pair(a, b)) != pairs.end(); };
  const auto [x, y] = pairs.front();
  std::function<void(Mask, int)> grow = [&](Mask set, int from) {
    if (stop) return;
    // Record this set, then try adding more vertices.
    std::vector<VertexPair> rest;
    for (auto e : pairs)
      if (!(((set >> e.first) & 1) && ((set >> e.second) & 1))) rest.push_back(e);
    chosen.push_back(set);
    multipartite_covers(rest, part_of, n, budget - 1, chosen, visit, stop);
    chosen.pop_back();
    for (int z = from; z < n && !stop; ++z) {
      if ((set >> z) & 1) continue;
      bool ok = true;
      for_each_bit(set, [&](int u) {
        if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(z)] && !has(u, z)) ok = false;
      });
      if (ok) grow(set | bit(z), z + 1);
    }
  };
  grow(bit(x) | bit(y), 0);
}

}  // namespace detail

// Searches, in order: (a) g induced in a family member; (b) the clique-fat
// construction when the special graph is Q-shaped and every slim vertex has
// one fat; (c) containers with at most fat_budget added fat vertices.
inline std::optional<HLineWitness> find_hline_witness(const HoffmanGraph& g, const Family& family, int fat_budget = 3) {
  require_valid(g, "find_hline_witness");
  for (const auto& m : family.members()) {
    auto emb = contains_induced(m.graph, g);
    if (!emb) continue;
    std::vector<int> all(static_cast<std::size_t>(m.graph.vertex_count()));
    for (int v = 0; v < m.graph.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    HLineWitness w{g, m.graph, *emb, Decomposition{m.graph, {all}}, {m.name}, 'a'};
    if (verify_hline_witness(w, family)) return w;
  }
  std::vector<int> identity(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) identity[static_cast<std::size_t>(v)] = v;
  bool one_fat_each = g.slim_count() > 0;
  for (int x = 0; x < g.slim_count(); ++x) one_fat_each = one_fat_each && g.fat_degree(x) == 1;
  if (one_fat_each) {
    if (auto layout = q_layout(special_graph(g))) {
      const Reduction red = reduce_q_realization(g, *layout);
      if (auto w = detail::lift_to_family(g, identity, red.container, red.decomposition.parts, family, 'b')) return w;
    }
  }
  const int n = g.slim_count();
  if (n < 2 || n > 10) return std::nullopt;
  // Set partitions of the slim vertices in restricted-growth order, two or more parts.
  std::vector<int> part_of(static_cast<std::size_t>(n), 0);
  std::optional<HLineWitness> found;
  std::function<void(int, int)> partitions = [&](int i, int blocks) {
    if (found) return;
    if (i == n) {
      if (blocks < 2) return;
      std::vector<VertexPair> need;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (part_of[static_cast<std::size_t>(x)] == part_of[static_cast<std::size_t>(y)]) continue;
          const int c = popcount(g.fat_neighbors(x) & g.fat_neighbors(y));
          if (c > 1 || (c == 1 && !g.adjacent(x, y))) return;
          if (c == 0 && g.adjacent(x, y)) need.emplace_back(x, y);
        }
      std::vector<Mask> chosen;
      bool stop = false;
      detail::multipartite_covers(need, part_of, n, fat_budget, chosen, [&](const std::vector<Mask>& sets) {
        HoffmanGraph h = g;
        for (Mask s : sets) h = add_fat_vertex(h, s);
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
        for (int b = 0; b < blocks; ++b) {
          Mask slims = 0;
          for (int x = 0; x < n; ++x)
            if (part_of[static_cast<std::size_t>(x)] == b) slims |= bit(x);
          Mask keep = slims;
          for_each_bit(slims, [&](int x) { keep |= h.fat_neighbors(x); });
          for_each_bit(keep, [&](int v) { parts[static_cast<std::size_t>(b)].push_back(v); });
        }
        if (validate_decomposition(Decomposition{h, parts})) return false;
        found = detail::lift_to_family(g, identity, h, parts, family, 'c');
        return found.has_value();
      }, stop);
      return;
    }
    for (int b = 0; b <= blocks && !found; ++b) {
      part_of[static_cast<std::size_t>(i)] = b;
      partitions(i + 1, std::max(blocks, b + 1));
    }
  };
  partitions(0, 0);
  return found;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const HLineWitness& w) {
  return {{"target", to_json(w.target)},
          {"container", to_json(w.container)},
          {"embedding", w.embedding},
          {"parts", w.decomposition.parts},
          {"family", w.family_assignment},
          {"route", std::string(1, w.route)}};
}

inline HLineWitness witness_from_json(const nlohmann::json& j) {
  HLineWitness w;
  w.target = hoffman_from_json(j.at("target"));
  w.container = hoffman_from_json(j.at("container"));
  w.embedding = j.at("embedding").get<std::vector<int>>();
  w.decomposition = {w.container, j.at("parts").get<std::vector<std::vector<int>>>()};
  w.family_assignment = j.at("family").get<std::vector<std::string>>();
  w.route = j.value("route", std::string("a")).at(0);
  return w;
}

inline nlohmann::json to_json(const Decomposition& d) {
  return {{"parent", to_json(d.parent)}, {"parts", d.parts}};
}

}  // namespace hoffman
