#pragma once

// Text forms of graphs.
//
//   JSON     {"slim":2,"fat":1,"edges":[[0,2],[1,2]]}
//            {"n":3,"plus":[[0,1]],"minus":[[0,2],[1,2]]}
//   compact  hg 2 1 0-2,1-2
//            sg 3 +0-1 -0-2,-1-2
//
// In the compact signed form every edge carries its sign, so either list may
// be omitted. Parsers report the byte offset (compact) or the JSON path of
// the offending element.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hoffman/model.hpp"

namespace hoffman {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string position)
      : std::runtime_error(message + " (at " + position + ")"), position_(std::move(position)) {}
  const std::string& position() const { return position_; }

 private:
  std::string position_;
};

using AnyGraph = std::variant<HoffmanGraph, EdgeSignedGraph>;

namespace detail {

inline std::string pairs_compact(const std::vector<VertexPair>& edges, const char* prefix) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ',';
    s += prefix;
    s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return s;
}

inline nlohmann::json pairs_json(const std::vector<VertexPair>& edges) {
  nlohmann::json a = nlohmann::json::array();
  for (auto [x, y] : edges) a.push_back({x, y});
  return a;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void skip_spaces() {
    while (!done() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, "byte " + std::to_string(pos_)); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  int integer() {
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') fail("expected a non-negative integer");
    int v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc()) fail("integer out of range");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline int json_int(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > kMaxVertices * 64)
    throw ParseError("expected a non-negative integer", path);
  return v.get<int>();
}

inline std::vector<VertexPair> json_pairs(const nlohmann::json& obj, const char* field, int n) {
  const std::string base = std::string("/") + field;
  if (!obj.contains(field)) throw ParseError(std::string("missing field '") + field + "'", "/");
  const auto& a = obj.at(field);
  if (!a.is_array()) throw ParseError("expected an array", base);
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string path = base + "/" + std::to_string(i);
    if (!a[i].is_array() || a[i].size() != 2) throw ParseError("expected a pair [a,b]", path);
    const int x = json_int(a[i][0], path + "/0");
    const int y = json_int(a[i][1], path + "/1");
    if (x >= n || y >= n) throw ParseError("vertex id out of range", path);
    out.emplace_back(x, y);
  }
  return out;
}

inline std::string violation_position_json(const HoffmanGraph& g, const Violation& v) {
  if (v.kind == Violation::Kind::IsolatedFat) return "/fat";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto e = g.edges()[i];
    if (v.witness.size() == 1 && e.first == v.witness[0] && e.second == v.witness[0]) return "/edges/" + std::to_string(i);
    if (v.witness.size() == 2 && e.first == v.witness[0] && e.second == v.witness[1]) {
      if (v.kind != Violation::Kind::DuplicateEdge) return "/edges/" + std::to_string(i);
      for (std::size_t j = i + 1; j < g.edges().size(); ++j)
        if (g.edges()[j] == e) return "/edges/" + std::to_string(j);
    }
  }
  return "/";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Writers

inline nlohmann::json to_json(const HoffmanGraph& g) {
  return {{"slim", g.slim_count()}, {"fat", g.fat_count()}, {"edges", detail::pairs_json(g.normalized_edges())}};
}

inline nlohmann::json to_json(const EdgeSignedGraph& s) {
  return {{"n", s.vertex_count()}, {"plus", detail::pairs_json(s.plus_edges())}, {"minus", detail::pairs_json(s.minus_edges())}};
}

inline std::string to_compact(const HoffmanGraph& g) {
  std::string s = "hg " + std::to_string(g.slim_count()) + " " + std::to_string(g.fat_count());
  const auto e = g.normalized_edges();
  if (!e.empty()) s += " " + detail::pairs_compact(e, "");
  return s;
}

inline std::string to_compact(const EdgeSignedGraph& s) {
  std::string out = "sg " + std::to_string(s.vertex_count());
  if (!s.plus_edges().empty()) out += " " + detail::pairs_compact(s.plus_edges(), "+");
  if (!s.minus_edges().empty()) out += " " + detail::pairs_compact(s.minus_edges(), "-");
  return out;
}

inline std::string to_compact(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_compact(x); }, g);
}
inline nlohmann::json to_json(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

// ---------------------------------------------------------------------------
// Readers

inline HoffmanGraph hoffman_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("expected an object", "/");
  for (const char* f : {"slim", "fat", "edges"})
    if (!j.contains(f)) throw ParseError(std::string("missing field '") + f + "'", "/");
  const int slim = detail::json_int(j.at("slim"), "/slim");
  const int fat = detail::json_int(j.at("fat"), "/fat");
  if (slim + fat > kMaxVertices) throw ParseError("more than 64 vertices", "/fat");
  HoffmanGraph g(slim, fat, detail::json_pairs(j, "edges", slim + fat));
  if (auto v = validate_hoffman(g)) throw ParseError(v->message, detail::violation_position_json(g, *v));
  return g;
}

inline EdgeSignedGraph signed_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("expected an object", "/");
  for (const char* f : {"n", "plus", "minus"})
    if (!j.contains(f)) throw ParseError(std::string("missing field '") + f + "'", "/");
  const int n = detail::json_int(j.at("n"), "/n");
  if (n > kMaxVertices) throw ParseError("more than 64 vertices", "/n");
  auto plus = detail::json_pairs(j, "plus", n);
  auto minus = detail::json_pairs(j, "minus", n);
  auto check = [&](const std::vector<VertexPair>& edges, const char* field) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string path = std::string("/") + field + "/" + std::to_string(i);
      if (edges[i].first == edges[i].second) throw ParseError("loop", path);
      for (std::size_t k = 0; k < i; ++k)
        if (ordered_pair(edges[k].first, edges[k].second) == ordered_pair(edges[i].first, edges[i].second))
          throw ParseError("duplicate edge", path);
    }
  };
  check(plus, "plus");
  check(minus, "minus");
  for (std::size_t i = 0; i < minus.size(); ++i)
    for (const auto& e : plus)
      if (ordered_pair(e.first, e.second) == ordered_pair(minus[i].first, minus[i].second))
        throw ParseError("pair is both (+) and (-)", "/minus/" + std::to_string(i));
  return EdgeSignedGraph(n, std::move(plus), std::move(minus));
}

inline HoffmanGraph hoffman_from_compact(std::string_view text) {
  detail::Cursor c(text);
  c.skip_spaces();
  c.expect_word("hg");
  c.expect(' ');
  c.skip_spaces();
  const int slim = c.integer();
  c.expect(' ');
  c.skip_spaces();
  const int fat = c.integer();
  if (slim + fat > kMaxVertices) c.fail("more than 64 vertices");
  std::vector<VertexPair> edges;
  std::vector<std::size_t> where;
  c.skip_spaces();
  if (!c.done()) {
    while (true) {
      where.push_back(c.pos());
      const int a = c.integer();
      c.expect('-');
      const int b = c.integer();
      if (a >= slim + fat || b >= slim + fat) throw ParseError("vertex id out of range", "byte " + std::to_string(where.back()));
      edges.emplace_back(a, b);
      if (c.peek() != ',') break;
      c.expect(',');
    }
  }
  c.skip_spaces();
  if (!c.done()) c.fail("unexpected trailing text");
  HoffmanGraph g(slim, fat, edges);
  if (auto v = validate_hoffman(g)) {
    std::size_t at = text.size();
    if (v->kind != Violation::Kind::IsolatedFat) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto e = ordered_pair(edges[i].first, edges[i].second);
        const bool hit = v->witness.size() == 1 ? (e.first == v->witness[0] && e.second == v->witness[0])
                                                : (e == VertexPair{v->witness[0], v->witness[1]});
        if (hit) {
          at = where[i];
          if (v->kind != Violation::Kind::DuplicateEdge) break;
        }
      }
    }
    throw ParseError(v->message, "byte " + std::to_string(at));
  }
  return g;
}

inline EdgeSignedGraph signed_from_compact(std::string_view text) {
  detail::Cursor c(text);
  c.skip_spaces();
  c.expect_word("sg");
  c.expect(' ');
  c.skip_spaces();
  const int n = c.integer();
  if (n > kMaxVertices) c.fail("more than 64 vertices");
  std::vector<VertexPair> plus, minus;
  auto seen = [&](VertexPair e) {
    return std::find(plus.begin(), plus.end(), e) != plus.end() || std::find(minus.begin(), minus.end(), e) != minus.end();
  };
  c.skip_spaces();
  while (!c.done()) {
    const char sign = c.peek();
    if (sign != '+' && sign != '-') c.fail("expected '+' or '-'");
    const std::size_t at = c.pos();
    c.expect(sign);
    const int a = c.integer();
    c.expect('-');
    const int b = c.integer();
    const std::string where = "byte " + std::to_string(at);
    if (a >= n || b >= n) throw ParseError("vertex id out of range", where);
    if (a == b) throw ParseError("loop", where);
    const VertexPair e = ordered_pair(a, b);
    if (seen(e)) throw ParseError("pair listed twice", where);
    (sign == '+' ? plus : minus).push_back(e);
    if (c.peek() == ',') {
      c.expect(',');
      continue;
    }
    c.skip_spaces();
  }
  return EdgeSignedGraph(n, std::move(plus), std::move(minus));
}

// Accepts either JSON or compact text, for either graph kind.
inline AnyGraph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("malformed JSON", "byte " + std::to_string(e.byte));
    }
    if (j.is_object() && j.contains("slim")) return hoffman_from_json(j);
    if (j.is_object() && j.contains("n")) return signed_from_json(j);
    throw ParseError("object is neither a Hoffman graph nor a signed graph", "/");
  }
  if (text.substr(i, 2) == "hg") return hoffman_from_compact(text);
  if (text.substr(i, 2) == "sg") return signed_from_compact(text);
  throw ParseError("expected JSON object, 'hg' or 'sg'", "byte " + std::to_string(i));
}

inline HoffmanGraph parse_hoffman(std::string_view text) {
  AnyGraph g = parse_graph(text);
  if (auto* h = std::get_if<HoffmanGraph>(&g)) return *h;
  throw ParseError("expected a Hoffman graph, found a signed graph", "byte 0");
}

inline EdgeSignedGraph parse_signed(std::string_view text) {
  AnyGraph g = parse_graph(text);
  if (auto* s = std::get_if<EdgeSignedGraph>(&g)) return *s;
  throw ParseError("expected a signed graph, found a Hoffman graph", "byte 0");
}

}  // namespace hoffman
