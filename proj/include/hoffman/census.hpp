#pragma once

// Census files: a header of '#' lines followed by one graph per line,
//
//   <key hex> TAB <compact graph> TAB <smallest-eigenvalue descriptor> [TAB <name>]
//
// and a JSON manifest describing a set of such files.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoffman/enumerate.hpp"
#include "hoffman/format.hpp"
#include "hoffman/iso.hpp"

namespace hoffman {

inline constexpr const char* kToolName = "hoffman";
inline constexpr const char* kToolVersion = "1.0.0";

struct CensusLine {
  CanonicalKey key;
  AnyGraph graph;
  std::string lambda;
  std::string name;
};

inline std::string census_line(const CanonicalKey& key, const AnyGraph& g, const std::string& lambda, const std::string& name) {
  std::string s = key.hex() + "\t" + to_compact(g) + "\t" + lambda;
  if (!name.empty()) s += "\t" + name;
  return s;
}

template <typename Graph>
void write_census(std::ostream& os, const Census<Graph>& c) {
  os << "# " << c.title << "\n# predicate: " << c.predicate << "\n# count: " << c.size() << "\n";
  for (const auto& [n, entries] : c.by_n) {
    os << "# n=" << n << ": " << entries.size() << "\n";
    for (const auto& e : entries) os << census_line(e.key, e.graph, e.lambda.to_string(), e.name) << "\n";
  }
}

inline void write_members(std::ostream& os, const std::string& title, const std::vector<IrreducibleMember>& members) {
  os << "# " << title << "\n# count: " << members.size() << "\n";
  for (const auto& m : members) os << census_line(m.key, m.graph, m.lambda.to_string(), m.name) << "\n";
}

// Reads a census file; every key is recomputed and must match.
inline std::vector<CensusLine> read_census(std::istream& is) {
  std::vector<CensusLine> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    const std::string where = "line " + std::to_string(lineno);
    if (cols.size() < 3) throw ParseError("expected at least three tab-separated columns", where);
    CensusLine cl;
    try {
      cl.key = CanonicalKey::from_hex(cols[0]);
      cl.graph = parse_graph(cols[1]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), where);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), where);
    }
    const CanonicalKey actual = std::visit([](const auto& g) { return canonical_key(g); }, cl.graph);
    if (actual != cl.key) throw ParseError("canonical key does not match the graph", where);
    cl.lambda = cols[2];
    if (cols.size() > 3) cl.name = cols[3];
    out.push_back(std::move(cl));
  }
  return out;
}

inline nlohmann::json manifest(const std::string& command, const std::string& predicate, const nlohmann::json& files,
                               const nlohmann::json& counts) {
  return {{"tool", kToolName}, {"version", kToolVersion}, {"command", command},
          {"predicate", predicate}, {"files", files},     {"counts", counts}};
}

}  // namespace hoffman
