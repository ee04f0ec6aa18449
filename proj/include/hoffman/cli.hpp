#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it with argument vectors and string streams.
//
// Exit codes: 0 success, 1 failed check or verification, 2 usage error,
// 3 malformed input file.

#include <filesystem>
#include <map>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoffman/algebra.hpp"
#include "hoffman/census.hpp"
#include "hoffman/decomp.hpp"
#include "hoffman/enumerate.hpp"
#include "hoffman/format.hpp"
#include "hoffman/model.hpp"
#include "hoffman/spectral.hpp"

namespace hoffman::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBadInput = 3;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-tau", "-1-tau", or an exact rational "a/b" / integer "a".
inline Threshold parse_threshold(const std::string& text) {
  if (text == "-tau") return Threshold::minus_tau();
  if (text == "-1-tau") return Threshold::minus_one_minus_tau();
  static const std::regex rational(R"(^([+-]?[0-9]{1,18})(/([0-9]{1,18}))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, rational))
    throw UsageError("threshold must be -tau, -1-tau or an exact rational a/b (got '" + text + "')");
  const BigInt num(m[1].str());
  const BigInt den(m[3].matched ? m[3].str() : std::string("1"));
  if (den.is_zero()) throw UsageError("threshold has zero denominator");
  return Threshold::rational(Rational(num, den));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline HoffmanGraph load_hoffman(const std::string& path) {
  AnyGraph g = load_graph(path);
  if (auto* h = std::get_if<HoffmanGraph>(&g)) return *h;
  throw InputError(path + ": expected a Hoffman graph");
}

inline EdgeSignedGraph load_signed(const std::string& path) {
  AnyGraph g = load_graph(path);
  if (auto* s = std::get_if<EdgeSignedGraph>(&g)) return *s;
  throw InputError(path + ": expected an edge-signed graph");
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

inline IntMatrix graph_matrix(const AnyGraph& g) {
  if (auto* h = std::get_if<HoffmanGraph>(&g)) return b_matrix(*h);
  return signed_adjacency(std::get<EdgeSignedGraph>(g));
}

inline nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline std::string fixed(double v, int digits = 9) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

struct Options {
  bool json = false;
  int jobs = 1;
};

// ---------------------------------------------------------------------------
// Commands

inline int cmd_spectrum(const Options& o, const std::string& file, std::ostream& out) {
  const AnyGraph g = load_graph(file);
  const bool hoffman = std::holds_alternative<HoffmanGraph>(g);
  const IntMatrix m = graph_matrix(g);
  const IntPolynomial cp = char_poly(m);
  const bool tau = lambda_min_at_least(m, Threshold::minus_tau());
  const bool one_tau = lambda_min_at_least(m, Threshold::minus_one_minus_tau());
  const std::string approx = m.size() ? fixed(lambda_min_approx(m)) : "none";
  if (o.json) {
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& c : cp.coefficients()) cj.push_back(c.str());
    out << nlohmann::json{{"matrix_kind", hoffman ? "B" : "M"},
                          {"matrix", matrix_json(m)},
                          {"char_poly", cj},
                          {"lambda_min_approx", approx},
                          {"at_least", {{"-tau", tau}, {"-1-tau", one_tau}}}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << (hoffman ? "B" : "M") << " matrix (" << m.size() << "x" << m.size() << "):\n" << m.to_string();
  out << "char poly: " << cp.to_string() << "\n";
  out << "lambda_min ~ " << approx << "\n";
  out << "lambda_min >= -tau: " << (tau ? "yes" : "no") << "\n";
  out << "lambda_min >= -1-tau: " << (one_tau ? "yes" : "no") << "\n";
  return kOk;
}

inline int cmd_check(const Options& o, const std::string& threshold, const std::string& file, std::ostream& out) {
  const Threshold t = parse_threshold(threshold);
  const AnyGraph g = load_graph(file);
  const bool ok = lambda_min_at_least(graph_matrix(g), t);
  if (o.json) out << nlohmann::json{{"threshold", t.to_string()}, {"at_least", ok}}.dump() << "\n";
  else out << "lambda_min >= " << t.to_string() << ": " << (ok ? "yes" : "no") << "\n";
  return ok ? kOk : kCheckFailed;
}

inline int cmd_special(const Options& o, const std::string& file, std::ostream& out) {
  const EdgeSignedGraph s = special_graph(load_hoffman(file));
  if (o.json) out << to_json(s).dump() << "\n";
  else out << to_compact(s) << "\n";
  return kOk;
}

inline int cmd_decompose(const Options& o, const std::string& file, std::ostream& out) {
  const HoffmanGraph g = load_hoffman(file);
  const auto d = split_by_special_components(g);
  if (o.json) {
    if (!d) out << nlohmann::json{{"indecomposable", true}}.dump() << "\n";
    else {
      nlohmann::json parts = nlohmann::json::array();
      for (std::size_t i = 0; i < d->parts.size(); ++i)
        parts.push_back({{"vertices", d->parts[i]}, {"graph", to_json(part_graph(*d, i))}});
      out << nlohmann::json{{"indecomposable", false}, {"parts", parts}}.dump() << "\n";
    }
    return kOk;
  }
  if (!d) {
    out << "indecomposable\n";
    return kOk;
  }
  out << "decomposable into " << d->parts.size() << " parts\n";
  for (std::size_t i = 0; i < d->parts.size(); ++i) {
    out << "part " << i << ": vertices";
    for (int v : d->parts[i]) out << " " << v;
    out << "; " << to_compact(part_graph(*d, i)) << "\n";
  }
  return kOk;
}

inline EdgeSignedGraph named_pattern(const std::string& name) {
  try {
    auto entry = catalog::lookup(name);
    if (auto* s = std::get_if<EdgeSignedGraph>(&entry)) return *s;
  } catch (const std::invalid_argument&) {
  }
  throw UsageError("--forbid expects a signed catalog name such as T1 (got '" + name + "')");
}

inline int cmd_enumerate(const Options& o, int max_n, const std::string& threshold, const std::vector<std::string>& forbid,
                         bool connected, const std::string& out_dir, std::ostream& out) {
  EnumerateOptions eo;
  eo.max_n = max_n;
  eo.threshold = parse_threshold(threshold);
  for (const auto& f : forbid) eo.forbidden.emplace_back(f, named_pattern(f));
  eo.connected = connected;
  eo.jobs = o.jobs;
  if (max_n < 1 || max_n > 12) throw UsageError("--max-n must be in 1..12");
  const auto census = enumerate_signed(eo);
  const auto exceptional = exceptional_graphs(census);
  std::ostringstream all, exc;
  write_census(all, census);
  write_census(exc, exceptional);
  nlohmann::json counts = nlohmann::json::object(), exc_counts = nlohmann::json::object();
  for (const auto& [n, k] : census.counts()) counts[std::to_string(n)] = k;
  for (const auto& [n, k] : exceptional.counts()) exc_counts[std::to_string(n)] = k;
  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    write_text(dir / "census.txt", all.str());
    write_text(dir / "exceptional.txt", exc.str());
    write_text(dir / "manifest.json",
               manifest("enumerate", census.predicate, {{"census", "census.txt"}, {"exceptional", "exceptional.txt"}},
                        {{"census", counts}, {"exceptional", exc_counts}})
                       .dump(2) +
                   "\n");
  }
  if (o.json) {
    out << nlohmann::json{{"predicate", census.predicate}, {"census", counts}, {"exceptional", exc_counts}}.dump() << "\n";
  } else if (out_dir.empty()) {
    out << all.str();
  } else {
    out << "census: " << census.size() << "; exceptional: " << exceptional.size() << "\n";
  }
  return kOk;
}

inline int cmd_realize(const Options& o, const std::string& file, const std::string& out_file, std::ostream& out) {
  const EdgeSignedGraph s = load_signed(file);
  const Threshold t = Threshold::minus_one_minus_tau();
  const auto reals = realize_hoffman(s, t);
  std::ostringstream text;
  text << "# realizations of " << to_compact(s) << "\n# count: " << reals.size() << "\n";
  for (const auto& g : reals)
    text << census_line(canonical_key(g), g, describe_lambda_min(b_matrix(g), t).to_string(), "") << "\n";
  if (!out_file.empty()) write_text(out_file, text.str());
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : reals) arr.push_back(to_json(g));
    out << nlohmann::json{{"count", reals.size()}, {"realizations", arr}}.dump() << "\n";
  } else if (out_file.empty()) {
    out << text.str();
  } else {
    out << "realizations: " << reals.size() << "\n";
  }
  return kOk;
}

inline std::vector<IrreducibleMember> maximal_of(const std::vector<IrreducibleMember>& members) {
  std::vector<HoffmanGraph> graphs;
  for (const auto& m : members) graphs.push_back(m.graph);
  std::vector<IrreducibleMember> out;
  for (std::size_t i : maximal_members(graphs)) out.push_back(members[i]);
  return out;
}

inline int cmd_classify(const Options& o, const std::string& out_dir, std::ostream& out) {
  const Classification c = classify_irreducible(o.jobs);
  const auto maximal = maximal_of(c.members);
  const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
  std::ostringstream c15, c37;
  write_census(c15, c.exceptional);
  write_members(c37, "irreducible Hoffman graphs", c.members);
  nlohmann::json disc = nlohmann::json::array();
  for (const auto& d : c.discrepancies) disc.push_back({{"n", d.n}, {"expected", d.expected}, {"found", d.found}});
  nlohmann::json per_special = nlohmann::json::object();
  for (const auto& [name, k] : c.realizations_per_special) per_special[name] = k;
  write_text(dir / "census-15.txt", c15.str());
  write_text(dir / "census-37.txt", c37.str());
  write_text(dir / "manifest.json",
             manifest("classify", c.signed_census.predicate,
                      {{"exceptional", "census-15.txt"}, {"irreducible", "census-37.txt"}},
                      {{"exceptional", c.exceptional.size()},
                       {"irreducible", c.members.size()},
                       {"maximal", maximal.size()},
                       {"realizations_per_special", per_special},
                       {"unrealizable", c.unrealizable},
                       {"discrepancies", disc}})
                     .dump(2) +
                 "\n");
  if (o.json) {
    out << nlohmann::json{{"irreducible", c.members.size()}, {"maximal", maximal.size()}, {"discrepancies", disc}}.dump()
        << "\n";
  } else {
    out << "irreducible census: " << c.members.size() << "; maximal: " << maximal.size() << "\n";
    for (const auto& name : c.unrealizable) out << "unrealizable exceptional graph: " << name << "\n";
    for (const auto& d : c.discrepancies) {
      out << "discrepancy at n=" << d.n << ": expected";
      for (int k : d.expected) out << " " << k;
      out << ", found";
      for (int k : d.found) out << " " << k;
      out << "\n";
    }
  }
  return c.discrepancies.empty() && c.unrealizable.empty() ? kOk : kCheckFailed;
}

inline int cmd_maximal(const Options& o, const std::string& in_file, const std::string& out_file, std::ostream& out) {
  std::istringstream in(read_file(in_file));
  std::vector<CensusLine> lines;
  try {
    lines = read_census(in);
  } catch (const ParseError& e) {
    throw InputError(in_file + ": " + e.what());
  }
  std::vector<HoffmanGraph> graphs;
  for (const auto& l : lines) {
    auto* h = std::get_if<HoffmanGraph>(&l.graph);
    if (!h) throw InputError(in_file + ": census contains a signed graph");
    graphs.push_back(*h);
  }
  const auto idx = maximal_members(graphs);
  std::ostringstream text;
  text << "# maximal irreducible Hoffman graphs\n# count: " << idx.size() << "\n";
  for (std::size_t i : idx) text << census_line(lines[i].key, lines[i].graph, lines[i].lambda, lines[i].name) << "\n";
  if (!out_file.empty()) write_text(out_file, text.str());
  if (o.json) {
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t i : idx) names.push_back(lines[i].name);
    out << nlohmann::json{{"maximal", idx.size()}, {"members", names}}.dump() << "\n";
  } else if (out_file.empty()) {
    out << text.str();
  } else {
    out << "maximal: " << idx.size() << "\n";
  }
  return kOk;
}

// One verification outcome.
struct Verdict {
  std::string name;
  bool ok;
  std::string detail;
};

inline std::string counts_text(const std::map<int, int>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [n, k] : m) {
    s += (first ? "" : ", ") + std::to_string(n) + ":" + std::to_string(k);
    first = false;
  }
  return s + "}";
}

inline std::vector<Verdict> verify_base_case(int jobs) {
  EnumerateOptions eo;
  eo.max_n = 7;
  eo.forbidden = {{"T1", catalog::t1()}};
  eo.jobs = jobs;
  const auto exc = exceptional_graphs(enumerate_signed(eo));
  std::map<int, int> found;
  for (const auto& [n, k] : exc.counts())
    if (k > 0) found[n] = k;
  const std::map<int, int> expected{{3, 1}, {4, 5}, {5, 6}, {6, 3}};
  return {{"base-case", found == expected, "exceptional per n " + counts_text(found) + ", expected " + counts_text(expected)}};
}

inline std::vector<Verdict> verify_extension(int p, int q, int r, int jobs) {
  const auto rep = verify_extension_step(p, q, r, jobs);
  std::string detail = std::to_string(rep.candidates) + " extensions, " + std::to_string(rep.survivors) + " survive";
  for (const auto& c : rep.counterexamples) detail += "; counterexample " + to_compact(c);
  return {{"extension(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")", rep.ok, detail}};
}

inline std::vector<Verdict> verify_all_extensions(int max_total, int jobs) {
  int total = 0, failed = 0;
  std::string first_failure;
  for (int r = 0; r <= max_total; ++r)
    for (int p = 0; p <= r; ++p)
      for (int q = 0; p + q <= r && p + q + r <= max_total; ++q) {
        if (p + q + r == 0) continue;
        ++total;
        if (!verify_extension_step(p, q, r, jobs).ok) {
          ++failed;
          if (first_failure.empty()) first_failure = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
        }
      }
  return {{"extension(all p+q<=r, p+q+r<=" + std::to_string(max_total) + ")", failed == 0,
           std::to_string(total) + " triples, " + std::to_string(failed) + " failed" +
               (first_failure.empty() ? "" : ", first " + first_failure)}};
}

inline std::vector<Verdict> verify_lemmas() {
  std::vector<Verdict> v;
  const Threshold tau = Threshold::minus_tau();
  const Threshold one_tau = Threshold::minus_one_minus_tau();
  {
    bool ok = true;
    for (int r = 1; r <= 8; ++r) {
      const IntPolynomial expected = IntPolynomial{-1, 1, 1}.pow(2 * r - 1) * IntPolynomial{-1, -(2 * r - 1), 1};
      ok = ok && char_poly(signed_adjacency(make_q(r, r, 2 * r))) == expected;
    }
    v.push_back({"charpoly-identity", ok, "Q(r,r,2r) for r=1..8"});
  }
  {
    int cases = 0, bad = 0;
    for (int r = 0; r <= 10; ++r)
      for (int p = 0; p <= r; ++p)
        for (int q = 0; p + q <= r; ++q) {
          ++cases;
          if (!lambda_min_at_least(signed_adjacency(make_q(p, q, r)), tau)) ++bad;
        }
    v.push_back({"q-bound", bad == 0, std::to_string(cases) + " graphs Q(p,q,r), r<=10, " + std::to_string(bad) + " below -tau"});
  }
  {
    const bool k13 = !lambda_min_at_least(b_matrix(catalog::k1t(3)), one_tau);
    v.push_back({"fat-degree-bound", k13, "K1T(3) is below -1-tau"});
  }
  {
    const auto rep = verify_three_vertex_diagonal_lemma();
    v.push_back({"three-vertex-diagonal", rep.ok, std::to_string(rep.cases) + " cases"});
  }
  {
    std::string names;
    bool ok = true;
    try {
      for (const auto& g : derive_two_slim()) names += (names.empty() ? "" : ",") + catalog_name(g);
    } catch (const std::logic_error& e) {
      ok = false;
      names = e.what();
    }
    v.push_back({"two-slim", ok, names});
  }
  return v;
}

inline int report(const Options& o, const std::vector<Verdict>& verdicts, std::ostream& out) {
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) {
    ok = ok && v.ok;
    if (o.json) arr.push_back({{"name", v.name}, {"ok", v.ok}, {"detail", v.detail}});
    else out << (v.ok ? "PASS " : "FAIL ") << v.name << ": " << v.detail << "\n";
  }
  if (o.json) out << arr.dump() << "\n";
  return ok ? kOk : kCheckFailed;
}

inline int cmd_catalog(const Options& o, const std::string& name, std::ostream& out) {
  catalog::Entry e;
  try {
    e = catalog::lookup(name);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  AnyGraph g = std::visit([](const auto& x) -> AnyGraph { return x; }, e);
  out << (o.json ? to_json(g).dump() : to_compact(g)) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

// Joins "--threshold VALUE" into one token so values like "-tau" are not
// mistaken for flags.
inline std::vector<std::string> join_threshold_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threshold" && i + 1 < args.size()) {
      out.push_back("--threshold=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

// args excludes the program name.
inline int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact classification tools for fat Hoffman graphs", "hoffman"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::Range(1, 256));

  std::string file, threshold = "-tau", out_path, in_path, what, name;
  int max_n = 7, p = -1, q = -1, r = -1;
  std::vector<std::string> forbid;
  bool connected = false;

  auto* spectrum = app.add_subcommand("spectrum", "Matrix, characteristic polynomial and threshold verdicts");
  spectrum->add_option("file", file, "Graph file")->required();
  auto* check = app.add_subcommand("check", "Exit 0 iff the smallest eigenvalue is at least the threshold");
  check->add_option("--threshold", threshold, "-tau, -1-tau or a rational a/b")->required();
  check->add_option("file", file, "Graph file")->required();
  auto* special = app.add_subcommand("special", "Print the special graph of a Hoffman graph");
  special->add_option("file", file, "Hoffman graph file")->required();
  auto* decompose = app.add_subcommand("decompose", "Split a Hoffman graph along its special graph components");
  decompose->add_option("file", file, "Hoffman graph file")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate edge-signed graphs above a threshold");
  enumerate->add_option("--max-n", max_n, "Largest vertex count")->required();
  enumerate->add_option("--threshold", threshold, "-tau, -1-tau or a rational a/b");
  enumerate->add_option("--forbid", forbid, "Forbidden induced subgraph (catalog name)");
  enumerate->add_flag("--connected", connected, "Connected graphs only");
  enumerate->add_option("--out", out_path, "Directory for census files");
  auto* realize = app.add_subcommand("realize", "Hoffman graphs with a given special graph");
  realize->add_option("file", file, "Edge-signed graph file")->required();
  realize->add_option("--out", out_path, "Output file");
  auto* classify = app.add_subcommand("classify", "Full classification pipeline");
  classify->add_option("--out", out_path, "Output directory (default: current directory)");
  auto* maximal = app.add_subcommand("maximal", "Maximal members of an irreducible census");
  maximal->add_option("--in", in_path, "Census file")->default_val("census-37.txt");
  std::string maximal_out = "census-18.txt";
  maximal->add_option("--out", maximal_out, "Output file, '-' for standard output")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Run a named verification");
  verify->add_option("what", what, "base-case | extension | lemma3x | all")
      ->required()
      ->check(CLI::IsMember({"base-case", "extension", "lemma3x", "all"}));
  verify->add_option("--p", p, "Q parameter p");
  verify->add_option("--q", q, "Q parameter q");
  verify->add_option("--r", r, "Q parameter r");
  auto* cat = app.add_subcommand("catalog", "Print a named graph");
  cat->add_option("name", name, "H_I H_II H_III H_IV H_XVI H_XVII K1T(t) Q(p,q,r) T1 T2 S11 S21 S22")->required();

  const std::vector<std::string> args = join_threshold_values(raw_args);
  std::vector<std::string> storage{"hoffman"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o, file, out);
    if (check->parsed()) return cmd_check(o, threshold, file, out);
    if (special->parsed()) return cmd_special(o, file, out);
    if (decompose->parsed()) return cmd_decompose(o, file, out);
    if (enumerate->parsed()) return cmd_enumerate(o, max_n, threshold, forbid, connected, out_path, out);
    if (realize->parsed()) return cmd_realize(o, file, out_path, out);
    if (classify->parsed()) return cmd_classify(o, out_path, out);
    if (maximal->parsed()) return cmd_maximal(o, in_path, maximal_out == "-" ? "" : maximal_out, out);
    if (cat->parsed()) return cmd_catalog(o, name, out);
    if (verify->parsed()) {
      const bool has_pqr = p >= 0 || q >= 0 || r >= 0;
      if (what != "extension" && has_pqr) throw UsageError("--p/--q/--r only apply to 'verify extension'");
      std::vector<Verdict> v;
      if (what == "extension") {
        if (has_pqr) {
          if (p < 0 || q < 0 || r < 0) throw UsageError("give all of --p, --q and --r");
          if (p + q > r || p + q + r > 11) throw UsageError("requires p + q <= r and p + q + r <= 11");
          v = verify_extension(p, q, r, o.jobs);
        } else {
          v = verify_all_extensions(10, o.jobs);
        }
      } else if (what == "base-case") {
        v = verify_base_case(o.jobs);
      } else if (what == "lemma3x") {
        v = verify_lemmas();
      } else {
        v = verify_base_case(o.jobs);
        auto e = verify_all_extensions(10, o.jobs);
        auto l = verify_lemmas();
        v.insert(v.end(), e.begin(), e.end());
        v.insert(v.end(), l.begin(), l.end());
      }
      return report(o, v, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "malformed input: " << e.what() << "\n";
    return kBadInput;
  }
  err << "usage error: no command\n";
  return kUsage;
}

}  // namespace hoffman::cli
