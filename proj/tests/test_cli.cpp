#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "printers.hpp"
#include "hoffman/cli.hpp"

using namespace hoffman;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("hoffman-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string catalog_file(const std::string& name) const {
    const auto r = run_cli({"catalog", name});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    return file(name + ".txt", r.out);
  }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CheckThresholdExamples) {
  EXPECT_EQ(run_cli({"check", "--threshold", "-1-tau", catalog_file("H_XVI")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"check", "--threshold", "-1-tau", catalog_file("K1T(3)")}).code, cli::kCheckFailed);
  EXPECT_EQ(run_cli({"check", "--threshold", "-3", catalog_file("K1T(3)")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"check", "--threshold", "-3/1", catalog_file("K1T(3)")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"check", "--threshold", "-29/10", catalog_file("K1T(3)")}).code, cli::kCheckFailed);
  const auto r = run_cli({"check", "--threshold", "-tau", catalog_file("K1T(3)")});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_EQ(r.out, "lambda_min >= -1/2 - 1/2*sqrt(5): no\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"check", "--threshold", "-1.5", catalog_file("T1")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"check", catalog_file("T1")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"enumerate", "--max-n", "13"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"enumerate", "--max-n", "3", "--forbid", "H_I"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "extension", "--p", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "extension", "--p", "3", "--q", "0", "--r", "2"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "base-case", "--p", "0"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"catalog", "H_XX"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--jobs", "0", "catalog", "T1"}).code, cli::kUsage);
}

TEST_F(CliTest, MalformedInput) {
  EXPECT_EQ(run_cli({"spectrum", (dir_ / "missing.txt").string()}).code, cli::kBadInput);
  const auto r = run_cli({"spectrum", file("bad.txt", "hg 2 1 0-5\n")});
  EXPECT_EQ(r.code, cli::kBadInput);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run_cli({"special", catalog_file("T1")}).code, cli::kBadInput);
  EXPECT_EQ(run_cli({"realize", catalog_file("H_I")}).code, cli::kBadInput);
  EXPECT_EQ(run_cli({"maximal", "--in", file("c.txt", "00\thg 1 1 0-1\tk=0\n"), "--out", "-"}).code, cli::kBadInput);
}

TEST_F(CliTest, SpectrumTextAndJson) {
  const std::string f = catalog_file("H_XVII");
  const auto text = run_cli({"spectrum", f});
  ASSERT_EQ(text.code, cli::kOk);
  EXPECT_NE(text.out.find("lambda_min >= -tau: no"), std::string::npos);
  EXPECT_NE(text.out.find("lambda_min >= -1-tau: yes"), std::string::npos);
  const auto json = run_cli({"--json", "spectrum", f});
  ASSERT_EQ(json.code, cli::kOk);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j.at("matrix").size(), 2u);
  EXPECT_NEAR(std::stod(j.at("lambda_min_approx").get<std::string>()), -(3 + std::sqrt(5.0)) / 2, 1e-9);
}

TEST_F(CliTest, SpecialAndDecompose) {
  const auto s = run_cli({"special", catalog_file("H_XVI")});
  ASSERT_EQ(s.code, cli::kOk);
  EXPECT_TRUE(std::holds_alternative<EdgeSignedGraph>(parse_graph(s.out)));
  const auto d = run_cli({"decompose", catalog_file("H_XVI")});
  ASSERT_EQ(d.code, cli::kOk);
  EXPECT_EQ(d.out, "indecomposable\n");
}

TEST_F(CliTest, EnumerateWritesCensusFiles) {
  const fs::path out = dir_ / "enum";
  const auto r = run_cli({"enumerate", "--max-n", "5", "--threshold", "-tau", "--forbid", "T1", "--connected", "--out", out.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream census(slurp(out / "census.txt"));
  const auto lines = read_census(census);
  EXPECT_FALSE(lines.empty());
  for (const auto& l : lines) EXPECT_TRUE(std::holds_alternative<EdgeSignedGraph>(l.graph));
  const auto m = nlohmann::json::parse(slurp(out / "manifest.json"));
  EXPECT_EQ(m.at("tool"), "hoffman");
  EXPECT_EQ(m.at("counts").at("census").at("5").get<int>() + 0, static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const CensusLine& l) {
              return std::get<EdgeSignedGraph>(l.graph).vertex_count() == 5;
            })));
}

TEST_F(CliTest, OutputIsDeterministicAcrossRunsAndJobs) {
  const fs::path a = dir_ / "a", b = dir_ / "b", c = dir_ / "c";
  const std::vector<std::string> base{"enumerate", "--max-n", "6", "--forbid", "T1", "--connected", "--out"};
  auto with = [&](std::vector<std::string> pre, const fs::path& p) {
    pre.insert(pre.end(), base.begin(), base.end());
    pre.push_back(p.string());
    return run_cli(pre).code;
  };
  ASSERT_EQ(with({"--jobs", "1"}, a), cli::kOk);
  ASSERT_EQ(with({"--jobs", "1"}, b), cli::kOk);
  ASSERT_EQ(with({"--jobs", "4"}, c), cli::kOk);
  for (const char* f : {"census.txt", "exceptional.txt", "manifest.json"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(c / f)) << f;
  }
}

TEST_F(CliTest, ClassifyAndMaximalPipeline) {
  const fs::path out = dir_ / "cls";
  const auto r = run_cli({"--jobs", "2", "classify", "--out", out.string()});
  ASSERT_TRUE(r.code == cli::kOk || r.code == cli::kCheckFailed) << r.err;
  EXPECT_EQ(r.out.rfind("irreducible census: ", 0), 0u);
  const auto m = nlohmann::json::parse(slurp(out / "manifest.json"));
  EXPECT_EQ(r.code == cli::kOk, m.at("counts").at("discrepancies").empty() && m.at("counts").at("unrealizable").empty());
  std::istringstream members(slurp(out / "census-37.txt"));
  const auto lines = read_census(members);
  EXPECT_EQ(static_cast<int>(lines.size()), m.at("counts").at("irreducible").get<int>());
  for (const auto& l : lines) {
    ASSERT_TRUE(std::holds_alternative<HoffmanGraph>(l.graph));
    EXPECT_FALSE(validate_hoffman(std::get<HoffmanGraph>(l.graph))) << l.name;
  }

  const auto mx = run_cli({"maximal", "--in", (out / "census-37.txt").string(), "--out", (out / "census-18.txt").string()});
  ASSERT_EQ(mx.code, cli::kOk);
  EXPECT_EQ(mx.out, "maximal: " + std::to_string(m.at("counts").at("maximal").get<int>()) + "\n");
  std::istringstream maximal(slurp(out / "census-18.txt"));
  const auto max_lines = read_census(maximal);
  std::set<std::string> names;
  for (const auto& l : max_lines) names.insert(l.name);
  EXPECT_TRUE(names.count("H_XVI"));
  EXPECT_TRUE(names.count("H_XVII"));
}

TEST_F(CliTest, RealizeEmitsParseableGraphs) {
  const auto r = run_cli({"realize", catalog_file("Q(0,0,3)")});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream in(r.out);
  const auto lines = read_census(in);
  EXPECT_FALSE(lines.empty());
  for (const auto& l : lines) EXPECT_TRUE(std::holds_alternative<HoffmanGraph>(l.graph));
}

TEST_F(CliTest, VerifyCommands) {
  const auto lemmas = run_cli({"verify", "lemma3x"});
  EXPECT_EQ(lemmas.code, cli::kOk) << lemmas.out;
  EXPECT_EQ(run_cli({"verify", "extension", "--p", "0", "--q", "0", "--r", "4"}).code, cli::kOk);
  const auto bad = run_cli({"verify", "extension", "--p", "1", "--q", "1", "--r", "2"});
  EXPECT_EQ(bad.code, cli::kCheckFailed);
  EXPECT_EQ(bad.out.rfind("FAIL extension(1,1,2)", 0), 0u);
}

TEST_F(CliTest, CatalogRoundTrip) {
  for (const char* name : {"H_I", "H_II", "H_III", "H_IV", "H_XVI", "H_XVII", "T1", "T2", "S11", "Q(1,1,2)", "K1T(4)"}) {
    const auto text = run_cli({"catalog", name});
    ASSERT_EQ(text.code, cli::kOk) << name;
    const auto json = run_cli({"--json", "catalog", name});
    ASSERT_EQ(json.code, cli::kOk) << name;
    EXPECT_EQ(to_compact(parse_graph(text.out)), to_compact(parse_graph(json.out))) << name;
  }
}
