#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "hoffman/format.hpp"

using namespace hoffman;

namespace {

std::string position_of(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return "accepted";
}

}  // namespace

TEST(Compact, RoundTripsCatalog) {
  for (const auto& name : catalog::names()) {
    if (name.find('(') != std::string::npos) continue;
    const auto entry = catalog::lookup(name);
    std::visit(
        [&](const auto& g) {
          const AnyGraph any = g;
          EXPECT_EQ(parse_graph(to_compact(any)), any) << name;
          EXPECT_EQ(parse_graph(to_json(any).dump()), any) << name;
        },
        entry);
  }
}

TEST(Compact, ExactText) {
  EXPECT_EQ(to_compact(catalog::h_xvi()), "hg 2 3 0-1,0-2,0-3,1-4");
  EXPECT_EQ(to_compact(catalog::t1()), "sg 3 +0-1 -0-2,-1-2");
  EXPECT_EQ(to_compact(EdgeSignedGraph(2, {}, {})), "sg 2");
  EXPECT_EQ(to_json(catalog::t1()).dump(), R"({"minus":[[0,2],[1,2]],"n":3,"plus":[[0,1]]})");
  EXPECT_EQ(to_json(catalog::h_i()).dump(), R"({"edges":[[0,1]],"fat":1,"slim":1})");
}

TEST(Compact, RandomRoundTrip) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 10;
    const auto s = signed_graph_from(n, [&](int, int) { return static_cast<int>(rng() % 3) - 1; });
    EXPECT_EQ(parse_signed(to_compact(s)), s);
    EXPECT_EQ(signed_from_json(to_json(s)), s);
  }
}

TEST(Parse, ErrorPositions) {
  EXPECT_EQ(position_of("hg 1 1 0-0"), "byte 7");
  EXPECT_EQ(position_of("hg 1 2 0-1,1-2"), "byte 11");
  EXPECT_EQ(position_of("hg 1 2 0-1"), "byte 10");
  EXPECT_EQ(position_of("hg 1 1 0-5"), "byte 7");
  EXPECT_EQ(position_of("sg 3 +0-1 -1-0"), "byte 10");
  EXPECT_EQ(position_of("sg 3 +0-1 x"), "byte 10");
  EXPECT_EQ(position_of("xx"), "byte 0");
  EXPECT_EQ(position_of(R"({"slim":1,"fat":2,"edges":[[0,1],[0,2],[1,2]]})"), "/edges/2");
  EXPECT_EQ(position_of(R"({"slim":1,"fat":1,"edges":[[0,1],[1,0]]})"), "/edges/1");
  EXPECT_EQ(position_of(R"({"n":2,"plus":[[0,1]],"minus":[[0,1]]})"), "/minus/0");
  EXPECT_EQ(position_of(R"({"n":2,"plus":[[0,1]]})"), "/");
  EXPECT_EQ(position_of(R"({"n":2,)"), "byte 8");
  EXPECT_EQ(position_of("hg 1 1 0-1"), "accepted");
}

TEST(Parse, KindSpecificWrappers) {
  EXPECT_THROW(parse_hoffman("sg 2 +0-1"), ParseError);
  EXPECT_THROW(parse_signed("hg 1 1 0-1"), ParseError);
  EXPECT_EQ(parse_hoffman("  hg 2 1 0-2,1-2\n"), catalog::h_iii());
}
