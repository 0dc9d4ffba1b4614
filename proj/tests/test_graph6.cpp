#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/error.hpp"
#include "spectra/graph6.hpp"

namespace spectra {
namespace {

TEST(Graph6, Star) {
  const Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.degree(4), 4);
  EXPECT_EQ(write_graph6(g), "D?{");
}

TEST(Graph6, SingleVertex) {
  const Graph g = parse_graph6("@");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(write_graph6(Graph(0)), "?");
}

TEST(Graph6, PathInGraph6Order) {
  const Graph g = parse_graph6("DQc");
  const std::vector<std::pair<int, int>> expected{{0, 2}, {1, 3}, {0, 4}, {3, 4}};
  EXPECT_EQ(g.size(), 4);
  for (auto [i, j] : expected) EXPECT_TRUE(g.adjacent(i, j)) << i << "," << j;
  EXPECT_EQ(diameter(g), 4);
}

TEST(Graph6, Triangle) {
  EXPECT_EQ(parse_graph6("Bw"), families::complete(3));
  EXPECT_EQ(write_graph6(families::complete(3)), "Bw");
}

TEST(Graph6, HeaderAndLineEndingsAreAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), families::complete(3));
  EXPECT_EQ(parse_graph6("Bw\r\n"), families::complete(3));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6(":Bw"), ParseError);      // sparse6
  EXPECT_THROW(parse_graph6("&Bw"), ParseError);      // digraph6
  EXPECT_THROW(parse_graph6("D?"), ParseError);       // truncated
  EXPECT_THROW(parse_graph6("D?{x"), ParseError);     // trailing data
  EXPECT_THROW(parse_graph6("Bx"), ParseError);       // nonzero padding
  EXPECT_THROW(parse_graph6("B\x7f"), ParseError);    // byte out of range
  EXPECT_THROW(parse_graph6("~??"), ParseError);      // truncated header
  EXPECT_THROW(parse_graph6("~??D"), ParseError);     // non-canonical medium header
  EXPECT_THROW(parse_graph6("~~??????"), ParseError); // long form unsupported
}

TEST(Graph6, MediumHeaderRoundTrip) {
  const Graph g = families::cycle(100);
  const std::string text = write_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~?@c");
  EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, RoundTripsEveryGraphUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, false, [](std::uint64_t, const Graph& g) {
      ASSERT_EQ(parse_graph6(write_graph6(g)), g);
    });
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 80, 0.4, rng);
    ASSERT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

}  // namespace
}  // namespace spectra
