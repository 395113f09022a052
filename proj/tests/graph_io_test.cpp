#include <betti/errors.hpp>
#include <betti/graph_io.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace betti;

TEST_CASE("edge-list parsing") {
  const Graph g = parse_edge_list("# the square\nn 4\n1 2\n2 3  # inline\n\n3 4\n4 1\n");
  CHECK(g == cycle_graph(4));
  CHECK(parse_edge_list("n 3\n").edge_count() == 0);

  CHECK_THROWS_AS(parse_edge_list(""), InvalidArgument);
  CHECK_THROWS_AS(parse_edge_list("1 2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_edge_list("n 3\n1 4\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_edge_list("n 3\n2 2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_edge_list("n 3\n1 x\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_edge_list("n 3\n1 2 3\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_edge_list("n 40\n"), GuardExceeded);
}

TEST_CASE("canonical edge-list output round-trips byte for byte") {
  CHECK(format_edge_list(cycle_graph(4)) == "n 4\n1 2\n1 4\n2 3\n3 4\n");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 12, 0.3, rng);
    const std::string text = format_edge_list(g);
    CHECK(format_edge_list(parse_edge_list(text)) == text);
  }
}

TEST_CASE("graph6 known strings") {
  // Standard encodings: K2 = "A_", path 1-2-3 = "Bg", star at 1 = "Bo", C4 = "Cl", K4 = "C~".
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(parse_graph6("Bg") == path_graph(3));
  CHECK(parse_graph6("Bo") == Graph::from_edge_list(3, {{1, 2}, {1, 3}}));
  CHECK(parse_graph6("Cl") == cycle_graph(4));
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6(">>graph6<<A_\n") == complete_graph(2));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), InvalidArgument);
  CHECK_THROWS_AS(parse_graph6("C"), InvalidArgument);      // missing data byte
  CHECK_THROWS_AS(parse_graph6("C~~"), InvalidArgument);    // extra byte
  CHECK_THROWS_AS(parse_graph6("A`"), InvalidArgument);     // padding bit set
  CHECK_THROWS_AS(parse_graph6("~?@?"), InvalidArgument);   // long header
  CHECK_THROWS_AS(parse_graph6("A "), InvalidArgument);     // byte below 63
}

TEST_CASE("graph6 agrees with the edge-list path") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 10, 0.45, rng);
    const Graph via_g6 = parse_graph6(to_graph6(g));
    const Graph via_edges = parse_edge_list(format_edge_list(g));
    CHECK(via_g6 == via_edges);
    CHECK(via_g6 == g);
  }
}
