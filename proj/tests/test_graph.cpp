#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "homnet/graph.hpp"
#include "homnet/netgen.hpp"
#include "support.hpp"

using namespace homnet;
using homnet::testing::complete_graph;

TEST_CASE("load_edge_list reads pairs and infers the node count", "[graph]") {
  const Graph g = load_edge_list("0 1\n1 2");
  CHECK(g.node_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_FALSE(g.directed());
}

TEST_CASE("load_edge_list honours the #nodes header", "[graph]") {
  const Graph g = load_edge_list("#nodes 5\n");
  CHECK(g.node_count() == 5);
  CHECK(g.edge_count() == 0);

  // declared count below the largest id is raised
  CHECK(load_edge_list("#nodes 2\n0 4\n").node_count() == 5);
}

TEST_CASE("load_edge_list skips comments and canonicalizes undirected edges", "[graph]") {
  const Graph g = load_edge_list("# a comment\n\n2 0\n0 2\n  1   2  \n");
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("load_edge_list rejects bad input with a line number", "[graph]") {
  auto line_of = [](const std::string& text) {
    try {
      load_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 0") == 1);
  CHECK(line_of("0 1\n1 -2\n") == 2);
  CHECK(line_of("0 1\n\n1 2 3\n") == 3);
  CHECK(line_of("0 x\n") == 1);
  CHECK(line_of("#nodes\n") == 1);
  CHECK_THROWS_WITH(load_edge_list("3 3"), Catch::Matchers::ContainsSubstring("self-loop"));
  CHECK_THROWS_WITH(load_edge_list("1 -2"), Catch::Matchers::ContainsSubstring("negative"));
}

TEST_CASE("directed edge lists keep orientation", "[graph]") {
  const Graph g = load_edge_list("1 0\n0 1\n", {.directed = true});
  CHECK(g.directed());
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.degree(0) == 2);
}

TEST_CASE("sparse ids can be remapped", "[graph]") {
  std::istringstream in("100 7\n7 5000\n");
  const auto loaded = load_edge_list_with_ids(in, {.remap_ids = true});
  CHECK(loaded.graph.node_count() == 3);
  CHECK(loaded.original_ids == std::vector<std::uint64_t>{100, 7, 5000});
  CHECK(loaded.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("save_edge_list output format", "[graph]") {
  CHECK(save_edge_list(Graph(3, {{0, 1}})) == "#nodes 3\n0 1\n");
  CHECK(save_edge_list(Graph(1, {})) == "#nodes 1\n");
  CHECK(save_edge_list(Graph(2, {{1, 0}}, true)) == "#nodes 2\n#directed\n1 0\n");
}

TEST_CASE("edge-list round trip is the identity", "[graph][property]") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    // about 100 edges on 45 nodes
    const Graph g = gen_er(45, 0.1, seed);
    const std::string text = save_edge_list(g);
    const Graph back = load_edge_list(text);
    REQUIRE(back == g);
    REQUIRE(save_edge_list(back) == text);
  }
  const Graph d = homnet::testing::random_digraph(12, 0.3, 5);
  CHECK(load_edge_list(save_edge_list(d)) == d);
}

TEST_CASE("graph construction enforces invariants", "[graph]") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
  CHECK(Graph(3, {{2, 1}, {1, 2}}).edges() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("degree_histogram", "[graph]") {
  CHECK(degree_histogram(complete_graph(4)) == std::map<std::size_t, std::size_t>{{3, 4}});
  CHECK(degree_histogram(Graph(3, {{0, 1}, {1, 2}})) == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}});

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = gen_er(300, 0.02, seed);
    std::size_t mass = 0, weighted = 0;
    for (auto [k, c] : degree_histogram(g)) {
      mass += c;
      weighted += k * c;
    }
    CHECK(mass == g.node_count());
    CHECK(weighted == 2 * g.edge_count());
  }
}
