#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>
#include <sstream>

#include "homnet/complex.hpp"
#include "homnet/netgen.hpp"
#include "support.hpp"

using namespace homnet;
using namespace homnet::testing;

using Counts = std::vector<std::size_t>;

TEST_CASE("clique_complex face counts", "[complex]") {
  CHECK(clique_complex(complete_graph(4)).face_counts() == Counts{4, 6, 4, 1});
  CHECK(clique_complex(cycle_graph(5)).face_counts() == Counts{5, 5});
  CHECK(clique_complex(octahedral_graph()).face_counts() == Counts{6, 12, 8});
  CHECK(clique_complex(complete_graph(4)).dimension() == 3);
  CHECK(clique_complex(Graph(3, {})).face_counts() == Counts{3});
}

TEST_CASE("clique_complex maximal simplices are the maximal cliques", "[complex]") {
  const Graph g = graph_from(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const auto k = clique_complex(g);
  CHECK(k.maximal_simplices() == std::vector<Simplex>{Simplex{5}, Simplex{2, 3}, Simplex{3, 4}, Simplex{0, 1, 2}});
  CHECK_THROWS_AS(clique_complex(Graph(2, {{0, 1}}, true)), std::invalid_argument);
}

TEST_CASE("clique_complex cap truncates and flags", "[complex]") {
  const auto k = clique_complex(complete_graph(6), 2);
  CHECK(k.face_counts() == Counts{6, 15, 20});
  CHECK(k.truncated());
  CHECK(k.dimension() == 2);
  CHECK_FALSE(clique_complex(complete_graph(3), 2).truncated());
}

TEST_CASE("maximal cliques do not depend on the worker count", "[complex]") {
  const Graph g = gen_er(150, 0.15, 8);
  ::setenv("HOMNET_THREADS", "1", 1);
  const auto one = maximal_cliques(g);
  ::setenv("HOMNET_THREADS", "4", 1);
  const auto four = maximal_cliques(g);
  const auto faces4 = clique_complex(g).simplices().to_vector();
  ::setenv("HOMNET_THREADS", "1", 1);
  const auto faces1 = clique_complex(g).simplices().to_vector();
  ::unsetenv("HOMNET_THREADS");
  CHECK(one == four);
  CHECK(faces1 == faces4);
}

TEST_CASE("neighborhood_complex examples", "[complex]") {
  CHECK(neighborhood_complex(complete_graph(3)).maximal_simplices() == std::vector<Simplex>{Simplex{0, 1, 2}});

  const Graph star = graph_from(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(neighborhood_complex(star).maximal_simplices() == std::vector<Simplex>{Simplex{0, 1, 2, 3}});

  const Graph path = graph_from(3, {{0, 1}, {1, 2}}, true);
  CHECK(neighborhood_complex(path).maximal_simplices() == std::vector<Simplex>{Simplex{0, 1}, Simplex{1, 2}});
}

TEST_CASE("open neighborhood convention drops the vertex itself", "[complex]") {
  const auto k = neighborhood_complex(complete_graph(3), std::nullopt, NeighborhoodConvention::open);
  CHECK(k.maximal_simplices() == std::vector<Simplex>{Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}});
  CHECK(k.kind() == ComplexKind::open_neighborhood);
  // an isolated edge splits into two points
  const auto e = neighborhood_complex(Graph(2, {{0, 1}}), std::nullopt, NeighborhoodConvention::open);
  CHECK(e.face_counts() == Counts{2});
}

TEST_CASE("neighborhood incidence rows are the maximal rows of A + I", "[complex][property]") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_digraph(9, 0.25, seed);
    const auto k = neighborhood_complex(g);
    const auto m = incidence_matrix(k);
    std::vector<std::vector<std::uint8_t>> a_plus_i(9, std::vector<std::uint8_t>(9, 0));
    for (Vertex v = 0; v < 9; ++v) a_plus_i[v][v] = 1;
    for (const auto& e : g.edges()) a_plus_i[e.u][e.v] = 1;

    std::set<std::vector<std::uint8_t>> rows;
    for (std::size_t r = 0; r < m.rows; ++r)
      rows.insert(std::vector<std::uint8_t>(m.entries.begin() + r * 9, m.entries.begin() + (r + 1) * 9));
    auto covers = [](const std::vector<std::uint8_t>& big, const std::vector<std::uint8_t>& small) {
      for (std::size_t c = 0; c < big.size(); ++c)
        if (small[c] && !big[c]) return false;
      return true;
    };
    for (const auto& row : rows) REQUIRE(std::find(a_plus_i.begin(), a_plus_i.end(), row) != a_plus_i.end());
    for (const auto& row : a_plus_i)
      REQUIRE(std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return covers(r, row); }));
  }
}

TEST_CASE("incidence_matrix of the worked example", "[complex]") {
  const auto k = twelve_vertex_complex();
  const auto m = incidence_matrix(k);
  REQUIRE(m.rows == 6);
  REQUIRE(m.cols == 12);
  std::set<std::vector<Vertex>> expected;
  for (const auto& s : twelve_vertex_simplices()) expected.insert(s.vertices);
  std::set<std::vector<Vertex>> got;
  std::multiset<std::size_t> weights;
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::vector<Vertex> row;
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m(r, c)) row.push_back(static_cast<Vertex>(c));
    weights.insert(row.size());
    got.insert(row);
  }
  CHECK(got == expected);
  CHECK(weights == std::multiset<std::size_t>{2, 3, 3, 4, 4, 5});
  CHECK(k.dimension() == 4);

  const auto single = incidence_matrix(SimplicialComplex::from_generators(1, {Simplex{0}}));
  CHECK((single.rows == 1 && single.cols == 1 && single(0, 0) == 1));
  const auto tri = incidence_matrix(clique_complex(complete_graph(3)));
  CHECK(tri.entries == std::vector<std::uint8_t>{1, 1, 1});

  std::ostringstream csv;
  write_incidence_csv(tri, csv);
  CHECK(csv.str() == "simplex,v0,v1,v2\n0,1,1,1\n");
}

TEST_CASE("skeleton", "[complex]") {
  const auto k4 = clique_complex(complete_graph(4));
  const auto s1 = skeleton(k4, 1);
  CHECK(s1.face_counts() == Counts{4, 6});
  CHECK(one_skeleton_graph(s1) == complete_graph(4));
  CHECK(skeleton(k4, 3).simplices().to_vector() == k4.simplices().to_vector());
  CHECK(skeleton(k4, 9).simplices().to_vector() == k4.simplices().to_vector());

  const auto points = skeleton(twelve_vertex_complex(), 0);
  CHECK(points.face_counts() == Counts{12});

  // nesting
  const auto twelve = twelve_vertex_complex();
  for (std::size_t j = 0; j < 4; ++j) {
    const auto lower = skeleton(twelve, j).simplices().to_vector();
    const auto upper = skeleton(twelve, j + 1);
    for (const auto& s : lower) REQUIRE(upper.contains(s.view()));
  }
}

TEST_CASE("enumerate_simplices order and counts", "[complex]") {
  const auto k3 = clique_complex(complete_graph(3));
  CHECK(enumerate_simplices(k3, 2).to_vector() ==
        std::vector<Simplex>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK(enumerate_simplices(clique_complex(cycle_graph(5)), 2).total() == 10);
  CHECK(enumerate_simplices(k3, 1).total() == 6);
  CHECK_THROWS_AS(enumerate_simplices(clique_complex(complete_graph(5), 2), 3), std::invalid_argument);
}

TEST_CASE("clique counts agree with a naive counter on a sparse random graph", "[complex][slow]") {
  const Graph g = gen_er(2000, 0.005, 1);
  const auto k = clique_complex(g, 3);
  const auto naive = naive_clique_counts(g, 4);
  const auto f = enumerate_simplices(k, 3).counts();
  for (std::size_t d = 0; d < f.size(); ++d) CHECK(f[d] == naive[d]);
  for (std::size_t d = f.size(); d < 4; ++d) CHECK(naive[d] == 0);
}

TEST_CASE("enumerated simplices are closed under faces", "[complex][property]") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = random_graph(10, 0.5, seed);
    const auto all = clique_complex(g).simplices().to_vector();
    std::set<std::vector<Vertex>> members;
    for (const auto& s : all) members.insert(s.vertices);
    for (const auto& s : all) {
      const std::size_t n = s.vertices.size();
      for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) face.push_back(s.vertices[i]);
        REQUIRE(members.count(face) == 1);
      }
    }
    // f_k counts (k+1)-cliques
    const auto naive = naive_clique_counts(g, 10);
    const auto f = clique_complex(g).face_counts();
    for (std::size_t d = 0; d < f.size(); ++d) REQUIRE(f[d] == naive[d]);
  }
}

TEST_CASE("clique complex of the 1-skeleton is idempotent on flag complexes", "[complex][property]") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto k = clique_complex(random_graph(11, 0.45, seed));
    const auto again = clique_complex(one_skeleton_graph(k));
    REQUIRE(again.maximal_simplices() == k.maximal_simplices());
  }
}

TEST_CASE("generators reduce to maximal simplices", "[complex]") {
  const auto k = SimplicialComplex::from_generators(5, {Simplex{0, 1}, Simplex{0, 1, 2}, Simplex{1, 2}, Simplex{3},
                                                        Simplex{0, 1, 2}});
  CHECK(k.maximal_simplices() == std::vector<Simplex>{Simplex{3}, Simplex{0, 1, 2}});
  CHECK_THROWS_AS(SimplicialComplex::from_generators(2, {Simplex{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Simplex({2, 1}), std::invalid_argument);
}

TEST_CASE("complex file round trip", "[complex]") {
  const auto k = clique_complex(random_graph(12, 0.4, 3), 3);
  std::ostringstream out;
  save_complex(k, out);
  std::istringstream in(out.str());
  const auto back = load_complex(in);
  CHECK(back.vertex_count() == k.vertex_count());
  CHECK(back.max_dim_cap() == k.max_dim_cap());
  CHECK(back.maximal_simplices() == k.maximal_simplices());
  CHECK(back.simplices().to_vector() == k.simplices().to_vector());

  std::istringstream bad("#vertices 3\n0 1\n2 x\n");
  CHECK_THROWS_AS(load_complex(bad), ParseError);
}
