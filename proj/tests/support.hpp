#pragma once

// Test-only helpers: fixed small graphs, random inputs, and brute-force
// checkers that do not go through the library code they validate.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "homnet/complex.hpp"
#include "homnet/filtration.hpp"
#include "homnet/graph.hpp"
#include "homnet/netgen.hpp"

namespace homnet::testing {

inline Graph graph_from(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges, bool directed = false) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph(n, std::move(es), directed);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(es));
}

// K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5) are the only non-edges.
inline Graph octahedral_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = i + 1; j < 6; ++j)
      if (j != i + 1 || i % 2 == 1) es.push_back({i, j});
  return Graph(6, std::move(es));
}

// The six maximal simplices of the worked incidence-matrix example, with
// vertices 1..12 shifted to 0..11.
inline std::vector<Simplex> twelve_vertex_simplices() {
  return {Simplex{0, 1, 2, 3}, Simplex{2, 3, 4}, Simplex{4, 7}, Simplex{2, 5, 6}, Simplex{6, 7, 8, 9, 10},
          Simplex{8, 9, 10, 11}};
}

inline SimplicialComplex twelve_vertex_complex() { return SimplicialComplex::from_generators(12, twelve_vertex_simplices()); }

inline std::vector<std::vector<Vertex>> as_vectors(const Filtration& f, std::size_t end) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < end; ++i) {
    auto s = f.simplex(i);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

// Every prefix of the sequence is closed under all (not only codimension-1)
// faces and contains no simplex twice.
inline bool all_prefixes_closed(const std::vector<std::vector<Vertex>>& seq) {
  std::set<std::vector<Vertex>> seen;
  for (const auto& s : seq) {
    if (seen.count(s)) return false;
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      if (!seen.count(face)) return false;
    }
    seen.insert(s);
  }
  return true;
}

// Number of k-cliques by dense adjacency scanning.
inline std::vector<std::size_t> naive_clique_counts(const Graph& g, std::size_t max_size) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<std::size_t> counts(max_size, 0);
  std::vector<Vertex> current;
  auto extend = [&](auto&& self, Vertex from) -> void {
    counts[current.size() - 1]++;
    if (current.size() == max_size) return;
    for (Vertex w = from; w < n; ++w) {
      bool ok = true;
      for (Vertex u : current) ok = ok && adj[u][w];
      if (!ok) continue;
      current.push_back(w);
      self(self, w + 1);
      current.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    current = {v};
    extend(extend, v + 1);
  }
  return counts;
}

// Small random graph with the stated density.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) { return gen_er(n, p, seed); }

inline Graph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && std::uniform_real_distribution<double>(0, 1)(rng) < p) es.push_back({u, v});
  return Graph(n, std::move(es), true);
}

// Random complex from a handful of random generators on few vertices.
inline SimplicialComplex random_complex(std::uint64_t seed, std::size_t vertices = 8, std::size_t generators = 5,
                                        std::size_t max_size = 4) {
  std::mt19937_64 rng(seed);
  std::vector<Simplex> gens;
  for (std::size_t g = 0; g < generators; ++g) {
    const std::size_t size = 1 + rng() % max_size;
    std::vector<Vertex> vs;
    while (vs.size() < size) {
      const Vertex v = static_cast<Vertex>(rng() % vertices);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    gens.push_back(Simplex::from_unsorted(vs));
  }
  return SimplicialComplex::from_generators(vertices, std::move(gens));
}

// Filtration of k with random levels in [0, levels), raised where needed so
// that every face enters no later than its cofaces.
inline Filtration random_level_filtration(const SimplicialComplex& k, std::uint64_t seed, Level levels) {
  std::mt19937_64 rng(seed);
  std::map<std::vector<Vertex>, Level> level_of;
  std::vector<std::pair<Simplex, Level>> seq;
  for (const auto& s : k.simplices().to_vector()) {
    Level l = rng() % levels;
    if (s.vertices.size() > 1)
      for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
        std::vector<Vertex> face = s.vertices;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        l = std::max(l, level_of.at(face));
      }
    level_of[s.vertices] = l;
    seq.emplace_back(s, l);
  }
  return Filtration::from_levels(std::move(seq));
}

}  // namespace homnet::testing
