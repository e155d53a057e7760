#pragma once

// Seeded generators for random, exponential-degree and scale-free modular
// networks. Every generator is a pure function of its parameters and seed;
// the order in which each one consumes the random stream is documented on
// the function and must not change between releases.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "homnet/graph.hpp"
#include "homnet/rng.hpp"

namespace homnet {

struct ErParams {
  std::size_t n = 0;
  double p = 0.0;
};

struct ExpParams {
  std::size_t n = 0;
  double k_star = 1.0;
  // Largest admissible degree; 0 means n-1. Always clipped to n-1.
  std::size_t k_max = 0;
};

struct SfmParams {
  std::size_t n = 0;
  std::size_t m = 1;     // links added by each joining node
  double p0 = 0.0;       // probability that a node founds a new module
  double alpha = 1.0;    // 1-alpha is the triad-formation probability
};

struct GeneratorParams {
  std::variant<ErParams, ExpParams, SfmParams> variant;
  std::uint64_t seed = 0;
};

inline void validate(const ErParams& p) {
  if (!(p.p >= 0.0 && p.p <= 1.0))
    throw std::invalid_argument("link probability p must lie in [0,1], got " + std::to_string(p.p));
}

inline void validate(const ExpParams& p) {
  if (p.n < 4) throw std::invalid_argument("exponential generator needs n >= 4");
  if (!(p.k_star > 0.0) || !std::isfinite(p.k_star))
    throw std::invalid_argument("k_star must be positive, got " + std::to_string(p.k_star));
}

inline void validate(const SfmParams& p) {
  if (p.m < 1) throw std::invalid_argument("M must be at least 1");
  if (!(p.p0 >= 0.0 && p.p0 <= 1.0))
    throw std::invalid_argument("P0 must lie in [0,1], got " + std::to_string(p.p0));
  if (!(p.alpha > 0.0 && p.alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0,1], got " + std::to_string(p.alpha));
  if (p.n <= p.m + 1) throw std::invalid_argument("scale-free generator needs n > M+1");
}

// Erdos-Renyi G(n,p). Stream: one word per unordered pair (i,j), i<j, in
// lexicographic order.
inline Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  validate(ErParams{n, p});
  Rng rng = make_rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (bernoulli(rng, p)) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

// Mean of the law P(k) ~ exp(-k/k_star) truncated to [2, k_max].
inline double truncated_exponential_mean(double k_star, std::size_t k_max) {
  double mass = 0.0, first = 0.0;
  for (std::size_t k = 2; k <= k_max; ++k) {
    const double w = std::exp(-static_cast<double>(k) / k_star);
    mass += w;
    first += static_cast<double>(k) * w;
  }
  return first / mass;
}

// Configuration model with exponentially distributed target degrees.
//
// Stream: one word per node (degree draw, nodes in id order); the degree sum
// is made even by incrementing the lowest-id node below k_max; the stub list
// (node v repeated deg(v) times, ascending) is shuffled; consecutive stubs are
// paired. Self-loops and repeated pairs are then removed by degree-preserving
// double-edge swaps: each attempt draws a partner edge index and an
// orientation word.
inline Graph gen_exponential(std::size_t n, double k_star, std::uint64_t seed, std::size_t k_max = 0) {
  validate(ExpParams{n, k_star, k_max});
  if (k_max == 0 || k_max > n - 1) k_max = n - 1;

  std::vector<double> cumulative;
  cumulative.reserve(k_max - 1);
  double total = 0.0;
  for (std::size_t k = 2; k <= k_max; ++k) {
    total += std::exp(-static_cast<double>(k) / k_star);
    cumulative.push_back(total);
  }

  Rng rng = make_rng(seed);
  std::vector<std::size_t> degree(n);
  std::size_t stub_total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const double u = uniform01(rng) * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    degree[v] = 2 + static_cast<std::size_t>(it - cumulative.begin());
    stub_total += degree[v];
  }
  if (stub_total % 2 == 1) {
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] < k_max) {
        ++degree[v];
        ++stub_total;
        break;
      }
    }
    if (stub_total % 2 == 1) throw std::runtime_error("cannot make the degree sum even");
  }

  std::vector<Vertex> stubs;
  stubs.reserve(stub_total);
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), degree[v], static_cast<Vertex>(v));
  shuffle(rng, std::span<Vertex>(stubs));

  std::vector<Edge> edges(stub_total / 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Vertex a = stubs[2 * i], b = stubs[2 * i + 1];
    edges[i] = {std::min(a, b), std::max(a, b)};
  }

  auto key = [](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_map<std::uint64_t, std::uint32_t> multiplicity;
  for (const auto& e : edges) ++multiplicity[key(e.u, e.v)];
  auto is_bad = [&](const Edge& e) { return e.u == e.v || multiplicity[key(e.u, e.v)] > 1; };

  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (is_bad(edges[i])) bad.push_back(i);

  const std::size_t max_attempts = 1000 + 100 * edges.size();
  std::size_t attempts = 0;
  std::size_t cursor = 0;
  while (cursor < bad.size()) {
    const std::size_t i = bad[cursor];
    if (!is_bad(edges[i])) {
      ++cursor;
      continue;
    }
    // Non-graphical draws (possible for tiny n) cannot be repaired; the
    // leftover loops and repeats are erased below.
    if (++attempts > max_attempts) break;
    const auto r = static_cast<std::size_t>(uniform_index(rng, edges.size()));
    const bool cross = uniform_index(rng, 2) == 1;
    if (r == i) continue;
    const Edge e1 = edges[i], e2 = edges[r];
    Edge n1{e1.u, cross ? e2.v : e2.u};
    Edge n2{e1.v, cross ? e2.u : e2.v};
    if (n1.u == n1.v || n2.u == n2.v) continue;
    if (key(n1.u, n1.v) == key(n2.u, n2.v)) continue;
    if (multiplicity[key(n1.u, n1.v)] > 0 || multiplicity[key(n2.u, n2.v)] > 0) continue;
    --multiplicity[key(e1.u, e1.v)];
    --multiplicity[key(e2.u, e2.v)];
    ++multiplicity[key(n1.u, n1.v)];
    ++multiplicity[key(n2.u, n2.v)];
    edges[i] = {std::min(n1.u, n1.v), std::max(n1.u, n1.v)};
    edges[r] = {std::min(n2.u, n2.v), std::max(n2.u, n2.v)};
  }
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  return Graph(n, std::move(edges));
}

struct SfmResult {
  Graph graph;
  std::vector<std::uint32_t> module_of;
  std::size_t module_count = 0;
};

// Growing scale-free network with modules and triad formation.
//
// Nodes 0..M form a clique that founds module 0. Each later node v draws:
//   1 word: founds a new module with probability P0. A founder draws 1 word
//           for a single bridge link to an existing node chosen with weight
//           k+1 over the whole network, and adds no other links.
//   else 1 word: module chosen with probability proportional to its size,
//           then min(M, module size) distinct links. The first is
//           preferential within the module (weight k+1, 1 word). Each later
//           link draws 1 word; with probability 1-alpha it is a triad link to
//           a uniformly chosen eligible neighbour of the previous target
//           (1 word), otherwise, or when no neighbour is eligible, a fresh
//           preferential link within the module (1 word).
// A joining node's links are placed after all its targets are chosen, so
// weights use the degrees from before its arrival.
inline SfmResult gen_sf_modular_detailed(std::size_t n, std::size_t m, double p0, double alpha,
                                         std::uint64_t seed) {
  validate(SfmParams{n, m, p0, alpha});
  Rng rng = make_rng(seed);

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::uint32_t> module_of(n, 0);
  std::vector<std::vector<Vertex>> members{{}};
  std::vector<Edge> edges;

  auto link = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.push_back({std::min(a, b), std::max(a, b)});
  };
  auto weight = [&](Vertex x) { return static_cast<double>(adj[x].size() + 1); };

  // Weighted pick among candidates passing `eligible`; one word.
  auto preferential = [&](const std::vector<Vertex>& pool, auto&& eligible) -> std::int64_t {
    double total = 0.0;
    for (Vertex x : pool)
      if (eligible(x)) total += weight(x);
    const double u = uniform01(rng) * total;
    if (total <= 0.0) return -1;
    double acc = 0.0;
    std::int64_t last = -1;
    for (Vertex x : pool) {
      if (!eligible(x)) continue;
      acc += weight(x);
      last = x;
      if (u < acc) return x;
    }
    return last;
  };

  for (Vertex v = 0; v <= m; ++v) {
    members[0].push_back(v);
    for (Vertex u = 0; u < v; ++u) link(u, v);
  }

  std::vector<Vertex> everyone(members[0]);
  for (Vertex v = static_cast<Vertex>(m + 1); v < n; ++v) {
    if (bernoulli(rng, p0)) {
      const auto target = preferential(everyone, [](Vertex) { return true; });
      module_of[v] = static_cast<std::uint32_t>(members.size());
      members.push_back({v});
      link(v, static_cast<Vertex>(target));
      everyone.push_back(v);
      continue;
    }

    // Module proportional to size: a uniform existing node's module.
    const auto pick = static_cast<std::size_t>(uniform_index(rng, everyone.size()));
    const std::uint32_t mod = module_of[everyone[pick]];
    auto& pool = members[mod];
    const std::size_t links = std::min(m, pool.size());

    std::vector<Vertex> chosen;
    auto unchosen = [&](Vertex x) { return std::find(chosen.begin(), chosen.end(), x) == chosen.end(); };
    chosen.push_back(static_cast<Vertex>(preferential(pool, unchosen)));
    while (chosen.size() < links) {
      const bool triad = bernoulli(rng, 1.0 - alpha);
      std::int64_t next = -1;
      if (triad) {
        std::vector<Vertex> candidates;
        for (Vertex x : adj[chosen.back()])
          if (x != v && unchosen(x)) candidates.push_back(x);
        if (!candidates.empty())
          next = candidates[static_cast<std::size_t>(uniform_index(rng, candidates.size()))];
      }
      if (next < 0) next = preferential(pool, unchosen);
      chosen.push_back(static_cast<Vertex>(next));
    }
    for (Vertex t : chosen) link(v, t);
    module_of[v] = mod;
    pool.push_back(v);
    everyone.push_back(v);
  }

  SfmResult out;
  out.module_count = members.size();
  out.module_of = std::move(module_of);
  out.graph = Graph(n, std::move(edges));
  return out;
}

inline Graph gen_sf_modular(std::size_t n, std::size_t m, double p0, double alpha, std::uint64_t seed) {
  return gen_sf_modular_detailed(n, m, p0, alpha, seed).graph;
}

inline Graph generate(const GeneratorParams& params) {
  return std::visit(
      [&](const auto& p) -> Graph {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ErParams>)
          return gen_er(p.n, p.p, params.seed);
        else if constexpr (std::is_same_v<P, ExpParams>)
          return gen_exponential(p.n, p.k_star, params.seed, p.k_max);
        else
          return gen_sf_modular(p.n, p.m, p.p0, p.alpha, params.seed);
      },
      params.variant);
}

}  // namespace homnet
