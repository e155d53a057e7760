#pragma once

// Simplicial complexes built from graphs.
//
// A complex is stored through its generating (inclusion-maximal) simplices
// plus an optional dimension cap; every face of a generator up to the cap is
// a member. All faces are enumerated once at construction into a SimplexList,
// which keeps them grouped by dimension and sorted lexicographically inside
// each group. That (dimension, lexicographic) order is the canonical order
// used everywhere downstream.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "homnet/graph.hpp"
#include "homnet/parallel.hpp"

namespace homnet {

struct Simplex {
  std::vector<Vertex> vertices;

  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vs) : vertices(std::move(vs)) {
    if (vertices.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i - 1] >= vertices[i])
        throw std::invalid_argument("simplex vertices must be strictly increasing");
  }
  Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

  // Sorts and deduplicates arbitrary input.
  static Simplex from_unsorted(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Simplex(std::move(vs));
  }

  std::size_t dim() const noexcept { return vertices.size() - 1; }
  std::span<const Vertex> view() const noexcept { return vertices; }

  // Canonical order: dimension first, then lexicographic.
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

inline bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Simplices grouped by dimension; group d is a flat array with stride d+1,
// sorted lexicographically and duplicate-free.
class SimplexList {
 public:
  SimplexList() = default;

  std::size_t dim_count() const noexcept { return groups_.size(); }
  std::size_t count(std::size_t d) const { return d < groups_.size() ? groups_[d].size() / (d + 1) : 0; }
  std::size_t total() const {
    std::size_t t = 0;
    for (std::size_t d = 0; d < groups_.size(); ++d) t += count(d);
    return t;
  }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> f(groups_.size());
    for (std::size_t d = 0; d < f.size(); ++d) f[d] = count(d);
    return f;
  }

  std::span<const Vertex> at(std::size_t d, std::size_t i) const {
    return {groups_[d].data() + i * (d + 1), d + 1};
  }

  std::optional<std::size_t> find(std::span<const Vertex> s) const {
    const std::size_t d = s.size() - 1;
    if (s.empty() || d >= groups_.size()) return std::nullopt;
    std::size_t lo = 0, hi = count(d);
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (lex_less(at(d, mid), s))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count(d) && std::equal(s.begin(), s.end(), at(d, lo).begin())) return lo;
    return std::nullopt;
  }

  std::vector<Simplex> to_vector() const {
    std::vector<Simplex> out;
    out.reserve(total());
    for (std::size_t d = 0; d < groups_.size(); ++d)
      for (std::size_t i = 0; i < count(d); ++i) {
        auto s = at(d, i);
        out.emplace_back(std::vector<Vertex>(s.begin(), s.end()));
      }
    return out;
  }

  SimplexList truncated(std::size_t max_dim) const {
    SimplexList out;
    out.groups_.assign(groups_.begin(), groups_.begin() + static_cast<std::ptrdiff_t>(
                                                             std::min(groups_.size(), max_dim + 1)));
    return out;
  }

  // Sorts and deduplicates raw groups (stride d+1) in place.
  static SimplexList from_groups(std::vector<std::vector<Vertex>> groups) {
    SimplexList out;
    for (std::size_t d = 0; d < groups.size(); ++d) out.groups_.push_back(canonicalize(groups[d], d + 1));
    while (!out.groups_.empty() && out.groups_.back().empty()) out.groups_.pop_back();
    return out;
  }

 private:
  static std::vector<Vertex> canonicalize(const std::vector<Vertex>& flat, std::size_t stride) {
    const std::size_t n = flat.size() / stride;
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    auto row = [&](std::size_t i) { return std::span<const Vertex>(flat.data() + i * stride, stride); };
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lex_less(row(a), row(b)); });
    std::vector<Vertex> out;
    out.reserve(flat.size());
    for (std::size_t k = 0; k < n; ++k) {
      auto r = row(order[k]);
      if (k > 0 && std::equal(r.begin(), r.end(), row(order[k - 1]).begin())) continue;
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  std::vector<std::vector<Vertex>> groups_;
};

namespace detail {

// Appends every (size)-subset of `s` to `out`, in lexicographic order.
inline void append_subsets(std::span<const Vertex> s, std::size_t size, std::vector<Vertex>& out) {
  if (size == 0 || size > s.size()) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    for (auto i : idx) out.push_back(s[i]);
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == s.size() - size + k - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

enum class ComplexKind { generic, clique, neighborhood, open_neighborhood };

inline const char* to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::clique: return "clique";
    case ComplexKind::neighborhood: return "neighborhood";
    case ComplexKind::open_neighborhood: return "open-neighborhood";
    default: return "generic";
  }
}

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Reduces `generators` to its inclusion-maximal members and enumerates all
  // faces up to `max_dim` (all faces when unset).
  static SimplicialComplex from_generators(std::size_t vertex_count, std::vector<Simplex> generators,
                                           std::optional<std::size_t> max_dim = std::nullopt,
                                           ComplexKind kind = ComplexKind::generic) {
    for (const auto& s : generators)
      if (s.vertices.back() >= vertex_count)
        throw std::invalid_argument("simplex vertex out of range: " + std::to_string(s.vertices.back()));
    return SimplicialComplex(vertex_count, keep_maximal(vertex_count, std::move(generators)), max_dim, kind);
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  ComplexKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> max_dim_cap() const noexcept { return cap_; }

  // Generating simplices before the cap is applied, canonical order.
  const std::vector<Simplex>& maximal_simplices() const noexcept { return maximal_; }

  // True when the cap removed simplices, so homology in the top dimension is
  // not that of the uncapped complex.
  bool truncated() const noexcept { return truncated_; }

  // Dimension of the stored complex, after the cap. -1 for the empty complex.
  long dimension() const noexcept { return static_cast<long>(faces_->dim_count()) - 1; }

  // f-vector f_0, f_1, ...
  std::vector<std::size_t> face_counts() const { return faces_->counts(); }

  const SimplexList& simplices() const noexcept { return *faces_; }

  bool contains(std::span<const Vertex> s) const { return faces_->find(s).has_value(); }

 private:
  SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> maximal, std::optional<std::size_t> cap,
                    ComplexKind kind)
      : vertex_count_(vertex_count), kind_(kind), cap_(cap), maximal_(std::move(maximal)) {
    std::size_t top = 0;
    for (const auto& s : maximal_) top = std::max(top, s.dim());
    const std::size_t limit = cap_ ? std::min(*cap_, top) : top;
    truncated_ = cap_ && top > *cap_;
    faces_ = std::make_shared<const SimplexList>(enumerate_faces(limit));
  }

  SimplexList enumerate_faces(std::size_t limit) const {
    if (maximal_.empty()) return {};
    const unsigned workers = worker_count();
    std::vector<std::vector<std::vector<Vertex>>> parts(workers);
    parallel_chunks(maximal_.size(), workers, [&](unsigned w, std::size_t b, std::size_t e) {
      auto& groups = parts[w];
      groups.resize(limit + 1);
      for (std::size_t i = b; i < e; ++i)
        for (std::size_t d = 0; d <= std::min(limit, maximal_[i].dim()); ++d)
          detail::append_subsets(maximal_[i].view(), d + 1, groups[d]);
    });
    std::vector<std::vector<Vertex>> groups(limit + 1);
    for (auto& part : parts)
      for (std::size_t d = 0; d < part.size(); ++d) groups[d].insert(groups[d].end(), part[d].begin(), part[d].end());
    return SimplexList::from_groups(std::move(groups));
  }

  static std::vector<Simplex> keep_maximal(std::size_t vertex_count, std::vector<Simplex> gens) {
    std::sort(gens.begin(), gens.end(), [](const Simplex& a, const Simplex& b) {
      if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
      return a.vertices < b.vertices;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::vector<std::uint32_t>> containing(vertex_count);
    std::vector<Simplex> kept;
    for (auto& s : gens) {
      Vertex pivot = s.vertices.front();
      for (Vertex v : s.vertices)
        if (containing[v].size() < containing[pivot].size()) pivot = v;
      bool covered = false;
      for (auto idx : containing[pivot]) {
        const auto& t = kept[idx].vertices;
        if (std::includes(t.begin(), t.end(), s.vertices.begin(), s.vertices.end())) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      for (Vertex v : s.vertices) containing[v].push_back(static_cast<std::uint32_t>(kept.size()));
      kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  std::size_t vertex_count_ = 0;
  ComplexKind kind_ = ComplexKind::generic;
  std::optional<std::size_t> cap_;
  bool truncated_ = false;
  std::vector<Simplex> maximal_;
  std::shared_ptr<const SimplexList> faces_ = std::make_shared<const SimplexList>();
};

namespace detail {

// Vertices ordered by repeated removal of a minimum-degree vertex.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.neighbors(v).size());
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  std::size_t d = 0;
  while (order.size() < n) {
    d = d > 0 ? d - 1 : 0;
    while (buckets[d].empty()) ++d;
    const Vertex v = buckets[d].back();
    buckets[d].pop_back();
    if (removed[v] || deg[v] != d) continue;
    removed[v] = 1;
    order.push_back(v);
    for (Vertex u : g.neighbors(v))
      if (!removed[u]) buckets[--deg[u]].push_back(u);
  }
  return order;
}

inline std::vector<Vertex> intersect(const std::vector<Vertex>& a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void bron_kerbosch_pivot(const Graph& g, std::vector<Vertex>& clique, std::vector<Vertex> cand,
                                std::vector<Vertex> excl, std::vector<Simplex>& out) {
  if (cand.empty()) {
    if (excl.empty()) out.push_back(Simplex::from_unsorted(clique));
    return;
  }
  Vertex pivot = cand.front();
  std::size_t best = 0;
  bool first = true;
  for (const auto* set : {&cand, &excl})
    for (Vertex u : *set) {
      auto nb = g.neighbors(u);
      std::size_t hits = 0;
      for (Vertex c : cand) hits += std::binary_search(nb.begin(), nb.end(), c);
      if (first || hits > best) {
        best = hits;
        pivot = u;
        first = false;
      }
    }
  auto pivot_nb = g.neighbors(pivot);
  std::vector<Vertex> branch;
  for (Vertex c : cand)
    if (!std::binary_search(pivot_nb.begin(), pivot_nb.end(), c)) branch.push_back(c);
  for (Vertex v : branch) {
    clique.push_back(v);
    bron_kerbosch_pivot(g, clique, intersect(cand, g.neighbors(v)), intersect(excl, g.neighbors(v)), out);
    clique.pop_back();
    cand.erase(std::lower_bound(cand.begin(), cand.end(), v));
    excl.insert(std::lower_bound(excl.begin(), excl.end(), v), v);
  }
}

}  // namespace detail

// All maximal cliques of an undirected graph, canonical order. Isolated
// vertices are maximal 0-cliques.
inline std::vector<Simplex> maximal_cliques(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("clique complexes require an undirected graph");
  const auto order = detail::degeneracy_order(g);
  std::vector<std::size_t> rank(g.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  const unsigned workers = worker_count();
  std::vector<std::vector<Simplex>> parts(workers);
  parallel_chunks(order.size(), workers, [&](unsigned w, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const Vertex v = order[i];
      std::vector<Vertex> later, earlier;
      for (Vertex u : g.neighbors(v)) (rank[u] > i ? later : earlier).push_back(u);
      std::vector<Vertex> clique{v};
      detail::bron_kerbosch_pivot(g, clique, std::move(later), std::move(earlier), parts[w]);
    }
  });
  std::vector<Simplex> all;
  for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(all.begin(), all.end());
  return all;
}

inline SimplicialComplex clique_complex(const Graph& g, std::optional<std::size_t> max_dim = std::nullopt) {
  return SimplicialComplex::from_generators(g.node_count(), maximal_cliques(g), max_dim, ComplexKind::clique);
}

enum class NeighborhoodConvention {
  closed,  // {v} + N_out(v): adjacency matrix with the diagonal raised by one
  open,    // N_out(v) alone (Lovasz); vertices with no out-neighbours add nothing
};

// One generator per vertex built from its out-neighbourhood (neighbourhood for
// undirected graphs).
inline SimplicialComplex neighborhood_complex(const Graph& g, std::optional<std::size_t> max_dim = std::nullopt,
                                              NeighborhoodConvention convention = NeighborhoodConvention::closed) {
  std::vector<Simplex> gens;
  gens.reserve(g.node_count());
  for (Vertex v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> s(nb.begin(), nb.end());
    if (convention == NeighborhoodConvention::closed)
      s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    else if (s.empty())
      continue;
    gens.emplace_back(std::move(s));
  }
  return SimplicialComplex::from_generators(
      g.node_count(), std::move(gens), max_dim,
      convention == NeighborhoodConvention::closed ? ComplexKind::neighborhood : ComplexKind::open_neighborhood);
}

// All simplices of dimension <= j.
inline SimplicialComplex skeleton(const SimplicialComplex& k, std::size_t j) {
  const std::size_t cap = k.max_dim_cap() ? std::min(*k.max_dim_cap(), j) : j;
  return SimplicialComplex::from_generators(k.vertex_count(), k.maximal_simplices(), cap, k.kind());
}

inline SimplexList enumerate_simplices(const SimplicialComplex& k, std::size_t up_to_dim) {
  if (k.max_dim_cap() && up_to_dim > *k.max_dim_cap())
    throw std::invalid_argument("requested dimension " + std::to_string(up_to_dim) + " exceeds the cap " +
                                std::to_string(*k.max_dim_cap()));
  return k.simplices().truncated(up_to_dim);
}

// The graph formed by the vertices and edges of a complex.
inline Graph one_skeleton_graph(const SimplicialComplex& k) {
  std::vector<Edge> edges;
  const auto& s = k.simplices();
  for (std::size_t i = 0; i < s.count(1); ++i) edges.push_back({s.at(1, i)[0], s.at(1, i)[1]});
  return Graph(k.vertex_count(), std::move(edges));
}

struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> entries;  // row-major

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Rows are the maximal simplices in canonical order, columns the vertices.
inline IncidenceMatrix incidence_matrix(const SimplicialComplex& k) {
  IncidenceMatrix m{k.maximal_simplices().size(), k.vertex_count(), {}};
  m.entries.assign(m.rows * m.cols, 0);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (Vertex v : k.maximal_simplices()[r].vertices) m.entries[r * m.cols + v] = 1;
  return m;
}

inline void write_incidence_csv(const IncidenceMatrix& m, std::ostream& out) {
  out << "simplex";
  for (std::size_t c = 0; c < m.cols; ++c) out << ",v" << c;
  out << '\n';
  for (std::size_t r = 0; r < m.rows; ++r) {
    out << r;
    for (std::size_t c = 0; c < m.cols; ++c) out << ',' << int(m(r, c));
    out << '\n';
  }
}

// Complex file: `#vertices N`, optional `#max_dim D`, then one maximal
// simplex per line as space-separated ids. Other `#` lines are comments.
inline void save_complex(const SimplicialComplex& k, std::ostream& out) {
  out << "#vertices " << k.vertex_count() << '\n';
  if (k.max_dim_cap()) out << "#max_dim " << *k.max_dim_cap() << '\n';
  for (const auto& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) out << (i ? " " : "") << s.vertices[i];
    out << '\n';
  }
}

inline SimplicialComplex load_complex(std::istream& in) {
  std::size_t vertices = 0;
  std::optional<std::size_t> cap;
  std::vector<Simplex> gens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty()) continue;
    const auto toks = detail::split_ws(s);
    if (s.front() == '#') {
      if (toks.front() == "#vertices" || toks.front() == "#max_dim") {
        if (toks.size() != 2) throw ParseError(lineno, "expected '" + std::string(toks.front()) + " N'");
        const auto value = static_cast<std::size_t>(detail::parse_id(toks[1], lineno));
        if (toks.front() == "#vertices")
          vertices = value;
        else
          cap = value;
      }
      continue;
    }
    std::vector<Vertex> vs;
    for (auto t : toks) {
      const auto id = detail::parse_id(t, lineno);
      if (id > 0xFFFFFFFEull) throw ParseError(lineno, "vertex id too large");
      vs.push_back(static_cast<Vertex>(id));
    }
    auto simplex = Simplex::from_unsorted(std::move(vs));
    vertices = std::max<std::size_t>(vertices, simplex.vertices.back() + 1);
    gens.push_back(std::move(simplex));
  }
  return SimplicialComplex::from_generators(vertices, std::move(gens), cap);
}

}  // namespace homnet
