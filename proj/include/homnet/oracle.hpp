#pragma once

// Brute-force homology by dense GF(2) Gaussian elimination.
//
// This engine shares no code with the reduction in persistence.hpp: it
// regenerates faces from the generating simplices, indexes them with
// std::map, and works on dense bit rows. It exists to cross-check the
// persistence engine on small inputs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "homnet/complex.hpp"
#include "homnet/filtration.hpp"

namespace homnet::oracle {

inline constexpr std::size_t kSizeGuard = 20000;

class SizeGuardError : public std::length_error {
 public:
  explicit SizeGuardError(std::size_t total)
      : std::length_error("oracle size guard exceeded: " + std::to_string(total) + " simplices > " +
                          std::to_string(kSizeGuard)) {}
};

class BitRow {
 public:
  explicit BitRow(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void operator^=(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }
  // Lowest set bit at or above `from`, or npos.
  std::size_t first_from(std::size_t from) const {
    for (std::size_t w = from / 64; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      if (w == from / 64) word &= ~std::uint64_t{0} << (from % 64);
      if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    }
    return npos;
  }
  bool none_below(std::size_t limit) const {
    const std::size_t f = first_from(0);
    return f == npos || f >= limit;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

// Reduces rows to echelon form in place (pivot = lowest set bit) and returns
// the rank; zero rows are moved to the end.
inline std::size_t eliminate(std::vector<BitRow>& rows) {
  std::size_t rank = 0;
  std::size_t col = 0;
  for (;;) {
    std::size_t best = BitRow::npos, best_row = 0;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      const auto lead = rows[r].first_from(col);
      if (lead < best) {
        best = lead;
        best_row = r;
      }
    }
    if (best == BitRow::npos) break;
    std::swap(rows[rank], rows[best_row]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r].test(best)) rows[r] ^= rows[rank];
    ++rank;
    col = best + 1;
  }
  return rank;
}

using SimplexSet = std::map<std::vector<Vertex>, std::size_t>;  // simplex -> index within its dimension

struct DimRank {
  std::size_t simplices = 0;     // f_k
  std::size_t boundary_rank = 0; // rank of the boundary map out of dimension k
  std::size_t cycle_rank = 0;    // rank Z_k
  std::size_t bounding_rank = 0; // rank B_k
  std::size_t betti = 0;
};

struct RankReport {
  std::vector<DimRank> dims;

  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> out;
    for (const auto& d : dims) out.push_back(d.betti);
    return out;
  }
};

namespace detail {

inline void add_with_faces(const std::vector<Vertex>& s, std::size_t max_dim, std::vector<std::set<std::vector<Vertex>>>& by_dim) {
  if (s.empty()) return;
  const std::size_t d = s.size() - 1;
  if (d <= max_dim) {
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    if (!by_dim[d].insert(s).second) return;
  }
  if (s.size() == 1) return;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::vector<Vertex> face;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) face.push_back(s[i]);
    add_with_faces(face, max_dim, by_dim);
  }
}

inline std::vector<SimplexSet> index_sets(const std::vector<std::set<std::vector<Vertex>>>& by_dim) {
  std::vector<SimplexSet> out(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    std::size_t i = 0;
    for (const auto& s : by_dim[d]) out[d].emplace(s, i++);
  }
  return out;
}

// Boundary of each k-simplex of `upper` as a bit row over `lower`.
inline std::vector<BitRow> boundary_rows(const SimplexSet& upper, const SimplexSet& lower, std::size_t width) {
  std::vector<BitRow> rows;
  rows.reserve(upper.size());
  for (const auto& [s, idx] : upper) {
    BitRow row(width);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      auto it = lower.find(face);
      if (it == lower.end()) throw std::logic_error("oracle: complex not closed under faces");
      row.set(it->second);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RankReport ranks(const std::vector<SimplexSet>& sets, std::size_t up_to) {
  auto count = [&](std::size_t d) { return d < sets.size() ? sets[d].size() : 0; };
  auto rank_of = [&](std::size_t d) -> std::size_t {  // rank of boundary from dimension d
    if (d == 0 || d >= sets.size()) return 0;
    auto rows = boundary_rows(sets[d], sets[d - 1], count(d - 1));
    return eliminate(rows);
  };
  RankReport report;
  std::size_t next_rank = rank_of(0);
  for (std::size_t d = 0; d <= up_to; ++d) {
    DimRank r;
    r.simplices = count(d);
    r.boundary_rank = next_rank;
    next_rank = rank_of(d + 1);
    r.cycle_rank = r.simplices - r.boundary_rank;
    r.bounding_rank = next_rank;
    r.betti = r.cycle_rank - r.bounding_rank;
    report.dims.push_back(r);
  }
  return report;
}

}  // namespace detail

// Exact ranks for dimensions 0..up_to of an explicit simplex family (closed
// under faces by construction).
inline RankReport betti_bruteforce(const std::vector<std::vector<Vertex>>& generators, std::size_t up_to,
                                   std::size_t max_dim = static_cast<std::size_t>(-1)) {
  std::vector<std::set<std::vector<Vertex>>> by_dim;
  for (const auto& g : generators) detail::add_with_faces(g, max_dim, by_dim);
  std::size_t total = 0;
  for (std::size_t d = 0; d < by_dim.size() && d <= up_to + 1; ++d) total += by_dim[d].size();
  if (total > kSizeGuard) throw SizeGuardError(total);
  return detail::ranks(detail::index_sets(by_dim), up_to);
}

inline RankReport betti_bruteforce(const SimplicialComplex& k, std::size_t up_to) {
  std::vector<std::vector<Vertex>> gens;
  for (const auto& s : k.maximal_simplices()) gens.push_back(s.vertices);
  const auto cap = k.max_dim_cap().value_or(static_cast<std::size_t>(-1));
  // Capped generators contribute all their faces up to the cap.
  std::vector<std::vector<Vertex>> capped;
  for (const auto& g : gens) {
    if (cap == static_cast<std::size_t>(-1) || g.size() <= cap + 1) {
      capped.push_back(g);
      continue;
    }
    // every (cap+1)-subset
    std::vector<bool> pick(g.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(cap + 1), true);
    do {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (pick[i]) s.push_back(g[i]);
      capped.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return betti_bruteforce(capped, up_to, cap);
}

// Simplices of the filtration with level <= l, as explicit vertex lists.
inline std::vector<std::vector<Vertex>> prefix_simplices(const Filtration& f, Level l) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.level(i) <= l) {
      auto s = f.simplex(i);
      out.emplace_back(s.begin(), s.end());
    }
  return out;
}

// rank Z_k^l - rank(B_k^{l+p} n Z_k^l), with explicit kernel and image bases
// and a Zassenhaus subspace intersection.
inline std::size_t persistent_betti_direct(const Filtration& f, Level l, Level p, std::size_t k) {
  const auto later = prefix_simplices(f, l + p);
  if (later.size() > kSizeGuard) throw SizeGuardError(later.size());

  std::vector<std::set<std::vector<Vertex>>> by_dim;
  for (const auto& s : later) detail::add_with_faces(s, static_cast<std::size_t>(-1), by_dim);
  const auto sets = detail::index_sets(by_dim);
  if (k >= sets.size()) return 0;
  const std::size_t width = sets[k].size();

  // Kernel of the boundary on k-chains of K^l, in C_k^{l+p} coordinates.
  SimplexSet early;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.level(i) <= l && f.dim(i) == k) {
      auto s = f.simplex(i);
      early.emplace(std::vector<Vertex>(s.begin(), s.end()), 0);
    }
  std::vector<BitRow> cycles;
  if (k == 0) {
    for (const auto& [s, _] : early) {
      BitRow r(width);
      r.set(sets[0].at(s));
      cycles.push_back(std::move(r));
    }
  } else {
    // Rows [boundary | chain]; rows whose boundary half vanishes are cycles.
    const std::size_t lower = sets[k - 1].size();
    std::vector<BitRow> rows;
    for (const auto& [s, _] : early) {
      BitRow r(lower + width);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        r.set(sets[k - 1].at(face));
      }
      r.set(lower + sets[k].at(s));
      rows.push_back(std::move(r));
    }
    eliminate(rows);
    for (const auto& r : rows)
      if (r.none_below(lower)) {
        BitRow c(width);
        for (std::size_t b = r.first_from(lower); b != BitRow::npos; b = r.first_from(b + 1)) c.set(b - lower);
        cycles.push_back(std::move(c));
      }
  }
  const std::size_t cycle_rank = cycles.size();
  if (cycle_rank == 0) return 0;

  // Boundaries of (k+1)-simplices of K^{l+p}.
  std::vector<BitRow> bounds;
  if (k + 1 < sets.size()) bounds = detail::boundary_rows(sets[k + 1], sets[k], width);

  // Zassenhaus: [z | z] and [b | 0]; rows with empty left half span the intersection.
  std::vector<BitRow> zass;
  for (const auto& z : cycles) {
    BitRow r(2 * width);
    for (std::size_t b = z.first_from(0); b != BitRow::npos; b = z.first_from(b + 1)) {
      r.set(b);
      r.set(width + b);
    }
    zass.push_back(std::move(r));
  }
  for (const auto& bd : bounds) {
    BitRow r(2 * width);
    for (std::size_t b = bd.first_from(0); b != BitRow::npos; b = bd.first_from(b + 1)) r.set(b);
    zass.push_back(std::move(r));
  }
  const std::size_t rank = eliminate(zass);
  std::size_t intersection = 0;
  for (std::size_t r = 0; r < rank; ++r)
    if (zass[r].none_below(width)) ++intersection;
  return cycle_rank - intersection;
}

}  // namespace homnet::oracle
