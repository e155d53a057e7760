#pragma once

// Persistent homology over GF(2) by boundary matrix reduction.
//
// Positions are indices into a Filtration; levels are the filtration's own
// clock. A pair (i, j) means the class created by simplex i is killed by
// simplex j, giving the interval [level(i), level(j)) in dimension dim(i).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homnet/filtration.hpp"

namespace homnet {

using Position = std::uint32_t;

struct BoundaryMatrix {
  // Column j: sorted positions of the codimension-1 faces of simplex j.
  std::vector<std::vector<Position>> columns;
  std::vector<std::uint8_t> dims;

  std::size_t size() const noexcept { return columns.size(); }
};

inline BoundaryMatrix boundary_matrix(const Filtration& f) {
  if (f.size() > std::numeric_limits<Position>::max())
    throw std::length_error("filtration too large for 32-bit positions");
  BoundaryMatrix m;
  m.columns.resize(f.size());
  m.dims.resize(f.size());
  std::vector<Vertex> face;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto s = f.simplex(j);
    m.dims[j] = static_cast<std::uint8_t>(f.dim(j));
    if (s.size() < 2) continue;
    auto& col = m.columns[j];
    col.reserve(s.size());
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != drop) face.push_back(s[t]);
      const auto pos = f.find(face);
      if (!pos || *pos >= j)
        throw std::runtime_error("face " + detail::format_simplex(face) + " of " + detail::format_simplex(s) +
                                 " not found before position " + std::to_string(j));
      col.push_back(static_cast<Position>(*pos));
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

struct PersistencePairing {
  std::vector<std::pair<Position, Position>> pairs;  // (birth, death), sorted by birth
  std::vector<Position> unpaired;                     // essential classes, sorted

  bool operator==(const PersistencePairing&) const = default;
};

enum class ReductionStrategy {
  standard,      // every column left to right
  by_dimension,  // dimension 0 first, each dimension left to right
  twist,         // top dimension first, clearing columns known to be births
};

namespace detail {

// target ^= source over GF(2); both sorted.
inline void add_column(std::vector<Position>& target, const std::vector<Position>& source,
                       std::vector<Position>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

inline constexpr Position kNone = std::numeric_limits<Position>::max();

}  // namespace detail

// Column reduction. All strategies yield the same pairing; they differ only
// in the order columns are visited.
inline PersistencePairing reduce(BoundaryMatrix m, ReductionStrategy strategy = ReductionStrategy::twist) {
  const std::size_t n = m.size();
  std::vector<Position> pivot_of(n, detail::kNone);  // row -> column whose low is that row
  std::vector<Position> scratch;
  std::vector<char> cleared(n, 0);

  auto reduce_column = [&](std::size_t j) {
    auto& col = m.columns[j];
    while (!col.empty()) {
      const Position owner = pivot_of[col.back()];
      if (owner == detail::kNone) break;
      detail::add_column(col, m.columns[owner], scratch);
    }
    if (!col.empty()) {
      pivot_of[col.back()] = static_cast<Position>(j);
      if (strategy == ReductionStrategy::twist) {
        cleared[col.back()] = 1;
        m.columns[col.back()].clear();
        m.columns[col.back()].shrink_to_fit();
      }
    }
  };

  std::uint8_t top = 0;
  for (auto d : m.dims) top = std::max(top, d);

  switch (strategy) {
    case ReductionStrategy::standard:
      for (std::size_t j = 0; j < n; ++j) reduce_column(j);
      break;
    case ReductionStrategy::by_dimension:
      for (int d = 0; d <= top; ++d)
        for (std::size_t j = 0; j < n; ++j)
          if (m.dims[j] == d) reduce_column(j);
      break;
    case ReductionStrategy::twist:
      for (int d = top; d >= 0; --d)
        for (std::size_t j = 0; j < n; ++j)
          if (m.dims[j] == d && !cleared[j]) reduce_column(j);
      break;
  }

  PersistencePairing out;
  std::vector<char> is_death(n, 0);
  for (std::size_t row = 0; row < n; ++row)
    if (pivot_of[row] != detail::kNone) {
      out.pairs.emplace_back(static_cast<Position>(row), pivot_of[row]);
      is_death[pivot_of[row]] = 1;
    }
  for (std::size_t j = 0; j < n; ++j)
    if (!is_death[j] && pivot_of[j] == detail::kNone) out.unpaired.push_back(static_cast<Position>(j));
  return out;
}

struct Interval {
  std::size_t dim = 0;
  Level birth = 0;
  std::optional<Level> death;  // nullopt: never dies
  Position birth_position = 0;
  std::optional<Position> death_position;

  bool infinite() const noexcept { return !death.has_value(); }
  bool zero_length() const noexcept { return death && *death == birth; }
  bool contains(Level l) const noexcept { return birth <= l && (!death || l < *death); }

  // Persistence in simplex-wise positions, j - i - 1. nullopt when infinite.
  std::optional<std::size_t> position_persistence() const {
    if (!death_position) return std::nullopt;
    return static_cast<std::size_t>(*death_position - birth_position - 1);
  }

  bool operator==(const Interval&) const = default;
};

// Deterministic display order: (dim, birth, death with infinity last, birth position).
inline bool interval_less(const Interval& a, const Interval& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.death != b.death) {
    if (!a.death) return false;
    if (!b.death) return true;
    return *a.death < *b.death;
  }
  return a.birth_position < b.birth_position;
}

struct Barcode {
  std::vector<Interval> intervals;
  std::size_t level_count = 0;
  // Homology dimensions covered: 0..dim_count-1.
  std::size_t dim_count = 0;
  std::string level_semantics;
  std::map<std::string, std::string> provenance;

  std::vector<Interval> in_dim(std::size_t k) const {
    std::vector<Interval> out;
    for (const auto& iv : intervals)
      if (iv.dim == k) out.push_back(iv);
    return out;
  }

  // Keeps only dimensions < dims.
  Barcode restricted(std::size_t dims) const {
    Barcode out = *this;
    out.dim_count = std::min(dim_count, dims);
    std::erase_if(out.intervals, [&](const Interval& iv) { return iv.dim >= out.dim_count; });
    return out;
  }

  bool operator==(const Barcode&) const = default;
};

inline Barcode intervals(const PersistencePairing& pr, const Filtration& f) {
  Barcode b;
  b.level_count = f.level_count();
  b.dim_count = f.empty() ? 0 : f.max_dim() + 1;
  b.intervals.reserve(pr.pairs.size() + pr.unpaired.size());
  for (auto [i, j] : pr.pairs) b.intervals.push_back({f.dim(i), f.level(i), f.level(j), i, j});
  for (auto i : pr.unpaired) b.intervals.push_back({f.dim(i), f.level(i), std::nullopt, i, std::nullopt});
  std::sort(b.intervals.begin(), b.intervals.end(), interval_less);
  return b;
}

inline Barcode compute_barcode(const Filtration& f, ReductionStrategy strategy = ReductionStrategy::twist) {
  return intervals(reduce(boundary_matrix(f), strategy), f);
}

// beta_k at level l: k-intervals with birth <= l < death.
inline std::vector<std::size_t> betti_at(const Barcode& b, Level l) {
  if (l >= b.level_count)
    throw std::out_of_range("level " + std::to_string(l) + " outside 0.." + std::to_string(b.level_count) + ")");
  std::vector<std::size_t> betti(b.dim_count, 0);
  for (const auto& iv : b.intervals)
    if (iv.dim < b.dim_count && iv.contains(l)) ++betti[iv.dim];
  return betti;
}

// p-persistent Betti numbers: k-intervals with birth <= l and death > l+p.
inline std::vector<std::size_t> persistent_betti(const Barcode& b, Level l, Level p) {
  if (l + p >= b.level_count)
    throw std::out_of_range("l+p = " + std::to_string(l + p) + " outside 0.." + std::to_string(b.level_count) + ")");
  std::vector<std::size_t> betti(b.dim_count, 0);
  for (const auto& iv : b.intervals)
    if (iv.dim < b.dim_count && iv.birth <= l && (!iv.death || *iv.death > l + p)) ++betti[iv.dim];
  return betti;
}

// Number of infinite intervals per dimension.
inline std::vector<std::size_t> essential_counts(const Barcode& b) {
  std::vector<std::size_t> out(b.dim_count, 0);
  for (const auto& iv : b.intervals)
    if (iv.infinite() && iv.dim < b.dim_count) ++out[iv.dim];
  return out;
}

}  // namespace homnet
