#pragma once

// Filtrations: simplex sequences with non-decreasing integer levels in which
// every prefix is a subcomplex.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "homnet/complex.hpp"

namespace homnet {

using Level = std::uint64_t;

class Filtration {
 public:
  Filtration() = default;

  // Takes the sequence exactly as given; no sorting or validation.
  static Filtration from_sequence(const std::vector<std::pair<Simplex, Level>>& seq) {
    Filtration f;
    for (const auto& [s, l] : seq) f.push(s.view(), l);
    f.index();
    return f;
  }

  // Sorts by (level, dimension, lexicographic).
  static Filtration from_levels(std::vector<std::pair<Simplex, Level>> seq) {
    std::stable_sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first < b.first;
    });
    return from_sequence(seq);
  }

  std::size_t size() const noexcept { return levels_.size(); }
  bool empty() const noexcept { return levels_.empty(); }

  std::span<const Vertex> simplex(std::size_t i) const {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t dim(std::size_t i) const { return offsets_[i + 1] - offsets_[i] - 1; }
  Level level(std::size_t i) const { return levels_[i]; }

  // Levels run 0..level_count()-1.
  std::size_t level_count() const noexcept { return levels_.empty() ? 0 : static_cast<std::size_t>(max_level_) + 1; }
  std::size_t max_dim() const noexcept { return by_dim_.empty() ? 0 : by_dim_.size() - 1; }

  // Number of leading simplices with level <= l.
  std::size_t prefix_end(Level l) const {
    return static_cast<std::size_t>(std::upper_bound(levels_.begin(), levels_.end(), l) - levels_.begin());
  }

  std::optional<std::size_t> find(std::span<const Vertex> s) const {
    const std::size_t d = s.size() - 1;
    if (s.empty() || d >= by_dim_.size()) return std::nullopt;
    const auto& ids = by_dim_[d];
    auto it = std::lower_bound(ids.begin(), ids.end(), s,
                               [&](std::uint32_t pos, std::span<const Vertex> key) { return lex_less(simplex(pos), key); });
    if (it != ids.end() && std::ranges::equal(simplex(*it), s)) return *it;
    return std::nullopt;
  }

  // Simplex counts per dimension among the first `end` positions.
  std::vector<std::size_t> face_counts(std::size_t end) const {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < end; ++i) {
      if (dim(i) >= f.size()) f.resize(dim(i) + 1, 0);
      ++f[dim(i)];
    }
    return f;
  }

  std::vector<std::pair<Simplex, Level>> entries() const {
    std::vector<std::pair<Simplex, Level>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      auto s = simplex(i);
      out.emplace_back(Simplex(std::vector<Vertex>(s.begin(), s.end())), levels_[i]);
    }
    return out;
  }

  bool operator==(const Filtration& o) const {
    return vertices_ == o.vertices_ && offsets_ == o.offsets_ && levels_ == o.levels_;
  }

 private:
  friend Filtration skeleton_filtration(const SimplicialComplex&);
  friend Filtration simplexwise_filtration(const SimplicialComplex&);

  void push(std::span<const Vertex> s, Level l) {
    vertices_.insert(vertices_.end(), s.begin(), s.end());
    offsets_.push_back(vertices_.size());
    levels_.push_back(l);
    max_level_ = std::max(max_level_, l);
  }

  void index() {
    by_dim_.clear();
    for (std::size_t i = 0; i < size(); ++i) {
      if (dim(i) >= by_dim_.size()) by_dim_.resize(dim(i) + 1);
      by_dim_[dim(i)].push_back(static_cast<std::uint32_t>(i));
    }
    for (auto& ids : by_dim_)
      std::stable_sort(ids.begin(), ids.end(), [&](auto a, auto b) { return lex_less(simplex(a), simplex(b)); });
  }

  // Canonical order with level = f(dimension, position).
  template <typename LevelOf>
  static Filtration canonical(const SimplicialComplex& k, LevelOf&& level_of) {
    Filtration f;
    const auto& faces = k.simplices();
    std::size_t pos = 0;
    f.vertices_.reserve(faces.total() * 2);
    f.levels_.reserve(faces.total());
    for (std::size_t d = 0; d < faces.dim_count(); ++d)
      for (std::size_t i = 0; i < faces.count(d); ++i, ++pos) f.push(faces.at(d, i), level_of(d, pos));
    // Canonical order is already lexicographic within each dimension.
    f.by_dim_.resize(faces.dim_count());
    pos = 0;
    for (std::size_t d = 0; d < faces.dim_count(); ++d)
      for (std::size_t i = 0; i < faces.count(d); ++i) f.by_dim_[d].push_back(static_cast<std::uint32_t>(pos++));
    return f;
  }

  std::vector<Vertex> vertices_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Level> levels_;
  Level max_level_ = 0;
  std::vector<std::vector<std::uint32_t>> by_dim_;
};

// Level t holds exactly the t-simplices, so levels 0..t form the t-skeleton.
inline Filtration skeleton_filtration(const SimplicialComplex& k) {
  return Filtration::canonical(k, [](std::size_t d, std::size_t) { return static_cast<Level>(d); });
}

// One simplex per level, in canonical order.
inline Filtration simplexwise_filtration(const SimplicialComplex& k) {
  return Filtration::canonical(k, [](std::size_t, std::size_t pos) { return static_cast<Level>(pos); });
}

struct ValidationReport {
  bool ok = true;
  std::string message;
  // Offending pair: (position of the earlier-needed simplex or the previous
  // position, position of the simplex that broke the rule).
  std::optional<std::pair<std::size_t, std::size_t>> positions;

  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline std::string format_simplex(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace detail

// Checks level monotonicity, uniqueness, and that every codimension-1 face
// of each simplex occurs at an earlier position.
inline ValidationReport validate(const Filtration& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f.level(i) < f.level(i - 1))
      return {false,
              "level decreases from " + std::to_string(f.level(i - 1)) + " at position " + std::to_string(i - 1) +
                  " to " + std::to_string(f.level(i)) + " at position " + std::to_string(i),
              std::pair{i - 1, i}};
  std::vector<Vertex> face;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto s = f.simplex(i);
    if (auto first = f.find(s); first && *first != i)
      return {false, "simplex " + detail::format_simplex(s) + " appears twice", std::pair{std::min(*first, i), std::max(*first, i)}};
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face.push_back(s[j]);
      const auto pos = f.find(face);
      if (!pos)
        return {false, "face " + detail::format_simplex(face) + " of " + detail::format_simplex(s) + " is missing",
                std::nullopt};
      if (*pos > i)
        return {false,
                "face " + detail::format_simplex(face) + " at position " + std::to_string(*pos) + " comes after " +
                    detail::format_simplex(s) + " at position " + std::to_string(i),
                std::pair{*pos, i}};
    }
  }
  return {};
}

// One line per simplex: `level dim v0 v1 ...`.
inline void write_filtration(const Filtration& f, std::ostream& out) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << f.level(i) << ' ' << f.dim(i);
    for (Vertex v : f.simplex(i)) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace homnet
