#pragma once

// Simple graphs with dense integer vertex ids, and the edge-list text format.
//
// Edge-list format: UTF-8 text, one `u v` pair per line separated by
// whitespace. Lines starting with `#` are comments, except the optional
// headers `#nodes N` (declares the node count) and `#directed`.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace homnet {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u{};
  Vertex v{};
  auto operator<=>(const Edge&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class Graph {
 public:
  Graph() = default;

  // Validates endpoints and self-loops; stores undirected edges as (min,max)
  // and collapses duplicates.
  Graph(std::size_t node_count, std::vector<Edge> edges, bool directed = false)
      : node_count_(node_count), directed_(directed), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u >= node_count_ || e.v >= node_count_)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                    std::to_string(e.v));
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_adjacency();
  }

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Out-neighbours for directed graphs, neighbours otherwise. Sorted.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // Number of incident edges (in + out for directed graphs).
  std::size_t degree(Vertex v) const {
    return offsets_[v + 1] - offsets_[v] + (directed_ ? in_degree_[v] : 0);
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= node_count_ || v >= node_count_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool operator==(const Graph& o) const {
    return node_count_ == o.node_count_ && directed_ == o.directed_ && edges_ == o.edges_;
  }

 private:
  void build_adjacency() {
    offsets_.assign(node_count_ + 1, 0);
    in_degree_.assign(directed_ ? node_count_ : 0, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      if (directed_)
        ++in_degree_[e.v];
      else
        ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < node_count_; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(offsets_[node_count_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adj_[fill[e.u]++] = e.v;
      if (!directed_) adj_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < node_count_; ++v)
      std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }

  std::size_t node_count_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::size_t> in_degree_;
};

struct EdgeListOptions {
  bool directed = false;
  // Compact arbitrary non-negative ids onto 0..k-1 in order of first
  // appearance. The original ids are returned alongside the graph.
  bool remap_ids = false;
};

struct LoadedGraph {
  Graph graph;
  // original_ids[v] is the id vertex v carried in the input; empty unless
  // remapping was requested.
  std::vector<std::uint64_t> original_ids;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Parses a non-negative integer token; throws ParseError on anything else.
inline std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '-') {
    long long probe{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), probe);
    if (ec == std::errc{} && p == tok.data() + tok.size())
      throw ParseError(line, "negative vertex id " + std::string(tok));
    throw ParseError(line, "malformed integer '" + std::string(tok) + "'");
  }
  std::uint64_t value{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line, "malformed integer '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline LoadedGraph load_edge_list_with_ids(std::istream& in, const EdgeListOptions& opts = {}) {
  std::size_t declared = 0;
  bool directed = opts.directed;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      const auto toks = detail::split_ws(s);
      if (toks.front() == "#nodes") {
        if (toks.size() != 2) throw ParseError(lineno, "expected '#nodes N'");
        declared = static_cast<std::size_t>(detail::parse_id(toks[1], lineno));
      } else if (toks.front() == "#directed") {
        directed = true;
      }
      continue;
    }
    const auto toks = detail::split_ws(s);
    if (toks.size() != 2)
      throw ParseError(lineno, "expected two vertex ids, got " + std::to_string(toks.size()) + " tokens");
    const auto u = detail::parse_id(toks[0], lineno);
    const auto v = detail::parse_id(toks[1], lineno);
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    raw.emplace_back(u, v);
  }

  LoadedGraph out;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::size_t n = declared;
  if (opts.remap_ids) {
    std::unordered_map<std::uint64_t, Vertex> ids;
    auto id_of = [&](std::uint64_t x) {
      auto [it, fresh] = ids.try_emplace(x, static_cast<Vertex>(ids.size()));
      if (fresh) out.original_ids.push_back(x);
      return it->second;
    };
    for (auto [u, v] : raw) {
      const Vertex a = id_of(u);
      const Vertex b = id_of(v);
      edges.push_back({a, b});
    }
    n = std::max(n, ids.size());
  } else {
    for (auto [u, v] : raw) {
      if (u > 0xFFFFFFFEull || v > 0xFFFFFFFEull)
        throw std::invalid_argument("vertex id exceeds 32-bit range; use id remapping");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      n = std::max<std::size_t>(n, std::max(u, v) + 1);
    }
  }
  out.graph = Graph(n, std::move(edges), directed);
  return out;
}

inline Graph load_edge_list(std::istream& in, const EdgeListOptions& opts = {}) {
  return load_edge_list_with_ids(in, opts).graph;
}

inline Graph load_edge_list(std::string_view text, const EdgeListOptions& opts = {}) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in, opts);
}

inline void save_edge_list(const Graph& g, std::ostream& out) {
  out << "#nodes " << g.node_count() << '\n';
  if (g.directed()) out << "#directed\n";
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string save_edge_list(const Graph& g) {
  std::ostringstream out;
  save_edge_list(g, out);
  return out.str();
}

inline std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (Vertex v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
  return hist;
}

// Mean local clustering coefficient of an undirected graph; vertices of
// degree < 2 contribute 0.
inline double mean_clustering(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  double total = 0.0;
  for (Vertex v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    const std::size_t d = nb.size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (g.has_edge(nb[i], nb[j])) ++links;
    total += 2.0 * static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return total / static_cast<double>(g.node_count());
}

// Number of connected components, ignoring edge direction.
inline std::size_t component_count(const Graph& g) {
  std::vector<Vertex> parent(g.node_count());
  for (Vertex v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.node_count();
  for (const auto& e : g.edges()) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --comps;
    }
  }
  return comps;
}

}  // namespace homnet
