#pragma once

// End-to-end runs: graph -> complex -> filtration -> reduction -> barcode.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homnet/complex.hpp"
#include "homnet/filtration.hpp"
#include "homnet/oracle.hpp"
#include "homnet/persistence.hpp"

namespace homnet {

enum class FiltrationOrder { skeleton, simplexwise };
enum class Engine { persistence, oracle };

// Subcommand, flags and seed of a run, in a stable key order. Serialized
// into the metadata of every artifact the run writes.
struct RunConfig {
  std::map<std::string, std::string> entries;

  RunConfig& set(const std::string& key, const std::string& value) {
    entries[key] = value;
    return *this;
  }
  template <typename T>
  RunConfig& set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    return set(key, s.str());
  }

  // `key=value` pairs separated by spaces.
  std::string line() const {
    std::string out;
    for (const auto& [k, v] : entries) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
  }
};

struct PersistOptions {
  FiltrationOrder order = FiltrationOrder::skeleton;
  ReductionStrategy strategy = ReductionStrategy::twist;
};

struct PersistResult {
  Barcode barcode;
  std::vector<std::size_t> face_counts;
  std::vector<std::size_t> final_betti;
  std::vector<std::size_t> essential;
  bool truncated = false;
};

// When the complex was truncated by its cap, the top dimension's homology is
// an artifact of the cap and is dropped from the barcode.
inline PersistResult persist(const SimplicialComplex& k, const PersistOptions& opts = {}) {
  const Filtration f = opts.order == FiltrationOrder::skeleton ? skeleton_filtration(k) : simplexwise_filtration(k);
  PersistResult r;
  r.barcode = compute_barcode(f, opts.strategy);
  r.barcode.level_semantics =
      opts.order == FiltrationOrder::skeleton ? "level t adds the t-dimensional simplices" : "one simplex per level";
  r.truncated = k.truncated();
  if (r.truncated && r.barcode.dim_count > 0) r.barcode = r.barcode.restricted(r.barcode.dim_count - 1);
  r.face_counts = k.face_counts();
  if (r.barcode.level_count > 0) r.final_betti = betti_at(r.barcode, r.barcode.level_count - 1);
  r.essential = essential_counts(r.barcode);
  return r;
}

// Betti numbers of the whole complex from either engine.
inline std::vector<std::size_t> final_betti(const SimplicialComplex& k, Engine engine) {
  if (k.dimension() < 0) return {};
  const std::size_t dims = static_cast<std::size_t>(k.dimension()) + (k.truncated() ? 0 : 1);
  if (engine == Engine::oracle) {
    if (dims == 0) return {};
    auto b = oracle::betti_bruteforce(k, dims - 1).betti();
    return b;
  }
  return persist(k).final_betti;
}

}  // namespace homnet
