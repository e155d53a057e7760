// Builds the clique complex of a small random network and prints its barcode.

#include <iostream>

#include "homnet/barcode_io.hpp"
#include "homnet/netgen.hpp"
#include "homnet/pipeline.hpp"

int main() {
  using namespace homnet;
  const Graph g = gen_er(14, 0.35, 3);
  const auto k = clique_complex(g, 3);
  const auto r = persist(k);

  std::cout << "nodes " << g.node_count() << ", edges " << g.edge_count() << "\n";
  std::cout << "faces";
  for (auto f : r.face_counts) std::cout << ' ' << f;
  std::cout << "\nbetti";
  for (auto b : r.final_betti) std::cout << ' ' << b;
  std::cout << "\n\n" << render_ascii(r.barcode, 48);
}
