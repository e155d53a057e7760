// homnet: generate networks, build complexes, compute and render barcodes.
//
// Exit codes: 0 success, 1 runtime or I/O failure, 2 usage or validation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "homnet/barcode_io.hpp"
#include "homnet/complex.hpp"
#include "homnet/filtration.hpp"
#include "homnet/graph.hpp"
#include "homnet/netgen.hpp"
#include "homnet/pipeline.hpp"

namespace {

using namespace homnet;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

// Options shared by every command that starts from a graph or a complex file.
struct Source {
  std::string graph;
  std::string complex_file;
  std::string kind = "clique";
  std::size_t max_dim = 5;
  bool directed = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", graph, "edge-list file");
    cmd->add_option("--complex", complex_file, "complex file instead of a graph");
    cmd->add_option("--kind", kind, "clique | neighborhood | open-neighborhood")
        ->check(CLI::IsMember({"clique", "neighborhood", "open-neighborhood"}));
    cmd->add_option("--max-dim", max_dim, "dimension cap for simplices");
    cmd->add_flag("--directed", directed, "read the edge list as directed");
  }

  void record(RunConfig& cfg) const {
    if (!complex_file.empty()) {
      cfg.set("complex", complex_file);
      return;
    }
    cfg.set("graph", graph).set("kind", kind).set("max_dim", max_dim).set("directed", directed ? "true" : "false");
  }

  SimplicialComplex load() const {
    if (graph.empty() == complex_file.empty()) throw UsageError("give exactly one of a graph file or --complex");
    if (!complex_file.empty()) {
      std::istringstream in(read_file(complex_file));
      return load_complex(in);
    }
    const Graph g = load_edge_list(read_file(graph), {.directed = directed});
    if (kind == "clique") return clique_complex(g, max_dim);
    return neighborhood_complex(
        g, max_dim, kind == "neighborhood" ? NeighborhoodConvention::closed : NeighborhoodConvention::open);
  }
};

FiltrationOrder parse_order(const std::string& s) {
  return s == "simplexwise" ? FiltrationOrder::simplexwise : FiltrationOrder::skeleton;
}

ReductionStrategy parse_strategy(const std::string& s) {
  if (s == "standard") return ReductionStrategy::standard;
  if (s == "by-dimension") return ReductionStrategy::by_dimension;
  return ReductionStrategy::twist;
}

std::string metadata(const RunConfig& cfg) { return "# homnet " + cfg.line() + "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Persistent homology of complex networks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random network as an edge list");
  gen->require_subcommand(1);
  std::string gen_out;
  std::uint64_t seed = 1;
  ErParams er;
  ExpParams ex;
  SfmParams sf;
  auto* gen_er_cmd = gen->add_subcommand("er", "Erdos-Renyi G(n,p)");
  gen_er_cmd->add_option("--n", er.n)->required();
  gen_er_cmd->add_option("--p", er.p)->required();
  auto* gen_exp_cmd = gen->add_subcommand("exp", "exponential degree law");
  gen_exp_cmd->add_option("--n", ex.n)->required();
  gen_exp_cmd->add_option("--kstar", ex.k_star)->required();
  gen_exp_cmd->add_option("--kmax", ex.k_max, "degree cutoff (0: n-1)");
  auto* gen_sfm_cmd = gen->add_subcommand("sfm", "modular scale-free growth");
  gen_sfm_cmd->add_option("--n", sf.n)->required();
  gen_sfm_cmd->add_option("--m", sf.m)->required();
  gen_sfm_cmd->add_option("--p0", sf.p0)->required();
  gen_sfm_cmd->add_option("--alpha", sf.alpha)->required();
  for (auto* c : {gen_er_cmd, gen_exp_cmd, gen_sfm_cmd}) {
    c->add_option("--seed", seed, "random seed");
    c->add_option("-o,--out", gen_out, "output file (default stdout)");
  }

  // complex
  auto* complex_cmd = app.add_subcommand("complex", "build a complex and write its maximal simplices");
  Source complex_src;
  complex_src.attach(complex_cmd);
  std::string complex_out, incidence_out;
  complex_cmd->add_option("-o,--out", complex_out, "complex file (default stdout)");
  complex_cmd->add_option("--incidence", incidence_out, "also write the incidence matrix as CSV");

  // filtration
  auto* filt_cmd = app.add_subcommand("filtration", "write the filtration as 'level dim vertices' lines");
  Source filt_src;
  filt_src.attach(filt_cmd);
  std::string filt_order = "skeleton", filt_out;
  filt_cmd->add_option("--order", filt_order)->check(CLI::IsMember({"skeleton", "simplexwise"}));
  filt_cmd->add_option("-o,--out", filt_out);

  // persist
  auto* persist_cmd = app.add_subcommand("persist", "compute the barcode and print a summary");
  Source persist_src;
  persist_src.attach(persist_cmd);
  std::string persist_order = "skeleton", strategy = "twist", json_out, csv_out;
  persist_cmd->add_option("--order", persist_order)->check(CLI::IsMember({"skeleton", "simplexwise"}));
  persist_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"standard", "by-dimension", "twist"}));
  persist_cmd->add_option("-o,--out", json_out, "intervals JSON");
  persist_cmd->add_option("--csv", csv_out, "intervals CSV");

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the whole complex");
  Source betti_src;
  betti_src.attach(betti_cmd);
  std::string engine = "persistence";
  betti_cmd->add_option("--engine", engine)->check(CLI::IsMember({"persistence", "oracle"}));

  // barcode
  auto* barcode_cmd = app.add_subcommand("barcode", "render an intervals JSON file");
  std::string intervals_in, format = "ascii", barcode_out;
  std::optional<Level> cursor;
  std::size_t width = 60;
  barcode_cmd->add_option("intervals", intervals_in, "intervals JSON")->required();
  barcode_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
  barcode_cmd->add_option("--cursor", cursor, "highlight a level (svg)");
  barcode_cmd->add_option("--width", width, "character width (ascii)");
  barcode_cmd->add_option("-o,--out", barcode_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    RunConfig cfg;
    cfg.set("command", "gen").set("seed", seed);
    std::string extra;
    Graph g;
    if (gen_er_cmd->parsed()) {
      validate(er);
      cfg.set("model", "er").set("n", er.n).set("p", er.p);
      g = gen_er(er.n, er.p, seed);
    } else if (gen_exp_cmd->parsed()) {
      validate(ex);
      cfg.set("model", "exp").set("n", ex.n).set("kstar", ex.k_star).set("kmax", ex.k_max);
      g = gen_exponential(ex.n, ex.k_star, seed, ex.k_max);
    } else {
      validate(sf);
      cfg.set("model", "sfm").set("n", sf.n).set("m", sf.m).set("p0", sf.p0).set("alpha", sf.alpha);
      auto r = gen_sf_modular_detailed(sf.n, sf.m, sf.p0, sf.alpha, seed);
      extra = "# modules " + std::to_string(r.module_count) + "\n";
      g = std::move(r.graph);
    }
    write_output(gen_out, metadata(cfg) + extra + "# edges " + std::to_string(g.edge_count()) + "\n" +
                              save_edge_list(g));
    return 0;
  }

  if (complex_cmd->parsed()) {
    RunConfig cfg;
    cfg.set("command", "complex");
    complex_src.record(cfg);
    const auto k = complex_src.load();
    std::ostringstream out;
    out << metadata(cfg) << "# faces " << join(k.face_counts()) << (k.truncated() ? " truncated" : "") << '\n';
    save_complex(k, out);
    write_output(complex_out, out.str());
    if (!incidence_out.empty()) {
      std::ostringstream csv;
      write_incidence_csv(incidence_matrix(k), csv);
      write_output(incidence_out, csv.str());
    }
    return 0;
  }

  if (filt_cmd->parsed()) {
    RunConfig cfg;
    cfg.set("command", "filtration").set("order", filt_order);
    filt_src.record(cfg);
    const auto k = filt_src.load();
    const auto f = parse_order(filt_order) == FiltrationOrder::skeleton ? skeleton_filtration(k)
                                                                        : simplexwise_filtration(k);
    std::ostringstream out;
    out << metadata(cfg);
    write_filtration(f, out);
    write_output(filt_out, out.str());
    return 0;
  }

  if (persist_cmd->parsed()) {
    RunConfig cfg;
    cfg.set("command", "persist").set("order", persist_order).set("strategy", strategy);
    persist_src.record(cfg);
    const auto k = persist_src.load();
    auto r = persist(k, {parse_order(persist_order), parse_strategy(strategy)});
    r.barcode.provenance = cfg.entries;
    if (!json_out.empty()) write_output(json_out, export_json(r.barcode));
    if (!csv_out.empty()) write_output(csv_out, export_csv(r.barcode));
    std::cout << "faces " << join(r.face_counts) << (r.truncated ? " truncated" : "") << '\n'
              << "levels " << r.barcode.level_count << '\n'
              << "intervals " << r.barcode.intervals.size() << '\n'
              << "betti " << join(r.final_betti) << '\n'
              << "essential " << join(r.essential) << '\n';
    return 0;
  }

  if (betti_cmd->parsed()) {
    const auto k = betti_src.load();
    std::cout << "betti " << join(final_betti(k, engine == "oracle" ? Engine::oracle : Engine::persistence)) << '\n';
    return 0;
  }

  if (barcode_cmd->parsed()) {
    const auto b = import_json(read_file(intervals_in));
    std::string text;
    if (format == "svg") {
      SvgOptions o;
      o.cursor = cursor;
      text = render_svg(b, o);
    } else {
      text = render_ascii(b, width);
    }
    write_output(barcode_out, text);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const homnet::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const homnet::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
