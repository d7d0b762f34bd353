// Command-line front end: reads graph/counts/basis files, runs one
// operation, writes JSON. Exit status 0 on success, 1 for domain or resource
// errors, 2 for unreadable files, malformed input and bad flags.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cutideal/error.hpp"
#include "cutideal/glue.hpp"
#include "cutideal/json_io.hpp"
#include "cutideal/oracle.hpp"
#include "cutideal/sampler.hpp"
#include "cutideal/sp_tree.hpp"

namespace {

using namespace cutideal;
using io::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

struct Config {
  std::string graph_path;
  std::string counts_path;
  std::string basis_path;
  std::string monomial;
  std::string output;
  int max_degree = 4;
  std::uint64_t fiber_cap = 1'000'000;
  std::int64_t steps = 10'000;
  std::int64_t burn_in = 0;
  std::int64_t thin = 1;
  std::uint64_t seed = 1;
  bool prune = false;
};

Graph load_graph(const Config& c) { return parse_graph(read_file(c.graph_path)); }

Graph load_connected_graph(const Config& c) {
  Graph g = load_graph(c);
  if (!is_connected(g)) throw DomainError("graph is not connected; algebra commands need a connected graph");
  return g;
}

CutTable load_counts(const Config& c, const Graph& g) {
  return io::counts_from_json(io::parse_json(read_file(c.counts_path), "counts file"), g);
}

GeneratingSet load_basis(const Config& c, const Graph& g) {
  GeneratingSet s = io::generating_set_from_json(io::parse_json(read_file(c.basis_path), "basis file"));
  if (!(s.graph == g)) throw DomainError("basis file is for a different graph");
  return s;
}

OracleOptions oracle_options(const Config& c) {
  OracleOptions o;
  o.fiber_cap = c.fiber_cap;
  return o;
}

// Quadratic basis when the graph is K4-minor-free, otherwise the bounded
// oracle basis. Used when `sample` gets no basis file.
GeneratingSet default_moves(const Config& c, const Graph& g) {
  if (is_k4_minor_free(g)) {
    GlueOptions opts;
    opts.oracle = oracle_options(c);
    return quadratic_basis_sp(g, opts).generators;
  }
  return markov_basis_up_to_degree(g, c.max_degree, oracle_options(c)).basis;
}

Json generation_to_json(const GenerationCheck& check) {
  Json out{{"generates", check.generates}};
  out["witness"] = check.witness ? io::witness_to_json(*check.witness) : Json(nullptr);
  return out;
}

std::string run(const std::string& command, const Config& c) {
  if (command == "cuts") {
    const Graph g = load_graph(c);
    Json cuts = Json::array();
    for (const Cut& cut : enumerate_cuts(g)) cuts.push_back(io::cut_to_json(cut));
    return Json{{"graph", io::graph_to_json(g)}, {"cuts", cuts}}.dump() + "\n";
  }
  if (command == "phi") {
    const Graph g = load_connected_graph(c);
    const CutMonomial m = io::monomial_from_json(io::parse_json(c.monomial, "--monomial"), g);
    return Json{{"monomial", io::monomial_to_json(m)}, {"degree", m.degree()},
                {"image", io::exponents_to_json(g, phi_image(g, m))}}
        .dump() + "\n";
  }
  if (command == "decompose") {
    const Graph g = load_graph(c);
    return io::sp_tree_to_json(sp_decompose(g)).dump() + "\n";
  }
  if (command == "markov-basis") {
    const Graph g = load_connected_graph(c);
    const auto report = markov_basis_up_to_degree(g, c.max_degree, oracle_options(c));
    Json out = io::generating_set_to_json(report.basis);
    out["new_per_degree"] = report.new_per_degree;
    out["degree_bound"] = c.max_degree;
    return out.dump() + "\n";
  }
  if (command == "quad-basis") {
    const Graph g = load_connected_graph(c);
    GlueOptions opts;
    opts.prune = c.prune;
    opts.oracle = oracle_options(c);
    return io::quadratic_basis_to_json(quadratic_basis_sp(g, opts)).dump() + "\n";
  }
  if (command == "check-quadratic") {
    const Graph g = load_connected_graph(c);
    const bool sp = is_k4_minor_free(g);
    GeneratingSet moves;
    if (sp) {
      GlueOptions opts;
      opts.oracle = oracle_options(c);
      moves = quadratic_basis_sp(g, opts).generators;
    } else {
      moves = all_quadratic_kernel_binomials(g, oracle_options(c));
    }
    const auto check = generates_up_to_degree(g, moves, c.max_degree, oracle_options(c));
    Json out{{"graph", io::graph_to_json(g)},
             {"k4_minor_free", sp},
             {"moves", sp ? "quad-basis" : "all-quadratic-kernel-binomials"},
             {"move_count", moves.binomials.size()},
             {"degree_bound", c.max_degree}};
    out.update(generation_to_json(check));
    return out.dump() + "\n";
  }
  if (command == "marginals") {
    const Graph g = load_graph(c);
    return io::marginals_to_json(marginals(load_counts(c, g), g)).dump() + "\n";
  }
  if (command == "sample") {
    const Graph g = load_connected_graph(c);
    const CutTable t0 = load_counts(c, g);
    const GeneratingSet moves = c.basis_path.empty() ? default_moves(c, g) : load_basis(c, g);
    const auto run = sample_fiber(g, t0, moves, c.steps, c.burn_in, c.thin, c.seed);
    Json header = io::sample_header_to_json(run.header);
    header["samples"] = run.samples.size();
    header["accepted"] = run.accepted;
    header["moves"] = moves.binomials.size();
    std::string out = header.dump() + "\n";
    for (const CutTable& s : run.samples) out += io::counts_to_json(s).dump() + "\n";
    return out;
  }
  if (command == "verify") {
    const Graph g = load_connected_graph(c);
    const GeneratingSet s = load_basis(c, g);
    Json out{{"graph", io::graph_to_json(g)},
             {"move_count", s.binomials.size()},
             {"degree_bound", c.max_degree}};
    out.update(generation_to_json(generates_up_to_degree(g, s, c.max_degree, oracle_options(c))));
    return out.dump() + "\n";
  }
  throw std::logic_error("unhandled command " + command);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut ideals of graphs: cuts, Markov bases, quadratic generators, fiber sampling"};
  app.require_subcommand(1);
  Config c;

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", c.graph_path, "Graph file {\"n\":..,\"edges\":[[u,v],..]}")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto degree_opts = [&](CLI::App* sub) {
    sub->add_option("--max-degree", c.max_degree, "Degree bound for fiber checks")
        ->check(CLI::Range(2, 32));
    sub->add_option("--fiber-cap", c.fiber_cap, "Largest number of monomials enumerated per degree")
        ->check(CLI::PositiveNumber);
  };
  auto output_opt = [&](CLI::App* sub) {
    sub->add_option("--output", c.output, "Write to this file instead of standard output");
  };

  auto* cuts = app.add_subcommand("cuts", "List the cuts of a graph");
  graph_arg(cuts);
  output_opt(cuts);

  auto* phi = app.add_subcommand("phi", "Image of a cut monomial under the monomial map");
  graph_arg(phi);
  phi->add_option("--monomial", c.monomial, "Cut list, e.g. [[0,1],[0,2]]")->required();
  output_opt(phi);

  auto* decompose = app.add_subcommand("decompose", "Series/parallel decomposition tree");
  graph_arg(decompose);
  output_opt(decompose);

  auto* markov = app.add_subcommand("markov-basis", "Bounded-degree Markov basis by fiber connectivity");
  graph_arg(markov);
  degree_opts(markov);
  output_opt(markov);

  auto* quad = app.add_subcommand("quad-basis", "Quadratic generators of a K4-minor-free graph");
  graph_arg(quad);
  quad->add_flag("--prune", c.prune, "Drop generators implied by the others");
  degree_opts(quad);
  output_opt(quad);

  auto* check = app.add_subcommand("check-quadratic", "Do quadrics connect every fiber up to the bound?");
  graph_arg(check);
  degree_opts(check);
  output_opt(check);

  auto* marg = app.add_subcommand("marginals", "Edge cut counts of a table");
  graph_arg(marg);
  marg->add_option("counts", c.counts_path, "Counts file {\"[0,1]\": 6, ..}")
      ->required()
      ->check(CLI::ExistingFile);
  output_opt(marg);

  auto* sample = app.add_subcommand("sample", "Random walk on the fiber of a table (JSON lines)");
  graph_arg(sample);
  sample->add_option("counts", c.counts_path, "Counts file")->required()->check(CLI::ExistingFile);
  sample->add_option("--basis", c.basis_path, "Moves file; defaults to a computed basis")
      ->check(CLI::ExistingFile);
  sample->add_option("--steps", c.steps, "Number of steps")->check(CLI::PositiveNumber);
  sample->add_option("--burn-in", c.burn_in, "Steps discarded before sampling")->check(CLI::NonNegativeNumber);
  sample->add_option("--thin", c.thin, "Keep every thin-th state")->check(CLI::PositiveNumber);
  sample->add_option("--seed", c.seed, "Random seed");
  degree_opts(sample);
  output_opt(sample);

  auto* verify = app.add_subcommand("verify", "Check that a basis connects every fiber up to the bound");
  graph_arg(verify);
  verify->add_option("basis", c.basis_path, "Generating set file")->required()->check(CLI::ExistingFile);
  degree_opts(verify);
  output_opt(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    write_output(c.output, run(app.get_subcommands().front()->get_name(), c));
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const K4MinorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json cert{{"certificate_vertices", e.certificate_vertices()}};
    Json edges = Json::array();
    for (const Edge& x : e.certificate_edges()) edges.push_back({x.a, x.b});
    cert["certificate_edges"] = edges;
    std::cerr << cert.dump() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
