// Python bindings. Graphs are wrapped; everything else crosses the boundary
// in the same JSON shapes the command-line tool reads and writes, converted
// to plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutideal/error.hpp"
#include "cutideal/glue.hpp"
#include "cutideal/json_io.hpp"
#include "cutideal/oracle.hpp"
#include "cutideal/sampler.hpp"
#include "cutideal/sp_tree.hpp"

namespace py = pybind11;
using namespace cutideal;
using io::Json;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::handle& obj) {
  const std::string text = py::str(py::module_::import("json").attr("dumps")(obj));
  return io::parse_json(text, "argument");
}

OracleOptions oracle(std::uint64_t fiber_cap) {
  OracleOptions o;
  o.fiber_cap = fiber_cap;
  return o;
}

GeneratingSet basis_for(const Graph& g, const py::handle& basis) {
  GeneratingSet s = io::generating_set_from_json(from_python(basis));
  if (!(s.graph == g)) throw DomainError("basis is for a different graph");
  return s;
}

py::object generation_result(const GenerationCheck& c) {
  Json out{{"generates", c.generates}};
  out["witness"] = c.witness ? io::witness_to_json(*c.witness) : Json(nullptr);
  return to_python(out);
}

}  // namespace

PYBIND11_MODULE(cutideal, m) {
  m.doc() = "Cut ideals of graphs: monomial map, Markov bases, quadratic generators, fiber sampling";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<K4MinorError>(m, "K4MinorError", domain.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b);
                               return out;
                             })
      .def("to_dict", [](const Graph& g) { return to_python(io::graph_to_json(g)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + describe(g) + ")"; });

  m.def("parse_graph", &parse_graph, py::arg("text"), "Graph from its JSON text");
  m.def("add_edge", &add_edge, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("contract_edge", [](const Graph& g, int a, int b) { return contract_edge(g, Edge(a, b)); },
        py::arg("g"), py::arg("a"), py::arg("b"));
  m.def("delete_vertex", &delete_vertex, py::arg("g"), py::arg("v"));
  m.def("is_connected", &is_connected, py::arg("g"));
  m.def("is_k4_minor_free", &is_k4_minor_free, py::arg("g"));

  m.def("cuts", [](const Graph& g) {
        Json out = Json::array();
        for (const Cut& c : enumerate_cuts(g)) out.push_back(io::cut_to_json(c));
        return to_python(out);
      },
      py::arg("g"), "Cuts as the sorted side holding vertex 0");

  m.def("phi", [](const Graph& g, const py::handle& monomial) {
        const CutMonomial mono = io::monomial_from_json(from_python(monomial), g);
        return to_python(io::exponents_to_json(g, phi_image(g, mono)));
      },
      py::arg("g"), py::arg("monomial"), "Per-edge (s, t) exponents of a list of cuts");

  m.def("height", [](const Graph& g, const py::handle& monomial, int u, int v) {
        return height(io::monomial_from_json(from_python(monomial), g), u, v);
      },
      py::arg("g"), py::arg("monomial"), py::arg("u"), py::arg("v"));

  m.def("fiber", [](const Graph& g, const py::handle& monomial) {
        const CutMonomial mono = io::monomial_from_json(from_python(monomial), g);
        Json out = Json::array();
        for (const CutMonomial& x : enumerate_fiber(g, phi_image(g, mono), static_cast<int>(mono.degree())))
          out.push_back(io::monomial_to_json(x));
        return to_python(out);
      },
      py::arg("g"), py::arg("monomial"), "Every monomial with the same image");

  m.def("decompose", [](const Graph& g) { return to_python(io::sp_tree_to_json(sp_decompose(g))); },
        py::arg("g"));

  m.def("markov_basis", [](const Graph& g, int max_degree, std::uint64_t fiber_cap) {
        MarkovBasisReport r;
        {
          py::gil_scoped_release release;
          r = markov_basis_up_to_degree(g, max_degree, oracle(fiber_cap));
        }
        Json out = io::generating_set_to_json(r.basis);
        out["new_per_degree"] = r.new_per_degree;
        return to_python(out);
      },
      py::arg("g"), py::arg("max_degree") = 4, py::arg("fiber_cap") = 1'000'000);

  m.def("quadratic_basis", [](const Graph& g, bool prune) {
        GlueOptions opts;
        opts.prune = prune;
        QuadraticBasis q;
        {
          py::gil_scoped_release release;
          q = quadratic_basis_sp(g, opts);
        }
        return to_python(io::quadratic_basis_to_json(q));
      },
      py::arg("g"), py::arg("prune") = false);

  m.def("all_quadrics", [](const Graph& g) {
        return to_python(io::generating_set_to_json(all_quadratic_kernel_binomials(g)));
      },
      py::arg("g"), "Every degree-2 kernel binomial");

  m.def("generates", [](const Graph& g, const py::handle& basis, int max_degree, std::uint64_t fiber_cap) {
        const GeneratingSet s = basis_for(g, basis);
        GenerationCheck c;
        {
          py::gil_scoped_release release;
          c = generates_up_to_degree(g, s, max_degree, oracle(fiber_cap));
        }
        return generation_result(c);
      },
      py::arg("g"), py::arg("basis"), py::arg("max_degree") = 4, py::arg("fiber_cap") = 1'000'000);

  m.def("is_slow_varying", [](const Graph& g, const py::handle& basis, int u, int v) {
        return is_slow_varying(basis_for(g, basis), u, v);
      },
      py::arg("g"), py::arg("basis"), py::arg("u"), py::arg("v"));

  m.def("marginals", [](const Graph& g, const py::handle& counts) {
        return to_python(io::marginals_to_json(marginals(io::counts_from_json(from_python(counts), g), g)));
      },
      py::arg("g"), py::arg("counts"));

  m.def("sample",
        [](const Graph& g, const py::handle& counts, const py::object& basis, std::int64_t steps,
           std::int64_t burn_in, std::int64_t thin, std::uint64_t seed) {
          const CutTable t0 = io::counts_from_json(from_python(counts), g);
          const GeneratingSet moves =
              basis.is_none() ? quadratic_basis_sp(g).generators : basis_for(g, basis);
          SampleRun run;
          {
            py::gil_scoped_release release;
            run = sample_fiber(g, t0, moves, steps, burn_in, thin, seed);
          }
          Json header = io::sample_header_to_json(run.header);
          header["accepted"] = run.accepted;
          Json samples = Json::array();
          for (const CutTable& t : run.samples) samples.push_back(io::counts_to_json(t));
          return to_python(Json{{"header", header}, {"samples", samples}});
        },
        py::arg("g"), py::arg("counts"), py::arg("basis") = py::none(), py::arg("steps") = 10'000,
        py::arg("burn_in") = 0, py::arg("thin") = 1, py::arg("seed") = 1,
        "Random walk on the fiber of a table; basis defaults to the quadratic construction");
}
