#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cutideal/cut_algebra.hpp"
#include "cutideal/glue.hpp"
#include "cutideal/oracle.hpp"
#include "cutideal/sampler.hpp"
#include "cutideal/sp_tree.hpp"

namespace cutideal::io {

/// Insertion-ordered so emitted documents keep the documented key order.
using Json = nlohmann::ordered_json;

/// Parses text as JSON; ParseError on failure.
Json parse_json(std::string_view text, const char* what);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// A cut is the sorted vertex list of the side holding vertex 0.
Json cut_to_json(Cut c);
Cut cut_from_json(const Json& j, const Graph& g);

Json monomial_to_json(const CutMonomial& m);
CutMonomial monomial_from_json(const Json& j, const Graph& g);

Json exponents_to_json(const Graph& g, const EdgeExponentVector& x);
EdgeExponentVector exponents_from_json(const Json& j, const Graph& g);

Json binomial_to_json(const Binomial& b);
Binomial binomial_from_json(const Json& j, const Graph& g);

/// {"graph": ..., "binomials": [{"lhs": [...], "rhs": [...]}], "max_degree_needed": d}
Json generating_set_to_json(const GeneratingSet& s);
GeneratingSet generating_set_from_json(const Json& j);

/// Generating set plus "construction_trace".
Json quadratic_basis_to_json(const QuadraticBasis& q);

Json trace_to_json(const std::vector<TraceEntry>& trace);

/// Nested nodes with "kind": "leaf" | "series" | "parallel".
Json sp_tree_to_json(const SPTree& t);
/// Rebuilds a tree over `host`; the composed graph must equal host.
SPTree sp_tree_from_json(const Json& j, const Graph& host);

/// Counts file: {"[0]": 9, "[0,1]": 6, ...}.
Json counts_to_json(const CutTable& t);
CutTable counts_from_json(const Json& j, const Graph& g);
std::string cut_key(Cut c);

Json marginals_to_json(const MarginalVector& m);

Json witness_to_json(const GenerationWitness& w);

Json sample_header_to_json(const SampleHeader& h);

}  // namespace cutideal::io
