#include <gtest/gtest.h>

#include "cutideal/error.hpp"
#include "cutideal/json_io.hpp"
#include "test_support.hpp"

using namespace cutideal;
using namespace cutideal::testing;
using cutideal::io::Json;

TEST(JsonIo, GraphRoundTrip) {
  for (const Graph& g : {Graph(), path(4), cycle(5), theta({1, 1, 2})}) {
    const Json j = io::graph_to_json(g);
    EXPECT_EQ(io::graph_from_json(j), g);
    EXPECT_EQ(parse_graph(j.dump()), g);
  }
  EXPECT_EQ(io::graph_to_json(path(3)).dump(), R"({"n":3,"edges":[[0,1],[1,2]]})");
}

TEST(JsonIo, CutsAndMonomials) {
  const Graph g = path(4);
  EXPECT_EQ(io::cut_to_json(paper_cut({1, 2})).dump(), "[0,1]");
  EXPECT_EQ(io::cut_from_json(Json::parse("[0,2]"), g), paper_cut({1, 3}));
  EXPECT_THROW(io::cut_from_json(Json::parse("[1,2]"), g), ParseError);
  EXPECT_THROW(io::cut_from_json(Json::parse("[0,7]"), g), ParseError);
  EXPECT_THROW(io::cut_from_json(Json::parse("[0,0]"), g), ParseError);
  const CutMonomial m{paper_cut({1, 2}), paper_cut({1, 3})};
  EXPECT_EQ(io::monomial_to_json(m).dump(), "[[0,1],[0,2]]");
  EXPECT_EQ(io::monomial_from_json(io::monomial_to_json(m), g), m);
}

TEST(JsonIo, Exponents) {
  const Graph g = path(3);
  const auto x = phi_image(g, CutMonomial{Cut{0b001}, Cut{0b011}});
  const Json j = io::exponents_to_json(g, x);
  EXPECT_EQ(j.dump(), R"([{"edge":[0,1],"s":1,"t":1},{"edge":[1,2],"s":1,"t":1}])");
  EXPECT_EQ(io::exponents_from_json(j, g), x);
}

TEST(JsonIo, GeneratingSetRoundTrip) {
  for (const Graph& g : {path(4), cycle(4), complete(4)}) {
    const auto s = markov_basis_up_to_degree(g, 4).basis;
    const Json j = io::generating_set_to_json(s);
    EXPECT_TRUE(j.contains("max_degree_needed"));
    const auto back = io::generating_set_from_json(j);
    EXPECT_EQ(back.graph, s.graph);
    EXPECT_EQ(back.binomials, s.binomials);
    EXPECT_EQ(back.max_degree, s.max_degree);
    EXPECT_EQ(io::generating_set_to_json(back).dump(), j.dump());
  }
}

TEST(JsonIo, GeneratingSetRejectsNonsense) {
  EXPECT_THROW(io::generating_set_from_json(Json::parse(R"({"graph":{"n":3,"edges":[[0,1],[1,2]]}})")),
               ParseError);
  const char* degree_mismatch =
      R"({"graph":{"n":3,"edges":[[0,1],[1,2]]},"binomials":[{"lhs":[[0]],"rhs":[[0],[0,1]]}],"max_degree_needed":2})";
  EXPECT_THROW(io::generating_set_from_json(Json::parse(degree_mismatch)), ParseError);
}

TEST(JsonIo, QuadraticBasisCarriesTrace) {
  const auto q = quadratic_basis_sp(cycle(4));
  const Json j = io::quadratic_basis_to_json(q);
  ASSERT_TRUE(j.contains("construction_trace"));
  EXPECT_EQ(j["construction_trace"].size(), q.trace.size());
  EXPECT_EQ(io::generating_set_from_json(j).binomials, q.generators.binomials);
}

TEST(JsonIo, SPTreeRoundTrip) {
  for (const Graph& g : {path(4), cycle(5), k4_minus_edge(), theta({1, 1, 2}), bowtie()}) {
    const SPTree t = sp_decompose(g);
    const Json j = io::sp_tree_to_json(t);
    const SPTree back = io::sp_tree_from_json(j, g);
    EXPECT_EQ(back.compose(), g);
    EXPECT_EQ(io::sp_tree_to_json(back).dump(), j.dump());
  }
  const Json leaf = Json::parse(R"({"kind":"leaf","edge":[0,1]})");
  EXPECT_THROW(io::sp_tree_from_json(leaf, path(3)), ParseError);
  const Json bogus = Json::parse(R"({"kind":"bridge"})");
  EXPECT_THROW(io::sp_tree_from_json(bogus, path(2)), ParseError);
}

TEST(JsonIo, CountsRoundTrip) {
  const Graph g = path(4);
  const Json j = io::counts_to_json(paper_table());
  EXPECT_EQ(j["[0,1]"], 6);
  EXPECT_EQ(j["[0]"], 9);
  EXPECT_EQ(io::counts_from_json(j, g), paper_table());
  EXPECT_EQ(io::cut_key(paper_cut({1, 2, 4})), "[0,1,3]");
  EXPECT_THROW(io::counts_from_json(Json::parse(R"({"[0,1]": -1})"), g), ParseError);
  EXPECT_THROW(io::counts_from_json(Json::parse(R"({"[1]": 1})"), g), ParseError);
  EXPECT_THROW(io::counts_from_json(Json::parse(R"({"zero": 1})"), g), ParseError);
  EXPECT_THROW(io::counts_from_json(Json::parse(R"([1,2])"), g), ParseError);
}

TEST(JsonIo, Marginals) {
  const Json j = io::marginals_to_json(marginals(paper_table(), path(4)));
  EXPECT_EQ(j["edges"].dump(), "[[0,1],[1,2],[2,3]]");
  EXPECT_EQ(j["cut_counts"].dump(), "[37,35,44]");
  EXPECT_EQ(j["total"], 76);
}

TEST(JsonIo, ParseErrors) {
  EXPECT_THROW(io::parse_json("{", "test"), ParseError);
  EXPECT_NO_THROW(io::parse_json("{}", "test"));
}
