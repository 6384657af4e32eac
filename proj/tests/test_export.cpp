#include <doctest.h>

#include "selfsim/catalog.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/export.hpp"

using namespace selfsim;

namespace {

LabeledSchreierGraph build(const char* key, std::size_t n) {
  const RealizedAutomaton r = to_automaton(catalog_get(key).document);
  return build_schreier(r.automaton, r.generators, n);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("Basilica level 1 exports") {
  const LabeledSchreierGraph g = build("basilica", 1);
  CHECK(export_graph(g, GraphFormat::Matrix) == "b,a\na,b\n");
  CHECK(export_graph(g, GraphFormat::Edges) == "0\t1\ta\n1\t0\ta\n0\t0\tb\n1\t1\tb\n");
  CHECK(export_graph(g, GraphFormat::Dot) ==
        "digraph schreier {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -> 1 [label=\"a\"];\n"
        "  1 -> 0 [label=\"a\"];\n  0 -> 0 [label=\"b\"];\n  1 -> 1 [label=\"b\"];\n}\n");
  const std::string gml = export_graph(g, GraphFormat::GraphML);
  CHECK(count(gml, "<node ") == 2);
  CHECK(count(gml, "<edge ") == 4);
  CHECK(gml.find("edgedefault=\"directed\"") != std::string::npos);
}

TEST_CASE("matrix entries join multiple labels") {
  const RealizedAutomaton r = to_automaton(catalog_get("basilica").document);
  const std::vector<StateId> gens{r.generators[1], r.generators[1], r.generators[0]};
  const LabeledSchreierGraph g = build_schreier(r.automaton, gens, 1);
  CHECK(export_graph(g, GraphFormat::Matrix) == "b+b,a\na,b+b\n");
}

TEST_CASE("Basilica level 3 matrix uses only a, b and 0") {
  const std::string m = export_graph(build("basilica", 3), GraphFormat::Matrix);
  CHECK(count(m, "\n") == 8);
  for (char c : m) CHECK(std::string("ab0,+\n").find(c) != std::string::npos);
}

TEST_CASE("edgeless simplicial graph exports vertices only") {
  const LabeledSchreierGraph g = build("trivial", 2);
  const std::string dot = export_graph(simplicial(g), vertex_names(g), GraphFormat::Dot);
  CHECK(dot ==
        "graph schreier {\n  0 [label=\"00\"];\n  1 [label=\"01\"];\n  2 [label=\"10\"];\n  3 [label=\"11\"];\n}\n");
  CHECK(export_graph(simplicial(g), vertex_names(g), GraphFormat::Edges).empty());
  CHECK(export_graph(simplicial(g), vertex_names(g), GraphFormat::Matrix) == "0,0,0,0\n0,0,0,0\n0,0,0,0\n0,0,0,0\n");
}

TEST_CASE("simplicial matrix is the 0/1 adjacency") {
  const LabeledSchreierGraph g = build("basilica", 1);
  CHECK(export_graph(simplicial(g), vertex_names(g), GraphFormat::Matrix) == "0,1\n1,0\n");
  CHECK(export_graph(simplicial(g), vertex_names(g), GraphFormat::Edges, 0u) == "# root 0\n0\t1\n");
  const std::string dot = export_graph(simplicial(g), vertex_names(g), GraphFormat::Dot, 1u);
  CHECK(dot.find("1 [label=\"1\", shape=doublecircle]") != std::string::npos);
}

TEST_CASE("edges export round-trips") {
  for (const char* key : {"basilica", "aleshin", "hanoi", "sierpinski"}) {
    const RealizedAutomaton r = to_automaton(catalog_get(key).document);
    const LabeledSchreierGraph g = build_schreier(r.automaton, r.generators, r.automaton.alphabet().size == 2 ? 7 : 4);
    CHECK(import_edges(export_graph(g, GraphFormat::Edges), g.alphabet_size(), g.labels()) == g.arrows());
  }
  const std::vector<std::string> labels{"a"};
  CHECK_THROWS(import_edges("0\t1\n", 2, labels));
  CHECK_THROWS(import_edges("0\t1\tz\n", 2, labels));
  CHECK(import_edges("# comment\n0\t1\ta\n", 2, labels) == std::vector<Arrow>{{0, 1, 0}});
}

TEST_CASE("exports are byte-identical across runs") {
  for (GraphFormat f : {GraphFormat::Dot, GraphFormat::GraphML, GraphFormat::Edges, GraphFormat::Matrix})
    CHECK(export_graph(build("aut882", 6), f) == export_graph(build("aut882", 6), f));
}

TEST_CASE("format names") {
  for (GraphFormat f : {GraphFormat::Dot, GraphFormat::GraphML, GraphFormat::Edges, GraphFormat::Matrix})
    CHECK(parse_graph_format(format_name(f)) == f);
  CHECK_THROWS_AS(parse_graph_format("png"), DomainError);
  CHECK_THROWS_AS(export_graph(build("basilica", 15), GraphFormat::Matrix), ResourceLimitError);
}
