#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgsep/formats.hpp"
#include "lgsep/generate.hpp"
#include "lgsep/report.hpp"

using namespace lgsep;

TEST_CASE("parse a small graph") {
  const Graph g = parse_graph("p tw 2 1\n1 2\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.edge(0) == Edge{0, 1});
}

TEST_CASE("graph round trip on canonical form") {
  const std::string raw = "c a comment\np tw 4 3\n3 4\n\n2 1\nc middle\n2 3\n";
  const Graph g = parse_graph(raw);
  CHECK(emit_graph(g) == "p tw 4 3\n1 2\n2 3\n3 4\n");
  CHECK(parse_graph(emit_graph(g)) == g);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph o = generate({Family::outerplanar, 30, 0, seed});
    CHECK(parse_graph(emit_graph(o)) == o);
  }
}

TEST_CASE("graph parse errors") {
  CHECK_THROWS_AS(parse_graph("p tw 2 2\n1 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p tw 2 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p tw 2 1\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p td 2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p tw 3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p tw 2 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("decomposition text") {
  TreeDecomposition d;
  d.bags = {{0, 1, 2}};
  CHECK(emit_decomposition(d, 3) == "s td 1 3 3\nb 1 1 2 3\n");
  CHECK(emit_decomposition(TreeDecomposition{}, 0) == "s td 0 0 0\n");
  const auto back = parse_decomposition(emit_decomposition(d, 3));
  CHECK(back.num_vertices == 3);
  CHECK(back.decomposition.bags == d.bags);
  CHECK(validate(generate({Family::complete, 3, 0, 0}), back.decomposition));
}

TEST_CASE("decomposition round trip of an engine output") {
  const Graph g = generate({Family::grid, 4, 5, 0});
  auto res = line_graph_tree_decomposition(g, 5);
  REQUIRE(std::holds_alternative<LineGraphDecomposition>(res));
  const auto& d = std::get<LineGraphDecomposition>(res).decomposition;
  const auto back = parse_decomposition(emit_decomposition(d, g.num_edges()));
  CHECK(back.decomposition.bags == d.bags);
  CHECK(back.decomposition.tree_edges == d.tree_edges);
  CHECK(validate(line_graph(g).graph, back.decomposition));
}

TEST_CASE("decomposition parse errors") {
  CHECK_THROWS_AS(parse_decomposition("s td 1 2 3\nb 1 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("s td 2 2 3\nb 1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("s td 1 2 2\nb 1 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("s td 1 1 2\nb 1 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("p tw 1 0\n"), ParseError);
}

TEST_CASE("weights text") {
  const auto w = parse_weights("c weights\n1 1/2\n3 1/2\n", 3);
  CHECK(w.w[0] == Rational(1, 2));
  CHECK(w.w[1] == 0);
  CHECK(w.validate(3));
  CHECK(parse_weights(emit_weights(w), 3).w == w.w);
  CHECK(emit_weights(w) == "1 1/2\n2 0/1\n3 1/2\n");
  CHECK_THROWS_AS(parse_weights("4 1/2\n", 3), ParseError);
  CHECK_THROWS_AS(parse_weights("1 1/0\n", 3), ParseError);
  CHECK_THROWS_AS(parse_weights("1 1/2\n1 1/2\n", 3), ParseError);
}

TEST_CASE("reports are deterministic and self-consistent") {
  const Graph g = generate({Family::outerplanar, 18, 0, 5});
  auto run = [&] {
    auto res = partition_line_graph(g, 4);
    REQUIRE(std::holds_alternative<LineGraphPartition>(res));
    Json j = envelope("partition", g, 4);
    j.update(partition_report(g, std::get<LineGraphPartition>(res)));
    return dump(j);
  };
  const auto first = run();
  CHECK(first == run());
  const Json j = Json::parse(first);
  CHECK(j["schema"] == "lgsep/1");
  CHECK(j["input"]["digest"].get<std::string>().size() == 16);
  CHECK(all_validators_pass(j));
  const auto p = partition_from_json(j);
  const auto params = Params::for_graph(g, 4);
  CHECK(validate_partition(g, p, params));
  CHECK(validate_embedding(g, p, *embedding_from_json(j), params));
  CHECK(input_digest(g) == input_digest(parse_graph(emit_graph(g))));
  CHECK(input_digest(g) != input_digest(generate({Family::outerplanar, 18, 0, 6})));
}

TEST_CASE("certificate and separator reports") {
  const Graph g = generate({Family::complete, 7, 0, 0});
  auto res = partition_line_graph(g, 5);
  REQUIRE(std::holds_alternative<KtCertificate>(res));
  const Json c = certificate_report(g, std::get<KtCertificate>(res), 5);
  CHECK(validate_model(g, model_from_json(c)));
  CHECK(all_validators_pass(c));

  const Graph grid = generate({Family::grid, 4, 4, 0});
  const auto w = WeightFunction::uniform(16);
  auto sres = balanced_edge_separator(grid, w, 5);
  REQUIRE(std::holds_alternative<EdgeSeparatorResult>(sres));
  const Json s = separator_report(grid, std::get<EdgeSeparatorResult>(sres), w, "uniform");
  CHECK(all_validators_pass(s));
  CHECK(validate_separator(grid, separator_from_json(s), w));
  CHECK_THROWS_AS(separator_from_json(Json::object()), ParseError);
}
