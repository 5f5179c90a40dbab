#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgsep/generate.hpp"
#include "lgsep/graph.hpp"

using namespace lgsep;

TEST_CASE("graph canonicalizes edges and rejects bad input") {
  Graph g(3, {{2, 1}, {0, 1}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});
  CHECK(g.degree(1) == 2);
  CHECK(g.find_edge(2, 1) == std::optional<EdgeId>(1));
  CHECK_FALSE(g.find_edge(0, 2));
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), ParameterError);
}

TEST_CASE("line graph of P_3 is K_2") {
  const Graph p3 = generate({Family::path, 3, 0, 0});
  const auto l = line_graph(p3);
  CHECK(l.graph.num_vertices() == 2);
  CHECK(l.graph.num_edges() == 1);
  CHECK(l.host_edge == EdgeSet{0, 1});
}

TEST_CASE("line graph of K_{1,4} is K_4") {
  const auto l = line_graph(generate({Family::star, 5, 0, 0}));
  CHECK(l.graph.num_vertices() == 4);
  CHECK(l.graph.num_edges() == 6);
}

TEST_CASE("line graph of C_5 is C_5") {
  const auto l = line_graph(generate({Family::cycle, 5, 0, 0}));
  CHECK(l.graph.num_vertices() == 5);
  CHECK(l.graph.num_edges() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(l.graph.degree(v) == 2);
}

TEST_CASE("line graph edge count is the sum of deg choose 2") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate({Family::outerplanar, 12, 0, seed});
    std::int64_t expected = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) expected += std::int64_t{g.degree(v)} * (g.degree(v) - 1) / 2;
    CHECK(line_graph(g).graph.num_edges() == expected);
  }
}

TEST_CASE("induced line graph renumbers the inner edges") {
  const Graph g = generate({Family::cycle, 6, 0, 0});
  const auto l = line_graph(g, {0, 1, 2, 3});
  CHECK(l.graph.num_vertices() == 3);
  CHECK(l.host_edge == edges_within(g, {0, 1, 2, 3}));
  CHECK(l.graph.num_edges() == 2);
}

TEST_CASE("components and removed edges") {
  const Graph g = generate({Family::path, 5, 0, 0});
  CHECK(components(g).size() == 1);
  const Mask cut = make_mask(g.num_edges(), EdgeSet{1});
  const auto comps = components(g, all_vertices(g), &cut);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[1] == VertexSet{2, 3, 4});
  CHECK(components(g, {0, 2, 4}).size() == 3);
  CHECK(is_connected(g, {1, 2, 3}));
  CHECK_FALSE(is_connected(g, {1, 3}));
}

TEST_CASE("edge set helpers") {
  const Graph g = generate({Family::grid, 2, 3, 0});
  CHECK(edges_within(g, {0, 1, 2}).size() == 2);
  CHECK(edges_between(g, {0, 1, 2}, {3, 4, 5}).size() == 3);
  CHECK(edges_incident(g, {0}).size() == 2);
  CHECK(neighborhood(g, {0, 1}) == VertexSet{2, 3, 4});
  CHECK(endpoints(g, edges_incident(g, {4})) == VertexSet{1, 3, 4, 5});
  CHECK(max_degree(g) == 3);
}

TEST_CASE("bfs layers") {
  const Graph g = generate({Family::path, 5, 0, 0});
  const auto layers = bfs_layers(g, {0}, all_vertices(g));
  REQUIRE(layers.size() == 5);
  CHECK(layers[3] == VertexSet{3});
  const auto partial = bfs_layers(g, {2}, {1, 2, 3});
  CHECK(partial.size() == 2);
  CHECK(partial[1] == VertexSet{1, 3});
  CHECK_THROWS_AS(bfs_layers(g, {0}, {1, 2}), PreconditionError);
}

TEST_CASE("validate_model reports the first violated clause") {
  const Graph k4 = generate({Family::complete, 4, 0, 0});
  CHECK(validate_model(k4, {{{0}, {1}, {2}, {3}}}));
  CHECK(validate_model(k4, {{{0}, {1}, {}}}).clause == "nonempty");
  CHECK(validate_model(k4, {{{0, 1}, {1}}}).clause == "disjointness");
  CHECK(validate_model(k4, {{{7}}}).clause == "range");
  const Graph p4 = generate({Family::path, 4, 0, 0});
  CHECK(validate_model(p4, {{{0, 2}, {1}}}).clause == "connectivity");
  CHECK(validate_model(p4, {{{0}, {2}}}).clause == "adjacency");
  CHECK(validate_model(p4, {{{0, 1}, {2, 3}}}));
}

TEST_CASE("generators") {
  const Graph g = generate({Family::grid, 3, 3, 0});
  CHECK(g.num_vertices() == 9);
  CHECK(g.num_edges() == 12);
  CHECK(max_degree(g) == 4);
  const Graph s = generate(make_spec("star", {10}));
  CHECK(s.num_edges() == 9);
  CHECK(s.degree(0) == 9);
  CHECK(generate({Family::random_tree, 40, 0, 7}) == generate({Family::random_tree, 40, 0, 7}));
  CHECK_FALSE(generate({Family::random_tree, 40, 0, 7}) == generate({Family::random_tree, 40, 0, 8}));
  const Graph t = generate({Family::toroidal_grid, 3, 4, 0});
  CHECK(t.num_edges() == 24);
  for (Vertex v = 0; v < t.num_vertices(); ++v) CHECK(t.degree(v) == 4);
  CHECK(generate({Family::complete, 5, 0, 0}).num_edges() == 10);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph o = generate({Family::outerplanar, 15, 0, seed});
    CHECK(o.num_edges() >= 15);
    CHECK(o.num_edges() <= 2 * 15 - 3);
  }
  CHECK_THROWS_AS(make_spec("grid", {3}), ParameterError);
  CHECK_THROWS_AS(make_spec("hexagon", {3}), ParameterError);
  CHECK_THROWS_AS(generate({Family::cycle, 2, 0, 0}), ParameterError);
}

TEST_CASE("random weights are valid") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto w = random_weights(2 + static_cast<std::int32_t>(seed % 7), seed);
    CHECK(w.validate(static_cast<std::int32_t>(w.w.size())));
  }
  CHECK(random_weights(9, 3).w == random_weights(9, 3).w);
}
