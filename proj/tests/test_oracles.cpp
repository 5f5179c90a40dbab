#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgsep/generate.hpp"
#include "lgsep/oracles.hpp"

using namespace lgsep;

namespace {

Graph family(Family f, std::int32_t a, std::int32_t b = 0, std::uint64_t seed = 0) {
  return generate({f, a, b, seed});
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({i, static_cast<Vertex>(i + 5)});
    e.push_back({static_cast<Vertex>(5 + i), static_cast<Vertex>(5 + (i + 2) % 5)});
  }
  for (auto& x : e)
    if (x.u > x.v) std::swap(x.u, x.v);
  return Graph(10, e);
}

Graph k33() {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) e.push_back({a, b});
  return Graph(6, e);
}

}  // namespace

TEST_CASE("treewidth of small families") {
  CHECK(exact_treewidth(family(Family::random_tree, 10, 0, 1)) == 1);
  CHECK(exact_treewidth(family(Family::complete, 4)) == 3);
  CHECK(exact_treewidth(family(Family::grid, 3, 3)) == 3);
  CHECK(treewidth_by_permutations(family(Family::grid, 3, 3)) == 3);
  CHECK(exact_treewidth(family(Family::cycle, 8)) == 2);
  CHECK(exact_treewidth(Graph(3, {})) == 0);
  CHECK(exact_treewidth(family(Family::grid, 3, 4), {}, Execution::parallel) == 3);
  CHECK_THROWS_AS(exact_treewidth(family(Family::path, 13)), LimitExceeded);
  OracleLimits wide;
  wide.max_vertices_tw = 16;
  CHECK(exact_treewidth(family(Family::grid, 4, 4), wide) == 4);
}

TEST_CASE("the two treewidth strategies agree") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = family(Family::outerplanar, 4 + static_cast<std::int32_t>(seed % 6), 0, seed);
    CHECK(exact_treewidth(g) == treewidth_by_permutations(g));
    CHECK(exact_treewidth(g) == exact_treewidth(g, {}, Execution::parallel));
  }
  CHECK(exact_treewidth(petersen()) == 4);
  CHECK(exact_treewidth(k33()) == 3);
}

TEST_CASE("minimum balanced edge separators") {
  CHECK(min_balanced_edge_separator(family(Family::star, 10), WeightFunction::uniform(10)).size() == 5);
  CHECK(min_balanced_edge_separator(family(Family::path, 2), WeightFunction::uniform(2)) == EdgeSet{0});
  CHECK(min_balanced_edge_separator(family(Family::path, 4), WeightFunction::uniform(4)) == EdgeSet{1});
  CHECK_THROWS_AS(min_balanced_edge_separator(family(Family::path, 22), WeightFunction::uniform(22)),
                  LimitExceeded);
}

TEST_CASE("balanced separator: enumeration orders agree") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = family(Family::outerplanar, 8, 0, seed);
    const auto w = random_weights(8, seed);
    const auto a = min_balanced_edge_separator(g, w);
    const auto b = min_balanced_edge_separator(g, w, {}, Execution::parallel);
    CHECK(a == b);
    CHECK(validate_separator(g, a, w));
    // Independent check: nothing smaller works.
    if (!a.empty()) {
      bool smaller = false;
      const auto m = g.num_edges();
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) >= static_cast<int>(a.size())) continue;
        EdgeSet f;
        for (EdgeId e = 0; e < m; ++e)
          if (mask >> e & 1) f.push_back(e);
        smaller = smaller || static_cast<bool>(validate_separator(g, f, w));
      }
      CHECK_FALSE(smaller);
    }
  }
}

TEST_CASE("isoperimetric numbers") {
  CHECK(exact_isoperimetric(family(Family::path, 2)).phi == 1);
  CHECK(exact_isoperimetric(family(Family::cycle, 10)).phi == Rational(2, 5));
  // K_{1,5}: any S of at most 3 vertices without the centre has ratio 1;
  // with the centre, |S| <= 3 leaves at least 3 cut edges over 3 vertices.
  const auto star = exact_isoperimetric(family(Family::star, 6));
  CHECK(star.phi == 1);
  CHECK(exact_isoperimetric(family(Family::grid, 4, 4)).phi == exact_isoperimetric(family(Family::grid, 4, 4), {}, Execution::parallel).phi);
  CHECK(exact_isoperimetric(family(Family::grid, 4, 4)).phi == Rational(1, 2));
  CHECK_THROWS_AS(exact_isoperimetric(family(Family::path, 17)), LimitExceeded);
}

TEST_CASE("minor search") {
  const auto k5 = has_kt_minor(family(Family::complete, 5), 5);
  CHECK(k5.found);
  REQUIRE(k5.model);
  CHECK(k5.model->branch_sets.size() == 5);
  CHECK_FALSE(has_kt_minor(family(Family::random_tree, 12, 0, 2), 3).found);
  CHECK(has_kt_minor(family(Family::cycle, 7), 3).found);
  const auto pet = has_kt_minor(petersen(), 5);
  CHECK(pet.found);
  REQUIRE(pet.model);
  CHECK(validate_model(petersen(), *pet.model));
  CHECK_FALSE(has_kt_minor(k33(), 5).found);
  CHECK(has_kt_minor(k33(), 4).found);
  CHECK_FALSE(has_kt_minor(family(Family::grid, 3, 4), 5).found);
  CHECK(has_kt_minor(family(Family::grid, 3, 3), 4).found);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK_FALSE(has_kt_minor(family(Family::outerplanar, 12, 0, seed), 4).found);
  CHECK_THROWS_AS(has_kt_minor(family(Family::path, 15), 3), LimitExceeded);
}

TEST_CASE("edge lemma contract check") {
  const Graph p5 = family(Family::path, 5);
  const auto all = all_vertices(p5);
  const std::vector<VertexSet> ends{{0}, {4}};
  const auto near = edge_tree_or_separator(p5, ends, Radius::of_integer(4));
  const auto far = edge_tree_or_separator(p5, ends, Radius::of_integer(1));
  const auto a = edge_lemma_contract_check(p5, all, ends, Radius::of_integer(4), near);
  CHECK(a.tree_exists);
  CHECK(a.consistent);
  const auto b = edge_lemma_contract_check(p5, all, ends, Radius::of_integer(1), far);
  CHECK_FALSE(b.tree_exists);
  CHECK(b.consistent);
  CHECK_FALSE(far.is_tree());
  const auto single = edge_tree_or_separator(p5, all, {{2, 3}}, Radius::of_integer(0), 1);
  CHECK(edge_lemma_contract_check(p5, all, {{2, 3}}, Radius::of_integer(0), single).tree_exists);

  TreeOrSeparator wrong;
  wrong.kind = TreeOrSeparator::Kind::separator;
  wrong.h = 2;
  wrong.r = Radius::of_integer(1);
  wrong.c_sep = 1;
  const auto c = edge_lemma_contract_check(p5, all, ends, Radius::of_integer(1), wrong);
  CHECK_FALSE(c.consistent);
  CHECK(c.clause == "separation");
}
