#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lgsep/graph.hpp"
#include "lgsep/partition.hpp"
#include "lgsep/treedecomp.hpp"

namespace lgsep {

using Rational = boost::multiprecision::cpp_rational;

/// Vertex weights in [0, 1/2] summing to exactly 1.
struct WeightFunction {
  std::vector<Rational> w;

  static WeightFunction uniform(std::int32_t n);
  Verdict validate(std::int32_t n) const;
};

struct SeparatorComponent {
  VertexSet vertices;
  Rational weight;
};

struct EdgeSeparatorResult {
  EdgeSet f;
  std::vector<SeparatorComponent> components;  // ordered by smallest vertex
  std::int64_t bound_used = 0;   // (t-1) floor(p_impl)
  std::int64_t base_bound = 0;  // same with c_sep = 1
  NodeId sink_node = -1;         // -1 when G has no edges
  std::vector<NodeId> anchor;    // u(x) for every vertex
  Params params;
  std::int32_t decomposition_width = -1;
};

/// Node with no tree edge oriented away from it: every component of T - v has
/// total weight <= 1/2. Ties at exactly 1/2 are not oriented. Smallest id wins.
NodeId orient_and_find_sink(const TreeDecomposition& d, const std::vector<Rational>& node_weights);

/// u(x): smallest node whose bag holds every edge at x; isolated vertices map to node 0.
std::vector<NodeId> anchor_map(const Graph& g, const TreeDecomposition& line_decomposition);

/// F = bag of the sink node of an L(G) decomposition (bags over edge ids).
/// Throws ContractViolation if balance or the anchor/subtree property fails.
EdgeSeparatorResult separator_from_decomposition(const Graph& g, const WeightFunction& w,
                                                 const TreeDecomposition& line_decomposition);

std::variant<EdgeSeparatorResult, KtCertificate> balanced_edge_separator(
    const Graph& g, const WeightFunction& w, std::int32_t t, const EngineOptions& options = {});

/// Components of G - F with their weights, ordered by smallest vertex.
std::vector<SeparatorComponent> weighted_components(const Graph& g, const EdgeSet& f,
                                                    const WeightFunction& w);

/// Independent check: F inside E(G) and every component of G - F weighs <= 1/2.
Verdict validate_separator(const Graph& g, const EdgeSet& f, const WeightFunction& w);

struct IsoperimetricWitness {
  VertexSet s;
  std::int64_t cut_size = 0;
  Rational ratio;
  std::int64_t window_low = 0;   // ceil(n/3)
  std::int64_t window_high = 0;  // floor(n/2)
  bool greedy = false;           // found by the descending-size fast path
  EdgeSeparatorResult separator;
};

/// Indices of a subset of `sizes` whose total lies in [low, high]; greedy by
/// descending size first, then exact subset sum. nullopt if none exists.
std::optional<std::vector<std::size_t>> select_components_in_window(
    const std::vector<std::int64_t>& sizes, std::int64_t low, std::int64_t high, bool* greedy = nullptr);

std::variant<IsoperimetricWitness, KtCertificate> isoperimetric_witness(
    const Graph& g, std::int32_t t, const EngineOptions& options = {});

/// |E(S, V - S)|
std::int64_t cut_size(const Graph& g, const VertexSet& s);

std::string format_rational(const Rational& q);

}  // namespace lgsep
