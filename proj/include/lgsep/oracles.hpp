#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgsep/ast_lemma.hpp"
#include "lgsep/exec.hpp"
#include "lgsep/graph.hpp"
#include "lgsep/separator.hpp"

namespace lgsep {

/// Size guards for the exponential searches; LimitExceeded above them.
struct OracleLimits {
  std::int32_t max_vertices_tw = 12;
  std::int32_t max_edges_sep = 20;
  std::int32_t max_vertices_iso = 16;
  std::int32_t max_vertices_minor = 14;
};

/// Subset DP over elimination prefixes: TW(S) = min_v max(TW(S - v), |Q(S - v, v)|).
/// The parallel variant evaluates one popcount layer at a time.
std::int32_t exact_treewidth(const Graph& g, const OracleLimits& limits = {},
                             Execution execution = Execution::serial);
/// Minimum over all elimination orderings; n <= 9.
std::int32_t treewidth_by_permutations(const Graph& g);

/// Minimum-cardinality F with every component of G - F weighing <= 1/2.
/// Sizes ascending, lexicographic by edge id within a size: the first hit is returned.
EdgeSet min_balanced_edge_separator(const Graph& g, const WeightFunction& w, const OracleLimits& limits = {},
                                    Execution execution = Execution::serial);

struct IsoperimetricValue {
  Rational phi;
  VertexSet s;  // a minimizer; smallest bitmask on ties
};
IsoperimetricValue exact_isoperimetric(const Graph& g, const OracleLimits& limits = {},
                                       Execution execution = Execution::serial);

struct MinorSearch {
  bool found = false;
  std::optional<MinorModel> model;  // validated against the input graph
  std::int64_t nodes = 0;           // search nodes visited
};
MinorSearch has_kt_minor(const Graph& g, std::int32_t t, const OracleLimits& limits = {});

struct EdgeContractReport {
  bool tree_exists = false;  // some tree with <= floor(r) edges in G[within] hits every target
  bool contract_ok = false;  // the result satisfies its stated contract
  bool consistent = false;   // contract_ok, and a separator is only returned where one is allowed
  std::string clause;        // first failure, empty when consistent
};
/// Exhaustive over connected subsets of G[within] (|within| <= 18).
EdgeContractReport edge_lemma_contract_check(const Graph& g, const VertexSet& within,
                                             const std::vector<VertexSet>& targets, Radius r,
                                             const TreeOrSeparator& result);

}  // namespace lgsep
