#pragma once

#include <cstdint>
#include <vector>

#include "lgsep/graph.hpp"
#include "lgsep/radius.hpp"

namespace lgsep {

/// Guarantee factor of vertex_tree_or_separator for h target sets: the returned
/// separator always satisfies |Z| <= c(h) * (h-1) * n / r.
///
/// h <= 2: c = 1 (some layer among the first floor(r)+1 BFS layers is small).
/// h == 3: c = 2 (every candidate cut layer is tried; harmonic recurrence).
/// h >= 4: continuous-limit estimate plus one, enforced by the runtime check only.
std::int64_t separator_guarantee(std::int32_t h);

/// Either a small tree meeting every target set or a separator no component of
/// whose complement meets all target sets.
struct TreeOrSeparator {
  enum class Kind { tree, separator };

  Kind kind = Kind::tree;
  /// Tree outcome: vertices and edges of the tree (host ids). In the edge
  /// version `tree_edges` holds host edge ids; in the vertex version it holds
  /// the host edge ids of the tree edges as well.
  VertexSet tree_vertices;
  EdgeSet tree_edges;
  /// Separator outcome: Z (vertex version) or F (edge version).
  VertexSet vertex_separator;
  EdgeSet edge_separator;

  std::int32_t h = 0;
  Radius r;
  std::int64_t c_sep = 1;
  /// n of the working set (vertex version) or its edge count (edge version).
  std::int64_t universe = 0;
  /// Edge version only: number of vertices of the line-graph tree behind the
  /// returned tree; at least |tree_edges|.
  std::int64_t line_tree_size = 0;

  bool is_tree() const { return kind == Kind::tree; }
  /// |Z| * r / ((h-1) n), the constant actually achieved; 0 for trees.
  double achieved_factor() const;
};

/// Tree with |V(T)| <= r meeting every target inside G[within], or Z subset of
/// `within` with |Z| <= c_sep (h-1) |within| / r such that no component of
/// G[within] - Z meets every target. Targets are intersected with `within`.
/// Throws ParameterError for r < 1 or h = 0, ContractViolation if the result
/// fails its own contract.
TreeOrSeparator vertex_tree_or_separator(const Graph& g, const VertexSet& within,
                                         const std::vector<VertexSet>& targets, Radius r,
                                         std::int64_t c_sep);
TreeOrSeparator vertex_tree_or_separator(const Graph& g, const std::vector<VertexSet>& targets,
                                         Radius r);

/// Edge analogue on G[within], reduced to the vertex version on L(G[within])
/// with targets E(A_i, V). Tree outcome has |E(T)| <= r; separator outcome
/// has |F| <= c_sep (h-1) |E(G[within])| / r. h = 1 yields a single vertex of
/// A_1 without the reduction. Requires no isolated vertex in G[within].
TreeOrSeparator edge_tree_or_separator(const Graph& g, const VertexSet& within,
                                       const std::vector<VertexSet>& targets, Radius r,
                                       std::int64_t c_sep);
TreeOrSeparator edge_tree_or_separator(const Graph& g, const std::vector<VertexSet>& targets,
                                       Radius r);

/// True iff no component of G[within] - removed meets every target.
bool edge_set_separates(const Graph& g, const VertexSet& within, const EdgeSet& removed,
                        const std::vector<VertexSet>& targets);
bool vertex_set_separates(const Graph& g, const VertexSet& within, const VertexSet& removed,
                          const std::vector<VertexSet>& targets);

/// Inclusion-minimal separating subset of F, dropping edges in ascending id
/// order. Throws PreconditionError if F does not separate.
EdgeSet minimalize_edge_separator(const Graph& g, const VertexSet& within, const EdgeSet& f,
                                  const std::vector<VertexSet>& targets);

/// Re-checks a result against its contract; returns the first violated clause.
Verdict check_vertex_contract(const Graph& g, const VertexSet& within,
                              const std::vector<VertexSet>& targets, const TreeOrSeparator& res);
Verdict check_edge_contract(const Graph& g, const VertexSet& within,
                            const std::vector<VertexSet>& targets, const TreeOrSeparator& res);

}  // namespace lgsep
