#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgsep/errors.hpp"

namespace lgsep {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Sorted, duplicate-free vertex ids over a host graph.
using VertexSet = std::vector<Vertex>;
/// Sorted, duplicate-free edge ids over a host graph.
using EdgeSet = std::vector<EdgeId>;
/// Dense membership flags indexed by vertex or edge id.
using Mask = std::vector<char>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph.
///
/// Edges are stored with u < v and sorted lexicographically; edge id i is the
/// i-th edge in that order. Adjacency lists are sorted ascending, and
/// incident_edges(v)[k] is the id of the edge {v, neighbors(v)[k]}.
class Graph {
 public:
  Graph() = default;
  /// Canonicalizes the edge list. Throws ParameterError on loops, duplicates or
  /// out-of-range endpoints.
  Graph(std::int32_t n, std::vector<Edge> edges);

  std::int32_t num_vertices() const { return n_; }
  std::int32_t num_edges() const { return static_cast<std::int32_t>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {inc_.data() + offsets_[v], inc_.data() + offsets_[v + 1]};
  }
  std::int32_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  std::int32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> inc_;
};

/// K_k-model: pairwise disjoint, connected, pairwise adjacent branch sets.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

/// Line graph together with the id of the host edge behind each line vertex.
struct LineGraph {
  Graph graph;
  EdgeSet host_edge;
};

Mask make_mask(std::size_t size, std::span<const std::int32_t> members);
VertexSet all_vertices(const Graph& g);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_sorted_unique(std::span<const std::int32_t> ids);

std::int32_t max_degree(const Graph& g);

/// Connected components of G[within], optionally with some edges removed.
/// Each component is sorted; components are ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within,
                                  const Mask* removed_edges = nullptr);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& set);

LineGraph line_graph(const Graph& g);
/// Line graph of the induced subgraph G[within]; line vertex i is the i-th
/// smallest edge id of G[within].
LineGraph line_graph(const Graph& g, const VertexSet& within);

/// Edges with one end in x and the other in y.
EdgeSet edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);
/// Edges with both ends in x.
EdgeSet edges_within(const Graph& g, const VertexSet& x);
/// Edges with at least one end in x, i.e. E(X, V(G)).
EdgeSet edges_incident(const Graph& g, const VertexSet& x);
/// Open neighborhood.
VertexSet neighborhood(const Graph& g, const VertexSet& x);
/// Vertices touched by a set of edges.
VertexSet endpoints(const Graph& g, const EdgeSet& f);

/// Distance layers of G[within] from `sources`; unreachable vertices omitted.
std::vector<VertexSet> bfs_layers(const Graph& g, const VertexSet& sources,
                                  const VertexSet& within);

Verdict validate_model(const Graph& g, const MinorModel& model);

}  // namespace lgsep
