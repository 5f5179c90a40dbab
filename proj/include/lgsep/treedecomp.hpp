#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lgsep/graph.hpp"

namespace lgsep {

using NodeId = std::int32_t;

/// Bags indexed by the nodes of a tree. Node ids are dense and allocated in
/// construction order. When `designated` is set, its bag contains `root_clique`.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<NodeId, NodeId>> tree_edges;
  std::optional<NodeId> designated;
  VertexSet root_clique;

  NodeId num_nodes() const { return static_cast<NodeId>(bags.size()); }
  bool empty() const { return bags.empty(); }
};

/// Checks the tree shape, bag ranges, vertex and edge coverage, subtree
/// connectivity, and the designated-bag invariant, in that order.
Verdict validate(const Graph& g, const TreeDecomposition& d);

/// max |bag| - 1; -1 for the empty decomposition.
std::int32_t width(const TreeDecomposition& d);

TreeDecomposition singleton(VertexSet clique);

/// Union along a shared clique: a fresh connector node with bag `shared` is
/// joined to both designated nodes and becomes the new designated node.
/// Throws PreconditionError unless both designated bags contain `shared` and
/// the two vertex universes meet exactly in `shared`.
TreeDecomposition glue(TreeDecomposition d1, TreeDecomposition d2, const VertexSet& shared);

/// Adds vertex v adjacent to `clique` as a leaf bag clique + {v}. The leaf is
/// the new designated node with root clique clique + {v}.
TreeDecomposition attach_vertex(TreeDecomposition d, Vertex v, const VertexSet& clique);

/// Replaces every part id in every bag with the members of that part.
TreeDecomposition product_blowup(const TreeDecomposition& dh,
                                 const std::vector<EdgeSet>& part_members);

/// Nodes whose bag contains every element of `x`, ascending.
std::vector<NodeId> nodes_containing(const TreeDecomposition& d, const VertexSet& x);

}  // namespace lgsep
