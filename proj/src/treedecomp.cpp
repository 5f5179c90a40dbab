#include "lgsep/treedecomp.hpp"

#include <algorithm>
#include <numeric>

namespace lgsep {

namespace {

bool contains_all(const VertexSet& bag, const VertexSet& x) {
  return std::includes(bag.begin(), bag.end(), x.begin(), x.end());
}

VertexSet universe(const TreeDecomposition& d) {
  VertexSet all;
  for (const auto& b : d.bags) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

Verdict validate(const Graph& g, const TreeDecomposition& d) {
  const NodeId nodes = d.num_nodes();
  if (nodes == 0)
    return g.num_vertices() == 0 ? Verdict::pass() : Verdict::fail("vertex coverage");

  if (static_cast<NodeId>(d.tree_edges.size()) != nodes - 1) return Verdict::fail("tree structure");
  std::vector<NodeId> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : d.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return Verdict::fail("tree structure");
    auto ra = find(a), rb = find(b);
    if (ra == rb) return Verdict::fail("tree structure");
    parent[ra] = rb;
  }

  const auto n = g.num_vertices();
  std::vector<std::int32_t> occurrences(n, 0);
  for (const auto& bag : d.bags) {
    if (!is_sorted_unique(bag)) return Verdict::fail("bag range");
    for (Vertex v : bag) {
      if (v < 0 || v >= n) return Verdict::fail("bag range");
      ++occurrences[v];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (occurrences[v] == 0) return Verdict::fail("vertex coverage");

  // Edge coverage: walk bags once, ticking edges whose ends share a bag.
  Mask covered(g.num_edges(), 0);
  Mask in_bag(n, 0);
  for (const auto& bag : d.bags) {
    for (Vertex v : bag) in_bag[v] = 1;
    for (Vertex v : bag) {
      auto nb = g.neighbors(v);
      for (std::size_t k = 0; k < nb.size(); ++k)
        if (in_bag[nb[k]]) covered[g.incident_edges(v)[k]] = 1;
    }
    for (Vertex v : bag) in_bag[v] = 0;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    return Verdict::fail("edge coverage");

  // In a tree, the nodes holding v induce a subtree iff they span exactly
  // occurrences[v] - 1 tree edges.
  std::vector<std::int32_t> inner_edges(n, 0);
  for (auto [a, b] : d.tree_edges) {
    const auto& ba = d.bags[a];
    const auto& bb = d.bags[b];
    std::size_t i = 0, j = 0;
    while (i < ba.size() && j < bb.size()) {
      if (ba[i] < bb[j]) ++i;
      else if (bb[j] < ba[i]) ++j;
      else {
        ++inner_edges[ba[i]];
        ++i;
        ++j;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (inner_edges[v] != occurrences[v] - 1) return Verdict::fail("subtree connectivity");

  if (d.designated) {
    if (*d.designated < 0 || *d.designated >= nodes) return Verdict::fail("designated root clique");
    if (!contains_all(d.bags[*d.designated], d.root_clique))
      return Verdict::fail("designated root clique");
  }
  return Verdict::pass();
}

std::int32_t width(const TreeDecomposition& d) {
  std::int32_t w = -1;
  for (const auto& b : d.bags) w = std::max(w, static_cast<std::int32_t>(b.size()) - 1);
  return w;
}

TreeDecomposition singleton(VertexSet clique) {
  TreeDecomposition d;
  d.bags.push_back(clique);
  d.designated = 0;
  d.root_clique = std::move(clique);
  return d;
}

TreeDecomposition glue(TreeDecomposition d1, TreeDecomposition d2, const VertexSet& shared) {
  auto check_side = [&](const TreeDecomposition& d, const char* name) {
    if (d.empty()) {
      if (!shared.empty())
        throw PreconditionError(std::string("glue: ") + name + " is empty but the shared clique is not");
      return;
    }
    if (!d.designated || !contains_all(d.bags[*d.designated], shared))
      throw PreconditionError(std::string("glue: designated bag of ") + name +
                              " does not contain the shared clique");
  };
  check_side(d1, "first decomposition");
  check_side(d2, "second decomposition");
  VertexSet common;
  const auto u1 = universe(d1), u2 = universe(d2);
  std::set_intersection(u1.begin(), u1.end(), u2.begin(), u2.end(), std::back_inserter(common));
  if (common != shared)
    throw PreconditionError("glue: decomposed graphs do not meet exactly in the shared clique");

  const NodeId offset = d1.num_nodes();
  const std::optional<NodeId> left = d1.designated;
  const std::optional<NodeId> right =
      d2.designated ? std::optional<NodeId>(*d2.designated + offset) : std::nullopt;
  for (auto& b : d2.bags) d1.bags.push_back(std::move(b));
  for (auto [a, b] : d2.tree_edges) d1.tree_edges.emplace_back(a + offset, b + offset);
  const NodeId connector = d1.num_nodes();
  d1.bags.push_back(shared);
  if (left) d1.tree_edges.emplace_back(*left, connector);
  if (right) d1.tree_edges.emplace_back(*right, connector);
  d1.designated = connector;
  d1.root_clique = shared;
  return d1;
}

TreeDecomposition attach_vertex(TreeDecomposition d, Vertex v, const VertexSet& clique) {
  for (const auto& b : d.bags)
    if (std::binary_search(b.begin(), b.end(), v))
      throw PreconditionError("attach_vertex: vertex " + std::to_string(v) + " already present");
  std::optional<NodeId> host;
  if (d.designated && contains_all(d.root_clique, clique) &&
      contains_all(d.bags[*d.designated], clique))
    host = d.designated;
  else if (auto found = nodes_containing(d, clique); !found.empty())
    host = found.front();
  if (!host && !(d.empty() && clique.empty()))
    throw PreconditionError("attach_vertex: no bag contains the clique");

  VertexSet bag = clique;
  bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
  const NodeId leaf = d.num_nodes();
  d.bags.push_back(bag);
  if (host) d.tree_edges.emplace_back(*host, leaf);
  d.designated = leaf;
  d.root_clique = std::move(bag);
  return d;
}

TreeDecomposition product_blowup(const TreeDecomposition& dh,
                                 const std::vector<EdgeSet>& part_members) {
  auto expand = [&](const VertexSet& parts) {
    VertexSet out;
    for (auto p : parts) out.insert(out.end(), part_members[p].begin(), part_members[p].end());
    std::sort(out.begin(), out.end());
    return out;
  };
  TreeDecomposition out;
  out.bags.reserve(dh.bags.size());
  for (const auto& b : dh.bags) out.bags.push_back(expand(b));
  out.tree_edges = dh.tree_edges;
  out.designated = dh.designated;
  out.root_clique = expand(dh.root_clique);
  return out;
}

std::vector<NodeId> nodes_containing(const TreeDecomposition& d, const VertexSet& x) {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < d.num_nodes(); ++u)
    if (contains_all(d.bags[u], x)) out.push_back(u);
  return out;
}

}  // namespace lgsep
