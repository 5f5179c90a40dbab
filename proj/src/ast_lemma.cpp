#include "lgsep/ast_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lgsep {

std::int64_t separator_guarantee(std::int32_t h) {
  if (h <= 2) return 1;
  if (h == 3) return 2;
  // Worst-case layer growth N' = a - (g/u) N with inner factor g = c (h-2)
  // stays below n unless g^{1/(g-1)} <= (h-1)/(h-2).
  const double target = static_cast<double>(h - 1) / static_cast<double>(h - 2);
  std::int64_t c = separator_guarantee(h - 1);
  for (;; ++c) {
    const double g = static_cast<double>(c * (h - 2));
    if (std::pow(g, 1.0 / (g - 1.0)) <= target) break;
  }
  return c + 1;
}

double TreeOrSeparator::achieved_factor() const {
  if (is_tree() || h < 2 || universe == 0) return 0.0;
  const double size = static_cast<double>(vertex_separator.size() + edge_separator.size());
  return size * r.value() / (static_cast<double>(h - 1) * static_cast<double>(universe));
}

namespace {

VertexSet restrict_to(const VertexSet& set, const Mask& within) {
  VertexSet out;
  for (Vertex v : set)
    if (within[v]) out.push_back(v);
  return out;
}

std::vector<Mask> target_masks(std::size_t n, const std::vector<VertexSet>& targets) {
  std::vector<Mask> out;
  out.reserve(targets.size());
  for (const auto& t : targets) out.push_back(make_mask(n, t));
  return out;
}

bool meets_all(const VertexSet& comp, const std::vector<Mask>& targets) {
  for (const auto& t : targets)
    if (std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return t[v] != 0; })) return false;
  return true;
}

/// Recursive layered search behind vertex_tree_or_separator.
class LayeredSearch {
 public:
  struct Out {
    bool tree = false;
    VertexSet vertices;
    EdgeSet edges;
    VertexSet separator;
  };

  explicit LayeredSearch(const Graph& g) : g_(g) {}

  Out run(const Mask& within, const std::vector<VertexSet>& raw_targets, std::int64_t budget) const {
    std::vector<VertexSet> targets;
    targets.reserve(raw_targets.size());
    for (const auto& t : raw_targets) {
      targets.push_back(restrict_to(t, within));
      if (targets.back().empty()) return {};  // an empty target is separated by Z = {}
    }
    const std::size_t h = targets.size();
    if (h == 1) return Out{true, {targets[0].front()}, {}, {}};

    const auto n = g_.num_vertices();
    std::vector<std::int32_t> dist(n, -1);
    std::vector<EdgeId> via(n, -1);
    std::vector<VertexSet> layers;
    {
      VertexSet layer = targets.back();
      for (Vertex v : layer) dist[v] = 0;
      while (!layer.empty()) {
        VertexSet next;
        for (Vertex x : layer) {
          auto nb = g_.neighbors(x);
          for (std::size_t k = 0; k < nb.size(); ++k) {
            Vertex y = nb[k];
            if (!within[y] || dist[y] != -1) continue;
            dist[y] = dist[x] + 1;
            via[y] = g_.incident_edges(x)[k];
            next.push_back(y);
          }
        }
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(layer));
        layer = std::move(next);
      }
    }
    const auto depth = static_cast<std::int64_t>(layers.size()) - 1;

    for (std::size_t i = 0; i + 1 < h; ++i)
      if (std::none_of(targets[i].begin(), targets[i].end(), [&](Vertex v) { return dist[v] >= 0; }))
        return {};  // nothing reachable from A_h meets A_i

    auto extend = [&](Out tree) {
      Vertex x = tree.vertices.front();
      for (Vertex v : tree.vertices)
        if (dist[v] < dist[x]) x = v;
      while (dist[x] > 0) {
        const EdgeId e = via[x];
        tree.edges.push_back(e);
        x = g_.edge(e).u == x ? g_.edge(e).v : g_.edge(e).u;
        tree.vertices.push_back(x);
      }
      std::sort(tree.vertices.begin(), tree.vertices.end());
      std::sort(tree.edges.begin(), tree.edges.end());
      tree.tree = true;
      return tree;
    };

    if (h == 2) {
      Vertex x = -1;
      for (Vertex v : targets[0])
        if (dist[v] >= 0 && (x == -1 || dist[v] < dist[x])) x = v;
      if (dist[x] + 1 <= budget) return extend(Out{true, {x}, {}, {}});
      // dist[x] >= budget, so layers 0..budget all exist and are disjoint.
      std::size_t best = 0;
      for (std::size_t j = 1; j <= static_cast<std::size_t>(budget); ++j)
        if (layers[j].size() < layers[best].size()) best = j;
      return Out{false, {}, {}, layers[best]};
    }

    Out best{false, {}, {}, layers[0]};
    Mask inner(n, 0);
    std::vector<VertexSet> inner_targets(targets.begin(), targets.end() - 1);
    for (std::int64_t j = 1; j <= budget && j - 1 <= depth; ++j) {
      for (Vertex v : layers[j - 1]) inner[v] = 1;
      Out sub = run(inner, inner_targets, budget - j + 1);
      if (sub.tree) return extend(std::move(sub));
      const auto& cut = j <= depth ? layers[j] : VertexSet{};
      if (cut.size() + sub.separator.size() < best.separator.size()) {
        best.separator = set_union(cut, sub.separator);
        if (best.separator.empty()) break;
      }
    }
    return best;
  }

 private:
  const Graph& g_;
};

VertexSet checked_within(const Graph& g, const VertexSet& within) {
  if (!is_sorted_unique(within)) throw ParameterError("working set must be sorted and duplicate-free");
  for (Vertex v : within)
    if (v < 0 || v >= g.num_vertices()) throw ParameterError("working set vertex out of range");
  return within;
}

bool is_spanning_tree(const Graph& g, const VertexSet& vertices, const EdgeSet& edges) {
  if (vertices.empty() || edges.size() + 1 != vertices.size()) return false;
  std::vector<std::int32_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    const auto [u, v] = g.edge(e);
    if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
        !std::binary_search(vertices.begin(), vertices.end(), v))
      return false;
    auto ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool hits_all(const VertexSet& vertices, const std::vector<VertexSet>& targets, const Mask& within) {
  for (const auto& t : targets) {
    bool hit = false;
    for (Vertex v : t)
      if (within[v] && std::binary_search(vertices.begin(), vertices.end(), v)) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool vertex_set_separates(const Graph& g, const VertexSet& within, const VertexSet& removed,
                          const std::vector<VertexSet>& targets) {
  const auto rest = set_difference(within, removed);
  const auto masks = target_masks(g.num_vertices(), targets);
  for (const auto& comp : components(g, rest))
    if (meets_all(comp, masks)) return false;
  return true;
}

bool edge_set_separates(const Graph& g, const VertexSet& within, const EdgeSet& removed,
                        const std::vector<VertexSet>& targets) {
  const Mask cut = make_mask(g.num_edges(), removed);
  const auto masks = target_masks(g.num_vertices(), targets);
  for (const auto& comp : components(g, within, &cut))
    if (meets_all(comp, masks)) return false;
  return true;
}

Verdict check_vertex_contract(const Graph& g, const VertexSet& within,
                              const std::vector<VertexSet>& targets, const TreeOrSeparator& res) {
  const Mask in = make_mask(g.num_vertices(), within);
  const auto h = static_cast<std::int64_t>(targets.size());
  if (res.is_tree()) {
    for (Vertex v : res.tree_vertices)
      if (v < 0 || v >= g.num_vertices() || !in[v]) return Verdict::fail("tree outside working set");
    if (!is_spanning_tree(g, res.tree_vertices, res.tree_edges)) return Verdict::fail("tree shape");
    if (!res.r.admits(static_cast<std::int64_t>(res.tree_vertices.size())))
      return Verdict::fail("tree size bound");
    if (!hits_all(res.tree_vertices, targets, in)) return Verdict::fail("tree misses a target");
    return Verdict::pass();
  }
  for (Vertex v : res.vertex_separator)
    if (v < 0 || v >= g.num_vertices() || !in[v]) return Verdict::fail("separator outside working set");
  const auto n = static_cast<std::int64_t>(within.size());
  if (!res.r.within_quotient(static_cast<std::int64_t>(res.vertex_separator.size()),
                             res.c_sep * (h - 1) * n))
    return Verdict::fail("separator size bound");
  if (!vertex_set_separates(g, within, res.vertex_separator, targets))
    return Verdict::fail("separation");
  return Verdict::pass();
}

Verdict check_edge_contract(const Graph& g, const VertexSet& within,
                            const std::vector<VertexSet>& targets, const TreeOrSeparator& res) {
  const Mask in = make_mask(g.num_vertices(), within);
  const auto h = static_cast<std::int64_t>(targets.size());
  if (res.is_tree()) {
    for (Vertex v : res.tree_vertices)
      if (v < 0 || v >= g.num_vertices() || !in[v]) return Verdict::fail("tree outside working set");
    if (!is_spanning_tree(g, res.tree_vertices, res.tree_edges)) return Verdict::fail("tree shape");
    if (!res.r.admits(static_cast<std::int64_t>(res.tree_edges.size())))
      return Verdict::fail("tree size bound");
    if (!hits_all(res.tree_vertices, targets, in)) return Verdict::fail("tree misses a target");
    return Verdict::pass();
  }
  const auto inside = edges_within(g, within);
  if (!std::includes(inside.begin(), inside.end(), res.edge_separator.begin(), res.edge_separator.end()))
    return Verdict::fail("separator outside working set");
  if (!res.r.within_quotient(static_cast<std::int64_t>(res.edge_separator.size()),
                             res.c_sep * (h - 1) * static_cast<std::int64_t>(inside.size())))
    return Verdict::fail("separator size bound");
  if (!edge_set_separates(g, within, res.edge_separator, targets)) return Verdict::fail("separation");
  return Verdict::pass();
}

TreeOrSeparator vertex_tree_or_separator(const Graph& g, const VertexSet& within,
                                         const std::vector<VertexSet>& targets, Radius r,
                                         std::int64_t c_sep) {
  if (targets.empty()) throw ParameterError("at least one target set is required");
  if (!r.at_least_one()) throw ParameterError("radius must be at least 1");
  checked_within(g, within);
  for (const auto& t : targets)
    for (Vertex v : t)
      if (v < 0 || v >= g.num_vertices()) throw ParameterError("target vertex out of range");

  const Mask in = make_mask(g.num_vertices(), within);
  auto out = LayeredSearch(g).run(in, targets, r.floor());

  TreeOrSeparator res;
  res.kind = out.tree ? TreeOrSeparator::Kind::tree : TreeOrSeparator::Kind::separator;
  res.tree_vertices = std::move(out.vertices);
  res.tree_edges = std::move(out.edges);
  res.vertex_separator = std::move(out.separator);
  res.h = static_cast<std::int32_t>(targets.size());
  res.r = r;
  res.c_sep = c_sep;
  res.universe = static_cast<std::int64_t>(within.size());
  if (auto v = check_vertex_contract(g, within, targets, res); !v)
    throw ContractViolation("vertex_tree_or_separator: " + v.clause);
  return res;
}

TreeOrSeparator vertex_tree_or_separator(const Graph& g, const std::vector<VertexSet>& targets,
                                         Radius r) {
  return vertex_tree_or_separator(g, all_vertices(g), targets, r,
                                  separator_guarantee(static_cast<std::int32_t>(targets.size())));
}

TreeOrSeparator edge_tree_or_separator(const Graph& g, const VertexSet& within,
                                       const std::vector<VertexSet>& targets, Radius r,
                                       std::int64_t c_sep) {
  if (targets.empty()) throw ParameterError("at least one target set is required");
  checked_within(g, within);
  const Mask in = make_mask(g.num_vertices(), within);
  for (Vertex v : within) {
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex y) { return in[y] != 0; }))
      throw ParameterError("edge_tree_or_separator: isolated vertex " + std::to_string(v));
  }

  TreeOrSeparator res;
  res.h = static_cast<std::int32_t>(targets.size());
  res.r = r;
  res.c_sep = c_sep;

  std::vector<VertexSet> local;
  for (const auto& t : targets) {
    for (Vertex v : t)
      if (v < 0 || v >= g.num_vertices()) throw ParameterError("target vertex out of range");
    local.push_back(restrict_to(t, in));
  }
  const bool some_empty =
      std::any_of(local.begin(), local.end(), [](const VertexSet& t) { return t.empty(); });

  auto finish = [&]() {
    if (auto v = check_edge_contract(g, within, targets, res); !v)
      throw ContractViolation("edge_tree_or_separator: " + v.clause);
    return res;
  };

  if (some_empty) {
    res.kind = TreeOrSeparator::Kind::separator;
    res.universe = static_cast<std::int64_t>(edges_within(g, within).size());
    return finish();
  }
  if (res.h == 1) {
    res.kind = TreeOrSeparator::Kind::tree;
    res.tree_vertices = {local[0].front()};
    res.universe = static_cast<std::int64_t>(edges_within(g, within).size());
    return finish();
  }
  if (!r.at_least_one()) throw ParameterError("radius must be at least 1");

  const LineGraph lg = line_graph(g, within);
  res.universe = static_cast<std::int64_t>(lg.host_edge.size());
  std::vector<std::int32_t> to_local(g.num_edges(), -1);
  for (std::size_t i = 0; i < lg.host_edge.size(); ++i)
    to_local[lg.host_edge[i]] = static_cast<std::int32_t>(i);

  std::vector<VertexSet> line_targets;
  for (const auto& t : local) {
    VertexSet lt;
    for (Vertex v : t)
      for (EdgeId e : g.incident_edges(v))
        if (to_local[e] >= 0) lt.push_back(to_local[e]);
    std::sort(lt.begin(), lt.end());
    lt.erase(std::unique(lt.begin(), lt.end()), lt.end());
    line_targets.push_back(std::move(lt));
  }

  const auto inner =
      vertex_tree_or_separator(lg.graph, all_vertices(lg.graph), line_targets, r, c_sep);

  if (inner.is_tree()) {
    EdgeSet used;
    for (Vertex lv : inner.tree_vertices) used.push_back(lg.host_edge[lv]);
    std::sort(used.begin(), used.end());
    res.kind = TreeOrSeparator::Kind::tree;
    res.tree_vertices = endpoints(g, used);
    res.line_tree_size = static_cast<std::int64_t>(inner.tree_vertices.size());
    // Spanning tree of the subgraph formed by the chosen edges.
    std::vector<std::int32_t> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::int32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (EdgeId e : used) {
      auto ru = find(g.edge(e).u), rv = find(g.edge(e).v);
      if (ru == rv) continue;
      parent[ru] = rv;
      res.tree_edges.push_back(e);
    }
    return finish();
  }

  EdgeSet f;
  for (Vertex lv : inner.vertex_separator) f.push_back(lg.host_edge[lv]);
  std::sort(f.begin(), f.end());
  const Mask cut = make_mask(g.num_edges(), f);
  const auto masks = target_masks(g.num_vertices(), local);
  for (const auto& comp : components(g, within, &cut)) {
    if (!meets_all(comp, masks)) continue;
    // Every edge at such a component lies in F, so it is one vertex in all A_i.
    if (comp.size() != 1) throw ContractViolation("edge_tree_or_separator: fallback component is not a single vertex");
    res.kind = TreeOrSeparator::Kind::tree;
    res.tree_vertices = comp;
    res.line_tree_size = 0;
    return finish();
  }
  res.kind = TreeOrSeparator::Kind::separator;
  res.edge_separator = std::move(f);
  return finish();
}

TreeOrSeparator edge_tree_or_separator(const Graph& g, const std::vector<VertexSet>& targets,
                                       Radius r) {
  return edge_tree_or_separator(g, all_vertices(g), targets, r,
                                separator_guarantee(static_cast<std::int32_t>(targets.size())));
}

EdgeSet minimalize_edge_separator(const Graph& g, const VertexSet& within, const EdgeSet& f,
                                  const std::vector<VertexSet>& targets) {
  if (!edge_set_separates(g, within, f, targets))
    throw PreconditionError("minimalize_edge_separator: input does not separate the targets");
  // One pass suffices: shrinking F only merges components, so an edge that is
  // needed now stays needed.
  EdgeSet kept = f;
  for (EdgeId e : f) {
    EdgeSet trial;
    trial.reserve(kept.size());
    for (EdgeId x : kept)
      if (x != e) trial.push_back(x);
    if (edge_set_separates(g, within, trial, targets)) kept = std::move(trial);
  }
  return kept;
}

}  // namespace lgsep
