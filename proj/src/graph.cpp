#include "lgsep/graph.hpp"

#include <algorithm>
#include <numeric>

namespace lgsep {

Graph::Graph(std::int32_t n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ParameterError("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw ParameterError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                           std::to_string(e.v));
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw ParameterError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  edges_ = std::move(edges);

  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.resize(offsets_[n_]);
  inc_.resize(offsets_[n_]);
  // Lexicographic edge order fills every list in ascending neighbor order.
  std::vector<std::int32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const auto [u, v] = edges_[id];
    adj_[cursor[u]] = v;
    inc_[cursor[u]++] = id;
    adj_[cursor[v]] = u;
    inc_[cursor[v]++] = id;
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[it - nb.begin()];
}

Mask make_mask(std::size_t size, std::span<const std::int32_t> members) {
  Mask m(size, 0);
  for (auto x : members) m[x] = 1;
  return m;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_sorted_unique(std::span<const std::int32_t> ids) {
  return std::adjacent_find(ids.begin(), ids.end(), std::greater_equal<>()) == ids.end();
}

std::int32_t max_degree(const Graph& g) {
  std::int32_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within,
                                  const Mask* removed_edges) {
  const Mask in = make_mask(g.num_vertices(), within);
  Mask seen(g.num_vertices(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s : within) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      auto nb = g.neighbors(x);
      auto inc = g.incident_edges(x);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        Vertex y = nb[k];
        if (!in[y] || seen[y]) continue;
        if (removed_edges && (*removed_edges)[inc[k]]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, all_vertices(g)); }

bool is_connected(const Graph& g, const VertexSet& set) {
  return set.empty() || components(g, set).size() == 1;
}

LineGraph line_graph(const Graph& g) { return line_graph(g, all_vertices(g)); }

LineGraph line_graph(const Graph& g, const VertexSet& within) {
  LineGraph out;
  out.host_edge = edges_within(g, within);
  std::vector<std::int32_t> local(g.num_edges(), -1);
  for (std::size_t i = 0; i < out.host_edge.size(); ++i)
    local[out.host_edge[i]] = static_cast<std::int32_t>(i);
  std::vector<Edge> ledges;
  std::vector<std::int32_t> at;
  for (Vertex v : within) {
    at.clear();
    for (EdgeId e : g.incident_edges(v))
      if (local[e] >= 0) at.push_back(local[e]);
    for (std::size_t a = 0; a < at.size(); ++a)
      for (std::size_t b = a + 1; b < at.size(); ++b) ledges.push_back({at[a], at[b]});
  }
  out.graph = Graph(static_cast<std::int32_t>(out.host_edge.size()), std::move(ledges));
  return out;
}

EdgeSet edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  const Mask mx = make_mask(g.num_vertices(), x);
  const Mask my = make_mask(g.num_vertices(), y);
  EdgeSet out;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const auto [u, v] = g.edge(id);
    if ((mx[u] && my[v]) || (mx[v] && my[u])) out.push_back(id);
  }
  return out;
}

EdgeSet edges_within(const Graph& g, const VertexSet& x) {
  const Mask mx = make_mask(g.num_vertices(), x);
  EdgeSet out;
  for (Vertex u : x)
    for (std::size_t k = 0; k < g.neighbors(u).size(); ++k) {
      Vertex v = g.neighbors(u)[k];
      if (v > u && mx[v]) out.push_back(g.incident_edges(u)[k]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet edges_incident(const Graph& g, const VertexSet& x) {
  EdgeSet out;
  for (Vertex u : x)
    for (EdgeId e : g.incident_edges(u)) out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  const Mask mx = make_mask(g.num_vertices(), x);
  VertexSet out;
  for (Vertex u : x)
    for (Vertex v : g.neighbors(u))
      if (!mx[v]) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet endpoints(const Graph& g, const EdgeSet& f) {
  VertexSet out;
  for (EdgeId e : f) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> bfs_layers(const Graph& g, const VertexSet& sources,
                                  const VertexSet& within) {
  const Mask in = make_mask(g.num_vertices(), within);
  Mask seen(g.num_vertices(), 0);
  VertexSet layer;
  for (Vertex s : sources) {
    if (!in[s]) throw PreconditionError("bfs_layers: source outside the working set");
    if (!seen[s]) {
      seen[s] = 1;
      layer.push_back(s);
    }
  }
  std::sort(layer.begin(), layer.end());
  std::vector<VertexSet> out;
  while (!layer.empty()) {
    VertexSet next;
    for (Vertex x : layer)
      for (Vertex y : g.neighbors(x))
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
    std::sort(next.begin(), next.end());
    out.push_back(std::move(layer));
    layer = std::move(next);
  }
  return out;
}

Verdict validate_model(const Graph& g, const MinorModel& model) {
  const auto& sets = model.branch_sets;
  std::vector<std::int32_t> owner(g.num_vertices(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i])
      if (v < 0 || v >= g.num_vertices()) return Verdict::fail("range");
    if (sets[i].empty()) return Verdict::fail("nonempty");
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Vertex v : sets[i]) {
      if (owner[v] != -1) return Verdict::fail("disjointness");
      owner[v] = static_cast<std::int32_t>(i);
    }
  for (const auto& s : sets) {
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (!is_connected(g, sorted)) return Verdict::fail("connectivity");
  }
  const std::size_t k = sets.size();
  std::vector<char> touch(k * k, 0);
  for (const auto& e : g.edges()) {
    auto a = owner[e.u], b = owner[e.v];
    if (a >= 0 && b >= 0 && a != b) touch[a * k + b] = touch[b * k + a] = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!touch[i * k + j]) return Verdict::fail("adjacency");
  return Verdict::pass();
}

}  // namespace lgsep
