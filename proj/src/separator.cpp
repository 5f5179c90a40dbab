#include "lgsep/separator.hpp"

#include <algorithm>
#include <numeric>

namespace lgsep {

namespace {

const Rational& half() {
  static const Rational h(1, 2);
  return h;
}

std::vector<std::vector<NodeId>> tree_adjacency(const TreeDecomposition& d) {
  std::vector<std::vector<NodeId>> adj(d.num_nodes());
  for (auto [a, b] : d.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

}  // namespace

WeightFunction WeightFunction::uniform(std::int32_t n) {
  if (n < 2) throw ParameterError("uniform weights need at least 2 vertices");
  WeightFunction out;
  out.w.assign(n, Rational(1, n));
  return out;
}

Verdict WeightFunction::validate(std::int32_t n) const {
  if (static_cast<std::int32_t>(w.size()) != n) return Verdict::fail("weight count");
  Rational total = 0;
  for (const auto& x : w) {
    if (x < 0 || x > half()) return Verdict::fail("weight range");
    total += x;
  }
  if (total != 1) return Verdict::fail("weight sum");
  return Verdict::pass();
}

std::string format_rational(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return numerator(q).str() + "/" + denominator(q).str();
}

NodeId orient_and_find_sink(const TreeDecomposition& d, const std::vector<Rational>& node_weights) {
  const NodeId nodes = d.num_nodes();
  if (nodes == 0) throw PreconditionError("orient_and_find_sink: empty decomposition");
  if (static_cast<NodeId>(node_weights.size()) != nodes)
    throw PreconditionError("orient_and_find_sink: weight count mismatch");
  const auto adj = tree_adjacency(d);

  // Root at node 0; sub[v] is the weight of v's subtree.
  std::vector<NodeId> parent(nodes, -1), order;
  order.reserve(nodes);
  std::vector<char> seen(nodes, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (NodeId y : adj[order[i]])
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        order.push_back(y);
      }
  if (static_cast<NodeId>(order.size()) != nodes)
    throw PreconditionError("orient_and_find_sink: decomposition tree is disconnected");
  std::vector<Rational> sub(node_weights.begin(), node_weights.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
  const Rational total = sub[0];

  for (NodeId v = 0; v < nodes; ++v) {
    bool sink = true;
    for (NodeId y : adj[v]) {
      const Rational far = (y == parent[v]) ? total - sub[v] : sub[y];
      if (far > half()) {
        sink = false;
        break;
      }
    }
    if (sink) return v;
  }
  throw ContractViolation("orient_and_find_sink: no sink node");
}

std::vector<NodeId> anchor_map(const Graph& g, const TreeDecomposition& d) {
  std::vector<std::vector<NodeId>> nodes_of_edge(g.num_edges());
  for (NodeId u = 0; u < d.num_nodes(); ++u)
    for (auto e : d.bags[u]) nodes_of_edge[e].push_back(u);
  std::vector<NodeId> anchor(g.num_vertices(), 0);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    auto inc = g.incident_edges(x);
    if (inc.empty()) continue;
    NodeId found = -1;
    for (NodeId u : nodes_of_edge[inc[0]]) {
      const auto& bag = d.bags[u];
      if (std::all_of(inc.begin(), inc.end(),
                      [&](EdgeId e) { return std::binary_search(bag.begin(), bag.end(), e); })) {
        found = u;
        break;
      }
    }
    if (found < 0) throw ContractViolation("anchor_map: edges at a vertex share no bag");
    anchor[x] = found;
  }
  return anchor;
}

std::vector<SeparatorComponent> weighted_components(const Graph& g, const EdgeSet& f,
                                                    const WeightFunction& w) {
  const Mask removed = make_mask(g.num_edges(), f);
  std::vector<SeparatorComponent> out;
  for (auto& comp : components(g, all_vertices(g), &removed)) {
    Rational total = 0;
    for (Vertex v : comp) total += w.w[v];
    out.push_back({std::move(comp), total});
  }
  return out;
}

Verdict validate_separator(const Graph& g, const EdgeSet& f, const WeightFunction& w) {
  if (auto v = w.validate(g.num_vertices()); !v) return v;
  if (!is_sorted_unique(f)) return Verdict::fail("separator ids");
  for (EdgeId e : f)
    if (e < 0 || e >= g.num_edges()) return Verdict::fail("separator ids");
  for (const auto& c : weighted_components(g, f, w))
    if (c.weight > half()) return Verdict::fail("component weight");
  return Verdict::pass();
}

EdgeSeparatorResult separator_from_decomposition(const Graph& g, const WeightFunction& w,
                                                 const TreeDecomposition& d) {
  if (auto v = w.validate(g.num_vertices()); !v) throw ParameterError("invalid weights: " + v.clause);
  EdgeSeparatorResult out;
  out.decomposition_width = width(d);
  if (g.num_edges() == 0) {
    // Every component is a single vertex of weight <= 1/2.
    out.anchor.assign(g.num_vertices(), -1);
    out.components = weighted_components(g, {}, w);
    return out;
  }
  if (auto v = validate(line_graph(g).graph, d); !v)
    throw PreconditionError("separator_from_decomposition: invalid L(G) decomposition (" + v.clause + ")");

  out.anchor = anchor_map(g, d);
  std::vector<Rational> node_weights(d.num_nodes(), Rational(0));
  for (Vertex x = 0; x < g.num_vertices(); ++x) node_weights[out.anchor[x]] += w.w[x];
  const NodeId v = orient_and_find_sink(d, node_weights);
  out.sink_node = v;
  out.f = d.bags[v];
  out.components = weighted_components(g, out.f, w);
  for (const auto& c : out.components)
    if (c.weight > half()) throw ContractViolation("separator: component weight above 1/2");

  // Components of T - v, then: anchors of any multi-vertex component of G - F
  // avoid v and lie in one of them.
  const auto adj = tree_adjacency(d);
  std::vector<std::int32_t> side(d.num_nodes(), -1);
  std::int32_t sides = 0;
  for (NodeId s : adj[v]) {
    std::vector<NodeId> stack{s};
    side[s] = sides;
    while (!stack.empty()) {
      NodeId a = stack.back();
      stack.pop_back();
      for (NodeId b : adj[a])
        if (b != v && side[b] < 0) {
          side[b] = sides;
          stack.push_back(b);
        }
    }
    ++sides;
  }
  for (const auto& c : out.components) {
    if (c.vertices.size() < 2) continue;
    const auto label = side[out.anchor[c.vertices.front()]];
    for (Vertex x : c.vertices)
      if (out.anchor[x] == v || side[out.anchor[x]] != label)
        throw ContractViolation("separator: component anchors split across T - v");
  }
  return out;
}

std::variant<EdgeSeparatorResult, KtCertificate> balanced_edge_separator(const Graph& g,
                                                                         const WeightFunction& w,
                                                                         std::int32_t t,
                                                                         const EngineOptions& options) {
  if (auto v = w.validate(g.num_vertices()); !v) throw ParameterError("invalid weights: " + v.clause);
  auto res = line_graph_tree_decomposition(g, t, options);
  if (auto* cert = std::get_if<KtCertificate>(&res)) return std::move(*cert);
  const auto& lgd = std::get<LineGraphDecomposition>(res);
  auto out = separator_from_decomposition(g, w, lgd.decomposition);
  out.params = lgd.source.params;
  out.bound_used = out.params.separator_bound();
  out.base_bound = out.params.base_separator_bound();
  if (static_cast<std::int64_t>(out.f.size()) > out.bound_used)
    throw ContractViolation("separator: |F| above (t-1) floor(p_impl)");
  return out;
}

std::optional<std::vector<std::size_t>> select_components_in_window(const std::vector<std::int64_t>& sizes,
                                                                    std::int64_t low, std::int64_t high,
                                                                    bool* greedy) {
  if (greedy) *greedy = false;
  if (low > high) return std::nullopt;
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sizes[a] > sizes[b]; });
  {
    std::vector<std::size_t> picked;
    std::int64_t total = 0;
    for (auto i : order)
      if (total + sizes[i] <= high) {
        total += sizes[i];
        picked.push_back(i);
        if (total >= low) break;
      }
    if (total >= low && total <= high) {
      if (greedy) *greedy = true;
      std::sort(picked.begin(), picked.end());
      return picked;
    }
  }
  // via[s]: index of the item that first reached sum s (items in index order).
  std::vector<std::int64_t> via(high + 1, -1);
  std::vector<char> reach(high + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::int64_t s = high; s >= sizes[i]; --s)
      if (!reach[s] && reach[s - sizes[i]]) {
        reach[s] = 1;
        via[s] = static_cast<std::int64_t>(i);
      }
  for (std::int64_t s = std::max<std::int64_t>(low, 0); s <= high; ++s) {
    if (!reach[s]) continue;
    std::vector<std::size_t> picked;
    for (std::int64_t cur = s; cur > 0; cur -= sizes[via[cur]]) picked.push_back(via[cur]);
    std::sort(picked.begin(), picked.end());
    return picked;
  }
  return std::nullopt;
}

std::int64_t cut_size(const Graph& g, const VertexSet& s) {
  const Mask in = make_mask(g.num_vertices(), s);
  std::int64_t cut = 0;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) ++cut;
  return cut;
}

std::variant<IsoperimetricWitness, KtCertificate> isoperimetric_witness(const Graph& g, std::int32_t t,
                                                                        const EngineOptions& options) {
  const std::int64_t n = g.num_vertices();
  if (n < 2) throw ParameterError("isoperimetric_witness needs at least 2 vertices");
  auto res = balanced_edge_separator(g, WeightFunction::uniform(g.num_vertices()), t, options);
  if (auto* cert = std::get_if<KtCertificate>(&res)) return std::move(*cert);

  IsoperimetricWitness out;
  out.separator = std::get<EdgeSeparatorResult>(std::move(res));
  out.window_low = (n + 2) / 3;
  out.window_high = n / 2;
  std::vector<std::int64_t> sizes;
  for (const auto& c : out.separator.components) sizes.push_back(static_cast<std::int64_t>(c.vertices.size()));
  auto picked = select_components_in_window(sizes, out.window_low, out.window_high, &out.greedy);
  if (!picked) throw ContractViolation("isoperimetric: no union of components has size in [ceil(n/3), floor(n/2)]");
  for (auto i : *picked) out.s = set_union(out.s, out.separator.components[i].vertices);
  out.cut_size = cut_size(g, out.s);
  out.ratio = Rational(out.cut_size, static_cast<std::int64_t>(out.s.size()));
  // cut(S) <= |F| and |S| >= n/3
  if (out.ratio > Rational(3 * static_cast<std::int64_t>(out.separator.f.size()), n))
    throw ContractViolation("isoperimetric: ratio above |F| / (n/3)");
  return out;
}

}  // namespace lgsep
