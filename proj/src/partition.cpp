#include "lgsep/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <omp.h>

namespace lgsep {

std::int64_t c_sep_for(std::int32_t t) { return separator_guarantee(std::max(t - 2, 1)); }

Params Params::for_graph(const Graph& g, std::int32_t t) { return for_graph(g, t, c_sep_for(t)); }

Params Params::for_graph(const Graph& g, std::int32_t t, std::int64_t c_sep) {
  if (t < 3) throw ParameterError("t must be at least 3");
  if (c_sep < 1) throw ParameterError("c_sep must be at least 1");
  return Params{t, lgsep::max_degree(g), g.num_edges(), c_sep};
}

double Params::p_value() const {
  return std::sqrt(static_cast<double>(c_sep * (t - 3) * max_degree * m)) +
         static_cast<double>(max_degree);
}
std::int64_t Params::p_floor() const { return isqrt(c_sep * (t - 3) * max_degree * m) + max_degree; }
double Params::base_p_value() const {
  return std::sqrt(static_cast<double>((t - 3) * max_degree * m)) + static_cast<double>(max_degree);
}
std::int64_t Params::base_p_floor() const { return isqrt((t - 3) * max_degree * m) + max_degree; }

Radius Params::radius(std::int32_t h) const {
  return Radius::sqrt_of(c_sep * (h - 1) * m, std::max<std::int64_t>(max_degree, 1));
}

double p_value(const Params& params) { return params.p_value(); }

Graph RootedPartition::quotient() const {
  std::vector<Edge> e;
  e.reserve(h_edges.size());
  for (auto [a, b] : h_edges) e.push_back({a, b});
  return Graph(static_cast<std::int32_t>(parts.size()), std::move(e));
}

void EngineStats::merge(const EngineStats& o) {
  steps += o.steps;
  disconnected += o.disconnected;
  empty_attachment += o.empty_attachment;
  singleton += o.singleton;
  tree_branch += o.tree_branch;
  separator_branch += o.separator_branch;
  lemma_calls += o.lemma_calls;
  max_h = std::max(max_h, o.max_h);
  max_depth = std::max(max_depth, o.max_depth);
  max_achieved_factor = std::max(max_achieved_factor, o.max_achieved_factor);
}

namespace {

VertexSet sorted_ids(std::vector<std::int32_t> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

/// The recursion on one component. Parts live in a local arena; every
/// recursive call returns a decomposition of its part graph whose designated
/// bag contains the call's root parts.
class Engine {
 public:
  using Result = std::variant<TreeDecomposition, KtCertificate>;

  Engine(const Graph& g, const Params& params, const EngineOptions& options)
      : g_(g), params_(params), options_(options) {}

  std::vector<EdgeSet> parts;
  std::vector<std::pair<std::int32_t, std::int32_t>> h_edges;
  EngineStats stats;
  std::vector<LemmaRecord> records;

  std::int32_t add_part(EdgeSet members) {
    if (members.empty()) throw ContractViolation("engine: empty part");
    if (!params_.fits_part(static_cast<std::int64_t>(members.size())))
      throw ContractViolation("engine: part of size " + std::to_string(members.size()) +
                              " exceeds floor(p_impl) = " + std::to_string(params_.p_floor()));
    parts.push_back(std::move(members));
    return static_cast<std::int32_t>(parts.size()) - 1;
  }

  Result solve(const VertexSet& c, const std::vector<std::int32_t>& roots,
               const std::vector<VertexSet>& model, std::int64_t parent_measure, std::int32_t depth) {
    ++stats.steps;
    stats.max_depth = std::max(stats.max_depth, depth);
    const auto h = static_cast<std::int32_t>(roots.size());
    stats.max_h = std::max(stats.max_h, h);
    const std::int64_t measure = 2 * static_cast<std::int64_t>(c.size()) + h;
    if (measure >= parent_measure) throw ContractViolation("engine: recursion measure did not decrease");
    if (h > params_.t - 1) throw ContractViolation("engine: more than t-1 root parts");

    // (a) disconnected C: solve each component, glue at the root clique.
    auto comps = components(g_, c);
    if (comps.size() > 1) {
      ++stats.disconnected;
      const VertexSet shared = sorted_ids(roots);
      std::optional<TreeDecomposition> acc;
      for (const auto& comp : comps) {
        auto sub = solve(comp, roots, model, measure, depth + 1);
        if (auto* cert = std::get_if<KtCertificate>(&sub)) return std::move(*cert);
        auto td = std::get<TreeDecomposition>(std::move(sub));
        acc = acc ? glue(std::move(*acc), std::move(td), shared) : std::move(td);
      }
      return std::move(*acc);
    }

    const auto attach_sets = attachments(c, model);

    // (b) some A_i empty: drop E_i, then re-attach it to the other roots.
    for (std::int32_t i = 0; i < h; ++i) {
      if (!attach_sets[i].empty()) continue;
      ++stats.empty_attachment;
      if (h < 2) throw ContractViolation("engine: C has no neighbor in the model");
      std::vector<std::int32_t> rest_roots;
      std::vector<VertexSet> rest_model;
      for (std::int32_t k = 0; k < h; ++k)
        if (k != i) {
          rest_roots.push_back(roots[k]);
          rest_model.push_back(model[k]);
        }
      auto sub = solve(c, rest_roots, rest_model, measure, depth + 1);
      if (auto* cert = std::get_if<KtCertificate>(&sub)) return std::move(*cert);
      for (auto k : rest_roots) connect(roots[i], k);
      return attach_vertex(std::get<TreeDecomposition>(std::move(sub)), roots[i], sorted_ids(rest_roots));
    }

    // (c) (U_1, ..., U_h, C) is a K_{h+1}-model.
    if (h >= params_.t - 1) {
      KtCertificate cert;
      cert.model.branch_sets = model;
      cert.model.branch_sets.push_back(c);
      if (auto v = validate_certificate(g_, cert, params_.t); !v)
        throw ContractViolation("engine: produced an invalid certificate (" + v.clause + ")");
      return cert;
    }

    // (d) single vertex: E(C) is empty, the roots form the whole partition.
    if (c.size() == 1) {
      ++stats.singleton;
      make_complete(roots);
      return singleton(sorted_ids(roots));
    }

    // (e) small tree or small separator.
    ++stats.lemma_calls;
    const Radius r = params_.radius(h);
    auto res = edge_tree_or_separator(g_, c, attach_sets, r, params_.c_sep);
    stats.max_achieved_factor = std::max(stats.max_achieved_factor, res.achieved_factor());
    if (options_.record_lemma_up_to > 0 &&
        static_cast<std::int64_t>(c.size()) <= options_.record_lemma_up_to)
      records.push_back({c, attach_sets, res});

    if (res.is_tree()) {
      ++stats.tree_branch;
      const VertexSet& vt = res.tree_vertices;
      const Mask in_c = make_mask(g_.num_vertices(), c);
      EdgeSet grown;
      for (Vertex v : vt)
        for (std::size_t k = 0; k < g_.neighbors(v).size(); ++k)
          if (in_c[g_.neighbors(v)[k]]) grown.push_back(g_.incident_edges(v)[k]);
      std::sort(grown.begin(), grown.end());
      grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
      const auto id = add_part(std::move(grown));
      auto grown_roots = roots;
      grown_roots.push_back(id);
      if (vt == c) {
        make_complete(grown_roots);
        return singleton(sorted_ids(grown_roots));
      }
      auto grown_model = model;
      grown_model.push_back(vt);
      return solve(set_difference(c, vt), grown_roots, grown_model, measure, depth + 1);
    }

    ++stats.separator_branch;
    const EdgeSet f = minimalize_edge_separator(g_, c, res.edge_separator, attach_sets);
    const auto fid = add_part(f);
    const Mask cut = make_mask(g_.num_edges(), f);
    const auto pieces = components(g_, c, &cut);
    std::vector<Mask> attach_masks;
    for (const auto& a : attach_sets) attach_masks.push_back(make_mask(g_.num_vertices(), a));
    auto meets = [&](const VertexSet& piece, std::int32_t i) {
      return std::any_of(piece.begin(), piece.end(), [&](Vertex v) { return attach_masks[i][v] != 0; });
    };

    auto shared_roots = roots;
    shared_roots.push_back(fid);
    const VertexSet shared = sorted_ids(shared_roots);
    std::optional<TreeDecomposition> acc;
    for (const auto& piece : pieces) {
      std::int32_t missing = -1;
      for (std::int32_t i = 0; i < h && missing < 0; ++i)
        if (!meets(piece, i)) missing = i;
      if (missing < 0) throw ContractViolation("engine: separator left a component meeting every A_i");

      VertexSet absorbed;  // X: pieces touching A_missing
      for (const auto& other : pieces)
        if (meets(other, missing)) absorbed = set_union(absorbed, other);
      auto next_model = model;
      next_model[missing] = set_union(model[missing], absorbed);
      auto next_roots = roots;
      next_roots[missing] = fid;

      auto sub = solve(piece, next_roots, next_model, measure, depth + 1);
      if (auto* cert = std::get_if<KtCertificate>(&sub)) return std::move(*cert);
      for (auto k : next_roots) connect(roots[missing], k);
      auto td = attach_vertex(std::get<TreeDecomposition>(std::move(sub)), roots[missing],
                              sorted_ids(next_roots));
      acc = acc ? glue(std::move(*acc), std::move(td), shared) : std::move(td);
    }
    return std::move(*acc);
  }

  RootedPartition assemble(TreeDecomposition td, VertexSet root_clique) {
    RootedPartition out;
    out.parts = std::move(parts);
    std::sort(h_edges.begin(), h_edges.end());
    h_edges.erase(std::unique(h_edges.begin(), h_edges.end()), h_edges.end());
    out.h_edges = std::move(h_edges);
    out.root_clique = std::move(root_clique);
    out.decomposition = std::move(td);
    out.decomposition.root_clique = out.root_clique;
    return out;
  }

 private:
  void connect(std::int32_t a, std::int32_t b) {
    if (a != b) h_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  void make_complete(const std::vector<std::int32_t>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) connect(ids[i], ids[j]);
  }

  /// A_i = C ∩ N(U_i)
  std::vector<VertexSet> attachments(const VertexSet& c, const std::vector<VertexSet>& model) const {
    std::vector<std::int32_t> owner(g_.num_vertices(), -1);
    for (std::size_t i = 0; i < model.size(); ++i)
      for (Vertex v : model[i]) owner[v] = static_cast<std::int32_t>(i);
    std::vector<VertexSet> out(model.size());
    for (Vertex v : c)
      for (Vertex y : g_.neighbors(v))
        if (owner[y] >= 0 && (out[owner[y]].empty() || out[owner[y]].back() != v))
          out[owner[y]].push_back(v);
    return out;
  }

  const Graph& g_;
  const Params& params_;
  const EngineOptions& options_;
};

struct ComponentRun {
  std::variant<RootedPartition, KtCertificate> outcome;
  EngineStats stats;
  std::vector<LemmaRecord> records;
};

ComponentRun run_component(const Graph& g, const VertexSet& comp, const Params& params,
                           const EngineOptions& options) {
  Engine engine(g, params, options);
  const Vertex x = comp.front();
  engine.add_part(edges_incident(g, {x}));
  auto res = engine.solve(set_difference(comp, {x}), {0}, {{x}},
                          std::numeric_limits<std::int64_t>::max(), 0);
  ComponentRun run;
  if (auto* cert = std::get_if<KtCertificate>(&res))
    run.outcome = std::move(*cert);
  else
    run.outcome = engine.assemble(std::get<TreeDecomposition>(std::move(res)), {0});
  run.stats = engine.stats;
  run.records = std::move(engine.records);
  return run;
}

/// Parts of G incident to each vertex, used by the adjacency validators.
bool h_adjacent(const std::vector<VertexSet>& adj, std::int32_t a, std::int32_t b) {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

std::vector<VertexSet> part_adjacency(std::size_t parts,
                                      const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
  std::vector<VertexSet> adj(parts);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

/// True iff all pairs of edges at v lie in equal or H-adjacent parts.
bool vertex_adjacency_ok(const Graph& g, Vertex v, const std::vector<std::int32_t>& part_of,
                         const std::vector<VertexSet>& adj) {
  auto inc = g.incident_edges(v);
  for (std::size_t i = 0; i < inc.size(); ++i) {
    const auto pa = part_of[inc[i]];
    if (pa < 0) continue;
    for (std::size_t j = i + 1; j < inc.size(); ++j) {
      const auto pb = part_of[inc[j]];
      if (pb < 0 || pa == pb) continue;
      if (!h_adjacent(adj, pa, pb)) return false;
    }
  }
  return true;
}

/// Smallest vertex failing the adjacency check, or -1.
Vertex first_adjacency_failure(const Graph& g, const std::vector<std::int32_t>& part_of,
                               const std::vector<VertexSet>& adj, Execution execution) {
  const Vertex n = g.num_vertices();
  if (execution == Execution::serial) {
    for (Vertex v = 0; v < n; ++v)
      if (!vertex_adjacency_ok(g, v, part_of, adj)) return v;
    return -1;
  }
  Vertex first = n;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first)
  for (Vertex v = 0; v < n; ++v)
    if (v < first && !vertex_adjacency_ok(g, v, part_of, adj)) first = v;
  return first == n ? -1 : first;
}

}  // namespace

Verdict validate_instance(const Graph& g, const RootedInstance& inst, const Params& params) {
  const auto& c = inst.c;
  if (c.empty()) return Verdict::fail("C nonempty");
  if (!is_sorted_unique(c)) return Verdict::fail("C sorted");
  for (Vertex v : c)
    if (v < 0 || v >= g.num_vertices()) return Verdict::fail("C range");
  {
    const auto comps = components(g);
    std::vector<std::int32_t> comp_of(g.num_vertices());
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) comp_of[v] = static_cast<std::int32_t>(i);
    const auto k = comp_of[c.front()];
    for (Vertex v : c)
      if (comp_of[v] != k) return Verdict::fail("C inside one component");
    if (comps[k].size() == c.size()) return Verdict::fail("C proper");
  }
  const auto h = inst.root_parts.size();
  if (h == 0 || inst.model.size() != h) return Verdict::fail("root count");
  const EdgeSet inner = edges_within(g, c);
  std::vector<std::int32_t> owner(g.num_edges(), -1);
  for (std::size_t i = 0; i < h; ++i) {
    const auto& part = inst.root_parts[i];
    if (part.empty()) return Verdict::fail("E_i nonempty");
    if (!is_sorted_unique(part)) return Verdict::fail("E_i sorted");
    if (!params.fits_part(static_cast<std::int64_t>(part.size()))) return Verdict::fail("E_i size");
    for (EdgeId e : part) {
      if (e < 0 || e >= g.num_edges()) return Verdict::fail("E_i range");
      if (owner[e] != -1) return Verdict::fail("E_i disjoint");
      if (std::binary_search(inner.begin(), inner.end(), e)) return Verdict::fail("E_i outside E(C)");
      owner[e] = static_cast<std::int32_t>(i);
    }
  }
  const Mask in_c = make_mask(g.num_vertices(), c);
  for (const auto& u : inst.model)
    for (Vertex v : u)
      if (v < 0 || v >= g.num_vertices() || in_c[v]) return Verdict::fail("model avoids C");
  if (auto v = validate_model(g, MinorModel{inst.model}); !v) return Verdict::fail("model " + v.clause);
  std::vector<std::int32_t> model_of(g.num_vertices(), -1);
  for (std::size_t i = 0; i < h; ++i)
    for (Vertex v : inst.model[i]) model_of[v] = static_cast<std::int32_t>(i);
  for (Vertex y : neighborhood(g, c))
    if (model_of[y] < 0) return Verdict::fail("N(C) inside model");
  for (Vertex v : c)
    for (std::size_t k = 0; k < g.neighbors(v).size(); ++k) {
      const auto i = model_of[g.neighbors(v)[k]];
      if (i >= 0 && owner[g.incident_edges(v)[k]] != i) return Verdict::fail("E(C, U_i) inside E_i");
    }
  return Verdict::pass();
}

StepOutcome induction_step(const Graph& g, const RootedInstance& inst, const Params& params,
                           EngineStats* stats) {
  if (auto v = validate_instance(g, inst, params); !v)
    throw PreconditionError("induction_step: instance violates '" + v.clause + "'");
  EngineOptions options;
  Engine engine(g, params, options);
  std::vector<std::int32_t> roots;
  for (const auto& part : inst.root_parts) roots.push_back(engine.add_part(part));
  auto res = engine.solve(inst.c, roots, inst.model, std::numeric_limits<std::int64_t>::max(), 0);
  if (stats) stats->merge(engine.stats);
  if (auto* cert = std::get_if<KtCertificate>(&res)) return std::move(*cert);
  return engine.assemble(std::get<TreeDecomposition>(std::move(res)), sorted_ids(roots));
}

std::variant<LineGraphPartition, KtCertificate> partition_line_graph(const Graph& g, std::int32_t t,
                                                                     const EngineOptions& options) {
  if (t < 3) throw ParameterError("t must be at least 3");
  const Params params =
      options.c_sep > 0 ? Params::for_graph(g, t, options.c_sep) : Params::for_graph(g, t);

  std::vector<VertexSet> comps;
  for (auto& comp : components(g))
    if (comp.size() >= 2) comps.push_back(std::move(comp));

  std::vector<std::optional<ComponentRun>> runs(comps.size());
  const auto count = static_cast<std::int64_t>(comps.size());
  if (options.execution == Execution::parallel) {
    // Components share only the immutable host graph.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) runs[i] = run_component(g, comps[i], params, options);
  } else {
    for (std::int64_t i = 0; i < count; ++i) runs[i] = run_component(g, comps[i], params, options);
  }

  LineGraphPartition out;
  out.params = params;
  RootedPartition& merged = out.partition;
  for (auto& run : runs) {
    out.stats.merge(run->stats);
    for (auto& rec : run->records) out.lemma_records.push_back(std::move(rec));
    if (auto* cert = std::get_if<KtCertificate>(&run->outcome)) return std::move(*cert);
    auto& part = std::get<RootedPartition>(run->outcome);
    const auto offset = static_cast<std::int32_t>(merged.parts.size());
    for (auto& p : part.parts) merged.parts.push_back(std::move(p));
    for (auto [a, b] : part.h_edges) merged.h_edges.emplace_back(a + offset, b + offset);
    TreeDecomposition td = std::move(part.decomposition);
    for (auto& bag : td.bags)
      for (auto& id : bag) id += offset;
    for (auto& id : td.root_clique) id += offset;
    if (runs.size() == 1) {
      merged.root_clique = td.root_clique;
      merged.decomposition = std::move(td);
    } else {
      merged.decomposition = merged.decomposition.empty()
                                 ? glue(TreeDecomposition{}, std::move(td), {})
                                 : glue(std::move(merged.decomposition), std::move(td), {});
    }
  }
  out.embedding = make_embedding(g, merged);
  return out;
}

std::variant<LineGraphDecomposition, KtCertificate> line_graph_tree_decomposition(
    const Graph& g, std::int32_t t, const EngineOptions& options) {
  auto res = partition_line_graph(g, t, options);
  if (auto* cert = std::get_if<KtCertificate>(&res)) return std::move(*cert);
  LineGraphDecomposition out;
  out.source = std::get<LineGraphPartition>(std::move(res));
  out.decomposition = product_blowup(out.source.partition.decomposition, out.source.partition.parts);
  if (width(out.decomposition) > out.source.params.width_bound())
    throw ContractViolation("line_graph_tree_decomposition: width above (t-1) floor(p_impl) - 1");
  return out;
}

Verdict validate_partition(const Graph& g, const RootedPartition& p, const Params& params,
                           const EdgeSet& universe, Execution execution) {
  const auto nparts = static_cast<std::int32_t>(p.parts.size());
  std::vector<std::int32_t> part_of(g.num_edges(), -1);
  for (std::int32_t i = 0; i < nparts; ++i) {
    const auto& part = p.parts[i];
    if (part.empty()) return Verdict::fail("part nonempty");
    if (!is_sorted_unique(part)) return Verdict::fail("part ids");
    for (EdgeId e : part) {
      if (e < 0 || e >= g.num_edges()) return Verdict::fail("part ids");
      if (part_of[e] != -1) return Verdict::fail("part disjointness");
      part_of[e] = i;
    }
  }
  const Mask in_universe = make_mask(g.num_edges(), universe);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if ((part_of[e] >= 0) != (in_universe[e] != 0)) return Verdict::fail("edge coverage");
  for (const auto& part : p.parts)
    if (!params.fits_part(static_cast<std::int64_t>(part.size()))) return Verdict::fail("part size");
  for (std::size_t k = 0; k < p.h_edges.size(); ++k) {
    auto [a, b] = p.h_edges[k];
    if (a < 0 || b >= nparts || a >= b) return Verdict::fail("h edges");
    if (k > 0 && p.h_edges[k - 1] >= p.h_edges[k]) return Verdict::fail("h edges");
  }
  const auto adj = part_adjacency(p.parts.size(), p.h_edges);
  if (first_adjacency_failure(g, part_of, adj, execution) >= 0)
    return Verdict::fail("graph-partition adjacency");
  for (std::size_t i = 0; i < p.root_clique.size(); ++i) {
    const auto a = p.root_clique[i];
    if (a < 0 || a >= nparts) return Verdict::fail("root clique");
    for (std::size_t j = i + 1; j < p.root_clique.size(); ++j)
      if (!h_adjacent(adj, a, p.root_clique[j])) return Verdict::fail("root clique");
  }
  if (auto v = validate(p.quotient(), p.decomposition); !v) return Verdict::fail("decomposition " + v.clause);
  if (!std::includes(p.decomposition.root_clique.begin(), p.decomposition.root_clique.end(),
                     p.root_clique.begin(), p.root_clique.end()))
    return Verdict::fail("decomposition root clique");
  if (width(p.decomposition) > params.t - 2) return Verdict::fail("width");
  return Verdict::pass();
}

Verdict validate_partition(const Graph& g, const RootedPartition& p, const Params& params,
                           Execution execution) {
  EdgeSet all(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) all[e] = e;
  return validate_partition(g, p, params, all, execution);
}

Embedding make_embedding(const Graph& g, const RootedPartition& p) {
  Embedding emb;
  emb.part_of.assign(g.num_edges(), -1);
  emb.slot.assign(g.num_edges(), 0);
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (std::size_t k = 0; k < p.parts[i].size(); ++k) {
      emb.part_of[p.parts[i][k]] = static_cast<std::int32_t>(i);
      emb.slot[p.parts[i][k]] = static_cast<std::int32_t>(k + 1);
    }
  return emb;
}

Verdict validate_embedding(const Graph& g, const RootedPartition& p, const Embedding& emb,
                           const Params& params, Execution execution) {
  const auto m = static_cast<std::size_t>(g.num_edges());
  if (emb.part_of.size() != m || emb.slot.size() != m) return Verdict::fail("embedding size");
  const auto nparts = static_cast<std::int32_t>(p.parts.size());
  std::vector<std::vector<char>> used(p.parts.size());
  for (std::int32_t i = 0; i < nparts; ++i) used[i].assign(params.p_floor() + 1, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const auto part = emb.part_of[e];
    if (part < 0 || part >= nparts) return Verdict::fail("embedding part");
    if (!std::binary_search(p.parts[part].begin(), p.parts[part].end(), static_cast<EdgeId>(e)))
      return Verdict::fail("embedding part");
    const auto s = emb.slot[e];
    if (s < 1 || s > params.p_floor()) return Verdict::fail("slot range");
    if (used[part][s]) return Verdict::fail("slot injectivity");
    used[part][s] = 1;
  }
  const auto adj = part_adjacency(p.parts.size(), p.h_edges);
  if (first_adjacency_failure(g, emb.part_of, adj, execution) >= 0)
    return Verdict::fail("strong product adjacency");
  return Verdict::pass();
}

Verdict validate_certificate(const Graph& g, const KtCertificate& cert, std::int32_t t) {
  if (static_cast<std::int32_t>(cert.model.branch_sets.size()) != t)
    return Verdict::fail("branch set count");
  return validate_model(g, cert.model);
}

}  // namespace lgsep
