#include "lgsep/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <omp.h>

namespace lgsep {

namespace {

using Bits = std::uint32_t;

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(g.num_vertices(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Bits{1} << e.v;
    adj[e.v] |= Bits{1} << e.u;
  }
  return adj;
}

Bits neighbors_of(const std::vector<Bits>& adj, Bits set) {
  Bits out = 0;
  for (Bits s = set; s; s &= s - 1) out |= adj[std::countr_zero(s)];
  return out;
}

/// |Q(S, v)|: vertices outside S + v reachable from v through S.
std::int32_t q_size(const std::vector<Bits>& adj, Bits s, std::int32_t v) {
  Bits comp = Bits{1} << v;
  Bits frontier = comp;
  while (frontier) {
    const Bits grow = neighbors_of(adj, frontier) & s & ~comp;
    comp |= grow;
    frontier = grow;
  }
  return std::popcount(neighbors_of(adj, comp) & ~s & ~(Bits{1} << v));
}

std::int8_t tw_entry(const std::vector<Bits>& adj, const std::vector<std::int8_t>& tw, Bits s) {
  std::int8_t best = 127;
  for (Bits rest = s; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const Bits prev = s & ~(Bits{1} << v);
    const auto value = static_cast<std::int8_t>(std::max<int>(tw[prev], q_size(adj, prev, v)));
    best = std::min(best, value);
  }
  return best;
}

/// Guard against overflowing the interval shifts of 32-bit masks.
void require(bool ok, const std::string& what) {
  if (!ok) throw LimitExceeded(what);
}

struct ScaledWeights {
  std::vector<std::int64_t> w;
  std::int64_t total = 0;
};

ScaledWeights scale_weights(const WeightFunction& wf) {
  using boost::multiprecision::cpp_int;
  cpp_int den = 1;
  for (const auto& x : wf.w) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  ScaledWeights out;
  cpp_int total = 0;
  for (const auto& x : wf.w) {
    cpp_int v = boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x));
    total += v;
    out.w.push_back(0);
    if (v > cpp_int(std::numeric_limits<std::int64_t>::max() / 4))
      throw LimitExceeded("weights do not fit a common 64-bit denominator");
    out.w.back() = static_cast<std::int64_t>(v);
  }
  if (total > cpp_int(std::numeric_limits<std::int64_t>::max() / 4))
    throw LimitExceeded("weights do not fit a common 64-bit denominator");
  out.total = static_cast<std::int64_t>(total);
  return out;
}

/// Every component of G - removed weighs at most total/2.
bool balanced_after(const Graph& g, const ScaledWeights& sw, Bits removed) {
  const auto n = g.num_vertices();
  std::vector<std::int32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!(removed >> e & 1)) {
      auto a = find(g.edge(e).u), b = find(g.edge(e).v);
      if (a != b) parent[a] = b;
    }
  std::vector<std::int64_t> weight(n, 0);
  for (std::int32_t v = 0; v < n; ++v) weight[find(v)] += sw.w[v];
  for (std::int32_t v = 0; v < n; ++v)
    if (2 * weight[v] > sw.total) return false;
  return true;
}

/// Same size: A before B iff the smallest element of A xor B lies in A.
bool lex_less(Bits a, Bits b) {
  if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
  const Bits diff = a ^ b;
  return diff && (a & (diff & (~diff + 1)));
}

EdgeSet bits_to_set(Bits b) {
  EdgeSet out;
  for (; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

}  // namespace

std::int32_t exact_treewidth(const Graph& g, const OracleLimits& limits, Execution execution) {
  const auto n = g.num_vertices();
  require(n <= limits.max_vertices_tw && n <= 24, "exact_treewidth: too many vertices");
  if (n == 0) return -1;
  const auto adj = adjacency_bits(g);
  const Bits full = (Bits{1} << n) - 1;
  std::vector<std::int8_t> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  if (execution == Execution::serial) {
    for (Bits s = 1; s <= full; ++s) tw[s] = tw_entry(adj, tw, s);
  } else {
    // Layer k depends only on layer k-1.
    std::vector<std::vector<Bits>> layers(n + 1);
    for (Bits s = 1; s <= full; ++s) layers[std::popcount(s)].push_back(s);
    for (std::int32_t k = 1; k <= n; ++k) {
      const auto& layer = layers[k];
      const auto size = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < size; ++i) tw[layer[i]] = tw_entry(adj, tw, layer[i]);
    }
  }
  return std::max<std::int32_t>(tw[full], 0);
}

std::int32_t treewidth_by_permutations(const Graph& g) {
  const auto n = g.num_vertices();
  require(n <= 9, "treewidth_by_permutations: too many vertices");
  if (n == 0) return -1;
  const auto adj0 = adjacency_bits(g);
  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::int32_t best = n - 1;
  do {
    auto adj = adj0;
    Bits alive = (Bits{1} << n) - 1;
    std::int32_t w = 0;
    for (auto v : order) {
      alive &= ~(Bits{1} << v);
      const Bits nb = adj[v] & alive;
      w = std::max(w, std::popcount(nb));
      if (w >= best) break;
      for (Bits s = nb; s; s &= s - 1) adj[std::countr_zero(s)] |= nb & ~(Bits{1} << std::countr_zero(s));
    }
    best = std::min(best, w);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

EdgeSet min_balanced_edge_separator(const Graph& g, const WeightFunction& w, const OracleLimits& limits,
                                    Execution execution) {
  const auto m = g.num_edges();
  require(m <= limits.max_edges_sep && m <= 30, "min_balanced_edge_separator: too many edges");
  if (auto v = w.validate(g.num_vertices()); !v) throw ParameterError("invalid weights: " + v.clause);
  const auto sw = scale_weights(w);

  if (execution == Execution::serial) {
    for (std::int32_t k = 0; k <= m; ++k) {
      std::vector<std::int32_t> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        Bits mask = 0;
        for (auto i : idx) mask |= Bits{1} << i;
        if (balanced_after(g, sw, mask)) return bits_to_set(mask);
        std::int32_t pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::int32_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    throw ContractViolation("min_balanced_edge_separator: no separator found");
  }

  const std::uint64_t count = std::uint64_t{1} << m;
  Bits best = ~Bits{0} >> (32 - std::max(m, 1));
  bool found = false;
#pragma omp parallel
  {
    Bits local = 0;
    bool local_found = false;
#pragma omp for schedule(dynamic, 1024)
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto mask = static_cast<Bits>(i);
      if (local_found && !lex_less(mask, local)) continue;
      if (balanced_after(g, sw, mask)) {
        local = mask;
        local_found = true;
      }
    }
#pragma omp critical
    if (local_found && (!found || lex_less(local, best))) {
      best = local;
      found = true;
    }
  }
  if (!found) throw ContractViolation("min_balanced_edge_separator: no separator found");
  return bits_to_set(best);
}

IsoperimetricValue exact_isoperimetric(const Graph& g, const OracleLimits& limits, Execution execution) {
  const auto n = g.num_vertices();
  require(n <= limits.max_vertices_iso && n <= 24, "exact_isoperimetric: too many vertices");
  if (n < 2) throw ParameterError("exact_isoperimetric: needs at least 2 vertices");
  const auto adj = adjacency_bits(g);
  const Bits full = (Bits{1} << n) - 1;
  auto cut = [&](Bits s) {
    std::int64_t c = 0;
    for (Bits r = s; r; r &= r - 1) c += std::popcount(adj[std::countr_zero(r)] & ~s);
    return c;
  };
  // candidate (c1, s1) beats (c2, s2) iff c1/|s1| < c2/|s2|, then smaller mask
  auto better = [&](std::int64_t c1, Bits s1, std::int64_t c2, Bits s2) {
    const auto lhs = c1 * std::popcount(s2), rhs = c2 * std::popcount(s1);
    return lhs != rhs ? lhs < rhs : s1 < s2;
  };
  std::int64_t best_cut = -1;
  Bits best = 0;
  if (execution == Execution::serial) {
    for (Bits s = 1; s <= full; ++s) {
      if (2 * std::popcount(s) > n) continue;
      const auto c = cut(s);
      if (best_cut < 0 || better(c, s, best_cut, best)) best_cut = c, best = s;
    }
  } else {
#pragma omp parallel
    {
      std::int64_t local_cut = -1;
      Bits local = 0;
#pragma omp for schedule(static)
      for (std::int64_t i = 1; i <= static_cast<std::int64_t>(full); ++i) {
        const auto s = static_cast<Bits>(i);
        if (2 * std::popcount(s) > n) continue;
        const auto c = cut(s);
        if (local_cut < 0 || better(c, s, local_cut, local)) local_cut = c, local = s;
      }
#pragma omp critical
      if (local_cut >= 0 && (best_cut < 0 || better(local_cut, local, best_cut, best)))
        best_cut = local_cut, best = local;
    }
  }
  return {Rational(best_cut, std::popcount(best)), bits_to_set(best)};
}

namespace {

/// Backtracking over vertex -> {unused, block 0..k-1, new block} with
/// canonical block labels.
class MinorSearcher {
 public:
  MinorSearcher(std::vector<Bits> adj, std::int32_t t) : adj_(std::move(adj)), t_(t) {
    n_ = static_cast<std::int32_t>(adj_.size());
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return std::popcount(adj_[a]) > std::popcount(adj_[b]); });
    blocks_.assign(t_, 0);
  }

  bool run() { return search(0, 0, full()); }
  std::vector<Bits> blocks() const { return blocks_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  Bits full() const { return n_ == 0 ? 0 : (~Bits{0} >> (32 - n_)); }

  bool connected(Bits set) const {
    if (!set) return true;
    Bits comp = set & (~set + 1);
    Bits frontier = comp;
    while (frontier) {
      const Bits grow = neighbors_of(adj_, frontier) & set & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp == set;
  }

  /// Block plus the unassigned vertices reachable from it through unassigned ones.
  Bits closure(Bits block, Bits free) const {
    Bits comp = block;
    Bits frontier = block;
    while (frontier) {
      const Bits grow = neighbors_of(adj_, frontier) & free & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp;
  }

  bool complete(std::int32_t k) const {
    if (k < t_) return false;
    for (std::int32_t i = 0; i < t_; ++i) {
      if (!connected(blocks_[i])) return false;
      const Bits nb = neighbors_of(adj_, blocks_[i]);
      for (std::int32_t j = i + 1; j < t_; ++j)
        if (!(nb & blocks_[j])) return false;
    }
    return true;
  }

  bool feasible(std::int32_t k, Bits free) const {
    if (k + std::popcount(free) < t_) return false;
    std::vector<Bits> ext(k);
    for (std::int32_t i = 0; i < k; ++i) {
      // A block must be able to become connected using free vertices.
      const Bits reach = closure(blocks_[i] & (~blocks_[i] + 1), free | blocks_[i]);
      if ((reach & blocks_[i]) != blocks_[i]) return false;
      ext[i] = closure(blocks_[i], free);
    }
    for (std::int32_t i = 0; i < k; ++i) {
      const Bits nb = neighbors_of(adj_, ext[i]) | ext[i];
      for (std::int32_t j = i + 1; j < k; ++j)
        if (!(nb & ext[j])) return false;
    }
    return true;
  }

  bool search(std::size_t pos, std::int32_t k, Bits free) {
    ++nodes_;
    if (complete(k)) return true;
    if (pos == order_.size() || !feasible(k, free)) return false;
    const auto v = order_[pos];
    const Bits bit = Bits{1} << v;
    const Bits rest = free & ~bit;
    if (k < t_) {
      blocks_[k] |= bit;
      if (search(pos + 1, k + 1, rest)) return true;
      blocks_[k] &= ~bit;
    }
    for (std::int32_t i = 0; i < k; ++i) {
      blocks_[i] |= bit;
      if (search(pos + 1, k, rest)) return true;
      blocks_[i] &= ~bit;
    }
    return search(pos + 1, k, rest);
  }

  std::vector<Bits> adj_;
  std::int32_t t_;
  std::int32_t n_ = 0;
  std::vector<std::int32_t> order_;
  std::vector<Bits> blocks_;
  std::int64_t nodes_ = 0;
};

std::optional<MinorModel> small_t_model(const Graph& g, std::int32_t t) {
  if (t == 1) {
    if (g.num_vertices() == 0) return std::nullopt;
    return MinorModel{{{0}}};
  }
  if (t == 2) {
    if (g.num_edges() == 0) return std::nullopt;
    return MinorModel{{{g.edge(0).u}, {g.edge(0).v}}};
  }
  // t == 3: a non-forest edge closes a cycle u ... v.
  const auto n = g.num_vertices();
  std::vector<std::int32_t> parent(n, -2), depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<Vertex> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex x = queue[i];
      for (Vertex y : g.neighbors(x)) {
        if (parent[y] == -2) {
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (y != parent[x] && parent[y] != x) {
          // Tree paths from x and y to their common ancestor.
          VertexSet px, py;
          Vertex a = x, b = y;
          while (a != b) {
            if (depth[a] >= depth[b]) px.push_back(a), a = parent[a];
            else py.push_back(b), b = parent[b];
          }
          VertexSet rest = py;
          rest.push_back(a);
          VertexSet first{px.front()};
          px.erase(px.begin());
          rest.insert(rest.end(), px.begin(), px.end());
          // first = {x}, rest = the cycle minus x split at y
          VertexSet second{y};
          VertexSet third;
          for (Vertex z : rest)
            if (z != y) third.push_back(z);
          std::sort(third.begin(), third.end());
          return MinorModel{{first, second, third}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MinorSearch has_kt_minor(const Graph& g, std::int32_t t, const OracleLimits& limits) {
  require(g.num_vertices() <= limits.max_vertices_minor && g.num_vertices() <= 30,
          "has_kt_minor: too many vertices");
  if (t < 1) throw ParameterError("has_kt_minor: t must be positive");
  MinorSearch out;
  if (t <= 3) {
    out.model = small_t_model(g, t);
  } else {
    // Reduce: drop vertices of degree <= 1, suppress degree-2 vertices.
    const auto n = g.num_vertices();
    std::vector<Bits> adj = adjacency_bits(g);
    Bits alive = n == 0 ? 0 : (~Bits{0} >> (32 - n));
    struct Suppressed {
      std::int32_t v, a, b;
    };
    std::vector<Suppressed> suppressed;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::int32_t v = 0; v < n; ++v) {
        if (!(alive >> v & 1)) continue;
        const Bits nb = adj[v] & alive;
        const int d = std::popcount(nb);
        if (d <= 2) {
          alive &= ~(Bits{1} << v);
          changed = true;
          if (d == 2) {
            const int a = std::countr_zero(nb), b = 31 - std::countl_zero(nb);
            adj[a] |= Bits{1} << b;
            adj[b] |= Bits{1} << a;
            suppressed.push_back({v, a, b});
          }
        }
      }
    }
    std::vector<std::int32_t> local_of(n, -1), host;
    for (std::int32_t v = 0; v < n; ++v)
      if (alive >> v & 1) {
        local_of[v] = static_cast<std::int32_t>(host.size());
        host.push_back(v);
      }
    std::vector<Bits> local_adj(host.size(), 0);
    for (std::size_t i = 0; i < host.size(); ++i)
      for (Bits s = adj[host[i]] & alive; s; s &= s - 1)
        local_adj[i] |= Bits{1} << local_of[std::countr_zero(s)];
    MinorSearcher searcher(local_adj, t);
    const bool found = searcher.run();
    out.nodes = searcher.nodes();
    if (found) {
      std::vector<std::int32_t> block_of(n, -1);
      const auto blocks = searcher.blocks();
      for (std::int32_t i = 0; i < t; ++i)
        for (Bits s = blocks[i]; s; s &= s - 1) block_of[host[std::countr_zero(s)]] = i;
      // Undo suppressions last-first: v joins a's block, else b's.
      for (auto it = suppressed.rbegin(); it != suppressed.rend(); ++it) {
        if (block_of[it->a] >= 0) block_of[it->v] = block_of[it->a];
        else if (block_of[it->b] >= 0) block_of[it->v] = block_of[it->b];
      }
      MinorModel model;
      model.branch_sets.resize(t);
      for (std::int32_t v = 0; v < n; ++v)
        if (block_of[v] >= 0) model.branch_sets[block_of[v]].push_back(v);
      out.model = std::move(model);
    }
  }
  if (out.model) {
    if (auto v = validate_model(g, *out.model); !v)
      throw ContractViolation("has_kt_minor: witness fails validation (" + v.clause + ")");
    out.found = true;
  }
  return out;
}

EdgeContractReport edge_lemma_contract_check(const Graph& g, const VertexSet& within,
                                             const std::vector<VertexSet>& targets, Radius r,
                                             const TreeOrSeparator& result) {
  require(within.size() <= 18, "edge_lemma_contract_check: working set too large");
  const auto k = static_cast<std::int32_t>(within.size());
  std::vector<std::int32_t> local(g.num_vertices(), -1);
  for (std::int32_t i = 0; i < k; ++i) local[within[i]] = i;
  std::vector<Bits> adj(k, 0);
  std::vector<std::pair<std::int32_t, std::int32_t>> local_edges;
  std::vector<EdgeId> host_edge;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto a = local[g.edge(e).u], b = local[g.edge(e).v];
    if (a < 0 || b < 0) continue;
    adj[a] |= Bits{1} << b;
    adj[b] |= Bits{1} << a;
    local_edges.emplace_back(a, b);
    host_edge.push_back(e);
  }
  std::vector<Bits> target_bits;
  for (const auto& tset : targets) {
    Bits b = 0;
    for (Vertex v : tset)
      if (v >= 0 && v < g.num_vertices() && local[v] >= 0) b |= Bits{1} << local[v];
    target_bits.push_back(b);
  }
  auto connected = [&](Bits set, const std::vector<Bits>& a) {
    if (!set) return false;
    Bits comp = set & (~set + 1), frontier = comp;
    while (frontier) {
      const Bits grow = neighbors_of(a, frontier) & set & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp == set;
  };
  auto hits_all = [&](Bits set) {
    return std::all_of(target_bits.begin(), target_bits.end(), [&](Bits t) { return (t & set) != 0; });
  };

  EdgeContractReport rep;
  const std::int64_t max_vertices = r.floor() + 1;
  const Bits full = k == 0 ? 0 : (~Bits{0} >> (32 - k));
  for (Bits s = 1; s && s <= full && !rep.tree_exists; ++s)
    if (std::popcount(s) <= max_vertices && hits_all(s) && connected(s, adj)) rep.tree_exists = true;

  // Independent re-check of the stated contract.
  const auto h = static_cast<std::int64_t>(targets.size());
  auto fail = [&](std::string why) {
    rep.clause = std::move(why);
    return rep;
  };
  if (result.is_tree()) {
    Bits tv = 0;
    for (Vertex v : result.tree_vertices) {
      if (v < 0 || v >= g.num_vertices() || local[v] < 0) return fail("tree outside working set");
      tv |= Bits{1} << local[v];
    }
    std::vector<Bits> tree_adj(k, 0);
    for (EdgeId e : result.tree_edges) {
      const auto a = local[g.edge(e).u], b = local[g.edge(e).v];
      if (a < 0 || b < 0 || !(tv >> a & 1) || !(tv >> b & 1)) return fail("tree edge outside tree");
      tree_adj[a] |= Bits{1} << b;
      tree_adj[b] |= Bits{1} << a;
    }
    if (result.tree_edges.size() + 1 != result.tree_vertices.size() || !connected(tv, tree_adj))
      return fail("tree shape");
    if (!r.admits(static_cast<std::int64_t>(result.tree_edges.size()))) return fail("tree size bound");
    if (!hits_all(tv)) return fail("tree misses a target");
    rep.contract_ok = true;
    if (!rep.tree_exists) return fail("tree returned but none exists");
  } else {
    std::vector<Bits> cut_adj(k, 0);
    const Mask removed = make_mask(g.num_edges(), result.edge_separator);
    for (EdgeId e : result.edge_separator) {
      if (e < 0 || e >= g.num_edges() || local[g.edge(e).u] < 0 || local[g.edge(e).v] < 0)
        return fail("separator outside working set");
    }
    for (std::size_t i = 0; i < host_edge.size(); ++i)
      if (!removed[host_edge[i]]) {
        auto [a, b] = local_edges[i];
        cut_adj[a] |= Bits{1} << b;
        cut_adj[b] |= Bits{1} << a;
      }
    const auto m = static_cast<std::int64_t>(host_edge.size());
    if (!r.within_quotient(static_cast<std::int64_t>(result.edge_separator.size()), result.c_sep * (h - 1) * m))
      return fail("separator size bound");
    Bits seen = 0;
    for (std::int32_t v = 0; v < k; ++v) {
      if (seen >> v & 1) continue;
      Bits comp = Bits{1} << v, frontier = comp;
      while (frontier) {
        const Bits grow = neighbors_of(cut_adj, frontier) & ~comp;
        comp |= grow;
        frontier = grow;
      }
      seen |= comp;
      if (hits_all(comp)) return fail("separation");
    }
    rep.contract_ok = true;
  }
  rep.consistent = true;
  return rep;
}

}  // namespace lgsep
