#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "lgsep/ast_lemma.hpp"
#include "lgsep/exec.hpp"
#include "lgsep/graph.hpp"
#include "lgsep/radius.hpp"
#include "lgsep/treedecomp.hpp"

namespace lgsep {

/// Guarantee factor used for a given t: the largest h handed to the
/// tree-or-separator step is t - 2.
std::int64_t c_sep_for(std::int32_t t);

/// Size parameters. p_impl = sqrt(c_sep (t-3) Δ m) + Δ; r(h) = sqrt(c_sep (h-1) m / Δ).
struct Params {
  std::int32_t t = 3;
  std::int64_t max_degree = 0;
  std::int64_t m = 0;
  std::int64_t c_sep = 1;

  static Params for_graph(const Graph& g, std::int32_t t);
  static Params for_graph(const Graph& g, std::int32_t t, std::int64_t c_sep);

  double p_value() const;
  std::int64_t p_floor() const;
  /// Same quantities with c_sep = 1.
  double base_p_value() const;
  std::int64_t base_p_floor() const;

  Radius radius(std::int32_t h) const;
  bool fits_part(std::int64_t size) const { return size <= p_floor(); }

  /// (t-1) floor(p) - 1 and (t-1) floor(p), for p_impl and for c_sep = 1.
  std::int64_t width_bound() const { return (t - 1) * p_floor() - 1; }
  std::int64_t base_width_bound() const { return (t - 1) * base_p_floor() - 1; }
  std::int64_t separator_bound() const { return (t - 1) * p_floor(); }
  std::int64_t base_separator_bound() const { return (t - 1) * base_p_floor(); }
};

double p_value(const Params& params);

/// Graph H on disjoint parts (edge sets of G) with a tree decomposition of
/// width <= t-2 over part ids, rooted at `root_clique`.
struct RootedPartition {
  std::vector<EdgeSet> parts;
  std::vector<std::pair<std::int32_t, std::int32_t>> h_edges;  // sorted, a < b
  VertexSet root_clique;
  TreeDecomposition decomposition;

  Graph quotient() const;
};

struct KtCertificate {
  MinorModel model;
};

/// Edge id -> (part, slot) with slots numbered from 1 inside each part.
struct Embedding {
  std::vector<std::int32_t> part_of;
  std::vector<std::int32_t> slot;
};

struct RootedInstance {
  VertexSet c;
  std::vector<EdgeSet> root_parts;
  std::vector<VertexSet> model;
};

struct EngineStats {
  std::int64_t steps = 0;
  std::int64_t disconnected = 0;  // case (a)
  std::int64_t empty_attachment = 0;  // case (b)
  std::int64_t singleton = 0;  // case (d)
  std::int64_t tree_branch = 0;
  std::int64_t separator_branch = 0;
  std::int64_t lemma_calls = 0;
  std::int32_t max_h = 0;
  std::int32_t max_depth = 0;
  double max_achieved_factor = 0.0;

  void merge(const EngineStats& other);
};

/// One edge_tree_or_separator invocation, kept for offline contract checks.
struct LemmaRecord {
  VertexSet within;
  std::vector<VertexSet> targets;
  TreeOrSeparator result;
};

struct EngineOptions {
  Execution execution = Execution::serial;
  /// Record every lemma invocation whose working set has at most this many
  /// vertices (0 disables recording).
  std::int32_t record_lemma_up_to = 0;
  /// Override for c_sep; 0 picks c_sep_for(t).
  std::int64_t c_sep = 0;
};

using StepOutcome = std::variant<RootedPartition, KtCertificate>;

/// Checks the instance hypotheses; returns the first violated clause.
Verdict validate_instance(const Graph& g, const RootedInstance& inst, const Params& params);

/// Partition of L(G)[E(C) + E_1 + ... + E_h] rooted at {E_1, ..., E_h}
/// (part ids 0..h-1 of the result), or a K_t-model. Throws PreconditionError if
/// the instance hypotheses fail.
StepOutcome induction_step(const Graph& g, const RootedInstance& inst, const Params& params,
                           EngineStats* stats = nullptr);

struct LineGraphPartition {
  RootedPartition partition;
  Embedding embedding;
  Params params;
  EngineStats stats;
  std::vector<LemmaRecord> lemma_records;
};

std::variant<LineGraphPartition, KtCertificate> partition_line_graph(
    const Graph& g, std::int32_t t, const EngineOptions& options = {});

struct LineGraphDecomposition {
  TreeDecomposition decomposition;  // over edge ids of G
  LineGraphPartition source;
};

std::variant<LineGraphDecomposition, KtCertificate> line_graph_tree_decomposition(
    const Graph& g, std::int32_t t, const EngineOptions& options = {});

/// Full postcondition check of a partition of the given edge universe:
/// disjoint nonempty parts covering it, part sizes, H-adjacency of every
/// L(G)-edge across parts, complete root clique, decomposition validity and
/// width <= t - 2.
Verdict validate_partition(const Graph& g, const RootedPartition& p, const Params& params,
                           const EdgeSet& universe, Execution execution = Execution::serial);
Verdict validate_partition(const Graph& g, const RootedPartition& p, const Params& params,
                           Execution execution = Execution::serial);

Embedding make_embedding(const Graph& g, const RootedPartition& p);
/// Injective slots within 1..floor(p_impl), every L(G)-edge mapped to equal
/// parts or H-adjacent parts.
Verdict validate_embedding(const Graph& g, const RootedPartition& p, const Embedding& emb,
                           const Params& params, Execution execution = Execution::serial);

Verdict validate_certificate(const Graph& g, const KtCertificate& cert, std::int32_t t);

}  // namespace lgsep
