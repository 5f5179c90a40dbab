#pragma once

#include <string>

#include <json.hpp>

#include "lgsep/oracles.hpp"
#include "lgsep/partition.hpp"
#include "lgsep/separator.hpp"

namespace lgsep {

// JSON reports use 0-based ids. Every bound and verdict is recomputed from
// the objects at serialization time. Keys are sorted, so dumps are stable.

using Json = nlohmann::json;

inline constexpr const char* kSchema = "lgsep/1";

/// FNV-1a 64 of the canonical .gr text, as 16 hex digits.
std::string input_digest(const Graph& g);

/// {"schema", "command", "input": {digest, n, m, max_degree}, "t"}
Json envelope(const std::string& command, const Graph& g, std::int32_t t);
Json params_json(const Params& p);
Json stats_json(const EngineStats& s);
Json decomposition_json(const TreeDecomposition& d);
Json model_json(const MinorModel& m);

/// Each of these fills `outcome`, the payload, `bounds` and `validators`.
Json certificate_report(const Graph& g, const KtCertificate& cert, std::int32_t t);
Json partition_report(const Graph& g, const LineGraphPartition& p);
Json tdlg_report(const Graph& g, const LineGraphDecomposition& d);
Json separator_report(const Graph& g, const EdgeSeparatorResult& s, const WeightFunction& w,
                      const std::string& weight_source);
Json witness_report(const Graph& g, const IsoperimetricWitness& w);

/// True iff every entry of report["validators"] is true.
bool all_validators_pass(const Json& report);

RootedPartition partition_from_json(const Json& report);
std::optional<Embedding> embedding_from_json(const Json& report);
TreeDecomposition decomposition_from_json(const Json& j);
MinorModel model_from_json(const Json& report);
EdgeSet separator_from_json(const Json& report);

/// Pretty dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace lgsep
