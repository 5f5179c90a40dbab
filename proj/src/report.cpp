#include "lgsep/report.hpp"

#include <cstdio>

#include "lgsep/formats.hpp"

namespace lgsep {

namespace {

const char* kWidthFormula = "(t-1)*floor(sqrt(c_sep*(t-3)*m*max_degree) + max_degree) - 1";
const char* kSeparatorFormula = "(t-1)*floor(sqrt(c_sep*(t-3)*m*max_degree) + max_degree)";

Json verdict_entry(Json& report, const std::string& name, const Verdict& v) {
  report["validators"][name] = v.ok;
  if (!v.ok) report["violations"][name] = v.clause;
  return report;
}

Json edge_pairs(const Graph& g, const EdgeSet& f) {
  Json out = Json::array();
  for (EdgeId e : f) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

template <class T>
T get_checked(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON: bad field '") + key + "': " + e.what());
  }
}

Json bounds_json(const Params& p, std::int64_t width_achieved, std::int64_t separator_achieved) {
  Json b;
  b["width"] = {{"formula", kWidthFormula},
                {"bound", p.width_bound()},
                {"base_bound", p.base_width_bound()},
                {"achieved", width_achieved}};
  if (separator_achieved >= 0)
    b["separator"] = {{"formula", kSeparatorFormula},
                      {"bound", p.separator_bound()},
                      {"base_bound", p.base_separator_bound()},
                      {"achieved", separator_achieved}};
  return b;
}

}  // namespace

std::string input_digest(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : emit_graph(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json envelope(const std::string& command, const Graph& g, std::int32_t t) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["input"] = {{"digest", input_digest(g)},
                {"n", g.num_vertices()},
                {"m", g.num_edges()},
                {"max_degree", max_degree(g)}};
  if (t > 0) j["t"] = t;
  return j;
}

Json params_json(const Params& p) {
  return {{"t", p.t},
          {"max_degree", p.max_degree},
          {"m", p.m},
          {"c_sep", p.c_sep},
          {"p_impl", p.p_value()},
          {"p_floor", p.p_floor()},
          {"base_p_floor", p.base_p_floor()}};
}

Json stats_json(const EngineStats& s) {
  return {{"steps", s.steps},
          {"disconnected", s.disconnected},
          {"empty_attachment", s.empty_attachment},
          {"singleton", s.singleton},
          {"tree_branch", s.tree_branch},
          {"separator_branch", s.separator_branch},
          {"lemma_calls", s.lemma_calls},
          {"max_h", s.max_h},
          {"max_depth", s.max_depth},
          {"max_achieved_factor", s.max_achieved_factor}};
}

Json decomposition_json(const TreeDecomposition& d) {
  Json tree = Json::array();
  for (auto [a, b] : d.tree_edges) tree.push_back({a, b});
  return {{"bags", d.bags}, {"tree_edges", tree}, {"width", width(d)}};
}

Json model_json(const MinorModel& m) { return {{"branch_sets", m.branch_sets}}; }

Json certificate_report(const Graph& g, const KtCertificate& cert, std::int32_t t) {
  Json j;
  j["outcome"] = "certificate";
  j["certificate"] = model_json(cert.model);
  verdict_entry(j, "model", validate_certificate(g, cert, t));
  return j;
}

Json partition_report(const Graph& g, const LineGraphPartition& p) {
  Json j;
  j["outcome"] = "partition";
  j["params"] = params_json(p.params);
  const auto& part = p.partition;
  Json h = Json::array();
  for (auto [a, b] : part.h_edges) h.push_back({a, b});
  std::size_t largest = 0;
  for (const auto& x : part.parts) largest = std::max(largest, x.size());
  j["partition"] = {{"parts", part.parts},
                    {"h_edges", h},
                    {"root_clique", part.root_clique},
                    {"decomposition", decomposition_json(part.decomposition)},
                    {"largest_part", largest}};
  j["embedding"] = {{"part_of", p.embedding.part_of}, {"slot", p.embedding.slot}};
  j["stats"] = stats_json(p.stats);
  j["bounds"] = bounds_json(p.params, width(product_blowup(part.decomposition, part.parts)), -1);
  verdict_entry(j, "partition", validate_partition(g, part, p.params));
  verdict_entry(j, "embedding", validate_embedding(g, part, p.embedding, p.params));
  return j;
}

Json tdlg_report(const Graph& g, const LineGraphDecomposition& d) {
  Json j;
  j["outcome"] = "partition";
  j["params"] = params_json(d.source.params);
  j["decomposition"] = decomposition_json(d.decomposition);
  j["stats"] = stats_json(d.source.stats);
  j["bounds"] = bounds_json(d.source.params, width(d.decomposition), -1);
  verdict_entry(j, "partition", validate_partition(g, d.source.partition, d.source.params));
  verdict_entry(j, "td", validate(line_graph(g).graph, d.decomposition));
  const bool within = width(d.decomposition) <= d.source.params.width_bound();
  verdict_entry(j, "width_bound", within ? Verdict::pass() : Verdict::fail("width"));
  return j;
}

Json separator_report(const Graph& g, const EdgeSeparatorResult& s, const WeightFunction& w,
                      const std::string& weight_source) {
  Json j;
  j["outcome"] = "separator";
  j["params"] = params_json(s.params);
  Json comps = Json::array();
  for (const auto& c : s.components)
    comps.push_back({{"vertices", c.vertices}, {"weight", format_rational(c.weight)}});
  j["separator"] = {{"f", s.f},
                    {"f_edges", edge_pairs(g, s.f)},
                    {"components", comps},
                    {"sink_node", s.sink_node},
                    {"anchor", s.anchor},
                    {"decomposition_width", s.decomposition_width}};
  j["weights"] = weight_source;
  j["bounds"] = bounds_json(s.params, s.decomposition_width, static_cast<std::int64_t>(s.f.size()));
  verdict_entry(j, "separator", validate_separator(g, s.f, w));
  const bool within = static_cast<std::int64_t>(s.f.size()) <= s.params.separator_bound();
  verdict_entry(j, "size_bound", within ? Verdict::pass() : Verdict::fail("size"));
  return j;
}

Json witness_report(const Graph& g, const IsoperimetricWitness& w) {
  Json j = separator_report(g, w.separator, WeightFunction::uniform(g.num_vertices()), "uniform");
  j["outcome"] = "witness";
  j["witness"] = {{"s", w.s},
                  {"cut_size", w.cut_size},
                  {"ratio", format_rational(w.ratio)},
                  {"window", {w.window_low, w.window_high}},
                  {"greedy", w.greedy}};
  const auto size = static_cast<std::int64_t>(w.s.size());
  const bool in_window = size >= w.window_low && size <= w.window_high;
  const bool cut_ok = cut_size(g, w.s) == w.cut_size;
  verdict_entry(j, "window", in_window ? Verdict::pass() : Verdict::fail("window"));
  verdict_entry(j, "cut", cut_ok ? Verdict::pass() : Verdict::fail("cut"));
  return j;
}

bool all_validators_pass(const Json& report) {
  if (!report.contains("validators")) return true;
  for (const auto& [k, v] : report["validators"].items())
    if (!v.get<bool>()) return false;
  return true;
}

TreeDecomposition decomposition_from_json(const Json& j) {
  TreeDecomposition d;
  d.bags = get_checked<std::vector<VertexSet>>(j, "bags");
  for (const auto& e : get_checked<std::vector<std::vector<std::int32_t>>>(j, "tree_edges")) {
    if (e.size() != 2) throw ParseError("JSON: tree edge must have two ends");
    d.tree_edges.emplace_back(e[0], e[1]);
  }
  return d;
}

RootedPartition partition_from_json(const Json& report) {
  const Json p = get_checked<Json>(report, "partition");
  RootedPartition out;
  out.parts = get_checked<std::vector<EdgeSet>>(p, "parts");
  for (const auto& e : get_checked<std::vector<std::vector<std::int32_t>>>(p, "h_edges")) {
    if (e.size() != 2) throw ParseError("JSON: h edge must have two ends");
    out.h_edges.emplace_back(e[0], e[1]);
  }
  out.root_clique = get_checked<VertexSet>(p, "root_clique");
  out.decomposition = decomposition_from_json(get_checked<Json>(p, "decomposition"));
  out.decomposition.root_clique = out.root_clique;
  return out;
}

std::optional<Embedding> embedding_from_json(const Json& report) {
  if (!report.contains("embedding")) return std::nullopt;
  const Json e = report["embedding"];
  return Embedding{get_checked<std::vector<std::int32_t>>(e, "part_of"),
                   get_checked<std::vector<std::int32_t>>(e, "slot")};
}

MinorModel model_from_json(const Json& report) {
  const Json c = report.contains("certificate") ? report["certificate"] : report;
  return MinorModel{get_checked<std::vector<VertexSet>>(c, "branch_sets")};
}

EdgeSet separator_from_json(const Json& report) {
  return get_checked<EdgeSet>(get_checked<Json>(report, "separator"), "f");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lgsep
