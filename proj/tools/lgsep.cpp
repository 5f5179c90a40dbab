// lgsep: command-line front end. Exit codes: 0 ok, 1 validation failure,
// 2 usage or input error, 3 the input contains a K_t minor.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lgsep/formats.hpp"
#include "lgsep/generate.hpp"
#include "lgsep/oracles.hpp"
#include "lgsep/report.hpp"
#include "lgsep/separator.hpp"

using namespace lgsep;

namespace {

constexpr int kOk = 0, kInvalid = 1, kUsage = 2, kCertificate = 3;

struct Common {
  std::string input = "-";
  std::string out;
  bool timings = false;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_file(path);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) std::cout << text << std::flush;
  else write_file(c.out, text);
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
  if (with_input) sub->add_option("graph", c.input, "input .gr file, '-' for stdin");
  sub->add_option("--out", c.out, "write output here instead of stdout");
  sub->add_flag("--timings", c.timings, "include wall-clock timings in the JSON");
}

int finish(const Common& c, Json report, Clock::time_point start, int code) {
  if (c.timings) report["timings"] = {{"total_ms", ms_since(start)}};
  if (code == kOk && !all_validators_pass(report)) code = kInvalid;
  emit(c, dump(report));
  return code;
}

EngineOptions engine_options() { return EngineOptions{Execution::serial, 0, 0}; }

std::vector<std::int64_t> parse_sizes(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParameterError("bad size '" + item + "'");
    }
  }
  if (out.empty()) throw ParameterError("no sizes given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line-graph partitions, tree-decompositions and balanced edge separators"};
  app.require_subcommand(1);

  Common common;
  std::int32_t t = 0;

  auto* gen = app.add_subcommand("gen", "generate an instance as .gr");
  std::string family;
  std::vector<std::int64_t> gen_args;
  std::uint64_t seed = 0;
  gen->add_option("family", family, "grid, toroidal-grid, cycle, star, path, complete, random-tree, outerplanar")
      ->required();
  gen->add_option("args", gen_args, "family sizes")->required();
  gen->add_option("--seed", seed, "seed for random families");
  add_common(gen, common, false);

  auto* partition = app.add_subcommand("partition", "rooted (t-2, p)-partition of L(G)");
  partition->add_option("--t", t, "clique size excluded as a minor")->required();
  add_common(partition, common);

  auto* tdlg = app.add_subcommand("tdlg", "tree-decomposition of L(G)");
  std::string td_out;
  tdlg->add_option("--t", t)->required();
  tdlg->add_option("--td", td_out, "also write the decomposition as .td (bags over 1-based edge ids)");
  add_common(tdlg, common);

  auto* separate = app.add_subcommand("separate", "weighted balanced edge separator");
  std::string weights_path;
  bool uniform = false;
  separate->add_option("--t", t)->required();
  auto* wopt = separate->add_option("--weights", weights_path, ".w file");
  separate->add_flag("--uniform", uniform, "uniform weights 1/n (default)")->excludes(wopt);
  add_common(separate, common);

  auto* iso = app.add_subcommand("iso", "isoperimetric witness");
  iso->add_option("--t", t)->required();
  add_common(iso, common);

  auto* verify = app.add_subcommand("verify", "check an artifact against a graph");
  std::string kind, artifact, against;
  bool host = false;
  verify->add_option("kind", kind, "partition, td, separator or model")
      ->required()
      ->check(CLI::IsMember({"partition", "td", "separator", "model"}));
  verify->add_option("artifact", artifact, "JSON report, or .td for td")->required();
  verify->add_option("--against", against, ".gr file")->required();
  verify->add_option("--t", t, "model: expected number of branch sets");
  verify->add_option("--weights", weights_path, "separator: .w file (default uniform)");
  verify->add_flag("--host", host, "td: check against G instead of L(G)");
  add_common(verify, common, false);

  auto* oracle = app.add_subcommand("oracle", "exhaustive desk-scale oracles");
  std::string which;
  bool of_line_graph = false;
  oracle->add_option("which", which, "tw, sep, iso or minor")
      ->required()
      ->check(CLI::IsMember({"tw", "sep", "iso", "minor"}));
  oracle->add_option("--t", t, "minor: clique size");
  oracle->add_option("--weights", weights_path, "sep: .w file (default uniform)");
  oracle->add_flag("--line-graph", of_line_graph, "tw: run on L(G)");
  add_common(oracle, common);

  auto* bench = app.add_subcommand("bench", "median wall time of tdlg over a size sweep");
  std::string sizes_text;
  bench->add_option("--family", family)->required();
  bench->add_option("--sizes", sizes_text, "comma-separated; grids use k x k")->required();
  bench->add_option("--t", t)->required();
  bench->add_option("--seed", seed);
  add_common(bench, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const auto start = Clock::now();
  try {
    if (*gen) {
      emit(common, emit_graph(generate(make_spec(family, gen_args, seed))));
      return kOk;
    }

    if (*bench) {
      Json report;
      report["schema"] = kSchema;
      report["command"] = "bench";
      report["family"] = family;
      report["t"] = t;
      Json runs = Json::array();
      for (auto k : parse_sizes(sizes_text)) {
        const auto f = parse_family(family);
        std::vector<std::int64_t> args{k};
        if (f == Family::grid || f == Family::toroidal_grid) args.push_back(k);
        const Graph g = generate(make_spec(family, args, seed));
        std::vector<double> times;
        Json last;
        for (int rep = 0; rep < 3; ++rep) {
          const auto s = Clock::now();
          auto res = line_graph_tree_decomposition(g, t, engine_options());
          times.push_back(ms_since(s));
          if (auto* d = std::get_if<LineGraphDecomposition>(&res))
            last = {{"outcome", "partition"}, {"width", width(d->decomposition)},
                    {"width_bound", d->source.params.width_bound()}};
          else
            last = {{"outcome", "certificate"}};
        }
        std::sort(times.begin(), times.end());
        last["size"] = k;
        last["n"] = g.num_vertices();
        last["m"] = g.num_edges();
        last["median_ms"] = times[1];
        runs.push_back(last);
      }
      report["runs"] = runs;
      emit(common, dump(report));
      return kOk;
    }

    if (*verify) {
      const Graph g = parse_graph(read_file(against));
      Json report = envelope("verify", g, 0);
      report["kind"] = kind;
      Verdict v;
      if (kind == "td") {
        TreeDecomposition d;
        if (artifact.size() >= 3 && artifact.compare(artifact.size() - 3, 3, ".td") == 0) {
          d = parse_decomposition(read_file(artifact)).decomposition;
        } else {
          const Json j = Json::parse(read_file(artifact));
          d = decomposition_from_json(j.contains("decomposition") ? j["decomposition"] : j);
        }
        v = validate(host ? g : line_graph(g).graph, d);
      } else {
        const Json j = Json::parse(read_file(artifact));
        if (kind == "partition") {
          const auto jt = j.value("t", 0);
          if (jt < 3) throw ParseError("JSON: partition report without a valid 't'");
          const Params params = j.contains("params") && j["params"].contains("c_sep")
                                    ? Params::for_graph(g, jt, j["params"]["c_sep"].get<std::int64_t>())
                                    : Params::for_graph(g, jt);
          const auto p = partition_from_json(j);
          v = validate_partition(g, p, params);
          if (v) {
            if (auto emb = embedding_from_json(j)) v = validate_embedding(g, p, *emb, params);
          }
        } else if (kind == "separator") {
          const auto w = weights_path.empty() ? WeightFunction::uniform(g.num_vertices())
                                              : parse_weights(read_file(weights_path), g.num_vertices());
          v = validate_separator(g, separator_from_json(j), w);
        } else {
          const auto model = model_from_json(j);
          v = validate_model(g, model);
          if (v && t > 0 && static_cast<std::int32_t>(model.branch_sets.size()) != t)
            v = Verdict::fail("branch set count");
        }
      }
      report["ok"] = v.ok;
      if (!v.ok) report["clause"] = v.clause;
      if (common.timings) report["timings"] = {{"total_ms", ms_since(start)}};
      emit(common, dump(report));
      return v.ok ? kOk : kInvalid;
    }

    const Graph g = parse_graph(read_input(common.input));

    if (*oracle) {
      Json report = envelope("oracle", g, t);
      report["oracle"] = which;
      if (which == "tw") {
        report["line_graph"] = of_line_graph;
        report["value"] = exact_treewidth(of_line_graph ? line_graph(g).graph : g);
      } else if (which == "sep") {
        const auto w = weights_path.empty() ? WeightFunction::uniform(g.num_vertices())
                                            : parse_weights(read_file(weights_path), g.num_vertices());
        const auto f = min_balanced_edge_separator(g, w);
        report["value"] = f.size();
        report["f"] = f;
      } else if (which == "iso") {
        const auto phi = exact_isoperimetric(g);
        report["value"] = format_rational(phi.phi);
        report["s"] = phi.s;
      } else {
        if (t < 1) throw ParameterError("oracle minor needs --t");
        const auto res = has_kt_minor(g, t);
        report["value"] = res.found;
        if (res.model) report["certificate"] = model_json(*res.model);
      }
      return finish(common, report, start, kOk);
    }

    Json report = envelope(app.get_subcommands().front()->get_name(), g, t);
    auto with_certificate = [&](const KtCertificate& cert) {
      report.update(certificate_report(g, cert, t));
      return finish(common, report, start, kCertificate);
    };

    if (*partition) {
      auto res = partition_line_graph(g, t, engine_options());
      if (auto* cert = std::get_if<KtCertificate>(&res)) return with_certificate(*cert);
      report.update(partition_report(g, std::get<LineGraphPartition>(res)));
      return finish(common, report, start, kOk);
    }
    if (*tdlg) {
      auto res = line_graph_tree_decomposition(g, t, engine_options());
      if (auto* cert = std::get_if<KtCertificate>(&res)) return with_certificate(*cert);
      const auto& d = std::get<LineGraphDecomposition>(res);
      if (!td_out.empty()) write_file(td_out, emit_decomposition(d.decomposition, g.num_edges()));
      report.update(tdlg_report(g, d));
      return finish(common, report, start, kOk);
    }
    if (*separate) {
      const auto w = weights_path.empty() ? WeightFunction::uniform(g.num_vertices())
                                          : parse_weights(read_file(weights_path), g.num_vertices());
      auto res = balanced_edge_separator(g, w, t, engine_options());
      if (auto* cert = std::get_if<KtCertificate>(&res)) return with_certificate(*cert);
      report.update(separator_report(g, std::get<EdgeSeparatorResult>(res), w,
                                     weights_path.empty() ? "uniform" : "file"));
      return finish(common, report, start, kOk);
    }
    if (*iso) {
      auto res = isoperimetric_witness(g, t, engine_options());
      if (auto* cert = std::get_if<KtCertificate>(&res)) return with_certificate(*cert);
      report.update(witness_report(g, std::get<IsoperimetricWitness>(res)));
      return finish(common, report, start, kOk);
    }
  } catch (const ParseError& e) {
    std::cerr << "lgsep: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "lgsep: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "lgsep: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "lgsep: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "lgsep: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "lgsep: internal contract violation: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
