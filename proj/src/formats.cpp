#include "lgsep/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lgsep {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::int64_t to_int(const std::string& tok, std::size_t line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  return v;
}

/// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::size_t no = 0;
  for (std::string line; std::getline(in, line);) {
    ++no;
    auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") continue;
    out.emplace_back(no, std::move(toks));
  }
  return out;
}

std::string at(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

Graph parse_graph(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing 'p tw' header");
  const auto& [hno, header] = lines.front();
  if (header.size() != 4 || header[0] != "p" || header[1] != "tw")
    throw ParseError(at(hno) + "malformed header, expected 'p tw <n> <m>'");
  const auto n = to_int(header[2], hno), m = to_int(header[3], hno);
  if (n < 0 || m < 0 || n > 50'000'000) throw ParseError(at(hno) + "header counts out of range");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::int64_t>(m, 10'000'000)));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, toks] = lines[i];
    if (toks.size() != 2) throw ParseError(at(no) + "expected 'u v'");
    const auto u = to_int(toks[0], no), v = to_int(toks[1], no);
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(at(no) + "vertex id out of range");
    if (u == v) throw ParseError(at(no) + "loop edge");
    edges.push_back({static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)});
  }
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    throw ParseError("duplicate edge " + std::to_string(dup->u + 1) + " " + std::to_string(dup->v + 1));
  return Graph(static_cast<std::int32_t>(n), std::move(edges));
}

std::string emit_graph(const Graph& g) {
  std::string out = "p tw " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

ParsedDecomposition parse_decomposition(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing 's td' header");
  const auto& [hno, header] = lines.front();
  if (header.size() != 5 || header[0] != "s" || header[1] != "td")
    throw ParseError(at(hno) + "malformed header, expected 's td <bags> <width+1> <n>'");
  const auto bags = to_int(header[2], hno), declared = to_int(header[3], hno), n = to_int(header[4], hno);
  if (bags < 0 || declared < 0 || n < 0 || bags > 50'000'000 || n > 50'000'000)
    throw ParseError(at(hno) + "header counts out of range");
  ParsedDecomposition out;
  out.num_vertices = static_cast<std::int32_t>(n);
  auto& d = out.decomposition;
  d.bags.resize(bags);
  std::vector<char> seen(bags, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, toks] = lines[i];
    if (toks[0] == "b") {
      if (toks.size() < 2) throw ParseError(at(no) + "bag line without an index");
      const auto id = to_int(toks[1], no);
      if (id < 1 || id > bags) throw ParseError(at(no) + "bag index out of range");
      if (seen[id - 1]) throw ParseError(at(no) + "bag listed twice");
      seen[id - 1] = 1;
      VertexSet bag;
      for (std::size_t k = 2; k < toks.size(); ++k) {
        const auto v = to_int(toks[k], no);
        if (v < 1 || v > n) throw ParseError(at(no) + "bag vertex out of range");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        throw ParseError(at(no) + "repeated vertex in bag");
      d.bags[id - 1] = std::move(bag);
    } else {
      if (toks.size() != 2) throw ParseError(at(no) + "expected a tree edge 'i j'");
      const auto a = to_int(toks[0], no), b = to_int(toks[1], no);
      if (a < 1 || b < 1 || a > bags || b > bags) throw ParseError(at(no) + "tree edge endpoint out of range");
      d.tree_edges.emplace_back(static_cast<NodeId>(a - 1), static_cast<NodeId>(b - 1));
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ParseError("some bag is not listed");
  if (width(d) + 1 != declared) throw ParseError("declared width+1 does not match the bags");
  return out;
}

std::string emit_decomposition(const TreeDecomposition& d, std::int32_t num_vertices) {
  std::string out = "s td " + std::to_string(d.num_nodes()) + " " + std::to_string(width(d) + 1) + " " +
                    std::to_string(num_vertices) + "\n";
  for (NodeId i = 0; i < d.num_nodes(); ++i) {
    out += "b " + std::to_string(i + 1);
    for (Vertex v : d.bags[i]) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (auto [a, b] : d.tree_edges) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return out;
}

WeightFunction parse_weights(const std::string& text, std::int32_t n) {
  WeightFunction w;
  w.w.assign(n, Rational(0));
  std::vector<char> seen(n, 0);
  for (const auto& [no, toks] : content_lines(text)) {
    if (toks.size() != 2) throw ParseError(at(no) + "expected '<vertex> <num>/<den>'");
    const auto v = to_int(toks[0], no);
    if (v < 1 || v > n) throw ParseError(at(no) + "vertex id out of range");
    if (seen[v - 1]) throw ParseError(at(no) + "vertex listed twice");
    seen[v - 1] = 1;
    const auto& q = toks[1];
    const auto slash = q.find('/');
    const auto num = to_int(q.substr(0, slash), no);
    const std::int64_t den = slash == std::string::npos ? 1 : to_int(q.substr(slash + 1), no);
    if (den <= 0) throw ParseError(at(no) + "denominator must be positive");
    w.w[v - 1] = Rational(num, den);
  }
  return w;
}

std::string emit_weights(const WeightFunction& w) {
  std::string out;
  for (std::size_t i = 0; i < w.w.size(); ++i) out += std::to_string(i + 1) + " " + format_rational(w.w[i]) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

}  // namespace lgsep
