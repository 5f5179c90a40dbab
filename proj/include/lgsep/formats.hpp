#pragma once

#include <string>

#include "lgsep/graph.hpp"
#include "lgsep/separator.hpp"
#include "lgsep/treedecomp.hpp"

namespace lgsep {

// Text formats use 1-based vertex ids.

/// "p tw <n> <m>" header, "u v" edge lines, "c ..." comments.
Graph parse_graph(const std::string& text);
/// Canonical form: header, then edges ascending.
std::string emit_graph(const Graph& g);

struct ParsedDecomposition {
  TreeDecomposition decomposition;
  std::int32_t num_vertices = 0;
};

/// "s td <bags> <width+1> <n>", then "b <i> <v>..." and tree edge lines "<i> <j>".
ParsedDecomposition parse_decomposition(const std::string& text);
std::string emit_decomposition(const TreeDecomposition& d, std::int32_t num_vertices);

/// Lines "<vertex> <num>/<den>" (or an integer); unlisted vertices weigh 0.
WeightFunction parse_weights(const std::string& text, std::int32_t n);
std::string emit_weights(const WeightFunction& w);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace lgsep
