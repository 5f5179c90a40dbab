#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lgsep/graph.hpp"
#include "lgsep/separator.hpp"

namespace lgsep {

enum class Family { grid, toroidal_grid, cycle, star, path, complete, random_tree, outerplanar };

/// grid/toroidal-grid take (rows, cols); every other family takes n in `a`.
/// Only random-tree and outerplanar read the seed.
struct InstanceSpec {
  Family family = Family::path;
  std::int32_t a = 1;
  std::int32_t b = 0;
  std::uint64_t seed = 0;

  std::string name() const;
};

Family parse_family(const std::string& name);
std::string family_name(Family f);
/// Builds a spec from a family name and its integer arguments; ParameterError on misuse.
InstanceSpec make_spec(const std::string& family, const std::vector<std::int64_t>& args, std::uint64_t seed = 0);

/// Deterministic in (family, parameters, seed).
/// grid: vertex (i, j) is i * cols + j. star(n) = K_{1,n-1} with centre 0.
/// outerplanar: Hamiltonian cycle 0..n-1 plus each chord of a random
/// triangulation kept with probability 1/2.
Graph generate(const InstanceSpec& spec);

/// Uniform integer in [0, bound), identical on every standard library.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);

/// Random valid weights: integer masses in [1, 16], the heaviest capped at
/// the sum of the others, then normalised. n >= 2.
WeightFunction random_weights(std::int32_t n, std::uint64_t seed);

}  // namespace lgsep
