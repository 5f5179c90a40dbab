#include "lgsep/generate.hpp"

#include <algorithm>
#include <numeric>

namespace lgsep {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  std::size_t arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::grid, "grid", 2},           {Family::toroidal_grid, "toroidal-grid", 2},
    {Family::cycle, "cycle", 1},         {Family::star, "star", 1},
    {Family::path, "path", 1},           {Family::complete, "complete", 1},
    {Family::random_tree, "random-tree", 1}, {Family::outerplanar, "outerplanar", 1},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw ParameterError("unknown family");
}

void need(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

Family parse_family(const std::string& name) {
  for (const auto& i : kFamilies)
    if (name == i.name) return i.family;
  throw ParameterError("unknown family '" + name + "'");
}

std::string InstanceSpec::name() const {
  std::string out = family_name(family) + "(" + std::to_string(a);
  if (info(family).arity == 2) out += "," + std::to_string(b);
  if (family == Family::random_tree || family == Family::outerplanar) out += ";seed=" + std::to_string(seed);
  return out + ")";
}

InstanceSpec make_spec(const std::string& family, const std::vector<std::int64_t>& args, std::uint64_t seed) {
  InstanceSpec spec;
  spec.family = parse_family(family);
  const auto arity = info(spec.family).arity;
  need(args.size() == arity, family + " takes " + std::to_string(arity) + " size argument(s)");
  for (auto x : args) need(x >= 1 && x <= 1'000'000, "family parameters must lie in [1, 1000000]");
  spec.a = static_cast<std::int32_t>(args[0]);
  if (arity == 2) spec.b = static_cast<std::int32_t>(args[1]);
  spec.seed = seed;
  return spec;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ParameterError("bounded: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

Graph generate(const InstanceSpec& spec) {
  const std::int32_t a = spec.a, b = spec.b;
  std::vector<Edge> e;
  auto add = [&](std::int32_t u, std::int32_t v) { e.push_back({std::min(u, v), std::max(u, v)}); };
  switch (spec.family) {
    case Family::grid: {
      need(a >= 1 && b >= 1, "grid needs rows, cols >= 1");
      for (std::int32_t i = 0; i < a; ++i)
        for (std::int32_t j = 0; j < b; ++j) {
          if (j + 1 < b) add(i * b + j, i * b + j + 1);
          if (i + 1 < a) add(i * b + j, (i + 1) * b + j);
        }
      return Graph(a * b, std::move(e));
    }
    case Family::toroidal_grid: {
      need(a >= 3 && b >= 3, "toroidal-grid needs rows, cols >= 3");
      for (std::int32_t i = 0; i < a; ++i)
        for (std::int32_t j = 0; j < b; ++j) {
          add(i * b + j, i * b + (j + 1) % b);
          add(i * b + j, ((i + 1) % a) * b + j);
        }
      return Graph(a * b, std::move(e));
    }
    case Family::cycle:
      need(a >= 3, "cycle needs n >= 3");
      for (std::int32_t i = 0; i < a; ++i) add(i, (i + 1) % a);
      return Graph(a, std::move(e));
    case Family::star:
      need(a >= 2, "star needs n >= 2");
      for (std::int32_t i = 1; i < a; ++i) add(0, i);
      return Graph(a, std::move(e));
    case Family::path:
      need(a >= 1, "path needs n >= 1");
      for (std::int32_t i = 0; i + 1 < a; ++i) add(i, i + 1);
      return Graph(a, std::move(e));
    case Family::complete:
      need(a >= 1 && a <= 2000, "complete needs 1 <= k <= 2000");
      for (std::int32_t i = 0; i < a; ++i)
        for (std::int32_t j = i + 1; j < a; ++j) add(i, j);
      return Graph(a, std::move(e));
    case Family::random_tree: {
      need(a >= 1, "random-tree needs n >= 1");
      std::mt19937_64 rng(spec.seed);
      for (std::int32_t i = 1; i < a; ++i) add(static_cast<std::int32_t>(bounded(rng, i)), i);
      return Graph(a, std::move(e));
    }
    case Family::outerplanar: {
      need(a >= 3, "outerplanar needs n >= 3");
      std::mt19937_64 rng(spec.seed);
      for (std::int32_t i = 0; i < a; ++i) add(i, (i + 1) % a);
      std::vector<std::pair<std::int32_t, std::int32_t>> polygons{{0, a - 1}};
      while (!polygons.empty()) {
        auto [lo, hi] = polygons.back();
        polygons.pop_back();
        if (hi - lo < 2) continue;
        const auto k = lo + 1 + static_cast<std::int32_t>(bounded(rng, hi - lo - 1));
        if (k - lo >= 2 && bounded(rng, 2)) add(lo, k);
        if (hi - k >= 2 && bounded(rng, 2)) add(k, hi);
        polygons.emplace_back(k, hi);
        polygons.emplace_back(lo, k);
      }
      return Graph(a, std::move(e));
    }
  }
  throw ParameterError("unknown family");
}

WeightFunction random_weights(std::int32_t n, std::uint64_t seed) {
  need(n >= 2, "random weights need n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> mass(n);
  for (auto& x : mass) x = 1 + static_cast<std::int64_t>(bounded(rng, 16));
  const auto heaviest = std::max_element(mass.begin(), mass.end());
  const auto others = std::accumulate(mass.begin(), mass.end(), std::int64_t{0}) - *heaviest;
  *heaviest = std::min(*heaviest, others);
  const auto total = std::accumulate(mass.begin(), mass.end(), std::int64_t{0});
  WeightFunction w;
  for (auto x : mass) w.w.emplace_back(x, total);
  return w;
}

}  // namespace lgsep
