#include "cocirc/generators.hpp"

#include <random>
#include <string>

#include "cocirc/combinatorics.hpp"
#include "cocirc/determinant.hpp"

namespace cocirc {

namespace {

void check_shape(const VectorConfiguration& config) {
  if (config.r < 2) throw std::invalid_argument("rank must be at least 2");
  if (config.n < config.r) throw std::invalid_argument("need at least r vectors");
  if (static_cast<int>(config.points.size()) != config.n)
    throw std::invalid_argument("point count does not match n");
  for (const auto& p : config.points) {
    if (static_cast<int>(p.size()) != config.r)
      throw std::invalid_argument("point dimension does not match r");
  }
}

}  // namespace

OrientedMatroid from_vectors(const VectorConfiguration& config) {
  check_shape(config);
  const int n = config.n;
  const int r = config.r;

  std::vector<SignVector> cocircuits;
  std::vector<std::vector<long long>> matrix(static_cast<std::size_t>(r));

  for_each_combination(n, r - 1, [&](const std::vector<int>& zero_set) {
    std::vector<Sign> signs(static_cast<std::size_t>(n), Sign::zero);
    for (int i = 0; i < r - 1; ++i)
      matrix[static_cast<std::size_t>(i)] = config.points[static_cast<std::size_t>(zero_set[static_cast<std::size_t>(i)])];
    std::size_t at = 0;
    for (int e = 0; e < n; ++e) {
      if (at < zero_set.size() && zero_set[at] == e) {
        ++at;
        continue;
      }
      matrix[static_cast<std::size_t>(r - 1)] = config.points[static_cast<std::size_t>(e)];
      int d = determinant_sign(matrix);
      if (d == 0)
        throw DegeneracyError("degenerate configuration: vanishing determinant on subset containing element " +
                              std::to_string(e));
      signs[static_cast<std::size_t>(e)] = d > 0 ? Sign::plus : Sign::minus;
    }
    SignVector x(std::move(signs));
    cocircuits.push_back(negate(x));
    cocircuits.push_back(std::move(x));
  });

  return make_oriented_matroid(n, r, std::move(cocircuits));
}

OrientedMatroid cyclic(int n, int r) {
  if (r < 2) throw std::invalid_argument("rank must be at least 2");
  if (n < r) throw std::invalid_argument("need n >= r");
  VectorConfiguration config;
  config.n = n;
  config.r = r;
  config.points.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& p = config.points[static_cast<std::size_t>(i)];
    p.resize(static_cast<std::size_t>(r));
    long long power = 1;
    for (int j = 0; j < r; ++j) {
      p[static_cast<std::size_t>(j)] = power;
      power *= i + 1;
    }
  }
  return from_vectors(config);
}

namespace {

// Uniform-ish draw from [-bound, bound] via modulo; the slight bias is harmless
// here and keeps the byte-level output identical across standard libraries.
long long draw_coordinate(std::mt19937_64& rng, int bound) {
  std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  return static_cast<long long>(rng() % span) - bound;
}

bool general_position(const VectorConfiguration& config) {
  std::vector<std::vector<long long>> matrix(static_cast<std::size_t>(config.r));
  bool ok = true;
  for_each_combination(config.n, config.r, [&](const std::vector<int>& subset) {
    if (!ok) return;
    for (int i = 0; i < config.r; ++i)
      matrix[static_cast<std::size_t>(i)] =
          config.points[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])];
    if (determinant_sign(matrix) == 0) ok = false;
  });
  return ok;
}

}  // namespace

OrientedMatroid random_realizable(int n, int r, std::uint64_t seed, int coord_bound) {
  if (r < 2) throw std::invalid_argument("rank must be at least 2");
  if (n < r) throw std::invalid_argument("need n >= r");
  if (coord_bound < 8) throw std::invalid_argument("coordinate bound must be at least 8");

  std::mt19937_64 rng(seed);
  constexpr int budget = 1000;
  VectorConfiguration config;
  config.n = n;
  config.r = r;
  config.points.assign(static_cast<std::size_t>(n),
                       std::vector<long long>(static_cast<std::size_t>(r)));

  for (int attempt = 0; attempt < budget; ++attempt) {
    for (auto& p : config.points)
      for (auto& coordinate : p) coordinate = draw_coordinate(rng, coord_bound);
    if (general_position(config)) return from_vectors(config);
  }
  throw DegeneracyError("no general-position configuration found within 1000 attempts");
}

Graph perturb_graph(const Graph& g, int swaps, std::uint64_t seed) {
  if (swaps < 0) throw std::invalid_argument("swap count must be nonnegative");
  std::mt19937_64 rng(seed);
  Graph current = g;

  int done = 0;
  const long attempt_budget = swaps == 0 ? 0 : 200L * swaps + 200;
  for (long attempt = 0; attempt < attempt_budget && done < swaps; ++attempt) {
    auto edges = current.edges();
    if (edges.size() < 2) break;
    std::size_t i = static_cast<std::size_t>(rng() % edges.size());
    std::size_t j = static_cast<std::size_t>(rng() % edges.size());
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    // Two rewirings preserve the degree sequence; pick one at random.
    int x1 = a, y1 = d, x2 = c, y2 = b;
    if (rng() % 2 == 0) {
      y1 = c;
      x2 = d;
    }
    if (x1 == y1 || x2 == y2) continue;
    if (current.has_edge(x1, y1) || current.has_edge(x2, y2)) continue;

    auto rewired = edges;
    rewired[i] = {std::min(x1, y1), std::max(x1, y1)};
    rewired[j] = {std::min(x2, y2), std::max(x2, y2)};
    Graph candidate = Graph::from_edges(current.vertex_count, rewired);
    if (!is_connected(candidate)) continue;
    current = std::move(candidate);
    ++done;
  }
  return current;
}

}  // namespace cocirc
