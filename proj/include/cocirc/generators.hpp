#pragma once
// Instance generators: realizable oriented matroids from integer vector
// configurations (exact orientation predicates), the cyclic family from the
// moment curve, seeded random realizable instances, and degree-preserving
// edge perturbations for negative test graphs.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cocirc/graph.hpp"
#include "cocirc/oriented_matroid.hpp"

namespace cocirc {

struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VectorConfiguration {
  int n = 0;  // number of vectors
  int r = 0;  // ambient dimension = rank
  std::vector<std::vector<long long>> points;  // n rows of length r
};

// Signed cocircuits of the realizable oriented matroid of the configuration:
// for every (r-1)-subset, orientation signs of the remaining vectors against its
// hyperplane. Throws DegeneracyError if the configuration is not in general position.
OrientedMatroid from_vectors(const VectorConfiguration& config);

// Moment-curve configuration t_i = i (i = 1..n), always in general position.
OrientedMatroid cyclic(int n, int r);

// Rejection-samples integer configurations with coordinates in [-coord_bound,
// coord_bound] until one is in general position (budget 1000 attempts, then
// DegeneracyError). Deterministic in the seed.
OrientedMatroid random_realizable(int n, int r, std::uint64_t seed, int coord_bound = 99);

// Applies `swaps` random 2-edge swaps that keep the graph simple and connected;
// infeasible draws are skipped. Deterministic in the seed.
Graph perturb_graph(const Graph& g, int swaps, std::uint64_t seed);

}  // namespace cocirc
