#pragma once
// Decides whether a graph is the cocircuit graph of a uniform oriented matroid
// and reconstructs the signed cocircuits when it is. Stages: parameter inference
// from degree and vertex count, antipodal map construction by BFS propagation,
// neighbor pairing through a distance criterion, coline cycle tracing, zero-support
// reconstruction with a slot constraint solver, sign assignment from component
// splits, and a final crabbed-connectivity verification.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocirc/graph.hpp"
#include "cocirc/labeled_graph.hpp"
#include "cocirc/oriented_matroid.hpp"

namespace cocirc {

struct Parameters {
  int n = 0;  // ground set size
  int r = 0;  // rank

  // Half-length of a coline cycle; also the distance between antipodal vertices.
  int m() const { return n - r + 2; }

  bool operator==(const Parameters&) const = default;
};

// Solves degree = 2(r-1) and |V| = 2*C(n, r-1); nullopt when no n >= r >= 2 fits.
std::optional<Parameters> infer_parameters(int vertex_count, int degree);

enum class RejectStage {
  input,                 // empty, too small, or disconnected
  regularity,            // not regular with an even positive degree
  vertex_count,          // no (n, r) matches |V|
  antipodal_candidates,  // nothing at the antipodal distance from the base vertex
  antipodal_map,         // propagation ambiguous, or the map is no involutive automorphism
  partner_pairing,       // some vertex has no perfect matching of its neighbors
  coline_trace,          // cycles of wrong length or not antipodally symmetric
  labeling,              // zero-support or sign reconstruction failed
  verification,          // reconstructed labeling is not crabbed-connected
};

const char* stage_name(RejectStage stage);

struct RecognizeOptions {
  // Keep checking the remaining antipode candidates after the first success and
  // count every labeling that passes full verification.
  bool all_candidates = false;
  // Branch budget for the labeling reconstruction, per candidate.
  long max_backtrack = 100000;
};

struct RecognitionCensus {
  int candidates = 0;          // vertices at the antipodal distance from the base vertex
  int stage_a_survivors = 0;   // candidates with a valid antipodal map
  int stage_b_survivors = 0;   // candidates that reached a sign labeling
  int verified_labelings = 0;  // candidates passing crabbed verification
};

struct RecognitionResult {
  bool accepted = false;
  RejectStage reject_stage = RejectStage::input;  // deepest stage reached, on reject
  std::string reject_witness;
  Parameters params;

  // Populated on accept.
  OrientedMatroid om;
  SignLabeling labeling;
  int chosen_antipode = -1;

  RecognitionCensus census;
  // Largest per-candidate counter values, for the stage-cost ceiling checks.
  std::uint64_t max_distance_lookups = 0;
  std::uint64_t max_verify_comparisons = 0;
};

RecognitionResult recognize(const Graph& g, const RecognizeOptions& options = {});

// Pipeline pieces below are exposed for direct testing.

// Vertices at the given distance from v, ascending.
std::vector<int> antipodal_candidates(const DistanceMatrix& dist, int v, int antipodal_distance);

// Propagates the seed pair (v, w) over a BFS tree: a vertex u with parent p maps to
// the unique neighbor of map[p] at the antipodal distance from u. The result must be
// a fixed-point-free involutive automorphism. Distance lookups made while scanning
// neighbors are counted into *distance_lookups when given.
std::optional<AntipodalMap> build_antipodal_map(const Graph& g, const DistanceMatrix& dist,
                                                int v, int w, int antipodal_distance,
                                                std::uint64_t* distance_lookups = nullptr,
                                                std::string* failure = nullptr);

// Per-vertex pairing of neighbors: u and w pair at x iff d(w, a[u]) = d(u, a[w]) = n-r.
// pairs[x] holds r-1 pairs (lo, hi) with lo < hi, sorted by lo. Requires n - r >= 1.
struct NeighborPairing {
  std::vector<std::vector<std::pair<int, int>>> pairs;
};

std::optional<NeighborPairing> partner_pairing(const Graph& g, const AntipodalMap& a,
                                               const DistanceMatrix& dist, int n, int r,
                                               std::string* failure = nullptr);

// Partition of the edges into closed cycles obtained by entering a vertex and leaving
// through the partner of the entering edge. Valid when every cycle has length 2m,
// visits 2m distinct vertices, and the antipodal map rotates it by half a turn.
struct ColineAtlas {
  std::vector<std::vector<int>> cycles;          // each a closed vertex sequence of length 2m
  std::vector<std::vector<int>> cycle_of_pair;   // [vertex][pair index] -> cycle id
  std::vector<std::vector<int>> position_of;     // [cycle id][vertex] -> position, or -1
  std::vector<std::vector<int>> antipodal_pair;  // [vertex][pair index] -> pair index at a[vertex]
};

std::optional<ColineAtlas> trace_colines(const Graph& g, const NeighborPairing& pairing,
                                         const AntipodalMap& a, int m,
                                         std::string* failure = nullptr);

}  // namespace cocirc
