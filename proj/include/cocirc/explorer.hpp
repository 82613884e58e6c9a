#pragma once
// Batch experiments over generated instances: distance spectra of cocircuit
// graphs, how often non-antipodal vertex pairs attain the antipodal distance,
// coline distance checks, and per-instance recognition statistics.

#include <cstdint>
#include <string>

#include "cocirc/graph.hpp"
#include "cocirc/labeled_graph.hpp"
#include "cocirc/oriented_matroid.hpp"
#include "cocirc/recognizer.hpp"

namespace cocirc {

struct DistanceCensus {
  int n = 0;
  int r = 0;
  int vertex_count = 0;
  int diameter = 0;
  // Unordered vertex pairs at distance n-r+2.
  std::int64_t critical_pairs = 0;
  // Those among them that are not antipodal under the labeling.
  std::int64_t non_antipodal_critical = 0;
  // Largest number of vertices at distance n-r+2 from a single vertex.
  int max_antipodal_candidates = 0;
};

DistanceCensus antipodality_scan(const OrientedMatroid& m);

// For every coline and every non-antipodal vertex pair in it: the graph distance
// must equal |separator| + |zero difference|/2 and be realized by a path inside
// the coline subgraph. Writes the first offending pair to *failure when given.
bool coline_distance_check(const Graph& g, const SignLabeling& labeling,
                           std::string* failure = nullptr);
bool coline_distance_check(const OrientedMatroid& m, std::string* failure = nullptr);

struct CensusRow {
  DistanceCensus census;
  RecognitionCensus recognition;
};

// Scan plus a full recognition run over all antipode candidates.
CensusRow census_row(const OrientedMatroid& m, long max_backtrack = 100000);

std::string census_csv_header();
std::string census_csv_line(const CensusRow& row);

}  // namespace cocirc
