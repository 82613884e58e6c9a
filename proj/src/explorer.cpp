#include "cocirc/explorer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cocirc/combinatorics.hpp"
#include "cocirc/sign_vector.hpp"

namespace cocirc {

DistanceCensus antipodality_scan(const OrientedMatroid& m) {
  DistanceCensus census;
  census.n = m.n;
  census.r = m.r;
  const auto [g, labeling] = build_cocircuit_graph(m);
  census.vertex_count = g.vertex_count;
  const AntipodalMap a = antipodal_from_labeling(labeling);
  const DistanceMatrix dist = apsp(g);
  const int critical = m.n - m.r + 2;

  for (int v = 0; v < g.vertex_count; ++v) {
    int at_critical = 0;
    for (int w = 0; w < g.vertex_count; ++w) {
      const int d = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      census.diameter = std::max(census.diameter, d);
      if (d != critical) continue;
      ++at_critical;
      if (w > v) {
        ++census.critical_pairs;
        if (a[static_cast<std::size_t>(v)] != w) ++census.non_antipodal_critical;
      }
    }
    census.max_antipodal_candidates = std::max(census.max_antipodal_candidates, at_critical);
  }
  return census;
}

namespace {

// Distances from source inside the subgraph induced on the marked vertices.
std::vector<int> induced_distances(const Graph& g, const std::vector<char>& marked, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count), unreachable_distance);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.adj[static_cast<std::size_t>(u)]) {
      if (!marked[static_cast<std::size_t>(w)] || dist[static_cast<std::size_t>(w)] >= 0)
        continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

bool coline_distance_check(const Graph& g, const SignLabeling& labeling, std::string* failure) {
  const int n = labeling.n;
  const int r = labeling.r;
  const DistanceMatrix dist = apsp(g);
  bool ok = true;

  for_each_combination(n, r - 2, [&](const std::vector<int>& contracted) {
    if (!ok) return;
    std::vector<int> members;
    std::vector<char> marked(static_cast<std::size_t>(g.vertex_count), 0);
    for (int v = 0; v < g.vertex_count; ++v) {
      const SignVector& label = labeling.label[static_cast<std::size_t>(v)];
      bool inside = true;
      for (int e : contracted)
        if (label[e] != Sign::zero) {
          inside = false;
          break;
        }
      if (inside) {
        members.push_back(v);
        marked[static_cast<std::size_t>(v)] = 1;
      }
    }

    for (std::size_t i = 0; i < members.size() && ok; ++i) {
      const int v = members[i];
      const std::vector<int> inner = induced_distances(g, marked, v);
      const SignVector& x = labeling.label[static_cast<std::size_t>(v)];
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int w = members[j];
        const SignVector& y = labeling.label[static_cast<std::size_t>(w)];
        if (y == negate(x)) continue;
        const int s = static_cast<int>(separator(x, y).size());
        const std::vector<int> zx = zero_support(x);
        const std::vector<int> zy = zero_support(y);
        std::vector<int> delta;
        std::set_symmetric_difference(zx.begin(), zx.end(), zy.begin(), zy.end(),
                                      std::back_inserter(delta));
        const int expected = s + static_cast<int>(delta.size()) / 2;
        const int whole = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        const int within = inner[static_cast<std::size_t>(w)];
        if (whole != expected || within != expected) {
          if (failure)
            *failure = "vertices " + std::to_string(v) + " and " + std::to_string(w) +
                       ": distance " + std::to_string(whole) + ", within the coline " +
                       std::to_string(within) + ", expected " + std::to_string(expected);
          ok = false;
          break;
        }
      }
    }
  });
  return ok;
}

bool coline_distance_check(const OrientedMatroid& m, std::string* failure) {
  const auto [g, labeling] = build_cocircuit_graph(m);
  return coline_distance_check(g, labeling, failure);
}

CensusRow census_row(const OrientedMatroid& m, long max_backtrack) {
  CensusRow row;
  row.census = antipodality_scan(m);
  const auto [g, labeling] = build_cocircuit_graph(m);
  RecognizeOptions options;
  options.all_candidates = true;
  options.max_backtrack = max_backtrack;
  row.recognition = recognize(g, options).census;
  return row;
}

std::string census_csv_header() {
  return "n,r,V,diameter,critical_pairs,noncritical_antipodal,max_Dv,"
         "stageA_survivors,stageB_survivors,verified_labelings";
}

std::string census_csv_line(const CensusRow& row) {
  std::ostringstream out;
  out << row.census.n << ',' << row.census.r << ',' << row.census.vertex_count << ','
      << row.census.diameter << ',' << row.census.critical_pairs << ','
      << row.census.non_antipodal_critical << ',' << row.census.max_antipodal_candidates << ','
      << row.recognition.stage_a_survivors << ',' << row.recognition.stage_b_survivors << ','
      << row.recognition.verified_labelings;
  return out.str();
}

}  // namespace cocirc
