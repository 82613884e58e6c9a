#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocirc/combinatorics.hpp"
#include "cocirc/generators.hpp"
#include "cocirc/labeled_graph.hpp"
#include "cocirc/recognizer.hpp"
#include "doctest.h"

using namespace cocirc;

namespace {

Graph cycle(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, k - 1});
  return Graph::from_edges(k, edges);
}

Graph circulant(int k, const std::vector<int>& jumps) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j : jumps) {
      const int other = (i + j) % k;
      edges.push_back({std::min(i, other), std::max(i, other)});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(k, edges);
}

Graph complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  return Graph::from_edges(k, edges);
}

Graph octahedron() {
  // Complete tripartite with parts {0,3}, {1,4}, {2,5}.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) edges.push_back({u, v});
  return Graph::from_edges(6, edges);
}

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("parameter inference from degree and vertex count") {
  CHECK(infer_parameters(6, 2) == Parameters{3, 2});
  CHECK(infer_parameters(4, 2) == Parameters{2, 2});
  CHECK(infer_parameters(12, 4) == Parameters{4, 3});
  CHECK(infer_parameters(20, 4) == Parameters{5, 3});
  CHECK(infer_parameters(6, 4) == Parameters{3, 3});
  CHECK(infer_parameters(70, 6) == Parameters{7, 4});
  CHECK_FALSE(infer_parameters(5, 2).has_value());   // odd vertex count
  CHECK_FALSE(infer_parameters(6, 3).has_value());   // odd degree
  CHECK_FALSE(infer_parameters(10, 4).has_value());  // no n with C(n,2) = 5
  CHECK_FALSE(infer_parameters(2, 2).has_value());   // would need n < r
  CHECK(Parameters{5, 3}.m() == 4);
}

TEST_CASE("stage names follow the pipeline order") {
  CHECK(std::string(stage_name(RejectStage::input)) == "input");
  CHECK(std::string(stage_name(RejectStage::regularity)) == "regularity");
  CHECK(std::string(stage_name(RejectStage::vertex_count)) == "vertex-count");
  CHECK(std::string(stage_name(RejectStage::antipodal_candidates)) == "antipodal-candidates");
  CHECK(std::string(stage_name(RejectStage::antipodal_map)) == "antipodal-map");
  CHECK(std::string(stage_name(RejectStage::partner_pairing)) == "partner-pairing");
  CHECK(std::string(stage_name(RejectStage::coline_trace)) == "coline-trace");
  CHECK(std::string(stage_name(RejectStage::labeling)) == "labeling");
  CHECK(std::string(stage_name(RejectStage::verification)) == "verification");
}

TEST_CASE("candidate antipodes are the vertices at the critical distance") {
  const Graph g = cycle(6);
  const DistanceMatrix dist = apsp(g);
  CHECK(antipodal_candidates(dist, 0, 3) == std::vector<int>{3});
  CHECK(antipodal_candidates(dist, 1, 3) == std::vector<int>{4});
  CHECK(antipodal_candidates(dist, 0, 7).empty());
}

TEST_CASE("antipodal map propagation from a true seed") {
  const auto [g, labeling] = build_cocircuit_graph(cyclic(3, 2));
  const DistanceMatrix dist = apsp(g);
  const auto map = build_antipodal_map(g, dist, 0, 2, 3);
  REQUIRE(map.has_value());
  CHECK(*map == AntipodalMap{2, 3, 0, 1, 5, 4});
  CHECK(*map == antipodal_from_labeling(labeling));
}

TEST_CASE("antipodal map propagation rejects every seed on a circulant impostor") {
  const Graph g = circulant(12, {1, 2});
  const DistanceMatrix dist = apsp(g);
  const std::vector<int> candidates = antipodal_candidates(dist, 0, 3);
  CHECK(candidates == std::vector<int>{5, 6, 7});
  for (int w : candidates) {
    std::string failure;
    CHECK_FALSE(build_antipodal_map(g, dist, 0, w, 3, nullptr, &failure).has_value());
    CHECK_FALSE(failure.empty());
  }
}

TEST_CASE("neighbor pairing matches the zero support criterion") {
  const auto [g, labeling] = build_cocircuit_graph(cyclic(5, 3));
  const DistanceMatrix dist = apsp(g);
  const AntipodalMap a = antipodal_from_labeling(labeling);
  const auto pairing = partner_pairing(g, a, dist, 5, 3);
  REQUIRE(pairing.has_value());
  auto moved_zero = [&](int x, int u) {
    // The element of x's zero set that u's label does not keep.
    const std::vector<int> zx = zero_support(labeling.label[static_cast<std::size_t>(x)]);
    const std::vector<int> zu = zero_support(labeling.label[static_cast<std::size_t>(u)]);
    std::vector<int> diff;
    std::set_difference(zx.begin(), zx.end(), zu.begin(), zu.end(), std::back_inserter(diff));
    REQUIRE(diff.size() == 1);
    return diff[0];
  };
  for (int x = 0; x < g.vertex_count; ++x) {
    const auto& at_x = pairing->pairs[static_cast<std::size_t>(x)];
    REQUIRE(at_x.size() == 2);
    std::vector<int> seen;
    for (const auto& [lo, hi] : at_x) {
      CHECK(lo < hi);
      CHECK(g.has_edge(x, lo));
      CHECK(g.has_edge(x, hi));
      // Partners leave through the same zero element of x.
      CHECK(moved_zero(x, lo) == moved_zero(x, hi));
      seen.push_back(lo);
      seen.push_back(hi);
    }
    CHECK(at_x[0].first < at_x[1].first);
    std::sort(seen.begin(), seen.end());
    std::vector<int> neighbors = g.adj[static_cast<std::size_t>(x)];
    std::sort(neighbors.begin(), neighbors.end());
    CHECK(seen == neighbors);
  }
}

TEST_CASE("coline tracing partitions the edges into antipodally symmetric cycles") {
  const auto [g, labeling] = build_cocircuit_graph(cyclic(5, 3));
  const DistanceMatrix dist = apsp(g);
  const AntipodalMap a = antipodal_from_labeling(labeling);
  const auto pairing = partner_pairing(g, a, dist, 5, 3);
  REQUIRE(pairing.has_value());
  const int m = 4;
  const auto atlas = trace_colines(g, *pairing, a, m);
  REQUIRE(atlas.has_value());
  CHECK(static_cast<std::int64_t>(atlas->cycles.size()) == binomial(5, 1));
  int edges_covered = 0;
  for (std::size_t c = 0; c < atlas->cycles.size(); ++c) {
    const std::vector<int>& cyc = atlas->cycles[c];
    REQUIRE(static_cast<int>(cyc.size()) == 2 * m);
    std::vector<int> distinct = cyc;
    std::sort(distinct.begin(), distinct.end());
    CHECK(std::unique(distinct.begin(), distinct.end()) == distinct.end());
    for (int i = 0; i < 2 * m; ++i) {
      CHECK(g.has_edge(cyc[static_cast<std::size_t>(i)],
                       cyc[static_cast<std::size_t>((i + 1) % (2 * m))]));
      // Half a turn lands on the antipode.
      CHECK(cyc[static_cast<std::size_t>((i + m) % (2 * m))] ==
            a[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])]);
      CHECK(atlas->position_of[c][static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] == i);
    }
    edges_covered += 2 * m;
  }
  CHECK(edges_covered == g.edge_count());
}

TEST_CASE("recognition accepts generated instances and inverts them") {
  for (const OrientedMatroid& m :
       {cyclic(3, 2), cyclic(4, 3), cyclic(5, 3), cyclic(6, 4), cyclic(5, 5),
        random_realizable(6, 3, 3), random_realizable(7, 4, 1)}) {
    const auto [g, labeling] = build_cocircuit_graph(m);
    CAPTURE(m.n);
    CAPTURE(m.r);
    const RecognitionResult result = recognize(g);
    REQUIRE(result.accepted);
    CHECK(result.params == Parameters{m.n, m.r});
    CHECK(result.om.cocircuits.size() == m.cocircuits.size());
    CHECK(validate_axioms(result.om).ok());
    CHECK(is_sign_labeling(g, result.labeling));
    CHECK(verify_om_labeling(g, result.labeling));
    CHECK(result.chosen_antipode >= 0);
  }
}

TEST_CASE("recognition reports the reconstruction census when asked") {
  const auto [g, labeling] = build_cocircuit_graph(cyclic(4, 3));
  RecognizeOptions options;
  options.all_candidates = true;
  const RecognitionResult result = recognize(g, options);
  REQUIRE(result.accepted);
  CHECK(result.census.candidates == 1);
  CHECK(result.census.stage_a_survivors == 1);
  CHECK(result.census.stage_b_survivors == 1);
  CHECK(result.census.verified_labelings == 1);
}

TEST_CASE("small graphs land on the expected verdicts") {
  {
    const RecognitionResult r = recognize(cycle(4));
    CHECK(r.accepted);
    CHECK(r.params == Parameters{2, 2});
  }
  {
    const RecognitionResult r = recognize(cycle(6));
    CHECK(r.accepted);
    CHECK(r.params == Parameters{3, 2});
  }
  {
    const RecognitionResult r = recognize(octahedron());
    CHECK(r.accepted);
    CHECK(r.params == Parameters{3, 3});
    CHECK(validate_axioms(r.om).ok());
  }
  {
    const RecognitionResult r = recognize(cycle(5));
    CHECK_FALSE(r.accepted);
    CHECK(r.reject_stage == RejectStage::vertex_count);
    CHECK(contains(r.reject_witness, "no ground set size matches 5 vertices"));
  }
  {
    const RecognitionResult r = recognize(complete(4));
    CHECK_FALSE(r.accepted);
    CHECK(r.reject_stage == RejectStage::regularity);
    CHECK(contains(r.reject_witness, "degree 3 is not an even positive number"));
  }
  {
    const RecognitionResult r = recognize(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK_FALSE(r.accepted);
    CHECK(r.reject_stage == RejectStage::regularity);
    CHECK(contains(r.reject_witness, "graph is not regular"));
  }
  {
    // Two disjoint squares.
    const RecognitionResult r = recognize(Graph::from_edges(
        8, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {4, 5}, {4, 7}, {5, 6}, {6, 7}}));
    CHECK_FALSE(r.accepted);
    CHECK(r.reject_stage == RejectStage::input);
    CHECK(contains(r.reject_witness, "not connected"));
  }
  {
    const RecognitionResult r = recognize(complete(3));
    CHECK_FALSE(r.accepted);
    CHECK(r.reject_stage == RejectStage::input);
    CHECK(contains(r.reject_witness, "fewer than four vertices"));
  }
  {
    // Bipartite 3-regular graph.
    const RecognitionResult r = recognize(Graph::from_edges(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    CHECK_FALSE(r.accepted);
    CHECK(r.reject_stage == RejectStage::regularity);
  }
}

TEST_CASE("the twelve vertex circulant impostor dies at the antipodal map") {
  RecognizeOptions options;
  options.all_candidates = true;
  const RecognitionResult result = recognize(circulant(12, {1, 2}), options);
  CHECK_FALSE(result.accepted);
  CHECK(result.reject_stage == RejectStage::antipodal_map);
  CHECK(result.census.candidates == 3);
  CHECK(result.census.stage_a_survivors == 0);
}

TEST_CASE("reconstruction respects the branch budget") {
  {
    const auto [g, labeling] = build_cocircuit_graph(cyclic(4, 3));
    RecognizeOptions tight;
    tight.max_backtrack = 10;
    const RecognitionResult starved = recognize(g, tight);
    CHECK_FALSE(starved.accepted);
    CHECK(starved.reject_stage == RejectStage::labeling);
    CHECK(contains(starved.reject_witness, "label search budget exhausted"));
    RecognizeOptions enough;
    enough.max_backtrack = 100;
    CHECK(recognize(g, enough).accepted);
  }
  {
    const auto [g, labeling] = build_cocircuit_graph(cyclic(6, 3));
    RecognizeOptions tight;
    tight.max_backtrack = 1;
    const RecognitionResult starved = recognize(g, tight);
    CHECK_FALSE(starved.accepted);
    CHECK(starved.reject_stage == RejectStage::labeling);
    CHECK(contains(starved.reject_witness, "branch budget exhausted"));
    RecognizeOptions enough;
    enough.max_backtrack = 3;
    CHECK(recognize(g, enough).accepted);
  }
  {
    const auto [g, labeling] = build_cocircuit_graph(cyclic(7, 5));
    RecognizeOptions tight;
    tight.max_backtrack = 10;
    const RecognitionResult starved = recognize(g, tight);
    CHECK_FALSE(starved.accepted);
    CHECK(starved.reject_stage == RejectStage::labeling);
    RecognizeOptions enough;
    enough.max_backtrack = 100;
    CHECK(recognize(g, enough).accepted);
  }
}

TEST_CASE("recognition output is independent of vertex order") {
  // Relabel the vertices of a known instance; the verdict and parameters
  // must survive, and the reconstructed labels must certify the new graph.
  const auto [g, labeling] = build_cocircuit_graph(cyclic(5, 3));
  const int k = g.vertex_count;
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) perm[static_cast<std::size_t>(v)] = (7 * v + 3) % k;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    const int pu = perm[static_cast<std::size_t>(u)];
    const int pv = perm[static_cast<std::size_t>(v)];
    edges.push_back({std::min(pu, pv), std::max(pu, pv)});
  }
  const Graph shuffled = Graph::from_edges(k, edges);
  const RecognitionResult result = recognize(shuffled);
  REQUIRE(result.accepted);
  CHECK(result.params == Parameters{5, 3});
  CHECK(is_sign_labeling(shuffled, result.labeling));
  CHECK(verify_om_labeling(shuffled, result.labeling));
}
