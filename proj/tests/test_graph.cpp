#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "cocirc/generators.hpp"
#include "cocirc/graph.hpp"
#include "cocirc/labeled_graph.hpp"
#include "doctest.h"

using namespace cocirc;

namespace {

Graph path4() {
  return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
}

Graph cycle(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.push_back({std::min(i, (i + 1) % k), std::max(i, (i + 1) % k)});
  return Graph::from_edges(k, edges);
}

Graph complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  return Graph::from_edges(k, edges);
}

// Reference count of internally disjoint s-t paths: enumerate all simple
// paths, then search for the biggest packing with disjoint interiors.
int brute_disjoint_paths(const Graph& g, int s, int t) {
  std::vector<std::vector<int>> paths;
  std::vector<int> current{s};
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count), 0);
  used[static_cast<std::size_t>(s)] = 1;
  std::function<void(int)> extend = [&](int v) {
    if (v == t) {
      paths.push_back(current);
      return;
    }
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      current.push_back(w);
      extend(w);
      current.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  extend(s);

  int best = 0;
  std::vector<char> taken(static_cast<std::size_t>(g.vertex_count), 0);
  std::function<void(std::size_t, int)> pick = [&](std::size_t from, int have) {
    best = std::max(best, have);
    for (std::size_t i = from; i < paths.size(); ++i) {
      bool free = true;
      for (std::size_t j = 1; j + 1 < paths[i].size() && free; ++j) {
        free = !taken[static_cast<std::size_t>(paths[i][j])];
      }
      if (!free) continue;
      for (std::size_t j = 1; j + 1 < paths[i].size(); ++j)
        taken[static_cast<std::size_t>(paths[i][j])] = 1;
      pick(i + 1, have + 1);
      for (std::size_t j = 1; j + 1 < paths[i].size(); ++j)
        taken[static_cast<std::size_t>(paths[i][j])] = 0;
    }
  };
  pick(0, 0);
  return best;
}

}  // namespace

TEST_CASE("from_edges validates its input") {
  CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));          // loop
  CHECK_THROWS(Graph::from_edges(3, {{0, 1}, {1, 0}}));  // parallel
  CHECK_THROWS(Graph::from_edges(3, {{0, 3}}));          // out of range
  const Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("bfs distances on a path and a cycle") {
  CHECK(bfs_distances(path4(), 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(bfs_distances(cycle(6), 0) == std::vector<int>{0, 1, 2, 3, 2, 1});
  const Graph two = Graph::from_edges(3, {{0, 1}});
  CHECK(bfs_distances(two, 0)[2] == unreachable_distance);
}

TEST_CASE("apsp is symmetric and matches bfs") {
  const Graph g = cycle(7);
  const DistanceMatrix d = apsp(g);
  for (int v = 0; v < g.vertex_count; ++v) {
    CHECK(d[static_cast<std::size_t>(v)] == bfs_distances(g, v));
    for (int w = 0; w < g.vertex_count; ++w) {
      CHECK(d[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] ==
            d[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("regularity check") {
  CHECK(check_regular(cycle(5)) == 2);
  CHECK(check_regular(complete(4)) == 3);
  CHECK_FALSE(check_regular(path4()).has_value());
}

TEST_CASE("connectivity check") {
  CHECK(is_connected(cycle(4)));
  CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
}

TEST_CASE("backward reachability in a directed graph") {
  DirectedGraph d(5);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(3, 1);
  d.add_arc(2, 4);
  CHECK(d.arc_count() == 4);
  const std::vector<char> reach = backward_reachable(d, 2);
  CHECK(reach == std::vector<char>{1, 1, 1, 1, 0});
}

TEST_CASE("disjoint path counts match a brute force packing") {
  const auto [hex, labeling] = build_cocircuit_graph(cyclic(3, 2));
  const Graph cases[] = {complete(4), complete(5), cycle(6), path4(), hex};
  for (const Graph& g : cases) {
    for (int s = 0; s < g.vertex_count; ++s) {
      for (int t = s + 1; t < g.vertex_count; ++t) {
        CAPTURE(s);
        CAPTURE(t);
        CHECK(vertex_disjoint_path_count(g, s, t) == brute_disjoint_paths(g, s, t));
      }
    }
  }
}

TEST_CASE("an edge between the endpoints counts as a path") {
  CHECK(vertex_disjoint_path_count(complete(4), 0, 1) == 3);
  CHECK(vertex_disjoint_path_count(cycle(5), 0, 1) == 2);
}
