#pragma once
// Plain undirected/directed graph kernels: BFS distances, regularity,
// backward reachability, and internally-vertex-disjoint path counts.

#include <optional>
#include <utility>
#include <vector>

namespace cocirc {

inline constexpr int unreachable_distance = -1;

struct Graph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adj;  // sorted, no duplicates, no loops

  // Validates simplicity (no loops, no parallel edges) and endpoint ranges.
  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int edge_count() const;
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int u, int v) const;
  // Edge list with u < v, ascending (u, v) order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;
};

std::vector<int> bfs_distances(const Graph& g, int source);

using DistanceMatrix = std::vector<std::vector<int>>;
DistanceMatrix apsp(const Graph& g);

// Common degree if the graph is regular, nullopt otherwise.
std::optional<int> check_regular(const Graph& g);

bool is_connected(const Graph& g);

struct DirectedGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  explicit DirectedGraph(int vertices = 0)
      : vertex_count(vertices),
        out(static_cast<std::size_t>(vertices)),
        in(static_cast<std::size_t>(vertices)) {}

  void add_arc(int from, int to);
  int arc_count() const;
};

// Vertices with a directed path to target (target included).
std::vector<char> backward_reachable(const DirectedGraph& d, int target);

// Maximum number of internally-vertex-disjoint s-t paths (an s-t edge counts as one
// path). Unit-capacity max flow on the split graph; s and t are uncapacitated.
int vertex_disjoint_path_count(const Graph& g, int s, int t);

}  // namespace cocirc
