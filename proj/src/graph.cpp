#include "cocirc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace cocirc {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.vertex_count = vertex_count;
  g.adj.assign(static_cast<std::size_t>(vertex_count), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int v = 0; v < vertex_count; ++v) {
    auto& nbrs = g.adj[static_cast<std::size_t>(v)];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
  }
  return g;
}

int Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adj) total += nbrs.size();
  return static_cast<int>(total / 2);
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adj[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < vertex_count; ++u) {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.vertex_count) throw std::invalid_argument("bfs source out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count), unreachable_distance);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] == unreachable_distance) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix apsp(const Graph& g) {
  DistanceMatrix dist;
  dist.reserve(static_cast<std::size_t>(g.vertex_count));
  for (int v = 0; v < g.vertex_count; ++v) dist.push_back(bfs_distances(g, v));
  return dist;
}

std::optional<int> check_regular(const Graph& g) {
  if (g.vertex_count == 0) return std::nullopt;
  int degree = g.degree(0);
  for (int v = 1; v < g.vertex_count; ++v) {
    if (g.degree(v) != degree) return std::nullopt;
  }
  return degree;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count == 0) return false;
  std::vector<int> dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == unreachable_distance; });
}

void DirectedGraph::add_arc(int from, int to) {
  if (from < 0 || to < 0 || from >= vertex_count || to >= vertex_count)
    throw std::invalid_argument("arc endpoint out of range");
  out[static_cast<std::size_t>(from)].push_back(to);
  in[static_cast<std::size_t>(to)].push_back(from);
}

int DirectedGraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& arcs : out) total += arcs.size();
  return static_cast<int>(total);
}

std::vector<char> backward_reachable(const DirectedGraph& d, int target) {
  if (target < 0 || target >= d.vertex_count)
    throw std::invalid_argument("backward_reachable target out of range");
  std::vector<char> seen(static_cast<std::size_t>(d.vertex_count), 0);
  std::deque<int> queue{target};
  seen[static_cast<std::size_t>(target)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : d.in[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
      }
    }
  }
  return seen;
}

namespace {

// Unit-capacity max flow, breadth-first augmenting paths. Small graphs only.
struct FlowNetwork {
  struct Edge {
    int to;
    int cap;
    std::size_t rev;
  };
  std::vector<std::vector<Edge>> adj;

  explicit FlowNetwork(int nodes) : adj(static_cast<std::size_t>(nodes)) {}

  void add(int from, int to, int cap) {
    adj[static_cast<std::size_t>(from)].push_back({to, cap, adj[static_cast<std::size_t>(to)].size()});
    adj[static_cast<std::size_t>(to)].push_back({from, 0, adj[static_cast<std::size_t>(from)].size() - 1});
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<std::pair<int, std::size_t>> parent(adj.size(), {-1, 0});
      std::deque<int> queue{s};
      parent[static_cast<std::size_t>(s)] = {s, 0};
      while (!queue.empty() && parent[static_cast<std::size_t>(t)].first == -1) {
        int v = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < adj[static_cast<std::size_t>(v)].size(); ++i) {
          const Edge& e = adj[static_cast<std::size_t>(v)][i];
          if (e.cap > 0 && parent[static_cast<std::size_t>(e.to)].first == -1) {
            parent[static_cast<std::size_t>(e.to)] = {v, i};
            queue.push_back(e.to);
          }
        }
      }
      if (parent[static_cast<std::size_t>(t)].first == -1) break;
      for (int v = t; v != s;) {
        auto [u, i] = parent[static_cast<std::size_t>(v)];
        Edge& e = adj[static_cast<std::size_t>(u)][i];
        e.cap -= 1;
        adj[static_cast<std::size_t>(e.to)][e.rev].cap += 1;
        v = u;
      }
      ++total;
    }
    return total;
  }
};

}  // namespace

int vertex_disjoint_path_count(const Graph& g, int s, int t) {
  if (s < 0 || t < 0 || s >= g.vertex_count || t >= g.vertex_count)
    throw std::invalid_argument("path endpoints out of range");
  if (s == t) throw std::invalid_argument("path endpoints must differ");

  // Node splitting: v -> (v_in = 2v, v_out = 2v + 1), capacity 1 through every
  // vertex except the endpoints.
  FlowNetwork net(2 * g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    int cap = (v == s || v == t) ? g.vertex_count : 1;
    net.add(2 * v, 2 * v + 1, cap);
  }
  for (auto [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, 1);
    net.add(2 * v + 1, 2 * u, 1);
  }
  return net.max_flow(2 * s + 1, 2 * t);
}

}  // namespace cocirc
