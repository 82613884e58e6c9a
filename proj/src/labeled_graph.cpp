#include "cocirc/labeled_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "cocirc/combinatorics.hpp"

namespace cocirc {

bool adjacent_labels(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("adjacent_labels: length mismatch");
  int zero_delta = 0;
  for (int e = 0; e < x.size(); ++e) {
    bool xz = x[e] == Sign::zero;
    bool yz = y[e] == Sign::zero;
    if (xz != yz) {
      if (++zero_delta > 2) return false;
    } else if (!xz && x[e] != y[e]) {
      return false;  // separating element
    }
  }
  return zero_delta == 2;
}

std::pair<Graph, SignLabeling> build_cocircuit_graph(const OrientedMatroid& m) {
  std::vector<SignVector> labels = m.cocircuits;
  std::sort(labels.begin(), labels.end());

  const int count = static_cast<int>(labels.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      if (adjacent_labels(labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)]))
        edges.emplace_back(u, v);
    }
  }
  Graph g = Graph::from_edges(count, edges);
  return {std::move(g), SignLabeling{m.n, m.r, std::move(labels)}};
}

namespace {

// c1 + c2 only: uniform support sizes and exactly one +/- pair per support.
bool support_axioms_hold(const std::vector<SignVector>& labels, int n, int r) {
  const int support_size = n - r + 1;
  if (support_size < 1) return false;
  std::map<std::vector<int>, std::vector<const SignVector*>> by_support;
  for (const SignVector& x : labels) {
    std::vector<int> supp = support(x);
    if (static_cast<int>(supp.size()) != support_size) return false;
    by_support[std::move(supp)].push_back(&x);
  }
  const std::int64_t expected_supports = binomial(n, support_size);
  if (static_cast<std::int64_t>(labels.size()) != 2 * expected_supports) return false;
  if (static_cast<std::int64_t>(by_support.size()) != expected_supports) return false;
  for (const auto& [supp, members] : by_support) {
    if (members.size() != 2) return false;
    if (negate(*members[0]) != *members[1]) return false;
  }
  return true;
}

}  // namespace

bool is_sign_labeling(const Graph& g, const SignLabeling& labeling) {
  if (labeling.vertex_count() != g.vertex_count) return false;
  if (labeling.n < 1 || labeling.r < 1) return false;
  if (labeling.vertex_count() == 0) return false;
  for (const SignVector& x : labeling.label) {
    if (x.size() != labeling.n) return false;
  }

  if (!support_axioms_hold(labeling.label, labeling.n, labeling.r)) return false;

  // c2 gives exactly two labels per support, negatives of each other, which
  // also forces injectivity. Adjacency must then match the characterization.
  for (int u = 0; u < g.vertex_count; ++u) {
    for (int v = u + 1; v < g.vertex_count; ++v) {
      bool should = adjacent_labels(labeling.label[static_cast<std::size_t>(u)],
                                    labeling.label[static_cast<std::size_t>(v)]);
      if (should != g.has_edge(u, v)) return false;
    }
  }
  return true;
}

AntipodalMap antipodal_from_labeling(const SignLabeling& labeling) {
  std::unordered_map<SignVector, int, SignVectorHash> index;
  index.reserve(labeling.label.size());
  for (int v = 0; v < labeling.vertex_count(); ++v) {
    if (!index.emplace(labeling.label[static_cast<std::size_t>(v)], v).second)
      throw std::invalid_argument("antipodal_from_labeling: duplicate label");
  }
  AntipodalMap antipode(labeling.label.size());
  for (int v = 0; v < labeling.vertex_count(); ++v) {
    auto it = index.find(negate(labeling.label[static_cast<std::size_t>(v)]));
    if (it == index.end())
      throw std::invalid_argument("antipodal_from_labeling: negation of a label is missing");
    antipode[static_cast<std::size_t>(v)] = it->second;
  }
  return antipode;
}

namespace {

std::vector<std::vector<int>> support_table(const SignLabeling& labeling) {
  std::vector<std::vector<int>> supports;
  supports.reserve(labeling.label.size());
  for (const SignVector& x : labeling.label) supports.push_back(support(x));
  return supports;
}

// Crabbed membership of w's label relative to (v's label, target's label),
// restricted to w's support positions.
inline bool crabbed_step(const SignVector& lw, const SignVector& lv, const SignVector& lt,
                         const std::vector<int>& supp_w, std::uint64_t* comparisons) {
  for (int e : supp_w) {
    if (comparisons) ++*comparisons;
    if (lv[e] == lw[e]) continue;
    if (comparisons) ++*comparisons;
    if (lt[e] == lw[e]) continue;
    return false;
  }
  return true;
}

DirectedGraph crabbed_arcs_impl(const Graph& g, const SignLabeling& labeling, int target,
                                const std::vector<std::vector<int>>& supports,
                                std::uint64_t* comparisons) {
  DirectedGraph arcs(g.vertex_count);
  const SignVector& lt = labeling.label[static_cast<std::size_t>(target)];
  for (int v = 0; v < g.vertex_count; ++v) {
    const SignVector& lv = labeling.label[static_cast<std::size_t>(v)];
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      const SignVector& lw = labeling.label[static_cast<std::size_t>(w)];
      if (crabbed_step(lw, lv, lt, supports[static_cast<std::size_t>(w)], comparisons))
        arcs.add_arc(v, w);
    }
  }
  return arcs;
}

}  // namespace

DirectedGraph crabbed_arcs(const Graph& g, const SignLabeling& labeling, int target,
                           std::uint64_t* comparisons) {
  if (target < 0 || target >= g.vertex_count)
    throw std::invalid_argument("crabbed_arcs: target out of range");
  if (labeling.vertex_count() != g.vertex_count)
    throw std::invalid_argument("crabbed_arcs: labeling size mismatch");
  return crabbed_arcs_impl(g, labeling, target, support_table(labeling), comparisons);
}

bool verify_om_labeling(const Graph& g, const SignLabeling& labeling,
                        std::uint64_t* comparisons) {
  if (labeling.vertex_count() != g.vertex_count) return false;
  AntipodalMap antipode;
  try {
    antipode = antipodal_from_labeling(labeling);
  } catch (const std::invalid_argument&) {
    return false;
  }

  const auto supports = support_table(labeling);
  for (int target = 0; target < g.vertex_count; ++target) {
    DirectedGraph arcs = crabbed_arcs_impl(g, labeling, target, supports, comparisons);
    std::vector<char> reached = backward_reachable(arcs, target);
    for (int v = 0; v < g.vertex_count; ++v) {
      if (v == target || v == antipode[static_cast<std::size_t>(target)]) continue;
      if (!reached[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

int count_disjoint_crabbed_paths(const Graph& g, const SignLabeling& labeling, int v, int w) {
  if (v < 0 || w < 0 || v >= g.vertex_count || w >= g.vertex_count)
    throw std::invalid_argument("count_disjoint_crabbed_paths: vertex out of range");
  if (v == w) throw std::invalid_argument("count_disjoint_crabbed_paths: vertices must differ");
  if (labeling.vertex_count() != g.vertex_count)
    throw std::invalid_argument("count_disjoint_crabbed_paths: labeling size mismatch");

  const SignVector& lv = labeling.label[static_cast<std::size_t>(v)];
  const SignVector& lw = labeling.label[static_cast<std::size_t>(w)];

  std::vector<int> to_sub(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<int> members;
  for (int z = 0; z < g.vertex_count; ++z) {
    if (is_crabbed_member(labeling.label[static_cast<std::size_t>(z)], lv, lw)) {
      to_sub[static_cast<std::size_t>(z)] = static_cast<int>(members.size());
      members.push_back(z);
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (int z : members) {
    for (int y : g.adj[static_cast<std::size_t>(z)]) {
      if (z < y && to_sub[static_cast<std::size_t>(y)] != -1)
        edges.emplace_back(to_sub[static_cast<std::size_t>(z)], to_sub[static_cast<std::size_t>(y)]);
    }
  }
  Graph sub = Graph::from_edges(static_cast<int>(members.size()), edges);
  return vertex_disjoint_path_count(sub, to_sub[static_cast<std::size_t>(v)],
                                    to_sub[static_cast<std::size_t>(w)]);
}

}  // namespace cocirc
