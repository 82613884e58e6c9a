#pragma once
// Graphs whose vertices carry sign vectors: construction of cocircuit graphs,
// the sign-labeling characterization, antipodal maps, and the crabbed-path
// machinery that certifies a labeling as coming from an oriented matroid.

#include <cstdint>
#include <utility>
#include <vector>

#include "cocirc/graph.hpp"
#include "cocirc/oriented_matroid.hpp"
#include "cocirc/sign_vector.hpp"

namespace cocirc {

struct SignLabeling {
  int n = 0;
  int r = 0;
  std::vector<SignVector> label;  // indexed by vertex

  int vertex_count() const { return static_cast<int>(label.size()); }
  bool operator==(const SignLabeling&) const = default;
};

// vertex -> antipodal vertex (an involution when valid)
using AntipodalMap = std::vector<int>;

// True iff the labels are adjacent in any cocircuit graph: zero supports differ
// by one swap and there is no separating element.
bool adjacent_labels(const SignVector& x, const SignVector& y);

// Vertices = cocircuits in canonical (sorted) order; edges by adjacent_labels.
std::pair<Graph, SignLabeling> build_cocircuit_graph(const OrientedMatroid& m);

// Full characterization check: injective labels satisfying the two support
// axioms whose adjacency matches the graph exactly.
bool is_sign_labeling(const Graph& g, const SignLabeling& labeling);

// A(v) = vertex labeled with the negation of v's label; throws
// std::invalid_argument if some negation is missing.
AntipodalMap antipodal_from_labeling(const SignLabeling& labeling);

// Directed version of g for a fixed target: arc v->w iff stepping from v to w
// keeps signs inside the composition of L(v) and L(target). Membership is
// tested on the support positions of w's label only; every sign comparison is
// counted into *comparisons when given.
DirectedGraph crabbed_arcs(const Graph& g, const SignLabeling& labeling, int target,
                           std::uint64_t* comparisons = nullptr);

// For every target, every vertex except the target's antipode must reach the
// target through crabbed arcs. Requires is_sign_labeling(g, labeling).
bool verify_om_labeling(const Graph& g, const SignLabeling& labeling,
                        std::uint64_t* comparisons = nullptr);

// Maximum number of internally-vertex-disjoint v-w paths inside the subgraph of
// crabbed members for the pair (v, w).
int count_disjoint_crabbed_paths(const Graph& g, const SignLabeling& labeling, int v, int w);

}  // namespace cocirc
