#pragma once
// Uniform oriented matroids given by their signed cocircuit sets, plus the
// brute-force axiom validator used as the ground-truth oracle everywhere else.

#include <string>
#include <utility>
#include <vector>

#include "cocirc/sign_vector.hpp"

namespace cocirc {

// n = ground set size, r = rank. Cocircuits are kept in canonical (sorted) order.
struct OrientedMatroid {
  int n = 0;
  int r = 0;
  std::vector<SignVector> cocircuits;

  bool operator==(const OrientedMatroid&) const = default;
};

// Sorts into canonical order and rejects structurally broken input
// (wrong vector lengths, out-of-range parameters). Does not check the axioms.
OrientedMatroid make_oriented_matroid(int n, int r, std::vector<SignVector> cocircuits);

struct AxiomReport {
  bool c1_ok = false;  // every cocircuit has support of size n-r+1
  bool c2_ok = false;  // every (n-r+1)-subset carries exactly two cocircuits, negatives of each other
  bool c3_ok = false;  // sign elimination between every pair, at every separator element
  std::vector<std::string> witnesses;

  bool ok() const { return c1_ok && c2_ok && c3_ok; }
};

// Exhaustive check of the three uniform cocircuit axioms. Quadratic-and-worse by
// design: this is the reference oracle, not a fast path.
AxiomReport validate_axioms(const std::vector<SignVector>& cocircuits, int n, int r);

inline AxiomReport validate_axioms(const OrientedMatroid& m) {
  return validate_axioms(m.cocircuits, m.n, m.r);
}

// Contraction by a set e1 (ascending element ids, |e1| < r): keeps cocircuits that
// vanish on all of e1, restricted to the remaining elements (reindexed ascending).
OrientedMatroid contraction(const OrientedMatroid& m, const std::vector<int>& e1);

// Deletion of a single element (requires n-1 >= r): drops cocircuits vanishing on e,
// restricts the rest.
OrientedMatroid deletion(const OrientedMatroid& m, int e);

// All rank-2 contraction minors: one per (r-2)-subset, ascending lexicographic order.
std::vector<std::pair<std::vector<int>, OrientedMatroid>> colines(const OrientedMatroid& m);

}  // namespace cocirc
