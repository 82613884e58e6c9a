#include "cocirc/oriented_matroid.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cocirc/combinatorics.hpp"

namespace cocirc {

OrientedMatroid make_oriented_matroid(int n, int r, std::vector<SignVector> cocircuits) {
  if (n < 1) throw std::invalid_argument("ground set must be nonempty");
  if (r < 1) throw std::invalid_argument("rank must be positive");
  for (const SignVector& x : cocircuits) {
    if (x.size() != n) throw std::invalid_argument("cocircuit length does not match ground set");
  }
  std::sort(cocircuits.begin(), cocircuits.end());
  return OrientedMatroid{n, r, std::move(cocircuits)};
}

namespace {

std::string describe(const SignVector& x) { return x.str(); }

std::string describe_set(const std::vector<int>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

AxiomReport validate_axioms(const std::vector<SignVector>& cocircuits, int n, int r) {
  AxiomReport report;
  report.c1_ok = true;
  report.c2_ok = true;
  report.c3_ok = true;

  const int support_size = n - r + 1;
  if (support_size < 1) {
    report.c1_ok = false;
    report.witnesses.push_back("c1: rank larger than ground set leaves no support size");
    report.c2_ok = false;
    report.c3_ok = false;
    return report;
  }

  for (const SignVector& x : cocircuits) {
    if (x.size() != n) {
      report.c1_ok = false;
      report.witnesses.push_back("c1: cocircuit " + describe(x) + " has wrong length");
      continue;
    }
    if (static_cast<int>(support(x).size()) != support_size) {
      report.c1_ok = false;
      report.witnesses.push_back("c1: cocircuit " + describe(x) + " has support size " +
                                 std::to_string(support(x).size()) + ", expected " +
                                 std::to_string(support_size));
    }
  }

  // c2: group by support, then demand exactly one +/- pair per (n-r+1)-subset.
  std::map<std::vector<int>, std::vector<const SignVector*>> by_support;
  for (const SignVector& x : cocircuits) {
    if (x.size() != n) continue;
    by_support[support(x)].push_back(&x);
  }
  for_each_combination(n, support_size, [&](const std::vector<int>& subset) {
    auto it = by_support.find(subset);
    const std::size_t count = it == by_support.end() ? 0 : it->second.size();
    if (count != 2) {
      report.c2_ok = false;
      report.witnesses.push_back("c2: support " + describe_set(subset) + " has " +
                                 std::to_string(count) + " cocircuits, expected 2");
      return;
    }
    const SignVector& a = *it->second[0];
    const SignVector& b = *it->second[1];
    if (negate(a) != b) {
      report.c2_ok = false;
      report.witnesses.push_back("c2: support " + describe_set(subset) + " members " +
                                 describe(a) + " and " + describe(b) + " are not negatives");
    }
  });

  // c3: for every pair except (X, -X) and every separator element, some cocircuit
  // eliminates it while staying inside the composed signs. The pair (X, -X) is
  // excluded: any eliminating Z would need a zero support of size r, which c1
  // forbids.
  for (std::size_t i = 0; i < cocircuits.size() && report.c3_ok; ++i) {
    for (std::size_t j = 0; j < cocircuits.size() && report.c3_ok; ++j) {
      const SignVector& x = cocircuits[i];
      const SignVector& y = cocircuits[j];
      if (x.size() != n || y.size() != n) continue;
      if (y == negate(x)) continue;
      for (int e : separator(x, y)) {
        bool found = false;
        for (const SignVector& z : cocircuits) {
          if (z.size() != n || z[e] != Sign::zero) continue;
          bool conformal = true;
          for (int f = 0; f < n; ++f) {
            if (f == e || z[f] == Sign::zero) continue;
            if (z[f] != x[f] && z[f] != y[f]) {
              conformal = false;
              break;
            }
          }
          if (conformal) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.c3_ok = false;
          report.witnesses.push_back("c3: no eliminating cocircuit for " + describe(x) + ", " +
                                     describe(y) + " at element " + std::to_string(e));
          break;
        }
      }
    }
  }

  return report;
}

OrientedMatroid contraction(const OrientedMatroid& m, const std::vector<int>& e1) {
  if (static_cast<int>(e1.size()) >= m.r)
    throw std::invalid_argument("contraction: set size must be below the rank");
  int prev = -1;
  for (int e : e1) {
    if (e <= prev) throw std::invalid_argument("contraction: elements not strictly ascending");
    if (e < 0 || e >= m.n) throw std::invalid_argument("contraction: element out of range");
    prev = e;
  }

  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(m.n) - e1.size());
  std::size_t at = 0;
  for (int e = 0; e < m.n; ++e) {
    if (at < e1.size() && e1[at] == e) {
      ++at;
      continue;
    }
    keep.push_back(e);
  }

  std::vector<SignVector> rest;
  for (const SignVector& x : m.cocircuits) {
    bool vanishes = true;
    for (int e : e1) {
      if (x[e] != Sign::zero) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) rest.push_back(restrict_to(x, keep));
  }
  return make_oriented_matroid(m.n - static_cast<int>(e1.size()),
                               m.r - static_cast<int>(e1.size()), std::move(rest));
}

OrientedMatroid deletion(const OrientedMatroid& m, int e) {
  if (e < 0 || e >= m.n) throw std::invalid_argument("deletion: element out of range");
  if (m.n - 1 < m.r) throw std::invalid_argument("deletion: would drop below the rank");

  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(m.n) - 1);
  for (int f = 0; f < m.n; ++f)
    if (f != e) keep.push_back(f);

  std::vector<SignVector> rest;
  for (const SignVector& x : m.cocircuits) {
    if (x[e] != Sign::zero) rest.push_back(restrict_to(x, keep));
  }
  return make_oriented_matroid(m.n - 1, m.r, std::move(rest));
}

std::vector<std::pair<std::vector<int>, OrientedMatroid>> colines(const OrientedMatroid& m) {
  std::vector<std::pair<std::vector<int>, OrientedMatroid>> out;
  if (m.r < 2) return out;
  for_each_combination(m.n, m.r - 2, [&](const std::vector<int>& subset) {
    out.emplace_back(subset, contraction(m, subset));
  });
  return out;
}

}  // namespace cocirc
