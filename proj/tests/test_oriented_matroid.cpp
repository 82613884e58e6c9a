#include <algorithm>

#include "cocirc/combinatorics.hpp"
#include "cocirc/generators.hpp"
#include "cocirc/oriented_matroid.hpp"
#include "doctest.h"

using namespace cocirc;

namespace {

std::vector<std::string> strings_of(const OrientedMatroid& m) {
  std::vector<std::string> out;
  for (const auto& c : m.cocircuits) out.push_back(c.str());
  return out;
}

}  // namespace

TEST_CASE("cyclic arrangement on three elements in the plane") {
  const OrientedMatroid m = cyclic(3, 2);
  CHECK(m.n == 3);
  CHECK(m.r == 2);
  CHECK(strings_of(m) ==
        std::vector<std::string>{"++0", "+0-", "--0", "-0+", "0++", "0--"});
  CHECK(validate_axioms(m).ok());
}

TEST_CASE("cyclic arrangements satisfy the axioms across shapes") {
  for (int r = 2; r <= 4; ++r) {
    for (int n = r; n <= 7; ++n) {
      const OrientedMatroid m = cyclic(n, r);
      CAPTURE(n);
      CAPTURE(r);
      CHECK(static_cast<std::int64_t>(m.cocircuits.size()) ==
            2 * binomial(n, r - 1));
      CHECK(validate_axioms(m).ok());
    }
  }
}

TEST_CASE("make_oriented_matroid sorts and checks shape") {
  const OrientedMatroid m = make_oriented_matroid(
      3, 2,
      {SignVector::parse("0--"), SignVector::parse("++0"),
       SignVector::parse("--0"), SignVector::parse("0++"),
       SignVector::parse("-0+"), SignVector::parse("+0-")});
  CHECK(std::is_sorted(m.cocircuits.begin(), m.cocircuits.end()));
  CHECK_THROWS(make_oriented_matroid(3, 2, {SignVector::parse("++")}));
  CHECK_THROWS(make_oriented_matroid(0, 2, {}));
  CHECK_THROWS(make_oriented_matroid(3, 0, {}));
}

TEST_CASE("dropping one cocircuit breaks the two-per-support rule") {
  OrientedMatroid m = cyclic(4, 2);
  std::vector<SignVector> damaged(m.cocircuits.begin(),
                                  m.cocircuits.end() - 1);
  const AxiomReport report = validate_axioms(damaged, m.n, m.r);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.c2_ok);
  CHECK_FALSE(report.witnesses.empty());
}

TEST_CASE("a vector of the wrong support size breaks the support rule") {
  OrientedMatroid m = cyclic(4, 2);
  std::vector<SignVector> damaged = m.cocircuits;
  damaged[0] = SignVector::parse("++++");
  std::sort(damaged.begin(), damaged.end());
  const AxiomReport report = validate_axioms(damaged, m.n, m.r);
  CHECK_FALSE(report.c1_ok);
}

TEST_CASE("a sign flip that keeps both support rules breaks elimination") {
  // Flip one coordinate of one cocircuit pair so supports stay intact.
  OrientedMatroid m = cyclic(5, 3);
  std::vector<SignVector> damaged = m.cocircuits;
  std::vector<Sign> signs = damaged[0].signs();
  const std::vector<int> sup = support(damaged[0]);
  signs[sup[0]] = opposite(signs[sup[0]]);
  const SignVector flipped{signs};
  // Keep c2 true: flip the partner the same way.
  const SignVector old_neg = negate(damaged[0]);
  for (auto& c : damaged) {
    if (c == old_neg) c = negate(flipped);
  }
  damaged[0] = flipped;
  std::sort(damaged.begin(), damaged.end());
  const AxiomReport report = validate_axioms(damaged, m.n, m.r);
  CHECK(report.c1_ok);
  CHECK(report.c2_ok);
  CHECK_FALSE(report.c3_ok);
}

TEST_CASE("contraction drops to a smaller rank on the zero set") {
  const OrientedMatroid m = cyclic(5, 3);
  const OrientedMatroid c = contraction(m, {0});
  CHECK(c.n == 4);
  CHECK(c.r == 2);
  CHECK(validate_axioms(c).ok());
}

TEST_CASE("deletion removes one element and keeps the rank") {
  const OrientedMatroid m = cyclic(5, 3);
  const OrientedMatroid d = deletion(m, 2);
  CHECK(d.n == 4);
  CHECK(d.r == 3);
  CHECK(validate_axioms(d).ok());
}

TEST_CASE("colines are the rank two contractions") {
  const OrientedMatroid m = cyclic(5, 3);
  const auto cs = colines(m);
  CHECK(static_cast<std::int64_t>(cs.size()) == binomial(5, 1));
  for (const auto& [contracted, sub] : cs) {
    CHECK(static_cast<int>(contracted.size()) == m.r - 2);
    CHECK(sub.r == 2);
    CHECK(sub.n == m.n - (m.r - 2));
    // A rank two arrangement is a cycle: two cocircuits per element pair
    // position, 2 * (n - r + 2) in total.
    CHECK(static_cast<int>(sub.cocircuits.size()) == 2 * (m.n - m.r + 2));
    CHECK(validate_axioms(sub).ok());
  }
}
