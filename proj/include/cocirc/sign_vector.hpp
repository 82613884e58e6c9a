#pragma once
// Sign vectors over a ground set {0..n-1}: the basic alphabet for cocircuits.
// Values are immutable once built; equality is by content. The canonical
// order (operator<=>) matches byte order of the text form, where '+' < '-' < '0'.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cocirc {

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

char to_char(Sign s);
Sign sign_from_char(char c);  // throws std::invalid_argument on anything but '+', '-', '0'

inline Sign opposite(Sign s) {
  return static_cast<Sign>(-static_cast<std::int8_t>(s));
}

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  static SignVector parse(std::string_view text);  // throws std::invalid_argument
  static SignVector zeros(int n);

  int size() const { return static_cast<int>(signs_.size()); }
  Sign operator[](int e) const { return signs_[static_cast<std::size_t>(e)]; }
  const std::vector<Sign>& signs() const { return signs_; }

  std::string str() const;

  bool operator==(const SignVector&) const = default;
  std::strong_ordering operator<=>(const SignVector& other) const;

 private:
  std::vector<Sign> signs_;
};

// Element indices with nonzero sign, ascending.
std::vector<int> support(const SignVector& x);
// Element indices with zero sign, ascending.
std::vector<int> zero_support(const SignVector& x);
// S(X,Y): elements where x and y carry opposite nonzero signs. Throws on length mismatch.
std::vector<int> separator(const SignVector& x, const SignVector& y);

SignVector negate(const SignVector& x);
// Subvector over `keep` (ascending element ids, each in range); result position i = keep[i].
SignVector restrict_to(const SignVector& x, const std::vector<int>& keep);

// True iff w+ is contained in x+ union y+ and w- in x- union y-.
bool is_crabbed_member(const SignVector& w, const SignVector& x, const SignVector& y);

struct SignVectorHash {
  std::size_t operator()(const SignVector& x) const;
};

}  // namespace cocirc
