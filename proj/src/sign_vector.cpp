#include "cocirc/sign_vector.hpp"

#include <stdexcept>

namespace cocirc {

char to_char(Sign s) {
  switch (s) {
    case Sign::plus:
      return '+';
    case Sign::minus:
      return '-';
    case Sign::zero:
      return '0';
  }
  throw std::invalid_argument("corrupt sign value");
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+':
      return Sign::plus;
    case '-':
      return Sign::minus;
    case '0':
      return Sign::zero;
    default:
      throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char c : text) signs.push_back(sign_from_char(c));
  return SignVector(std::move(signs));
}

SignVector SignVector::zeros(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  return SignVector(std::vector<Sign>(static_cast<std::size_t>(n), Sign::zero));
}

std::string SignVector::str() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(to_char(s));
  return out;
}

namespace {
// Rank of a sign in the canonical (text-byte) order: '+' < '-' < '0'.
inline int char_rank(Sign s) {
  switch (s) {
    case Sign::plus:
      return 0;
    case Sign::minus:
      return 1;
    case Sign::zero:
      return 2;
  }
  return 3;
}
}  // namespace

std::strong_ordering SignVector::operator<=>(const SignVector& other) const {
  const std::size_t common = std::min(signs_.size(), other.signs_.size());
  for (std::size_t i = 0; i < common; ++i) {
    int a = char_rank(signs_[i]);
    int b = char_rank(other.signs_[i]);
    if (a != b) return a <=> b;
  }
  return signs_.size() <=> other.signs_.size();
}

std::vector<int> support(const SignVector& x) {
  std::vector<int> out;
  for (int e = 0; e < x.size(); ++e)
    if (x[e] != Sign::zero) out.push_back(e);
  return out;
}

std::vector<int> zero_support(const SignVector& x) {
  std::vector<int> out;
  for (int e = 0; e < x.size(); ++e)
    if (x[e] == Sign::zero) out.push_back(e);
  return out;
}

std::vector<int> separator(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("separator: length mismatch");
  std::vector<int> out;
  for (int e = 0; e < x.size(); ++e) {
    if (x[e] != Sign::zero && y[e] == opposite(x[e])) out.push_back(e);
  }
  return out;
}

SignVector negate(const SignVector& x) {
  std::vector<Sign> signs;
  signs.reserve(static_cast<std::size_t>(x.size()));
  for (Sign s : x.signs()) signs.push_back(opposite(s));
  return SignVector(std::move(signs));
}

SignVector restrict_to(const SignVector& x, const std::vector<int>& keep) {
  std::vector<Sign> signs;
  signs.reserve(keep.size());
  int prev = -1;
  for (int e : keep) {
    if (e <= prev) throw std::invalid_argument("restrict_to: keep list not strictly ascending");
    if (e < 0 || e >= x.size()) throw std::invalid_argument("restrict_to: element out of range");
    signs.push_back(x[e]);
    prev = e;
  }
  return SignVector(std::move(signs));
}

bool is_crabbed_member(const SignVector& w, const SignVector& x, const SignVector& y) {
  if (w.size() != x.size() || w.size() != y.size())
    throw std::invalid_argument("is_crabbed_member: length mismatch");
  for (int e = 0; e < w.size(); ++e) {
    if (w[e] == Sign::zero) continue;
    if (x[e] != w[e] && y[e] != w[e]) return false;
  }
  return true;
}

std::size_t SignVectorHash::operator()(const SignVector& x) const {
  // FNV-1a over the sign bytes.
  std::size_t h = 1469598103934665603ull;
  for (Sign s : x.signs()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned char>(to_char(s)));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cocirc
