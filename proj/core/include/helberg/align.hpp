#pragma once

#include <cstdint>
#include <string>

#include "helberg/word.hpp"

namespace helberg {

/// Length of the longest common subsequence, exact quadratic DP.
std::size_t lcs_length(const Word& s1, const Word& s2);

/// Minimum number of insertions plus deletions transforming s1 into s2:
/// len(s1) + len(s2) - 2*lcs(s1, s2).
std::size_t indel_distance(const Word& s1, const Word& s2);

/// Result of the suffix-window scan: either a finite window length or
/// Unreachable. Unreachable compares greater than every finite value so that
/// max() picks it, and it is a distinct state rather than a sentinel integer.
class VValue {
 public:
  static VValue unreachable() { return VValue(true, 0); }
  static VValue finite(std::int64_t v) { return VValue(false, v); }

  bool is_unreachable() const noexcept { return unreachable_; }
  /// Finite value; throws InvalidParameter when unreachable.
  std::int64_t value() const;

  bool operator==(const VValue& o) const noexcept {
    return unreachable_ == o.unreachable_ &&
           (unreachable_ || value_ == o.value_);
  }
  bool operator<(const VValue& o) const noexcept {
    if (unreachable_) return false;
    if (o.unreachable_) return true;
    return value_ < o.value_;
  }
  bool operator>(const VValue& o) const noexcept { return o < *this; }
  bool operator<=(const VValue& o) const noexcept { return !(o < *this); }
  bool operator>=(const VValue& o) const noexcept { return !(*this < o); }

  bool equals(std::int64_t v) const noexcept {
    return !unreachable_ && value_ == v;
  }
  bool at_least(std::int64_t v) const noexcept {
    return unreachable_ || value_ >= v;
  }

  /// "inf" or the decimal value.
  std::string str() const;

 private:
  VValue(bool unreachable, std::int64_t v)
      : unreachable_(unreachable), value_(v) {}
  bool unreachable_;
  std::int64_t value_;
};

/// Smallest v >= 0 such that lcs(candidate, y[len(y)-v+1 : len(y)]) reaches
/// the threshold, or Unreachable when no suffix of y does. At the returned v
/// the lcs equals the threshold exactly.
VValue compute_v(const Word& candidate, const Word& y, std::int64_t threshold);

/// Copy of s with the symbol at 1-based position j removed.
Word delete_at(const Word& s, std::size_t j);

/// Copy of s with sym inserted so that it lands at 1-based position j
/// (1 <= j <= len(s) + 1).
Word insert_at(const Word& s, std::size_t j, Symbol sym);

}  // namespace helberg
