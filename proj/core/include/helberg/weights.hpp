#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "helberg/integer.hpp"

namespace helberg {

/// Weight sequence for alphabet size q and indel budget d:
///
///   w_i = 0                                   for i <= 0
///   w_i = 1 + (q-1) * (w_{i-1} + ... + w_{i-d})  for i >= 1
///
/// For q = 2, d = 1 this degenerates to w_i = i. Values are strictly
/// increasing from index 1 and grow geometrically, hence BigInt storage.
/// Prefix sums are precomputed because the decoder repeatedly needs
/// sum_{i=1..c} w_i.
class WeightTable {
 public:
  WeightTable() = default;

  /// Number of stored values (indices 0 .. size()-1).
  std::size_t size() const noexcept { return values_.size(); }

  /// w_i; zero for i <= 0, throws LengthMismatch past the table end.
  const BigInt& at(std::int64_t i) const;

  /// sum_{i=1..c} w_i; zero for c <= 0, throws LengthMismatch past the end.
  const BigInt& prefix_sum(std::int64_t c) const;

  int q() const noexcept { return q_; }
  int d() const noexcept { return d_; }

  friend WeightTable build_weights(int q, int d, std::size_t count);
  bool operator==(const WeightTable& other) const {
    return values_ == other.values_;
  }

 private:
  int q_ = 0;
  int d_ = 0;
  std::vector<BigInt> values_;
  std::vector<BigInt> sums_;  // sums_[c] = w_1 + ... + w_c
};

/// Builds w_0 .. w_{count-1} exactly. Requires q >= 2, d >= 1, count >= 1.
WeightTable build_weights(int q, int d, std::size_t count);

}  // namespace helberg
