#include "helberg/weights.hpp"

#include "helberg/errors.hpp"

namespace helberg {

namespace {
const BigInt kZero = 0;
}

const BigInt& WeightTable::at(std::int64_t i) const {
  if (i <= 0) return kZero;
  if (static_cast<std::size_t>(i) >= values_.size())
    throw LengthMismatch("weight table too short for index " +
                         std::to_string(i));
  return values_[static_cast<std::size_t>(i)];
}

const BigInt& WeightTable::prefix_sum(std::int64_t c) const {
  if (c <= 0) return kZero;
  if (static_cast<std::size_t>(c) >= sums_.size())
    throw LengthMismatch("weight table too short for prefix sum " +
                         std::to_string(c));
  return sums_[static_cast<std::size_t>(c)];
}

WeightTable build_weights(int q, int d, std::size_t count) {
  if (q < 2) throw InvalidParameter("alphabet size must be at least 2");
  if (d < 1) throw InvalidParameter("indel budget must be at least 1");
  if (count < 1) throw InvalidParameter("weight table needs at least w_0");

  WeightTable table;
  table.q_ = q;
  table.d_ = d;
  table.values_.resize(count);
  table.sums_.resize(count);
  const BigInt p = q - 1;

  table.values_[0] = 0;
  table.sums_[0] = 0;
  // Running window sum of the last d weights; indices <= 0 contribute 0.
  BigInt window = 0;
  for (std::size_t i = 1; i < count; ++i) {
    table.values_[i] = 1 + p * window;
    table.sums_[i] = table.sums_[i - 1] + table.values_[i];
    window += table.values_[i];
    if (i >= static_cast<std::size_t>(d))
      window -= table.values_[i - static_cast<std::size_t>(d)];
  }
  return table;
}

}  // namespace helberg
