#include "helberg/deletions_decoder.hpp"

#include <optional>

#include "helberg/errors.hpp"

namespace helberg {

namespace {

// Depth-first walk over all length-n words containing y' as a subsequence,
// in lexicographic order, keeping only those whose moment is exactly the
// target. y' is matched greedily: a word contains y' iff greedy matching
// succeeds, and greedy matching leaves the most room for the remainder.
//
// Pruning uses the exact attainable range of completions. With `shift`
// symbols inserted so far and `matched` symbols of y' consumed, the
// remaining y' symbols packed into the earliest free positions give the
// minimum (weights increase with position); topping the remaining positions
// up with p gives the maximum.
class ReinsertionSearch {
 public:
  ReinsertionSearch(const Word& y_prime, std::size_t n_target,
                    const BigInt& target, int q, const WeightTable& w)
      : y_(y_prime.symbols()),
        n_(n_target),
        target_(target),
        p_(q - 1),
        w_(w),
        k_(n_target - y_prime.len()) {
    // packed_[shift][m] = sum_{j>m} y'_j * w_{j+shift}
    packed_.assign(k_ + 1, std::vector<BigInt>(y_.size() + 1));
    for (std::size_t shift = 0; shift <= k_; ++shift) {
      packed_[shift][y_.size()] = 0;
      for (std::size_t m = y_.size(); m-- > 0;) {
        packed_[shift][m] =
            packed_[shift][m + 1] +
            BigInt(y_[m]) * w_.at(static_cast<std::int64_t>(m + 1 + shift));
      }
    }
    // headroom_[shift] = p * (W(n) - W(len(y') + shift))
    headroom_.resize(k_ + 1);
    const BigInt total = w_.prefix_sum(static_cast<std::int64_t>(n_));
    for (std::size_t shift = 0; shift <= k_; ++shift)
      headroom_[shift] =
          BigInt(p_) *
          (total - w_.prefix_sum(static_cast<std::int64_t>(y_.size() + shift)));
    out_.resize(n_);
  }

  // first_only: stop at the lexicographically smallest match.
  std::vector<Word> run(bool first_only) {
    first_only_ = first_only;
    found_.clear();
    if (n_ == 0) {
      if (target_ == 0) found_.push_back(Word{});
      return std::move(found_);
    }
    walk(0, 0, 0);
    return std::move(found_);
  }

 private:
  bool walk(std::size_t pos, std::size_t matched, const BigInt& cur) {
    if (pos == n_) {
      if (matched == y_.size() && cur == target_) {
        found_.emplace_back(std::vector<Symbol>(out_.begin(), out_.end()));
        return first_only_;
      }
      return false;
    }
    for (Symbol s = 0; s <= p_; ++s) {
      const bool takes = matched < y_.size() && s == y_[matched];
      const std::size_t matched2 = matched + (takes ? 1 : 0);
      const std::size_t rest = y_.size() - matched2;
      if (rest > n_ - (pos + 1)) continue;  // no room for the rest of y'
      const std::size_t shift = (pos + 1) - matched2;
      if (shift > k_) continue;  // would need more than k insertions
      BigInt cur2 = cur;
      if (s != 0) cur2 += BigInt(s) * w_.at(static_cast<std::int64_t>(pos + 1));
      const BigInt lo = cur2 + packed_[shift][matched2];
      if (target_ < lo) continue;
      if (target_ > lo + headroom_[shift]) continue;
      out_[pos] = s;
      if (walk(pos + 1, matched2, cur2)) return true;
    }
    return false;
  }

  std::span<const Symbol> y_;
  std::size_t n_;
  BigInt target_;
  Symbol p_;
  const WeightTable& w_;
  std::size_t k_;
  std::vector<std::vector<BigInt>> packed_;
  std::vector<BigInt> headroom_;
  std::vector<Symbol> out_;
  std::vector<Word> found_;
  bool first_only_ = false;
};

void check_input(const Word& y_prime, std::size_t n_target, int q, int d,
                 const WeightTable& w) {
  if (y_prime.len() > n_target)
    throw InvalidParameter("received word longer than the target length");
  const std::size_t k = n_target - y_prime.len();
  if (k > static_cast<std::size_t>(d))
    throw InvalidParameter("would need " + std::to_string(k) +
                           " re-insertions but the budget is " +
                           std::to_string(d));
  if (w.size() < n_target + 1)
    throw LengthMismatch("weight table too short for the target length");
  if (w.q() != q || w.d() != d)
    throw InvalidParameter("weight table built for different parameters");
  for (Symbol s : y_prime.symbols())
    if (s < 0 || s >= q)
      throw InvalidParameter("received word has symbols outside the alphabet");
}

Word fallback_word(const Word& y_prime, std::size_t n_target, int q) {
  Word out = y_prime;
  while (out.len() < n_target) out.append(q - 1);
  return out;
}

}  // namespace

Word decode_deletions(const Word& y_prime, std::size_t n_target,
                      const BigInt& exact_moment, int q, int d,
                      const WeightTable& w) {
  check_input(y_prime, n_target, q, d, w);
  ReinsertionSearch search(y_prime, n_target, exact_moment, q, w);
  auto found = search.run(/*first_only=*/true);
  if (!found.empty()) return std::move(found.front());
  return fallback_word(y_prime, n_target, q);
}

Word decode_deletions(const Word& y_prime, std::size_t n_target,
                      const BigInt& exact_moment, int q, int d) {
  const WeightTable w = build_weights(q, d, n_target + 1);
  return decode_deletions(y_prime, n_target, exact_moment, q, d, w);
}

std::vector<Word> decode_deletions_candidates(const Word& y_prime,
                                              std::size_t n_target,
                                              const BigInt& exact_moment,
                                              int q, int d,
                                              const WeightTable& w) {
  check_input(y_prime, n_target, q, d, w);
  ReinsertionSearch search(y_prime, n_target, exact_moment, q, w);
  return search.run(/*first_only=*/false);
}

std::vector<Word> decode_deletions_candidates(const Word& y_prime,
                                              std::size_t n_target,
                                              const BigInt& exact_moment,
                                              int q, int d) {
  const WeightTable w = build_weights(q, d, n_target + 1);
  return decode_deletions_candidates(y_prime, n_target, exact_moment, q, d, w);
}

}  // namespace helberg
