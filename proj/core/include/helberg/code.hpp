#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "helberg/integer.hpp"
#include "helberg/weights.hpp"
#include "helberg/word.hpp"

namespace helberg {

/// Parameters of one codebook: words of length n over {0,...,q-1} whose
/// moment sum_i x_i*w_i has residue r modulo w_{n+1}, correcting up to d
/// insertions/deletions in total.
///
/// The residue handed to the constructor is reduced into [0, modulus); use
/// residue_was_reduced() to detect that an out-of-range value was given.
class CodeParams {
 public:
  CodeParams(std::size_t n, int d, int q, BigInt r);

  std::size_t n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int q() const noexcept { return q_; }
  /// Largest symbol value, q - 1.
  int p() const noexcept { return q_ - 1; }
  const BigInt& r() const noexcept { return r_; }
  /// The codebook modulus w_{n+1}.
  const BigInt& modulus() const noexcept { return modulus_; }
  /// w_0 .. w_{n+1}.
  const WeightTable& weights() const noexcept { return weights_; }
  bool residue_was_reduced() const noexcept { return residue_reduced_; }

 private:
  std::size_t n_;
  int d_;
  int q_;
  BigInt r_;
  WeightTable weights_;
  BigInt modulus_;
  bool residue_reduced_ = false;
};

/// Upper bounds on how many insertions (a) and deletions (b) can have
/// occurred, derived from the received length. a + b is d or d - 1; in the
/// latter case the decoder removes one extra symbol first so that a + b = d.
struct ErrorBudget {
  int max_insertions = 0;  // a
  int max_deletions = 0;   // b
  int total() const noexcept { return max_insertions + max_deletions; }
};

/// Moment sum_{i=1..len(x)} x_i * w_i. Throws LengthMismatch when the table
/// has fewer than len(x) + 1 entries.
BigInt moment(const Word& x, const WeightTable& w);

/// Moment of the undecoded prefix x[1:n']: total minus the contribution of
/// the known suffix occupying positions n'+1 .. n. The suffix length must be
/// n - n'. May be negative, which callers treat as proof of an impossible
/// branch.
BigInt partial_moment(const BigInt& total, const Word& known_suffix,
                      std::size_t n_prime, const CodeParams& params);

/// True iff len(x) = n and moment(x) == r (mod modulus).
bool is_codeword(const Word& x, const CodeParams& params);

/// Calls fn for every codeword in lexicographic order. Enumerates all q^n
/// words; intended for desk-scale parameters (q^n <= 2^24 or so).
void for_each_codeword(const CodeParams& params,
                       const std::function<void(const Word&)>& fn);

/// Materialized for_each_codeword.
std::vector<Word> enumerate_codebook(const CodeParams& params);

/// a = floor((d + len_y - n) / 2), b = floor((d - len_y + n) / 2).
/// Throws InvalidParameter when |len_y - n| > d.
ErrorBudget compute_budget(std::size_t len_y, const CodeParams& params);

}  // namespace helberg
