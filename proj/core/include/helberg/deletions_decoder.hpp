#pragma once

#include <cstddef>
#include <vector>

#include "helberg/integer.hpp"
#include "helberg/weights.hpp"
#include "helberg/word.hpp"

namespace helberg {

/// Deletions-only decoder: rebuilds a word of length n_target whose moment
/// equals exact_moment (as an exact integer, not a residue) and which
/// contains y_prime as a subsequence, i.e. inverts k = n_target - len(y_prime)
/// deletions. Within a codebook such a word is unique whenever one exists.
///
/// The search walks candidate words position by position in lexicographic
/// order, consuming y_prime greedily and pruning on the attainable moment
/// range, so the first hit is the lexicographically smallest match and the
/// cost is polynomial in n_target for fixed k and q.
///
/// When no word matches (the decoder is routinely handed such inputs while
/// the caller explores a wrong branch), the result is still a word of the
/// correct length: y_prime with k copies of the largest symbol appended.
///
/// Requires len(y_prime) <= n_target and k <= d.
Word decode_deletions(const Word& y_prime, std::size_t n_target,
                      const BigInt& exact_moment, int q, int d);

/// As above with a caller-supplied weight table covering w_0..w_{n_target}
/// for the same (q, d).
Word decode_deletions(const Word& y_prime, std::size_t n_target,
                      const BigInt& exact_moment, int q, int d,
                      const WeightTable& w);

/// Every word of length n_target with the exact moment that contains
/// y_prime as a subsequence, in lexicographic order. Exposed so the
/// verification suites can assert uniqueness directly.
std::vector<Word> decode_deletions_candidates(const Word& y_prime,
                                              std::size_t n_target,
                                              const BigInt& exact_moment,
                                              int q, int d);

std::vector<Word> decode_deletions_candidates(const Word& y_prime,
                                              std::size_t n_target,
                                              const BigInt& exact_moment,
                                              int q, int d,
                                              const WeightTable& w);

}  // namespace helberg
