#pragma once

#include "helberg/code.hpp"
#include "helberg/integer.hpp"
#include "helberg/weights.hpp"
#include "helberg/word.hpp"

namespace helberg {

/// Deletes `deletions` symbols from y so that the moment of the result is
/// the minimum over all ways to delete that many symbols.
///
/// Each round removes the leftmost symbol of the longest nonincreasing
/// suffix: the lowest i > 0 with y_j >= y_{j+1} for all i <= j < len(y).
/// The scan is right-to-left, O(len) per round. Note the comparison is
/// non-strict; stopping at the first equal neighbor can strand a large
/// symbol to the left (e.g. 53321 with one deletion must drop the 5).
Word minimize_moment_deletions(const Word& y, int deletions,
                               const WeightTable& w);

/// Exact moment of the transmitted codeword, recovered from its corruption
/// before decoding. The moment of any codeword lies in {r, r + modulus};
/// deleting budget.max_insertions symbols from y with the minimizing rule
/// above lands at or below r exactly when the codeword's moment is r.
/// If y has fewer symbols than the insertion bound, every symbol is deleted
/// (the minimum over at-most-a deletions is still attained).
BigInt recover_moment(const Word& y, const CodeParams& params,
                      const ErrorBudget& budget);

}  // namespace helberg
