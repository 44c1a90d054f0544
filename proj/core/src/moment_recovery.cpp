#include "helberg/moment_recovery.hpp"

#include <algorithm>
#include <vector>

#include "helberg/errors.hpp"

namespace helberg {

Word minimize_moment_deletions(const Word& y, int deletions,
                               const WeightTable& w) {
  if (deletions < 0) throw InvalidParameter("negative deletion count");
  if (static_cast<std::size_t>(deletions) > y.len())
    throw InvalidParameter("cannot delete " + std::to_string(deletions) +
                           " symbols from a word of length " +
                           std::to_string(y.len()));
  (void)w;  // the minimizing position is weight-independent

  std::vector<Symbol> syms(y.symbols().begin(), y.symbols().end());
  for (int round = 0; round < deletions; ++round) {
    // Leftmost start of the nonincreasing suffix. The comparison must be
    // non-strict: with 53321 the whole word is nonincreasing and the 5 is
    // the right symbol to drop.
    std::size_t i = syms.size();
    while (i > 1 && syms[i - 2] >= syms[i - 1]) --i;
    syms.erase(syms.begin() + (i - 1));
  }
  return Word(std::move(syms));
}

BigInt recover_moment(const Word& y, const CodeParams& params,
                      const ErrorBudget& budget) {
  // In degenerate parameter ranges (n close to d) the insertion bound can
  // exceed the received length; deleting everything still attains the
  // minimum over at-most-a deletions.
  const int del = std::min<int>(budget.max_insertions,
                                static_cast<int>(y.len()));
  const Word y_tilde = minimize_moment_deletions(y, del, params.weights());
  const BigInt m_tilde = moment(y_tilde, params.weights());
  if (m_tilde <= params.r()) return params.r();
  return params.r() + params.modulus();
}

}  // namespace helberg
