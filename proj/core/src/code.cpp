#include "helberg/code.hpp"

#include <cstdlib>

#include "helberg/errors.hpp"

namespace helberg {

CodeParams::CodeParams(std::size_t n, int d, int q, BigInt r)
    : n_(n), d_(d), q_(q) {
  if (q < 2) throw InvalidParameter("alphabet size must be at least 2");
  if (d < 1) throw InvalidParameter("indel budget must be at least 1");
  if (n < 1) throw InvalidParameter("codeword length must be at least 1");
  weights_ = build_weights(q, d, n + 2);
  modulus_ = weights_.at(static_cast<std::int64_t>(n) + 1);
  r_ = r % modulus_;
  if (r_ < 0) r_ += modulus_;
  residue_reduced_ = (r_ != r);
}

BigInt moment(const Word& x, const WeightTable& w) {
  if (x.len() + 1 > w.size())
    throw LengthMismatch("weight table too short for word of length " +
                         std::to_string(x.len()));
  BigInt m = 0;
  std::int64_t i = 1;
  for (Symbol s : x.symbols()) {
    if (s != 0) m += s * w.at(i);
    ++i;
  }
  return m;
}

BigInt partial_moment(const BigInt& total, const Word& known_suffix,
                      std::size_t n_prime, const CodeParams& params) {
  if (n_prime + known_suffix.len() != params.n())
    throw LengthMismatch("suffix does not cover positions n'+1 .. n");
  BigInt m = total;
  std::int64_t i = static_cast<std::int64_t>(n_prime) + 1;
  for (Symbol s : known_suffix.symbols()) {
    if (s != 0) m -= s * params.weights().at(i);
    ++i;
  }
  return m;
}

bool is_codeword(const Word& x, const CodeParams& params) {
  if (x.len() != params.n())
    throw LengthMismatch("word length " + std::to_string(x.len()) +
                         " does not match codebook length " +
                         std::to_string(params.n()));
  return moment(x, params.weights()) % params.modulus() == params.r();
}

void for_each_codeword(const CodeParams& params,
                       const std::function<void(const Word&)>& fn) {
  const std::size_t n = params.n();
  const Symbol p = params.p();
  const WeightTable& w = params.weights();
  const BigInt& m = params.modulus();

  // Lexicographic odometer with an incrementally maintained residue.
  // Bumping position i resets an all-p suffix, so the residue delta per
  // position is constant: w_i - p * (w_{i+1} + ... + w_n), reduced mod m.
  std::vector<BigInt> delta(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt d = w.at(static_cast<std::int64_t>(i)) -
               BigInt(p) * (w.prefix_sum(static_cast<std::int64_t>(n)) -
                            w.prefix_sum(static_cast<std::int64_t>(i)));
    d %= m;
    if (d < 0) d += m;
    delta[i] = d;
  }

  std::vector<Symbol> syms(n, 0);
  BigInt residue = 0;
  for (;;) {
    if (residue == params.r()) fn(Word(syms));
    // Advance to the lexicographic successor.
    std::size_t i = n;
    while (i >= 1 && syms[i - 1] == p) --i;
    if (i == 0) break;
    syms[i - 1] += 1;
    for (std::size_t j = i; j < n; ++j) syms[j] = 0;
    residue += delta[i];
    if (residue >= m) residue -= m;
  }
}

std::vector<Word> enumerate_codebook(const CodeParams& params) {
  std::vector<Word> book;
  for_each_codeword(params, [&](const Word& x) { book.push_back(x); });
  return book;
}

ErrorBudget compute_budget(std::size_t len_y, const CodeParams& params) {
  const auto n = static_cast<std::int64_t>(params.n());
  const auto len = static_cast<std::int64_t>(len_y);
  const int d = params.d();
  if (std::llabs(len - n) > d)
    throw InvalidParameter("received length " + std::to_string(len_y) +
                           " is more than d from the codeword length");
  ErrorBudget b;
  b.max_insertions = static_cast<int>((d + len - n) / 2);
  b.max_deletions = static_cast<int>((d - len + n) / 2);
  return b;
}

}  // namespace helberg
