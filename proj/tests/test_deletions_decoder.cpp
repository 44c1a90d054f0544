#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helberg/align.hpp"
#include "helberg/code.hpp"
#include "helberg/deletions_decoder.hpp"
#include "helberg/errors.hpp"
#include "test_util.hpp"

using namespace helberg;
using test::all_words;
using test::draw;
using test::random_word;

namespace {

bool is_subsequence(const Word& small, const Word& big) {
  return lcs_length(small, big) == small.len();
}

}  // namespace

TEST_CASE("recovers deleted symbols when a matching word exists") {
  CHECK(decode_deletions(parse_word("001", 2), 4, 12, 2, 3) ==
        parse_word("0011", 2));
  CHECK(decode_deletions(Word{}, 0, 0, 2, 3) == Word{});

  SUBCASE("zero deletions is a moment check") {
    CHECK(decode_deletions(parse_word("0011", 2), 4, 12, 2, 3) ==
          parse_word("0011", 2));
  }
}

TEST_CASE("infeasible inputs still produce a word of the right length") {
  // No supersequence of 0130 reaches moment 832, so the fallback applies.
  CHECK(decode_deletions(parse_word("0130", 4), 5, 832, 4, 2) ==
        parse_word("01303", 4));

  SUBCASE("binary scan-loop words") {
    const Word y = parse_word("00111000101", 2);
    const std::vector<std::string> expect = {"0111001", "0111001", "0011001",
                                             "0011001", "0011001", "0011101",
                                             "0011101"};
    for (std::int64_t j = 1; j <= 7; ++j) {
      const Word sub = y.slice(1, j - 1) + y.slice(j + 1, 7);
      CHECK(format_word(decode_deletions(sub, 7, 108, 2, 3), 2) ==
            expect[static_cast<std::size_t>(j - 1)]);
    }
  }

  SUBCASE("quaternary scan-loop words") {
    const Word y = parse_word("013000103", 4);
    const std::vector<std::string> expect = {"1300013", "0300013", "0100013",
                                             "0130013", "0130013", "0130013",
                                             "0130003"};
    for (std::int64_t j = 1; j <= 7; ++j) {
      const Word sub = y.slice(1, j - 1) + y.slice(j + 1, 7);
      CHECK(format_word(decode_deletions(sub, 7, 13484, 4, 2), 4) ==
            expect[static_cast<std::size_t>(j - 1)]);
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(decode_deletions(parse_word("00110", 2), 4, 12, 2, 3),
                  InvalidParameter);
  CHECK_THROWS_AS(decode_deletions(parse_word("0", 2), 5, 12, 2, 3),
                  InvalidParameter);
  CHECK_THROWS_AS(decode_deletions(Word{3}, 2, 1, 2, 1), InvalidParameter);
}

TEST_CASE("totality and determinism on arbitrary inputs") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 500; ++k) {
    const int q = 2 + static_cast<int>(draw(rng, 3));
    const int d = 1 + static_cast<int>(draw(rng, 3));
    const auto n_target = static_cast<std::size_t>(draw(rng, 9));
    const std::size_t max_cut = std::min<std::size_t>(n_target, d);
    const std::size_t len = n_target - draw(rng, max_cut + 1);
    const Word y = random_word(rng, q, len).prefix(static_cast<std::int64_t>(len));
    Word y_fixed = y;
    while (y_fixed.len() < len) y_fixed.append(0);
    const BigInt m = static_cast<long>(draw(rng, 2000));
    const Word out = decode_deletions(y_fixed, n_target, m, q, d);
    CHECK(out.len() == n_target);
    CHECK(out == decode_deletions(y_fixed, n_target, m, q, d));
  }
}

TEST_CASE("round trip with uniqueness over small codebooks") {
  // Every word is a codeword of the codebook selected by its own exact
  // moment; all deletion patterns of size <= d must come back uniquely.
  for (int q : {2, 3}) {
    for (int d : {1, 2, 3}) {
      const auto w = build_weights(q, d, 8);
      for (std::size_t len : {3u, 5u, 6u}) {
        for (const Word& x : all_words(q, len)) {
          const BigInt mx = moment(x, w);
          std::function<void(Word, int, std::size_t)> drop =
              [&](Word cur, int left, std::size_t lo) {
                const auto cands =
                    decode_deletions_candidates(cur, len, mx, q, d, w);
                REQUIRE(cands.size() == 1);
                CHECK(cands.front() == x);
                if (left == 0) return;
                for (std::size_t j = lo; j <= cur.len(); ++j)
                  drop(delete_at(cur, j), left - 1, j);
              };
          drop(x, d, 1);
        }
      }
    }
  }
}

TEST_CASE("candidate lists are lexicographic supersequences with the moment") {
  std::mt19937_64 rng(53);
  const auto w = build_weights(3, 2, 9);
  for (int k = 0; k < 300; ++k) {
    const auto n_target = static_cast<std::size_t>(4 + draw(rng, 5));
    const std::size_t len = n_target - draw(rng, 3);
    const Word y = random_word(rng, 3, len).prefix(static_cast<std::int64_t>(len));
    Word y_fixed = y;
    while (y_fixed.len() < len) y_fixed.append(0);
    const BigInt m = static_cast<long>(draw(rng, 800));
    const auto cands =
        decode_deletions_candidates(y_fixed, n_target, m, 3, 2, w);
    CHECK(std::is_sorted(cands.begin(), cands.end()));
    for (const Word& c : cands) {
      CHECK(c.len() == n_target);
      CHECK(moment(c, w) == m);
      CHECK(is_subsequence(y_fixed, c));
    }
    // Cross-check against direct enumeration of all words.
    std::vector<Word> expect;
    for (const Word& c : all_words(3, n_target))
      if (moment(c, w) == m && is_subsequence(y_fixed, c)) expect.push_back(c);
    CHECK(cands == expect);
  }
}
