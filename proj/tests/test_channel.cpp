#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "helberg/align.hpp"
#include "helberg/channel.hpp"
#include "helberg/errors.hpp"
#include "test_util.hpp"

using namespace helberg;
using test::all_words;

TEST_CASE("plans apply left to right") {
  const Word x = parse_word("0011110001", 2);
  CorruptionPlan plan;
  plan.edits = {{Edit::Kind::Delete, 4, 0},
                {Edit::Kind::Insert, 10, 0},
                {Edit::Kind::Insert, 11, 1}};
  CHECK(corrupt(x, plan) == parse_word("00111000101", 2));
  CHECK(plan.insertions() == 2);
  CHECK(plan.deletions() == 1);
  CHECK(plan.str() == "D4;I10:0;I11:1");

  CorruptionPlan plan2;
  plan2.edits = {{Edit::Kind::Delete, 9, 0}, {Edit::Kind::Insert, 9, 0}};
  CHECK(corrupt(parse_word("1021210222", 3), plan2) ==
        parse_word("1021210202", 3));

  CHECK(corrupt(x, CorruptionPlan{}) == x);
  CHECK(CorruptionPlan{}.str() == "");

  CorruptionPlan bad;
  bad.edits = {{Edit::Kind::Delete, 11, 0}};
  CHECK_THROWS_AS(corrupt(x, bad), InvalidParameter);
}

TEST_CASE("seeded plans are deterministic") {
  const auto a = random_plan(10, 1, 1, 7, 2);
  const auto b = random_plan(10, 1, 1, 7, 2);
  CHECK(a == b);
  CHECK(a.insertions() == 1);
  CHECK(a.deletions() == 1);
  CHECK(random_plan(10, 0, 0, 123, 2).edits.empty());
  CHECK_THROWS_AS(random_plan(3, 0, 4, 1, 2), InvalidParameter);

  SUBCASE("plans apply cleanly to words of the stated length") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto plan = random_plan(8, 2, 1, seed, 3);
      const Word x = Word::repeated(1, 8);
      CHECK(corrupt(x, plan).len() == 9);
    }
  }
}

TEST_CASE("deletion positions are uniform across seeds") {
  // 10^4 single-deletion plans on length 10; each position expected 1000
  // with sigma = 30, so a 5-sigma window is [850, 1150].
  std::map<std::size_t, int> freq;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto plan = random_plan(10, 0, 1, seed, 2);
    REQUIRE(plan.edits.size() == 1);
    freq[plan.edits[0].pos] += 1;
  }
  REQUIRE(freq.size() == 10);
  for (const auto& [pos, count] : freq) {
    CHECK(count > 850);
    CHECK(count < 1150);
  }
}

TEST_CASE("plan enumeration with exact edit counts") {
  SUBCASE("two single deletions on a pair") {
    const auto plans = enumerate_plans(2, 0, 1, 2);
    REQUIRE(plans.size() == 2);
    CHECK(plans[0].edits == std::vector<Edit>{{Edit::Kind::Delete, 1, 0}});
    CHECK(plans[1].edits == std::vector<Edit>{{Edit::Kind::Delete, 2, 0}});
  }
  SUBCASE("four single insertions into one symbol") {
    const auto plans = enumerate_plans(1, 1, 0, 2);
    CHECK(plans.size() == 4);  // positions {1,2} x symbols {0,1}
    std::set<Word> outs;
    for (const auto& p : plans) outs.insert(corrupt(Word{1}, p));
    CHECK(outs == std::set<Word>{Word{0, 1}, Word{1, 0}, Word{1, 1}});
  }
  SUBCASE("deleting more than the word holds yields nothing") {
    CHECK(enumerate_plans(1, 0, 2, 2).empty());
  }
}

TEST_CASE("plans cover exactly the indel ball") {
  // The words reachable with one insertion and one deletion, together with
  // the word itself, are exactly the same-length words at distance <= 2.
  for (const Word& x : {parse_word("010", 2), parse_word("110", 2),
                        parse_word("000", 2)}) {
    std::set<Word> reached{x};
    for_each_plan(3, 1, 1, 2, [&](const CorruptionPlan& p) {
      const Word y = corrupt(x, p);
      CHECK(indel_distance(x, y) <= 2);
      reached.insert(y);
    });
    std::set<Word> expect;
    for (const Word& w : all_words(2, 3))
      if (indel_distance(x, w) <= 2) expect.insert(w);
    CHECK(reached == expect);
  }
}

TEST_CASE("every reachable corruption shows up for mixed budgets") {
  const Word x = parse_word("0120", 3);
  for (int ins = 0; ins <= 2; ++ins) {
    for (int del = 0; del <= 2; ++del) {
      std::set<Word> reached;
      for_each_plan(4, ins, del, 3, [&](const CorruptionPlan& p) {
        const Word y = corrupt(x, p);
        CHECK(y.len() == 4 + static_cast<std::size_t>(ins - del));
        CHECK(indel_distance(x, y) <=
              static_cast<std::size_t>(ins + del));
        reached.insert(y);
      });
      // Direct construction: every deletion subset, then every insertion.
      std::set<Word> expect;
      std::function<void(Word, int)> del_rec = [&](Word cur, int left) {
        if (left == 0) {
          std::function<void(Word, int)> ins_rec = [&](Word cur2, int left2) {
            if (left2 == 0) {
              expect.insert(cur2);
              return;
            }
            for (std::size_t j = 1; j <= cur2.len() + 1; ++j)
              for (Symbol s = 0; s < 3; ++s)
                ins_rec(insert_at(cur2, j, s), left2 - 1);
          };
          ins_rec(cur, ins);
          return;
        }
        for (std::size_t j = 1; j <= cur.len(); ++j)
          del_rec(delete_at(cur, j), left - 1);
      };
      del_rec(x, del);
      CHECK(reached == expect);
    }
  }
}

TEST_CASE("oracle decoding returns the d-ball within the codebook") {
  const CodeParams p(10, 3, 2, 381);
  const Word y = parse_word("00111000101", 2);
  CHECK(oracle_decode(y, p) ==
        std::vector<Word>{parse_word("0011110001", 2)});

  const auto book = enumerate_codebook(p);
  for (const Word& x : book) {
    const auto ball = oracle_decode(x, p);
    CHECK(std::find(ball.begin(), ball.end(), x) != ball.end());
  }
  CHECK(oracle_decode(y, std::span<const Word>(book), 3) ==
        oracle_decode(y, p));
}

TEST_CASE("exhaustive verification of small codebooks") {
  SUBCASE("trivial single-symbol codebook") {
    const auto report =
        verify_exhaustive(CodeParams(1, 1, 2, 0), VerifyMode::full());
    CHECK(report.passed());
    CHECK(report.codebook_size == 1);
    CHECK(report.corruptions_tested == 6);  // identity, 1 del, 4 ins
  }
  SUBCASE("ternary two-indel codebook, full sweep") {
    const auto report =
        verify_exhaustive(CodeParams(6, 2, 3, 17), VerifyMode::full());
    CHECK(report.passed());
    CHECK(report.codebook_size >= 1);
    CHECK(report.oracle_checks == report.corruptions_tested);
    CHECK(report.property_checks > 0);
  }
  SUBCASE("sampled mode is deterministic") {
    const CodeParams p(6, 2, 3, 17);
    const auto r1 = verify_exhaustive(p, VerifyMode::sampled(5, 150));
    const auto r2 = verify_exhaustive(p, VerifyMode::sampled(5, 150));
    CHECK(r1.passed());
    CHECK(r1.corruptions_tested == 150);
    CHECK(r1.to_text() == r2.to_text());
  }
}

TEST_CASE("report text layout") {
  const auto report =
      verify_exhaustive(CodeParams(1, 1, 2, 0), VerifyMode::full());
  CHECK(report.to_text() ==
        "params=n=1,d=1,q=2,r=0\n"
        "codebook=1\n"
        "plans=6\n"
        "result=PASS\n");
}

TEST_CASE("full-mode cost formula matches the enumerated plan count") {
  for (std::size_t n : {3u, 5u}) {
    for (int d : {1, 2}) {
      const CodeParams p(n, d, 3, 0);
      std::size_t plans = 0;
      for (int total = 0; total <= d; ++total)
        for (int ins = 0; ins <= total; ++ins)
          for_each_plan(n, ins, total - ins, 3,
                        [&](const CorruptionPlan&) { ++plans; });
      BigInt words = 1;
      for (std::size_t i = 0; i < n; ++i) words *= 3;
      CHECK(full_verification_cost(p) == words * plans);
    }
  }
}
