#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "helberg/code.hpp"
#include "helberg/integer.hpp"
#include "helberg/word.hpp"

namespace helberg {

struct Edit {
  enum class Kind { Delete, Insert };
  Kind kind = Kind::Delete;
  std::size_t pos = 0;  // 1-based, valid at application time
  Symbol sym = 0;       // inserted symbol; ignored for deletions

  bool operator==(const Edit&) const = default;
};

/// Ordered edit script applied left to right to a working copy.
struct CorruptionPlan {
  std::vector<Edit> edits;

  int insertions() const noexcept;
  int deletions() const noexcept;

  /// Compact text form, e.g. "D4;I10:0;I11:1". Empty plan is "".
  std::string str() const;

  bool operator==(const CorruptionPlan&) const = default;
};

/// Applies the plan. Throws InvalidParameter on a position that is out of
/// range at its application time.
Word corrupt(const Word& x, const CorruptionPlan& plan);

/// Deterministic random plan: num_del deletions then num_ins insertions,
/// positions and symbols uniform. Uses mt19937_64 seeded with `seed` and
/// rejection-sampled bounded draws, so identical seeds give identical plans
/// on every platform.
CorruptionPlan random_plan(std::size_t n, int num_ins, int num_del,
                           std::uint64_t seed, int q);

/// Every plan with exactly num_del deletions followed by exactly num_ins
/// insertions. Together these reach every word obtainable from a length-n
/// word with that many indels.
void for_each_plan(std::size_t n, int num_ins, int num_del, int q,
                   const std::function<void(const CorruptionPlan&)>& fn);

std::vector<CorruptionPlan> enumerate_plans(std::size_t n, int num_ins,
                                            int num_del, int q);

/// Ground truth: every codeword within indel distance d of y, in
/// lexicographic order. The codebook overload avoids rescanning q^n words.
std::vector<Word> oracle_decode(const Word& y, const CodeParams& params);
std::vector<Word> oracle_decode(const Word& y, std::span<const Word> codebook,
                                int d);

struct VerifyMode {
  bool is_full = true;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static VerifyMode full() { return {true, 0, 0}; }
  static VerifyMode sampled(std::uint64_t seed, std::size_t count) {
    return {false, seed, count};
  }
};

struct VerifyFailure {
  Word x;
  CorruptionPlan plan;
  std::string got;  // decoded word, oracle mismatch or violated check
};

struct VerificationReport {
  std::size_t n = 0;
  int d = 0;
  int q = 0;
  BigInt r;

  std::size_t codebook_size = 0;
  std::size_t corruptions_tested = 0;
  std::size_t oracle_checks = 0;
  std::size_t property_checks = 0;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }

  /// Line-oriented text: params=, codebook=, plans=, one FAIL line per
  /// failure, then result=PASS|FAIL. Deterministic (no timing fields).
  std::string to_text() const;
};

/// Decodes every corruption of every codeword (full mode: all plans with
/// i + j <= d; sampled mode: `count` seeded random picks) and checks decoder
/// output, oracle agreement and the runtime bounds the decoder relies on.
/// Failures are collected, not thrown. `jobs` 0 means one worker per
/// hardware thread.
VerificationReport verify_exhaustive(const CodeParams& params,
                                     const VerifyMode& mode,
                                     unsigned jobs = 0);

/// q^n times the number of full-mode plans; the CLI refuses full runs with
/// cost above 1e8 unless forced.
BigInt full_verification_cost(const CodeParams& params);

}  // namespace helberg
