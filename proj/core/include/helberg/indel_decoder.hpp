#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "helberg/align.hpp"
#include "helberg/code.hpp"
#include "helberg/integer.hpp"
#include "helberg/word.hpp"

namespace helberg {

/// Which corrective action the two-case step took.
///   RuleOut:      the explored case was refuted by the suffix-window bound
///                 alone (window one past the feasible band).
///   SingleDecode: one deletions-decoder call on the unwindowed prefix.
///   ScanDecode:   deletions-decoder calls on the prefix with each single
///                 symbol removed (or on the empty word when the prefix is
///                 already empty).
enum class StepTwoBranch { RuleOut, SingleDecode, ScanDecode };

std::string to_string(StepTwoBranch b);

// -- Trace events ------------------------------------------------------------
//
// The decoder records every decision it takes; traces serialize to stable
// line-oriented text (one event per line) for golden tests and --trace.

struct PrelimEvent {
  bool p1_applied = false;      // one extra deletion taken to make a + b = d
  ErrorBudget budget;           // budget after any extra deletion
  Word y_working;               // corrupted word actually decoded
  Word y_tilde;                 // moment-minimizing deletion result
  BigInt y_tilde_moment;
  BigInt total_moment;          // recovered exact moment of the codeword
};

struct StepOneEvent {
  std::size_t n_prime = 0;
  BigInt m_prime;
  std::vector<Symbol> candidates;  // the H set; one entry fixes the symbol
};

struct StepTwoEvent {
  std::size_t n_prime = 0;
  Symbol g = 0;                 // smaller of the two candidate symbols
  VValue v1 = VValue::unreachable();
  VValue v2 = VValue::unreachable();
  int t = 0;                    // explored case, 1 or 2
  StepTwoBranch branch = StepTwoBranch::RuleOut;
  BigInt m_double_prime;        // moment target handed to the sub-decoder
  std::vector<Word> sub_results;  // sub-decoder outputs in call order
  int resolved_case = 0;        // 1 or 2; 0 when a full solution was found
};

struct BruteForceEvent {  // d = 1 path
  Word result;
};

struct FinalEvent {
  Word codeword;
  bool verified = false;
};

using TraceEvent = std::variant<PrelimEvent, StepOneEvent, StepTwoEvent,
                                BruteForceEvent, FinalEvent>;

struct DecoderTrace {
  int q = 2;  // for word formatting
  std::vector<TraceEvent> events;

  std::string to_text() const;
};

struct DecodeResult {
  Word codeword;
  /// Final self-check: length, exact moment and lcs(y) >= n - b all hold.
  /// Always true for inputs within the corruption model.
  bool verified = false;
  DecoderTrace trace;
};

/// Working state of the main loop, exposed so the two-case step can be
/// driven directly in tests.
struct DecoderState {
  const CodeParams* params = nullptr;
  Word y;                  // corrupted word after any preliminary deletion
  ErrorBudget budget;      // a + b = d
  BigInt total_moment;     // exact moment of the codeword
  std::size_t n_prime = 0; // rightmost undecoded position
  Word known_suffix;       // decoded symbols at positions n'+1 .. n
  BigInt m_prime;          // moment of the undecoded prefix
};

struct StepTwoOutcome {
  VValue v1 = VValue::unreachable();
  VValue v2 = VValue::unreachable();
  int t = 0;
  StepTwoBranch branch = StepTwoBranch::RuleOut;
  BigInt m_double_prime;
  std::vector<Word> sub_results;
  std::optional<Word> solution;  // complete codeword when found
  int resolved_case = 0;         // meaningful when !solution
};

/// Candidate symbols H = { 0 <= g <= p : g*w_{n'} <= m' <= g*w_{n'} +
/// p*sum_{i<n'} w_i }. For any m' at most two values qualify and they are
/// adjacent. Empty H means the state is impossible.
std::vector<Symbol> step_one_candidates(const BigInt& m_prime,
                                        std::size_t n_prime,
                                        const CodeParams& params);

/// Two-case resolution at position n' when both g and g+1 qualify. The true
/// word either ends its unknown part with (d-1) zeros then g+1, or with
/// (d-1) p's then g. The suffix-window values v1, v2 of the two candidates
/// decide which case can be explored cheaply; the explored case is either
/// confirmed (full solution) or refuted (the other case holds).
/// On ties v1 == v2 the second case is explored.
StepTwoOutcome step_two(const DecoderState& state, Symbol g);

/// len(candidate) = n, moment(candidate) = total_moment and
/// lcs(candidate, y) >= n - b: necessary and sufficient for candidate to be
/// the transmitted codeword.
bool answer_is_correct(const Word& candidate, const BigInt& total_moment,
                       const Word& y, std::size_t n, int b,
                       const WeightTable& w);

/// d = 1 decoder: tries every single deletion or insertion (or membership
/// alone when lengths match). Throws DecodeFailure when no codeword or more
/// than one distinct codeword is reachable.
Word decode_brute_force_d1(const Word& y, const CodeParams& params);

/// Full decoder: recovers the codeword from a corruption with at most d
/// insertions/deletions. Throws DecodeFailure (with partial trace) or
/// InvariantViolation on inputs outside the model; may also return an
/// unverified word for such inputs, flagged in the result.
DecodeResult decode(const Word& y, const CodeParams& params);

}  // namespace helberg
