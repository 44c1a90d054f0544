#include <CLI11.hpp>
#include <cctype>
#include <functional>
#include <iostream>
#include <string>

#include "helberg/channel.hpp"
#include "helberg/code.hpp"
#include "helberg/deletions_decoder.hpp"
#include "helberg/errors.hpp"
#include "helberg/indel_decoder.hpp"
#include "helberg/moment_recovery.hpp"
#include "helberg/weights.hpp"
#include "helberg/word.hpp"

using namespace helberg;

namespace {

// Exit statuses: 0 success / member / pass, 1 domain negative, 2 usage
// error, 3 internal invariant violation.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;

BigInt parse_bigint(const std::string& text) {
  std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (i == text.size())
    throw InvalidParameter("malformed integer '" + text + "'");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InvalidParameter("malformed integer '" + text + "'");
  return BigInt(text);
}

int dispatch(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const DecodeFailure& e) {
    std::cerr << "decode failure: " << e.what() << '\n';
    if (!e.trace_text().empty()) std::cerr << e.trace_text();
    return kNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Number-theoretic indel-correcting codes: weights, moments, codebooks, "
      "channel simulation, decoding and exhaustive verification"};
  app.require_subcommand(1);

  std::string word_text;
  std::string r_text = "0";
  std::string moment_text = "0";
  std::size_t n = 0;
  std::size_t count = 0;
  std::size_t n_target = 0;
  int q = 2;
  int d = 1;
  int num_ins = 0;
  int num_del = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  unsigned jobs = 0;
  bool with_trace = false;
  bool full = false;
  bool force = false;

  auto* cmd_weights = app.add_subcommand("weights", "Print w_0 .. w_{count-1}");
  cmd_weights->add_option("--q", q, "Alphabet size")->required();
  cmd_weights->add_option("--d", d, "Indel budget")->required();
  cmd_weights->add_option("--count", count, "Number of weights")->required();

  auto* cmd_moment =
      app.add_subcommand("moment", "Print the moment of a word");
  cmd_moment->add_option("word", word_text, "Word")->required();
  cmd_moment->add_option("--q", q, "Alphabet size")->required();
  cmd_moment->add_option("--d", d, "Indel budget")->required();

  auto* cmd_member =
      app.add_subcommand("member", "Test codebook membership");
  cmd_member->add_option("word", word_text, "Word")->required();
  cmd_member->add_option("--n", n, "Codeword length")->required();
  cmd_member->add_option("--d", d, "Indel budget")->required();
  cmd_member->add_option("--q", q, "Alphabet size")->required();
  cmd_member->add_option("--r", r_text, "Residue")->required();

  auto* cmd_decode =
      app.add_subcommand("decode", "Decode a corrupted codeword");
  cmd_decode->add_option("word", word_text, "Received word")->required();
  cmd_decode->add_option("--n", n, "Codeword length")->required();
  cmd_decode->add_option("--d", d, "Indel budget")->required();
  cmd_decode->add_option("--q", q, "Alphabet size")->required();
  cmd_decode->add_option("--r", r_text, "Residue")->required();
  cmd_decode->add_flag("--trace", with_trace, "Also print the decision trace");

  auto* cmd_dd = app.add_subcommand(
      "decode-deletions", "Invert up to d deletions given the exact moment");
  cmd_dd->add_option("word", word_text, "Received word")->required();
  cmd_dd->add_option("--n-target", n_target, "Target length")->required();
  cmd_dd->add_option("--moment", moment_text, "Exact moment")->required();
  cmd_dd->add_option("--q", q, "Alphabet size")->required();
  cmd_dd->add_option("--d", d, "Deletion budget")->required();

  auto* cmd_corrupt =
      app.add_subcommand("corrupt", "Apply a seeded random corruption");
  cmd_corrupt->add_option("word", word_text, "Word")->required();
  cmd_corrupt->add_option("--q", q, "Alphabet size")->required();
  cmd_corrupt->add_option("--ins", num_ins, "Insertions")->required();
  cmd_corrupt->add_option("--del", num_del, "Deletions")->required();
  cmd_corrupt->add_option("--seed", seed, "Seed");

  auto* cmd_enum =
      app.add_subcommand("enumerate", "List a codebook in lexicographic order");
  cmd_enum->add_option("--n", n, "Codeword length")->required();
  cmd_enum->add_option("--d", d, "Indel budget")->required();
  cmd_enum->add_option("--q", q, "Alphabet size")->required();
  cmd_enum->add_option("--r", r_text, "Residue")->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "Decode every corruption of every codeword and report");
  cmd_verify->add_option("--n", n, "Codeword length")->required();
  cmd_verify->add_option("--d", d, "Indel budget")->required();
  cmd_verify->add_option("--q", q, "Alphabet size")->required();
  cmd_verify->add_option("--r", r_text, "Residue")->required();
  cmd_verify->add_flag("--full", full, "Exhaustive over all plans");
  cmd_verify->add_option("--sampled", samples, "Number of sampled corruptions");
  cmd_verify->add_option("--seed", seed, "Seed for sampled mode");
  cmd_verify->add_flag("--force", force, "Run full mode past the cost guard");
  cmd_verify->add_option("--jobs", jobs, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (cmd_weights->parsed()) {
    return dispatch([&] {
      const WeightTable w = build_weights(q, d, count);
      for (std::size_t i = 0; i < w.size(); ++i)
        std::cout << w.at(static_cast<std::int64_t>(i)) << '\n';
      return kOk;
    });
  }

  if (cmd_moment->parsed()) {
    return dispatch([&] {
      const Word x = parse_word(word_text, q);
      const WeightTable w = build_weights(q, d, x.len() + 1);
      std::cout << moment(x, w) << '\n';
      return kOk;
    });
  }

  if (cmd_member->parsed()) {
    return dispatch([&] {
      const CodeParams params(n, d, q, parse_bigint(r_text));
      const bool in = is_codeword(parse_word(word_text, q), params);
      std::cout << (in ? "member" : "non-member") << '\n';
      return in ? kOk : kNegative;
    });
  }

  if (cmd_decode->parsed()) {
    return dispatch([&] {
      const CodeParams params(n, d, q, parse_bigint(r_text));
      const DecodeResult result = decode(parse_word(word_text, q), params);
      std::cout << format_word(result.codeword, q) << '\n';
      if (with_trace) std::cout << result.trace.to_text();
      if (!result.verified) {
        std::cerr << "warning: output failed the final self-check; the input "
                     "is outside the corruption model\n";
        return kNegative;
      }
      return kOk;
    });
  }

  if (cmd_dd->parsed()) {
    return dispatch([&] {
      const Word out = decode_deletions(parse_word(word_text, q), n_target,
                                        parse_bigint(moment_text), q, d);
      std::cout << format_word(out, q) << '\n';
      return kOk;
    });
  }

  if (cmd_corrupt->parsed()) {
    return dispatch([&] {
      const Word x = parse_word(word_text, q);
      const CorruptionPlan plan =
          random_plan(x.len(), num_ins, num_del, seed, q);
      std::cout << format_word(corrupt(x, plan), q) << '\n';
      std::cout << "plan=" << plan.str() << '\n';
      return kOk;
    });
  }

  if (cmd_enum->parsed()) {
    return dispatch([&] {
      const CodeParams params(n, d, q, parse_bigint(r_text));
      for_each_codeword(params, [&](const Word& x) {
        std::cout << format_word(x, q) << '\n';
      });
      return kOk;
    });
  }

  if (cmd_verify->parsed()) {
    return dispatch([&] {
      if (full == (samples > 0))
        throw InvalidParameter("choose exactly one of --full or --sampled N");
      const CodeParams params(n, d, q, parse_bigint(r_text));
      if (full && !force) {
        const BigInt cost = full_verification_cost(params);
        if (cost > 100000000) {
          std::cerr << "full verification would take about " << cost
                    << " elementary steps; rerun with --force to insist\n";
          return kUsage;
        }
      }
      const VerifyMode mode =
          full ? VerifyMode::full() : VerifyMode::sampled(seed, samples);
      const VerificationReport report = verify_exhaustive(params, mode, jobs);
      std::cout << report.to_text();
      return report.passed() ? kOk : kNegative;
    });
  }

  return kUsage;
}
