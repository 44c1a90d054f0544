#include "helberg/channel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "helberg/align.hpp"
#include "helberg/errors.hpp"
#include "helberg/indel_decoder.hpp"
#include "helberg/moment_recovery.hpp"

namespace helberg {

int CorruptionPlan::insertions() const noexcept {
  int k = 0;
  for (const Edit& e : edits) k += (e.kind == Edit::Kind::Insert);
  return k;
}

int CorruptionPlan::deletions() const noexcept {
  int k = 0;
  for (const Edit& e : edits) k += (e.kind == Edit::Kind::Delete);
  return k;
}

std::string CorruptionPlan::str() const {
  std::string out;
  for (const Edit& e : edits) {
    if (!out.empty()) out += ';';
    if (e.kind == Edit::Kind::Delete) {
      out += 'D';
      out += std::to_string(e.pos);
    } else {
      out += 'I';
      out += std::to_string(e.pos);
      out += ':';
      out += std::to_string(e.sym);
    }
  }
  return out;
}

Word corrupt(const Word& x, const CorruptionPlan& plan) {
  Word cur = x;
  for (const Edit& e : plan.edits) {
    if (e.kind == Edit::Kind::Delete)
      cur = delete_at(cur, e.pos);
    else
      cur = insert_at(cur, e.pos, e.sym);
  }
  return cur;
}

namespace {

// Uniform draw in [0, k) via rejection; mt19937_64 output is fully specified
// by the standard, so plans reproduce bit-for-bit everywhere.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % k;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % k;
}

}  // namespace

CorruptionPlan random_plan(std::size_t n, int num_ins, int num_del,
                           std::uint64_t seed, int q) {
  if (num_ins < 0 || num_del < 0)
    throw InvalidParameter("negative edit count");
  if (q < 2) throw InvalidParameter("alphabet size must be at least 2");
  if (static_cast<std::size_t>(num_del) > n)
    throw InvalidParameter("cannot delete more symbols than the word holds");

  std::mt19937_64 rng(seed);
  CorruptionPlan plan;
  std::size_t len = n;
  for (int k = 0; k < num_del; ++k) {
    plan.edits.push_back(
        {Edit::Kind::Delete, static_cast<std::size_t>(bounded(rng, len)) + 1,
         0});
    --len;
  }
  for (int k = 0; k < num_ins; ++k) {
    const auto pos = static_cast<std::size_t>(bounded(rng, len + 1)) + 1;
    const auto sym = static_cast<Symbol>(bounded(rng, q));
    plan.edits.push_back({Edit::Kind::Insert, pos, sym});
    ++len;
  }
  return plan;
}

void for_each_plan(std::size_t n, int num_ins, int num_del, int q,
                   const std::function<void(const CorruptionPlan&)>& fn) {
  if (num_ins < 0 || num_del < 0)
    throw InvalidParameter("negative edit count");
  if (q < 2) throw InvalidParameter("alphabet size must be at least 2");
  if (static_cast<std::size_t>(num_del) > n) return;  // nothing to delete

  const std::size_t after_del = n - static_cast<std::size_t>(num_del);
  std::vector<std::size_t> del_pos(num_del);
  std::vector<std::size_t> slots(num_ins);
  std::vector<Symbol> syms(num_ins);
  CorruptionPlan plan;

  auto build = [&]() {
    plan.edits.clear();
    // Deletions applied right to left keep original positions valid.
    for (int k = num_del - 1; k >= 0; --k)
      plan.edits.push_back({Edit::Kind::Delete, del_pos[k], 0});
    // The k-th insertion lands k slots later than chosen because earlier
    // insertions shifted the word.
    for (int k = 0; k < num_ins; ++k)
      plan.edits.push_back(
          {Edit::Kind::Insert, slots[k] + static_cast<std::size_t>(k),
           syms[k]});
    fn(plan);
  };

  std::function<void(int)> choose_syms = [&](int k) {
    if (k == num_ins) {
      build();
      return;
    }
    for (Symbol s = 0; s < q; ++s) {
      syms[k] = s;
      choose_syms(k + 1);
    }
  };

  std::function<void(int, std::size_t)> choose_slots = [&](int k,
                                                           std::size_t lo) {
    if (k == num_ins) {
      choose_syms(0);
      return;
    }
    for (std::size_t s = lo; s <= after_del + 1; ++s) {
      slots[k] = s;
      choose_slots(k + 1, s);
    }
  };

  std::function<void(int, std::size_t)> choose_dels = [&](int k,
                                                          std::size_t lo) {
    if (k == num_del) {
      choose_slots(0, 1);
      return;
    }
    const std::size_t hi = n - static_cast<std::size_t>(num_del - 1 - k);
    for (std::size_t pos = lo; pos <= hi; ++pos) {
      del_pos[k] = pos;
      choose_dels(k + 1, pos + 1);
    }
  };

  choose_dels(0, 1);
}

std::vector<CorruptionPlan> enumerate_plans(std::size_t n, int num_ins,
                                            int num_del, int q) {
  std::vector<CorruptionPlan> out;
  for_each_plan(n, num_ins, num_del, q,
                [&](const CorruptionPlan& p) { out.push_back(p); });
  return out;
}

std::vector<Word> oracle_decode(const Word& y, std::span<const Word> codebook,
                                int d) {
  std::vector<Word> out;
  for (const Word& x : codebook)
    if (indel_distance(x, y) <= static_cast<std::size_t>(d)) out.push_back(x);
  return out;
}

std::vector<Word> oracle_decode(const Word& y, const CodeParams& params) {
  std::vector<Word> out;
  for_each_codeword(params, [&](const Word& x) {
    if (indel_distance(x, y) <= static_cast<std::size_t>(params.d()))
      out.push_back(x);
  });
  return out;
}

namespace {

struct CheckContext {
  const CodeParams* params;
  std::span<const Word> codebook;
  const Word* x;
  BigInt x_moment;
  const CorruptionPlan* plan;
  VerificationReport* report;
};

void record_failure(CheckContext& ctx, const std::string& got) {
  ctx.report->failures.push_back({*ctx.x, *ctx.plan, got});
}

// Decodes one corruption and checks the decoder output, the bounds it relies
// on at runtime, and agreement with the brute-force oracle.
void run_one(CheckContext& ctx) {
  const CodeParams& params = *ctx.params;
  const std::size_t n = params.n();
  const int d = params.d();
  const Word y0 = corrupt(*ctx.x, *ctx.plan);
  const int ins = ctx.plan->insertions();
  const int del = ctx.plan->deletions();
  ctx.report->corruptions_tested += 1;

  // Budget bounds before and after the extra-deletion normalization.
  const ErrorBudget b0 = compute_budget(y0.len(), params);
  if (b0.max_insertions < ins || b0.max_deletions < del)
    record_failure(ctx, "check:budget-bounds");
  Word yn = y0;
  ErrorBudget bn = b0;
  bool extra_deletion = false;
  if (b0.total() < d && !y0.empty()) {
    yn = y0.slice(2, static_cast<std::int64_t>(y0.len()));
    bn = compute_budget(yn.len(), params);
    extra_deletion = true;
  }
  if (bn.max_insertions < ins ||
      bn.max_deletions < del + (extra_deletion ? 1 : 0))
    record_failure(ctx, "check:budget-bounds-normalized");
  ctx.report->property_checks += 1;

  // The codeword stays reachable: lcs at least n - deletions, and the
  // accept test recognizes it.
  if (lcs_length(*ctx.x, y0) + static_cast<std::size_t>(del) < n)
    record_failure(ctx, "check:lcs-floor");
  if (lcs_length(*ctx.x, yn) + static_cast<std::size_t>(bn.max_deletions) < n)
    record_failure(ctx, "check:lcs-floor-normalized");
  if (!answer_is_correct(*ctx.x, ctx.x_moment, yn, n, bn.max_deletions,
                         params.weights()))
    record_failure(ctx, "check:accept-test");
  if (indel_distance(*ctx.x, y0) > static_cast<std::size_t>(ins + del))
    record_failure(ctx, "check:reachability");
  ctx.report->property_checks += 1;

  // Moment recovery.
  if (recover_moment(yn, params, bn) != ctx.x_moment)
    record_failure(ctx, "check:moment-recovery");
  ctx.report->property_checks += 1;

  // The decoder itself.
  DecodeResult result;
  try {
    result = decode(y0, params);
  } catch (const Error& e) {
    record_failure(ctx, std::string("error:") + e.what());
    return;
  }
  if (result.codeword != *ctx.x) {
    record_failure(ctx, format_word(result.codeword, params.q()));
  } else if (!result.verified) {
    record_failure(ctx, "check:final-verification");
  }

  // Decision-path bounds, checked against the ground truth.
  for (const TraceEvent& ev : result.trace.events) {
    if (const auto* s1 = std::get_if<StepOneEvent>(&ev)) {
      const Symbol truth = ctx.x->symbol(s1->n_prime);
      if (std::find(s1->candidates.begin(), s1->candidates.end(), truth) ==
          s1->candidates.end())
        record_failure(ctx, "check:truth-in-candidates");
      ctx.report->property_checks += 1;
    } else if (const auto* s2 = std::get_if<StepTwoEvent>(&ev)) {
      const auto np = static_cast<std::int64_t>(s2->n_prime);
      if (np - d <= 1) record_failure(ctx, "check:two-case-position");
      const Word tail = ctx.x->slice(np - d + 1, np);
      const Word pat1 =
          Word::repeated(0, d - 1) + Word{static_cast<Symbol>(s2->g + 1)};
      const Word pat2 = Word::repeated(params.p(), d - 1) + Word{s2->g};
      const bool is1 = tail == pat1;
      const bool is2 = tail == pat2;
      if (!is1 && !is2) record_failure(ctx, "check:two-case-pattern");
      const VValue& vt = (s2->t == 1) ? s2->v1 : s2->v2;
      const std::int64_t band =
          static_cast<std::int64_t>(n) - np + 2 * bn.max_insertions;
      if (!vt.at_least(band - 1)) record_failure(ctx, "check:window-floor");
      if (vt.at_least(band + 1) && ((s2->t == 1 && is1) || (s2->t == 2 && is2)))
        record_failure(ctx, "check:window-refutation");
      const bool truth_explored = (s2->t == 1 && is1) || (s2->t == 2 && is2);
      if (truth_explored && s2->branch != StepTwoBranch::RuleOut &&
          s2->resolved_case != 0)
        record_failure(ctx, "check:true-case-recovery");
      ctx.report->property_checks += 1;
    }
  }

  // Oracle agreement: exactly one codeword in the ball, and it is x.
  const auto ball = oracle_decode(y0, ctx.codebook, d);
  ctx.report->oracle_checks += 1;
  if (ball.size() != 1)
    record_failure(ctx, "oracle:" + std::to_string(ball.size()) + "-codewords");
  else if (ball.front() != *ctx.x)
    record_failure(ctx, "oracle:mismatch");
}

}  // namespace

VerificationReport verify_exhaustive(const CodeParams& params,
                                     const VerifyMode& mode, unsigned jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = params.n();
  report.d = params.d();
  report.q = params.q();
  report.r = params.r();

  const std::vector<Word> codebook = enumerate_codebook(params);
  report.codebook_size = codebook.size();
  std::vector<BigInt> moments(codebook.size());
  for (std::size_t i = 0; i < codebook.size(); ++i)
    moments[i] = moment(codebook[i], params.weights());

  if (codebook.empty()) {
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
  }

  if (mode.is_full) {
    std::vector<CorruptionPlan> plans;
    for (int total = 0; total <= params.d(); ++total)
      for (int ins = 0; ins <= total; ++ins)
        for_each_plan(params.n(), ins, total - ins, params.q(),
                      [&](const CorruptionPlan& p) { plans.push_back(p); });

    const std::size_t task_count = codebook.size() * plans.size();
    unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, std::max<std::size_t>(task_count, 1)));

    std::vector<VerificationReport> parts(workers);
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned wi) {
      constexpr std::size_t kChunk = 256;
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= task_count) break;
        const std::size_t end = std::min(begin + kChunk, task_count);
        for (std::size_t gid = begin; gid < end; ++gid) {
          const std::size_t xi = gid / plans.size();
          const std::size_t pi = gid % plans.size();
          CheckContext ctx{&params,     codebook,   &codebook[xi], moments[xi],
                           &plans[pi],  &parts[wi]};
          run_one(ctx);
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned wi = 0; wi < workers; ++wi)
        pool.emplace_back(work, wi);
      for (auto& th : pool) th.join();
    }
    for (const auto& part : parts) {
      report.corruptions_tested += part.corruptions_tested;
      report.oracle_checks += part.oracle_checks;
      report.property_checks += part.property_checks;
      report.failures.insert(report.failures.end(), part.failures.begin(),
                             part.failures.end());
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    std::vector<std::pair<int, int>> splits;
    for (int total = 0; total <= params.d(); ++total)
      for (int ins = 0; ins <= total; ++ins)
        splits.emplace_back(ins, total - ins);
    for (std::size_t k = 0; k < mode.count; ++k) {
      const auto xi = static_cast<std::size_t>(bounded(rng, codebook.size()));
      const auto [ins, del] =
          splits[static_cast<std::size_t>(bounded(rng, splits.size()))];
      const CorruptionPlan plan =
          random_plan(params.n(), ins, del, rng(), params.q());
      CheckContext ctx{&params,   codebook, &codebook[xi],
                       moments[xi], &plan,  &report};
      run_one(ctx);
    }
  }

  std::sort(report.failures.begin(), report.failures.end(),
            [](const VerifyFailure& a, const VerifyFailure& b) {
              if (a.x != b.x) return a.x < b.x;
              if (a.plan.str() != b.plan.str()) return a.plan.str() < b.plan.str();
              return a.got < b.got;
            });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "params=n=" << n << ",d=" << d << ",q=" << q << ",r=" << r << '\n';
  os << "codebook=" << codebook_size << '\n';
  os << "plans=" << corruptions_tested << '\n';
  for (const VerifyFailure& f : failures)
    os << "FAIL x=" << format_word(f.x, q) << " plan=" << f.plan.str()
       << " got=" << f.got << '\n';
  os << "result=" << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out *= static_cast<unsigned long>(n - k + i);
    out /= static_cast<unsigned long>(i);
  }
  return out;
}

}  // namespace

BigInt full_verification_cost(const CodeParams& params) {
  BigInt words = 1;
  for (std::size_t i = 0; i < params.n(); ++i) words *= params.q();

  BigInt plans = 0;
  for (int total = 0; total <= params.d(); ++total) {
    for (int ins = 0; ins <= total; ++ins) {
      const int del = total - ins;
      if (static_cast<std::size_t>(del) > params.n()) continue;
      BigInt q_pow = 1;
      for (int i = 0; i < ins; ++i) q_pow *= params.q();
      plans += binomial(params.n(), static_cast<std::size_t>(del)) *
               binomial(params.n() - static_cast<std::size_t>(del) +
                            static_cast<std::size_t>(ins),
                        static_cast<std::size_t>(ins)) *
               q_pow;
    }
  }
  return words * plans;
}

}  // namespace helberg
