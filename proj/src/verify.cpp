#include "penney/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "penney/correlation.hpp"
#include "penney/error.hpp"
#include "penney/flipped.hpp"
#include "penney/markov.hpp"
#include "penney/odds.hpp"
#include "penney/pattern.hpp"
#include "penney/sequence.hpp"
#include "penney/strategy.hpp"

namespace penney {
namespace {

using Check = std::function<std::string()>;  // returns detail, throws on failure

struct Failed {
  std::string detail;
};

void expect(bool ok, const std::string& detail) {
  if (!ok) throw Failed{detail};
}

std::string encoding_roundtrip() {
  for (int n = 3; n <= 12; ++n)
    for (const auto& a : enumerate(n)) {
      expect(PatternString::parse(a.str()) == a, "parse(str) differs at " + a.str());
      expect(a.complement().complement() == a, "complement not an involution at " + a.str());
      for (int k = 1; k < n; ++k)
        expect(a.prefix(k).concat(a.suffix(n - k)) == a, "prefix/suffix split fails at " + a.str());
    }
  return "n = 3..12";
}

std::string correlation_bounds() {
  for (int n = 3; n <= 9; ++n) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < top; ++a) {
      const std::uint64_t aa = autocorrelation_bits(a, n);
      expect(aa >> (n - 1) == 1, "autocorrelation lacks its leading bit");
      for (std::uint64_t b = 0; b < top; ++b) {
        const std::uint64_t ab = conway_bits(a, b, n);
        expect(((ab >> (n - 1)) == 1) == (a == b), "leading bit does not track equality");
        expect(ab == conway_bits(~a & low_mask(n), ~b & low_mask(n), n), "complement symmetry fails");
      }
    }
  }
  return "n = 3..9, all pairs";
}

std::string oracle_agreement() {
  std::uint64_t pairs = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& a : enumerate(n))
      for (const auto& b : enumerate(n)) {
        if (a == b) continue;
        const GameChain chain = GameChain::build(a, b);
        expect(first_occurrence_prob(chain) == win_prob(a, b), "oracle differs for " + a.str() + " vs " + b.str());
        expect(chain.state_count() <= static_cast<std::size_t>(2 * n + 1), "chain larger than 2n+1 states");
        ++pairs;
      }
  return std::to_string(pairs) + " ordered pairs, n = 3..5";
}

std::string best_response_agreement() {
  for (int n = 3; n <= 9; ++n)
    for (const auto& a : enumerate(n)) {
      const BestResponse fast = best_response(a);
      const BestResponse full = best_response_bruteforce(a);
      expect(fast.responder == full.responder && fast.prob == full.prob, "best reply differs for " + a.str());
    }
  return "n = 3..9";
}

std::string optimal_sets() {
  for (int n = 5; n <= 10; ++n) {
    const OptimalSet brute = optimal_strings_bruteforce(n);
    const OptimalSet built = optimal_strings_csirik(n);
    expect(brute.strings == built.strings, "constructed set differs at n = " + std::to_string(n));
    expect(brute.player1_win_prob == built.player1_win_prob, "closed form differs at n = " + std::to_string(n));
    expect(BigInt(static_cast<long>(brute.strings.size())) == c(n).value, "c_n differs at n = " + std::to_string(n));
  }
  return "n = 5..10";
}

std::string cn_recurrences() {
  for (int n = 5; n <= 24; ++n) expect(c(n).value == 2 * count_cstar(n - 1), "c_n != 2 c*_{n-1} at " + std::to_string(n));
  for (int m = 4; m <= 24; ++m) expect(cstar_recurrence(m) == count_cstar(m), "c* recurrence fails at " + std::to_string(m));
  expect(finite_sum_identity_check(60), "finite-sum identity fails");
  CnStream stream;
  for (int n = 3; n <= 300; ++n, stream.advance())
    expect(stream.index() == n && stream.value() == c(n).value, "stream differs at " + std::to_string(n));
  return "c_n, c*_m up to 24, identity to m = 60, stream to 300";
}

std::string alpha_interval() {
  const AlphaApprox coarse = alpha(64);
  const AlphaApprox fine = alpha(96);
  expect(coarse.contains(fine.upper()), "alpha(96) escapes alpha(64)");
  const auto a = coarse.binary_digits(64);
  const auto b = fine.binary_digits(64);
  expect(a && b && *a == *b, "alpha(64) and alpha(96) disagree on 64 digits");
  return "alpha = " + coarse.decimal(12) + "...";
}

std::string flipped_game() {
  for (int n = 3; n <= 8; ++n) {
    const OptimalSet set = flipped_optimal_strings(n);
    const std::vector<PatternString> expected{PatternString::repeat('T', n), PatternString::repeat('H', n)};
    expect(set.strings == expected, "flipped optimum differs at n = " + std::to_string(n));
    expect(set.player1_win_prob == ExactProb(1, 2), "flipped value differs at n = " + std::to_string(n));
    std::vector<PatternString> partners{PatternString::repeat('H', n - 1).concat(PatternString::fragment("T")),
                                        PatternString::repeat('T', n)};
    std::sort(partners.begin(), partners.end());
    expect(unit_ratio_partners(PatternString::repeat('H', n)) == partners, "q = 1 partners differ");
  }
  for (const auto& a : enumerate(4))
    for (const auto& b : enumerate(4))
      if (a != b) expect(flipped_win_prob(a, b) == win_prob(b, a), "transpose fails");
  return "n = 3..8";
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  return out.str();
}

VerificationReport run_verification() {
  const std::vector<std::pair<std::string, Check>> suite{
      {"encoding", encoding_roundtrip},
      {"correlation", correlation_bounds},
      {"oracle", oracle_agreement},
      {"best-response", best_response_agreement},
      {"optimal-sets", optimal_sets},
      {"recurrences", cn_recurrences},
      {"alpha", alpha_interval},
      {"flipped", flipped_game},
  };
  VerificationReport report;
  for (const auto& [name, check] : suite) {
    try {
      report.checks.push_back({name, true, check()});
    } catch (const Failed& f) {
      report.checks.push_back({name, false, f.detail});
    } catch (const std::exception& e) {
      report.checks.push_back({name, false, e.what()});
    }
  }
  return report;
}

}  // namespace penney
