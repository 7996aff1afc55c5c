#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "penney/exact.hpp"
#include "penney/pattern.hpp"
#include "penney/strategy.hpp"

namespace penney {

/// Player II's win probability when both sides play optimally:
/// (2^{n-1}+1)/(3*2^{n-2}+2) for n >= 5, full scan for n = 3, 4.
ExactProb p_opt_opt(int n);

/// Player I uniform over all 2^n strings, Player II best-responding.
/// Exact mean, 3 <= n <= 20.
ExactProb p_rand_opt(int n);

/// Which string Player I holds when Player II picks at random.
enum class OptimalChoice {
  ConwayOptimal,      // the standard optimal set, averaged uniformly
  BestAgainstRandom,  // strings minimizing Player II's random-play probability
};

/// Player II's random pool given Player I's string a.
enum class OpponentPool {
  ExcludeOwnString,  // uniform over the 2^n - 1 strings b != a
  IncludeOwnAsTie,   // uniform over all 2^n strings, b == a scores 1/2
};

std::string_view to_string(OptimalChoice c) noexcept;
std::string_view to_string(OpponentPool p) noexcept;

struct OptRandResult {
  ExactProb value;
  std::vector<Candidate> breakdown;  // Player I string and Player II's mean against it
  bool exhaustive = true;            // false when the minimizer was not found by full scan
};

/// Mean of win_prob(b, a) over Player II's random pool. n <= 24.
ExactProb random_reply_prob(const PatternString& a, OpponentPool pool);

/// Player I optimal, Player II random. BestAgainstRandom scans all strings
/// for n <= 14 and uses TH^{n-1}, HT^{n-1} beyond that (exhaustive=false).
/// ConwayOptimal needs n <= 14. 3 <= n <= 24.
OptRandResult p_opt_rand(int n, OptimalChoice choice = OptimalChoice::BestAgainstRandom,
                         OpponentPool pool = OpponentPool::IncludeOwnAsTie);

struct StrategyMixRow {
  int n;
  ExactProb p_opt_opt;
  std::optional<ExactProb> p_rand_opt;
  std::optional<ExactProb> p_opt_rand;
  std::optional<Rational> diag_rand;      // 2^n (p_rand_opt - 2/3) / n
  std::optional<Rational> diag_opt_rand;  // 2^n (1/2 - p_opt_rand) / n
};

/// Rows for 3 <= n_min <= n_max <= 24; columns beyond their caps are empty.
std::vector<StrategyMixRow> strategy_table(int n_min, int n_max,
                                           OptimalChoice choice = OptimalChoice::BestAgainstRandom,
                                           OpponentPool pool = OpponentPool::IncludeOwnAsTie);

struct SimulationResult {
  PatternString a;
  PatternString b;
  std::uint64_t trials;
  std::uint64_t a_wins;
  double frequency;
  ExactProb exact;  // win_prob(a, b)
  double z_score;
};

/// Plays `trials` independent games, trial i driven by its own stream seeded
/// from (seed, i), so the counts do not depend on the worker count.
SimulationResult simulate(const PatternString& a, const PatternString& b, std::uint64_t trials,
                          std::uint64_t seed);

}  // namespace penney
