#pragma once

#include <cstdint>
#include <vector>

#include "penney/exact.hpp"
#include "penney/pattern.hpp"
#include "penney/strategy.hpp"

namespace penney {

/// Odds in favour of A in the game where the last string to appear wins:
/// q(A,B) = (C(A,A) - C(A,B)) / (C(B,B) - C(B,A)).
struct FlippedOdds {
  std::uint64_t in_favor;
  std::uint64_t against;

  Rational ratio() const;
  /// A's win probability, in_favor / (in_favor + against).
  ExactProb win_prob() const;
};

FlippedOdds q_ratio(const PatternString& a, const PatternString& b);

/// P(a wins the flipped game against b) = win_prob(b, a).
ExactProb flipped_win_prob(const PatternString& a, const PatternString& b);

struct FlippedBestResponse {
  PatternString queried;
  std::vector<PatternString> maximizers;  // sorted by bits, never contains queried
  ExactProb prob;                         // shared by every maximizer
};

/// Every b != a maximizing b's flipped win probability against a. n <= 12.
FlippedBestResponse flipped_best_response(const PatternString& a);

/// Player I strings maximizing the worst case over replies, by full scan.
/// 3 <= n <= 12.
OptimalSet flipped_optimal_strings(int n);

/// Strings b with q(a, b) == 1, sorted. n <= 16.
std::vector<PatternString> unit_ratio_partners(const PatternString& a);

/// {H^n, T^n, a_2..a_n H, a_2..a_n T} minus a itself, sorted.
std::vector<PatternString> conjectured_responses(const PatternString& a);

struct Conjecture3Counterexample {
  FlippedBestResponse response;
  std::vector<PatternString> outside;  // maximizers missing from the candidate set
};

struct Conjecture3Report {
  int n = 0;
  std::uint64_t strings_checked = 0;
  std::uint64_t tied_rows = 0;  // strings whose best reply is not unique
  std::vector<Conjecture3Counterexample> counterexamples;

  bool holds() const noexcept { return counterexamples.empty(); }
};

/// Checks every length-n string against the four-candidate reply rule.
/// 3 <= n <= 12.
Conjecture3Report check_conjecture3(int n);

}  // namespace penney
