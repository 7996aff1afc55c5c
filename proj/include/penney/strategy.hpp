#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "penney/exact.hpp"
#include "penney/odds.hpp"
#include "penney/pattern.hpp"

namespace penney {

struct Candidate {
  PatternString string;
  ExactProb prob;
};

/// Player II's best reply to a queried string.
struct BestResponse {
  PatternString queried;
  PatternString responder;
  ExactProb prob;                       // P(responder appears before queried)
  std::optional<Candidate> runner_up;   // losing candidate, absent when degenerate
  bool degenerate = false;              // one of H.A', T.A' equals A itself
  bool verified = true;                 // degenerate case confirmed by full scan
};

/// Player II's reply among H.prefix(a, n-1) and T.prefix(a, n-1).
/// For the constant strings one candidate is `a` itself; the other is then
/// checked against a full scan for n <= 14 and returned with verified=false
/// beyond that.
BestResponse best_response(const PatternString& a);

/// Full argmax of win_prob(b, a) over every b != a, n <= 14. Throws
/// TieDetected if the maximizer is not unique. runner_up is the second best.
BestResponse best_response_bruteforce(const PatternString& a);

/// Player I's optimal strings, sorted by bits, and Player I's win
/// probability against the best reply.
struct OptimalSet {
  int n = 0;
  std::vector<PatternString> strings;
  ExactProb player1_win_prob;
};

/// Minimizes the best reply's probability over all 2^n strings, with each
/// best reply found by full scan. 3 <= n <= 14.
OptimalSet optimal_strings_bruteforce(int n);

/// Strings HT..THH and TH..HTT (length n >= 5) whose (n-1)-prefix has
/// autocorrelation 2^{n-2} + 1, i.e. the bit pattern 1 0^{n-3} 1. n <= 40.
OptimalSet optimal_strings_csirik(int n);

/// Player I's win probability under optimal play, (2^{n-2}+1)/(3*2^{n-2}+2).
ExactProb csirik_player1_win_prob(int n);

/// Number of length-m strings that start with HT, end with TH and have
/// autocorrelation 1 0^{m-2} 1. Scans the 2^{m-4} candidates, 4 <= m <= 40.
BigInt count_cstar(int m);

}  // namespace penney
