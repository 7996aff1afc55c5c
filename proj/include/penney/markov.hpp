#pragma once

#include <array>
#include <string>
#include <vector>

#include "penney/exact.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// Absorbing Markov chain of a two-string game. States are the distinct
/// prefixes (including the empty one) of the two strings; the two full
/// strings absorb. Built from character strings with direct suffix search,
/// so it shares nothing with the Conway-number code it checks.
class GameChain {
 public:
  static GameChain build(const PatternString& a, const PatternString& b);

  static constexpr int kStart = 0;

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t transient_count() const noexcept { return states_.size() - 2; }
  const std::string& label(int state) const { return states_.at(static_cast<std::size_t>(state)); }
  int absorbing_a() const noexcept { return absorbing_a_; }
  int absorbing_b() const noexcept { return absorbing_b_; }
  bool is_absorbing(int state) const noexcept { return state == absorbing_a_ || state == absorbing_b_; }
  /// Successor of a transient state on toss 'H' or 'T'.
  int successor(int state, char toss) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::array<int, 2>> next_;
  int absorbing_a_ = -1;
  int absorbing_b_ = -1;
};

/// Probability of absorbing in a (resp. b) from every state, solved exactly.
struct HittingProbabilities {
  std::vector<Rational> reach_a;
  std::vector<Rational> reach_b;
};

HittingProbabilities hitting_probabilities(const GameChain& chain);

/// P(a is reached before b) from the empty history.
ExactProb first_occurrence_prob(const GameChain& chain);

/// Solves M x = rhs for a square integer system exactly (fraction-free
/// elimination, then rational back substitution). Throws SingularSystem.
std::vector<Rational> solve_exact(const std::vector<std::vector<long long>>& matrix,
                                  const std::vector<long long>& rhs);

}  // namespace penney
