#include "penney/markov.hpp"

#include <algorithm>
#include <cmath>

#include "penney/error.hpp"

namespace penney {
namespace {

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && std::equal(tail.rbegin(), tail.rend(), s.rbegin());
}

// Fraction-free step: (pivot * x - below * right) / previous, always exact.
inline long long bareiss_step(long long pivot, long long x, long long below, long long right,
                              long long previous) {
  const __int128 num = static_cast<__int128>(pivot) * x - static_cast<__int128>(below) * right;
  return static_cast<long long>(num / previous);
}

inline BigInt bareiss_step(const BigInt& pivot, const BigInt& x, const BigInt& below,
                           const BigInt& right, const BigInt& previous) {
  BigInt num = pivot * x - below * right;
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
  return out;
}

inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }
inline Rational to_rational(const BigInt& v) { return Rational(v); }

// Augmented matrix [M | rhs]; reduced in place to upper triangular form.
template <class Int>
std::vector<Rational> bareiss_solve(std::vector<std::vector<Int>> aug) {
  const std::size_t n = aug.size();
  Int previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && aug[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularSystem, "hitting system is singular");
    if (p != k) std::swap(aug[p], aug[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        aug[i][j] = bareiss_step(aug[k][k], aug[i][j], aug[i][k], aug[k][j], previous);
      aug[i][k] = 0;
    }
    previous = aug[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = to_rational(aug[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= to_rational(aug[i][j]) * x[j];
    x[i] = acc / to_rational(aug[i][i]);
    x[i].canonicalize();
  }
  return x;
}

// log2 of the Hadamard bound on every minor of the augmented matrix.
double hadamard_log2(const std::vector<std::vector<long long>>& m, const std::vector<long long>& rhs) {
  double total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    long double sq = static_cast<long double>(rhs[i]) * rhs[i];
    for (long long v : m[i]) sq += static_cast<long double>(v) * v;
    total += 0.5 * std::log2(static_cast<double>(std::max<long double>(sq, 1)));
  }
  return total;
}

}  // namespace

GameChain GameChain::build(const PatternString& a, const PatternString& b) {
  require_same_length(a, b);
  require_game_string(a);
  if (a == b) throw Error(ErrorCode::SameString, "a game needs two different strings");
  const std::string sa = a.str();
  const std::string sb = b.str();
  const std::size_t n = sa.size();

  GameChain chain;
  chain.states_.push_back("");
  for (const std::string* s : {&sa, &sb})
    for (std::size_t len = 1; len < n; ++len) {
      std::string p = s->substr(0, len);
      if (std::find(chain.states_.begin(), chain.states_.end(), p) == chain.states_.end())
        chain.states_.push_back(std::move(p));
    }
  chain.absorbing_a_ = static_cast<int>(chain.states_.size());
  chain.states_.push_back(sa);
  chain.absorbing_b_ = static_cast<int>(chain.states_.size());
  chain.states_.push_back(sb);

  auto resolve = [&](const std::string& history) {
    // Longest suffix of the history that is a state label.
    int best = kStart;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < chain.states_.size(); ++i) {
      const std::string& label = chain.states_[i];
      if (label.size() > best_len && ends_with(history, label)) {
        best = static_cast<int>(i);
        best_len = label.size();
      }
    }
    return best;
  };

  chain.next_.resize(chain.states_.size(), {-1, -1});
  for (std::size_t i = 0; i < chain.states_.size(); ++i) {
    if (chain.is_absorbing(static_cast<int>(i))) continue;
    chain.next_[i][0] = resolve(chain.states_[i] + 'H');
    chain.next_[i][1] = resolve(chain.states_[i] + 'T');
  }
  return chain;
}

int GameChain::successor(int state, char toss) const {
  if (state < 0 || static_cast<std::size_t>(state) >= states_.size() || is_absorbing(state))
    throw Error(ErrorCode::InvalidArgument, "successor of a non-transient state");
  if (toss != 'H' && toss != 'T') throw Error(ErrorCode::IllegalCharacter, "toss must be H or T");
  return next_[static_cast<std::size_t>(state)][toss == 'H' ? 0 : 1];
}

std::vector<Rational> solve_exact(const std::vector<std::vector<long long>>& matrix,
                                  const std::vector<long long>& rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw Error(ErrorCode::InvalidArgument, "rhs size differs from matrix");
  for (const auto& row : matrix)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  if (n == 0) return {};

  if (hadamard_log2(matrix, rhs) < 61.0) {
    std::vector<std::vector<long long>> aug(n);
    for (std::size_t i = 0; i < n; ++i) {
      aug[i] = matrix[i];
      aug[i].push_back(rhs[i]);
    }
    return bareiss_solve(std::move(aug));
  }
  std::vector<std::vector<BigInt>> aug(n, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = static_cast<long>(matrix[i][j]);
    aug[i][n] = static_cast<long>(rhs[i]);
  }
  return bareiss_solve(std::move(aug));
}

HittingProbabilities hitting_probabilities(const GameChain& chain) {
  // Unknowns are the transient states, which occupy indices [0, transient).
  const std::size_t t = chain.transient_count();
  std::vector<std::vector<long long>> m(t, std::vector<long long>(t, 0));
  std::vector<long long> rhs_a(t, 0);
  std::vector<long long> rhs_b(t, 0);
  for (std::size_t s = 0; s < t; ++s) {
    m[s][s] += 2;
    for (char toss : {'H', 'T'}) {
      const int next = chain.successor(static_cast<int>(s), toss);
      if (next == chain.absorbing_a()) ++rhs_a[s];
      else if (next == chain.absorbing_b()) ++rhs_b[s];
      else m[s][static_cast<std::size_t>(next)] -= 1;
    }
  }
  HittingProbabilities out;
  out.reach_a = solve_exact(m, rhs_a);
  out.reach_b = solve_exact(m, rhs_b);
  out.reach_a.resize(chain.state_count());
  out.reach_b.resize(chain.state_count());
  out.reach_a[static_cast<std::size_t>(chain.absorbing_a())] = 1;
  out.reach_b[static_cast<std::size_t>(chain.absorbing_b())] = 1;
  return out;
}

ExactProb first_occurrence_prob(const GameChain& chain) {
  const std::size_t t = chain.transient_count();
  std::vector<std::vector<long long>> m(t, std::vector<long long>(t, 0));
  std::vector<long long> rhs(t, 0);
  for (std::size_t s = 0; s < t; ++s) {
    m[s][s] += 2;
    for (char toss : {'H', 'T'}) {
      const int next = chain.successor(static_cast<int>(s), toss);
      if (next == chain.absorbing_a()) ++rhs[s];
      else if (next != chain.absorbing_b()) m[s][static_cast<std::size_t>(next)] -= 1;
    }
  }
  return ExactProb(solve_exact(m, rhs)[GameChain::kStart]);
}

}  // namespace penney
