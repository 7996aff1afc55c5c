#pragma once

#include <cstdint>
#include <vector>

#include "penney/correlation.hpp"
#include "penney/exact.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// Conway odds of A against B as two word-sized integers:
/// P(A before B) = favour / (favour + against), with
/// favour = C(B,B) - C(B,A) and against = C(A,A) - C(A,B). Both are >= 1
/// for distinct strings of equal length.
struct ConwayOdds {
  std::uint64_t favour;
  std::uint64_t against;

  ExactProb probability() const;
};

/// Ordering of two first-occurrence probabilities x.favour/(x.favour+x.against)
/// without division; exact for all n <= 64.
inline int compare_probability(const ConwayOdds& x, const ConwayOdds& y) noexcept {
  const unsigned __int128 lhs = static_cast<unsigned __int128>(x.favour) * y.against;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(y.favour) * x.against;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

/// Raw odds of packed a before packed b given their autocorrelations.
inline ConwayOdds conway_odds_bits(std::uint64_t a, std::uint64_t b, int n, std::uint64_t aa,
                                   std::uint64_t bb) noexcept {
  return ConwayOdds{bb - conway_bits(b, a, n), aa - conway_bits(a, b, n)};
}

ConwayOdds conway_odds(const PatternString& a, const PatternString& b);

/// P(a appears before b) in a fair coin sequence.
ExactProb win_prob(const PatternString& a, const PatternString& b);

/// Autocorrelations of every string of length n, indexed by bits.
std::vector<std::uint64_t> autocorrelation_table(int n);

/// P(row B appears before column A) for every ordered distinct pair of
/// length-n strings, 3 <= n <= 10.
class ProbMatrix {
 public:
  explicit ProbMatrix(int n);

  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  const ExactProb& entry(const PatternString& row_b, const PatternString& col_a) const;

 private:
  int n_;
  std::vector<ExactProb> cells_;
};

ProbMatrix prob_matrix(int n);

}  // namespace penney
