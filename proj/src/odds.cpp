#include "penney/odds.hpp"

#include "penney/error.hpp"
#include "penney/parallel.hpp"

namespace penney {

ExactProb ConwayOdds::probability() const {
  return ExactProb(big_from_u64(favour), big_from_u64(favour) + big_from_u64(against));
}

ConwayOdds conway_odds(const PatternString& a, const PatternString& b) {
  require_same_length(a, b);
  require_game_string(a);
  if (a == b) throw Error(ErrorCode::SameString, "a game needs two different strings");
  const int n = a.length();
  return conway_odds_bits(a.bits(), b.bits(), n, autocorrelation_bits(a.bits(), n),
                          autocorrelation_bits(b.bits(), n));
}

ExactProb win_prob(const PatternString& a, const PatternString& b) {
  return conway_odds(a, b).probability();
}

std::vector<std::uint64_t> autocorrelation_table(int n) {
  if (n < 1 || n > 30) throw Error(ErrorCode::BadLength, "autocorrelation table needs n in [1, 30]");
  std::vector<std::uint64_t> table(std::size_t{1} << n);
  for (std::uint64_t w = 0; w < table.size(); ++w) table[w] = autocorrelation_bits(w, n);
  return table;
}

ProbMatrix::ProbMatrix(int n) : n_(n) {
  if (n < kMinGameLength || n > 10) throw Error(ErrorCode::BadLength, "matrix needs 3 <= n <= 10");
  const std::uint64_t count = size();
  const auto autos = autocorrelation_table(n);
  cells_.resize(count * count);
  // Each worker fills its own rows; the reduction carries no data.
  parallel_reduce(count, 0, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t b = begin; b < end; ++b)
      for (std::uint64_t a = 0; a < count; ++a)
        if (a != b) cells_[b * count + a] = conway_odds_bits(b, a, n, autos[b], autos[a]).probability();
    return 0;
  }, [](int&, int&&) {});
}

const ExactProb& ProbMatrix::entry(const PatternString& row_b, const PatternString& col_a) const {
  if (row_b.length() != n_ || col_a.length() != n_)
    throw Error(ErrorCode::LengthMismatch, "matrix entry length differs from matrix n");
  if (row_b == col_a) throw Error(ErrorCode::SameString, "matrix has no diagonal");
  return cells_[row_b.bits() * size() + col_a.bits()];
}

ProbMatrix prob_matrix(int n) { return ProbMatrix(n); }

}  // namespace penney
