#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace penney {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt big_from_u64(std::uint64_t v);
BigInt big_from_u128(unsigned __int128 v);

/// Decimal rendering of q with `places` digits after the point, rounded
/// half-to-even. Negative values carry a leading '-'.
std::string to_decimal(const Rational& q, int places);

std::string to_binary(const BigInt& v);

/// floor(q * 2^shift) for non-negative q.
BigInt floor_scaled(const Rational& q, unsigned long shift);

/// An exact probability: a reduced rational in [0, 1].
class ExactProb {
 public:
  ExactProb() = default;
  explicit ExactProb(Rational q);
  ExactProb(const BigInt& numerator, const BigInt& denominator);
  ExactProb(std::uint64_t numerator, std::uint64_t denominator);

  const Rational& value() const noexcept { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  /// 1 - p.
  ExactProb complement() const;

  /// Odds in favour: (numerator, denominator - numerator).
  std::pair<BigInt, BigInt> odds() const;

  /// "p/q" in lowest terms ("0/1" and "1/1" at the ends).
  std::string str() const;
  std::string decimal(int places = 8) const { return to_decimal(q_, places); }
  double to_double() const { return q_.get_d(); }

  friend bool operator==(const ExactProb& x, const ExactProb& y) { return cmp(x.q_, y.q_) == 0; }
  friend std::strong_ordering operator<=>(const ExactProb& x, const ExactProb& y) {
    const int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational q_{0};
};

/// Exact sum of many small fractions. Terms are bucketed by denominator and
/// the buckets are combined by a balanced pairwise reduction, so the result
/// is independent of insertion order and avoids a gcd per term.
class ExactSum {
 public:
  void add(std::uint64_t numerator, std::uint64_t denominator);
  void add(const Rational& q);
  void merge(const ExactSum& other);

  std::uint64_t terms() const noexcept { return terms_; }
  Rational total() const;

 private:
  std::map<std::uint64_t, unsigned __int128> buckets_;
  std::vector<Rational> extra_;
  std::uint64_t terms_ = 0;
};

Rational pairwise_sum(std::span<const Rational> values);

}  // namespace penney
