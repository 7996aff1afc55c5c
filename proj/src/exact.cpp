#include "penney/exact.hpp"

#include <algorithm>

#include "penney/error.hpp"

namespace penney {

BigInt big_from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == 8, "mpz_class needs 64-bit unsigned long");
  return BigInt(static_cast<unsigned long>(v));
}

BigInt big_from_u128(unsigned __int128 v) {
  BigInt hi = big_from_u64(static_cast<std::uint64_t>(v >> 64));
  hi <<= 64;
  return hi + big_from_u64(static_cast<std::uint64_t>(v));
}

std::string to_decimal(const Rational& q, int places) {
  if (places < 0) throw Error(ErrorCode::InvalidArgument, "negative decimal places");
  const bool negative = sgn(q) < 0;
  Rational a = abs(q);

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  BigInt num = a.get_num() * scale;
  const BigInt& den = a.get_den();
  BigInt quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(BigInt(2 * rem), den);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

  std::string digits = quot.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  std::string out;
  if (negative && sgn(quot) != 0) out.push_back('-');
  const std::size_t int_len = digits.size() - static_cast<std::size_t>(places);
  out.append(digits, 0, int_len);
  if (places > 0) {
    out.push_back('.');
    out.append(digits, int_len, std::string::npos);
  }
  return out;
}

std::string to_binary(const BigInt& v) { return v.get_str(2); }

BigInt floor_scaled(const Rational& q, unsigned long shift) {
  BigInt num = q.get_num();
  num <<= shift;
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

ExactProb::ExactProb(Rational q) : q_(std::move(q)) {
  q_.canonicalize();
  if (sgn(q_) < 0 || cmp(q_, 1) > 0)
    throw Error(ErrorCode::InvalidArgument, "probability outside [0,1]: " + q_.get_str());
}

ExactProb::ExactProb(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  *this = ExactProb(Rational(numerator, denominator));
}

ExactProb::ExactProb(std::uint64_t numerator, std::uint64_t denominator)
    : ExactProb(big_from_u64(numerator), big_from_u64(denominator)) {}

ExactProb ExactProb::complement() const { return ExactProb(Rational(1 - q_)); }

std::pair<BigInt, BigInt> ExactProb::odds() const {
  return {q_.get_num(), q_.get_den() - q_.get_num()};
}

std::string ExactProb::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

void ExactSum::add(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  buckets_[denominator] += numerator;
  ++terms_;
}

void ExactSum::add(const Rational& q) {
  extra_.push_back(q);
  ++terms_;
}

void ExactSum::merge(const ExactSum& other) {
  for (const auto& [den, num] : other.buckets_) buckets_[den] += num;
  extra_.insert(extra_.end(), other.extra_.begin(), other.extra_.end());
  terms_ += other.terms_;
}

Rational ExactSum::total() const {
  std::vector<Rational> parts;
  parts.reserve(buckets_.size() + extra_.size());
  for (const auto& [den, num] : buckets_) {
    Rational q(big_from_u128(num), big_from_u64(den));
    q.canonicalize();
    parts.push_back(std::move(q));
  }
  parts.insert(parts.end(), extra_.begin(), extra_.end());
  return pairwise_sum(parts);
}

Rational pairwise_sum(std::span<const Rational> values) {
  if (values.empty()) return Rational(0);
  std::vector<Rational> level(values.begin(), values.end());
  while (level.size() > 1) {
    std::vector<Rational> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

}  // namespace penney
