#include "penney/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "penney/error.hpp"
#include "penney/strategy.hpp"

namespace penney {
namespace {

constexpr int kFirstIndex = 3;

BigInt seed(int n) { return n == 3 ? BigInt(4) : BigInt(2); }

BigInt pow2(unsigned long e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::Enumerated ? "enumerated" : "recurrence";
}

Rational CnRecord::normalized() const {
  Rational d(value, pow2(static_cast<unsigned long>(n)));
  d.canonicalize();
  return d;
}

CnSequence& CnSequence::shared() {
  static CnSequence instance;
  return instance;
}

void CnSequence::extend_locked(int n) {
  if (values_.empty()) {
    values_.resize(kFirstIndex);
    for (int i = kFirstIndex; i <= 5; ++i) values_.push_back(seed(i));
  }
  while (static_cast<int>(values_.size()) <= n) {
    const int k = static_cast<int>(values_.size());
    const BigInt& half = values_[static_cast<std::size_t>(k / 2 + 1)];
    BigInt next = 2 * values_.back();
    if (k % 2 == 0) next -= half;
    else next += half;
    values_.push_back(std::move(next));
  }
}

BigInt CnSequence::value(int n) {
  if (n < kFirstIndex) throw Error(ErrorCode::BadLength, "c_n is defined for n >= 3");
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(values_.size()) > n) return values_[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
  return values_[static_cast<std::size_t>(n)];
}

int CnSequence::filled_up_to() const {
  std::shared_lock lock(mutex_);
  return values_.empty() ? kFirstIndex - 1 : static_cast<int>(values_.size()) - 1;
}

std::map<int, BigInt> CnSequence::snapshot() const {
  std::shared_lock lock(mutex_);
  std::map<int, BigInt> out;
  for (std::size_t i = kFirstIndex; i < values_.size(); ++i) out.emplace(static_cast<int>(i), values_[i]);
  return out;
}

void CnSequence::import(const std::map<int, BigInt>& values) {
  int expected = kFirstIndex;
  for (const auto& [n, v] : values) {
    if (n != expected) throw Error(ErrorCode::InvalidArgument, "imported c_n keys must run contiguously from 3");
    if (n <= 5 && v != seed(n)) throw Error(ErrorCode::InvalidArgument, "imported seeds differ from c_3..c_5");
    ++expected;
  }
  std::unique_lock lock(mutex_);
  if (static_cast<int>(values_.size()) >= expected) return;
  values_.assign(kFirstIndex, BigInt(0));
  for (const auto& [n, v] : values) values_.push_back(v);
}

CnRecord c(int n) { return CnRecord{n, CnSequence::shared().value(n), Provenance::Recurrence}; }

CnStream::CnStream() : n_(kFirstIndex), value_(seed(kFirstIndex)) {}

CnStream::~CnStream() = default;

void CnStream::advance() {
  const int next = n_ + 1;
  if (next <= 5) {
    n_ = next;
    value_ = seed(next);
    return;
  }
  const int target = next / 2 + 1;
  if (!half_) half_ = std::make_unique<CnStream>();
  while (half_->index() < target) half_->advance();
  value_ *= 2;
  if (next % 2 == 0) value_ -= half_->value();
  else value_ += half_->value();
  n_ = next;
}

BigInt cstar_recurrence(int m) {
  if (m < 4) throw Error(ErrorCode::BadLength, "c*_m is defined for m >= 4");
  std::vector<BigInt> v(7);
  for (int k = 4; k <= 6; ++k) v[static_cast<std::size_t>(k)] = count_cstar(k);
  for (int k = 7; k <= m; ++k) {
    const auto h = static_cast<std::size_t>(k / 2);
    if (k % 2 == 1) v.push_back(2 * v[static_cast<std::size_t>(k - 1)] - v[h + 1]);
    else v.push_back(2 * v[static_cast<std::size_t>(k - 1)] + v[h]);
  }
  return v[static_cast<std::size_t>(m)];
}

bool AlphaApprox::contains(const Rational& x) const { return cmp(lower(), x) <= 0 && cmp(x, upper()) < 0; }

std::optional<std::string> AlphaApprox::binary_digits(int count) const {
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "negative digit count");
  const auto k = static_cast<unsigned long>(count);
  // alpha < value strictly, so floor(alpha 2^k) <= ceil(value 2^k) - 1.
  BigInt scaled_num = upper().get_num();
  scaled_num <<= k;
  BigInt hi;
  mpz_cdiv_q(hi.get_mpz_t(), scaled_num.get_mpz_t(), upper().get_den().get_mpz_t());
  hi -= 1;
  const BigInt lo = floor_scaled(lower(), k);
  if (hi != lo) return std::nullopt;
  std::string digits = count == 0 ? std::string() : lo.get_str(2);
  if (digits == "0") digits.clear();
  if (static_cast<int>(digits.size()) < count) digits.insert(0, static_cast<std::size_t>(count) - digits.size(), '0');
  return digits;
}

int AlphaApprox::determined_bits() const {
  int lo = 0;
  int hi = truncation_n + 16;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (binary_digits(mid)) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

std::vector<int> AlphaApprox::one_bit_positions(int count) const {
  const auto digits = binary_digits(count);
  if (!digits) throw Error(ErrorCode::InvalidArgument, "interval does not determine that many digits");
  std::vector<int> out;
  for (std::size_t i = 0; i < digits->size(); ++i)
    if ((*digits)[i] == '1') out.push_back(static_cast<int>(i) + 1);
  return out;
}

bool AlphaApprox::decimal_determined(int places) const {
  return to_decimal(lower(), places) == to_decimal(upper(), places);
}

Rational alpha_tail_bound(int truncation_n) {
  // 2 * sum_{n>N} 2^{n+e} 4^{-n} = 2^{1+e} * sum_{n>N} 2^{-n} = 2^{1+e-N}.
  const int exponent = 1 + kCnUpperExponent - truncation_n;
  Rational bound(1);
  if (exponent >= 0) bound = Rational(pow2(static_cast<unsigned long>(exponent)));
  else bound = Rational(BigInt(1), pow2(static_cast<unsigned long>(-exponent)));
  return bound;
}

AlphaApprox alpha_truncated(int truncation_n) {
  if (truncation_n < 4) throw Error(ErrorCode::InvalidArgument, "truncation must be >= 4");
  // acc = sum_{n=4}^{N} c_n 4^{N-n}, accumulated in blocks so the full-width
  // accumulator is touched once per block.
  constexpr int kBlock = 256;
  CnStream stream;
  BigInt acc = 0;
  BigInt block = 0;
  int in_block = 0;
  for (int n = 4; n <= truncation_n; ++n) {
    while (stream.index() < n) stream.advance();
    block <<= 2;
    block += stream.value();
    if (++in_block == kBlock || n == truncation_n) {
      acc <<= static_cast<unsigned long>(2 * in_block);
      acc += block;
      block = 0;
      in_block = 0;
    }
  }
  const auto two_n = static_cast<unsigned long>(2 * truncation_n);
  // 1/16 - 2 acc / 4^N = (4^N - 32 acc) / (16 * 4^N)
  Rational value(pow2(two_n) - 32 * acc, pow2(two_n + 4));
  value.canonicalize();
  return AlphaApprox{truncation_n, ExactProb(value), ExactProb(alpha_tail_bound(truncation_n))};
}

AlphaApprox alpha(int precision_bits) {
  if (precision_bits < 8) throw Error(ErrorCode::InvalidArgument, "precision must be >= 8 bits");
  // tail 2^{1+e-N} < 2^{-p}  <=>  N > p + 1 + e
  const int truncation = std::max(4, precision_bits + 2 + kCnUpperExponent);
  return alpha_truncated(truncation);
}

std::vector<DeviationRow> dn_deviation(int n_max) {
  if (n_max < 8 || n_max > 64) throw Error(ErrorCode::InvalidArgument, "dn_deviation needs 8 <= n_max <= 64");
  const AlphaApprox ref = alpha(n_max + 16);
  const Rational& a = ref.upper();
  std::vector<DeviationRow> rows;
  for (int n = 8; n <= n_max; ++n) {
    const int m = n / 2;
    const CnRecord rec = c(n);
    const Rational d = rec.normalized();
    Rational main = a;
    if (n % 2 == 1) main = a * (1 + Rational(BigInt(1), pow2(static_cast<unsigned long>(m))));
    const Rational dev = abs(Rational(d - main));
    const Rational raw = abs(Rational(d - a));
    const double residual = std::ldexp(dev.get_d(), (3 * m) / 2) * ((3 * m) % 2 ? std::sqrt(2.0) : 1.0);
    rows.push_back(DeviationRow{n, d, raw.get_d(), residual});
  }
  return rows;
}

bool finite_sum_identity_holds(std::span<const BigInt> seq, int m_max) {
  if (m_max < 3) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 3");
  if (static_cast<int>(seq.size()) <= 2 * m_max + 1)
    throw Error(ErrorCode::InvalidArgument, "sequence too short for m_max");
  for (int m = 3; m <= m_max; ++m) {
    BigInt rhs = pow2(static_cast<unsigned long>(2 * (m - 2))) * seq[5];
    for (int i = 4; i <= m + 1; ++i) rhs -= seq[static_cast<std::size_t>(i)] * pow2(static_cast<unsigned long>(2 * (m + 1 - i)));
    if (rhs != seq[static_cast<std::size_t>(2 * m + 1)]) return false;
  }
  return true;
}

bool finite_sum_identity_check(int m_max) {
  if (m_max < 3) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 3");
  std::vector<BigInt> seq(static_cast<std::size_t>(2 * m_max + 2));
  for (int n = kFirstIndex; n <= 2 * m_max + 1; ++n) seq[static_cast<std::size_t>(n)] = c(n).value;
  return finite_sum_identity_holds(seq, m_max);
}

DigitStats digit_stats_of(const std::string& digits, int max_block) {
  if (max_block < 1 || max_block > 16) throw Error(ErrorCode::InvalidArgument, "max_block must be in [1, 16]");
  DigitStats out;
  out.bits = static_cast<int>(digits.size());
  out.digits = digits;
  for (int k = 1; k <= max_block; ++k) {
    BlockStats stats{k, 0, std::vector<std::uint64_t>(std::size_t{1} << k, 0),
                     Rational(BigInt(1), pow2(static_cast<unsigned long>(k))), 0.0};
    if (static_cast<int>(digits.size()) >= k) {
      std::uint64_t window = 0;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        window = ((window << 1) | (digits[i] == '1' ? 1u : 0u)) & ((std::uint64_t{1} << k) - 1);
        if (static_cast<int>(i) + 1 >= k) {
          ++stats.counts[window];
          ++stats.windows;
        }
      }
      const double expected = std::ldexp(1.0, -k);
      for (auto count : stats.counts) {
        const double observed = static_cast<double>(count) / static_cast<double>(stats.windows);
        stats.max_relative_deviation = std::max(stats.max_relative_deviation, std::abs(observed - expected) / expected);
      }
    }
    out.blocks.push_back(std::move(stats));
  }
  return out;
}

DigitStats digit_stats(int bits, int max_block) {
  if (bits < 1 || bits > 1'000'000) throw Error(ErrorCode::InvalidArgument, "bits must be in [1, 10^6]");
  if (max_block > 8) throw Error(ErrorCode::InvalidArgument, "max_block must be <= 8");
  for (int guard = 32; guard <= 256; guard *= 2) {
    const auto digits = alpha(bits + guard).binary_digits(bits);
    if (digits) return digit_stats_of(*digits, max_block);
  }
  throw Error(ErrorCode::InvalidArgument, "could not pin down the requested digits");
}

}  // namespace penney
