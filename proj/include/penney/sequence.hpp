#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "penney/exact.hpp"

namespace penney {

enum class Provenance { Enumerated, Recurrence };

std::string_view to_string(Provenance p) noexcept;

/// c_n: the number of optimal Player I strings of length n.
struct CnRecord {
  int n;
  BigInt value;
  Provenance provenance;

  /// d_n = c_n / 2^n.
  Rational normalized() const;
};

/// Memoized c_n table: seeds c_3..c_5 = 4, 2, 2, then
/// c_n = 2 c_{n-1} - (-1)^n c_{floor(n/2)+1} for n >= 6.
/// Readers share the table; extensions take the writer lock.
class CnSequence {
 public:
  CnSequence() = default;

  /// Process-wide instance used by c().
  static CnSequence& shared();

  BigInt value(int n);
  /// Largest n currently held.
  int filled_up_to() const;
  /// Values held in the table, keyed by n.
  std::map<int, BigInt> snapshot() const;
  /// Installs previously computed values. Keys must run contiguously from 3
  /// and the seeds must match; deeper validation is the caller's job.
  void import(const std::map<int, BigInt>& values);

 private:
  void extend_locked(int n);

  mutable std::shared_mutex mutex_;
  std::vector<BigInt> values_;  // index n, entries 0..2 unused
};

CnRecord c(int n);

/// Streaming generator for c_3, c_4, ... holding O(n) bits in total. Each
/// generator keeps only its current value and a child generator that trails
/// at half speed to supply c_{floor(n/2)+1}.
class CnStream {
 public:
  CnStream();
  CnStream(CnStream&&) noexcept = default;
  CnStream& operator=(CnStream&&) noexcept = default;
  ~CnStream();

  int index() const noexcept { return n_; }
  const BigInt& value() const noexcept { return value_; }
  void advance();

 private:
  int n_;
  BigInt value_;
  std::unique_ptr<CnStream> half_;
};

/// c*_m via c*_{2k+1} = 2c*_{2k} - c*_{k+1} and c*_{2k} = 2c*_{2k-1} + c*_k,
/// with c*_4..c*_6 counted by enumeration. m >= 4.
BigInt cstar_recurrence(int m);

/// Rational truncation of alpha = 1/16 - 2 sum_{n>=4} c_n / 4^n.
/// Terms are positive, so value - error_bound <= alpha < value.
struct AlphaApprox {
  int truncation_n;
  ExactProb value;
  ExactProb error_bound;

  Rational lower() const { return value.value() - error_bound.value(); }
  const Rational& upper() const { return value.value(); }
  bool contains(const Rational& x) const;

  /// First `count` binary digits after the point, or nullopt when the
  /// interval does not pin them down.
  std::optional<std::string> binary_digits(int count) const;
  /// Number of leading binary digits the interval determines.
  int determined_bits() const;
  /// 1-based positions of 1 digits among the first `count` digits.
  std::vector<int> one_bit_positions(int count) const;
  /// Decimal rendering of the partial sum, and whether both interval ends
  /// round to the same text.
  std::string decimal(int places) const { return value.decimal(places); }
  bool decimal_determined(int places) const;
};

/// Exponent e in the bound c_n <= 2^{n+e} used for the tail (e = -4).
inline constexpr int kCnUpperExponent = -4;

/// Tail bound 2 sum_{n>N} 2^{n+e} / 4^n = 2^{1+e-N}, derived from e above.
Rational alpha_tail_bound(int truncation_n);

/// Truncates the series so that the tail bound is below 2^{-precision_bits}.
AlphaApprox alpha(int precision_bits);

/// Partial sum for an explicit truncation point N >= 4.
AlphaApprox alpha_truncated(int truncation_n);

struct DeviationRow {
  int n;
  Rational d_n;
  double abs_deviation;  // |d_n - alpha|
  double residual;       // |d_n - main term| * 2^{(3/2) m}, n = 2m or 2m+1
};

/// Scaled deviation residuals for 8 <= n <= n_max <= 64 with the odd main term
/// alpha (1 + 2^{-m}); alpha taken from alpha(n_max + 16).
std::vector<DeviationRow> dn_deviation(int n_max);

/// c_{2m+1} == 4^{m-2} c_5 - sum_{i=4}^{m+1} c_i 4^{m+1-i} for m = 3..m_max,
/// evaluated on `seq` (indexed by n, needs entries up to 2 m_max + 1).
bool finite_sum_identity_holds(std::span<const BigInt> seq, int m_max);
bool finite_sum_identity_check(int m_max);

struct BlockStats {
  int block_length;
  std::uint64_t windows;
  std::vector<std::uint64_t> counts;  // indexed by the block read as binary
  Rational expected;                  // 1 / 2^block_length
  double max_relative_deviation;
};

struct DigitStats {
  int bits;
  std::string digits;
  std::vector<BlockStats> blocks;  // block lengths 1..max_block
};

/// Sliding-window block counts over the first `bits` binary digits of alpha.
DigitStats digit_stats(int bits, int max_block);
/// Same statistics over an arbitrary digit string.
DigitStats digit_stats_of(const std::string& digits, int max_block);

}  // namespace penney
