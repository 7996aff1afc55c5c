#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "penney/exact.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// Conway number of a pair of equal-length strings, read either as an n-bit
/// string delta_1..delta_n (delta_1 most significant) or as its integer value.
class Correlation {
 public:
  Correlation(int n, std::uint64_t value);

  int n() const noexcept { return n_; }
  std::uint64_t value() const noexcept { return value_; }
  /// delta_i for 1 <= i <= n.
  bool delta(int i) const;
  /// n-character 0/1 string, zero padded.
  std::string binary() const;

  friend bool operator==(const Correlation&, const Correlation&) = default;
  friend auto operator<=>(const Correlation&, const Correlation&) = default;

 private:
  int n_;
  std::uint64_t value_;
};

/// Word-level Conway number of packed strings a, b of length n (1..64).
/// Bit (len-1) is set when the last `len` characters of a equal the first
/// `len` characters of b.
inline std::uint64_t conway_bits(std::uint64_t a, std::uint64_t b, int n) noexcept {
  std::uint64_t v = 0;
  for (int len = n; len >= 1; --len)
    if ((a & low_mask(len)) == (b >> (n - len))) v |= std::uint64_t{1} << (len - 1);
  return v;
}

inline std::uint64_t autocorrelation_bits(std::uint64_t a, int n) noexcept {
  return conway_bits(a, a, n);
}

/// True when the autocorrelation of the length-`len` word is 1 0^{len-2} 1,
/// i.e. the word overlaps itself only trivially and at its first/last letter.
inline bool has_sparse_autocorrelation(std::uint64_t w, int len) noexcept {
  for (int overlap = len - 1; overlap >= 2; --overlap)
    if ((w & low_mask(overlap)) == (w >> (len - overlap))) return false;
  return (w & 1) == (w >> (len - 1));
}

Correlation conway(const PatternString& a, const PatternString& b);
Correlation autocorrelation(const PatternString& a);

/// Number of ordered pairs (A1, A2) of length-m strings whose Conway number
/// C(A2, A1) equals k, with A1 starting with x_prefix and A2 ending with
/// y_suffix when given. Full 4^m scan, 3 <= m <= 14.
BigInt count_correlation_pairs(int m, std::uint64_t k,
                               const std::optional<PatternString>& x_prefix = std::nullopt,
                               const std::optional<PatternString>& y_suffix = std::nullopt);

/// Number of strings of even length 2m whose autocorrelation is congruent to
/// k mod 2^m, optionally constrained to begin with x_prefix / end with
/// y_suffix. 6 <= length <= 28.
BigInt count_autocorr_suffix_class(int length, std::uint64_t k,
                                   const std::optional<PatternString>& x_prefix = std::nullopt,
                                   const std::optional<PatternString>& y_suffix = std::nullopt);

/// Distinct autocorrelations, found by exhaustive scan, of strings of the
/// given length whose autocorrelation is congruent to 1 mod 2^m.
/// length must be 2m, 2m+1 or 2m+2 with m >= 2. Sorted ascending.
std::vector<Correlation> admissible_autocorrelations_mod(int length, int m);

/// The candidate forms the scan above is allowed to produce:
///   2m:   1 0^{2m-2} 1
///   2m+1: 1 0^{2m-1} 1  and  1 0^{m-1} 1 0^{m-1} 1
///   2m+2: 1 0^{2m} 1    and  1 0^{m} 1 0^{m-1} 1
std::vector<Correlation> listed_autocorrelation_forms(int length, int m);

}  // namespace penney
