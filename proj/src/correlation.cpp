#include "penney/correlation.hpp"

#include <algorithm>
#include <set>

#include "penney/error.hpp"

namespace penney {
namespace {

bool matches_prefix(std::uint64_t w, int len, const std::optional<PatternString>& p) {
  return !p || (w >> (len - p->length())) == p->bits();
}

bool matches_suffix(std::uint64_t w, const std::optional<PatternString>& s) {
  return !s || (w & low_mask(s->length())) == s->bits();
}

void check_fragment(const std::optional<PatternString>& f, int m) {
  if (f && f->length() >= m)
    throw Error(ErrorCode::BadLength, "constraint fragment must be shorter than m");
}

Correlation from_pattern(const std::string& ones) {
  std::uint64_t v = 0;
  for (char c : ones) v = (v << 1) | (c == '1' ? 1u : 0u);
  return Correlation(static_cast<int>(ones.size()), v);
}

std::string bit_pattern(std::initializer_list<std::pair<char, int>> runs) {
  std::string out;
  for (auto [c, count] : runs) out.append(static_cast<std::size_t>(count), c);
  return out;
}

}  // namespace

Correlation::Correlation(int n, std::uint64_t value) : n_(n), value_(value) {
  if (n < 1 || n > kMaxLength) throw Error(ErrorCode::BadLength, "correlation width outside [1,64]");
  if ((value & ~low_mask(n)) != 0) throw Error(ErrorCode::InvalidArgument, "correlation wider than n bits");
}

bool Correlation::delta(int i) const {
  if (i < 1 || i > n_) throw Error(ErrorCode::InvalidArgument, "delta index outside [1,n]");
  return (value_ >> (n_ - i)) & 1;
}

std::string Correlation::binary() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i)
    if (delta(i)) out[static_cast<std::size_t>(i - 1)] = '1';
  return out;
}

Correlation conway(const PatternString& a, const PatternString& b) {
  require_same_length(a, b);
  return Correlation(a.length(), conway_bits(a.bits(), b.bits(), a.length()));
}

Correlation autocorrelation(const PatternString& a) { return conway(a, a); }

BigInt count_correlation_pairs(int m, std::uint64_t k, const std::optional<PatternString>& x_prefix,
                               const std::optional<PatternString>& y_suffix) {
  if (m < 3 || m > 14) throw Error(ErrorCode::BadLength, "pair count needs 3 <= m <= 14");
  if (k > low_mask(m)) throw Error(ErrorCode::InvalidArgument, "k must be below 2^m");
  check_fragment(x_prefix, m);
  check_fragment(y_suffix, m);
  std::uint64_t count = 0;
  const std::uint64_t top = std::uint64_t{1} << m;
  for (std::uint64_t a1 = 0; a1 < top; ++a1) {
    if (!matches_prefix(a1, m, x_prefix)) continue;
    for (std::uint64_t a2 = 0; a2 < top; ++a2) {
      if (!matches_suffix(a2, y_suffix)) continue;
      if (conway_bits(a2, a1, m) == k) ++count;
    }
  }
  return big_from_u64(count);
}

BigInt count_autocorr_suffix_class(int length, std::uint64_t k,
                                   const std::optional<PatternString>& x_prefix,
                                   const std::optional<PatternString>& y_suffix) {
  if (length % 2 != 0 || length < 6 || length > 28)
    throw Error(ErrorCode::BadLength, "suffix class needs even length in [6, 28]");
  const int m = length / 2;
  if (k > low_mask(m)) throw Error(ErrorCode::InvalidArgument, "k must be below 2^m");
  check_fragment(x_prefix, m);
  check_fragment(y_suffix, m);
  std::uint64_t count = 0;
  const std::uint64_t top = std::uint64_t{1} << length;
  for (std::uint64_t w = 0; w < top; ++w) {
    if (!matches_prefix(w, length, x_prefix) || !matches_suffix(w, y_suffix)) continue;
    if ((autocorrelation_bits(w, length) & low_mask(m)) == k) ++count;
  }
  return big_from_u64(count);
}

std::vector<Correlation> admissible_autocorrelations_mod(int length, int m) {
  if (m < 2 || (length != 2 * m && length != 2 * m + 1 && length != 2 * m + 2))
    throw Error(ErrorCode::BadLength, "length must be 2m, 2m+1 or 2m+2 with m >= 2");
  if (length > 30) throw Error(ErrorCode::BadLength, "exhaustive scan capped at length 30");
  std::set<std::uint64_t> seen;
  const std::uint64_t top = std::uint64_t{1} << length;
  for (std::uint64_t w = 0; w < top; ++w) {
    const std::uint64_t ac = autocorrelation_bits(w, length);
    if ((ac & low_mask(m)) == 1) seen.insert(ac);
  }
  std::vector<Correlation> out;
  for (auto v : seen) out.emplace_back(length, v);
  return out;
}

std::vector<Correlation> listed_autocorrelation_forms(int length, int m) {
  if (m < 2) throw Error(ErrorCode::BadLength, "m must be >= 2");
  std::vector<Correlation> out;
  if (length == 2 * m) {
    out.push_back(from_pattern(bit_pattern({{'1', 1}, {'0', 2 * m - 2}, {'1', 1}})));
  } else if (length == 2 * m + 1) {
    out.push_back(from_pattern(bit_pattern({{'1', 1}, {'0', 2 * m - 1}, {'1', 1}})));
    out.push_back(from_pattern(bit_pattern({{'1', 1}, {'0', m - 1}, {'1', 1}, {'0', m - 1}, {'1', 1}})));
  } else if (length == 2 * m + 2) {
    out.push_back(from_pattern(bit_pattern({{'1', 1}, {'0', 2 * m}, {'1', 1}})));
    out.push_back(from_pattern(bit_pattern({{'1', 1}, {'0', m}, {'1', 1}, {'0', m - 1}, {'1', 1}})));
  } else {
    throw Error(ErrorCode::BadLength, "length must be 2m, 2m+1 or 2m+2");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace penney
