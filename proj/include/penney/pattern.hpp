#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>

namespace penney {

inline constexpr int kMinGameLength = 3;
inline constexpr int kMaxLength = 64;

constexpr std::uint64_t low_mask(int k) noexcept {
  return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

/// A head/tail string packed into one word. H=1, T=0, first character in the
/// most significant of the `length` used bits.
///
/// Game strings have length in [3, 64]. Shorter values (length 1 or 2) only
/// arise as fragments from prefix()/suffix() or fragment(); game-level
/// operations reject them.
class PatternString {
 public:
  /// Parses a game string: only H/T (either case), length in [3, 64].
  static PatternString parse(std::string_view text);
  /// Parses a fragment of any length in [1, 64].
  static PatternString fragment(std::string_view text);
  /// Builds from packed bits; `bits` must not use positions >= length.
  static PatternString from_bits(std::uint64_t bits, int length);
  /// n copies of 'H' or 'T'.
  static PatternString repeat(char ch, int length);

  int length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_game_string() const noexcept { return length_ >= kMinGameLength; }

  /// Character at 0-based position i.
  char at(int i) const;
  std::string str() const;

  PatternString complement() const noexcept;
  PatternString prefix(int k) const;
  PatternString suffix(int k) const;
  PatternString concat(const PatternString& tail) const;

  friend bool operator==(const PatternString&, const PatternString&) = default;
  friend std::strong_ordering operator<=>(const PatternString& x, const PatternString& y) noexcept {
    if (auto c = x.length_ <=> y.length_; c != 0) return c;
    return x.bits_ <=> y.bits_;
  }

 private:
  PatternString(std::uint64_t bits, int length) noexcept : bits_(bits), length_(length) {}

  std::uint64_t bits_ = 0;
  int length_ = 0;
};

std::string format(const PatternString& s);

/// Throws BadLength unless the string is a game string.
void require_game_string(const PatternString& s);
/// Throws LengthMismatch unless both strings have the same length.
void require_same_length(const PatternString& a, const PatternString& b);

/// All 2^n strings of length n in ascending bits order.
class StringRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = PatternString;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = PatternString;

    iterator() = default;
    PatternString operator*() const { return PatternString::from_bits(bits_, length_); }
    iterator& operator++() noexcept {
      if (bits_ == low_mask(length_)) done_ = true;
      else ++bits_;
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& x, const iterator& y) noexcept {
      return x.done_ == y.done_ && (x.done_ || x.bits_ == y.bits_);
    }

   private:
    friend class StringRange;
    iterator(std::uint64_t bits, int length, bool done) noexcept
        : bits_(bits), length_(length), done_(done) {}
    std::uint64_t bits_ = 0;
    int length_ = 0;
    bool done_ = true;
  };

  explicit StringRange(int length) noexcept : length_(length) {}
  iterator begin() const noexcept { return iterator(0, length_, false); }
  iterator end() const noexcept { return iterator(0, length_, true); }
  int length() const noexcept { return length_; }

 private:
  int length_;
};

/// Game-string enumeration; throws BadLength outside [3, 64].
StringRange enumerate(int n);

}  // namespace penney
