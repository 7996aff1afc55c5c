#include "penney/pattern.hpp"

#include "penney/error.hpp"

namespace penney {
namespace {

void check_length(int length, int min_length) {
  if (length < min_length || length > kMaxLength)
    throw Error(ErrorCode::BadLength, "length " + std::to_string(length) + " outside [" +
                                          std::to_string(min_length) + ", 64]");
}

PatternString parse_with_min(std::string_view text, int min_length) {
  check_length(static_cast<int>(text.size()), min_length);
  std::uint64_t bits = 0;
  for (char ch : text) {
    bits <<= 1;
    if (ch == 'H' || ch == 'h') bits |= 1;
    else if (ch != 'T' && ch != 't')
      throw Error(ErrorCode::IllegalCharacter, std::string("character '") + ch + "' is not H or T");
  }
  return PatternString::from_bits(bits, static_cast<int>(text.size()));
}

}  // namespace

PatternString PatternString::parse(std::string_view text) { return parse_with_min(text, kMinGameLength); }

PatternString PatternString::fragment(std::string_view text) { return parse_with_min(text, 1); }

PatternString PatternString::from_bits(std::uint64_t bits, int length) {
  check_length(length, 1);
  if ((bits & ~low_mask(length)) != 0)
    throw Error(ErrorCode::InvalidArgument, "bits above the string length are set");
  return PatternString(bits, length);
}

PatternString PatternString::repeat(char ch, int length) {
  check_length(length, 1);
  if (ch != 'H' && ch != 'T') throw Error(ErrorCode::IllegalCharacter, "repeat expects H or T");
  return PatternString(ch == 'H' ? low_mask(length) : 0, length);
}

char PatternString::at(int i) const {
  if (i < 0 || i >= length_) throw Error(ErrorCode::InvalidArgument, "index out of range");
  return ((bits_ >> (length_ - 1 - i)) & 1) ? 'H' : 'T';
}

std::string PatternString::str() const {
  std::string out(static_cast<std::size_t>(length_), 'T');
  for (int i = 0; i < length_; ++i)
    if ((bits_ >> (length_ - 1 - i)) & 1) out[static_cast<std::size_t>(i)] = 'H';
  return out;
}

PatternString PatternString::complement() const noexcept {
  return PatternString(~bits_ & low_mask(length_), length_);
}

PatternString PatternString::prefix(int k) const {
  check_length(k, 1);
  if (k > length_) throw Error(ErrorCode::BadLength, "prefix longer than string");
  return PatternString(bits_ >> (length_ - k), k);
}

PatternString PatternString::suffix(int k) const {
  check_length(k, 1);
  if (k > length_) throw Error(ErrorCode::BadLength, "suffix longer than string");
  return PatternString(bits_ & low_mask(k), k);
}

PatternString PatternString::concat(const PatternString& tail) const {
  const int total = length_ + tail.length_;
  check_length(total, 1);
  const std::uint64_t head = tail.length_ >= 64 ? 0 : (bits_ << tail.length_);
  return PatternString(head | tail.bits_, total);
}

std::string format(const PatternString& s) { return s.str(); }

void require_game_string(const PatternString& s) {
  if (!s.is_game_string())
    throw Error(ErrorCode::BadLength,
                "game strings need length >= 3, got " + std::to_string(s.length()));
}

void require_same_length(const PatternString& a, const PatternString& b) {
  if (a.length() != b.length())
    throw Error(ErrorCode::LengthMismatch, "lengths " + std::to_string(a.length()) + " and " +
                                               std::to_string(b.length()) + " differ");
}

StringRange enumerate(int n) {
  check_length(n, kMinGameLength);
  return StringRange(n);
}

}  // namespace penney
