#include <doctest.h>

#include <iterator>
#include <vector>

#include "penney/pattern.hpp"
#include "support.hpp"

using namespace penney;
using test::P;

TEST_CASE("parse packs H as 1 with the first character high") {
  const auto s = P("HHTHT");
  CHECK(s.length() == 5);
  CHECK(s.bits() == 0b11010);
  CHECK(P("TTT").bits() == 0);
  CHECK(P("hhtht") == s);
  CHECK(s.str() == "HHTHT");
}

TEST_CASE("parse rejects bad input") {
  CHECK(test::error_of([] { P("HT"); }) == ErrorCode::BadLength);
  CHECK(test::error_of([] { P(std::string(65, 'H')); }) == ErrorCode::BadLength);
  CHECK(test::error_of([] { P("HXT"); }) == ErrorCode::IllegalCharacter);
  CHECK(test::error_of([] { PatternString::from_bits(8, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("length 64 strings round trip") {
  const std::string text = std::string(32, 'H') + std::string(32, 'T');
  const auto s = P(text);
  CHECK(s.str() == text);
  CHECK(s.complement().complement() == s);
  CHECK(P(std::string(64, 'H')).bits() == ~std::uint64_t{0});
}

TEST_CASE("complement prefix suffix") {
  CHECK(P("HTHH").complement() == P("THTT"));
  CHECK(P("HHH").complement() == P("TTT"));
  CHECK(P("HTTHH").complement() == P("THHTT"));
  CHECK(P("HHTHT").prefix(4).str() == "HHTH");
  CHECK(P("HHTHT").suffix(4).str() == "HTHT");
  CHECK(P("HHTHT").prefix(5) == P("HHTHT"));
  CHECK(test::error_of([] { P("HHT").prefix(0); }) == ErrorCode::BadLength);
  CHECK(test::error_of([] { P("HHT").suffix(4); }) == ErrorCode::BadLength);
  CHECK(P("HHTHT").at(2) == 'T');
}

TEST_CASE("fragments are not game strings") {
  const auto f = PatternString::fragment("HT");
  CHECK_FALSE(f.is_game_string());
  CHECK(test::error_of([&] { require_game_string(f); }) == ErrorCode::BadLength);
  CHECK(f.concat(PatternString::fragment("H")) == P("HTH"));
}

TEST_CASE("enumerate walks bits in ascending order") {
  const auto range = enumerate(3);
  std::vector<PatternString> all(range.begin(), range.end());
  REQUIRE(all.size() == 8);
  CHECK(all.front() == P("TTT"));
  CHECK(all.back() == P("HHH"));
  CHECK(std::distance(enumerate(4).begin(), enumerate(4).end()) == 16);
  CHECK(std::distance(enumerate(10).begin(), enumerate(10).end()) == 1024);
  CHECK(test::error_of([] { enumerate(2); }) == ErrorCode::BadLength);
}

TEST_CASE("encoding is a bijection up to n = 16") {
  for (int n = 3; n <= 16; ++n) {
    std::uint64_t expected = 0;
    for (const auto& s : enumerate(n)) {
      REQUIRE(s.bits() == expected);
      REQUIRE(P(format(s)) == s);
      REQUIRE(s.complement().complement() == s);
      ++expected;
    }
    CHECK(expected == (std::uint64_t{1} << n));
  }
}

TEST_CASE("prefix and suffix reassemble the string") {
  for (const auto& s : enumerate(9))
    for (int k = 1; k < 9; ++k) REQUIRE(s.prefix(k).concat(s.suffix(9 - k)) == s);
}
