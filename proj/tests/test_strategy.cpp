#include <doctest.h>

#include <algorithm>
#include <set>

#include "penney/sequence.hpp"
#include "penney/strategy.hpp"
#include "support.hpp"

using namespace penney;
using test::P;

TEST_CASE("best responses") {
  const BestResponse hhh = best_response(P("HHH"));
  CHECK(hhh.responder == P("THH"));
  CHECK(hhh.prob == ExactProb(7, 8));
  CHECK(hhh.degenerate);
  CHECK(hhh.verified);
  CHECK_FALSE(hhh.runner_up);

  const BestResponse hthh = best_response(P("HTHH"));
  CHECK(hthh.responder == P("THTH"));
  CHECK(hthh.prob == ExactProb(9, 14));
  REQUIRE(hthh.runner_up);
  CHECK(hthh.runner_up->string == P("HHTH"));

  CHECK(best_response(P("TTTT")).responder == P("HTTT"));
  CHECK(best_response(P("TTTT")).prob == ExactProb(15, 16));
}

TEST_CASE("long constant strings skip verification") {
  const BestResponse r = best_response(PatternString::repeat('H', 20));
  CHECK(r.degenerate);
  CHECK_FALSE(r.verified);
  CHECK(r.responder == P("T" + std::string(19, 'H')));
}

TEST_CASE("fast and full best responses agree, n <= 10") {
  for (int n = 3; n <= 10; ++n)
    for (const auto& a : enumerate(n)) {
      const BestResponse fast = best_response(a);
      const BestResponse full = best_response_bruteforce(a);
      REQUIRE(fast.responder == full.responder);
      REQUIRE(fast.prob == full.prob);
    }
}

TEST_CASE("full scan cap") {
  CHECK(test::error_of([] { best_response_bruteforce(PatternString::repeat('H', 15)); }) == ErrorCode::BadLength);
  CHECK(test::error_of([] { optimal_strings_bruteforce(15); }) == ErrorCode::BadLength);
}

TEST_CASE("optimal sets for small n") {
  const OptimalSet three = optimal_strings_bruteforce(3);
  CHECK(three.strings == std::vector<PatternString>{P("THT"), P("THH"), P("HTT"), P("HTH")});
  CHECK(three.player1_win_prob.complement() == ExactProb(2, 3));
  const OptimalSet four = optimal_strings_bruteforce(4);
  CHECK(four.strings == std::vector<PatternString>{P("THTT"), P("HTHH")});
  const OptimalSet five = optimal_strings_bruteforce(5);
  CHECK(five.strings == std::vector<PatternString>{P("THHTT"), P("HTTHH")});
  CHECK(five.player1_win_prob == ExactProb(9, 26));
  CHECK(optimal_strings_csirik(5).strings == five.strings);
  CHECK(optimal_strings_csirik(7).strings.size() == 6);
  CHECK(test::error_of([] { optimal_strings_csirik(4); }) == ErrorCode::BadLength);
}

TEST_CASE("construction matches the full scan, n = 5..11") {
  for (int n = 5; n <= 11; ++n) {
    const OptimalSet brute = optimal_strings_bruteforce(n);
    const OptimalSet built = optimal_strings_csirik(n);
    CAPTURE(n);
    REQUIRE(brute.strings == built.strings);
    REQUIRE(brute.player1_win_prob == built.player1_win_prob);
    REQUIRE(built.player1_win_prob == csirik_player1_win_prob(n));
  }
}

TEST_CASE("optimal sets are closed under complement") {
  for (int n = 5; n <= 18; ++n) {
    const auto strings = optimal_strings_csirik(n).strings;
    const std::set<PatternString> set(strings.begin(), strings.end());
    for (const auto& s : strings) REQUIRE(set.count(s.complement()) == 1);
  }
  const auto three = optimal_strings_bruteforce(3).strings;
  for (const auto& s : three) CHECK(std::find(three.begin(), three.end(), s.complement()) != three.end());
}

TEST_CASE("counts agree: constructed set, c*, recurrence") {
  for (int n = 5; n <= 20; ++n) {
    const auto count = static_cast<unsigned long>(optimal_strings_csirik(n).strings.size());
    CAPTURE(n);
    REQUIRE(BigInt(count) == 2 * count_cstar(n - 1));
    REQUIRE(BigInt(count) == c(n).value);
  }
  for (int n = 21; n <= 26; ++n) REQUIRE(BigInt(static_cast<unsigned long>(optimal_strings_csirik(n).strings.size())) == c(n).value);
}

TEST_CASE("c* values and identities") {
  CHECK(count_cstar(4) == 1);
  CHECK(count_cstar(6) == 3);
  for (int m = 3; m <= 9; ++m) REQUIRE(2 * count_cstar(2 * m) == count_cstar(2 * m + 1) + count_cstar(m + 1));
}
