#include "penney/flipped.hpp"

#include <algorithm>

#include "penney/correlation.hpp"
#include "penney/error.hpp"
#include "penney/odds.hpp"
#include "penney/parallel.hpp"

namespace penney {
namespace {

constexpr int kFlippedScanMax = 12;

void check_scan_length(int n) {
  if (n < kMinGameLength || n > kFlippedScanMax)
    throw Error(ErrorCode::BadLength, "flipped scan needs 3 <= n <= 12");
}

struct Best {
  ConwayOdds odds{0, 1};
  std::vector<std::uint64_t> members;
};

// Replies b maximizing P(a appears first), i.e. b's flipped win probability.
Best flipped_scan(std::uint64_t a, int n, std::uint64_t aa, const std::vector<std::uint64_t>& autos) {
  Best best;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < top; ++b) {
    if (b == a) continue;
    const ConwayOdds odds = conway_odds_bits(a, b, n, aa, autos[b]);
    const int c = best.members.empty() ? 1 : compare_probability(odds, best.odds);
    if (c > 0) {
      best.odds = odds;
      best.members.assign(1, b);
    } else if (c == 0) {
      best.members.push_back(b);
    }
  }
  return best;
}

std::vector<PatternString> unpack(const std::vector<std::uint64_t>& words, int n) {
  std::vector<PatternString> out;
  out.reserve(words.size());
  for (auto w : words) out.push_back(PatternString::from_bits(w, n));
  return out;
}

}  // namespace

Rational FlippedOdds::ratio() const {
  Rational r(big_from_u64(in_favor), big_from_u64(against));
  r.canonicalize();
  return r;
}

ExactProb FlippedOdds::win_prob() const {
  return ExactProb(big_from_u64(in_favor), big_from_u64(in_favor) + big_from_u64(against));
}

FlippedOdds q_ratio(const PatternString& a, const PatternString& b) {
  const ConwayOdds odds = conway_odds(a, b);
  return FlippedOdds{odds.against, odds.favour};
}

ExactProb flipped_win_prob(const PatternString& a, const PatternString& b) { return win_prob(b, a); }

FlippedBestResponse flipped_best_response(const PatternString& a) {
  require_game_string(a);
  const int n = a.length();
  check_scan_length(n);
  const auto autos = autocorrelation_table(n);
  Best best = flipped_scan(a.bits(), n, autos[a.bits()], autos);
  return FlippedBestResponse{a, unpack(best.members, n), best.odds.probability()};
}

OptimalSet flipped_optimal_strings(int n) {
  check_scan_length(n);
  const auto autos = autocorrelation_table(n);
  // Player I minimizes the best reply's probability.
  struct Argmin {
    bool any = false;
    ConwayOdds odds{0, 1};
    std::vector<std::uint64_t> members;
  };
  auto merge = [](Argmin& acc, Argmin&& part) {
    if (!part.any) return;
    const int c = acc.any ? compare_probability(part.odds, acc.odds) : -1;
    if (c < 0) acc = std::move(part);
    else if (c == 0) acc.members.insert(acc.members.end(), part.members.begin(), part.members.end());
  };
  Argmin result = parallel_reduce(std::uint64_t{1} << n, Argmin{}, [&](std::uint64_t begin, std::uint64_t end) {
    Argmin local;
    for (std::uint64_t a = begin; a < end; ++a) {
      Best best = flipped_scan(a, n, autos[a], autos);
      merge(local, Argmin{true, best.odds, {a}});
    }
    return local;
  }, merge);
  std::sort(result.members.begin(), result.members.end());
  OptimalSet out;
  out.n = n;
  out.strings = unpack(result.members, n);
  out.player1_win_prob = result.odds.probability().complement();
  return out;
}

std::vector<PatternString> unit_ratio_partners(const PatternString& a) {
  require_game_string(a);
  const int n = a.length();
  if (n > 16) throw Error(ErrorCode::BadLength, "partner scan needs n <= 16");
  const std::uint64_t aa = autocorrelation_bits(a.bits(), n);
  std::vector<PatternString> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (b == a.bits()) continue;
    const ConwayOdds odds = conway_odds_bits(a.bits(), b, n, aa, autocorrelation_bits(b, n));
    if (odds.favour == odds.against) out.push_back(PatternString::from_bits(b, n));
  }
  return out;
}

std::vector<PatternString> conjectured_responses(const PatternString& a) {
  require_game_string(a);
  const int n = a.length();
  const PatternString tail = a.suffix(n - 1);
  std::vector<PatternString> out{PatternString::repeat('H', n), PatternString::repeat('T', n),
                                 tail.concat(PatternString::fragment("H")),
                                 tail.concat(PatternString::fragment("T"))};
  std::erase(out, a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Conjecture3Report check_conjecture3(int n) {
  check_scan_length(n);
  const auto autos = autocorrelation_table(n);
  const std::uint64_t top = std::uint64_t{1} << n;
  auto combine = [](Conjecture3Report& acc, Conjecture3Report&& part) {
    acc.strings_checked += part.strings_checked;
    acc.tied_rows += part.tied_rows;
    for (auto& ce : part.counterexamples) acc.counterexamples.push_back(std::move(ce));
  };
  Conjecture3Report report = parallel_reduce(top, Conjecture3Report{}, [&](std::uint64_t begin, std::uint64_t end) {
    Conjecture3Report local;
    for (std::uint64_t a = begin; a < end; ++a) {
      const Best best = flipped_scan(a, n, autos[a], autos);
      ++local.strings_checked;
      if (best.members.size() > 1) ++local.tied_rows;
      const PatternString queried = PatternString::from_bits(a, n);
      const auto allowed = conjectured_responses(queried);
      std::vector<PatternString> outside;
      for (auto w : best.members) {
        const PatternString b = PatternString::from_bits(w, n);
        if (!std::binary_search(allowed.begin(), allowed.end(), b)) outside.push_back(b);
      }
      if (!outside.empty())
        local.counterexamples.push_back(
            {FlippedBestResponse{queried, unpack(best.members, n), best.odds.probability()}, std::move(outside)});
    }
    return local;
  }, combine);
  report.n = n;
  return report;
}

}  // namespace penney
