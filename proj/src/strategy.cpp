#include "penney/strategy.hpp"

#include <algorithm>

#include "penney/correlation.hpp"
#include "penney/error.hpp"
#include "penney/parallel.hpp"

namespace penney {
namespace {

constexpr int kBruteForceMax = 14;

struct Scan {
  std::uint64_t best = 0;
  ConwayOdds best_odds{0, 1};
  std::uint64_t second = 0;
  ConwayOdds second_odds{0, 1};
  bool has_best = false;
  bool has_second = false;
  bool tie = false;

  void offer(std::uint64_t b, const ConwayOdds& odds) {
    if (!has_best) {
      best = b, best_odds = odds, has_best = true;
      return;
    }
    const int c = compare_probability(odds, best_odds);
    if (c > 0) {
      second = best, second_odds = best_odds, has_second = true;
      best = b, best_odds = odds, tie = false;
    } else if (c == 0) {
      tie = true;
      second = b, second_odds = odds, has_second = true;
    } else if (!has_second || compare_probability(odds, second_odds) > 0) {
      second = b, second_odds = odds, has_second = true;
    }
  }
};

Scan scan_responses(std::uint64_t a, int n, std::uint64_t aa, const std::vector<std::uint64_t>* autos) {
  Scan scan;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < top; ++b) {
    if (b == a) continue;
    const std::uint64_t bb = autos ? (*autos)[b] : autocorrelation_bits(b, n);
    scan.offer(b, conway_odds_bits(b, a, n, bb, aa));
  }
  return scan;
}

void check_brute_length(int n) {
  if (n < kMinGameLength || n > kBruteForceMax)
    throw Error(ErrorCode::BadLength, "full scan needs 3 <= n <= 14");
}

}  // namespace

BestResponse best_response(const PatternString& a) {
  require_game_string(a);
  const int n = a.length();
  const PatternString head = a.prefix(n - 1);
  const PatternString with_h = PatternString::fragment("H").concat(head);
  const PatternString with_t = PatternString::fragment("T").concat(head);

  BestResponse out{a, a, ExactProb(), std::nullopt, false, true};
  if (with_h == a || with_t == a) {
    const PatternString survivor = with_h == a ? with_t : with_h;
    out.responder = survivor;
    out.prob = win_prob(survivor, a);
    out.degenerate = true;
    if (n <= kBruteForceMax) {
      const Scan scan = scan_responses(a.bits(), n, autocorrelation_bits(a.bits(), n), nullptr);
      if (scan.tie || scan.best != survivor.bits())
        throw Error(ErrorCode::TieDetected, "surviving candidate is not the unique best reply to " + a.str());
    } else {
      out.verified = false;
    }
    return out;
  }

  const ConwayOdds odds_h = conway_odds(with_h, a);
  const ConwayOdds odds_t = conway_odds(with_t, a);
  const int c = compare_probability(odds_h, odds_t);
  if (c == 0) throw Error(ErrorCode::TieDetected, "both candidates tie against " + a.str());
  const bool h_wins = c > 0;
  out.responder = h_wins ? with_h : with_t;
  out.prob = (h_wins ? odds_h : odds_t).probability();
  out.runner_up = Candidate{h_wins ? with_t : with_h, (h_wins ? odds_t : odds_h).probability()};
  return out;
}

BestResponse best_response_bruteforce(const PatternString& a) {
  require_game_string(a);
  const int n = a.length();
  check_brute_length(n);
  const Scan scan = scan_responses(a.bits(), n, autocorrelation_bits(a.bits(), n), nullptr);
  if (scan.tie) throw Error(ErrorCode::TieDetected, "several best replies to " + a.str());
  BestResponse out{a, PatternString::from_bits(scan.best, n), scan.best_odds.probability(),
                   std::nullopt, false, true};
  if (scan.has_second)
    out.runner_up = Candidate{PatternString::from_bits(scan.second, n), scan.second_odds.probability()};
  return out;
}

OptimalSet optimal_strings_bruteforce(int n) {
  check_brute_length(n);
  const auto autos = autocorrelation_table(n);
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
      const Scan scan = scan_responses(a, n, autos[a], &autos);
      if (scan.tie)
        throw Error(ErrorCode::TieDetected, "several best replies to " + PatternString::from_bits(a, n).str());
      Argmin single{true, scan.best_odds, {a}};
      merge(local, std::move(single));
    }
    return local;
  }, merge);

  std::sort(result.members.begin(), result.members.end());
  OptimalSet out;
  out.n = n;
  for (auto w : result.members) out.strings.push_back(PatternString::from_bits(w, n));
  out.player1_win_prob = result.odds.probability().complement();
  return out;
}

ExactProb csirik_player1_win_prob(int n) {
  if (n < 5) throw Error(ErrorCode::BadLength, "closed form needs n >= 5");
  BigInt q = 1;
  q <<= static_cast<unsigned long>(n - 2);
  return ExactProb(q + 1, 3 * q + 2);
}

OptimalSet optimal_strings_csirik(int n) {
  if (n < 5 || n > 40) throw Error(ErrorCode::BadLength, "construction needs 5 <= n <= 40");
  // (n-1)-prefix: H T <free n-5 bits> T H ; the full string appends H.
  const int free_bits = n - 5;
  const int prefix_len = n - 1;
  std::vector<std::uint64_t> found;
  for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << free_bits); ++mid) {
    const std::uint64_t prefix = (std::uint64_t{0b10} << (free_bits + 2)) | (mid << 2) | 0b01;
    if (has_sparse_autocorrelation(prefix, prefix_len)) {
      const std::uint64_t full = (prefix << 1) | 1;
      found.push_back(full);
      found.push_back(~full & low_mask(n));
    }
  }
  std::sort(found.begin(), found.end());
  OptimalSet out;
  out.n = n;
  for (auto w : found) out.strings.push_back(PatternString::from_bits(w, n));
  out.player1_win_prob = csirik_player1_win_prob(n);
  return out;
}

BigInt count_cstar(int m) {
  if (m < 4 || m > 40) throw Error(ErrorCode::BadLength, "c* scan needs 4 <= m <= 40");
  const int free_bits = m - 4;
  std::uint64_t count = parallel_reduce(std::uint64_t{1} << free_bits, std::uint64_t{0},
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        for (std::uint64_t mid = begin; mid < end; ++mid) {
          const std::uint64_t w = (std::uint64_t{0b10} << (free_bits + 2)) | (mid << 2) | 0b01;
          if (has_sparse_autocorrelation(w, m)) ++local;
        }
        return local;
      },
      [](std::uint64_t& acc, std::uint64_t&& part) { acc += part; });
  return big_from_u64(count);
}

}  // namespace penney
