#include "penney/stats.hpp"

#include <algorithm>
#include <cmath>

#include "penney/correlation.hpp"
#include "penney/error.hpp"
#include "penney/odds.hpp"
#include "penney/parallel.hpp"

namespace penney {
namespace {

constexpr int kRandOptMax = 20;
constexpr int kOptRandScanMax = 14;
constexpr int kTableMax = 24;

BigInt pow2(int e) {
  BigInt v = 1;
  v <<= static_cast<unsigned long>(e);
  return v;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Best reply's odds against packed a, from the two shifted-prefix candidates.
ConwayOdds fast_best_odds(std::uint64_t a, int n, std::uint64_t aa) {
  const std::uint64_t head = a >> 1;
  const std::uint64_t with_t = head;
  const std::uint64_t with_h = head | (std::uint64_t{1} << (n - 1));
  if (with_h == a) return conway_odds_bits(with_t, a, n, autocorrelation_bits(with_t, n), aa);
  if (with_t == a) return conway_odds_bits(with_h, a, n, autocorrelation_bits(with_h, n), aa);
  const ConwayOdds h = conway_odds_bits(with_h, a, n, autocorrelation_bits(with_h, n), aa);
  const ConwayOdds t = conway_odds_bits(with_t, a, n, autocorrelation_bits(with_t, n), aa);
  return compare_probability(h, t) >= 0 ? h : t;
}

ExactSum random_reply_sum(std::uint64_t a, int n, const std::vector<std::uint64_t>* autos) {
  ExactSum sum;
  const std::uint64_t aa = autocorrelation_bits(a, n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (b == a) continue;
    const std::uint64_t bb = autos ? (*autos)[b] : autocorrelation_bits(b, n);
    const ConwayOdds odds = conway_odds_bits(b, a, n, bb, aa);
    sum.add(odds.favour, odds.favour + odds.against);
  }
  return sum;
}

ExactProb finish_random_mean(ExactSum sum, int n, OpponentPool pool) {
  Rational total = sum.total();
  BigInt count = pow2(n);
  if (pool == OpponentPool::IncludeOwnAsTie) total += Rational(1, 2);
  else count -= 1;
  Rational mean = total / Rational(count);
  mean.canonicalize();
  return ExactProb(mean);
}

double random_reply_double(std::uint64_t a, int n, const std::vector<std::uint64_t>& autos) {
  double s = 0;
  const std::uint64_t aa = autos[a];
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (b == a) continue;
    const ConwayOdds odds = conway_odds_bits(b, a, n, autos[b], aa);
    s += static_cast<double>(odds.favour) / static_cast<double>(odds.favour + odds.against);
  }
  return s;
}

OptRandResult mean_over(const std::vector<PatternString>& strings, OpponentPool pool, bool exhaustive) {
  OptRandResult out;
  out.exhaustive = exhaustive;
  Rational total = 0;
  for (const auto& a : strings) {
    const ExactProb p = random_reply_prob(a, pool);
    total += p.value();
    out.breakdown.push_back(Candidate{a, p});
  }
  total /= static_cast<long>(strings.size());
  total.canonicalize();
  out.value = ExactProb(total);
  return out;
}

void check_table_length(int n, int cap) {
  if (n < kMinGameLength || n > cap)
    throw Error(ErrorCode::BadLength, "n must be in [3, " + std::to_string(cap) + "]");
}

}  // namespace

std::string_view to_string(OptimalChoice c) noexcept {
  return c == OptimalChoice::ConwayOptimal ? "conway-optimal" : "best-against-random";
}

std::string_view to_string(OpponentPool p) noexcept {
  return p == OpponentPool::ExcludeOwnString ? "exclude-own" : "include-own-as-tie";
}

ExactProb p_opt_opt(int n) {
  if (n < kMinGameLength) throw Error(ErrorCode::BadLength, "n must be >= 3");
  if (n < 5) return optimal_strings_bruteforce(n).player1_win_prob.complement();
  return ExactProb(pow2(n - 1) + 1, 3 * pow2(n - 2) + 2);
}

ExactProb p_rand_opt(int n) {
  check_table_length(n, kRandOptMax);
  ExactSum sum = parallel_reduce(std::uint64_t{1} << n, ExactSum{}, [&](std::uint64_t begin, std::uint64_t end) {
    ExactSum local;
    for (std::uint64_t a = begin; a < end; ++a) {
      const ConwayOdds odds = fast_best_odds(a, n, autocorrelation_bits(a, n));
      local.add(odds.favour, odds.favour + odds.against);
    }
    return local;
  }, [](ExactSum& acc, ExactSum&& part) { acc.merge(part); });
  Rational mean = sum.total() / Rational(pow2(n));
  mean.canonicalize();
  return ExactProb(mean);
}

ExactProb random_reply_prob(const PatternString& a, OpponentPool pool) {
  require_game_string(a);
  const int n = a.length();
  check_table_length(n, kTableMax);
  return finish_random_mean(random_reply_sum(a.bits(), n, nullptr), n, pool);
}

OptRandResult p_opt_rand(int n, OptimalChoice choice, OpponentPool pool) {
  check_table_length(n, kTableMax);
  if (choice == OptimalChoice::ConwayOptimal) {
    check_table_length(n, kOptRandScanMax);
    const OptimalSet set = n >= 5 ? optimal_strings_csirik(n) : optimal_strings_bruteforce(n);
    return mean_over(set.strings, pool, true);
  }
  if (n > kOptRandScanMax) {
    std::vector<PatternString> family{PatternString::fragment("H").concat(PatternString::repeat('T', n - 1)),
                                      PatternString::fragment("T").concat(PatternString::repeat('H', n - 1))};
    std::sort(family.begin(), family.end());
    return mean_over(family, pool, false);
  }
  // Screen in double precision; anything within the rounding margin of the
  // minimum is settled exactly.
  const auto autos = autocorrelation_table(n);
  const std::uint64_t top = std::uint64_t{1} << n;
  std::vector<double> sums(top);
  parallel_reduce(top, 0, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t a = begin; a < end; ++a) sums[a] = random_reply_double(a, n, autos);
    return 0;
  }, [](int&, int&&) {});
  const double low = *std::min_element(sums.begin(), sums.end());
  const double margin = 1e-9 * std::max(1.0, std::abs(low));
  std::vector<std::pair<Rational, std::uint64_t>> close;
  for (std::uint64_t a = 0; a < top; ++a)
    if (sums[a] <= low + margin) close.emplace_back(random_reply_sum(a, n, &autos).total(), a);
  const Rational best = std::min_element(close.begin(), close.end(), [](const auto& x, const auto& y) {
                          return cmp(x.first, y.first) < 0;
                        })->first;
  std::vector<PatternString> minimizers;
  for (const auto& [total, a] : close)
    if (cmp(total, best) == 0) minimizers.push_back(PatternString::from_bits(a, n));
  return mean_over(minimizers, pool, true);
}

std::vector<StrategyMixRow> strategy_table(int n_min, int n_max, OptimalChoice choice, OpponentPool pool) {
  if (n_min < kMinGameLength || n_max > kTableMax || n_min > n_max)
    throw Error(ErrorCode::BadLength, "table range must satisfy 3 <= from <= to <= 24");
  std::vector<StrategyMixRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    StrategyMixRow row{n, p_opt_opt(n), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    const Rational scale = Rational(pow2(n)) / n;
    if (n <= kRandOptMax) {
      row.p_rand_opt = p_rand_opt(n);
      Rational d = scale * (row.p_rand_opt->value() - Rational(2, 3));
      d.canonicalize();
      row.diag_rand = d;
    }
    if (choice == OptimalChoice::BestAgainstRandom || n <= kOptRandScanMax) {
      row.p_opt_rand = p_opt_rand(n, choice, pool).value;
      Rational d = scale * (Rational(1, 2) - row.p_opt_rand->value());
      d.canonicalize();
      row.diag_opt_rand = d;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SimulationResult simulate(const PatternString& a, const PatternString& b, std::uint64_t trials,
                          std::uint64_t seed) {
  require_same_length(a, b);
  require_game_string(a);
  if (a == b) throw Error(ErrorCode::SameString, "a game needs two different strings");
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  const int n = a.length();
  const std::uint64_t mask = low_mask(n);
  const std::uint64_t wa = a.bits();
  const std::uint64_t wb = b.bits();

  const std::uint64_t wins = parallel_reduce(trials, std::uint64_t{0}, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t local = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      SplitMix64 key(seed ^ (t * 0xd1b54a32d192ed03ULL));
      SplitMix64 coins(key.next());
      std::uint64_t window = 0;
      int seen = 0;
      std::uint64_t pool = 0;
      int left = 0;
      while (true) {
        if (left == 0) pool = coins.next(), left = 64;
        window = ((window << 1) | (pool & 1)) & mask;
        pool >>= 1, --left;
        if (seen < n) ++seen;
        if (seen < n) continue;
        if (window == wa) {
          ++local;
          break;
        }
        if (window == wb) break;
      }
    }
    return local;
  }, [](std::uint64_t& acc, std::uint64_t&& part) { acc += part; });

  const ExactProb exact = win_prob(a, b);
  const double p = exact.to_double();
  const double freq = static_cast<double>(wins) / static_cast<double>(trials);
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
  const double z = se > 0 ? (freq - p) / se : 0.0;
  return SimulationResult{a, b, trials, wins, freq, exact, z};
}

}  // namespace penney
