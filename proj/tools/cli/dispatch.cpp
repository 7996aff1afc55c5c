#include "cli/dispatch.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/cache.hpp"
#include "cli/output.hpp"
#include "penney/correlation.hpp"
#include "penney/error.hpp"
#include "penney/flipped.hpp"
#include "penney/markov.hpp"
#include "penney/odds.hpp"
#include "penney/parallel.hpp"
#include "penney/sequence.hpp"
#include "penney/stats.hpp"
#include "penney/strategy.hpp"
#include "penney/verify.hpp"

namespace penney::cli {
namespace {

struct Globals {
  std::string format = "text";
  int decimals = 8;
  unsigned threads = 0;
  std::uint64_t seed = 42;
  std::string cache;
  bool no_cache = false;
  std::string output;
};

struct Context {
  std::ostream& out;
  Format format;
  int decimals;
  const Globals& globals;

  bool json() const { return format == Format::Json; }
  std::string dec(const Rational& q) const { return to_decimal(q, decimals); }
  std::string prob(const ExactProb& p) const { return p.str() + " (" + p.decimal(decimals) + ")"; }
  Json prob_json(const ExactProb& p) const { return Json{{"exact", p.str()}, {"decimal", p.decimal(decimals)}}; }
};

Json strings_json(const std::vector<PatternString>& strings) {
  Json arr = Json::array();
  for (const auto& s : strings) arr.push_back(s.str());
  return arr;
}

std::string join(const std::vector<PatternString>& strings, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < strings.size(); ++i) out += (i ? std::string(sep) : "") + strings[i].str();
  return out;
}

// ---- string and probability commands ----

struct PairArgs {
  std::string a, b;
};

int run_conway(const Context& ctx, const PairArgs& args) {
  const auto a = PatternString::parse(args.a);
  const auto b = PatternString::parse(args.b);
  const Correlation c = conway(a, b);
  if (ctx.json()) {
    emit(ctx.out, Json{{"a", a.str()}, {"b", b.str()}, {"n", c.n()}, {"binary", c.binary()}, {"value", c.value()}});
  } else {
    ctx.out << "C(" << a.str() << ", " << b.str() << ") = " << c.binary() << " (" << c.value() << ")\n";
  }
  return kExitOk;
}

int run_odds(const Context& ctx, const PairArgs& args) {
  const auto a = PatternString::parse(args.a);
  const auto b = PatternString::parse(args.b);
  const ConwayOdds odds = conway_odds(a, b);
  const ExactProb p = odds.probability();
  if (ctx.json()) {
    Json doc{{"a", a.str()}, {"b", b.str()}, {"probability", p.str()}, {"decimal", p.decimal(ctx.decimals)}};
    const auto [num, against] = p.odds();
    doc["odds"] = num.get_str() + ":" + against.get_str();
    emit(ctx.out, doc);
  } else {
    ctx.out << ctx.prob(p) << '\n';
  }
  return kExitOk;
}

struct OracleArgs {
  std::string a, b;
  bool verify = false;
  int n = 6;
};

int run_oracle(const Context& ctx, const OracleArgs& args) {
  if (!args.verify) {
    if (args.a.empty() || args.b.empty()) throw Error(ErrorCode::InvalidArgument, "oracle needs --a and --b, or --verify");
    const auto a = PatternString::parse(args.a);
    const auto b = PatternString::parse(args.b);
    require_same_length(a, b);
    if (a == b) throw Error(ErrorCode::SameString, "a game needs two different strings");
    const GameChain chain = GameChain::build(a, b);
    const ExactProb p = first_occurrence_prob(chain);
    if (ctx.json()) {
      emit(ctx.out, Json{{"a", a.str()}, {"b", b.str()}, {"probability", p.str()}, {"decimal", p.decimal(ctx.decimals)},
                         {"states", chain.state_count()}, {"transient", chain.transient_count()}});
    } else {
      ctx.out << ctx.prob(p) << "  states: " << chain.state_count() << '\n';
    }
    return kExitOk;
  }
  if (args.n < kMinGameLength || args.n > 8) throw Error(ErrorCode::BadLength, "oracle sweep needs 3 <= n <= 8");
  const int n = args.n;
  const auto autos = autocorrelation_table(n);
  const std::uint64_t top = std::uint64_t{1} << n;
  struct Tally {
    std::uint64_t pairs = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> mismatches;
  };
  Tally tally = parallel_reduce(top, Tally{}, [&](std::uint64_t begin, std::uint64_t end) {
    Tally local;
    for (std::uint64_t a = begin; a < end; ++a)
      for (std::uint64_t b = 0; b < top; ++b) {
        if (a == b) continue;
        const auto pa = PatternString::from_bits(a, n);
        const auto pb = PatternString::from_bits(b, n);
        ++local.pairs;
        if (first_occurrence_prob(GameChain::build(pa, pb)) != conway_odds_bits(a, b, n, autos[a], autos[b]).probability())
          local.mismatches.emplace_back(a, b);
      }
    return local;
  }, [](Tally& acc, Tally&& part) {
    acc.pairs += part.pairs;
    acc.mismatches.insert(acc.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
  });
  const bool ok = tally.mismatches.empty();
  if (ctx.json()) {
    Json bad = Json::array();
    for (auto [a, b] : tally.mismatches)
      bad.push_back({PatternString::from_bits(a, n).str(), PatternString::from_bits(b, n).str()});
    emit(ctx.out, Json{{"n", n}, {"pairs", tally.pairs}, {"mismatches", bad}, {"pass", ok}});
  } else {
    ctx.out << "oracle n=" << n << ": " << tally.pairs << " ordered pairs, " << tally.mismatches.size()
            << " mismatches: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitDomain;
}

int run_matrix(const Context& ctx, int n) {
  const ProbMatrix m = prob_matrix(n);
  std::vector<std::string> header{"B\\A"};
  for (const auto& a : enumerate(n)) header.push_back(a.str());
  Table table(std::move(header));
  for (const auto& b : enumerate(n)) {
    std::vector<std::string> row{b.str()};
    for (const auto& a : enumerate(n)) row.push_back(a == b ? "-" : m.entry(b, a).str());
    table.add_row(std::move(row));
  }
  emit(ctx.out, table, ctx.format);
  return kExitOk;
}

// ---- strategy commands ----

struct BestArgs {
  std::string a;
  int n = 0;
  bool brute = false;
};

int run_best_response(const Context& ctx, const BestArgs& args) {
  auto solve = [&](const PatternString& a) { return args.brute ? best_response_bruteforce(a) : best_response(a); };
  if (args.a.empty()) {
    if (args.n == 0) throw Error(ErrorCode::InvalidArgument, "best-response needs --a or -n");
    if (args.n > 16) throw Error(ErrorCode::BadLength, "table mode needs n <= 16");
    Table table({"string", "best_response", "probability", "decimal"});
    for (const auto& a : enumerate(args.n)) {
      const BestResponse r = solve(a);
      table.add_row({a.str(), r.responder.str(), r.prob.str(), r.prob.decimal(ctx.decimals)});
    }
    emit(ctx.out, table, ctx.format);
    return kExitOk;
  }
  const auto a = PatternString::parse(args.a);
  const BestResponse r = solve(a);
  if (ctx.json()) {
    Json doc{{"queried", a.str()}, {"responder", r.responder.str()}, {"probability", r.prob.str()},
             {"decimal", r.prob.decimal(ctx.decimals)}, {"method", args.brute ? "brute" : "fast"},
             {"degenerate", r.degenerate}, {"verified", r.verified}};
    doc["runner_up"] = r.runner_up ? Json{{"string", r.runner_up->string.str()}, {"probability", r.runner_up->prob.str()}}
                                   : Json(nullptr);
    emit(ctx.out, doc);
  } else {
    ctx.out << a.str() << " -> " << r.responder.str() << "  " << ctx.prob(r.prob) << '\n';
    if (r.runner_up) ctx.out << "runner-up " << r.runner_up->string.str() << "  " << ctx.prob(r.runner_up->prob) << '\n';
    if (r.degenerate) ctx.out << "degenerate candidate excluded" << (r.verified ? ", verified by full scan" : ", unverified") << '\n';
  }
  return kExitOk;
}

struct OptimalArgs {
  int n = 5;
  std::string method = "csirik";
};

int run_optimal(const Context& ctx, const OptimalArgs& args) {
  std::vector<std::pair<std::string, OptimalSet>> sets;
  if (args.method == "brute" || args.method == "both") sets.emplace_back("brute", optimal_strings_bruteforce(args.n));
  if (args.method == "csirik" || args.method == "both") sets.emplace_back("csirik", optimal_strings_csirik(args.n));
  const bool agree = sets.size() < 2 ||
                     (sets[0].second.strings == sets[1].second.strings &&
                      sets[0].second.player1_win_prob == sets[1].second.player1_win_prob);
  if (ctx.json()) {
    Json doc{{"n", args.n}, {"method", args.method}};
    for (const auto& [name, set] : sets)
      doc[name] = Json{{"count", set.strings.size()}, {"strings", strings_json(set.strings)},
                       {"player1_win_prob", set.player1_win_prob.str()},
                       {"player2_win_prob", set.player1_win_prob.complement().str()}};
    if (sets.size() == 2) doc["agree"] = agree;
    emit(ctx.out, doc);
  } else {
    for (const auto& [name, set] : sets) {
      ctx.out << name << ": " << set.strings.size() << " strings, Player I wins " << ctx.prob(set.player1_win_prob) << '\n';
      for (const auto& s : set.strings) ctx.out << "  " << s.str() << '\n';
    }
    if (sets.size() == 2) ctx.out << (agree ? "methods agree" : "methods DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitDomain;
}

// ---- sequence commands ----

struct CnArgs {
  int max = 15;
  int min = 3;
  bool binary = false;
};

int run_cn(const Context& ctx, const CnArgs& args) {
  if (args.min < 3 || args.max < args.min || args.max > 20000)
    throw Error(ErrorCode::BadLength, "cn needs 3 <= --min <= --max <= 20000");
  CnSequence& seq = CnSequence::shared();
  std::optional<std::filesystem::path> cache;
  if (!ctx.globals.no_cache) cache = resolve_cache_path(ctx.globals.cache);
  if (cache) load_cache(*cache, seq);
  const int held = seq.filled_up_to();
  std::vector<std::string> header{"n", "c_n"};
  if (args.binary) header.push_back("binary");
  Table table(std::move(header));
  for (int n = args.min; n <= args.max; ++n) {
    const BigInt v = seq.value(n);
    std::vector<std::string> row{std::to_string(n), v.get_str()};
    if (args.binary) row.push_back(to_binary(v));
    table.add_row(std::move(row));
  }
  if (cache && seq.filled_up_to() > held) {
    try {
      save_cache(*cache, seq);
    } catch (const std::exception&) {
      // The cache is advisory; an unwritable location is not an error.
    }
  }
  emit(ctx.out, table, ctx.format);
  return kExitOk;
}

struct CstarArgs {
  int max = 20;
  int enumerate_max = 26;
};

int run_cstar(const Context& ctx, const CstarArgs& args) {
  if (args.max < 4 || args.max > 2000) throw Error(ErrorCode::BadLength, "cstar needs 4 <= --max <= 2000");
  Table table({"m", "c*_m", "enumerated"});
  for (int m = 4; m <= args.max; ++m) {
    const std::string counted = m <= std::min(args.enumerate_max, 40) ? count_cstar(m).get_str() : "";
    table.add_row({std::to_string(m), cstar_recurrence(m).get_str(), counted});
  }
  emit(ctx.out, table, ctx.format);
  return kExitOk;
}

struct AlphaArgs {
  int bits = 64;
  bool positions = false;
  bool stats = false;
  int max_block = 8;
};

int run_alpha(const Context& ctx, const AlphaArgs& args) {
  if (args.stats) {
    const DigitStats stats = digit_stats(args.bits, args.max_block);
    Table table({"block", "windows", "min_count", "max_count", "expected", "max_relative_deviation"});
    for (const auto& b : stats.blocks) {
      const auto [lo, hi] = std::minmax_element(b.counts.begin(), b.counts.end());
      std::ostringstream dev;
      dev.precision(6);
      dev << std::fixed << b.max_relative_deviation;
      table.add_row({std::to_string(b.block_length), std::to_string(b.windows), std::to_string(*lo), std::to_string(*hi),
                     ctx.dec(b.expected * Rational(BigInt(std::to_string(b.windows)))), dev.str()});
    }
    emit(ctx.out, table, ctx.format);
    return kExitOk;
  }
  const AlphaApprox a = alpha(args.bits);
  const int determined = std::min(a.determined_bits(), args.bits);
  const std::string digits = *a.binary_digits(determined);
  const int places = std::max(ctx.decimals, 1);
  if (ctx.json()) {
    Json doc{{"precision_bits", args.bits},
             {"truncation_n", a.truncation_n},
             {"lower", to_decimal(a.lower(), places)},
             {"upper", a.decimal(places)},
             {"error_bound", a.error_bound.str()},
             {"decimal_determined", a.decimal_determined(places)},
             {"determined_bits", determined},
             {"binary", "0." + digits}};
    if (args.positions) doc["one_bit_positions"] = a.one_bit_positions(determined);
    emit(ctx.out, doc);
  } else {
    ctx.out << "alpha in [" << to_decimal(a.lower(), places) << ", " << a.decimal(places) << ")\n";
    ctx.out << "truncation N = " << a.truncation_n << ", tail bound " << a.error_bound.str() << '\n';
    ctx.out << "binary (" << determined << " digits) 0." << digits << '\n';
    if (args.positions) {
      ctx.out << "one-bit positions:";
      for (int p : a.one_bit_positions(determined)) ctx.out << ' ' << p;
      ctx.out << '\n';
    }
  }
  return kExitOk;
}

// ---- flipped game ----

Json flipped_response_json(const FlippedBestResponse& r) {
  return Json{{"queried", r.queried.str()}, {"maximizers", strings_json(r.maximizers)}, {"probability", r.prob.str()}};
}

int run_flipped_best(const Context& ctx, const std::string& text, int n) {
  if (text.empty()) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "flipped best-response needs --a or -n");
    Table table({"string", "best_responses", "probability"});
    for (const auto& a : enumerate(n)) {
      const auto r = flipped_best_response(a);
      table.add_row({a.str(), join(r.maximizers), r.prob.str()});
    }
    emit(ctx.out, table, ctx.format);
    return kExitOk;
  }
  const auto r = flipped_best_response(PatternString::parse(text));
  if (ctx.json()) emit(ctx.out, flipped_response_json(r));
  else ctx.out << r.queried.str() << " -> " << join(r.maximizers) << "  " << ctx.prob(r.prob) << '\n';
  return kExitOk;
}

int run_flipped_optimal(const Context& ctx, int n) {
  const OptimalSet set = flipped_optimal_strings(n);
  if (ctx.json()) {
    emit(ctx.out, Json{{"n", n}, {"strings", strings_json(set.strings)}, {"player1_win_prob", set.player1_win_prob.str()}});
  } else {
    ctx.out << join(set.strings) << "  Player I wins " << ctx.prob(set.player1_win_prob) << '\n';
  }
  return kExitOk;
}

int run_conjecture3(const Context& ctx, int n) {
  const Conjecture3Report report = check_conjecture3(n);
  if (ctx.json()) {
    Json bad = Json::array();
    for (const auto& ce : report.counterexamples) {
      Json item = flipped_response_json(ce.response);
      item["outside"] = strings_json(ce.outside);
      bad.push_back(std::move(item));
    }
    emit(ctx.out, Json{{"n", n}, {"strings_checked", report.strings_checked}, {"tied_rows", report.tied_rows},
                       {"holds", report.holds()}, {"counterexamples", bad}});
  } else {
    ctx.out << "n=" << n << ": " << report.strings_checked << " strings, " << report.tied_rows << " with tied replies, "
            << report.counterexamples.size() << " counterexamples: " << (report.holds() ? "holds" : "fails") << '\n';
    for (const auto& ce : report.counterexamples)
      ctx.out << "  " << ce.response.queried.str() << " -> " << join(ce.response.maximizers) << "  "
              << ce.response.prob.str() << "  outside: " << join(ce.outside) << '\n';
  }
  return kExitOk;
}

// ---- statistics ----

struct StatsArgs {
  int from = 5;
  int to = 16;
  std::string choice = "best-against-random";
  std::string pool = "include-own-as-tie";
};

int run_stats(const Context& ctx, const StatsArgs& args) {
  const auto choice = args.choice == "conway-optimal" ? OptimalChoice::ConwayOptimal : OptimalChoice::BestAgainstRandom;
  const auto pool = args.pool == "exclude-own" ? OpponentPool::ExcludeOwnString : OpponentPool::IncludeOwnAsTie;
  const auto rows = strategy_table(args.from, args.to, choice, pool);
  auto cell = [&](const auto& v) -> std::string {
    if (!v) return "";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, ExactProb>) return v->decimal(ctx.decimals);
    else return ctx.dec(*v);
  };
  if (ctx.json()) {
    Json doc = Json::array();
    auto exact = [&](const auto& v) -> Json {
      if (!v) return nullptr;
      if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, ExactProb>) return ctx.prob_json(*v);
      else return Json{{"exact", Rational(*v).get_str()}, {"decimal", ctx.dec(*v)}};
    };
    for (const auto& r : rows)
      doc.push_back(Json{{"n", r.n}, {"p_opt_opt", ctx.prob_json(r.p_opt_opt)}, {"p_rand_opt", exact(r.p_rand_opt)},
                         {"diag_rand", exact(r.diag_rand)}, {"p_opt_rand", exact(r.p_opt_rand)},
                         {"diag_opt_rand", exact(r.diag_opt_rand)}});
    emit(ctx.out, Json{{"choice", to_string(choice)}, {"pool", to_string(pool)}, {"rows", doc}});
    return kExitOk;
  }
  Table table({"n", "p_opt_opt", "p_rand_opt", "2^n(p_rand_opt-2/3)/n", "p_opt_rand", "2^n(1/2-p_opt_rand)/n"});
  for (const auto& r : rows)
    table.add_row({std::to_string(r.n), r.p_opt_opt.decimal(ctx.decimals), cell(r.p_rand_opt), cell(r.diag_rand),
                   cell(r.p_opt_rand), cell(r.diag_opt_rand)});
  emit(ctx.out, table, ctx.format);
  return kExitOk;
}

struct SimArgs {
  std::string a, b;
  std::uint64_t trials = 100000;
};

int run_simulate(const Context& ctx, const SimArgs& args) {
  const auto r = simulate(PatternString::parse(args.a), PatternString::parse(args.b), args.trials, ctx.globals.seed);
  std::ostringstream freq, z;
  freq.precision(ctx.decimals);
  freq << std::fixed << r.frequency;
  z.precision(4);
  z << std::fixed << r.z_score;
  if (ctx.json()) {
    emit(ctx.out, Json{{"a", r.a.str()}, {"b", r.b.str()}, {"trials", r.trials}, {"seed", ctx.globals.seed},
                       {"a_wins", r.a_wins}, {"frequency", freq.str()}, {"exact", ctx.prob_json(r.exact)},
                       {"z_score", z.str()}});
  } else {
    ctx.out << r.a.str() << " before " << r.b.str() << ": " << r.a_wins << "/" << r.trials << " = " << freq.str()
            << ", exact " << ctx.prob(r.exact) << ", z = " << z.str() << '\n';
  }
  return kExitOk;
}

int run_verify(const Context& ctx) {
  const VerificationReport report = run_verification();
  if (ctx.json()) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    emit(ctx.out, Json{{"passed", report.passed()}, {"checks", checks}});
  } else {
    ctx.out << report.text();
  }
  return report.passed() ? kExitOk : kExitDomain;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of the Penney-Ante coin game", "penney"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "text, csv, json or md")
      ->check(CLI::IsMember({"text", "csv", "json", "md", "markdown"}));
  app.add_option("--decimals", g.decimals, "digits after the point")->check(CLI::Range(1, 50));
  app.add_option("--threads", g.threads, "worker threads, 0 for all cores");
  app.add_option("--seed", g.seed, "seed for simulate");
  app.add_option("--cache", g.cache, "c_n cache file");
  app.add_flag("--no-cache", g.no_cache, "do not read or write the c_n cache");
  app.add_option("--output", g.output, "write results to this file");

  std::function<int(const Context&)> action;
  auto bind = [&](CLI::App* sub, std::function<int(const Context&)> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  PairArgs conway_args;
  auto* conway_cmd = app.add_subcommand("conway", "Conway correlation C(A,B)");
  conway_cmd->add_option("--a", conway_args.a)->required();
  conway_cmd->add_option("--b", conway_args.b)->required();
  bind(conway_cmd, [&](const Context& c) { return run_conway(c, conway_args); });

  PairArgs odds_args;
  auto* odds_cmd = app.add_subcommand("odds", "probability that A appears before B");
  odds_cmd->add_option("--a", odds_args.a)->required();
  odds_cmd->add_option("--b", odds_args.b)->required();
  bind(odds_cmd, [&](const Context& c) { return run_odds(c, odds_args); });

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "absorbing-chain probability, or a sweep against Conway's formula");
  oracle_cmd->add_option("--a", oracle_args.a);
  oracle_cmd->add_option("--b", oracle_args.b);
  oracle_cmd->add_flag("--verify", oracle_args.verify, "compare every ordered pair of length n");
  oracle_cmd->add_option("-n", oracle_args.n, "string length for --verify");
  bind(oracle_cmd, [&](const Context& c) { return run_oracle(c, oracle_args); });

  int matrix_n = 3;
  auto* matrix_cmd = app.add_subcommand("matrix", "P(row B before column A) for all strings of length n");
  matrix_cmd->add_option("-n", matrix_n)->required();
  bind(matrix_cmd, [&](const Context& c) { return run_matrix(c, matrix_n); });

  BestArgs best_args;
  auto* best_cmd = app.add_subcommand("best-response", "Player II's best reply");
  best_cmd->add_option("--a", best_args.a, "queried string");
  best_cmd->add_option("-n", best_args.n, "tabulate every string of this length");
  best_cmd->add_flag("--brute", best_args.brute, "scan every reply instead of the two candidates");
  bind(best_cmd, [&](const Context& c) { return run_best_response(c, best_args); });

  OptimalArgs optimal_args;
  auto* optimal_cmd = app.add_subcommand("optimal", "Player I's optimal strings");
  optimal_cmd->add_option("-n", optimal_args.n)->required();
  optimal_cmd->add_option("--method", optimal_args.method)->check(CLI::IsMember({"csirik", "brute", "both"}));
  bind(optimal_cmd, [&](const Context& c) { return run_optimal(c, optimal_args); });

  CnArgs cn_args;
  auto* cn_cmd = app.add_subcommand("cn", "number of optimal strings c_n");
  cn_cmd->add_option("--max", cn_args.max);
  cn_cmd->add_option("--min", cn_args.min);
  cn_cmd->add_flag("--binary", cn_args.binary, "add a binary column");
  bind(cn_cmd, [&](const Context& c) { return run_cn(c, cn_args); });

  CstarArgs cstar_args;
  auto* cstar_cmd = app.add_subcommand("cstar", "c*_m by recurrence and by enumeration");
  cstar_cmd->add_option("--max", cstar_args.max);
  cstar_cmd->add_option("--enumerate-max", cstar_args.enumerate_max, "largest m to count directly");
  bind(cstar_cmd, [&](const Context& c) { return run_cstar(c, cstar_args); });

  AlphaArgs alpha_args;
  auto* alpha_cmd = app.add_subcommand("alpha", "the limit of c_n / 2^n as a rational interval");
  alpha_cmd->add_option("--bits", alpha_args.bits)->check(CLI::Range(8, 1000000));
  alpha_cmd->add_flag("--positions", alpha_args.positions, "list 1-bit positions");
  alpha_cmd->add_flag("--stats", alpha_args.stats, "block frequencies of the binary digits");
  alpha_cmd->add_option("--max-block", alpha_args.max_block)->check(CLI::Range(1, 8));
  bind(alpha_cmd, [&](const Context& c) { return run_alpha(c, alpha_args); });

  auto* flipped_cmd = app.add_subcommand("flipped", "the game where the last string to appear wins");
  flipped_cmd->fallthrough();
  flipped_cmd->require_subcommand(1);
  bool flipped_json = false;
  std::string flipped_a;
  int flipped_best_n = 0;
  auto* fbest = flipped_cmd->add_subcommand("best-response", "all best replies");
  fbest->add_option("--a", flipped_a);
  fbest->add_option("-n", flipped_best_n, "tabulate every string of this length");
  fbest->add_flag("--json", flipped_json);
  bind(fbest, [&](const Context& c) { return run_flipped_best(c, flipped_a, flipped_best_n); });
  int flipped_n = 5;
  auto* fopt = flipped_cmd->add_subcommand("optimal", "Player I's optimal strings");
  fopt->add_option("-n", flipped_n)->required();
  fopt->add_flag("--json", flipped_json);
  bind(fopt, [&](const Context& c) { return run_flipped_optimal(c, flipped_n); });
  int conj_n = 5;
  auto* fconj = flipped_cmd->add_subcommand("conjecture3", "check the four-candidate reply rule");
  fconj->add_option("-n", conj_n)->required();
  fconj->add_flag("--json", flipped_json);
  bind(fconj, [&](const Context& c) { return run_conjecture3(c, conj_n); });

  StatsArgs stats_args;
  auto* stats_cmd = app.add_subcommand("stats", "exact optimal and random play probabilities");
  stats_cmd->add_option("--from", stats_args.from);
  stats_cmd->add_option("--to", stats_args.to);
  stats_cmd->add_option("--choice", stats_args.choice, "Player I's string against random play")
      ->check(CLI::IsMember({"conway-optimal", "best-against-random"}));
  stats_cmd->add_option("--pool", stats_args.pool, "Player II's random pool")
      ->check(CLI::IsMember({"exclude-own", "include-own-as-tie"}));
  bind(stats_cmd, [&](const Context& c) { return run_stats(c, stats_args); });

  SimArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "seeded Monte Carlo check of a pair");
  sim_cmd->add_option("--a", sim_args.a)->required();
  sim_cmd->add_option("--b", sim_args.b)->required();
  sim_cmd->add_option("--trials", sim_args.trials)->check(CLI::PositiveNumber);
  bind(sim_cmd, [&](const Context& c) { return run_simulate(c, sim_args); });

  auto* verify_cmd = app.add_subcommand("verify", "cross-module property sweep");
  bind(verify_cmd, [&](const Context& c) { return run_verify(c); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    const CLI::App* where = &app;
    while (!where->get_subcommands().empty()) where = where->get_subcommands().front();
    err << where->help();
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }

  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output, std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << g.output << '\n';
      return kExitDomain;
    }
  }
  std::ostream& sink = g.output.empty() ? out : file;
  set_worker_threads(g.threads);
  try {
    const Format format = flipped_json ? Format::Json : parse_format(g.format);
    return action(Context{sink, format, g.decimals, g});
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace penney::cli
