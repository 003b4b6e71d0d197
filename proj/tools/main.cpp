#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicelab/clt.hpp"
#include "dicelab/dsl.hpp"
#include "dicelab/errors.hpp"
#include "dicelab/space.hpp"
#include "dicelab/stats.hpp"
#include "dicelab/sumdist.hpp"

namespace {

using namespace dicelab;

// ---------------------------------------------------------------------------
// Shared option plumbing

struct DieOptions {
  std::string faces_text;
  bool coin = false;

  DieSpec make() const {
    if (coin)
      return DieSpec::fair_coin();
    if (faces_text.empty())
      return DieSpec::fair_die();
    return parse_die_text(faces_text);
  }
};

void add_die_options(CLI::App *cmd, DieOptions &opts) {
  auto *faces = cmd->add_option("--faces", opts.faces_text,
                                "die faces: '1-6' or value:weight list '1:1,...,6:5'");
  cmd->add_flag("--coin", opts.coin, "fair K/Z coin")->excludes(faces);
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// True when the 10-significant-digit decimal rendering is exact.
bool decimal_is_exact(const Rational &r, const std::string &rendered) {
  Rational parsed = 0;
  bool neg = false;
  Rational scale = 1;
  bool after_point = false;
  for (char c : rendered) {
    if (c == '-') {
      neg = true;
    } else if (c == '.') {
      after_point = true;
    } else {
      parsed = parsed * 10 + (c - '0');
      if (after_point)
        scale *= 10;
    }
  }
  parsed /= scale;
  if (neg)
    parsed = -parsed;
  return parsed == r;
}

// "p/q = decimal" when the decimal terminates, "p/q ≈ decimal" otherwise.
std::string render_probability(const BigInt &favorable, const BigInt &denominator) {
  Rational value(favorable, denominator);
  std::string dec = format_decimal(value);
  std::string rel = decimal_is_exact(value, dec) ? " = " : " ≈ ";
  return favorable.str() + "/" + denominator.str() + rel + dec;
}

std::string render_rational(const Rational &r) {
  std::string dec = format_decimal(r);
  if (denominator(r) == 1)
    return dec;
  std::string rel = decimal_is_exact(r, dec) ? " = " : " ≈ ";
  return format_rational(r) + rel + dec;
}

ExprPtr parse_checked(const std::string &text, const DieSpec &die, unsigned d) {
  ExprPtr expr = parse(text);
  for (const std::string &warning : check_bindings(*expr, die, d))
    std::cerr << "warning: " << warning << "\n";
  return expr;
}

// ---------------------------------------------------------------------------
// prob

struct ProbArgs {
  DieOptions die;
  unsigned d = 1;
  std::string event;
  std::uint64_t cap = kDefaultEnumerationCap;
};

int run_prob(const ProbArgs &args) {
  DieSpec die = args.die.make();
  SampleSpace space(die, args.d);
  ExprPtr event = parse_checked(args.event, die, args.d);
  Probability p = probability(space, *event, args.cap);
  std::cout << render_probability(p.favorable, p.denominator) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs {
  DieOptions die;
  unsigned d = 1;
  std::string rv;
  std::uint64_t cap = kDefaultEnumerationCap;
};

int run_stats(const StatsArgs &args) {
  DieSpec die = args.die.make();
  SampleSpace space(die, args.d);
  ExprPtr rv = parse_checked(args.rv, die, args.d);
  Rational mean = expectation(space, *rv, args.cap);
  Rational var_def = variance_definitional(space, *rv, args.cap);
  Rational var_mom = variance_moments(space, *rv, args.cap);
  std::cout << "E = " << render_rational(mean) << "\n";
  std::cout << "V (definitional) = " << render_rational(var_def) << "\n";
  std::cout << "V (moments)      = " << render_rational(var_mom) << "\n";
  std::cout << "identical: " << (var_def == var_mom ? "yes" : "no") << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// dist

struct DistArgs {
  DieOptions die;
  unsigned d = 1;
  std::string rv = "sum";
  std::string format = "table";
  std::string engine = "auto";
  std::string cdf_convention; // empty: print the PMF
  int pad = 0;
  bool exact = false;
  bool header = false;
  std::uint64_t cap = kDefaultEnumerationCap;
};

Distribution compute_distribution(const DistArgs &args, const DieSpec &die) {
  bool rv_is_sum = false;
  ExprPtr rv = parse_checked(args.rv, die, args.d);
  rv_is_sum = rv->kind == Expr::Kind::Var && rv->name == "sum";
  if (args.engine == "conv" && !rv_is_sum)
    throw ValidationError("engine 'conv' only supports the random variable 'sum'");
  if (args.engine == "conv" || (args.engine == "auto" && rv_is_sum))
    return sum_pmf_convolution(die, args.d);
  SampleSpace space(die, args.d);
  return pmf(space, *rv, args.cap);
}

int run_dist(const DistArgs &args) {
  DieSpec die = args.die.make();
  Distribution dist = compute_distribution(args, die);

  long long lo = dist.support_min, hi = dist.support_max;
  if (args.pad > 0) {
    lo = 0;
    hi = args.pad - 1;
  }
  bool want_cdf = !args.cdf_convention.empty();
  bool strict = args.cdf_convention == "strict";

  // One column value per emitted row: mass, or running total for the CDF.
  std::vector<std::pair<long long, Rational>> rows;
  Rational running = 0;
  auto it = dist.mass.begin();
  for (long long v = lo; v <= hi; ++v) {
    Rational here = 0;
    if (it != dist.mass.end() && it->first == v) {
      here = it->second;
      ++it;
    }
    if (want_cdf) {
      if (strict) {
        rows.emplace_back(v, running);
        running += here;
      } else {
        running += here;
        rows.emplace_back(v, running);
      }
    } else {
      rows.emplace_back(v, here);
    }
  }

  auto cell = [&](const Rational &r) {
    return args.exact ? format_rational(r) : format_decimal(r);
  };

  if (args.format == "csv") {
    if (args.header)
      std::cout << (want_cdf ? "value,cumulative" : "value,probability") << "\n";
    for (const auto &[v, r] : rows)
      std::cout << v << "," << cell(r) << "\n";
  } else if (args.format == "bars") {
    Rational mode = 0;
    for (const auto &[v, r] : rows)
      mode = std::max(mode, r);
    for (const auto &[v, r] : rows) {
      int width = mode == 0 ? 0
                            : static_cast<int>(to_double(r / mode) * 60.0 + 0.5);
      std::printf("%6lld  %-14s |%s\n", v, cell(r).c_str(),
                  std::string(static_cast<std::size_t>(width), '#').c_str());
    }
  } else {
    if (args.header)
      std::printf("%6s  %s\n", "value", want_cdf ? "cumulative" : "probability");
    for (const auto &[v, r] : rows)
      std::printf("%6lld  %s\n", v, cell(r).c_str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// clt

struct CltArgs {
  DieOptions die;
  unsigned max_d = 4;
  std::string correction = "on";
};

int run_clt(const CltArgs &args) {
  DieSpec die = args.die.make();
  bool correction = args.correction == "on";
  std::printf("%3s  %-12s %-12s %-14s %s\n", "d", "mu", "sigma", "sup_error",
              "total_variation");
  for (unsigned d = 1; d <= args.max_d; ++d) {
    ApproximationReport r = approximation_report(die, d, correction);
    std::printf("%3u  %-12s %-12s %-14s %s\n", d, fmt_double(r.mu).c_str(),
                fmt_double(r.sigma).c_str(), fmt_double(r.sup_error).c_str(),
                fmt_double(r.total_variation).c_str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  DieOptions die;
  unsigned d_from = 1;
  unsigned d_to = 10;
  std::string format = "table";
  std::uint64_t cap = kDefaultEnumerationCap;
};

int run_bench(const BenchArgs &args) {
  DieSpec die = args.die.make();
  bool csv = args.format == "csv";
  if (csv)
    std::cout << "d,convolution_s,enumeration_s,verdict\n";
  else
    std::printf("%3s  %-14s %-14s %s\n", "d", "convolution_s", "enumeration_s",
                "verdict");
  for (unsigned d = args.d_from; d <= args.d_to; ++d) {
    ComparePathsReport r = compare_paths(die, d, args.cap);
    std::string enum_col = r.checked ? fmt_double(r.enumeration_seconds)
                                     : "skipped (cap)";
    std::string verdict = !r.checked ? "unchecked" : r.equal ? "equal" : "MISMATCH";
    if (csv)
      std::cout << d << "," << fmt_double(r.convolution_seconds) << "," << enum_col
                << "," << verdict << "\n";
    else
      std::printf("%3u  %-14s %-14s %s\n", d,
                  fmt_double(r.convolution_seconds).c_str(), enum_col.c_str(),
                  verdict.c_str());
    if (r.checked && !r.equal)
      return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sheet

void print_favorable(const SampleSpace &space, const std::vector<Outcome> &outcomes) {
  for (const Outcome &o : outcomes)
    std::cout << space.render_outcome(o) << "\n";
}

void sheet_1() {
  DieSpec die = DieSpec::fair_die();
  SampleSpace space(die, 1);
  std::cout << "One fair die is rolled once.\n";
  for (int limit : {3, 4}) {
    ExprPtr event = parse("sum > " + std::to_string(limit));
    Probability p = probability(space, *event);
    std::cout << "P(face value > " << limit
              << ") = " << render_probability(p.favorable, p.denominator) << "\n";
  }
}

void sheet_2() {
  DieSpec die = DieSpec::fair_die();
  std::cout << "One fair die is rolled three times; the outcomes form a\n"
               "monotone non-decreasing sequence.\n";
  {
    SampleSpace space(die, 3);
    Probability p = probability(space, *parse("d1 <= d2 <= d3"));
    std::cout << "P(d1 <= d2 <= d3) = "
              << render_probability(p.favorable, p.denominator) << "\n";
  }
  std::cout << "Generalization to five dice:\n";
  {
    SampleSpace space(die, 5);
    Probability p = probability(space, *parse("d1 <= d2 <= d3 <= d4 <= d5"));
    std::cout << "P(d1 <= d2 <= d3 <= d4 <= d5) = "
              << render_probability(p.favorable, p.denominator) << "\n";
  }
}

void sheet_3() {
  DieSpec die = DieSpec::fair_die();
  SampleSpace space(die, 3);
  ExprPtr event = parse("d1 <= d2 <= d3");
  std::vector<Outcome> outcomes = favorable(space, *event);
  std::cout << "All desired outcomes (sorted), three dice, d1 <= d2 <= d3:\n";
  print_favorable(space, outcomes);
  Probability p = probability(space, *event);
  std::cout << "count = " << outcomes.size() << ", P = "
            << render_probability(p.favorable, p.denominator) << "\n";
}

void sheet_4(bool search_fair) {
  DieSpec die = DieSpec::fair_die();
  std::cout << "Alice and Bob roll a die four times; Alice wins when the sum\n"
               "lies between 7 and 14.\n";
  SampleSpace space4(die, 4);
  Probability p = probability(space4, *parse("7 <= sum <= 14"));
  std::cout << "P(7 <= sum <= 14) = "
            << render_probability(p.favorable, p.denominator) << "\n";
  std::cout << "Advantageous for: " << (p.value > Rational(1, 2) ? "Alice" : "Bob")
            << "\n";

  std::cout << "Two dice, E = {w in Omega | X(w) = 10} with X = sum:\n";
  SampleSpace space2(die, 2);
  ExprPtr event10 = parse("sum == 10");
  std::vector<Outcome> e = favorable(space2, *event10);
  print_favorable(space2, e);
  Probability p10 = probability(space2, *event10);
  std::cout << "|E| = " << e.size() << ", P = "
            << render_probability(p10.favorable, p10.denominator) << "\n";

  if (search_fair) {
    // All contiguous winning ranges [a,b] of the 4-dice sum, ranked by
    // closeness to a fair 1/2. With an even number of dice no range hits
    // 1/2 exactly, so ties for the minimum are listed in full.
    Distribution dist = sum_pmf_convolution(die, 4);
    Rational best_gap = 1;
    std::vector<std::tuple<long long, long long, Rational>> best;
    for (long long a = dist.support_min; a <= dist.support_max; ++a) {
      Rational window = 0;
      for (long long b = a; b <= dist.support_max; ++b) {
        window += dist.mass_at(b);
        Rational gap = window - Rational(1, 2);
        if (gap < 0)
          gap = -gap;
        if (gap < best_gap) {
          best_gap = gap;
          best.clear();
        }
        if (gap == best_gap)
          best.emplace_back(a, b, window);
      }
    }
    std::cout << "Fair-rule search over winning ranges [a,b] of the sum:\n";
    if (best_gap != 0)
      std::cout << "no range reaches exactly 1/2; closest candidates:\n";
    for (const auto &[a, b, window] : best)
      std::cout << "  [" << a << "," << b << "]  P = " << render_rational(window)
                << "\n";
  }
}

void sheet_5() {
  DieSpec coin = DieSpec::fair_coin();
  SampleSpace space(coin, 5);
  std::cout << "A fair coin is tossed 5 times.\n";
  Probability p = probability(space, *parse("count(K) == 2"));
  std::cout << "P(count(K) == 2) = "
            << render_probability(p.favorable, p.denominator) << "\n";
  ExprPtr rv = parse("count(K)");
  std::cout << "E = " << render_rational(expectation(space, *rv)) << "\n";
  std::cout << "V = " << render_rational(variance_definitional(space, *rv)) << "\n";
}

void sheet_6() {
  DieSpec die = DieSpec::fair_die();
  std::cout << "Variance of the sum of two dice, computed both ways:\n";
  SampleSpace space2(die, 2);
  ExprPtr sum = parse("sum");
  Rational var_def = variance_definitional(space2, *sum);
  Rational var_mom = variance_moments(space2, *sum);
  std::cout << "V (definitional) = " << render_rational(var_def) << "\n";
  std::cout << "V (moments)      = " << render_rational(var_mom) << "\n";
  std::cout << "identical: " << (var_def == var_mom ? "yes" : "no") << "\n";

  std::cout << "Sum of four dice, probabilities over the 30-slot layout:\n";
  Distribution dist = sum_pmf_convolution(die, 4);
  for (long long v = 0; v < 30; ++v)
    std::cout << v << "," << format_decimal(dist.mass_at(v)) << "\n";
  std::cout << "Cumulative distribution (P(X < h)) over the same layout:\n";
  Rational running = 0;
  for (long long v = 0; v < 30; ++v) {
    std::cout << v << "," << format_decimal(running) << "\n";
    running += dist.mass_at(v);
  }
}

void sheet_7() {
  DieSpec die = DieSpec::fair_die();
  for (unsigned d = 1; d <= 4; ++d) {
    std::cout << "# sum of " << d << (d == 1 ? " die" : " dice") << "\n";
    Distribution dist = sum_pmf_convolution(die, d);
    for (long long v = dist.support_min; v <= dist.support_max; ++v)
      std::cout << v << "," << format_decimal(dist.mass_at(v)) << "\n";
  }
  std::cout << "# normal approximation (continuity correction on)\n";
  std::printf("%3s  %-12s %-12s %-14s %s\n", "d", "mu", "sigma", "sup_error",
              "total_variation");
  for (unsigned d = 1; d <= 4; ++d) {
    ApproximationReport r = approximation_report(die, d, true);
    std::printf("%3u  %-12s %-12s %-14s %s\n", d, fmt_double(r.mu).c_str(),
                fmt_double(r.sigma).c_str(), fmt_double(r.sup_error).c_str(),
                fmt_double(r.total_variation).c_str());
  }
  // The guess-the-inflection-point estimate for d = 4, as printed (i = 18),
  // next to its corrected variant and the exact value.
  double guessed = sigma_from_empirical_rule(18, 14);
  double corrected = sigma_from_empirical_rule(18, 14, {.corrected = true});
  double exact = std::sqrt(to_double(die.variance() * 4));
  std::cout << "# empirical-rule sigma for d = 4, inflection guessed at 18\n";
  std::cout << "sigma (rule as printed)  = " << fmt_double(guessed) << "\n";
  std::cout << "sigma (corrected rule)   = " << fmt_double(corrected) << "\n";
  std::cout << "sigma (exact)            = " << fmt_double(exact) << "\n";
}

int run_sheet(int n, bool search_fair) {
  switch (n) {
  case 1: sheet_1(); break;
  case 2: sheet_2(); break;
  case 3: sheet_3(); break;
  case 4: sheet_4(search_fair); break;
  case 5: sheet_5(); break;
  case 6: sheet_6(); break;
  case 7: sheet_7(); break;
  default:
    throw ValidationError("sheet number must be 1..7");
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact finite-probability engine for dice and coins"};
  app.require_subcommand(1);

  ProbArgs prob_args;
  auto *prob_cmd = app.add_subcommand("prob", "probability of an event");
  add_die_options(prob_cmd, prob_args.die);
  prob_cmd->add_option("-d,--dice", prob_args.d, "number of rolls")->check(CLI::PositiveNumber);
  prob_cmd->add_option("--event", prob_args.event, "event expression")->required();
  prob_cmd->add_option("--cap", prob_args.cap, "enumeration cap");

  StatsArgs stats_args;
  auto *stats_cmd = app.add_subcommand("stats", "mean and variance of a random variable");
  add_die_options(stats_cmd, stats_args.die);
  stats_cmd->add_option("-d,--dice", stats_args.d, "number of rolls")->check(CLI::PositiveNumber);
  stats_cmd->add_option("--rv", stats_args.rv, "random variable expression")->required();
  stats_cmd->add_option("--cap", stats_args.cap, "enumeration cap");

  DistArgs dist_args;
  auto *dist_cmd = app.add_subcommand("dist", "distribution of a random variable");
  add_die_options(dist_cmd, dist_args.die);
  dist_cmd->add_option("-d,--dice", dist_args.d, "number of rolls")->check(CLI::PositiveNumber);
  dist_cmd->add_option("--rv", dist_args.rv, "random variable expression");
  dist_cmd->add_option("--format", dist_args.format, "table, csv or bars")
      ->check(CLI::IsMember({"table", "csv", "bars"}));
  dist_cmd->add_option("--engine", dist_args.engine, "auto, enum or conv")
      ->check(CLI::IsMember({"auto", "enum", "conv"}));
  dist_cmd->add_option("--cdf", dist_args.cdf_convention,
                       "print cumulative values: inclusive or strict")
      ->check(CLI::IsMember({"inclusive", "strict"}));
  dist_cmd->add_option("--pad", dist_args.pad, "pad the layout to values 0..N-1");
  dist_cmd->add_flag("--exact", dist_args.exact, "print exact fractions");
  dist_cmd->add_flag("--header", dist_args.header, "emit a header row");
  dist_cmd->add_option("--cap", dist_args.cap, "enumeration cap");

  CltArgs clt_args;
  auto *clt_cmd = app.add_subcommand("clt", "normal-approximation report per dice count");
  add_die_options(clt_cmd, clt_args.die);
  clt_cmd->add_option("--max-d", clt_args.max_d, "report for d = 1..max_d")
      ->check(CLI::PositiveNumber);
  clt_cmd->add_option("--correction", clt_args.correction, "continuity correction on/off")
      ->check(CLI::IsMember({"on", "off"}));

  int sheet_n = 0;
  bool search_fair = false;
  auto *sheet_cmd = app.add_subcommand("sheet", "reproduce a problem sheet's answers");
  sheet_cmd->add_option("n", sheet_n, "sheet number 1..7")->required()
      ->check(CLI::Range(1, 7));
  sheet_cmd->add_flag("--search-fair", search_fair,
                      "sheet 4: search winning ranges closest to a fair game");

  BenchArgs bench_args;
  auto *bench_cmd = app.add_subcommand("bench", "enumeration vs convolution timings");
  add_die_options(bench_cmd, bench_args.die);
  bench_cmd->add_option("--d-from", bench_args.d_from, "first dice count");
  bench_cmd->add_option("--d-to", bench_args.d_to, "last dice count");
  bench_cmd->add_option("--format", bench_args.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  bench_cmd->add_option("--cap", bench_args.cap, "enumeration cap");

  try {
    app.parse(argc, argv);
    if (prob_cmd->parsed())
      return run_prob(prob_args);
    if (stats_cmd->parsed())
      return run_stats(stats_args);
    if (dist_cmd->parsed())
      return run_dist(dist_args);
    if (clt_cmd->parsed())
      return run_clt(clt_args);
    if (sheet_cmd->parsed())
      return run_sheet(sheet_n, search_fair);
    if (bench_cmd->parsed())
      return run_bench(bench_args);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CapExceededError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << " (at position " << e.position << ")";
    if (!e.expected.empty()) {
      std::cerr << "; expected:";
      for (const std::string &x : e.expected)
        std::cerr << " " << x;
    }
    std::cerr << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
