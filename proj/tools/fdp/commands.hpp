#ifndef FDP_TOOLS_COMMANDS_HPP
#define FDP_TOOLS_COMMANDS_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdp/fdp.hpp"

namespace fdp::cli {

enum class OutputFormat { Csv, AlignedText };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kMaxPrimeLimit = 100'000'000;
inline constexpr std::uint64_t kMaxFibonacciCount = 10'000;
inline constexpr std::uint64_t kMaxFactorialCount = 10'000;

/// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accepts a decimal number or the literal "e".
inline double parse_real(const std::string& text, const std::string& what) {
  if (text == "e") return std::numbers::e;
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw UsageError(what + ": not a number: '" + text + "'");
  return value;
}

/// Shortest round-trip rendering.
inline std::string format_shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

/// Table value cell: 3 significant digits with uppercase E from 10^6 up,
/// otherwise plain decimal with at most six fractional digits.
inline std::string format_value(double v) {
  if (std::abs(v) >= 1e6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2E", v);
    return buf;
  }
  std::string s = format_fixed(v, 6);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

inline void emit(std::ostream& out, const Table& t, OutputFormat format) {
  if (format == OutputFormat::Csv)
    write_csv(out, t);
  else
    write_aligned(out, t);
}

struct FamilyOptions {
  std::string family;
  std::optional<std::string> base;
  std::optional<double> exponent, index, scale, rate, slope, stretch, shift, numerator, hshift;
};

inline void add_family_options(CLI::App& cmd, FamilyOptions& o) {
  cmd.add_option("--family", o.family, "exponential | power | linear | root | log | reciprocal")
      ->required()
      ->check(CLI::IsMember({"exponential", "power", "linear", "root", "log", "reciprocal"}));
  cmd.add_option("--base", o.base, "base a (exponential, log); accepts 'e'");
  cmd.add_option("--exponent", o.exponent, "exponent a (power)");
  cmd.add_option("--index", o.index, "root index a (root)");
  cmd.add_option("--scale", o.scale, "vertical scale h (exponential, power, root)");
  cmd.add_option("--rate", o.rate, "rate m in the exponent (exponential)");
  cmd.add_option("--slope", o.slope, "slope m (linear)");
  cmd.add_option("--stretch", o.stretch, "divisor h (log)");
  cmd.add_option("--shift", o.shift, "inner divisor m (log)");
  cmd.add_option("--numerator", o.numerator, "numerator a (reciprocal)");
  cmd.add_option("--hshift", o.hshift, "horizontal shift (reciprocal)");
}

inline FunctionFamily build_family(const FamilyOptions& o) {
  const double base = o.base ? parse_real(*o.base, "--base") : 0.0;
  FunctionFamily f;
  if (o.family == "exponential") {
    f = Exponential{o.base ? base : std::numbers::e, o.scale.value_or(1.0), o.rate.value_or(1.0)};
  } else if (o.family == "power") {
    f = Power{o.exponent.value_or(2.0), o.scale.value_or(1.0)};
  } else if (o.family == "linear") {
    f = Linear{o.slope.value_or(1.0)};
  } else if (o.family == "root") {
    f = Root{o.index.value_or(2.0), o.scale.value_or(1.0)};
  } else if (o.family == "log") {
    f = Logarithmic{o.base ? base : 10.0, o.stretch.value_or(1.0), o.shift.value_or(1.0)};
  } else if (o.family == "reciprocal") {
    f = Reciprocal{o.numerator.value_or(1.0), o.hshift.value_or(0.0)};
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  validate(f);
  return f;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline Table analytic_table(const FunctionFamily& f, DecadeScale n, int decimals) {
  const DigitDistribution dist = analytic_distribution(f, n);
  Table t{{"digit", "p_k"}, {}};
  double sum = 0.0;
  for (Digit d : kAllDigits) {
    t.rows.push_back({std::to_string(d.value()), format_fixed(dist[d], decimals)});
    sum += dist[d];
  }
  t.rows.push_back({"Sum", format_fixed(sum, decimals)});
  return t;
}

inline Table scenario_rows_table(const ScenarioRun& run) {
  Table t{{"x", "y", "digit"}, {}};
  for (const auto& r : run.rows)
    t.rows.push_back({format_value(r.x), format_value(r.y), r.digit ? std::to_string(r.digit->value()) : ""});
  return t;
}

/// Frequency columns for the primes below each bound: 10^2, 10^4, ... below
/// the limit, then the limit itself.
inline Table prime_ranges_table(std::uint64_t limit, int decimals) {
  std::vector<std::uint64_t> bounds;
  for (std::uint64_t b = 100; b < limit; b *= 100) bounds.push_back(b);
  bounds.push_back(limit);
  const auto primes = sieve_primes(limit);
  std::vector<DigitCounts> counts(bounds.size());
  for (std::uint64_t p : primes)
    for (std::size_t j = 0; j < bounds.size(); ++j)
      if (p < bounds[j]) counts[j].add(leading_digit_of_integer(p));
  Table t{{"digit"}, {}};
  for (auto b : bounds) t.header.push_back("fdp_lt_" + std::to_string(b));
  for (Digit d : kAllDigits) {
    std::vector<std::string> row{std::to_string(d.value())};
    for (const auto& c : counts) row.push_back(c.total() ? format_ratio(c[d], c.total(), decimals) : "");
    t.rows.push_back(std::move(row));
  }
  std::vector<std::string> sum{"Sum"}, total{"Count"};
  for (const auto& c : counts) {
    sum.push_back(c.total() ? format_ratio(1, 1, decimals) : "");
    total.push_back(std::to_string(c.total()));
  }
  t.rows.push_back(std::move(sum));
  t.rows.push_back(std::move(total));
  return t;
}

inline Table limits_table(const std::string& probe, double a, std::uint64_t n, std::uint64_t x) {
  double value = 0.0, limit = 0.0;
  std::string argument;
  if (probe == "power-p1") {
    if (!(a > 1.0)) throw UsageError("exponent must exceed 1");
    value = power_p1(a);
    limit = std::numbers::log10e * std::numbers::ln2;
    argument = format_shortest(a);
  } else if (probe == "fib-ratio") {
    if (n < 2 || n > kMaxFibonacciCount) throw UsageError("--n must lie in [2, 10000]");
    value = fibonacci_ratio(n);
    limit = kGoldenRatio;
    argument = std::to_string(n);
  } else if (probe == "stirling") {
    if (x < 1 || x > 100'000'000) throw UsageError("--x must lie in [1, 100000000]");
    value = stirling_ratio(static_cast<std::uint32_t>(x));
    limit = 1.0;
    argument = std::to_string(x);
  } else {
    throw UsageError("unknown probe '" + probe + "'");
  }
  return {{"probe", "argument", "value", "limit", "gap"},
          {{probe, argument, format_shortest(value), format_shortest(limit), format_shortest(std::abs(value - limit))}}};
}

/// Entry point shared by the executable and the tests. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-digit probability engine: analytic, empirical and sequence digit tables"};
  app.name("fdp");
  app.require_subcommand(1);

  std::string format_name = "csv";
  auto add_format = [&format_name](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "csv | text")->check(CLI::IsMember({"csv", "text"}));
  };

  // analytic
  FamilyOptions analytic_family;
  int analytic_decade = 1;
  int analytic_decimals = 8;
  auto* analytic = app.add_subcommand("analytic", "closed-form P_k table for a function family");
  add_family_options(*analytic, analytic_family);
  analytic->add_option("--decade", analytic_decade, "decade index n (interval [10^(n-1), 10^n))");
  analytic->add_option("--decimals", analytic_decimals, "fractional digits")->check(CLI::Range(0, 17));
  add_format(analytic);

  // scenario
  std::string scenario_name_arg;
  bool scenario_rows = false;
  auto* scenario = app.add_subcommand("scenario", "worked example: value rows or digit summary");
  scenario->add_option("name", scenario_name_arg, "bacterial | freefall | pool | height | population | scuba")
      ->required();
  auto* rows_flag = scenario->add_flag("--rows", scenario_rows, "emit every grid value with its digit");
  scenario->add_flag("--summary", "emit the digit comparison table (default)")->excludes(rows_flag);
  add_format(scenario);

  // sequence
  std::string sequence_kind;
  std::uint64_t prime_limit = 1'000'000;
  std::uint64_t sequence_count = 0;
  std::string factorial_method = "exact";
  std::optional<int> sequence_decimals;
  auto* sequence = app.add_subcommand("sequence", "digit statistics of primes, Fibonacci numbers or factorials");
  sequence->add_option("kind", sequence_kind, "primes | fibonacci | factorial")
      ->required()
      ->check(CLI::IsMember({"primes", "fibonacci", "factorial"}));
  sequence->add_option("--limit", prime_limit, "primes: upper bound (exclusive), at most 10^8");
  sequence->add_option("--count", sequence_count, "fibonacci/factorial: number of terms, at most 10^4");
  sequence->add_option("--method", factorial_method, "factorial: exact | logsum")
      ->check(CLI::IsMember({"exact", "logsum"}));
  sequence->add_option("--decimals", sequence_decimals, "frequency digits (factorial default 5, else 8)")
      ->check(CLI::Range(0, 12));
  add_format(sequence);

  // empirical
  FamilyOptions empirical_family;
  double grid_start = 1.0, grid_step = 1.0, range_lo = 1.0, range_hi = 10.0;
  std::uint64_t grid_count = 1;
  bool inclusive_upper = false;
  int empirical_decade = 1;
  auto* empirical = app.add_subcommand("empirical", "sample a family on a grid and compare digits");
  add_family_options(*empirical, empirical_family);
  empirical->add_option("--start", grid_start, "first grid point")->required();
  empirical->add_option("--step", grid_step, "grid spacing (> 0)")->required();
  empirical->add_option("--count", grid_count, "number of grid points")->required();
  empirical->add_option("--lo", range_lo, "range lower bound (>= 1)")->required();
  empirical->add_option("--hi", range_hi, "range upper bound")->required();
  empirical->add_flag("--inclusive-upper", inclusive_upper, "keep values equal to --hi");
  empirical->add_option("--decade", empirical_decade, "decade index for the reference (log family)");
  add_format(empirical);

  // limits
  std::string probe;
  double probe_a = 1e6;
  std::uint64_t probe_n = 500, probe_x = 2000;
  auto* limits = app.add_subcommand("limits", "asymptotic probes: power-p1, fib-ratio, stirling");
  limits->add_option("probe", probe, "power-p1 | fib-ratio | stirling")
      ->required()
      ->check(CLI::IsMember({"power-p1", "fib-ratio", "stirling"}));
  limits->add_option("--a", probe_a, "power exponent for power-p1");
  limits->add_option("--n", probe_n, "Fibonacci index for fib-ratio");
  limits->add_option("--x", probe_x, "argument for stirling");
  add_format(limits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = format_name == "text" ? OutputFormat::AlignedText : OutputFormat::Csv;
  try {
    if (*analytic) {
      const FunctionFamily f = build_family(analytic_family);
      if (analytic_decade < 1) throw UsageError("decade must be >= 1");
      emit(out, analytic_table(f, DecadeScale{analytic_decade}, analytic_decimals), format);
    } else if (*scenario) {
      const auto id = parse_scenario_id(scenario_name_arg);
      if (!id) throw UsageError("unknown scenario '" + scenario_name_arg + "'");
      const ScenarioRun run = run_scenario(*id);
      emit(out, scenario_rows ? scenario_rows_table(run) : comparison_table(run.counts, run.reference), format);
    } else if (*sequence) {
      const int default_decimals = sequence_kind == "factorial" ? 5 : 8;
      const int decimals = sequence_decimals.value_or(default_decimals);
      if (sequence_kind == "primes") {
        if (prime_limit < 2 || prime_limit > kMaxPrimeLimit) throw UsageError("--limit must lie in [2, 100000000]");
        emit(out, prime_ranges_table(prime_limit, decimals), format);
      } else if (sequence_kind == "fibonacci") {
        const std::uint64_t count = sequence_count ? sequence_count : 500;
        if (count > kMaxFibonacciCount) throw UsageError("--count must lie in [1, 10000]");
        emit(out, comparison_table(sequence_digit_counts(Fibonacci{count}), benford_distribution(), decimals), format);
      } else {
        const std::uint64_t count = sequence_count ? sequence_count : 2000;
        if (count > kMaxFactorialCount) throw UsageError("--count must lie in [1, 10000]");
        const auto method = factorial_method == "logsum" ? FactorialMethod::LogSum : FactorialMethod::Exact;
        const auto counts = sequence_digit_counts(Factorial{static_cast<std::uint32_t>(count), method});
        emit(out, comparison_table(counts, benford_distribution(), decimals), format);
      }
    } else if (*empirical) {
      const FunctionFamily f = build_family(empirical_family);
      if (empirical_decade < 1) throw UsageError("decade must be >= 1");
      const SampleSpec spec{grid_start, grid_step, static_cast<std::size_t>(grid_count)};
      const RangeFilter filter{range_lo, range_hi, inclusive_upper};
      const DigitCounts counts = sample_digit_counts([&f](double x) { return evaluate(f, x); }, spec, filter);
      if (counts.total() == 0) throw UsageError("no grid value falls inside the range");
      emit(out, comparison_table(counts, analytic_distribution(f, DecadeScale{empirical_decade})), format);
    } else if (*limits) {
      emit(out, limits_table(probe, probe_a, probe_n, probe_x), format);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace fdp::cli

#endif  // FDP_TOOLS_COMMANDS_HPP
