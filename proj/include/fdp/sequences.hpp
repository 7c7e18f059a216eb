#ifndef FDP_SEQUENCES_HPP
#define FDP_SEQUENCES_HPP

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fdp/bignat.hpp"
#include "fdp/digitcore.hpp"

namespace fdp {

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

/// All primes <= limit in ascending order (odd-only sieve of Eratosthenes).
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("prime limit must be at least 2");
  // composite[i] describes the odd number 2i + 1
  std::vector<bool> composite(limit / 2 + 1, false);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (composite[p / 2]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  std::vector<std::uint64_t> primes{2};
  for (std::uint64_t n = 3; n <= limit; n += 2)
    if (!composite[n / 2]) primes.push_back(n);
  return primes;
}

/// Leading-digit tallies over the primes below `limit` (half-open [1, limit)).
inline DigitCounts prime_digit_counts(std::uint64_t limit) {
  DigitCounts counts;
  for (std::uint64_t p : sieve_primes(limit))
    if (p < limit) counts.add(leading_digit_of_integer(p));
  return counts;
}

// ---------------------------------------------------------------------------
// Fibonacci
// ---------------------------------------------------------------------------

/// F_n with F_1 = F_2 = 1.
inline BigNat fibonacci(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Fibonacci index starts at 1");
  BigNat prev{std::uint64_t{0}}, cur{std::uint64_t{1}};
  for (std::uint64_t i = 1; i < n; ++i) {
    BigNat next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Leading digits of F_1..F_count.
inline std::vector<Digit> fibonacci_leading_digits(std::uint64_t count) {
  if (count < 1) throw std::invalid_argument("Fibonacci count must be at least 1");
  std::vector<Digit> digits;
  digits.reserve(count);
  BigNat prev, cur{std::uint64_t{1}};
  for (std::uint64_t i = 1; i <= count; ++i) {
    digits.push_back(leading_digit(cur));
    prev += cur;
    std::swap(prev, cur);
  }
  return digits;
}

/// F_{n+1} / F_n from the top 30 significant digits of both terms.
inline double fibonacci_ratio(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("Fibonacci ratio needs n >= 2");
  const BigNat lower = fibonacci(n);
  const BigNat upper = lower + fibonacci(n - 1);
  constexpr std::size_t kSignificant = 30;
  const std::size_t upper_len = upper.digit_count();
  const std::size_t drop = upper_len > kSignificant ? upper_len - kSignificant : 0;
  const std::string num = upper.prefix(upper_len - drop);
  const std::string den = lower.prefix(lower.digit_count() - drop);
  return std::strtod(num.c_str(), nullptr) / std::strtod(den.c_str(), nullptr);
}

// ---------------------------------------------------------------------------
// Factorial
// ---------------------------------------------------------------------------

inline BigNat factorial(std::uint32_t x) {
  BigNat out{std::uint64_t{1}};
  for (std::uint32_t i = 2; i <= x; ++i) out.mul_small(i);
  return out;
}

enum class FactorialMethod { Exact, LogSum };

/// Digits of a generated sequence (element i describes term i + 1).
/// `low_confidence` lists 1-based terms whose digit sits within
/// kLogSumBoundaryMargin of a digit boundary in log space (LogSum only).
struct DigitSequence {
  std::vector<Digit> digits;
  std::vector<std::uint64_t> low_confidence;
};

inline constexpr double kLogSumBoundaryMargin = 1e-9;

inline DigitSequence factorial_leading_digits(std::uint32_t count, FactorialMethod method) {
  if (count < 1) throw std::invalid_argument("factorial count must be at least 1");
  DigitSequence out;
  out.digits.reserve(count);
  if (method == FactorialMethod::Exact) {
    BigNat running{std::uint64_t{1}};
    for (std::uint32_t x = 1; x <= count; ++x) out.digits.push_back(leading_digit(running.mul_small(x)));
    return out;
  }
  double log_sum = 0.0;
  for (std::uint32_t x = 1; x <= count; ++x) {
    log_sum += std::log10(static_cast<double>(x));
    const double frac = log_sum - std::floor(log_sum);
    for (int d = 1; d <= 10; ++d) {
      if (std::abs(frac - std::log10(static_cast<double>(d))) < kLogSumBoundaryMargin) {
        out.low_confidence.push_back(x);
        break;
      }
    }
    out.digits.push_back(leading_digit(std::pow(10.0, frac)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sequence tallies
// ---------------------------------------------------------------------------

struct Primes {
  std::uint64_t limit;
};
struct Fibonacci {
  std::uint64_t count;
};
struct Factorial {
  std::uint32_t count;
  FactorialMethod method = FactorialMethod::Exact;
};

using SequenceKind = std::variant<Primes, Fibonacci, Factorial>;

inline DigitCounts tally(const std::vector<Digit>& digits) {
  DigitCounts counts;
  for (Digit d : digits) counts.add(d);
  return counts;
}

inline DigitCounts sequence_digit_counts(const SequenceKind& kind) {
  struct Visitor {
    DigitCounts operator()(const Primes& p) const { return prime_digit_counts(p.limit); }
    DigitCounts operator()(const Fibonacci& f) const { return tally(fibonacci_leading_digits(f.count)); }
    DigitCounts operator()(const Factorial& f) const {
      return tally(factorial_leading_digits(f.count, f.method).digits);
    }
  };
  return std::visit(Visitor{}, kind);
}

// ---------------------------------------------------------------------------
// Asymptotic probes
// ---------------------------------------------------------------------------

inline constexpr double kGoldenRatio = std::numbers::phi;

/// x! / (sqrt(2 pi x) (x/e)^x), evaluated in log space with ln x! summed
/// term by term (Neumaier compensation).
inline double stirling_ratio(std::uint32_t x) {
  if (x < 1) throw std::invalid_argument("Stirling ratio needs x >= 1");
  double sum = 0.0, comp = 0.0;
  for (std::uint32_t i = 2; i <= x; ++i) {
    const double term = std::log(static_cast<double>(i));
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  const double ln_factorial = sum + comp;
  const double xd = x;
  return std::exp(ln_factorial - 0.5 * std::log(2.0 * std::numbers::pi * xd) - xd * (std::log(xd) - 1.0));
}

}  // namespace fdp

#endif  // FDP_SEQUENCES_HPP
