#ifndef FDP_DIGITCORE_HPP
#define FDP_DIGITCORE_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "fdp/bignat.hpp"

namespace fdp {

/// A leading decimal digit, 1..9.
class Digit {
 public:
  constexpr explicit Digit(int value) : value_(value) {
    if (value < 1 || value > 9)
      throw std::invalid_argument("digit must lie in 1..9, got " + std::to_string(value));
  }

  [[nodiscard]] constexpr int value() const noexcept { return value_; }
  [[nodiscard]] constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(value_ - 1);
  }

  friend constexpr auto operator<=>(Digit, Digit) = default;

 private:
  int value_;
};

inline constexpr std::array<Digit, 9> kAllDigits = {Digit{1}, Digit{2}, Digit{3}, Digit{4}, Digit{5},
                                                Digit{6}, Digit{7}, Digit{8}, Digit{9}};

/// Decade index n, naming the interval [10^(n-1), 10^n).
class DecadeScale {
 public:
  constexpr explicit DecadeScale(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("decade index must be >= 1, got " + std::to_string(n));
  }
  [[nodiscard]] constexpr int value() const noexcept { return n_; }

  friend constexpr auto operator<=>(DecadeScale, DecadeScale) = default;

 private:
  int n_;
};

/// Tallies of leading digits. The total is maintained with the counts.
class DigitCounts {
 public:
  DigitCounts() = default;

  explicit DigitCounts(const std::array<std::uint64_t, 9>& counts)
      : counts_(counts), total_(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})) {}

  void add(Digit d, std::uint64_t n = 1) {
    counts_[d.index()] += n;
    total_ += n;
  }

  [[nodiscard]] std::uint64_t operator[](Digit d) const noexcept { return counts_[d.index()]; }
  [[nodiscard]] const std::array<std::uint64_t, 9>& counts() const noexcept { return counts_; }
  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }

  friend bool operator==(const DigitCounts&, const DigitCounts&) = default;

 private:
  std::array<std::uint64_t, 9> counts_{};
  std::uint64_t total_ = 0;
};

/// Nine probabilities over digits 1..9.
class DigitDistribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit DigitDistribution(const std::array<double, 9>& probs) : probs_(probs) {
    double sum = 0.0;
    for (double p : probs_) {
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability outside [0,1]: " + std::to_string(p));
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw std::invalid_argument("probabilities do not sum to 1 (sum = " + std::to_string(sum) + ")");
  }

  [[nodiscard]] double operator[](Digit d) const noexcept { return probs_[d.index()]; }
  [[nodiscard]] const std::array<double, 9>& probs() const noexcept { return probs_; }

  friend bool operator==(const DigitDistribution&, const DigitDistribution&) = default;

 private:
  std::array<double, 9> probs_;
};

namespace detail {

inline void require_real_at_least_one(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("leading digit requested for a non-finite value");
  if (x < 1.0) throw std::invalid_argument("leading digit requires x >= 1, got " + std::to_string(x));
}

// Exact decimal rendering of floor(x). Integer-valued doubles render exactly
// in fixed notation with zero fractional digits.
inline std::string integer_part_digits(double x) {
  std::array<char, 320> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::floor(x),
                                 std::chars_format::fixed, 0);
  if (ec != std::errc{}) throw std::runtime_error("decimal rendering failed");
  return {buf.data(), end};
}

inline double power_of_ten(int exponent) {
  double p = 1.0;
  for (int i = 0; i < exponent; ++i) p *= 10.0;
  return p;
}

}  // namespace detail

/// Leading digit of the integer part of x >= 1, read from the exact decimal
/// rendering rather than a logarithm.
inline Digit leading_digit(double x) {
  detail::require_real_at_least_one(x);
  return Digit{detail::integer_part_digits(x).front() - '0'};
}

/// Decade containing x >= 1: the n with 10^(n-1) <= x < 10^n.
inline DecadeScale decade_of(double x) {
  detail::require_real_at_least_one(x);
  return DecadeScale{static_cast<int>(detail::integer_part_digits(x).size())};
}

/// Leading digit of a positive machine integer.
inline Digit leading_digit_of_integer(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("leading digit of zero is undefined");
  while (v >= 10) v /= 10;
  return Digit{static_cast<int>(v)};
}

inline Digit leading_digit(const BigNat& v) {
  if (v.is_zero()) throw std::invalid_argument("leading digit of zero is undefined");
  return Digit{v.most_significant_digit()};
}

inline Digit leading_digit_of_bignat(const BigNat& v) { return leading_digit(v); }

/// Half-open subinterval [k*10^(n-1), (k+1)*10^(n-1)) of the decade n.
inline std::pair<double, double> decade_subinterval(DecadeScale n, Digit k) {
  const double unit = detail::power_of_ten(n.value() - 1);
  return {k.value() * unit, (k.value() + 1) * unit};
}

inline DigitDistribution counts_to_distribution(const DigitCounts& c) {
  if (c.total() == 0) throw std::invalid_argument("cannot form a distribution from an empty sample");
  std::array<double, 9> probs{};
  const auto total = static_cast<double>(c.total());
  for (Digit d : kAllDigits) probs[d.index()] = static_cast<double>(c[d]) / total;
  return DigitDistribution{probs};
}

}  // namespace fdp

#endif  // FDP_DIGITCORE_HPP
