#ifndef FDP_EMPIRICAL_HPP
#define FDP_EMPIRICAL_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdp/digitcore.hpp"

namespace fdp {

/// Grid x_i = start + i * step for i = 0..count-1, always formed from the
/// integer index so that no drift accumulates.
struct SampleSpec {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 1;

  void validate() const {
    if (!std::isfinite(start)) throw std::invalid_argument("grid start must be finite");
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be positive");
    if (count < 1) throw std::invalid_argument("grid count must be at least 1");
  }

  [[nodiscard]] double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// Measurement range [lo, hi), or [lo, hi] when upper_inclusive is set.
struct RangeFilter {
  double lo = 1.0;
  double hi = 10.0;
  bool upper_inclusive = false;

  void validate() const {
    if (!(lo >= 1.0) || !std::isfinite(lo)) throw std::invalid_argument("range lower bound must be >= 1");
    if (!(hi > lo)) throw std::invalid_argument("range upper bound must exceed the lower bound");
  }

  [[nodiscard]] bool contains(double y) const {
    return y >= lo && (upper_inclusive ? y <= hi : y < hi);
  }
};

/// One grid point. `digit` is empty when y fell outside the range.
struct SampleRow {
  double x;
  double y;
  std::optional<Digit> digit;

  [[nodiscard]] bool included() const noexcept { return digit.has_value(); }
};

template <class F>
std::vector<SampleRow> sample_table(F&& f, const SampleSpec& spec, const RangeFilter& filter) {
  spec.validate();
  filter.validate();
  std::vector<SampleRow> rows;
  rows.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double x = spec.at(i);
    const double y = f(x);
    if (!std::isfinite(y))
      throw std::domain_error("function is not finite at grid point x = " + std::to_string(x));
    rows.push_back({x, y, filter.contains(y) ? std::optional<Digit>{leading_digit(y)} : std::nullopt});
  }
  return rows;
}

inline DigitCounts tally(const std::vector<SampleRow>& rows) {
  DigitCounts counts;
  for (const auto& row : rows)
    if (row.digit) counts.add(*row.digit);
  return counts;
}

template <class F>
DigitCounts sample_digit_counts(F&& f, const SampleSpec& spec, const RangeFilter& filter) {
  return tally(sample_table(std::forward<F>(f), spec, filter));
}

}  // namespace fdp

#endif  // FDP_EMPIRICAL_HPP
