#ifndef FDP_REPORT_HPP
#define FDP_REPORT_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdp/digitcore.hpp"

namespace fdp {

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

inline double max_abs_diff(const DigitDistribution& p, const DigitDistribution& q) {
  double worst = 0.0;
  for (Digit d : kAllDigits) worst = std::max(worst, std::abs(p[d] - q[d]));
  return worst;
}

inline double l1_distance(const DigitDistribution& p, const DigitDistribution& q) {
  double sum = 0.0;
  for (Digit d : kAllDigits) sum += std::abs(p[d] - q[d]);
  return sum;
}

/// Pearson statistic sum_k (c_k - N r_k)^2 / (N r_k).
inline double chi_square(const DigitCounts& c, const DigitDistribution& ref) {
  if (c.total() == 0) throw std::invalid_argument("chi-square needs a non-empty sample");
  const auto total = static_cast<double>(c.total());
  double stat = 0.0;
  for (Digit d : kAllDigits) {
    if (!(ref[d] > 0.0))
      throw std::invalid_argument("chi-square reference has an empty cell for digit " +
                                  std::to_string(d.value()));
    const double expected = total * ref[d];
    const double diff = static_cast<double>(c[d]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

struct Comparison {
  DigitCounts counts;
  DigitDistribution empirical;
  DigitDistribution reference;
  double max_abs;
  double l1;
  double chi_square;
};

inline Comparison compare(const DigitCounts& counts, const DigitDistribution& reference) {
  DigitDistribution empirical = counts_to_distribution(counts);
  return {counts,
          empirical,
          reference,
          max_abs_diff(empirical, reference),
          l1_distance(empirical, reference),
          chi_square(counts, reference)};
}

// ---------------------------------------------------------------------------
// Fixed-point formatting, rounding half away from zero
// ---------------------------------------------------------------------------

namespace detail {

// Adds one unit in the last place of an unsigned decimal string "123.456".
inline void increment_decimal(std::string& s) {
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] == '.') continue;
    if (s[i] != '9') {
      ++s[i];
      return;
    }
    s[i] = '0';
  }
  s.insert(s.begin(), '1');
}

}  // namespace detail

/// Renders v with `decimals` fractional digits. Rounding inspects the exact
/// decimal expansion of the double, so ties go away from zero.
inline std::string format_fixed(double v, int decimals) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  if (decimals < 0) throw std::invalid_argument("decimals must be non-negative");
  // 1100 fractional digits cover the longest exact expansion of a double.
  std::string buf(310 + 1 + 1100, '\0');
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::abs(v), std::chars_format::fixed, 1100);
  if (ec != std::errc{}) throw std::runtime_error("decimal rendering failed");
  buf.resize(static_cast<std::size_t>(end - buf.data()));
  const std::size_t point = buf.find('.');
  const bool round_up = buf[point + 1 + static_cast<std::size_t>(decimals)] >= '5';
  std::string out = buf.substr(0, decimals == 0 ? point : point + 1 + static_cast<std::size_t>(decimals));
  if (round_up) detail::increment_decimal(out);
  if (std::signbit(v) && out.find_first_not_of("0.") != std::string::npos) out.insert(out.begin(), '-');
  return out;
}

/// count / total to `decimals` places with exact integer rounding (half up).
inline std::string format_ratio(std::uint64_t count, std::uint64_t total, int decimals) {
  if (total == 0) throw std::invalid_argument("ratio with zero denominator");
  if (decimals < 0 || decimals > 12) throw std::invalid_argument("ratio decimals must lie in 0..12");
  unsigned __int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const unsigned __int128 scaled = (2 * static_cast<unsigned __int128>(count) * scale + total) / (2 * total);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (decimals > 0) {
    std::string digits(static_cast<std::size_t>(decimals), '0');
    for (int i = decimals; i-- > 0; frac /= 10) digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
    out += '.' + digits;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// A header plus rows of pre-formatted cells. No cell contains a comma.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline void write_csv(std::ostream& out, const Table& t) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

/// Columns separated by " | ", padded to the widest cell.
inline void write_aligned(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += " | ";
      text += cells[i];
      if (i + 1 < cells.size()) text.append(width[i] - std::min(width[i], cells[i].size()), ' ');
    }
    out << text << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

/// Digit | Count | Frequency | Reference, nine rows plus a Sum row.
/// Frequencies use `frequency_decimals` (8, or 5 for the factorial table);
/// the reference column always uses `reference_decimals`.
inline Table comparison_table(const DigitCounts& c, const DigitDistribution& ref, int frequency_decimals = 8,
                              int reference_decimals = 8) {
  if (c.total() == 0) throw std::invalid_argument("comparison table needs a non-empty sample");
  Table t{{"digit", "count", "frequency", "reference"}, {}};
  for (Digit d : kAllDigits)
    t.rows.push_back({std::to_string(d.value()), std::to_string(c[d]),
                      format_ratio(c[d], c.total(), frequency_decimals), format_fixed(ref[d], reference_decimals)});
  t.rows.push_back({"Sum", std::to_string(c.total()), format_ratio(1, 1, frequency_decimals),
                    format_ratio(1, 1, reference_decimals)});
  return t;
}

}  // namespace fdp

#endif  // FDP_REPORT_HPP
