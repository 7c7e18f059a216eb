#ifndef FDP_ANALYTIC_HPP
#define FDP_ANALYTIC_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include "fdp/digitcore.hpp"

namespace fdp {

// ---------------------------------------------------------------------------
// Function families
// ---------------------------------------------------------------------------

namespace detail {

inline void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace detail

/// y = scale * base^(rate * x)
struct Exponential {
  double base = std::numbers::e;
  double scale = 1.0;
  double rate = 1.0;

  void validate() const {
    detail::require(base > 1.0 && std::isfinite(base), "base must exceed 1");
    detail::require(scale > 0.0 && std::isfinite(scale), "scale must be positive");
    detail::require(rate > 0.0 && std::isfinite(rate), "rate must be positive");
  }
  [[nodiscard]] double operator()(double x) const { return scale * std::pow(base, rate * x); }
  [[nodiscard]] double inverse(double y) const { return std::log(y / scale) / (rate * std::log(base)); }
};

/// y = scale * x^exponent
struct Power {
  double exponent = 2.0;
  double scale = 1.0;

  void validate() const {
    detail::require(exponent > 1.0 && std::isfinite(exponent), "exponent must exceed 1");
    detail::require(scale > 0.0 && std::isfinite(scale), "scale must be positive");
  }
  [[nodiscard]] double operator()(double x) const { return scale * std::pow(x, exponent); }
  [[nodiscard]] double inverse(double y) const { return std::pow(y / scale, 1.0 / exponent); }
};

/// y = slope * x
struct Linear {
  double slope = 1.0;

  void validate() const { detail::require(slope > 0.0 && std::isfinite(slope), "slope must be positive"); }
  [[nodiscard]] double operator()(double x) const { return slope * x; }
  [[nodiscard]] double inverse(double y) const { return y / slope; }
};

/// y = scale * x^(1/index)
struct Root {
  double index = 2.0;
  double scale = 1.0;

  void validate() const {
    detail::require(index > 1.0 && std::isfinite(index), "index must exceed 1");
    detail::require(scale > 0.0 && std::isfinite(scale), "scale must be positive");
  }
  [[nodiscard]] double operator()(double x) const { return scale * std::pow(x, 1.0 / index); }
  [[nodiscard]] double inverse(double y) const { return std::pow(y / scale, index); }
};

/// y = log_base(x / shift) / stretch
struct Logarithmic {
  double base = 10.0;
  double stretch = 1.0;
  double shift = 1.0;

  void validate() const {
    detail::require(base > 1.0 && std::isfinite(base), "base must exceed 1");
    detail::require(stretch > 0.0 && std::isfinite(stretch), "stretch must be positive");
    detail::require(shift > 0.0 && std::isfinite(shift), "shift must be positive");
  }
  [[nodiscard]] double operator()(double x) const { return std::log(x / shift) / (stretch * std::log(base)); }
  [[nodiscard]] double inverse(double y) const { return shift * std::exp(stretch * std::log(base) * y); }
  /// log of the base a^h that gives the same digit behaviour as the stretched curve.
  [[nodiscard]] double log_effective_base() const { return stretch * std::log(base); }
};

/// y = numerator / (x - hshift)
struct Reciprocal {
  double numerator = 1.0;
  double hshift = 0.0;

  void validate() const {
    detail::require(numerator > 0.0 && std::isfinite(numerator), "numerator must be positive");
    detail::require(std::isfinite(hshift), "hshift must be finite");
  }
  [[nodiscard]] double operator()(double x) const { return numerator / (x - hshift); }
  [[nodiscard]] double inverse(double y) const { return numerator / y + hshift; }
};

using FunctionFamily = std::variant<Exponential, Power, Linear, Root, Logarithmic, Reciprocal>;

inline void validate(const FunctionFamily& f) {
  std::visit([](const auto& fam) { fam.validate(); }, f);
}

inline double evaluate(const FunctionFamily& f, double x) {
  return std::visit([x](const auto& fam) { return fam(x); }, f);
}

inline double evaluate_inverse(const FunctionFamily& f, double y) {
  return std::visit([y](const auto& fam) { return fam.inverse(y); }, f);
}

inline std::string_view family_name(const FunctionFamily& f) {
  constexpr std::array<std::string_view, 6> names = {"exponential", "power", "linear",
                                                     "root",        "log",   "reciprocal"};
  return names[f.index()];
}

// ---------------------------------------------------------------------------
// Closed-form first-digit probabilities
// ---------------------------------------------------------------------------

/// log10((k+1)/k)
inline double benford_pk(Digit k) { return std::log10((k.value() + 1.0) / k.value()); }

/// ((k+1)^(1/a) - k^(1/a)) / (10^(1/a) - 1), evaluated with expm1 so that
/// large exponents keep their precision.
inline double power_pk(double a, Digit k) {
  detail::require(a > 1.0 && std::isfinite(a), "exponent must exceed 1");
  const double kk = k.value();
  const double numer = std::exp(std::log(kk) / a) * std::expm1(std::log1p(1.0 / kk) / a);
  return numer / std::expm1(std::log(10.0) / a);
}

inline double linear_pk(Digit) { return 1.0 / 9.0; }

/// ((k+1)^a - k^a) / (10^a - 1), scaled by 10^-a to stay finite.
inline double root_pk(double a, Digit k) {
  detail::require(a > 1.0 && std::isfinite(a), "index must exceed 1");
  const double kk = k.value();
  return (std::pow((kk + 1.0) / 10.0, a) - std::pow(kk / 10.0, a)) / (1.0 - std::pow(10.0, -a));
}

namespace detail {

// P_k = 1 / sum_i c^(i-k) with ln c = log_base * 10^(n-1).
inline double log_pk_from_log_base(double log_base, DecadeScale n, Digit k) {
  const double step = log_base * power_of_ten(n.value() - 1);
  double sum = 1.0;
  for (int i = 1; i <= 9; ++i)
    if (i != k.value()) sum += std::exp((i - k.value()) * step);
  return 1.0 / sum;
}

}  // namespace detail

/// a^(k*10^(n-1)) / sum_i a^(i*10^(n-1)), evaluated through exponent differences.
inline double log_pk(double a, DecadeScale n, Digit k) {
  detail::require(a > 1.0 && std::isfinite(a), "base must exceed 1");
  return detail::log_pk_from_log_base(std::log(a), n, k);
}

/// 10 / (9 k (k+1))
inline double reciprocal_pk(Digit k) {
  const double kk = k.value();
  return 10.0 / (9.0 * kk * (kk + 1.0));
}

template <class Pk>
DigitDistribution make_distribution(Pk&& pk) {
  std::array<double, 9> probs{};
  for (Digit d : kAllDigits) probs[d.index()] = pk(d);
  return DigitDistribution{probs};
}

/// Closed-form distribution for a family on decade n. Only the logarithmic
/// family depends on n; its stretch folds into the base (a -> a^h) and its
/// inner scale drops out.
inline DigitDistribution analytic_distribution(const FunctionFamily& f, DecadeScale n) {
  validate(f);
  return std::visit(
      [n](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return make_distribution(benford_pk);
        } else if constexpr (std::is_same_v<T, Power>) {
          return make_distribution([&](Digit k) { return power_pk(fam.exponent, k); });
        } else if constexpr (std::is_same_v<T, Linear>) {
          return make_distribution(linear_pk);
        } else if constexpr (std::is_same_v<T, Root>) {
          return make_distribution([&](Digit k) { return root_pk(fam.index, k); });
        } else if constexpr (std::is_same_v<T, Logarithmic>) {
          const double log_base = fam.log_effective_base();
          return make_distribution([&](Digit k) { return detail::log_pk_from_log_base(log_base, n, k); });
        } else {
          static_assert(std::is_same_v<T, Reciprocal>);
          return make_distribution(reciprocal_pk);
        }
      },
      f);
}

inline DigitDistribution benford_distribution() { return make_distribution(benford_pk); }

// ---------------------------------------------------------------------------
// Generic inverse-image formula
// ---------------------------------------------------------------------------

/// Share of the decade n's inverse image that lands on digit k:
///   |inv((k+1)10^(n-1)) - inv(k 10^(n-1))| / |inv(10^n) - inv(10^(n-1))|.
/// Absolute values make it valid for decreasing maps as well.
template <class Inverse>
double generic_pk(Inverse&& inv, DecadeScale n, Digit k) {
  const double unit = detail::power_of_ten(n.value() - 1);
  const double denom = std::abs(inv(10.0 * unit) - inv(unit));
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw std::invalid_argument("inverse map is constant or non-finite on the decade");
  const auto [lo, hi] = decade_subinterval(n, k);
  return std::abs(inv(hi) - inv(lo)) / denom;
}

struct Bracket {
  double lo;
  double hi;
};

/// Solve f(x) = y by bisection on a bracket whose endpoint values straddle y.
/// Stops once the bracket is no wider than tol (or cannot shrink further).
template <class Forward>
double invert_monotone(Forward&& f, double y, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
  double lo = bracket.lo, hi = bracket.hi;
  if (!(lo < hi)) throw std::invalid_argument("bracket must satisfy lo < hi");
  double f_lo = f(lo) - y;
  const double f_hi = f(hi) - y;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::isnan(f_lo) || std::isnan(f_hi) || std::signbit(f_lo) == std::signbit(f_hi))
    throw std::invalid_argument("bracket does not enclose the target value");
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid) - y;
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

/// Default tolerance: 1e-12 of the bracket width.
template <class Forward>
double invert_monotone(Forward&& f, double y, Bracket bracket) {
  return invert_monotone(std::forward<Forward>(f), y, bracket, 1e-12 * (bracket.hi - bracket.lo));
}

/// generic_pk for a forward map, inverting it numerically inside `bracket`.
template <class Forward>
double generic_pk_forward(Forward&& f, Bracket bracket, DecadeScale n, Digit k, double tol) {
  return generic_pk([&](double y) { return invert_monotone(f, y, bracket, tol); }, n, k);
}

// ---------------------------------------------------------------------------
// Trend classification and limit probes
// ---------------------------------------------------------------------------

enum class TrendClass { DecreasingPk, ConstantPk, IncreasingPk };

inline std::string_view to_string(TrendClass t) {
  switch (t) {
    case TrendClass::DecreasingPk: return "decreasing";
    case TrendClass::ConstantPk: return "constant";
    case TrendClass::IncreasingPk: return "increasing";
  }
  return "unknown";
}

/// Convex families have decreasing P_k, concave ones increasing, lines constant.
inline TrendClass trend_classify(const FunctionFamily& f) {
  switch (f.index()) {
    case 0:  // exponential
    case 1:  // power
    case 5:  // reciprocal
      return TrendClass::DecreasingPk;
    case 2:
      return TrendClass::ConstantPk;
    default:
      return TrendClass::IncreasingPk;
  }
}

/// Trend read off the sign of centred second differences of the forward map
/// at three interior points of the preimage of [1, 10]. The sign does not
/// depend on traversal direction, so the reciprocal needs no special case.
inline TrendClass numeric_trend(const FunctionFamily& f) {
  validate(f);
  double a = evaluate_inverse(f, 1.0);
  double b = evaluate_inverse(f, 10.0);
  if (a > b) std::swap(a, b);
  const double step = (b - a) / 20.0;
  int sign = 2;
  for (double frac : {0.25, 0.5, 0.75}) {
    const double x = a + frac * (b - a);
    const double left = evaluate(f, x - step), mid = evaluate(f, x), right = evaluate(f, x + step);
    const double d2 = left - 2.0 * mid + right;
    const double scale = std::abs(left) + 2.0 * std::abs(mid) + std::abs(right);
    const int s = std::abs(d2) <= 1e-9 * scale ? 0 : (d2 > 0.0 ? 1 : -1);
    if (sign != 2 && s != sign) throw std::logic_error("second differences disagree in sign");
    sign = s;
  }
  return sign > 0 ? TrendClass::DecreasingPk : (sign == 0 ? TrendClass::ConstantPk : TrendClass::IncreasingPk);
}

/// P_1 of y = x^a: (2^(1/a) - 1) / (10^(1/a) - 1). Rises towards log10(2).
inline double power_p1(double a) { return power_pk(a, Digit{1}); }

}  // namespace fdp

#endif  // FDP_ANALYTIC_HPP
