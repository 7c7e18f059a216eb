#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "fdp/digitcore.hpp"
#include "oracles.hpp"

using namespace fdp;

TEST(Digit, RejectsValuesOutsideOneToNine) {
  EXPECT_THROW(Digit{0}, std::invalid_argument);
  EXPECT_THROW(Digit{10}, std::invalid_argument);
  EXPECT_THROW(Digit{-3}, std::invalid_argument);
  EXPECT_EQ(Digit{7}.value(), 7);
  EXPECT_EQ(Digit{7}.index(), 6u);
}

TEST(DecadeScale, RejectsNonPositive) {
  EXPECT_THROW(DecadeScale{0}, std::invalid_argument);
  EXPECT_EQ(DecadeScale{3}.value(), 3);
}

TEST(LeadingDigit, KnownValues) {
  EXPECT_EQ(leading_digit(1.0).value(), 1);
  EXPECT_EQ(leading_digit(9.999999).value(), 9);
  EXPECT_EQ(leading_digit(10.0).value(), 1);
  EXPECT_EQ(leading_digit(1000.0).value(), 1);
  EXPECT_EQ(leading_digit(999.9999999).value(), 9);
  EXPECT_EQ(leading_digit(447.24).value(), 4);
  EXPECT_EQ(leading_digit(2.3e300).value(), 2);
  EXPECT_EQ(leading_digit(std::numeric_limits<double>::max()).value(), 1);
}

TEST(LeadingDigit, RejectsBelowOneAndNonFinite) {
  EXPECT_THROW(leading_digit(0.999), std::invalid_argument);
  EXPECT_THROW(leading_digit(0.0), std::invalid_argument);
  EXPECT_THROW(leading_digit(-5.0), std::invalid_argument);
  EXPECT_THROW(leading_digit(std::numeric_limits<double>::infinity()), std::invalid_argument);
  EXPECT_THROW(leading_digit(std::nan("")), std::invalid_argument);
}

TEST(LeadingDigit, PowersOfTenAndTheirPredecessors) {
  double p = 1.0;
  for (int n = 1; n <= 22; ++n) {
    p *= 10.0;
    EXPECT_EQ(leading_digit(p).value(), 1) << p;
    EXPECT_EQ(decade_of(p).value(), n + 1) << p;
    const double below = std::nextafter(p, 0.0);
    EXPECT_EQ(decade_of(below).value(), n) << below;
    EXPECT_EQ(leading_digit(below).value(), 9) << below;
  }
}

TEST(LeadingDigit, AgreesWithIntegerOracle) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t v = 1 + rng() % (std::uint64_t{1} << 53);
    EXPECT_EQ(leading_digit(static_cast<double>(v)).value(), oracle::first_digit(v)) << v;
    EXPECT_EQ(leading_digit_of_integer(v).value(), oracle::first_digit(v)) << v;
  }
}

TEST(LeadingDigit, AgreesWithBigNatRendering) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(0.0, 300.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    const std::string digits = detail::integer_part_digits(x);
    EXPECT_EQ(leading_digit(x).value(), leading_digit(BigNat{digits}).value()) << digits;
    EXPECT_EQ(static_cast<std::size_t>(decade_of(x).value()), digits.size()) << digits;
  }
}

TEST(DecadeSubinterval, Bounds) {
  const auto [lo, hi] = decade_subinterval(DecadeScale{3}, Digit{4});
  EXPECT_EQ(lo, 400.0);
  EXPECT_EQ(hi, 500.0);
}

TEST(DigitCounts, TotalsTrackAdds) {
  DigitCounts c;
  c.add(Digit{1});
  c.add(Digit{9}, 4);
  EXPECT_EQ(c.total(), 5u);
  EXPECT_EQ(c[Digit{9}], 4u);
  EXPECT_EQ(DigitCounts(std::array<std::uint64_t, 9>{1, 0, 0, 0, 0, 0, 0, 0, 4}), c);
}

TEST(DigitDistribution, ValidatesEntriesAndSum) {
  std::array<double, 9> uniform{};
  uniform.fill(1.0 / 9.0);
  EXPECT_NO_THROW(DigitDistribution{uniform});
  auto bad = uniform;
  bad[0] += 1e-9;
  EXPECT_THROW(DigitDistribution{bad}, std::invalid_argument);
  bad = uniform;
  bad[0] = -0.1;
  bad[1] += 0.1 + 1.0 / 9.0;
  EXPECT_THROW(DigitDistribution{bad}, std::invalid_argument);
}

TEST(CountsToDistribution, EmptySampleThrows) {
  EXPECT_THROW(counts_to_distribution(DigitCounts{}), std::invalid_argument);
  const auto d = counts_to_distribution(DigitCounts{{4, 3, 3, 3, 3, 2, 4, 2, 1}});
  EXPECT_DOUBLE_EQ(d[Digit{1}], 0.16);
}
