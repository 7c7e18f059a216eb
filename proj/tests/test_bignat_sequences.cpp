#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "fdp/analytic.hpp"
#include "fdp/bignat.hpp"
#include "fdp/sequences.hpp"
#include "oracles.hpp"

using namespace fdp;

TEST(BigNat, ZeroAndParsing) {
  EXPECT_TRUE(BigNat{}.is_zero());
  EXPECT_EQ(BigNat{}.to_string(), "0");
  EXPECT_EQ(BigNat{}.digit_count(), 1u);
  EXPECT_EQ(BigNat{"000120"}.to_string(), "120");
  EXPECT_TRUE(BigNat{"0000"}.is_zero());
  EXPECT_THROW(BigNat{""}, std::invalid_argument);
  EXPECT_THROW(BigNat{"12a"}, std::invalid_argument);
  EXPECT_THROW(BigNat{"-1"}, std::invalid_argument);
}

TEST(BigNat, MulSmallRange) {
  BigNat v{std::uint64_t{5}};
  EXPECT_THROW(v.mul_small(0), std::invalid_argument);
  EXPECT_THROW(v.mul_small(BigNat::kMaxFactor + 1), std::invalid_argument);
  EXPECT_EQ(v.mul_small(BigNat::kMaxFactor).to_string(), "5000000");
}

TEST(BigNat, AgreesWith128BitArithmetic) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t a = rng(), b = rng();
    const auto s = static_cast<std::uint32_t>(1 + rng() % BigNat::kMaxFactor);
    const unsigned __int128 sum = static_cast<unsigned __int128>(a) + b;
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * s;
    EXPECT_EQ((BigNat{a} + BigNat{b}).to_string(), oracle::to_decimal(sum));
    EXPECT_EQ(bignat_mul_small(BigNat{a}, s).to_string(), oracle::to_decimal(prod));
    EXPECT_EQ(BigNat{a}.to_string(), std::to_string(a));
    EXPECT_EQ(BigNat{a} < BigNat{b}, a < b);
    EXPECT_EQ(BigNat{oracle::to_decimal(sum)}, BigNat{a} + BigNat{b});
  }
}

TEST(BigNat, CarryChains) {
  BigNat v{"999999999999999999999999"};
  v += BigNat{std::uint64_t{1}};
  EXPECT_EQ(v.to_string(), "1000000000000000000000000");
  EXPECT_EQ(v.digit_count(), 25u);
  EXPECT_EQ(v.most_significant_digit(), 1);
}

TEST(Primes, SieveMatchesTrialDivision) {
  const auto primes = sieve_primes(20000);
  std::size_t j = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    if (oracle::is_prime(n)) {
      ASSERT_LT(j, primes.size());
      EXPECT_EQ(primes[j++], n);
    }
  }
  EXPECT_EQ(j, primes.size());
  EXPECT_THROW(sieve_primes(1), std::invalid_argument);
  EXPECT_EQ(sieve_primes(2).size(), 1u);
}

TEST(Primes, CountsBelowSmallBounds) {
  EXPECT_EQ(prime_digit_counts(100), DigitCounts({4, 3, 3, 3, 3, 2, 4, 2, 1}));
  EXPECT_EQ(prime_digit_counts(10000), DigitCounts({160, 146, 139, 139, 131, 135, 125, 127, 127}));
  // 11 is prime; a bound of 11 excludes it
  EXPECT_EQ(prime_digit_counts(11).total(), 4u);
  EXPECT_EQ(prime_digit_counts(12).total(), 5u);
}

TEST(Fibonacci, SmallTermsAndDigits) {
  EXPECT_EQ(fibonacci(1).to_string(), "1");
  EXPECT_EQ(fibonacci(2).to_string(), "1");
  EXPECT_EQ(fibonacci(12).to_string(), "144");
  EXPECT_EQ(fibonacci(93).to_string(), "12200160415121876738");
  EXPECT_THROW(fibonacci(0), std::invalid_argument);
  const auto digits = fibonacci_leading_digits(12);
  const int expected[] = {1, 1, 2, 3, 5, 8, 1, 2, 3, 5, 8, 1};
  for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(digits[i].value(), expected[i]) << i;
}

TEST(Fibonacci, DigitsAgreeWith64BitRecurrence) {
  const auto digits = fibonacci_leading_digits(93);
  std::uint64_t a = 0, b = 1;
  for (std::size_t i = 0; i < 93; ++i) {
    EXPECT_EQ(digits[i].value(), oracle::first_digit(b)) << i + 1;
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
}

TEST(Fibonacci, RatioSmallIndex) {
  EXPECT_NEAR(fibonacci_ratio(10), 89.0 / 55.0, 1e-15);
  EXPECT_THROW(fibonacci_ratio(1), std::invalid_argument);
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0).to_string(), "1");
  EXPECT_EQ(factorial(20).to_string(), "2432902008176640000");
  EXPECT_EQ(factorial(25).to_string(), "15511210043330985984000000");
}

TEST(Factorial, MethodsAgree) {
  const auto exact = factorial_leading_digits(2000, FactorialMethod::Exact);
  const auto approx = factorial_leading_digits(2000, FactorialMethod::LogSum);
  ASSERT_EQ(exact.digits.size(), approx.digits.size());
  for (std::size_t i = 0; i < exact.digits.size(); ++i) EXPECT_EQ(exact.digits[i], approx.digits[i]) << i + 1;
  EXPECT_TRUE(exact.low_confidence.empty());
}

TEST(Factorial, FirstDigitsByHand) {
  const auto seq = factorial_leading_digits(10, FactorialMethod::Exact);
  const int expected[] = {1, 2, 6, 2, 1, 7, 5, 4, 3, 3};
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(seq.digits[i].value(), expected[i]) << i + 1;
}

TEST(Stirling, KnownRatiosAndMonotone) {
  EXPECT_NEAR(stirling_ratio(1), std::numbers::e / std::sqrt(2.0 * std::numbers::pi), 1e-14);
  EXPECT_NEAR(stirling_ratio(10), 3628800.0 / (std::sqrt(20.0 * std::numbers::pi) * std::pow(10.0 / std::numbers::e, 10)),
              1e-12);
  double prev = stirling_ratio(1);
  for (std::uint32_t x = 2; x <= 3000; x += 7) {
    const double r = stirling_ratio(x);
    EXPECT_LT(r, prev) << x;
    EXPECT_GT(r, 1.0) << x;
    EXPECT_NEAR(r, std::exp(1.0 / (12.0 * x)), std::max(1.0 / (300.0 * x * x * x), 1e-11)) << x;
    prev = r;
  }
}

TEST(SequenceKind, DispatchesEachAlternative) {
  EXPECT_EQ(sequence_digit_counts(Primes{100}).total(), 25u);
  EXPECT_EQ(sequence_digit_counts(Fibonacci{12}), DigitCounts({4, 2, 2, 0, 2, 0, 0, 2, 0}));
  EXPECT_EQ(sequence_digit_counts(Factorial{10, FactorialMethod::LogSum}).total(), 10u);
}
