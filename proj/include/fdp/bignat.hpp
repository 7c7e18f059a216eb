#ifndef FDP_BIGNAT_HPP
#define FDP_BIGNAT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fdp {

/// Exact non-negative integer held as decimal digits.
///
/// Digits are stored least significant first so that carries run forward
/// through the vector; `to_string()` renders them most significant first.
/// Zero is the empty digit vector, so a canonical value never carries a
/// leading (most significant) zero.
class BigNat {
 public:
  BigNat() = default;

  explicit BigNat(std::uint64_t value) {
    while (value != 0) {
      digits_.push_back(static_cast<std::uint8_t>(value % 10));
      value /= 10;
    }
  }

  explicit BigNat(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigNat: empty digit string");
    digits_.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
      if (*it < '0' || *it > '9')
        throw std::invalid_argument("BigNat: non-decimal character in '" + std::string(text) + "'");
      digits_.push_back(static_cast<std::uint8_t>(*it - '0'));
    }
    trim();
  }

  [[nodiscard]] bool is_zero() const noexcept { return digits_.empty(); }

  /// Number of decimal digits; zero has one digit.
  [[nodiscard]] std::size_t digit_count() const noexcept {
    return digits_.empty() ? 1 : digits_.size();
  }

  /// Most significant digit (0 only for the value zero).
  [[nodiscard]] int most_significant_digit() const noexcept {
    return digits_.empty() ? 0 : digits_.back();
  }

  /// Leading `count` digits as a string (fewer if the number is shorter).
  [[nodiscard]] std::string prefix(std::size_t count) const {
    if (digits_.empty()) return "0";
    count = std::min(count, digits_.size());
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(static_cast<char>('0' + digits_[digits_.size() - 1 - i]));
    return out;
  }

  [[nodiscard]] std::string to_string() const { return prefix(digit_count()); }

  BigNat& operator+=(const BigNat& rhs) {
    if (rhs.digits_.size() > digits_.size()) digits_.resize(rhs.digits_.size(), 0);
    std::uint8_t carry = 0;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      std::uint8_t sum = digits_[i] + carry + (i < rhs.digits_.size() ? rhs.digits_[i] : 0);
      carry = sum >= 10;
      digits_[i] = carry ? sum - 10 : sum;
      if (!carry && i >= rhs.digits_.size()) break;
    }
    if (carry) digits_.push_back(1);
    return *this;
  }

  /// Multiply in place by 1 <= factor <= 10^6.
  BigNat& mul_small(std::uint32_t factor) {
    if (factor == 0 || factor > kMaxFactor)
      throw std::invalid_argument("BigNat: small factor must lie in [1, 1000000], got " +
                                  std::to_string(factor));
    std::uint64_t carry = 0;
    for (auto& d : digits_) {
      std::uint64_t cur = std::uint64_t{d} * factor + carry;
      d = static_cast<std::uint8_t>(cur % 10);
      carry = cur / 10;
    }
    while (carry != 0) {
      digits_.push_back(static_cast<std::uint8_t>(carry % 10));
      carry /= 10;
    }
    return *this;
  }

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }

  friend bool operator==(const BigNat&, const BigNat&) = default;

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.digits_.size() != b.digits_.size()) return a.digits_.size() <=> b.digits_.size();
    for (std::size_t i = a.digits_.size(); i-- > 0;)
      if (a.digits_[i] != b.digits_[i]) return a.digits_[i] <=> b.digits_[i];
    return std::strong_ordering::equal;
  }

  static constexpr std::uint32_t kMaxFactor = 1'000'000;

 private:
  void trim() {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
  }

  std::vector<std::uint8_t> digits_;
};

inline BigNat bignat_add(const BigNat& a, const BigNat& b) { return a + b; }

inline BigNat bignat_mul_small(BigNat a, std::uint32_t s) { return a.mul_small(s); }

}  // namespace fdp

#endif  // FDP_BIGNAT_HPP
