#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fpmine {

// Exact fraction on 64-bit integers, normalized (den > 0, gcd(num, den) = 1).
// Values stay tiny here: thresholds parsed from short decimal strings and
// support counts, so cross-multiplied comparisons are nowhere near overflow.
class Ratio {
 public:
  constexpr Ratio() = default;

  constexpr Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Ratio: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  // Parses a plain decimal such as "1", "0.55", ".5" or "-1.0" exactly.
  static Ratio parse_decimal(std::string_view text);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend constexpr bool operator<(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend constexpr bool operator>(const Ratio& a, const Ratio& b) noexcept { return b < a; }
  friend constexpr bool operator<=(const Ratio& a, const Ratio& b) noexcept { return !(b < a); }
  friend constexpr bool operator>=(const Ratio& a, const Ratio& b) noexcept { return !(a < b); }
  friend constexpr bool operator!=(const Ratio& a, const Ratio& b) noexcept { return !(a == b); }

  friend constexpr Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Ratio operator-(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Ratio operator*(const Ratio& a, std::int64_t k) {
    return Ratio(a.num_ * k, a.den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Shortest exact decimal rendering: "0.05", "0.73", "1". Throws if the
// fraction does not terminate within 18 digits (cannot happen for values
// built from parse_decimal).
std::string to_decimal_string(const Ratio& value);

// Java-style double echo used in scheme strings: integers gain ".0".
std::string to_scheme_decimal(const Ratio& value);

}  // namespace fpmine
