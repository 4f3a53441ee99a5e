#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace garside {

/// Exact reduced fraction num/den with den >= 1. Zero is 0/1.
///
/// Arithmetic is carried out in 128-bit intermediates and throws
/// std::overflow_error if a reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT: integers convert implicitly
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  /// x - floor(x), always in [0, 1).
  Rational frac() const;
  Rational abs() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace garside
