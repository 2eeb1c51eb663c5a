#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace toughlab {

// Exact fraction with 64-bit components, always in lowest terms with a
// positive denominator. Overflow throws OverflowError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  std::int64_t floor() const;
  std::int64_t ceil() const;

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const = default;

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace toughlab
