#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hfp/checked.hpp"

namespace hfp {

/// Exact fraction with a positive denominator, always in lowest terms.
///
/// Arithmetic is carried out in 128-bit intermediates and narrowed back to
/// 64 bits; a result that does not fit throws Error{IntegerOverflow}.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  /// Inverse of str(); also accepts surrounding whitespace and a leading '+'.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(checked::Wide num, checked::Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hfp
