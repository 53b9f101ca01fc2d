#include "hfp/rational.hpp"

#include <charconv>
#include <ostream>

namespace hfp {
namespace {

checked::Wide gcd128(checked::Wide a, checked::Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    checked::Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(checked::Wide num, checked::Wide den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  checked::Wide g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = checked::narrow(num);
  r.den_ = checked::narrow(den);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  checked::Wide n = static_cast<checked::Wide>(num_) * o.den_ +
               static_cast<checked::Wide>(o.num_) * den_;
  checked::Wide d = static_cast<checked::Wide>(den_) * o.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-cancel first so products stay small.
  checked::Wide g1 = gcd128(num_, o.den_);
  checked::Wide g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  checked::Wide n = (num_ / g1) * static_cast<checked::Wide>(o.num_ / g2);
  checked::Wide d = (den_ / g2) * static_cast<checked::Wide>(o.den_ / g1);
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorCode::DivisionByZero, "rational division");
  Rational inv;
  inv = from_wide(o.den_, o.num_);
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  checked::Wide l = static_cast<checked::Wide>(a.num_) * b.den_;
  checked::Wide r = static_cast<checked::Wide>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' ||
                          v.back() == '\r' || v.back() == '\n'))
      v.remove_suffix(1);
    return v;
  };
  auto parse_int = [&](std::string_view v) {
    v = trim(v);
    if (!v.empty() && v.front() == '+') v.remove_prefix(1);
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec == std::errc::result_out_of_range)
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(v) + "'");
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(v) + "'");
    return out;
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace hfp
