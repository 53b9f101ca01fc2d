#include "hfp/lens.hpp"

#include <numeric>
#include <string>

#include "hfp/checked.hpp"
#include "hfp/error.hpp"

namespace hfp {

using checked::add;
using checked::mul;
using checked::sub;

LensSpace::LensSpace(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 0)
    throw Error(ErrorCode::InvalidLensParameters,
                "L(" + std::to_string(p) + "," + std::to_string(q) + ") needs p >= 1, q >= 0");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::InvalidLensParameters,
                "L(" + std::to_string(p) + "," + std::to_string(q) + ") needs gcd(p,q) = 1");
  p_ = p;
  q_ = q % p;
}

Rational d_neg_lens(const LensSpace& lens, std::int64_t i) {
  if (i < 0 || i >= lens.p())
    throw Error(ErrorCode::InvalidLensParameters,
                "Spin^c label " + std::to_string(i) + " outside [0," +
                    std::to_string(lens.p()) + ")");
  // Unrolled recursion; q strictly decreases so the loop terminates.
  Rational acc(0);
  Rational sign(1);
  std::int64_t p = lens.p(), q = lens.q();
  while (p > 1) {
    const std::int64_t pq = mul(p, q);
    const std::int64_t s = sub(add(mul(2, i), 1), add(p, q));
    acc += sign * Rational(sub(pq, mul(s, s)), mul(4, pq));
    sign = -sign;
    const std::int64_t r = p % q;
    i %= q;
    p = q;
    q = r;
  }
  return acc;
}

Rational d_lens(const LensSpace& lens, std::int64_t i) { return -d_neg_lens(lens, i); }

Rational d_lens_oriented(const LensSpace& lens, std::int64_t i, Orientation o) {
  return o == Orientation::Positive ? d_lens(lens, i) : d_neg_lens(lens, i);
}

std::vector<Rational> d_lens_table(const LensSpace& lens, Orientation o) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(lens.p()));
  for (std::int64_t i = 0; i < lens.p(); ++i) out.push_back(d_lens_oriented(lens, i, o));
  return out;
}

Rational d_lens_closed_n1(std::int64_t m, std::int64_t i) {
  if (m < 2 || i < 0 || i >= m - 1)
    throw Error(ErrorCode::IndexOutOfRange, "closed form n=1 needs m >= 2, 0 <= i < m-1");
  const std::int64_t s = sub(sub(m, mul(2, i)), 1);
  return -Rational(mul(s, s), mul(4, m - 1)) + Rational(1, 4);
}

Rational d_lens_closed_n2(std::int64_t m, std::int64_t i) {
  if (m < 1 || i < 0 || i >= sub(mul(2, m), 1))
    throw Error(ErrorCode::IndexOutOfRange, "closed form n=2 needs m >= 1, 0 <= i < 2m-1");
  const std::int64_t s = sub(m, i);
  Rational v = -Rational(mul(s, s), mul(2, sub(mul(2, m), 1)));
  if (i % 2 == 0) v += Rational(1, 2);
  return v;
}

Rational d_lens_closed_general(std::int64_t m, std::int64_t n, std::int64_t i) {
  if (m < 1 || n <= 2 || i < 0 || i >= n - 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "general closed form needs m >= 1, n > 2, 0 <= i < n-1");
  // -(n m^2 + m (n-2i)^2 - 2m (n-2i)) / (4(mn-1)) + 1/2
  const std::int64_t k = sub(n, mul(2, i));
  const std::int64_t num =
      sub(add(mul(n, mul(m, m)), mul(m, mul(k, k))), mul(mul(2, m), k));
  return -Rational(num, mul(4, sub(mul(m, n), 1))) + Rational(1, 2);
}

}  // namespace hfp
