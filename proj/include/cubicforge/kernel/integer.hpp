#pragma once

// Thin helpers over GMP's C++ classes. Every value in the library is exact.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubicforge/errors.hpp"

namespace cubicforge {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// floor(sqrt(x)); x must be nonnegative.
inline Integer isqrt(const Integer& x) {
  if (sgn(x) < 0) fail(Errc::InvalidArgument, "isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline bool is_square(const Integer& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& n) {
  if (sgn(d) == 0) return sgn(n) == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) fail(Errc::InvalidArgument, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Nonnegative gcd of a list; zero for an empty or all-zero list.
inline Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

inline Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) l = lcm(l, v.get_den());
  return l;
}

/// Scales a rational vector to coprime integers with its first nonzero entry
/// positive. The zero vector maps to itself.
inline std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  const Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(q.get_num() * (l / q.get_den())));
  const Integer g = gcd_of(out);
  if (g == 0) return out;
  auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return sgn(x) != 0; });
  const Integer scale = sgn(*first) < 0 ? Integer(-g) : g;
  for (auto& x : out) x /= scale;
  return out;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool fits_int64(const Integer& x) {
  return x.fits_slong_p() && sizeof(long) == sizeof(std::int64_t);
}

}  // namespace cubicforge
