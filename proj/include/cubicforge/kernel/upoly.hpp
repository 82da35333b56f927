#pragma once

// Dense univariate polynomials as ascending coefficient vectors. The zero
// polynomial is the empty vector; trimmed vectors never end in zero.

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"

namespace cubicforge::upoly {

using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

template <typename T>
void trim(std::vector<T>& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

/// Degree of a trimmed polynomial; -1 for zero.
template <typename T>
int degree(const std::vector<T>& p) {
  std::size_t n = p.size();
  while (n > 0 && sgn(p[n - 1]) == 0) --n;
  return static_cast<int>(n) - 1;
}

template <typename T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

template <typename T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline QPoly to_q(const ZPoly& p) { return QPoly(p.begin(), p.end()); }

/// Euclidean division over Q: a = q·b + r with deg r < deg b.
inline std::pair<QPoly, QPoly> divmod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) fail(Errc::InvalidArgument, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational f = a[k + b.size() - 1] / lead;
    q[k] = f;
    if (sgn(f) != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
    }
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

/// Monic gcd over Q.
inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// Least common multiple over Q (monic).
inline QPoly lcm(const QPoly& a, const QPoly& b) {
  auto g = gcd(a, b);
  auto prod = mul(a, b);
  auto l = divmod(prod, g).first;
  if (!l.empty()) {
    const Rational lead = l.back();
    for (auto& c : l) c /= lead;
  }
  return l;
}

/// Scales a rational polynomial to coprime integer coefficients with a
/// positive constant term (or positive first nonzero coefficient).
inline ZPoly primitive_integer(const QPoly& p) {
  auto v = primitive_integer_vector(std::span<const Rational>(p));
  trim(v);
  return v;
}

}  // namespace cubicforge::upoly
