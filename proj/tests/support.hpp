#pragma once

// Shared generators and independent oracles for the unit suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/multipoly.hpp"

namespace cubicforge::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'c0deULL);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random polynomial with total degree ≤ max_degree and coefficients in
/// [-range, range]; each monomial is present with probability 1/2.
inline MultiPoly random_poly(const std::vector<std::string>& vars, unsigned max_degree, long range) {
  MultiPoly p(vars);
  std::vector<unsigned> e(vars.size(), 0);
  // Walk all exponent vectors of total degree ≤ max_degree.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == vars.size()) {
      if (uniform(0, 1) == 1) p.add_term(MultiPoly::make_key(e), Integer(uniform(-range, range)));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_degree);
  return p;
}

/// Leibniz-formula determinant; exponential, for small oracle checks only.
template <typename T>
T leibniz_determinant(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T prod = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) prod = prod * m[i][perm[i]];
    if (inversions % 2 == 0) total = total + prod;
    else total = total - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace cubicforge::testing
