#pragma once

// Word-size prime-field arithmetic with Chinese remaindering back to the
// integers. Used where a result has an a priori coefficient bound, so that
// enough primes make the reconstruction exact.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/multipoly.hpp"

namespace cubicforge::modular {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e != 0; e >>= 1, a = mul(a, a, p)) {
    if (e & 1) r = mul(r, a, p);
  }
  return r;
}

/// a must be nonzero mod the prime p.
inline u64 inverse(u64 a, u64 p) { return pow(a, p - 2, p); }

inline u64 reduce(const Integer& x, u64 p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

inline u64 reduce(long x, u64 p) {
  const long m = x % static_cast<long>(p);
  return static_cast<u64>(m < 0 ? m + static_cast<long>(p) : m);
}

/// The i-th prime above 2^61 (i = 0, 1, ...), memoized.
inline u64 prime(std::size_t i) {
  static std::vector<u64> cache;
  while (cache.size() <= i) {
    Integer start = cache.empty() ? Integer(1) << 61 : Integer(static_cast<unsigned long>(cache.back()));
    Integer next;
    mpz_nextprime(next.get_mpz_t(), start.get_mpz_t());
    cache.push_back(next.get_ui());
  }
  return cache[i];
}

/// Enough primes that their product exceeds 2·bound.
inline std::vector<u64> primes_for_bound(const Integer& bound) {
  std::vector<u64> out;
  Integer product = 1;
  while (product <= 2 * bound) {
    out.push_back(prime(out.size()));
    product *= static_cast<unsigned long>(out.back());
  }
  return out;
}

/// Sum of absolute coefficient values; bounds |coefficients| of products.
inline Integer norm1(const MultiPoly& f) {
  Integer s = 0;
  for (const auto& [k, c] : f.terms()) s += abs(c);
  return s;
}

/// A polynomial reduced mod p, for repeated evaluation.
class ModPoly {
 public:
  ModPoly(const MultiPoly& f, u64 p) : p_(p), nvars_(f.variables().size()), max_exp_(nvars_, 0) {
    for (const auto& [k, c] : f.terms()) {
      const u64 r = reduce(c, p);
      if (r == 0) continue;
      terms_.emplace_back(std::vector<unsigned>(k.begin() + 1, k.end()), r);
      for (std::size_t i = 0; i < nvars_; ++i) max_exp_[i] = std::max(max_exp_[i], k[i + 1]);
    }
  }

  u64 operator()(std::span<const u64> point) const {
    powers_.resize(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto& pw = powers_[i];
      pw.assign(max_exp_[i] + 1, 1);
      for (unsigned e = 1; e <= max_exp_[i]; ++e) pw[e] = mul(pw[e - 1], point[i], p_);
    }
    u64 sum = 0;
    for (const auto& [exps, c] : terms_) {
      u64 t = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (exps[i] != 0) t = mul(t, powers_[i][exps[i]], p_);
      }
      sum = add(sum, t, p_);
    }
    return sum;
  }

 private:
  u64 p_;
  std::size_t nvars_;
  std::vector<unsigned> max_exp_;
  std::vector<std::pair<std::vector<unsigned>, u64>> terms_;
  mutable std::vector<std::vector<u64>> powers_;
};

/// Determinant over GF(p) by Gaussian elimination; `a` is consumed.
inline u64 determinant(std::vector<std::vector<u64>>& a, u64 p) {
  const std::size_t n = a.size();
  u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = sub(0, det, p);
    }
    det = mul(det, a[k][k], p);
    const u64 inv = inverse(a[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const u64 f = mul(a[i][k], inv, p);
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = sub(a[i][j], mul(f, a[k][j], p), p);
    }
  }
  return det;
}

/// Interpolation over GF(p) at fixed nodes (distinct mod p); the inverses of
/// node differences are computed once.
class Interpolator {
 public:
  Interpolator(std::vector<u64> nodes, u64 p) : nodes_(std::move(nodes)), p_(p), inv_(nodes_.size()) {
    for (std::size_t level = 1; level < nodes_.size(); ++level) {
      inv_[level].resize(nodes_.size());
      for (std::size_t i = level; i < nodes_.size(); ++i) {
        inv_[level][i] = inverse(sub(nodes_[i], nodes_[i - level], p_), p_);
      }
    }
  }

  /// Monomial coefficients of the polynomial of degree < values.size() taking
  /// values[i] at node i: Newton divided differences, then Horner expansion
  /// of the Newton form.
  std::vector<u64> operator()(std::vector<u64> values) const {
    const std::size_t n = values.size();
    if (n > nodes_.size()) fail(Errc::InvalidArgument, "more values than interpolation nodes");
    for (std::size_t level = 1; level < n; ++level) {
      for (std::size_t i = n - 1; i >= level; --i) {
        values[i] = mul(sub(values[i], values[i - 1], p_), inv_[level][i], p_);
      }
    }
    std::vector<u64> coeffs(n, 0);
    if (n == 0) return coeffs;
    coeffs[0] = values[n - 1];
    std::size_t len = 1;
    for (std::size_t i = n - 1; i-- > 0;) {
      for (std::size_t k = len; k > 0; --k) coeffs[k] = sub(coeffs[k - 1], mul(nodes_[i], coeffs[k], p_), p_);
      coeffs[0] = add(sub(0, mul(nodes_[i], coeffs[0], p_), p_), values[i], p_);
      ++len;
    }
    return coeffs;
  }

 private:
  std::vector<u64> nodes_;
  u64 p_;
  std::vector<std::vector<u64>> inv_;
};

/// Incremental Chinese remaindering into the symmetric range.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t size) : values_(size, Integer(0)) {}

  void add_residues(std::span<const u64> residues, u64 p) {
    if (residues.size() != values_.size()) fail(Errc::InvalidArgument, "residue vector has wrong size");
    const u64 minv = inverse(reduce(modulus_, p), p);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const u64 delta = mul(sub(residues[i], reduce(values_[i], p), p), minv, p);
      if (delta != 0) values_[i] += modulus_ * static_cast<unsigned long>(delta);
    }
    modulus_ *= static_cast<unsigned long>(p);
  }

  /// Values in (-M/2, M/2].
  std::vector<Integer> symmetric() const {
    std::vector<Integer> out = values_;
    const Integer half = modulus_ / 2;
    for (auto& x : out) {
      if (x > half) x -= modulus_;
    }
    return out;
  }

 private:
  std::vector<Integer> values_;
  Integer modulus_ = 1;
};

}  // namespace cubicforge::modular
