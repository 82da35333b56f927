#pragma once

/**
 * C-finite sequences represented by rational generating functions.
 *
 * The central fact used throughout: if every sequence a_k satisfies a linear
 * recurrence whose characteristic polynomial divides a common degree-r
 * polynomial, then any polynomial expression of total degree D in the a_k
 * satisfies a recurrence of order at most C(r+D, D). Such an expression is
 * identically zero once that many consecutive terms vanish, which turns
 * identity checking into a finite computation (see certify_zero).
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/linalg.hpp"
#include "cubicforge/kernel/multipoly.hpp"
#include "cubicforge/kernel/upoly.hpp"

namespace cubicforge {

using upoly::QPoly;
using upoly::ZPoly;

/// Right-hand side pattern of an identity: a constant, or a constant times
/// (-1)^n.
enum class Pattern { Constant, Alternating };

inline std::string_view to_string(Pattern p) { return p == Pattern::Constant ? "constant" : "alternating"; }

/// num(t)/den(t) in lowest terms. The denominator has a positive constant
/// term, equal to 1 unless the integer normalization forces a larger one, and
/// the coefficients of num and den are jointly coprime.
class RationalGF {
 public:
  RationalGF() : den_{Integer(1)} {}

  /// Normalizing constructor. Throws PoleAtOrigin when the reduced
  /// denominator vanishes at t = 0.
  static RationalGF make(const QPoly& num, const QPoly& den) {
    QPoly n = num;
    QPoly d = den;
    upoly::trim(n);
    upoly::trim(d);
    if (d.empty()) fail(Errc::PoleAtOrigin, "zero denominator");
    if (n.empty()) return RationalGF();
    const QPoly g = upoly::gcd(n, d);
    if (g.size() > 1) {
      n = upoly::divmod(n, g).first;
      d = upoly::divmod(d, g).first;
    }
    if (sgn(d.front()) == 0) fail(Errc::PoleAtOrigin, "denominator vanishes at t = 0");
    const Rational d0 = d.front();
    for (auto& c : n) c /= d0;
    for (auto& c : d) c /= d0;
    Integer l = 1;
    for (const auto& c : n) l = lcm(l, c.get_den());
    for (const auto& c : d) l = lcm(l, c.get_den());
    RationalGF out;
    out.num_.clear();
    out.den_.clear();
    for (const auto& c : n) out.num_.push_back(Integer(c.get_num() * (l / c.get_den())));
    for (const auto& c : d) out.den_.push_back(Integer(c.get_num() * (l / c.get_den())));
    Integer content = 0;
    for (const auto& c : out.num_) content = gcd(content, c);
    for (const auto& c : out.den_) content = gcd(content, c);
    for (auto& c : out.num_) c /= content;
    for (auto& c : out.den_) c /= content;
    return out;
  }

  static RationalGF make(const ZPoly& num, const ZPoly& den) { return make(upoly::to_q(num), upoly::to_q(den)); }

  /// Ascending coefficients; empty for the zero function.
  const ZPoly& num() const noexcept { return num_; }
  /// Ascending coefficients; never empty, constant term positive.
  const ZPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.empty(); }
  int order() const noexcept { return static_cast<int>(den_.size()) - 1; }

  /// Number of leading terms not governed by the denominator's recurrence.
  std::size_t offset() const noexcept {
    const int d = static_cast<int>(num_.size()) - static_cast<int>(den_.size()) + 1;
    return d > 0 ? static_cast<std::size_t>(d) : 0;
  }

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

  /// e.g. "(1 + 53*t + 9*t^2)/(1 - 82*t - 82*t^2 + t^3)".
  std::string to_string(std::string_view var = "t") const {
    return "(" + poly_text(num_, var) + ")/(" + poly_text(den_, var) + ")";
  }

  static std::string poly_text(const ZPoly& p, std::string_view var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (sgn(p[i]) == 0) continue;
      const bool neg = sgn(p[i]) < 0;
      const Integer mag = abs(p[i]);
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
  }

 private:
  ZPoly num_;
  ZPoly den_;
};

/// Coefficients of t^0..t^(N-1). Exact rationals; integral whenever the
/// expansion is.
inline std::vector<Rational> taylor_coefficients(const RationalGF& g, std::size_t count) {
  const auto& num = g.num();
  const auto& den = g.den();
  if (den.empty() || sgn(den.front()) == 0) fail(Errc::PoleAtOrigin, "denominator vanishes at t = 0");
  std::vector<Rational> out;
  out.reserve(count);
  const Rational d0 = den.front();
  for (std::size_t n = 0; n < count; ++n) {
    Rational s = n < num.size() ? Rational(num[n]) : Rational(0);
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) s -= den[i] * out[n - i];
    out.push_back(Rational(s / d0));
  }
  return out;
}

/// Integer expansion; NonIntegralGF when some coefficient is not integral.
inline std::vector<Integer> integer_terms(const RationalGF& g, std::size_t count) {
  const auto& num = g.num();
  const auto& den = g.den();
  if (den.empty() || sgn(den.front()) == 0) fail(Errc::PoleAtOrigin, "denominator vanishes at t = 0");
  if (den.front() != 1) {
    std::vector<Integer> out;
    for (const auto& q : taylor_coefficients(g, count)) {
      if (!is_integral(q)) fail(Errc::NonIntegralGF, "expansion has a non-integer coefficient");
      out.push_back(q.get_num());
    }
    return out;
  }
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Integer s = n < num.size() ? num[n] : Integer(0);
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) mpz_submul(s.get_mpz_t(), den[i].get_mpz_t(), out[n - i].get_mpz_t());
    out.push_back(std::move(s));
  }
  return out;
}

/// s(n+r) = coeffs[0]·s(n+r-1) + ... + coeffs[r-1]·s(n).
struct Recurrence {
  std::vector<Rational> coeffs;
  std::size_t order() const noexcept { return coeffs.size(); }
  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

/// Smallest order r ≤ max_order shared by every sequence, fitted to all
/// checkable indices. Order r is attempted only when the sequences provide at
/// least r + 2 equations in total and every sequence is longer than r.
inline std::optional<Recurrence> guess_joint_recurrence(const std::vector<std::vector<Rational>>& seqs,
                                                        std::size_t max_order) {
  for (std::size_t r = 1; r <= max_order; ++r) {
    std::size_t rows = 0;
    bool long_enough = true;
    for (const auto& s : seqs) {
      if (s.size() <= r) long_enough = false;
      else rows += s.size() - r;
    }
    if (!long_enough || rows < r + 2) break;
    RationalMatrix m(rows, r);
    RationalVector rhs(rows);
    std::size_t row = 0;
    for (const auto& s : seqs) {
      for (std::size_t n = 0; n + r < s.size(); ++n, ++row) {
        for (std::size_t i = 0; i < r; ++i) m(row, i) = s[n + r - 1 - i];
        rhs[row] = s[n + r];
      }
    }
    if (auto x = solve_consistent(m, rhs)) return Recurrence{std::move(*x)};
  }
  return std::nullopt;
}

/// Single-sequence guess; order r needs at least 2r + 2 terms.
inline std::optional<Recurrence> guess_recurrence(const std::vector<Rational>& terms, std::size_t max_order) {
  if (terms.empty()) return std::nullopt;
  return guess_joint_recurrence({terms}, max_order);
}

inline std::vector<Rational> to_rationals(const std::vector<Integer>& terms) {
  return std::vector<Rational>(terms.begin(), terms.end());
}

/// Generating function of a sequence that satisfies `rec` from index 0.
inline RationalGF gf_from_recurrence(const std::vector<Rational>& terms, const Recurrence& rec) {
  const std::size_t r = rec.order();
  QPoly den(r + 1);
  den[0] = 1;
  for (std::size_t i = 0; i < r; ++i) den[i + 1] = -rec.coeffs[i];
  QPoly num(r, Rational(0));
  for (std::size_t k = 0; k < r && k < terms.size(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) num[k] += den[i] * terms[k - i];
  }
  return RationalGF::make(num, den);
}

/// Guesses a recurrence and rebuilds the generating function. Throws
/// GuessFailed when no order ≤ max_order fits, NonIntegralGF when the
/// reduced function is not a ratio of integer polynomials with denominator
/// constant term 1.
inline RationalGF seq_from_terms(const std::vector<Integer>& terms, std::size_t max_order) {
  const auto q = to_rationals(terms);
  auto rec = guess_recurrence(q, max_order);
  if (!rec) fail(Errc::GuessFailed, "no recurrence of order <= " + std::to_string(max_order) + " fits " +
                                        std::to_string(terms.size()) + " terms");
  RationalGF g = gf_from_recurrence(q, *rec);
  if (g.den().front() != 1) fail(Errc::NonIntegralGF, "reconstructed generating function is not integral");
  if (integer_terms(g, terms.size()) != terms) {
    fail(Errc::InvariantViolation, "reconstructed generating function does not reproduce its input");
  }
  return g;
}

enum class Verdict { Certified, Refuted };

/// Outcome of a finite check over indices 0..bound-1.
struct Certificate {
  std::size_t bound = 0;
  Verdict verdict = Verdict::Certified;
  std::optional<std::size_t> witness;  // first index with a nonzero value when refuted

  bool certified() const noexcept { return verdict == Verdict::Certified; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Sequence bindings for certify_zero: symbol name to generating function.
using Bindings = std::map<std::string, RationalGF, std::less<>>;

/// Degree of the least common multiple of the denominators.
inline int common_denominator_degree(const std::vector<RationalGF>& gfs) {
  QPoly l{Rational(1)};
  for (const auto& g : gfs) l = upoly::lcm(l, upoly::to_q(g.den()));
  return upoly::degree(l);
}

/// Number of initial indices whose vanishing proves E ≡ 0.
///
/// Writing E = E0 + σ·E1 with σ² = 1, E0 has order ≤ C(r+D0, D0) and σ·E1 has
/// order ≤ C(r+D1, D1); a constant E1 contributes the single root -1 covered
/// by the +2. Sequences with numerator degree ≥ denominator degree obey their
/// recurrence only after `offset` terms, which shifts the window.
inline std::size_t certification_bound(int r, int d0, int d1, std::size_t offset) {
  const unsigned long rr = static_cast<unsigned long>(std::max(r, 0));
  Integer b = binomial(rr + static_cast<unsigned long>(std::max(d0, 0)), static_cast<unsigned long>(std::max(d0, 0)));
  if (d1 > 0) b += binomial(rr + static_cast<unsigned long>(d1), static_cast<unsigned long>(d1));
  b += 2;
  b += static_cast<unsigned long>(offset);
  if (!b.fits_ulong_p()) fail(Errc::InvalidArgument, "certification bound overflows");
  return b.get_ui();
}

/// Certifies E(a_1(n), ..., a_k(n), (-1)^n) = 0 for all n by checking
/// n = 0..B-1. The bound is never below C(r+D, D) + 2 with D the total degree
/// of E. `sign_symbol`, when present in E, denotes (-1)^n.
inline Certificate certify_zero(const MultiPoly& e, const Bindings& seqs, std::string_view sign_symbol = "sigma") {
  const auto& vars = e.variables();
  std::vector<RationalGF> used;
  std::optional<std::size_t> sigma_index;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == sign_symbol) {
      sigma_index = i;
      continue;
    }
    auto it = seqs.find(vars[i]);
    if (it == seqs.end()) {
      if (e.degree_in(vars[i]) > 0) fail(Errc::UnboundSymbol, "symbol '" + vars[i] + "' is not bound to a sequence");
      continue;
    }
    used.push_back(it->second);
  }

  // Split E into σ-even and σ-odd parts and measure their degrees in the
  // sequence symbols.
  int d0 = 0;
  int d1 = -1;
  for (const auto& [k, c] : e.terms()) {
    const unsigned se = sigma_index ? k[*sigma_index + 1] : 0u;
    const int seq_deg = static_cast<int>(k[0] - se);
    if (se % 2 == 0) d0 = std::max(d0, seq_deg);
    else d1 = std::max(d1, seq_deg);
  }
  const int r = common_denominator_degree(used);
  std::size_t offset = 0;
  for (const auto& g : used) offset = std::max(offset, g.offset());
  const int total = std::max(e.total_degree(), 0);
  std::size_t bound = certification_bound(r, d0, d1, offset);
  bound = std::max(bound, certification_bound(r, total, 0, 0));

  std::vector<std::vector<Rational>> values(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (sigma_index && i == *sigma_index) continue;
    auto it = seqs.find(vars[i]);
    if (it != seqs.end()) values[i] = taylor_coefficients(it->second, bound);
  }
  Certificate cert;
  cert.bound = bound;
  std::vector<Rational> point(vars.size(), Rational(0));
  for (std::size_t n = 0; n < bound; ++n) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (sigma_index && i == *sigma_index) point[i] = n % 2 == 0 ? 1 : -1;
      else if (!values[i].empty()) point[i] = values[i][n];
    }
    if (sgn(e.evaluate<Rational>(std::span<const Rational>(point))) != 0) {
      cert.verdict = Verdict::Refuted;
      cert.witness = n;
      return cert;
    }
  }
  return cert;
}

}  // namespace cubicforge
