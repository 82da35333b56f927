#pragma once

// Binary quadratic forms qa·m² + qb·mn + qc·n²: brute-force representation
// search, Pell-like orbit discovery by guessing, and the explicit
// constructions that produce forms constant on pairs of C-finite sequences.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubicforge/cfinite.hpp"
#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/multipoly.hpp"

namespace cubicforge {

struct QuadForm {
  Integer qa;
  Integer qb;
  Integer qc;

  QuadForm(Integer a, Integer b, Integer c) : qa(std::move(a)), qb(std::move(b)), qc(std::move(c)) {
    if (sgn(qa) == 0 && sgn(qb) == 0 && sgn(qc) == 0) fail(Errc::InvalidArgument, "the zero quadratic form");
  }

  /// Reads a homogeneous quadratic in exactly the given two variables.
  static QuadForm from_poly(const MultiPoly& p, const std::string& m = "m", const std::string& n = "n") {
    for (const auto& v : p.used_variables()) {
      if (v != m && v != n) fail(Errc::InvalidArgument, "quadratic form mentions '" + v + "'");
    }
    const MultiPoly q = p.with_variables({m, n});
    if (q.is_zero() || !q.is_homogeneous(2)) fail(Errc::InvalidArgument, "not a nonzero binary quadratic form");
    const unsigned e20[] = {2, 0}, e11[] = {1, 1}, e02[] = {0, 2};
    return QuadForm(q.coefficient(e20), q.coefficient(e11), q.coefficient(e02));
  }

  Integer discriminant() const { return qb * qb - 4 * qa * qc; }

  Integer operator()(const Integer& m, const Integer& n) const { return qa * m * m + qb * m * n + qc * n * n; }

  MultiPoly to_poly(const std::string& m = "m", const std::string& n = "n") const {
    std::vector<std::string> vars{m, n};
    MultiPoly p(vars);
    p.add_term(MultiPoly::make_key(std::vector<unsigned>{2, 0}), qa);
    p.add_term(MultiPoly::make_key(std::vector<unsigned>{1, 1}), qb);
    p.add_term(MultiPoly::make_key(std::vector<unsigned>{0, 2}), qc);
    return p;
  }

  std::string to_string() const { return to_poly().to_string(); }

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

struct Solution {
  Integer m;
  Integer n;
  Integer value;
  friend bool operator==(const Solution&, const Solution&) = default;
};

namespace detail {

inline bool exact_sqrt(const Integer& x, Integer& root) {
  if (sgn(x) < 0 || mpz_perfect_square_p(x.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
  return true;
}

inline bool exact_sqrt(__int128 x, __int128& root) {
  if (x < 0) return false;
  // Quadratic residues mod 64 reject most non-squares cheaply.
  constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ULL;
  if (((kSquaresMod64 >> (static_cast<unsigned>(x) & 63u)) & 1u) == 0) return false;
  auto c = static_cast<__int128>(std::sqrt(static_cast<long double>(x)));
  while (c > 0 && c * c > x) --c;
  while ((c + 1) * (c + 1) <= x) ++c;
  root = c;
  return c * c == x;
}

inline Integer to_integer(const Integer& x) { return x; }

inline Integer to_integer(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

template <typename Int>
void enumerate_impl(const Int& qa, const Int& qb, const Int& qc, const std::vector<Int>& targets, long bound,
                    std::vector<std::tuple<Int, Int, Int>>& out) {
  const Int disc = qb * qb - 4 * qa * qc;
  const Int lim = bound;
  auto in_half_plane = [](const Int& m, const Int& n) { return m > 0 || (m == 0 && n > 0); };
  auto push = [&](const Int& m, const Int& n, const Int& e) {
    if (n < -lim || n > lim || !in_half_plane(m, n)) return;
    out.emplace_back(m, n, e);
  };
  Int root;
  for (long mi = 0; mi <= bound; ++mi) {
    const Int m = mi;
    for (const Int& e : targets) {
      if (qc != 0) {
        // qc·n² + qb·m·n + (qa·m² - e) = 0
        const Int d = disc * m * m + 4 * qc * e;
        if (!exact_sqrt(d, root)) continue;
        const Int den = 2 * qc;
        for (int s = 0; s < (root == 0 ? 1 : 2); ++s) {
          const Int num = -qb * m + (s == 0 ? root : Int(-root));
          if (num % den == 0) push(m, Int(num / den), e);
        }
      } else if (qb != 0) {
        if (m == 0) {
          if (e == 0) {
            for (long ni = 1; ni <= bound; ++ni) push(m, Int(ni), e);
          }
          continue;
        }
        const Int num = e - qa * m * m;
        const Int den = qb * m;
        if (num % den == 0) push(m, Int(num / den), e);
      } else if (qa * m * m == e) {
        for (long ni = -bound; ni <= bound; ++ni) push(m, Int(ni), e);
      }
    }
  }
}

inline bool small(const Integer& x, unsigned bits) { return mpz_sizeinbase(x.get_mpz_t(), 2) < bits; }

}  // namespace detail

/// All (m, n) with 0 ≤ m ≤ bound, |n| ≤ bound, (m, n) in the half-plane
/// m > 0 or (m = 0, n > 0), and Q(m, n) among `targets`. Sorted by (m, n).
inline std::vector<Solution> enumerate_solutions(const QuadForm& q, const std::vector<Integer>& targets, long bound) {
  if (bound < 1) fail(Errc::InvalidArgument, "bound must be positive");
  std::vector<Integer> ts = targets;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Solution> out;
  const bool fast = detail::small(q.qa, 31) && detail::small(q.qb, 31) && detail::small(q.qc, 31) && bound < (1L << 20) &&
                    std::all_of(ts.begin(), ts.end(), [](const Integer& t) { return detail::small(t, 31); });
  if (fast) {
    std::vector<__int128> t128;
    for (const auto& t : ts) t128.push_back(t.get_si());
    std::vector<std::tuple<__int128, __int128, __int128>> raw;
    detail::enumerate_impl<__int128>(q.qa.get_si(), q.qb.get_si(), q.qc.get_si(), t128, bound, raw);
    for (const auto& [m, n, e] : raw) out.push_back({detail::to_integer(m), detail::to_integer(n), detail::to_integer(e)});
  } else {
    std::vector<std::tuple<Integer, Integer, Integer>> raw;
    detail::enumerate_impl<Integer>(q.qa, q.qb, q.qc, ts, bound, raw);
    for (auto& [m, n, e] : raw) out.push_back({m, n, e});
  }
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    return std::tie(a.m, a.n) < std::tie(b.m, b.n);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Which orbit patterns sol_quad may return.
enum class TargetKind { Any, Constant, Alternating };

struct PellOrbit {
  RationalGF gfM;
  RationalGF gfN;
  Integer target;  // Q(m_i, n_i) = target, or target·(-1)^i when alternating
  Pattern kind = Pattern::Constant;
  Certificate certificate;
  friend bool operator==(const PellOrbit&, const PellOrbit&) = default;
};

struct SolQuadOptions {
  std::size_t guess_order = 4;
  long bound = 2000;
  long target_cap = 30;
  TargetKind kind = TargetKind::Any;
  std::size_t max_points = 32;
  std::size_t max_convergents = 400;
  std::size_t max_digits = 400;
};

namespace detail {

/// Convergents n/m of (P + √D)/Q for a nonsquare D > 0 with Q | D - P².
inline std::vector<std::pair<Integer, Integer>> convergent_points(Integer p, Integer q, const Integer& d,
                                                                  const SolQuadOptions& opts) {
  std::vector<std::pair<Integer, Integer>> out;
  const Integer s = isqrt(d);
  Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (std::size_t i = 0; i < opts.max_convergents; ++i) {
    Integer a;
    if (sgn(q) > 0) a = floor_div(p + s, q);
    else a = -floor_div(p + s, Integer(-q)) - 1;
    Integer h = a * h1 + h2;
    Integer k = a * k1 + k2;
    if (mpz_sizeinbase(k.get_mpz_t(), 10) > opts.max_digits) break;
    out.emplace_back(k, h);  // (m, n)
    h2 = std::move(h1);
    h1 = std::move(h);
    k2 = std::move(k1);
    k1 = std::move(k);
    p = a * q - p;
    q = (d - p * p) / q;
  }
  return out;
}

inline std::optional<PellOrbit> try_orbit(const QuadForm& form, const std::vector<std::pair<Integer, Integer>>& pts,
                                          const Integer& e_abs, const SolQuadOptions& opts) {
  if (pts.size() < 4) return std::nullopt;
  std::vector<Rational> ms, ns;
  for (const auto& [m, n] : pts) {
    ms.emplace_back(m);
    ns.emplace_back(n);
  }
  if (!guess_joint_recurrence({ms, ns}, opts.guess_order)) return std::nullopt;
  std::vector<Integer> mi, ni;
  for (const auto& [m, n] : pts) {
    mi.push_back(m);
    ni.push_back(n);
  }
  PellOrbit orbit;
  try {
    orbit.gfM = seq_from_terms(mi, opts.guess_order);
    orbit.gfN = seq_from_terms(ni, opts.guess_order);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (orbit.gfM.den() != orbit.gfN.den() || orbit.gfM.is_zero()) return std::nullopt;

  const std::size_t probe = 2 * static_cast<std::size_t>(orbit.gfM.order()) + 8;
  const auto mv = integer_terms(orbit.gfM, probe);
  const auto nv = integer_terms(orbit.gfN, probe);
  std::vector<Integer> values;
  for (std::size_t i = 0; i < probe; ++i) values.push_back(form(mv[i], nv[i]));
  const Integer v0 = values.front();
  if (abs(v0) != e_abs) return std::nullopt;
  bool constant = true, alternating = true;
  for (std::size_t i = 0; i < probe; ++i) {
    if (values[i] != v0) constant = false;
    if (values[i] != (i % 2 == 0 ? v0 : Integer(-v0))) alternating = false;
  }
  if (constant) orbit.kind = Pattern::Constant;
  else if (alternating) orbit.kind = Pattern::Alternating;
  else return std::nullopt;
  if (opts.kind == TargetKind::Constant && orbit.kind != Pattern::Constant) return std::nullopt;
  if (opts.kind == TargetKind::Alternating && orbit.kind != Pattern::Alternating) return std::nullopt;
  orbit.target = v0;

  const std::vector<std::string> vars{"M", "N", "sigma"};
  MultiPoly e = form.to_poly("M", "N").with_variables(vars);
  e -= MultiPoly::constant(vars, v0) *
       (orbit.kind == Pattern::Alternating ? MultiPoly::variable(vars, "sigma") : MultiPoly::constant(vars, 1));
  orbit.certificate = certify_zero(e, Bindings{{"M", orbit.gfM}, {"N", orbit.gfN}});
  if (!orbit.certificate.certified()) return std::nullopt;
  return orbit;
}

inline void sort_unique(std::vector<std::pair<Integer, Integer>>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace detail

/// Finds a certified Pell-like orbit of Q.
///
/// Targets are scanned by increasing |e| up to the cap. For each |e| the
/// solutions are split by the root of Q(1, θ) = 0 they approach (larger root
/// first) and, in that order, the full sorted list, its even- and
/// odd-indexed subsequences, and its +e and -e parts are offered to the
/// guesser. Solutions come from brute force within `bound` plus the
/// continued-fraction convergents of both roots, which reach orbit members far
/// beyond the brute-force window; the convergent-only list is tried last.
/// The first candidate whose orbit certifies is returned.
inline PellOrbit sol_quad(const QuadForm& form, const SolQuadOptions& opts = {}) {
  if (opts.guess_order < 2) fail(Errc::InvalidArgument, "guess order must be at least 2");
  if (opts.target_cap < 1) fail(Errc::InvalidArgument, "target cap must be positive");
  const Integer delta = form.discriminant();
  if (sgn(delta) < 0) fail(Errc::DefiniteForm, "form " + form.to_string() + " is definite");

  std::vector<Integer> targets;
  for (long e = 1; e <= opts.target_cap; ++e) {
    targets.emplace_back(e);
    targets.emplace_back(-e);
  }
  const auto brute = enumerate_solutions(form, targets, opts.bound);

  // Branch of a point: sign of 2qc·n + qb·m, i.e. which root n/m approaches.
  const int first_branch = sgn(form.qc) >= 0 ? 1 : -1;
  auto branch_of = [&](const Integer& m, const Integer& n) {
    const int u = sgn(Integer(2 * form.qc * n + form.qb * m));
    return u == 0 ? first_branch : u;
  };

  std::vector<std::pair<Integer, Integer>> conv[2];  // indexed by branch == first_branch ? 0 : 1
  if (sgn(delta) > 0 && !is_square(delta) && sgn(form.qc) != 0) {
    for (int b = 0; b < 2; ++b) {
      const int s = b == 0 ? first_branch : -first_branch;
      for (auto& pt : detail::convergent_points(Integer(-s * form.qb), Integer(2 * s * form.qc), delta, opts)) {
        if (sgn(pt.first) > 0) conv[b].push_back(std::move(pt));
      }
    }
  }

  for (long e = 1; e <= opts.target_cap; ++e) {
    const Integer e_abs(e);
    for (int b = 0; b < 2; ++b) {
      const int s = b == 0 ? first_branch : -first_branch;
      std::vector<std::pair<Integer, Integer>> merged, conv_only;
      for (const auto& sol : brute) {
        if (sgn(sol.m) > 0 && abs(sol.value) == e_abs && branch_of(sol.m, sol.n) == s) merged.emplace_back(sol.m, sol.n);
      }
      for (const auto& [m, n] : conv[b]) {
        if (abs(form(m, n)) == e_abs && branch_of(m, n) == s) {
          merged.emplace_back(m, n);
          conv_only.emplace_back(m, n);
        }
      }
      detail::sort_unique(merged);
      detail::sort_unique(conv_only);
      for (auto* list : {&merged, &conv_only}) {
        if (list->size() > opts.max_points) list->resize(opts.max_points);
        if (list == &conv_only && conv_only == merged) continue;
        std::vector<std::vector<std::pair<Integer, Integer>>> candidates(5);
        for (std::size_t i = 0; i < list->size(); ++i) {
          const auto& pt = (*list)[i];
          candidates[0].push_back(pt);
          candidates[i % 2 == 0 ? 1 : 2].push_back(pt);
          candidates[form(pt.first, pt.second) == e_abs ? 3 : 4].push_back(pt);
        }
        for (const auto& cand : candidates) {
          if (auto orbit = detail::try_orbit(form, cand, e_abs, opts)) return *orbit;
        }
      }
    }
  }
  fail(Errc::NoOrbitFound, "no orbit of " + form.to_string() + " with |e| <= " + std::to_string(opts.target_cap) +
                               " at guess order " + std::to_string(opts.guess_order));
}

/// The form X²·(d0·d1·k + d0² + d1²) - XY·(c0·d1·k + c1·d0·k + 2·c0·d0 + 2·c1·d1)
/// + Y²·(c0·c1·k + c0² + c1²), constant equal to C = (c0·d1 - c1·d0)² on the
/// expansions of (c0 + c1·t)/(1 - k·t + t²) and (d0 + d1·t)/(1 - k·t + t²).
struct GeneralQuadForm {
  QuadForm form;
  Integer C;
};

inline GeneralQuadForm general_quadform(const Integer& c0, const Integer& c1, const Integer& d0, const Integer& d1,
                                        const Integer& k) {
  const Integer det = c0 * d1 - c1 * d0;
  if (sgn(det) == 0) fail(Errc::DegenerateInitialVectors, "c0*d1 - c1*d0 = 0");
  QuadForm f(d0 * d1 * k + d0 * d0 + d1 * d1, -(c0 * d1 * k + c1 * d0 * k + 2 * c0 * d0 + 2 * c1 * d1),
             c0 * c1 * k + c0 * c0 + c1 * c1);
  return {std::move(f), det * det};
}

/// A(n)² - N·B(n)² = 1 with A = (1 - k·t)/(1 - 2k·t + t²),
/// B = b·t/(1 - 2k·t + t²) and N = (k² - 1)/b².
struct PellSpecial {
  RationalGF gfA;
  RationalGF gfB;
  Rational N;
  bool integral() const { return is_integral(N); }
};

inline PellSpecial pell_special(const Integer& k, const Integer& b) {
  if (sgn(b) == 0) fail(Errc::ZeroB, "b must be nonzero");
  if (abs(k) < 2) fail(Errc::InvalidArgument, "|k| must be at least 2");
  const ZPoly den{Integer(1), Integer(-2 * k), Integer(1)};
  PellSpecial out;
  out.gfA = RationalGF::make(ZPoly{Integer(1), Integer(-k)}, den);
  out.gfB = RationalGF::make(ZPoly{Integer(0), b}, den);
  out.N = make_rational(k * k - 1, b * b);
  return out;
}

}  // namespace cubicforge
