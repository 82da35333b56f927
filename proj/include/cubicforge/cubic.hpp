#pragma once

// Solutions of a·X³ + a·Y³ + b·Z³ + b·W³ = 0: numeric search, the bilinear
// combination of two solutions into a third, and morphing a numeric
// solution against the symbolic solution (m, -m, n, -n) into four quadratics.
//
// Given solutions s = (x, y, z, w) and s' = (x', y', z', w'), put
//   c =   a(x·x'² + y·y'²) + b(z·z'² + w·w'²)
//   d = -(a(x²·x' + y²·y') + b(z²·z' + w²·w'))
// Then c·s + d·s' is again a solution: its cube sum expands to
// c³·F(s) + d³·F(s') + 3c²d·B(s, s') + 3cd²·B(s', s) with B bilinear-quadratic,
// and the choice of c and d makes both cross terms cancel.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/multipoly.hpp"

namespace cubicforge {

inline Integer weighted_cube_sum(const Integer& a, const Integer& b, const std::array<Integer, 4>& v) {
  return a * (v[0] * v[0] * v[0] + v[1] * v[1] * v[1]) + b * (v[2] * v[2] * v[2] + v[3] * v[3] * v[3]);
}

/// True when the weighted cubes cancel in pairs: for some pairing of the four
/// coordinates each pair's weighted cubes sum to zero. The pairing (x,y | z,w)
/// is the pattern (m, -m, n, -n); the other two pairings cover its images
/// under the symmetries of the equation when a = ±b.
inline bool is_trivial_pattern(const Integer& a, const Integer& b, const std::array<Integer, 4>& v) {
  const Integer w[4] = {a, a, b, b};
  auto cube = [&](int i) { return Integer(w[i] * v[i] * v[i] * v[i]); };
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : pairings) {
    if (cube(p[0]) + cube(p[1]) == 0 && cube(p[2]) + cube(p[3]) == 0) return true;
  }
  return false;
}

/// A primitive solution (x, y, z, w) of the weighted equation.
class WeightedQuadruple {
 public:
  /// Validates the equation and divides by the (positive) coordinate gcd.
  WeightedQuadruple(Integer a, Integer b, std::array<Integer, 4> v) : a_(std::move(a)), b_(std::move(b)), v_(std::move(v)) {
    if (sgn(a_) == 0 || sgn(b_) == 0) fail(Errc::InvalidArgument, "weights must be nonzero");
    if (weighted_cube_sum(a_, b_, v_) != 0) {
      fail(Errc::InvalidArgument, "(" + coords_text() + ") does not satisfy the weighted cubic equation");
    }
    Integer g = 0;
    for (const auto& x : v_) g = gcd(g, x);
    if (g > 1) {
      for (auto& x : v_) x /= g;
    }
  }

  WeightedQuadruple(long a, long b, long x, long y, long z, long w)
      : WeightedQuadruple(Integer(a), Integer(b), {Integer(x), Integer(y), Integer(z), Integer(w)}) {}

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const std::array<Integer, 4>& coords() const noexcept { return v_; }
  const Integer& x() const noexcept { return v_[0]; }
  const Integer& y() const noexcept { return v_[1]; }
  const Integer& z() const noexcept { return v_[2]; }
  const Integer& w() const noexcept { return v_[3]; }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Integer& x) { return sgn(x) == 0; });
  }
  bool trivial() const { return is_zero() || is_trivial_pattern(a_, b_, v_); }
  bool nontrivial() const { return !trivial(); }

  WeightedQuadruple negated() const {
    return WeightedQuadruple(a_, b_, {Integer(-v_[0]), Integer(-v_[1]), Integer(-v_[2]), Integer(-v_[3])});
  }

  /// Canonical representative under x↔y, z↔w and global negation: each pair
  /// sorted ascending, then the lexicographically larger of the two signs.
  WeightedQuadruple canonical() const {
    auto sorted = [](std::array<Integer, 4> v) {
      if (v[1] < v[0]) std::swap(v[0], v[1]);
      if (v[3] < v[2]) std::swap(v[2], v[3]);
      return v;
    };
    auto p = sorted(v_);
    auto n = sorted({Integer(-v_[0]), Integer(-v_[1]), Integer(-v_[2]), Integer(-v_[3])});
    return WeightedQuadruple(a_, b_, p < n ? n : p);
  }

  std::string coords_text() const {
    return v_[0].get_str() + "," + v_[1].get_str() + "," + v_[2].get_str() + "," + v_[3].get_str();
  }
  std::string to_string() const { return "(" + coords_text() + ")"; }

  friend bool operator==(const WeightedQuadruple&, const WeightedQuadruple&) = default;

 private:
  Integer a_;
  Integer b_;
  std::array<Integer, 4> v_;
};

/// All primitive nontrivial solutions with coordinates in [-bound, bound],
/// one canonical representative per symmetry class, sorted by maximal
/// absolute coordinate and then lexicographically.
inline std::vector<WeightedQuadruple> search_quadruples(const Integer& a, const Integer& b, long bound) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(Errc::InvalidArgument, "weights must be nonzero");
  if (bound < 1) fail(Errc::InvalidArgument, "bound must be positive");
  std::vector<Integer> cubes;
  for (long i = -bound; i <= bound; ++i) cubes.push_back(Integer(i) * i * i);
  auto cube = [&](long i) -> const Integer& { return cubes[static_cast<std::size_t>(i + bound)]; };
  std::vector<std::array<Integer, 4>> found;
  Integer rest, w3, root;
  for (long x = -bound; x <= bound; ++x) {
    for (long y = x; y <= bound; ++y) {
      for (long z = -bound; z <= bound; ++z) {
        // b·w³ = -(a(x³ + y³) + b·z³)
        rest = -(a * (cube(x) + cube(y)) + b * cube(z));
        if (!divides(b, rest)) continue;
        w3 = rest / b;
        mpz_root(root.get_mpz_t(), w3.get_mpz_t(), 3);
        if (root * root * root != w3 || abs(root) > bound || root < z) continue;
        std::array<Integer, 4> v{Integer(x), Integer(y), Integer(z), root};
        if (gcd(gcd(v[0], v[1]), gcd(v[2], v[3])) != 1) continue;
        if (is_trivial_pattern(a, b, v)) continue;
        found.push_back(WeightedQuadruple(a, b, v).canonical().coords());
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  auto height = [](const std::array<Integer, 4>& v) {
    Integer h = 0;
    for (const auto& x : v) h = std::max(h, Integer(abs(x)));
    return h;
  };
  std::stable_sort(found.begin(), found.end(),
                   [&](const auto& p, const auto& q) { return std::make_pair(height(p), p) < std::make_pair(height(q), q); });
  std::vector<WeightedQuadruple> out;
  for (auto& v : found) out.emplace_back(a, b, v);
  return out;
}

/// The multipliers (c, d) for combining s with s'.
inline std::pair<Integer, Integer> combine_multipliers(const WeightedQuadruple& s, const WeightedQuadruple& t) {
  const auto& v = s.coords();
  const auto& u = t.coords();
  Integer c = s.a() * (v[0] * u[0] * u[0] + v[1] * u[1] * u[1]) + s.b() * (v[2] * u[2] * u[2] + v[3] * u[3] * u[3]);
  Integer d = -(s.a() * (v[0] * v[0] * u[0] + v[1] * v[1] * u[1]) + s.b() * (v[2] * v[2] * u[2] + v[3] * v[3] * u[3]));
  return {c, d};
}

/// c·s + d·s' before removing the common factor.
inline std::array<Integer, 4> combine_raw(const WeightedQuadruple& s, const WeightedQuadruple& t) {
  if (s.a() != t.a() || s.b() != t.b()) fail(Errc::InvalidArgument, "combining solutions with different weights");
  const auto [c, d] = combine_multipliers(s, t);
  std::array<Integer, 4> r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = c * s.coords()[i] + d * t.coords()[i];
  return r;
}

/// Primitive part (positive gcd removed, signs kept) of c·s + d·s'. The
/// trivial flag of the result is reported, not suppressed.
inline WeightedQuadruple combine(const WeightedQuadruple& s, const WeightedQuadruple& t) {
  auto r = combine_raw(s, t);
  if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) == 0; })) {
    fail(Errc::ZeroResult, "combination of " + s.to_string() + " and " + t.to_string() + " vanishes");
  }
  if (weighted_cube_sum(s.a(), s.b(), r) != 0) fail(Errc::InvariantViolation, "combination left the solution set");
  return WeightedQuadruple(s.a(), s.b(), std::move(r));
}

/// Four homogeneous quadratics in (m, n) with a·P1³ + a·P2³ + b·P3³ + b·P4³ = 0.
struct ParamQuadruple {
  Integer a;
  Integer b;
  std::array<MultiPoly, 4> P;

  std::string to_string() const {
    return "(" + P[0].to_string() + ", " + P[1].to_string() + ", " + P[2].to_string() + ", " + P[3].to_string() + ")";
  }
  friend bool operator==(const ParamQuadruple&, const ParamQuadruple&) = default;
};

inline MultiPoly weighted_cube_sum(const ParamQuadruple& pq) {
  return pq.a * (pq.P[0].pow(3) + pq.P[1].pow(3)) + pq.b * (pq.P[2].pow(3) + pq.P[3].pow(3));
}

/// Symbolic check of the weighted cubic identity.
inline bool verify_param(const ParamQuadruple& pq) { return weighted_cube_sum(pq).is_zero(); }

/// Checks every structural invariant; throws InvariantViolation naming the
/// first one that fails.
inline void validate_param(const ParamQuadruple& pq) {
  Integer g = 0;
  for (const auto& p : pq.P) {
    for (const auto& v : p.used_variables()) {
      if (v != "m" && v != "n") fail(Errc::InvariantViolation, "quadratic mentions '" + v + "'");
    }
    if (!p.is_homogeneous(2)) fail(Errc::InvariantViolation, p.to_string() + " is not a quadratic form");
    for (const auto& [k, c] : p.terms()) g = gcd(g, c);
  }
  if (g != 1) fail(Errc::InvariantViolation, "quadratics share the content " + g.get_str());
  if (!verify_param(pq)) fail(Errc::InvariantViolation, "weighted cubic identity fails");
}

/// Combines s with (m, -m, n, -n) and removes the content common to all four
/// quadratics.
inline ParamQuadruple morph(const WeightedQuadruple& s) {
  if (s.trivial()) fail(Errc::DegenerateMorph, s.to_string() + " is trivial");
  const std::vector<std::string> vars{"m", "n"};
  const MultiPoly m = MultiPoly::variable(vars, "m");
  const MultiPoly n = MultiPoly::variable(vars, "n");
  const auto& v = s.coords();
  const MultiPoly c = s.a() * (v[0] + v[1]) * m.pow(2) + s.b() * (v[2] + v[3]) * n.pow(2);
  const MultiPoly d = -(s.a() * (v[0] * v[0] - v[1] * v[1]) * m + s.b() * (v[2] * v[2] - v[3] * v[3]) * n);
  ParamQuadruple pq{s.a(), s.b(), {c * v[0] + d * m, c * v[1] - d * m, c * v[2] + d * n, c * v[3] - d * n}};
  if ((pq.P[0] + pq.P[1]).is_zero() && (pq.P[2] + pq.P[3]).is_zero()) {
    fail(Errc::DegenerateMorph, "morph of " + s.to_string() + " is proportional to (m, -m, n, -n)");
  }
  Integer g = 0;
  for (const auto& p : pq.P) {
    for (const auto& [k, coeff] : p.terms()) g = gcd(g, coeff);
  }
  for (auto& p : pq.P) {
    MultiPoly q(vars);
    for (const auto& [k, coeff] : p.terms()) q.add_term(k, Integer(coeff / g));
    p = std::move(q);
  }
  validate_param(pq);
  return pq;
}

}  // namespace cubicforge
