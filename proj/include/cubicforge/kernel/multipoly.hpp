#pragma once

/**
 * Sparse multivariate polynomials with arbitrary-precision integer
 * coefficients.
 *
 * A polynomial owns an ordered list of variable names. Terms are kept in a
 * map keyed by exponent vectors in descending graded-lexicographic order
 * (total degree first, then lexicographic by the declared variable order),
 * so iteration starts at the leading term and printing is canonical.
 *
 * Binary operations between polynomials over different variable lists first
 * move both operands onto the union list (left operand's variables first).
 * Equality compares the polynomials as mathematical objects, so `0` over
 * `[m, n]` equals `0` over `[]`.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"

namespace cubicforge {

class MultiPoly {
 public:
  // Internal key layout: key[0] is the total degree, key[1..] the exponents.
  // Lexicographic comparison of keys is then graded-lex on exponents.
  using Key = std::vector<unsigned>;
  using TermMap = std::map<Key, Integer, std::greater<Key>>;

  MultiPoly() = default;

  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    check_distinct(vars_);
  }

  static MultiPoly constant(std::vector<std::string> variables, const Integer& c) {
    MultiPoly p(std::move(variables));
    if (sgn(c) != 0) p.terms_.emplace(Key(p.vars_.size() + 1, 0u), c);
    return p;
  }

  static MultiPoly constant(const Integer& c) { return constant({}, c); }

  static MultiPoly variable(std::vector<std::string> variables, std::string_view name) {
    MultiPoly p(std::move(variables));
    const std::size_t i = p.index_of(name);
    Key k(p.vars_.size() + 1, 0u);
    k[0] = 1;
    k[i + 1] = 1;
    p.terms_.emplace(std::move(k), Integer(1));
    return p;
  }

  static MultiPoly monomial(std::vector<std::string> variables, std::span<const unsigned> exponents,
                            const Integer& coeff) {
    MultiPoly p(std::move(variables));
    if (exponents.size() != p.vars_.size()) {
      fail(Errc::InvalidArgument, "exponent vector length does not match variable list");
    }
    p.add_term(make_key(exponents), coeff);
    return p;
  }

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first[0] == 0);
  }

  Integer constant_term() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(Key(vars_.size() + 1, 0u));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first[0]);
  }

  bool is_homogeneous(unsigned degree) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const auto& t) { return t.first[0] == degree; });
  }

  std::optional<std::size_t> find_variable(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t index_of(std::string_view name) const {
    auto i = find_variable(name);
    if (!i) fail(Errc::InvalidArgument, "unknown variable '" + std::string(name) + "'");
    return *i;
  }

  /// Degree in one variable; -1 for the zero polynomial, 0 when absent.
  int degree_in(std::string_view name) const {
    auto i = find_variable(name);
    if (terms_.empty()) return -1;
    if (!i) return 0;
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k[*i + 1]);
    return static_cast<int>(d);
  }

  /// Variables that occur with positive exponent in some term.
  std::vector<std::string> used_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (const auto& [k, c] : terms_) {
        if (k[i + 1] != 0) {
          out.push_back(vars_[i]);
          break;
        }
      }
    }
    return out;
  }

  std::span<const unsigned> exponents_of(const Key& key) const {
    return std::span<const unsigned>(key).subspan(1);
  }

  Integer coefficient(std::span<const unsigned> exponents) const {
    auto it = terms_.find(make_key(exponents));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Re-expresses the polynomial over another variable list. Variables absent
  /// from `variables` must not occur in the polynomial.
  MultiPoly with_variables(std::vector<std::string> variables) const {
    MultiPoly out(std::move(variables));
    if (out.vars_ == vars_) {
      out.terms_ = terms_;
      return out;
    }
    std::vector<std::size_t> target(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto j = out.find_variable(vars_[i]);
      if (!j) {
        for (const auto& [k, c] : terms_) {
          if (k[i + 1] != 0) {
            fail(Errc::InvalidArgument, "variable '" + vars_[i] + "' occurs but is not in the target list");
          }
        }
        target[i] = out.vars_.size();  // dropped
      } else {
        target[i] = *j;
      }
    }
    for (const auto& [k, c] : terms_) {
      Key nk(out.vars_.size() + 1, 0u);
      nk[0] = k[0];
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (target[i] < out.vars_.size()) nk[target[i] + 1] = k[i + 1];
      }
      out.terms_.emplace(std::move(nk), c);
    }
    return out;
  }

  /// Union of two variable lists: `a` in order, then the new names of `b`.
  static std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& rhs) { return accumulate(rhs, 1); }
  MultiPoly& operator-=(const MultiPoly& rhs) { return accumulate(rhs, -1); }

  MultiPoly& operator*=(const Integer& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Integer& s) { return a *= s; }
  friend MultiPoly operator*(const Integer& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
      auto vars = merge_variables(a.vars_, b.vars_);
      return a.with_variables(vars) * b.with_variables(vars);
    }
    MultiPoly out(a.vars_);
    if (a.is_zero() || b.is_zero()) return out;
    const std::size_t width = a.vars_.size() + 1;
    Key k(width);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        for (std::size_t i = 0; i < width; ++i) k[i] = ka[i] + kb[i];
        auto [it, inserted] = out.terms_.try_emplace(k);
        mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        if (!inserted && sgn(it->second) == 0) out.terms_.erase(it);
      }
    }
    // try_emplace of a fresh key followed by addmul never yields zero, but a
    // fresh key may coincide with a previously erased one; sweep defensively.
    std::erase_if(out.terms_, [](const auto& t) { return sgn(t.second) == 0; });
    return out;
  }

  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto vars = merge_variables(a.vars_, b.vars_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
  }

  /// Coefficients with respect to one variable: result[i] multiplies name^i.
  /// Each coefficient lives over the variable list with `name` removed.
  std::vector<MultiPoly> coefficients_in(std::string_view name) const {
    const std::size_t idx = index_of(name);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i != idx) rest.push_back(vars_[i]);
    }
    const int deg = std::max(degree_in(name), 0);
    std::vector<MultiPoly> out(static_cast<std::size_t>(deg) + 1, MultiPoly(rest));
    for (const auto& [k, c] : terms_) {
      const unsigned e = k[idx + 1];
      Key nk;
      nk.reserve(rest.size() + 1);
      nk.push_back(k[0] - e);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i != idx) nk.push_back(k[i + 1]);
      }
      out[e].terms_.emplace(std::move(nk), c);
    }
    return out;
  }

  /// Evaluates at a point given in variable order. T is Integer or Rational.
  template <typename T>
  T evaluate(std::span<const T> point) const {
    if (point.size() != vars_.size()) fail(Errc::InvalidArgument, "evaluation point has wrong arity");
    std::vector<std::vector<T>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned maxe = 0;
      for (const auto& [k, c] : terms_) maxe = std::max(maxe, k[i + 1]);
      powers[i].reserve(maxe + 1);
      powers[i].push_back(T(1));
      for (unsigned e = 1; e <= maxe; ++e) powers[i].push_back(T(powers[i].back() * point[i]));
    }
    T sum = 0;
    for (const auto& [k, c] : terms_) {
      T t = T(c);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (k[i + 1] != 0) t *= powers[i][k[i + 1]];
      }
      sum += t;
    }
    return sum;
  }

  template <typename T>
  T evaluate(std::initializer_list<T> point) const {
    std::vector<T> v(point);
    return evaluate<T>(std::span<const T>(v));
  }

  /// Replaces variable i by images[i]. The result lives over the merged
  /// variable list of the images.
  MultiPoly substitute(std::span<const MultiPoly> images) const {
    if (images.size() != vars_.size()) fail(Errc::InvalidArgument, "substitution has wrong arity");
    std::vector<std::string> vars;
    for (const auto& img : images) vars = merge_variables(vars, img.vars_);
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned maxe = 0;
      for (const auto& [k, c] : terms_) maxe = std::max(maxe, k[i + 1]);
      MultiPoly base = images[i].with_variables(vars);
      powers[i].push_back(constant(vars, 1));
      for (unsigned e = 1; e <= maxe; ++e) powers[i].push_back(powers[i].back() * base);
    }
    MultiPoly sum(vars);
    for (const auto& [k, c] : terms_) {
      MultiPoly t = constant(vars, c);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (k[i + 1] != 0) t *= powers[i][k[i + 1]];
      }
      sum += t;
    }
    return sum;
  }

  /// Canonical text: `m^2 - 9*m*n - n^2`. Round-trips through parse_poly.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      const bool negative = sgn(c) < 0;
      const Integer mag = abs(c);
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (mag != 1 || k[0] == 0) {
        os << mag.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const unsigned e = k[i + 1];
        if (e == 0) continue;
        if (wrote) os << '*';
        os << vars_[i];
        if (e > 1) os << '^' << e;
        wrote = true;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

  /// Adds c * monomial(key); keys must match this polynomial's layout.
  void add_term(const Key& key, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  static Key make_key(std::span<const unsigned> exponents) {
    Key k;
    k.reserve(exponents.size() + 1);
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    k.push_back(d);
    k.insert(k.end(), exponents.begin(), exponents.end());
    return k;
  }

 private:
  static void check_distinct(const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        if (vars[i] == vars[j]) fail(Errc::InvalidArgument, "duplicate variable '" + vars[i] + "'");
      }
    }
  }

  MultiPoly& accumulate(const MultiPoly& rhs, int sign) {
    if (vars_ != rhs.vars_) {
      auto vars = merge_variables(vars_, rhs.vars_);
      *this = with_variables(vars);
      return accumulate(rhs.with_variables(vars), sign);
    }
    for (const auto& [k, c] : rhs.terms_) add_term(k, sign > 0 ? c : Integer(-c));
    return *this;
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Content (positive gcd of coefficients) and primitive part, with the sign
/// absorbed into the primitive part.
inline std::pair<Integer, MultiPoly> content_primitive(const MultiPoly& p) {
  if (p.is_zero()) fail(Errc::ZeroPolynomial, "content of the zero polynomial");
  Integer g = 0;
  for (const auto& [k, c] : p.terms()) g = gcd(g, c);
  MultiPoly prim(p.variables());
  for (const auto& [k, c] : p.terms()) prim.add_term(k, Integer(c / g));
  return {g, prim};
}

/// Exact quotient p / q over the integers, or nullopt when q does not divide p.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) fail(Errc::InvalidArgument, "division by the zero polynomial");
  if (p.variables() != q.variables()) {
    auto vars = MultiPoly::merge_variables(p.variables(), q.variables());
    return divide_exact(p.with_variables(vars), q.with_variables(vars));
  }
  const auto& vars = p.variables();
  const std::size_t width = vars.size() + 1;
  MultiPoly rem = p;
  MultiPoly quot(vars);
  const auto& [lq_key, lq_coeff] = *q.terms().begin();
  MultiPoly::Key shift(width);
  while (!rem.is_zero()) {
    const auto& [lr_key, lr_coeff] = *rem.terms().begin();
    for (std::size_t i = 0; i < width; ++i) {
      if (lr_key[i] < lq_key[i]) return std::nullopt;
      shift[i] = lr_key[i] - lq_key[i];
    }
    if (!divides(lq_coeff, lr_coeff)) return std::nullopt;
    const Integer factor = lr_coeff / lq_coeff;
    quot.add_term(shift, factor);
    MultiPoly::Key k(width);
    for (const auto& [kq, cq] : q.terms()) {
      for (std::size_t i = 0; i < width; ++i) k[i] = kq[i] + shift[i];
      rem.add_term(k, Integer(-factor * cq));
    }
  }
  return quot;
}

}  // namespace cubicforge
