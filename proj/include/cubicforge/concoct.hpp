#pragma once

// Equations built from their answers: implicitization of a parametrization
// by iterated resultants, nonsingular linear twists of a base form, and
// discovery of homogeneous forms that are constant (or alternate) on a tuple
// of C-finite sequences.

#include <algorithm>
#include <array>
#include <optional>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cubicforge/cfinite.hpp"
#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/interpolate.hpp"
#include "cubicforge/kernel/linalg.hpp"
#include "cubicforge/kernel/modular.hpp"
#include "cubicforge/kernel/multipoly.hpp"
#include "cubicforge/kernel/resultant.hpp"
#include "cubicforge/serialize.hpp"

namespace cubicforge {

namespace detail {

/// Primitive part with a positive leading coefficient.
inline MultiPoly normalized_primitive(const MultiPoly& p) {
  MultiPoly prim = content_primitive(p).second;
  if (sgn(prim.terms().begin()->second) < 0) prim = -prim;
  return prim;
}

/// S(P(m, n), Q(m, n), R(m, n)) ≡ 0, decided exactly. A bivariate
/// polynomial of total degree ≤ T that vanishes on the triangular grid
/// {(u_i, u_j) : i + j ≤ T} of distinct nodes is zero over any field; this is
/// checked modulo enough primes to exceed the coefficient bound
/// Σ |c|·|P|₁^i·|Q|₁^j·|R|₁^k of the composition.
inline bool vanishes_on(const MultiPoly& S, const std::array<MultiPoly, 3>& params) {
  namespace mod = modular;
  unsigned T = 0;
  Integer bound = 0;
  std::array<Integer, 3> norms;
  for (std::size_t i = 0; i < 3; ++i) norms[i] = mod::norm1(params[i]);
  for (const auto& [key, c] : S.terms()) {
    unsigned t = 0;
    Integer b = abs(c);
    for (std::size_t i = 0; i < 3; ++i) {
      t += key[i + 1] * params[i].total_degree();
      b *= ipow(norms[i], key[i + 1]);
    }
    T = std::max(T, t);
    bound += b;
  }
  std::array<MultiPoly, 3> mn;
  for (std::size_t i = 0; i < 3; ++i) mn[i] = params[i].with_variables({"m", "n"});
  for (const auto p : mod::primes_for_bound(bound)) {
    const mod::ModPoly s(S, p);
    const std::array<mod::ModPoly, 3> q{mod::ModPoly(mn[0], p), mod::ModPoly(mn[1], p), mod::ModPoly(mn[2], p)};
    std::array<mod::u64, 2> at{};
    std::array<mod::u64, 3> image{};
    for (std::size_t i = 0; i <= T; ++i) {
      at[0] = mod::reduce(interpolation_node(i), p);
      for (std::size_t j = 0; i + j <= T; ++j) {
        at[1] = mod::reduce(interpolation_node(j), p);
        for (std::size_t k = 0; k < 3; ++k) image[k] = q[k](at);
        if (s(image) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// S(x, y, z) with S(P, Q, R) ≡ 0, from
/// res_n(res_m(x - P, y - Q), res_m(x - P, z - R)). Every pivot equation and
/// both elimination orders are candidates; the one whose final resultant needs
/// the smallest interpolation grid is used. An equation already free of the eliminated
/// parameter is kept as is. S may carry extraneous factors.
inline MultiPoly implicitize(const MultiPoly& P, const MultiPoly& Q, const MultiPoly& R) {
  const std::vector<std::string> vars{"m", "n", "x", "y", "z"};
  const std::array<MultiPoly, 3> params{P, Q, R};
  for (const auto& p : params) {
    for (const auto& v : p.used_variables()) {
      if (v != "m" && v != "n") fail(Errc::InvalidArgument, "parametrization mentions '" + v + "'");
    }
    if (p.is_constant()) fail(Errc::InvalidArgument, "parametrization component is constant");
  }
  const std::array<MultiPoly, 3> eqs{MultiPoly::variable(vars, "x") - P.with_variables({"m", "n"}),
                                     MultiPoly::variable(vars, "y") - Q.with_variables({"m", "n"}),
                                     MultiPoly::variable(vars, "z") - R.with_variables({"m", "n"})};
  // Drops `var` from `other` using the pivot; nullopt when that is impossible.
  auto eliminate = [](const MultiPoly& pivot, const MultiPoly& other, const char* var) -> std::optional<MultiPoly> {
    if (other.degree_in(var) <= 0) return other;
    if (pivot.degree_in(var) <= 0) return std::nullopt;
    MultiPoly r = resultant(pivot, other, var);
    if (r.is_zero()) return std::nullopt;
    return r;
  };
  struct Candidate {
    MultiPoly r1, r2;
    const char* second;
    std::size_t size;
  };
  std::vector<Candidate> candidates;
  const std::array<std::pair<const char*, const char*>, 2> orders{{{"m", "n"}, {"n", "m"}}};
  for (const auto& [first, second] : orders) {
    for (int pivot = 0; pivot < 3; ++pivot) {
      auto r1 = eliminate(eqs[pivot], eqs[(pivot + 1) % 3], first);
      auto r2 = eliminate(eqs[pivot], eqs[(pivot + 2) % 3], first);
      if (!r1 || !r2) continue;
      if (r1->degree_in(second) <= 0 || r2->degree_in(second) <= 0) continue;
      const std::size_t size = interpolation_grid_size(*r1, *r2, second);
      candidates.push_back({std::move(*r1), std::move(*r2), second, size});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.size < b.size; });
  for (const auto& c : candidates) {
    MultiPoly s = resultant_by_interpolation(c.r1, c.r2, c.second);
    if (s.is_zero()) continue;
    s = detail::normalized_primitive(s).with_variables({"x", "y", "z"});
    if (!detail::vanishes_on(s, params)) {
      fail(Errc::InvariantViolation, "implicit equation does not vanish on the parametrization");
    }
    return s;
  }
  fail(Errc::EliminationCollapse, "every elimination order produced a vanishing or degenerate resultant");
}

/// F(M·(x, y, z)ᵀ) expanded. Nontrivial integer zeros of the result map to
/// nontrivial rational zeros of F.
inline MultiPoly twist_no_solution(const MultiPoly& F, const std::array<std::array<Integer, 3>, 3>& M) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : M) rows.emplace_back(r.begin(), r.end());
  if (sgn(bareiss_determinant(rows, Integer(1), Integer(0))) == 0) {
    fail(Errc::SingularSubstitution, "substitution matrix is singular");
  }
  const std::vector<std::string> vars{"x", "y", "z"};
  for (const auto& v : F.used_variables()) {
    if (v != "x" && v != "y" && v != "z") fail(Errc::InvalidArgument, "base form mentions '" + v + "'");
  }
  std::vector<MultiPoly> images;
  for (const auto& r : M) {
    MultiPoly row(vars);
    for (std::size_t k = 0; k < 3; ++k) row += r[k] * MultiPoly::variable(vars, vars[k]);
    images.push_back(std::move(row));
  }
  return F.with_variables(vars).substitute(images).with_variables(vars);
}

/// What the form must equal along the sequences.
enum class FormTarget { Constant, Alternating, None };

inline std::string_view to_string(FormTarget t) {
  switch (t) {
    case FormTarget::Constant: return "constant";
    case FormTarget::Alternating: return "alternating";
    case FormTarget::None: return "none";
  }
  return "unknown";
}

/// P(a_1(n), ..., a_d(n)) = C·target(n), with P homogeneous of degree D and
/// coprime integer coefficients. With target None (or a vanishing form),
/// homogeneous_vanishing is set and C = 0.
struct FormResult {
  unsigned degree = 0;
  MultiPoly form;
  Integer C;
  FormTarget target = FormTarget::None;
  bool homogeneous_vanishing = false;
  Certificate certificate;
};

class NoTargetedFormError : public Error {
 public:
  NoTargetedFormError(const std::string& message, std::vector<FormResult> vanishing)
      : Error(Errc::NoTargetedForm, message), vanishing_(std::move(vanishing)) {}
  /// Certified forms that vanish identically on the sequences.
  const std::vector<FormResult>& vanishing_forms() const noexcept { return vanishing_; }

 private:
  std::vector<FormResult> vanishing_;
};

/// X, Y (d = 2); X, Y, Z (d = 3); X1..Xd otherwise.
inline std::vector<std::string> form_variables(std::size_t d) {
  if (d == 2) return {"X", "Y"};
  if (d == 3) return {"X", "Y", "Z"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back("X" + std::to_string(i));
  return out;
}

/// Exponent vectors of total degree D in d variables, in the graded-lex
/// order used for printing (descending).
inline std::vector<std::vector<unsigned>> degree_monomials(std::size_t d, unsigned D) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(d, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == d) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, D);
  return out;
}

/// Finds a degree-D form on the sequences via the nullspace of the
/// evaluation matrix at n = 0..N-1, N = #monomials + 4, and certifies it.
inline FormResult find_form(const std::vector<RationalGF>& seqs, unsigned D, FormTarget target) {
  const std::size_t d = seqs.size();
  if (d < 2) fail(Errc::InvalidArgument, "need at least two sequences");
  if (D < 2) fail(Errc::InvalidArgument, "degree must be at least 2");
  const auto vars = form_variables(d);
  const auto monos = degree_monomials(d, D);
  const std::size_t cols = monos.size() + (target == FormTarget::None ? 0 : 1);
  const std::size_t rows = monos.size() + 4;

  std::vector<std::vector<Rational>> values;
  for (const auto& g : seqs) values.push_back(taylor_coefficients(g, rows));
  RationalMatrix m(rows, cols);
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Rational v = 1;
      for (std::size_t i = 0; i < d; ++i) v *= rpow(values[i][n], monos[c][i]);
      m(n, c) = v;
    }
    if (target != FormTarget::None) m(n, monos.size()) = target == FormTarget::Alternating && n % 2 == 1 ? -1 : 1;
  }
  auto basis = rational_nullspace(m);
  if (basis.empty()) fail(Errc::NoForm, "no degree-" + std::to_string(D) + " form on these sequences");
  // Basis vectors are primitive with the first nonzero entry positive, so the
  // leading form coefficient is positive whenever the form is nonzero.
  std::sort(basis.begin(), basis.end());

  Bindings bindings;
  for (std::size_t i = 0; i < d; ++i) bindings.emplace(vars[i], seqs[i]);
  std::vector<std::string> evars = vars;
  evars.push_back("sigma");

  auto build = [&](const RationalVector& v, bool targeted) {
    FormResult r;
    r.degree = D;
    r.form = MultiPoly(vars);
    for (std::size_t c = 0; c < monos.size(); ++c) r.form.add_term(MultiPoly::make_key(monos[c]), v[c].get_num());
    r.target = targeted ? target : FormTarget::None;
    r.C = targeted ? Integer(-v.back().get_num()) : Integer(0);
    r.homogeneous_vanishing = !targeted;
    MultiPoly e = r.form.with_variables(evars);
    if (targeted) {
      e -= r.C * (target == FormTarget::Alternating ? MultiPoly::variable(evars, "sigma") : MultiPoly::constant(evars, 1));
    }
    r.certificate = certify_zero(e, bindings);
    return r;
  };

  std::vector<FormResult> vanishing;
  for (const auto& v : basis) {
    const bool has_target = target != FormTarget::None && sgn(v.back()) != 0;
    if (target != FormTarget::None && !has_target) {
      auto r = build(v, false);
      if (r.certificate.certified() && !r.form.is_zero()) vanishing.push_back(std::move(r));
      continue;
    }
    if (std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(monos.size()),
                    [](const Rational& x) { return sgn(x) == 0; })) {
      continue;  // only the target column: the target itself vanishes
    }
    auto r = build(v, has_target);
    if (r.certificate.certified()) return r;
  }
  if (target != FormTarget::None && !vanishing.empty()) {
    throw NoTargetedFormError("every degree-" + std::to_string(D) + " form on these sequences vanishes identically",
                              std::move(vanishing));
  }
  fail(Errc::NoForm, "no certified degree-" + std::to_string(D) + " form on these sequences");
}

/// {"degree", "coeffs": [[exponents, coefficient], ...] in graded-lex
/// descending order, "C", "target", "variables", "certified_depth"}.
inline json_io::json form_to_json(const FormResult& r) {
  using json_io::json;
  json coeffs = json::array();
  for (const auto& [key, c] : r.form.terms()) {
    json exps = json::array();
    for (std::size_t i = 1; i < key.size(); ++i) exps.push_back(key[i]);
    coeffs.push_back(json::array({exps, json_io::from_integer(c)}));
  }
  json out{{"degree", r.degree},
           {"variables", r.form.variables()},
           {"coeffs", coeffs},
           {"C", json_io::from_integer(r.C)},
           {"target", std::string(to_string(r.target))},
           {"homogeneous_vanishing", r.homogeneous_vanishing}};
  if (r.certificate.certified()) out["certified_depth"] = r.certificate.bound;
  return out;
}

/// Inverse of form_to_json; the certificate is not restored.
inline FormResult form_from_json(const json_io::json& j) {
  using json_io::require;
  FormResult r;
  r.degree = require(j, "degree").get<unsigned>();
  const auto& coeffs = require(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) fail(Errc::InvalidArgument, "\"coeffs\" must be a nonempty array");
  const std::size_t d = coeffs.front().at(0).size();
  const auto vars = j.contains("variables") ? j.at("variables").get<std::vector<std::string>>() : form_variables(d);
  if (vars.size() != d) fail(Errc::InvalidArgument, "variable count does not match exponent vectors");
  r.form = MultiPoly(vars);
  for (const auto& entry : coeffs) {
    if (!entry.is_array() || entry.size() != 2) fail(Errc::InvalidArgument, "coefficient entry must be [exponents, c]");
    const auto exps = entry.at(0).get<std::vector<unsigned>>();
    if (exps.size() != d) fail(Errc::InvalidArgument, "ragged exponent vectors");
    unsigned total = 0;
    for (auto e : exps) total += e;
    if (total != r.degree) fail(Errc::InvalidArgument, "monomial degree differs from \"degree\"");
    r.form.add_term(MultiPoly::make_key(exps), json_io::to_integer(entry.at(1)));
  }
  r.C = json_io::to_integer(require(j, "C"));
  const auto t = require(j, "target").get<std::string>();
  if (t == "constant") {
    r.target = FormTarget::Constant;
  } else if (t == "alternating") {
    r.target = FormTarget::Alternating;
  } else if (t == "none") {
    r.target = FormTarget::None;
  } else {
    fail(Errc::InvalidArgument, "unknown target \"" + t + "\"");
  }
  r.homogeneous_vanishing = j.value("homogeneous_vanishing", r.target == FormTarget::None);
  return r;
}

}  // namespace cubicforge
