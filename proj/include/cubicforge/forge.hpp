#pragma once

/**
 * The theorem factory.
 *
 * For weights (a, b): find numeric seeds of a·X³ + a·Y³ + b·Z³ + b·W³ = 0,
 * morph each into quadratics P1..P4 in (m, n), and for each P_j look for a
 * Pell-like orbit (m_i, n_i) with P_j(m_i, n_i) = e (or e·(-1)^i). Along the
 * orbit the other three quadratics give C-finite sequences A, B, C with
 *
 *   w_A·A³ + w_B·B³ + w_C·C³ = -w_j·e³ (times (-1)^n for alternating orbits),
 *
 * where w_k is the weight attached to P_k. Every emitted theorem is
 * certified twice: as a degree-6 identity in the orbit sequences, and from
 * its three generating functions alone (certify_theorem).
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubicforge/cfinite.hpp"
#include "cubicforge/cubic.hpp"
#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/multipoly.hpp"
#include "cubicforge/quadform.hpp"
#include "cubicforge/serialize.hpp"
#include "cubicforge/text.hpp"

namespace cubicforge {

struct TheoremProvenance {
  std::optional<WeightedQuadruple> seed;
  std::optional<ParamQuadruple> param;
  std::optional<PellOrbit> orbit;
  int solved_index = 0;  // 1..4 when known

  friend bool operator==(const TheoremProvenance&, const TheoremProvenance&) = default;
};

/// weights[0]·A(n)³ + weights[1]·B(n)³ + weights[2]·C(n)³ = c (·(-1)^n when
/// alternating). The weights are (a, a, b) or (a, b, b).
struct CubicTheorem {
  Integer a;
  Integer b;
  std::array<Integer, 3> weights;
  Integer c;
  Pattern rhs_kind = Pattern::Constant;
  std::array<RationalGF, 3> gfs;
  TheoremProvenance provenance;
  Certificate certificate;

  friend bool operator==(const CubicTheorem&, const CubicTheorem&) = default;
};

struct ForgeOptions {
  long search_bound = 12;
  std::size_t guess_order = 4;
  long target_cap = 30;
  std::size_t max_theorems = 10;
  long pell_bound = 2000;
  std::vector<WeightedQuadruple> extra_seeds;
};

enum class ForgeStatus { Ok, EmptySeedSet, NoTheorem };

inline std::string_view to_string(ForgeStatus s) {
  switch (s) {
    case ForgeStatus::Ok: return "Ok";
    case ForgeStatus::EmptySeedSet: return "EmptySeedSet";
    case ForgeStatus::NoTheorem: return "NoTheorem";
  }
  return "Unknown";
}

struct ForgeResult {
  std::vector<CubicTheorem> theorems;
  ForgeStatus status = ForgeStatus::Ok;
  std::vector<std::string> diagnostics;
};

/// a·A³ + ... - c(·σ) over the symbols A, B, C, sigma.
inline MultiPoly theorem_expression(const CubicTheorem& thm) {
  const std::vector<std::string> vars{"A", "B", "C", "sigma"};
  MultiPoly e(vars);
  for (std::size_t i = 0; i < 3; ++i) e += thm.weights[i] * MultiPoly::variable(vars, vars[i]).pow(3);
  e -= thm.c * (thm.rhs_kind == Pattern::Alternating ? MultiPoly::variable(vars, "sigma") : MultiPoly::constant(vars, 1));
  return e;
}

/// Re-certifies a theorem from its generating functions alone.
inline Certificate certify_theorem(const CubicTheorem& thm) {
  for (const auto& g : thm.gfs) {
    if (g.den().empty() || sgn(g.den().front()) == 0) fail(Errc::MalformedTheorem, "denominator vanishes at t = 0");
  }
  if (sgn(thm.c) == 0) fail(Errc::MalformedTheorem, "right-hand side constant is zero");
  return certify_zero(theorem_expression(thm), Bindings{{"A", thm.gfs[0]}, {"B", thm.gfs[1]}, {"C", thm.gfs[2]}});
}

namespace detail {

inline std::vector<Integer> flatten_gfs(const CubicTheorem& t) {
  std::vector<Integer> out;
  for (const auto& g : t.gfs) {
    out.push_back(Integer(static_cast<long>(g.num().size())));
    out.insert(out.end(), g.num().begin(), g.num().end());
    out.push_back(Integer(static_cast<long>(g.den().size())));
    out.insert(out.end(), g.den().begin(), g.den().end());
  }
  return out;
}

/// Theorem ordering: |c|, then c, then generating function coefficients.
inline bool theorem_less(const CubicTheorem& x, const CubicTheorem& y) {
  const Integer ax = abs(x.c), ay = abs(y.c);
  if (ax != ay) return ax < ay;
  if (x.c != y.c) return x.c < y.c;
  return flatten_gfs(x) < flatten_gfs(y);
}

inline std::string dedup_key(const CubicTheorem& t) {
  std::vector<Integer> terms;
  for (const auto& g : t.gfs) {
    auto v = integer_terms(g, 12);
    terms.insert(terms.end(), v.begin(), v.end());
  }
  auto first = std::find_if(terms.begin(), terms.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (first != terms.end() && sgn(*first) < 0) {
    for (auto& x : terms) x = -x;
  }
  std::ostringstream os;
  os << t.a << '|' << t.b << '|' << t.c << '|' << to_string(t.rhs_kind);
  for (const auto& w : t.weights) os << '|' << w;
  for (const auto& x : terms) os << ',' << x;
  return os.str();
}

inline std::string form_key(const QuadForm& q) { return q.qa.get_str() + "," + q.qb.get_str() + "," + q.qc.get_str(); }

}  // namespace detail

/// Runs the pipeline; see the file comment. Never throws for "nothing
/// found": the status and diagnostics carry that.
inline ForgeResult forge(const Integer& a, const Integer& b, const ForgeOptions& opts = {}) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(Errc::InvalidArgument, "weights must be nonzero");
  if (opts.guess_order < 2) fail(Errc::InvalidArgument, "guess order must be at least 2");
  ForgeResult result;

  std::vector<WeightedQuadruple> seeds = search_quadruples(a, b, opts.search_bound);
  for (const auto& s : opts.extra_seeds) {
    if (s.a() != a || s.b() != b) fail(Errc::InvalidArgument, "extra seed " + s.to_string() + " has different weights");
    if (s.nontrivial()) seeds.push_back(s.canonical());
  }
  {
    std::vector<WeightedQuadruple> unique;
    for (auto& s : seeds) {
      if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(std::move(s));
    }
    seeds = std::move(unique);
  }
  if (seeds.empty()) {
    result.status = ForgeStatus::EmptySeedSet;
    result.diagnostics.push_back("EmptySeedSet: no nontrivial seed with coordinates up to " +
                                 std::to_string(opts.search_bound));
    return result;
  }

  SolQuadOptions sq;
  sq.guess_order = opts.guess_order;
  sq.bound = opts.pell_bound;
  sq.target_cap = opts.target_cap;
  std::map<std::string, std::optional<PellOrbit>> orbit_cache;
  std::map<std::string, std::size_t> failures;
  std::map<std::string, CubicTheorem> emitted;
  const std::array<Integer, 4> weight_of{a, a, b, b};

  for (const auto& seed : seeds) {
    ParamQuadruple pq;
    try {
      pq = morph(seed);
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateMorph) throw;
      ++failures["DegenerateMorph"];
      continue;
    }
    for (int j = 0; j < 4; ++j) {
      const QuadForm form = QuadForm::from_poly(pq.P[j]);
      const std::string key = detail::form_key(form);
      auto cached = orbit_cache.find(key);
      if (cached == orbit_cache.end()) {
        std::optional<PellOrbit> orbit;
        try {
          orbit = sol_quad(form, sq);
        } catch (const Error& e) {
          if (e.code() != Errc::DefiniteForm && e.code() != Errc::NoOrbitFound) throw;
          ++failures[std::string(to_string(e.code()))];
        }
        cached = orbit_cache.emplace(key, std::move(orbit)).first;
      }
      if (!cached->second) continue;
      const PellOrbit& orbit = *cached->second;

      CubicTheorem thm;
      thm.a = a;
      thm.b = b;
      thm.rhs_kind = orbit.kind;
      thm.c = -weight_of[j] * orbit.target * orbit.target * orbit.target;
      std::array<int, 3> others{};
      for (int k = 0, i = 0; k < 4; ++k) {
        if (k != j) others[i++] = k;
      }
      for (int i = 0; i < 3; ++i) thm.weights[i] = weight_of[others[i]];

      // Degree-6 certificate over the orbit sequences.
      const std::vector<std::string> mv{"M", "N", "sigma"};
      const std::vector<MultiPoly> images{MultiPoly::variable(mv, "M"), MultiPoly::variable(mv, "N")};
      MultiPoly e6(mv);
      for (int i = 0; i < 3; ++i) e6 += thm.weights[i] * pq.P[others[i]].substitute(images).pow(3);
      e6 -= thm.c * (orbit.kind == Pattern::Alternating ? MultiPoly::variable(mv, "sigma") : MultiPoly::constant(mv, 1));
      const Certificate orbit_cert = certify_zero(e6, Bindings{{"M", orbit.gfM}, {"N", orbit.gfN}});
      if (!orbit_cert.certified()) {
        ++failures["OrbitCertificateRefuted"];
        continue;
      }

      const auto r = static_cast<unsigned long>(std::max(orbit.gfM.order(), 1));
      const std::size_t cap = binomial(r + 1, 2).get_ui() + 1;
      const std::size_t count = std::max<std::size_t>(14, 2 * cap + 6);
      const auto ms = integer_terms(orbit.gfM, count);
      const auto ns = integer_terms(orbit.gfN, count);
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        std::vector<Integer> seq;
        seq.reserve(count);
        for (std::size_t t = 0; t < count; ++t) {
          const Integer pt[2] = {ms[t], ns[t]};
          seq.push_back(pq.P[others[i]].evaluate<Integer>(std::span<const Integer>(pt, 2)));
        }
        try {
          thm.gfs[i] = seq_from_terms(seq, cap);
        } catch (const Error& e) {
          if (e.code() != Errc::GuessFailed && e.code() != Errc::NonIntegralGF) throw;
          ++failures[std::string(to_string(e.code()))];
          ok = false;
        }
        if (ok && thm.gfs[i].is_zero()) {
          ++failures["ZeroSequence"];
          ok = false;
        }
      }
      if (!ok || sgn(thm.c) == 0) continue;

      thm.provenance = TheoremProvenance{seed, pq, orbit, j + 1};
      thm.certificate = certify_theorem(thm);
      if (!thm.certificate.certified()) {
        ++failures["TheoremCertificateRefuted"];
        continue;
      }
      if (thm.c != -weight_of[j] * orbit.target * orbit.target * orbit.target) {
        fail(Errc::InvariantViolation, "weight bookkeeping broke for seed " + seed.to_string());
      }
      const std::string key2 = detail::dedup_key(thm);
      auto it = emitted.find(key2);
      if (it == emitted.end()) emitted.emplace(key2, std::move(thm));
    }
  }

  for (auto& [k, t] : emitted) result.theorems.push_back(std::move(t));
  std::sort(result.theorems.begin(), result.theorems.end(), detail::theorem_less);
  if (result.theorems.size() > opts.max_theorems) result.theorems.resize(opts.max_theorems);
  for (const auto& [what, n] : failures) result.diagnostics.push_back(what + ": " + std::to_string(n));
  if (result.theorems.empty()) {
    result.status = ForgeStatus::NoTheorem;
    result.diagnostics.insert(result.diagnostics.begin(), "NoTheorem: every pipeline branch failed");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Rendering and parsing.

enum class Format { Text, Latex, Json };

namespace detail {

inline std::string equation_lhs(const CubicTheorem& thm, const std::array<std::string, 3>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 3; ++i) {
    const Integer& w = thm.weights[i];
    const bool neg = sgn(w) < 0;
    if (i == 0) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    const Integer mag = abs(w);
    if (mag != 1) os << mag.get_str() << '*';
    os << names[i];
  }
  return os.str();
}

inline std::string latex_poly(const ZPoly& p) {
  std::string s = RationalGF::poly_text(p, "t");
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '*') continue;
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
      continue;
    }
    out += s[i];
  }
  return out;
}

}  // namespace detail

inline nlohmann::json orbit_to_json(const PellOrbit& o) {
  using namespace json_io;
  return json{{"gfM", from_gf(o.gfM)},
              {"gfN", from_gf(o.gfN)},
              {"target", from_integer(o.target)},
              {"kind", std::string(to_string(o.kind))},
              {"certified_depth", o.certificate.bound}};
}

inline PellOrbit orbit_from_json(const nlohmann::json& j) {
  using namespace json_io;
  PellOrbit o;
  o.gfM = to_gf(require(j, "gfM"));
  o.gfN = to_gf(require(j, "gfN"));
  o.target = to_integer(require(j, "target"));
  o.kind = to_pattern(require(j, "kind"));
  o.certificate.bound = require(j, "certified_depth").get<std::size_t>();
  return o;
}

inline nlohmann::json theorem_to_json(const CubicTheorem& thm) {
  using namespace json_io;
  json gfs = json::array();
  for (const auto& g : thm.gfs) gfs.push_back(from_gf(g));
  json weights = json::array();
  for (const auto& w : thm.weights) weights.push_back(from_integer(w));
  json prov = json::object();
  if (thm.provenance.seed) prov["seed"] = from_integers(std::vector<Integer>(thm.provenance.seed->coords().begin(),
                                                                               thm.provenance.seed->coords().end()));
  if (thm.provenance.param) {
    json ps = json::array();
    for (const auto& p : thm.provenance.param->P) ps.push_back(p.to_string());
    prov["param"] = ps;
  }
  if (thm.provenance.orbit) prov["orbit"] = orbit_to_json(*thm.provenance.orbit);
  if (thm.provenance.solved_index != 0) prov["solved_index"] = thm.provenance.solved_index;
  return json{{"a", from_integer(thm.a)},
              {"b", from_integer(thm.b)},
              {"c", from_integer(thm.c)},
              {"rhs_constant", from_integer(thm.c)},
              {"rhs_kind", std::string(to_string(thm.rhs_kind))},
              {"weights", weights},
              {"gfs", gfs},
              {"certified_depth", thm.certificate.bound},
              {"provenance", prov}};
}

/// Inverse of theorem_to_json. "rhs_constant" is accepted as an alias of
/// "c"; "weights" defaults to (a, a, b); the certificate is recorded as
/// claimed, not re-checked.
inline CubicTheorem theorem_from_json(const nlohmann::json& j) {
  using namespace json_io;
  try {
    CubicTheorem thm;
    thm.a = to_integer(require(j, "a"));
    thm.b = to_integer(require(j, "b"));
    if (j.contains("c")) {
      thm.c = to_integer(j.at("c"));
      if (j.contains("rhs_constant") && to_integer(j.at("rhs_constant")) != thm.c) {
        fail(Errc::MalformedTheorem, "\"c\" and \"rhs_constant\" disagree");
      }
    } else {
      thm.c = to_integer(require(j, "rhs_constant"));
    }
    thm.rhs_kind = j.contains("rhs_kind") ? to_pattern(j.at("rhs_kind")) : Pattern::Constant;
    if (j.contains("weights")) {
      auto w = to_integers(j.at("weights"));
      if (w.size() != 3) fail(Errc::MalformedTheorem, "\"weights\" needs three entries");
      for (std::size_t i = 0; i < 3; ++i) thm.weights[i] = w[i];
    } else {
      thm.weights = {thm.a, thm.a, thm.b};
    }
    const auto& gfs = require(j, "gfs");
    if (!gfs.is_array() || gfs.size() != 3) fail(Errc::MalformedTheorem, "\"gfs\" needs three generating functions");
    for (std::size_t i = 0; i < 3; ++i) thm.gfs[i] = to_gf(gfs[i]);
    if (j.contains("certified_depth")) thm.certificate.bound = j.at("certified_depth").get<std::size_t>();
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      if (p.contains("seed")) {
        auto v = to_integers(p.at("seed"));
        if (v.size() != 4) fail(Errc::MalformedTheorem, "seed needs four coordinates");
        thm.provenance.seed = WeightedQuadruple(thm.a, thm.b, {v[0], v[1], v[2], v[3]});
      }
      if (p.contains("param")) {
        const auto& ps = p.at("param");
        if (!ps.is_array() || ps.size() != 4) fail(Errc::MalformedTheorem, "param needs four polynomials");
        ParamQuadruple pq{thm.a, thm.b, {}};
        for (std::size_t i = 0; i < 4; ++i) pq.P[i] = parse_poly(ps[i].get<std::string>(), {"m", "n"});
        thm.provenance.param = std::move(pq);
      }
      if (p.contains("orbit")) thm.provenance.orbit = orbit_from_json(p.at("orbit"));
      if (p.contains("solved_index")) thm.provenance.solved_index = p.at("solved_index").get<int>();
    }
    return thm;
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedTheorem) throw;
    fail(Errc::MalformedTheorem, e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::MalformedTheorem, e.what());
  }
}

inline CubicTheorem parse_theorem_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::MalformedTheorem, e.what());
  }
  return theorem_from_json(j);
}

inline std::string render(const CubicTheorem& thm, Format format) {
  std::ostringstream os;
  const std::string rhs_text =
      thm.c.get_str() + (thm.rhs_kind == Pattern::Alternating ? "*(-1)^n" : "");
  switch (format) {
    case Format::Json:
      return theorem_to_json(thm).dump(2);
    case Format::Text: {
      const std::array<std::string, 3> names{"A", "B", "C"};
      os << "Theorem. Define integer sequences by their generating functions\n";
      for (std::size_t i = 0; i < 3; ++i) os << "  sum " << names[i] << "(n)*t^n = " << thm.gfs[i].to_string() << "\n";
      os << "Then for every n >= 0:\n  "
         << detail::equation_lhs(thm, {"A(n)^3", "B(n)^3", "C(n)^3"}) << " = " << rhs_text << "\n";
      os << "Certified by checking n = 0.." << (thm.certificate.bound == 0 ? 0 : thm.certificate.bound - 1)
         << " (depth " << thm.certificate.bound << ").\n";
      return os.str();
    }
    case Format::Latex: {
      const std::array<std::string, 3> names{"a", "b", "c"};
      os << "\\begin{theorem}\nDefine sequences of integers $a_n, b_n, c_n$ by\n\\[\n";
      for (std::size_t i = 0; i < 3; ++i) {
        os << "  \\sum_{n\\ge 0} " << names[i] << "_n t^n = \\frac{" << detail::latex_poly(thm.gfs[i].num()) << "}{"
           << detail::latex_poly(thm.gfs[i].den()) << "}" << (i < 2 ? ", \\quad\n" : ".\n");
      }
      os << "\\]\nThen for all $n \\ge 0$,\n\\[\n  "
         << detail::equation_lhs(thm, {"a_n^3", "b_n^3", "c_n^3"}) << " = " << thm.c.get_str()
         << (thm.rhs_kind == Pattern::Alternating ? "(-1)^n" : "") << ".\n\\]\n\\end{theorem}\n";
      std::string s = os.str();
      for (std::size_t pos; (pos = s.find('*')) != std::string::npos;) s.erase(pos, 1);
      return s;
    }
  }
  return {};
}

}  // namespace cubicforge
