#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests drive it in-process with string streams.
//
// Exit codes: 0 at least one certified result printed, 1 clean no-result
// (nothing found, or a theorem refuted), 2 bad input, 3 internal invariant
// violation.

#include <array>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubicforge/concoct.hpp"
#include "cubicforge/errors.hpp"
#include "cubicforge/forge.hpp"
#include "cubicforge/quadform.hpp"
#include "cubicforge/serialize.hpp"
#include "cubicforge/text.hpp"

namespace cubicforge::cli {

enum ExitCode : int { Ok = 0, NoResult = 1, BadInput = 2, Internal = 3 };

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NoOrbitFound:
    case Errc::NoForm:
    case Errc::NoTargetedForm:
    case Errc::GuessFailed:
    case Errc::EliminationCollapse:
      return NoResult;
    case Errc::InvariantViolation:
      return Internal;
    default:
      return BadInput;
  }
}

namespace detail {

inline std::vector<Integer> parse_integer_list(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    Integer x;
    if (b == std::string::npos || x.set_str(item.substr(b, e - b + 1), 10) != 0) {
      fail(Errc::InvalidArgument, what + ": '" + item + "' is not an integer");
    }
    out.push_back(x);
  }
  return out;
}

inline Integer parse_integer(const std::string& text, const std::string& what) {
  const auto v = parse_integer_list(text, what);
  if (v.size() != 1) fail(Errc::InvalidArgument, what + " expects one integer");
  return v.front();
}

/// "num;den" with ascending comma-separated coefficients, e.g. "1,53,9;1,-82,-82,1".
inline RationalGF parse_gf(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos) {
    fail(Errc::InvalidArgument, "generating function '" + text + "' must look like \"num;den\"");
  }
  return RationalGF::make(parse_integer_list(text.substr(0, semi), "numerator"),
                          parse_integer_list(text.substr(semi + 1), "denominator"));
}

/// "a,b,c;d,e,f;g,h,i".
inline std::array<std::array<Integer, 3>, 3> parse_matrix(const std::string& text) {
  std::array<std::array<Integer, 3>, 3> m;
  std::stringstream ss(text);
  std::string row;
  std::size_t r = 0;
  while (std::getline(ss, row, ';')) {
    if (r == 3) fail(Errc::InvalidArgument, "matrix needs exactly three rows");
    const auto v = parse_integer_list(row, "matrix row " + std::to_string(r + 1));
    if (v.size() != 3) fail(Errc::InvalidArgument, "matrix row " + std::to_string(r + 1) + " needs three entries");
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = v[c];
    ++r;
  }
  if (r != 3) fail(Errc::InvalidArgument, "matrix needs exactly three rows");
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidArgument, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::InvalidArgument, what + ": " + e.what());
  }
}

inline std::vector<WeightedQuadruple> parse_seed_file(const std::string& path, const Integer& a, const Integer& b) {
  const auto j = parse_json(read_file(path), path);
  if (!j.is_array()) fail(Errc::InvalidArgument, path + ": expected an array of [x, y, z, w] quadruples");
  std::vector<WeightedQuadruple> seeds;
  for (const auto& q : j) {
    const auto v = json_io::to_integers(q);
    if (v.size() != 4) fail(Errc::InvalidArgument, path + ": quadruples need four coordinates");
    seeds.emplace_back(a, b, std::array<Integer, 4>{v[0], v[1], v[2], v[3]});
  }
  return seeds;
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  return Format::Text;
}

inline std::string orbit_text(const QuadForm& form, const PellOrbit& o) {
  std::ostringstream os;
  os << "sum M(n)*t^n = " << o.gfM.to_string() << "\n"
     << "sum N(n)*t^n = " << o.gfN.to_string() << "\n"
     << form.to_poly("M(n)", "N(n)").to_string() << " = " << o.target.get_str()
     << (o.kind == Pattern::Alternating ? "*(-1)^n" : "") << " for every n >= 0 (depth " << o.certificate.bound
     << ")\n";
  return os.str();
}

inline std::string form_text(const FormResult& r) {
  std::ostringstream os;
  os << r.form.to_string() << " = ";
  if (r.homogeneous_vanishing) {
    os << "0";
  } else {
    os << r.C.get_str() << (r.target == FormTarget::Alternating ? "*(-1)^n" : "");
  }
  os << " on the sequences (depth " << r.certificate.bound << ")\n";
  return os.str();
}

}  // namespace detail

/// Runs one command line. Results go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discover and certify C-finite solution families of cubic Diophantine equations", "cubicforge"};
  app.require_subcommand(1);

  struct {
    std::string a = "1", b = "1";
    long search_bound = 12;
    std::size_t guess_order = 4;
    long target_cap = 30;
    std::size_t max_theorems = 10;
    std::string format = "text";
    std::string seed_file;
  } forge_args;
  auto* forge_cmd = app.add_subcommand("forge", "Search seeds for a*X^3 + a*Y^3 + b*Z^3 + b*W^3 = 0 and forge theorems");
  forge_cmd->add_option("--a", forge_args.a, "Weight a")->required();
  forge_cmd->add_option("--b", forge_args.b, "Weight b")->required();
  forge_cmd->add_option("--search-bound", forge_args.search_bound, "Seed coordinate bound")->capture_default_str();
  forge_cmd->add_option("--guess-order", forge_args.guess_order, "Largest recurrence order to guess")
      ->capture_default_str();
  forge_cmd->add_option("--target-cap", forge_args.target_cap, "Largest |e| scanned for quadratic targets")
      ->capture_default_str();
  forge_cmd->add_option("--max-theorems", forge_args.max_theorems, "Stop after this many theorems")
      ->capture_default_str();
  forge_cmd->add_option("--format", forge_args.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  forge_cmd->add_option("--seed-file", forge_args.seed_file, "JSON array of extra [x, y, z, w] seeds");

  struct {
    std::string form;
    std::size_t guess_order = 4;
    long bound = 2000;
    long target_cap = 30;
    std::string kind = "constant";
    std::string format = "json";
  } pell_args;
  auto* pell_cmd = app.add_subcommand("pell", "Find a C-finite orbit of a binary quadratic form in m, n");
  pell_cmd->add_option("--form", pell_args.form, "Form in m and n, e.g. \"m^2 - 2*n^2\"")->required();
  pell_cmd->add_option("--guess-order", pell_args.guess_order, "Largest recurrence order to guess")
      ->capture_default_str();
  pell_cmd->add_option("--bound", pell_args.bound, "Brute-force coordinate bound")->capture_default_str();
  pell_cmd->add_option("--target-cap", pell_args.target_cap, "Largest |e| scanned")->capture_default_str();
  pell_cmd->add_option("--kind", pell_args.kind, "Required value pattern")
      ->check(CLI::IsMember({"any", "constant", "alternating"}))
      ->capture_default_str();
  pell_cmd->add_option("--format", pell_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::array<std::string, 3> elim_args;
  auto* elim_cmd = app.add_subcommand("eliminate", "Implicit equation S(x, y, z) = 0 of x = P, y = Q, z = R in m, n");
  elim_cmd->add_option("--x", elim_args[0], "P(m, n)")->required();
  elim_cmd->add_option("--y", elim_args[1], "Q(m, n)")->required();
  elim_cmd->add_option("--z", elim_args[2], "R(m, n)")->required();

  std::string twist_matrix, twist_base = "x^3 + y^3 + z^3";
  auto* twist_cmd = app.add_subcommand("twist", "Expand F(M*(x, y, z)) for a nonsingular integer matrix M");
  twist_cmd->add_option("--matrix", twist_matrix, "Rows a,b,c;d,e,f;g,h,i")->required();
  twist_cmd->add_option("--base", twist_base, "Base form F(x, y, z)")->capture_default_str();

  struct {
    unsigned degree = 2;
    std::string target = "constant";
    std::vector<std::string> gfs;
    std::string format = "text";
  } form_args;
  auto* form_cmd = app.add_subcommand("findform", "Homogeneous form that is constant or alternating on sequences");
  form_cmd->add_option("--degree", form_args.degree, "Form degree")->required();
  form_cmd->add_option("--target", form_args.target, "Value pattern")
      ->check(CLI::IsMember({"constant", "alternating", "none"}))
      ->capture_default_str();
  form_cmd->add_option("--gf", form_args.gfs, "Generating function \"num;den\" (repeat per sequence)")->required();
  form_cmd->add_option("--format", form_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Re-certify theorems from a JSON file (object or array)");
  verify_cmd->add_option("--file", verify_file, "Theorem JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : BadInput;
  }

  try {
    if (*forge_cmd) {
      const Integer a = detail::parse_integer(forge_args.a, "--a");
      const Integer b = detail::parse_integer(forge_args.b, "--b");
      ForgeOptions opts;
      opts.search_bound = forge_args.search_bound;
      opts.guess_order = forge_args.guess_order;
      opts.target_cap = forge_args.target_cap;
      opts.max_theorems = forge_args.max_theorems;
      if (!forge_args.seed_file.empty()) opts.extra_seeds = detail::parse_seed_file(forge_args.seed_file, a, b);
      const auto result = forge(a, b, opts);
      for (const auto& d : result.diagnostics) err << d << "\n";
      if (result.theorems.empty()) return NoResult;
      const auto format = detail::parse_format(forge_args.format);
      if (format == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : result.theorems) arr.push_back(theorem_to_json(t));
        out << arr.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < result.theorems.size(); ++i) {
          if (i != 0) out << "\n";
          out << render(result.theorems[i], format);
        }
      }
      return Ok;
    }

    if (*pell_cmd) {
      const QuadForm form = QuadForm::from_poly(parse_poly(pell_args.form, {"m", "n"}));
      SolQuadOptions opts;
      opts.guess_order = pell_args.guess_order;
      opts.bound = pell_args.bound;
      opts.target_cap = pell_args.target_cap;
      opts.kind = pell_args.kind == "constant"      ? TargetKind::Constant
                  : pell_args.kind == "alternating" ? TargetKind::Alternating
                                                    : TargetKind::Any;
      const auto orbit = sol_quad(form, opts);
      if (pell_args.format == "json") {
        auto j = orbit_to_json(orbit);
        j["form"] = form.to_string();
        out << j.dump(2) << "\n";
      } else {
        out << detail::orbit_text(form, orbit);
      }
      return Ok;
    }

    if (*elim_cmd) {
      std::array<MultiPoly, 3> params;
      for (std::size_t i = 0; i < 3; ++i) params[i] = parse_poly(elim_args[i], {"m", "n"});
      out << implicitize(params[0], params[1], params[2]).to_string() << " = 0\n";
      return Ok;
    }

    if (*twist_cmd) {
      const auto m = detail::parse_matrix(twist_matrix);
      out << twist_no_solution(parse_poly(twist_base, {"x", "y", "z"}), m).to_string() << " = 0\n";
      return Ok;
    }

    if (*form_cmd) {
      std::vector<RationalGF> gfs;
      for (const auto& g : form_args.gfs) gfs.push_back(detail::parse_gf(g));
      const FormTarget target = form_args.target == "alternating" ? FormTarget::Alternating
                                : form_args.target == "none"      ? FormTarget::None
                                                                  : FormTarget::Constant;
      try {
        const auto r = find_form(gfs, form_args.degree, target);
        if (form_args.format == "json") {
          out << form_to_json(r).dump(2) << "\n";
        } else {
          out << detail::form_text(r);
        }
        return Ok;
      } catch (const NoTargetedFormError& e) {
        err << e.what() << "\n";
        for (const auto& v : e.vanishing_forms()) err << "  vanishing: " << v.form.to_string() << " = 0\n";
        return NoResult;
      }
    }

    if (*verify_cmd) {
      const auto j = detail::parse_json(detail::read_file(verify_file), verify_file);
      std::vector<nlohmann::json> items;
      if (j.is_array()) {
        items.assign(j.begin(), j.end());
      } else {
        items.push_back(j);
      }
      if (items.empty()) fail(Errc::MalformedTheorem, "no theorems in '" + verify_file + "'");
      bool all = true;
      for (const auto& item : items) {
        const auto thm = theorem_from_json(item);
        const auto cert = certify_theorem(thm);
        if (cert.certified()) {
          out << "certified, depth " << cert.bound << "\n";
        } else {
          all = false;
          out << "refuted at n = " << (cert.witness ? std::to_string(*cert.witness) : std::string("?")) << " (depth "
              << cert.bound << ")\n";
        }
      }
      return all ? Ok : NoResult;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "InvariantViolation: " << e.what() << "\n";
    return Internal;
  }
  return BadInput;
}

}  // namespace cubicforge::cli
