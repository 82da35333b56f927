#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/linalg.hpp"
#include "cubicforge/kernel/multipoly.hpp"

namespace cubicforge {

/// Sylvester matrix of p and q with respect to `var`; entries live over the
/// merged variable list with `var` removed.
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& p, const MultiPoly& q,
                                                            std::string_view var) {
  auto vars = MultiPoly::merge_variables(p.variables(), q.variables());
  if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.emplace_back(var);
  const MultiPoly pu = p.with_variables(vars);
  const MultiPoly qu = q.with_variables(vars);
  const int dp = pu.degree_in(var);
  const int dq = qu.degree_in(var);
  if (dp <= 0 || dq <= 0) {
    fail(Errc::DegenerateInput, "resultant needs positive degree in '" + std::string(var) + "'");
  }
  const auto pc = pu.coefficients_in(var);
  const auto qc = qu.coefficients_in(var);
  const MultiPoly zero(pc.front().variables());
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, zero));
  for (int r = 0; r < dq; ++r) {
    for (int i = 0; i <= dp; ++i) s[r][r + i] = pc[dp - i];
  }
  for (int r = 0; r < dp; ++r) {
    for (int i = 0; i <= dq; ++i) s[dq + r][r + i] = qc[dq - i];
  }
  return s;
}

/// Sylvester resultant of p and q with respect to `var`.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  auto s = sylvester_matrix(p, q, var);
  const auto vars = s.front().front().variables();
  return bareiss_determinant(std::move(s), MultiPoly::constant(vars, 1), MultiPoly(vars));
}

}  // namespace cubicforge
