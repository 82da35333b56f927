#pragma once

// Dense evaluation/interpolation for determinants of polynomial matrices.
// Symbolic fraction-free elimination over several variables swells quickly;
// evaluating at a tensor grid modulo word primes and interpolating back does
// not.

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/modular.hpp"
#include "cubicforge/kernel/multipoly.hpp"
#include "cubicforge/kernel/resultant.hpp"

namespace cubicforge {

/// Per-variable degree bound of det(m): every Leibniz term takes one entry
/// per row and one per column, so both the sum of row maxima and the sum of
/// column maxima bound the degree.
inline std::vector<unsigned> determinant_degree_bounds(const std::vector<std::vector<MultiPoly>>& m) {
  if (m.empty()) return {};
  const auto& vars = m.front().front().variables();
  std::vector<unsigned> bounds(vars.size(), 0);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    unsigned by_rows = 0, by_cols = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      int row_best = 0, col_best = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        row_best = std::max(row_best, m[i][j].degree_in(vars[v]));
        col_best = std::max(col_best, m[j][i].degree_in(vars[v]));
      }
      by_rows += static_cast<unsigned>(row_best);
      by_cols += static_cast<unsigned>(col_best);
    }
    bounds[v] = std::min(by_rows, by_cols);
  }
  return bounds;
}

/// Interpolation nodes 0, 1, -1, 2, -2, ... keep evaluations small.
inline long interpolation_node(std::size_t i) {
  const long k = static_cast<long>((i + 1) / 2);
  return i % 2 == 1 ? k : -k;
}

/// Determinant of a matrix of integer polynomials. Coefficients are bounded
/// by the product of row sums of entry 1-norms; modulo enough word primes the
/// determinant is evaluated on a tensor grid sized from
/// determinant_degree_bounds, interpolated one axis at a time, and the
/// coefficients are recovered by Chinese remaindering.
inline MultiPoly determinant_by_interpolation(const std::vector<std::vector<MultiPoly>>& m) {
  namespace mod = modular;
  if (m.empty()) fail(Errc::InvalidArgument, "determinant of an empty matrix");
  const std::size_t n = m.size();
  const auto vars = m.front().front().variables();
  const auto bounds = determinant_degree_bounds(m);
  const std::size_t nv = vars.size();
  std::vector<std::size_t> dims(nv), stride(nv);
  std::size_t total = 1;
  for (std::size_t v = nv; v-- > 0;) {
    dims[v] = bounds[v] + 1;
    stride[v] = total;
    total *= dims[v];
  }
  Integer coefficient_bound = 1;
  for (const auto& row : m) {
    Integer s = 0;
    for (const auto& e : row) s += mod::norm1(e);
    coefficient_bound *= s;
  }
  if (sgn(coefficient_bound) == 0) return MultiPoly(vars);

  // Structured matrices (Sylvester) repeat a few entries many times; each
  // distinct entry is evaluated once per point.
  std::vector<const MultiPoly*> distinct;
  std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = std::find_if(distinct.begin(), distinct.end(), [&](const MultiPoly* d) { return *d == m[i][j]; });
      slot[i][j] = static_cast<std::size_t>(it - distinct.begin());
      if (it == distinct.end()) distinct.push_back(&m[i][j]);
    }
  }

  std::size_t max_dim = 0;
  for (auto d : dims) max_dim = std::max(max_dim, d);
  mod::CrtAccumulator crt(total);
  for (const auto p : mod::primes_for_bound(coefficient_bound)) {
    std::vector<mod::ModPoly> entries;
    for (const auto* d : distinct) entries.emplace_back(*d, p);
    std::vector<mod::u64> nodes(max_dim);
    for (std::size_t i = 0; i < max_dim; ++i) nodes[i] = mod::reduce(interpolation_node(i), p);

    std::vector<mod::u64> grid(total), point(nv), values(entries.size());
    std::vector<std::vector<mod::u64>> numeric(n, std::vector<mod::u64>(n));
    for (std::size_t flat = 0; flat < total; ++flat) {
      for (std::size_t v = 0; v < nv; ++v) point[v] = nodes[flat / stride[v] % dims[v]];
      for (std::size_t d = 0; d < entries.size(); ++d) values[d] = entries[d](point);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) numeric[i][j] = values[slot[i][j]];
      }
      grid[flat] = mod::determinant(numeric, p);
    }
    // Along each axis, node values become monomial coefficients.
    const mod::Interpolator interpolate(nodes, p);
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<mod::u64> line(dims[v]);
      for (std::size_t flat = 0; flat < total; ++flat) {
        if (flat / stride[v] % dims[v] != 0) continue;
        for (std::size_t i = 0; i < dims[v]; ++i) line[i] = grid[flat + i * stride[v]];
        const auto coeffs = interpolate(line);
        for (std::size_t i = 0; i < dims[v]; ++i) grid[flat + i * stride[v]] = coeffs[i];
      }
    }
    crt.add_residues(grid, p);
  }

  const auto coeffs = crt.symmetric();
  MultiPoly det(vars);
  std::vector<unsigned> exps(nv);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (sgn(coeffs[flat]) == 0) continue;
    for (std::size_t v = 0; v < nv; ++v) exps[v] = static_cast<unsigned>(flat / stride[v] % dims[v]);
    det.add_term(MultiPoly::make_key(exps), coeffs[flat]);
  }
  return det;
}

/// Same value as resultant(); preferable when the coefficients involve
/// several variables and the Sylvester matrix is large.
inline MultiPoly resultant_by_interpolation(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  return determinant_by_interpolation(sylvester_matrix(p, q, var));
}

/// Number of grid points determinant_by_interpolation would evaluate.
inline std::size_t interpolation_grid_size(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  std::size_t total = 1;
  for (auto b : determinant_degree_bounds(sylvester_matrix(p, q, var))) total *= b + 1;
  return total;
}

}  // namespace cubicforge
