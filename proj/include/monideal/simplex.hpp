#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "monideal/exponents.hpp"

namespace monideal {

/// Outcome of one scaled Newton-polyhedron feasibility query.
struct FeasibilityResult {
  bool feasible = false;
  /// One multiplier per generator, in generator order; empty when infeasible.
  std::vector<mpq_class> lambda;
  /// lcm of the lambda denominators (1 when infeasible). Clearing this
  /// denominator turns the multipliers into an integral dependence relation.
  mpz_class denominator = 1;
};

/// Decides, in exact rational arithmetic, whether there exist lambda_i >= 0
/// with sum lambda_i = level and sum lambda_i * g_i <= target componentwise.
///
/// Formulation: maximize sigma = sum lambda_i subject to the d componentwise
/// rows and the cap row sigma <= level. The all-slack basis (lambda = 0) is
/// feasible, the cap row bounds the objective, and Bland's rule guarantees
/// termination, so the procedure is complete: the query is feasible iff the
/// optimum equals level. No floating point is involved anywhere.
inline FeasibilityResult scaled_feasibility(std::span<const ExponentVector> gens,
                                            const ExponentVector& target, Exp level) {
  if (level < 1) throw std::invalid_argument("feasibility level must be positive");
  FeasibilityResult res;
  const std::size_t k = gens.size();
  if (k == 0) return res;
  const int d = target.dim();
  for (const auto& g : gens)
    if (g.dim() != d) throw DimensionError("generator dimension does not match target");

  const std::size_t rows = static_cast<std::size_t>(d) + 1;
  const std::size_t cols = k + rows;  // lambdas, then one slack per row
  const std::size_t width = cols + 1;

  // Dense tableau, row-major; last column is the right-hand side and the
  // last row holds reduced costs with the objective value in its RHS cell.
  std::vector<mpq_class> T((rows + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return T[i * width + j]; };

  for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
    for (std::size_t i = 0; i < k; ++i) at(j, i) = gens[i][static_cast<int>(j)];
    at(j, k + j) = 1;
    at(j, cols) = target[static_cast<int>(j)];
  }
  for (std::size_t i = 0; i < k; ++i) at(d, i) = 1;
  at(d, k + static_cast<std::size_t>(d)) = 1;
  at(d, cols) = level;
  for (std::size_t i = 0; i < k; ++i) at(rows, i) = -1;

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = k + i;

  for (;;) {
    // Bland: entering column = lowest index with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(at(rows, j)) < 0) { enter = j; break; }
    if (enter == cols) break;

    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(at(i, enter)) <= 0) continue;
      mpq_class ratio = at(i, cols) / at(i, enter);
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows)
      throw std::logic_error("unbounded direction despite cap row");

    mpq_class piv = at(leave, enter);
    for (std::size_t j = 0; j <= cols; ++j)
      if (sgn(at(leave, j)) != 0) at(leave, j) /= piv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      mpq_class f = at(i, enter);
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        if (sgn(at(leave, j)) == 0) continue;
        at(i, j) -= f * at(leave, j);
      }
    }
    basis[leave] = enter;
  }

  if (at(rows, cols) != level) return res;

  res.feasible = true;
  res.lambda.assign(k, mpq_class(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < k) res.lambda[basis[i]] = at(i, cols);
  for (const auto& l : res.lambda)
    mpz_lcm(res.denominator.get_mpz_t(), res.denominator.get_mpz_t(),
            l.get_den().get_mpz_t());
  return res;
}

}  // namespace monideal
