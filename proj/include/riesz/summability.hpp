#pragma once

#include "riesz/series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace riesz {

struct ConvergenceReport {
  std::optional<cplx> limit;
  bool converged = false;
  std::vector<double> x_grid;
  std::vector<cplx> values;
  double cauchy_residual = 0.0;
};

/// Riesz means on x_grid; converged when the largest pairwise distance
/// among the top-quartile values is within tol. The limit is their mean.
ConvergenceReport detect_riesz_limit(const DirichletPolynomial& d, RieszKind kind, double k,
                                     cplx s0, std::span<const double> x_grid, double tol);

/// Same test applied to precomputed values on a grid.
ConvergenceReport convergence_from_values(std::vector<double> x_grid, std::vector<cplx> values,
                                          double tol);

struct ConsistencyResult {
  ConvergenceReport hypothesis;
  ConvergenceReport conclusion;
  /// The hypothesis run did not stabilise; nothing can be said.
  bool inconclusive = true;
  bool agree = false;
  double difference = 0.0;
};

/// (l, k)-summable implies (l, ell)-summable with the same limit, ell >= k.
ConsistencyResult consistency_first(const DirichletPolynomial& d, double k, double ell, cplx s0,
                                    std::span<const double> x_grid, double tol);

/// (e^l, k)-summable (computed as second means) implies (l, k)-summable.
ConsistencyResult consistency_second(const DirichletPolynomial& d, double k, cplx s0,
                                     std::span<const double> x_grid, double tol);

struct TailPoint {
  std::size_t index; // N
  double value;      // |((l_{N+1} - l_N)/l_{N+1})^k (sum_{n<=N} a_n - C)|
};

/// Tail quantities for N in [first, last] (1-based, last + 1 <= size).
std::vector<TailPoint> tail_decay_check(const DirichletPolynomial& d, double k, cplx limit,
                                        std::size_t first, std::size_t last);

struct OrderReduction {
  cplx direct;
  cplx reduced;
  double error = 0.0;
  double quadrature_error_estimate = 0.0;
  bool quadrature_converged = false;
  double k_low = 0.0; // k' in (0, 1]
  double l = 0.0;     // integer part, k = l + k'
};

/// Splits k = l + k' with k' = k - ceil(k) + 1.
std::pair<double, double> split_order(double k);

/// R_x^k computed directly and through the Hardy-Riesz integral over R_t^{k'}.
OrderReduction order_reduction_eval(const DirichletPolynomial& d, double k, double x, cplx s,
                                    double quadrature_tol);

struct AbscissaEstimate {
  double slope = 0.0;
  std::vector<double> per_x_norms;
};

/// per_x_norms[j] = max over t_grid of |R_{x_j}^{k}(D)(it)|; slope of
/// log(norm) against x over the upper half of the grid.
AbscissaEstimate abscissa_uniform_riesz(const DirichletPolynomial& d, double k,
                                        std::span<const double> x_grid,
                                        std::span<const double> t_grid);

} // namespace riesz
