#pragma once

#include "riesz/group.hpp"
#include "riesz/series.hpp"

#include <span>
#include <vector>

namespace riesz {

struct CheckResult {
  cplx lhs;
  cplx rhs;
  bool passed = false;
  double tolerance_used = 0.0;
  double error = 0.0;
};

// --- Perron kernel -------------------------------------------------------

/// e^{y alpha} Gamma(k+1) / (pi k T^k): bound on the discarded tails |t| > T.
double perron_tail_bound(double k, double y, double alpha, double half_width);

/// Smallest T whose tail bound is at most `budget`.
double perron_truncation(double k, double y, double alpha, double budget);

/// Gamma(k+1)/(2 pi i) int_{alpha - iT}^{alpha + iT} e^{ys} s^{-1-k} ds against
/// y^k [y >= 0]. Throws InfeasibleError when the tail bound at T exceeds tol.
CheckResult perron_kernel_check(double k, double y, double alpha, double half_width, double tol);

// --- Poisson kernel bound ------------------------------------------------

/// Right-hand side of the bound; the u = 0 form is 2 / |v + ia|^{1+k}.
double kernel_bound_rhs(double u, double v, double a, double k);

/// int P_{u+v}(t - a) / |v + it|^{1+k} dt by adaptive quadrature against the bound.
CheckResult kernel_bound_check(double u, double v, double a, double k);

// --- Fourier-transform representation of first Riesz means ---------------

CheckResult ft_representation_check(const DirichletPolynomial& d, const GroupRealization& g,
                                     const GroupPoint& omega, double k, double u, double x,
                                     double quad_tol);

// --- Abel-type inequality ------------------------------------------------

struct AbelProbe {
  double max_ratio = 0.0;
  std::vector<double> member_max_ratio;
  bool grid_artifact = false; // RHS vanished on the grid while LHS did not
};

AbelProbe abel_inequality_probe(std::span<const DirichletPolynomial> family, double k, double u,
                                double eps, std::span<const double> x_grid);

/// Single ratio LHS(x) / RHS(x) with the RHS sup over 256 points in (0, x].
double abel_ratio(const DirichletPolynomial& d, double k, double u, double eps, double x);

// --- Second Riesz means in H_1 -------------------------------------------

enum class TestKernel {
  shifted_fejer,  // e^{ixt} times the Fejer kernel of order x: coefficients 1 - |n - x|/x
  one_sided_fejer // coefficients 1 - n/(2x), n < 2x
};

struct GrowthPoint {
  double x;
  double second_ratio;
  double first_ratio;
};

struct GrowthProbe {
  std::vector<GrowthPoint> points;
  double slope_vs_logx = 0.0;
};

/// L1 norm on the circle of sum c_n e^{int} by the equispaced rule.
double circle_l1_norm(std::span<const cplx> coefficients, std::size_t grid_points);

/// Applies second-mean weights (1 - e^{n-x}) and first-mean weights (1 - n/x)
/// to a unit-L1 analytic test polynomial for each x.
GrowthProbe second_means_growth_probe(std::span<const int> x_grid, std::size_t grid_points,
                                      TestKernel kernel = TestKernel::shifted_fejer);

} // namespace riesz
