#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace riesz {

using cplx = std::complex<double>;

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
  void add(cplx v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }
  cplx value() const noexcept { return {re_.value(), im_.value()}; }

private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Geometric grid of `points` values ending at `x_max`, consecutive ratio `ratio`.
std::vector<double> geometric_grid(double x_max, std::size_t points = 32, double ratio = 1.3);

/// Geometric grid with both endpoints fixed.
std::vector<double> geometric_span(double lo, double hi, std::size_t points);

std::vector<double> linear_span(double lo, double hi, std::size_t points);

/// Ordinary least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

// Gauss-Legendre rule on [-1, 1] expanded to the full node set.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// The 10-point rule used for all composite panel quadrature.
const GaussRule& gauss_legendre_10();

/// Composite Gauss-Legendre over [a, b] split into `panels` equal panels.
cplx composite_gauss(const std::function<cplx(double)>& f, double a, double b, std::size_t panels);
double composite_gauss_real(const std::function<double(double)>& f, double a, double b,
                            std::size_t panels);

// Nodes and weights of the composite rule, for integrands evaluated in bulk.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureGrid composite_gauss_grid(double a, double b, std::size_t panels);

struct AdaptiveResult {
  cplx value;
  double error_estimate = 0.0;
  bool converged = false;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b] with relative tolerance `tol`.
AdaptiveResult adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                                  double tol, unsigned max_depth = 25);

/// Same, split at the supplied interior breakpoints (kinks of the integrand).
AdaptiveResult adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                                  std::span<const double> breakpoints, double tol,
                                  unsigned max_depth = 25);

/// z^m for unimodular z with renormalisation to |z| = 1 every 32 multiplications.
cplx unimodular_pow(cplx z, long long m);

/// (1 - r)^k for 0 <= r < 1, accurate near r -> 1.
double one_minus_pow(double r, double k);

} // namespace riesz
