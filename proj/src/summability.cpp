#include "riesz/summability.hpp"

#include "riesz/error.hpp"

#include <algorithm>
#include <cmath>

namespace riesz {

ConvergenceReport convergence_from_values(std::vector<double> x_grid, std::vector<cplx> values,
                                          double tol) {
  if (x_grid.size() != values.size()) {
    throw ValidationError("convergence: grid and values differ in length");
  }
  if (x_grid.size() < 8) {
    throw ValidationError("convergence detection needs at least 8 grid points");
  }
  if (!(tol > 0.0)) {
    throw ValidationError("convergence tolerance must be positive");
  }
  for (std::size_t i = 1; i < x_grid.size(); ++i) {
    if (!(x_grid[i] > x_grid[i - 1])) {
      throw ValidationError("x grid must be strictly increasing");
    }
  }
  ConvergenceReport report;
  const std::size_t n = values.size();
  const std::size_t top = std::max<std::size_t>(2, (n + 3) / 4);
  const std::size_t start = n - top;
  double residual = 0.0;
  CompensatedComplexSum mean;
  for (std::size_t i = start; i < n; ++i) {
    mean.add(values[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      residual = std::max(residual, std::abs(values[i] - values[j]));
    }
  }
  report.cauchy_residual = residual;
  report.converged = residual <= tol;
  if (report.converged) {
    report.limit = mean.value() / static_cast<double>(top);
  }
  report.x_grid = std::move(x_grid);
  report.values = std::move(values);
  return report;
}

ConvergenceReport detect_riesz_limit(const DirichletPolynomial& d, RieszKind kind, double k,
                                     cplx s0, std::span<const double> x_grid, double tol) {
  std::vector<cplx> values;
  values.reserve(x_grid.size());
  for (double x : x_grid) {
    values.push_back(riesz_mean(d, {kind, k, x}, s0));
  }
  return convergence_from_values({x_grid.begin(), x_grid.end()}, std::move(values), tol);
}

namespace {

ConsistencyResult compare_runs(ConvergenceReport hypothesis, ConvergenceReport conclusion,
                               double tol) {
  ConsistencyResult out;
  out.hypothesis = std::move(hypothesis);
  out.conclusion = std::move(conclusion);
  out.inconclusive = !out.hypothesis.converged;
  if (out.inconclusive) {
    return out;
  }
  if (!out.conclusion.converged) {
    // hypothesis stabilised but the conclusion did not: reported, not hidden
    out.agree = false;
    out.difference = out.conclusion.cauchy_residual;
    return out;
  }
  out.difference = std::abs(*out.hypothesis.limit - *out.conclusion.limit);
  // each limit is pinned to within tol by its own residual test
  out.agree = out.difference <= 2.0 * tol;
  return out;
}

} // namespace

ConsistencyResult consistency_first(const DirichletPolynomial& d, double k, double ell, cplx s0,
                                    std::span<const double> x_grid, double tol) {
  if (!(ell > k)) {
    throw ValidationError("consistency_first needs ell > k");
  }
  return compare_runs(detect_riesz_limit(d, RieszKind::first, k, s0, x_grid, tol),
                      detect_riesz_limit(d, RieszKind::first, ell, s0, x_grid, tol), tol);
}

ConsistencyResult consistency_second(const DirichletPolynomial& d, double k, cplx s0,
                                     std::span<const double> x_grid, double tol) {
  return compare_runs(detect_riesz_limit(d, RieszKind::second, k, s0, x_grid, tol),
                      detect_riesz_limit(d, RieszKind::first, k, s0, x_grid, tol), tol);
}

std::vector<TailPoint> tail_decay_check(const DirichletPolynomial& d, double k, cplx limit,
                                        std::size_t first, std::size_t last) {
  if (first == 0 || last < first || last + 1 > d.size()) {
    throw ValidationError("tail_decay_check: window must satisfy 1 <= first <= last < N");
  }
  const auto lam = d.frequency().values();
  const auto a = d.coefficients();
  std::vector<TailPoint> out;
  CompensatedComplexSum partial;
  for (std::size_t n = 1; n <= last; ++n) {
    partial.add(a[n - 1]);
    if (n < first) {
      continue;
    }
    const double next = lam[n];
    if (next == 0.0) {
      continue;
    }
    const double factor = std::pow((next - lam[n - 1]) / next, k);
    out.push_back({n, factor * std::abs(partial.value() - limit)});
  }
  return out;
}

std::pair<double, double> split_order(double k) {
  const double k_low = k - std::ceil(k) + 1.0;
  return {k - k_low, k_low};
}

OrderReduction order_reduction_eval(const DirichletPolynomial& d, double k, double x, cplx s,
                                    double quadrature_tol) {
  if (!(k > 1.0)) {
    throw ValidationError("order reduction needs k > 1");
  }
  if (!(x > 0.0) || !(quadrature_tol > 0.0)) {
    throw ValidationError("order reduction needs x > 0 and a positive tolerance");
  }
  OrderReduction out;
  const auto [l, k_low] = split_order(k);
  out.l = l;
  out.k_low = k_low;
  out.direct = riesz_mean(d, RieszParams::first(k, x), s);

  // pieces between consecutive frequencies; on each the newest term behaves
  // like (t - c)^{k'} at the left end, flattened by t = c + h r^4
  std::vector<double> cuts{0.0};
  for (double v : d.frequency().values()) {
    if (v > 0.0 && v < x) {
      cuts.push_back(v);
    }
  }
  cuts.push_back(x);
  constexpr double m = 4.0;
  AdaptiveResult integral{cplx{}, 0.0, true};
  CompensatedComplexSum total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double c = cuts[i];
    const double h = cuts[i + 1] - c;
    auto integrand = [&, l = l, k_low = k_low](double r) -> cplx {
      const double t = c + h * std::pow(r, m);
      if (t <= 0.0) {
        return {};
      }
      const cplx mean = riesz_mean(d, RieszParams::first(k_low, t), s);
      const double jacobian = h * m * std::pow(r, m - 1.0);
      return mean * std::pow(t, k_low) * std::pow(x - t, l - 1.0) * jacobian;
    };
    const auto piece = adaptive_integrate(integrand, 0.0, 1.0, quadrature_tol);
    total.add(piece.value);
    integral.error_estimate += piece.error_estimate;
    integral.converged = integral.converged && piece.converged;
  }
  integral.value = total.value();
  const double log_norm = std::lgamma(k + 1.0) - std::lgamma(l) - std::lgamma(k_low + 1.0) -
                          k * std::log(x);
  const double norm = std::exp(log_norm);
  out.reduced = norm * integral.value;
  out.quadrature_error_estimate = norm * integral.error_estimate;
  out.quadrature_converged = integral.converged;
  out.error = std::abs(out.direct - out.reduced);
  return out;
}

AbscissaEstimate abscissa_uniform_riesz(const DirichletPolynomial& d, double k,
                                        std::span<const double> x_grid,
                                        std::span<const double> t_grid) {
  if (x_grid.size() < 4 || t_grid.empty()) {
    throw ValidationError("abscissa estimate needs >= 4 x points and a nonempty t grid");
  }
  AbscissaEstimate out;
  out.per_x_norms.reserve(x_grid.size());
  for (double x : x_grid) {
    const auto coeffs = riesz_coefficients(d, RieszParams::first(k, x));
    double sup = 0.0;
    for (double t : t_grid) {
      sup = std::max(sup, std::abs(evaluate(coeffs, cplx{0.0, t})));
    }
    out.per_x_norms.push_back(sup);
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = x_grid.size() / 2; i < x_grid.size(); ++i) {
    if (out.per_x_norms[i] > 0.0) {
      xs.push_back(x_grid[i]);
      ys.push_back(std::log(out.per_x_norms[i]));
    }
  }
  out.slope = xs.size() >= 2 ? least_squares_slope(xs, ys) : 0.0;
  return out;
}

} // namespace riesz
