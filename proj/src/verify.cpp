#include "riesz/verify.hpp"

#include "riesz/analysis.hpp"
#include "riesz/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace riesz {
namespace {

constexpr double kPi = std::numbers::pi;

// Integrates f over [a, b] on 10-point panels whose width starts at
// `start_width`, grows geometrically and never exceeds `max_width`.
template <class F>
auto graded_integral(F&& f, double a, double b, double start_width, double max_width) {
  using R = decltype(f(a));
  const auto& rule = gauss_legendre_10();
  R total{};
  R comp{};
  double lo = a;
  double width = std::min(start_width, max_width);
  while (lo < b) {
    const double hi = std::min(b, lo + width);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    R panel{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    // Kahan step on the running total
    const R term = half * panel - comp;
    const R next = total + term;
    comp = (next - total) - term;
    total = next;
    lo = hi;
    width = std::min(max_width, std::max(width, 0.25 * (lo - a)));
  }
  return total;
}

} // namespace

double perron_tail_bound(double k, double y, double alpha, double half_width) {
  return std::exp(y * alpha) * std::tgamma(k + 1.0) / (kPi * k * std::pow(half_width, k));
}

double perron_truncation(double k, double y, double alpha, double budget) {
  if (!(k > 0.0) || !(alpha > 0.0) || !(budget > 0.0)) {
    throw ValidationError("Perron truncation needs k > 0, alpha > 0 and a positive budget");
  }
  return std::pow(std::exp(y * alpha) * std::tgamma(k + 1.0) / (kPi * k * budget), 1.0 / k);
}

CheckResult perron_kernel_check(double k, double y, double alpha, double half_width, double tol) {
  if (!(k > 0.0) || !(alpha > 0.0) || !(half_width > 0.0) || !(tol > 0.0)) {
    throw ValidationError("Perron check needs k > 0, alpha > 0, T > 0 and tol > 0");
  }
  if (perron_tail_bound(k, y, alpha, half_width) > tol) {
    throw InfeasibleError("Perron check: truncation T = " + std::to_string(half_width) +
                          " cannot meet the tolerance; need T >= " +
                          std::to_string(perron_truncation(k, y, alpha, tol)));
  }
  const double scale = std::exp(y * alpha);
  const double expo = -(1.0 + k);
  // s = alpha + it and its mirror -t give complex conjugates, so only the
  // real part of the t >= 0 half is integrated
  auto integrand = [&](double t) {
    const double log_mod = 0.5 * std::log(alpha * alpha + t * t);
    const double arg = std::atan2(t, alpha);
    return scale * std::exp(expo * log_mod) * std::cos(y * t + expo * arg);
  };
  const double max_width = y != 0.0 ? 2.0 * kPi / std::abs(y) : half_width;
  const double integral = graded_integral(integrand, 0.0, half_width, 0.25 * alpha, max_width);

  CheckResult out;
  out.lhs = std::tgamma(k + 1.0) / kPi * integral;
  out.rhs = y >= 0.0 ? std::pow(y, k) : 0.0;
  out.tolerance_used = tol;
  out.error = std::abs(out.lhs - out.rhs);
  out.passed = out.error <= tol;
  return out;
}

double kernel_bound_rhs(double u, double v, double a, double k) {
  if (u == 0.0) {
    return 2.0 / std::pow(std::hypot(v, a), 1.0 + k);
  }
  return std::pow(2.0 + u / v, 0.5 * (1.0 + k)) / std::pow(std::hypot(u, a), 1.0 + k);
}

CheckResult kernel_bound_check(double u, double v, double a, double k) {
  if (!(u >= 0.0) || !(v > 0.0) || !(k > 0.0 && k <= 1.0)) {
    throw ValidationError("kernel bound check needs u >= 0, v > 0, 0 < k <= 1");
  }
  const double c = u + v;
  auto integrand = [&](double t) {
    const double d = t - a;
    return c / (kPi * (c * c + d * d)) * std::pow(v * v + t * t, -0.5 * (1.0 + k));
  };
  // geometric cuts around the two peaks: t = 0 (width v) and t = a (width c)
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cuts{-inf, 0.0, a, inf};
  for (const auto& [centre, width] : {std::pair{0.0, v}, std::pair{a, c}}) {
    for (double w = width; w < 1e7 * width; w *= 8.0) {
      cuts.push_back(centre - w);
      cuts.push_back(centre + w);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  CompensatedSum total;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double piece_error = 0.0;
    total.add(GK::integrate(integrand, cuts[i], cuts[i + 1], 15, 1e-12, &piece_error));
    error += piece_error;
  }
  const AdaptiveResult res{total.value(), error, error <= 1e-8 * total.value()};
  if (!res.converged) {
    throw QuadratureError("kernel bound check: quadrature did not converge");
  }
  CheckResult out;
  out.lhs = res.value.real();
  out.rhs = kernel_bound_rhs(u, v, a, k);
  out.tolerance_used = 1e-6;
  out.error = res.error_estimate;
  out.passed = out.lhs.real() <= out.rhs.real() * (1.0 + 1e-6);
  return out;
}

CheckResult ft_representation_check(const DirichletPolynomial& d, const GroupRealization& g,
                                     const GroupPoint& omega, double k, double u, double x,
                                     double quad_tol) {
  if (!(k > 0.0 && k <= 1.0) || !(u >= 0.0) || !(x > 0.0) || !(quad_tol > 0.0)) {
    throw ValidationError("representation check needs 0 < k <= 1, u >= 0, x > 0, tol > 0");
  }
  CheckResult out;
  out.lhs = riesz_mean(vertical_limit(poisson_translate(d, u), g, omega),
                       RieszParams::first(k, x), cplx{});

  const auto fw = vertical_limit(d, g, omega);
  const auto lam = fw.frequency().values();
  const auto b = fw.coefficients();
  const double c = u + 1.0 / x;
  double lam_max = 0.0;
  double gap_min = std::abs(x - lam[0]);
  for (double l : lam) {
    lam_max = std::max(lam_max, l);
    gap_min = std::min(gap_min, std::abs(x - l));
  }
  if (gap_min == 0.0) {
    throw QuadratureError("representation check: x coincides with a frequency value");
  }

  // Inner integral: Poisson convolution of each exponential, q_n = int P_c(y) e^{-i l_n y} dy,
  // integrated over |y| <= Y. f_omega * P_c then equals sum b_n q_n e^{-i l_n t}.
  const double inner_half = 1e5 * c;
  const double inner_period = lam_max > 0.0 ? 2.0 * kPi / lam_max : inner_half;
  std::vector<cplx> q(b.size());
  for (std::size_t n = 0; n < b.size(); ++n) {
    const double l = lam[n];
    q[n] = 2.0 * graded_integral(
                     [&](double y) { return poisson_kernel(c, y) * std::cos(l * y); }, 0.0,
                     inner_half, 0.25 * c, inner_period);
  }

  // Outer integral against e^{ixt} (1/x + it)^{-1-k}.
  const double outer_half = 2e4 / std::min(1.0, gap_min);
  double freq_max = 0.0;
  for (double l : lam) {
    freq_max = std::max(freq_max, std::abs(x - l));
  }
  const double outer_period = 2.0 * kPi / freq_max;
  const double expo = -(1.0 + k);
  const cplx kernel_base{1.0 / x, 0.0};
  auto outer = [&](double t) -> cplx {
    cplx h{};
    for (std::size_t n = 0; n < b.size(); ++n) {
      h += b[n] * q[n] * std::polar(1.0, (x - lam[n]) * t);
    }
    return h * std::pow(kernel_base + cplx{0.0, t}, expo);
  };
  const cplx integral = graded_integral(outer, 0.0, outer_half, 0.25 / x, outer_period) +
                        graded_integral([&](double t) { return outer(-t); }, 0.0, outer_half,
                                        0.25 / x, outer_period);
  out.rhs = std::tgamma(k + 1.0) * std::numbers::e / (2.0 * kPi * std::pow(x, k)) * integral;

  out.tolerance_used = std::max(1e-3, 10.0 * quad_tol);
  out.error = std::abs(out.lhs - out.rhs);
  const double scale = std::abs(out.lhs) > 0.0 ? std::abs(out.lhs) : 1.0;
  out.passed = out.error <= out.tolerance_used * scale;
  return out;
}

double abel_ratio(const DirichletPolynomial& d, double k, double u, double eps, double x) {
  const double lhs = std::abs(riesz_mean(d, RieszParams::first(k, x), cplx{u + eps, 0.0}));
  double rhs = 0.0;
  constexpr int kSupPoints = 256;
  for (int j = 1; j <= kSupPoints; ++j) {
    const double y = x * j / kSupPoints;
    rhs = std::max(rhs, std::exp(-u * y) * std::abs(riesz_mean(d, RieszParams::first(k, y), {})));
  }
  if (rhs == 0.0) {
    return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return lhs / rhs;
}

AbelProbe abel_inequality_probe(std::span<const DirichletPolynomial> family, double k, double u,
                                double eps, std::span<const double> x_grid) {
  if (family.empty() || x_grid.empty()) {
    throw ValidationError("Abel probe needs a nonempty family and x grid");
  }
  if (!(k > 0.0 && k <= 1.0) || !(u > 0.0) || !(eps > 0.0)) {
    throw ValidationError("Abel probe needs 0 < k <= 1, u > 0, eps > 0");
  }
  AbelProbe out;
  for (const auto& d : family) {
    double member = 0.0;
    for (double x : x_grid) {
      member = std::max(member, abel_ratio(d, k, u, eps, x));
    }
    out.grid_artifact = out.grid_artifact || std::isinf(member);
    out.member_max_ratio.push_back(member);
    out.max_ratio = std::max(out.max_ratio, member);
  }
  return out;
}

double circle_l1_norm(std::span<const cplx> coefficients, std::size_t grid_points) {
  if (grid_points <= 2 * coefficients.size()) {
    throw ResolutionError("circle L1 norm: grid does not resolve the polynomial degree");
  }
  CompensatedSum total;
  for (std::size_t j = 0; j < grid_points; ++j) {
    const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid_points);
    // Horner in e^{i theta}
    const cplx z = std::polar(1.0, theta);
    cplx v{};
    for (std::size_t n = coefficients.size(); n-- > 0;) {
      v = v * z + coefficients[n];
    }
    total.add(std::abs(v));
  }
  return total.value() / static_cast<double>(grid_points);
}

GrowthProbe second_means_growth_probe(std::span<const int> x_grid, std::size_t grid_points,
                                      TestKernel kernel) {
  if (x_grid.size() < 2) {
    throw ValidationError("growth probe needs at least two x values");
  }
  if (grid_points < 4096) {
    throw ResolutionError("growth probe needs at least 2^12 circle points");
  }
  GrowthProbe out;
  std::vector<double> logs;
  std::vector<double> ratios;
  for (int xi : x_grid) {
    if (xi < 1) {
      throw ValidationError("growth probe x values must be positive integers");
    }
    const auto x = static_cast<double>(xi);
    const std::size_t degree = 2 * static_cast<std::size_t>(xi);
    std::vector<cplx> f(degree);
    for (std::size_t n = 0; n < degree; ++n) {
      const auto nn = static_cast<double>(n);
      f[n] = kernel == TestKernel::shifted_fejer ? std::max(0.0, 1.0 - std::abs(nn - x) / x)
                                                 : 1.0 - nn / (2.0 * x);
    }
    const double norm = circle_l1_norm(f, grid_points);
    for (auto& c : f) {
      c /= norm;
    }
    const auto second = RieszParams::second(1.0, x);
    const auto first = RieszParams::first(1.0, x);
    std::vector<cplx> s(degree);
    std::vector<cplx> r(degree);
    for (std::size_t n = 0; n < degree; ++n) {
      s[n] = f[n] * riesz_weight(second, static_cast<double>(n));
      r[n] = f[n] * riesz_weight(first, static_cast<double>(n));
    }
    GrowthPoint p{x, circle_l1_norm(s, grid_points), circle_l1_norm(r, grid_points)};
    out.points.push_back(p);
    logs.push_back(std::log(x));
    ratios.push_back(p.second_ratio);
  }
  out.slope_vs_logx = least_squares_slope(logs, ratios);
  return out;
}

} // namespace riesz
