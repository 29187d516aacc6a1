#include "riesz/numerics.hpp"

#include "riesz/error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace riesz {

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    comp_ += (sum_ - t) + v;
  } else {
    comp_ += (v - t) + sum_;
  }
  sum_ = t;
}

std::vector<double> geometric_grid(double x_max, std::size_t points, double ratio) {
  if (!(x_max > 0.0) || points < 2 || !(ratio > 1.0)) {
    throw ValidationError("geometric_grid: need x_max > 0, points >= 2, ratio > 1");
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = x_max * std::pow(ratio, -static_cast<double>(points - 1 - i));
  }
  grid.back() = x_max;
  return grid;
}

std::vector<double> geometric_span(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2) {
    throw ValidationError("geometric_span: need 0 < lo < hi and points >= 2");
  }
  std::vector<double> grid(points);
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo * std::exp(step * static_cast<double>(i));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> linear_span(double lo, double hi, std::size_t points) {
  if (points < 2 || !(hi > lo)) {
    throw ValidationError("linear_span: need hi > lo and points >= 2");
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ValidationError("least_squares_slope: need two equally sized samples of length >= 2");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) {
    throw ValidationError("least_squares_slope: degenerate abscissae");
  }
  return sxy / sxx;
}

const GaussRule& gauss_legendre_10() {
  static const GaussRule rule = [] {
    using Gauss = boost::math::quadrature::gauss<double, 10>;
    GaussRule r;
    const auto& x = Gauss::abscissa();
    const auto& w = Gauss::weights();
    for (std::size_t i = x.size(); i-- > 0;) {
      r.nodes.push_back(-x[i]);
      r.weights.push_back(w[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.nodes.push_back(x[i]);
      r.weights.push_back(w[i]);
    }
    return r;
  }();
  return rule;
}

QuadratureGrid composite_gauss_grid(double a, double b, std::size_t panels) {
  if (panels == 0) {
    throw ValidationError("composite_gauss_grid: panels must be positive");
  }
  const auto& rule = gauss_legendre_10();
  QuadratureGrid grid;
  grid.nodes.reserve(panels * rule.nodes.size());
  grid.weights.reserve(panels * rule.nodes.size());
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      grid.nodes.push_back(mid + 0.5 * h * rule.nodes[i]);
      grid.weights.push_back(0.5 * h * rule.weights[i]);
    }
  }
  return grid;
}

cplx composite_gauss(const std::function<cplx(double)>& f, double a, double b, std::size_t panels) {
  const auto& rule = gauss_legendre_10();
  CompensatedComplexSum total;
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + h * (static_cast<double>(p) + 0.5);
    cplx panel{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    total.add(0.5 * h * panel);
  }
  return total.value();
}

double composite_gauss_real(const std::function<double(double)>& f, double a, double b,
                            std::size_t panels) {
  const auto& rule = gauss_legendre_10();
  CompensatedSum total;
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + h * (static_cast<double>(p) + 0.5);
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    total.add(0.5 * h * panel);
  }
  return total.value();
}

AdaptiveResult adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                                  double tol, unsigned max_depth) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  AdaptiveResult out;
  double err = 0.0;
  double l1 = 0.0;
  out.value = GK::integrate(f, a, b, max_depth, tol, &err, &l1);
  out.error_estimate = err;
  out.converged = err <= std::max(tol * l1, 16.0 * std::numeric_limits<double>::epsilon() * l1);
  return out;
}

AdaptiveResult adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                                  std::span<const double> breakpoints, double tol,
                                  unsigned max_depth) {
  std::vector<double> cuts{a};
  for (double c : breakpoints) {
    if (c > a && c < b) {
      cuts.push_back(c);
    }
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  AdaptiveResult out{cplx{}, 0.0, true};
  CompensatedComplexSum total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto piece = adaptive_integrate(f, cuts[i], cuts[i + 1], tol, max_depth);
    total.add(piece.value);
    out.error_estimate += piece.error_estimate;
    out.converged = out.converged && piece.converged;
  }
  out.value = total.value();
  return out;
}

cplx unimodular_pow(cplx z, long long m) {
  if (m == 0) {
    return {1.0, 0.0};
  }
  if (m < 0) {
    // z^{-1} = conj(z) on the unit circle
    z = std::conj(z);
    m = -m;
  }
  cplx result{1.0, 0.0};
  cplx base = z;
  int result_mults = 0;
  int base_mults = 0;
  auto renorm = [](cplx& v, int& count) {
    if (++count % 32 == 0) {
      v /= std::abs(v);
    }
  };
  auto e = static_cast<unsigned long long>(m);
  while (true) {
    if (e & 1ULL) {
      result *= base;
      renorm(result, result_mults);
    }
    e >>= 1U;
    if (e == 0) {
      break;
    }
    base *= base;
    renorm(base, base_mults);
  }
  return result / std::abs(result);
}

double one_minus_pow(double r, double k) {
  if (k == 0.0) {
    return 1.0;
  }
  if (r <= 0.0) {
    return r == 0.0 ? 1.0 : std::pow(1.0 - r, k);
  }
  return std::exp(k * std::log1p(-r));
}

} // namespace riesz
