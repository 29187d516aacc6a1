#include "riesz/analysis.hpp"

#include "riesz/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace riesz {
namespace {

constexpr std::size_t kNodesPerPanel = 10;
constexpr std::size_t kMaxPanels = 100'000'000;

// f(t) = sum b_n e^{-i l_n t}
cplx flow_value(std::span<const cplx> b, std::span<const double> lam, double t) {
  cplx v{};
  for (std::size_t n = 0; n < b.size(); ++n) {
    v += b[n] * std::polar(1.0, -lam[n] * t);
  }
  return v;
}

// Panels of at most one shortest period 2 pi / l_N over an interval of
// the given length.
std::size_t panels_for(const Frequency& f, double length) {
  const double lam_max = f[f.size() - 1];
  const double periods = length * lam_max / (2.0 * std::numbers::pi);
  const double panels = std::max(1.0, std::ceil(periods));
  if (panels > static_cast<double>(kMaxPanels)) {
    throw ResolutionError("flow quadrature would need more than 1e8 panels");
  }
  return static_cast<std::size_t>(panels);
}

} // namespace

DirichletPolynomial poisson_translate(const DirichletPolynomial& d, double u) {
  if (!(u >= 0.0)) {
    throw ValidationError("Poisson translate needs u >= 0");
  }
  const auto lam = d.frequency().values();
  std::vector<cplx> out(d.coefficients().begin(), d.coefficients().end());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] *= std::exp(-u * lam[n]);
  }
  return d.with_coefficients(std::move(out));
}

double poisson_kernel(double u, double t) {
  if (!(u > 0.0)) {
    throw ValidationError("Poisson kernel needs u > 0");
  }
  return u / (std::numbers::pi * (u * u + t * t));
}

double l2_norm(const DirichletPolynomial& d) {
  CompensatedSum s;
  for (const auto& a : d.coefficients()) {
    s.add(std::norm(a));
  }
  return std::sqrt(s.value());
}

std::size_t required_quad_points(const Frequency& f, double half_width) {
  const double lam_max = f[f.size() - 1];
  return static_cast<std::size_t>(
      std::ceil(20.0 * half_width * lam_max / (2.0 * std::numbers::pi)));
}

double besicovitch_norm(const DirichletPolynomial& d, double p, double half_width,
                        std::size_t quad_points) {
  if (!(p >= 1.0) || !(half_width > 0.0)) {
    throw ValidationError("Besicovitch norm needs p >= 1 and T > 0");
  }
  if (quad_points < required_quad_points(d.frequency(), half_width)) {
    throw ResolutionError("Besicovitch norm: " + std::to_string(quad_points) +
                          " nodes do not resolve the oscillation (need " +
                          std::to_string(required_quad_points(d.frequency(), half_width)) + ")");
  }
  const std::size_t panels = std::max<std::size_t>(1, (quad_points + kNodesPerPanel - 1) /
                                                          kNodesPerPanel);
  const auto lam = d.frequency().values();
  const auto b = d.coefficients();
  const double integral = composite_gauss_real(
      [&](double t) { return std::pow(std::abs(flow_value(b, lam, t)), p); }, -half_width,
      half_width, panels);
  return std::pow(integral / (2.0 * half_width), 1.0 / p);
}

std::vector<GroupPoint> haar_points(const GroupRealization& g, const SampleStream& stream,
                                    std::size_t count) {
  std::vector<GroupPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = stream.at(i);
    out.push_back(haar_sample(g, rng));
  }
  return out;
}

MonteCarloEstimate haar_norm_from_characters(std::span<const cplx> coefficients,
                                             const std::vector<std::vector<cplx>>& characters,
                                             double p) {
  if (!(p >= 1.0)) {
    throw ValidationError("Haar norm needs p >= 1");
  }
  if (characters.empty()) {
    throw ValidationError("Haar norm needs at least one sample");
  }
  CompensatedSum sum;
  CompensatedSum sum_sq;
  for (const auto& chars : characters) {
    if (chars.size() != coefficients.size()) {
      throw MismatchError("character table does not match the coefficient count");
    }
    cplx v{};
    for (std::size_t n = 0; n < chars.size(); ++n) {
      v += coefficients[n] * chars[n];
    }
    const double power = std::pow(std::abs(v), p);
    sum.add(power);
    sum_sq.add(power * power);
  }
  const auto count = static_cast<double>(characters.size());
  const double mean = sum.value() / count;
  const double var =
      characters.size() > 1
          ? std::max(0.0, (sum_sq.value() - count * mean * mean) / (count - 1.0))
          : 0.0;
  const double se_mean = std::sqrt(var / count);
  MonteCarloEstimate out;
  out.value = std::pow(mean, 1.0 / p);
  out.standard_error = mean > 0.0 ? out.value / (p * mean) * se_mean : 0.0;
  return out;
}

MonteCarloEstimate haar_norm(const DirichletPolynomial& d, const GroupRealization& g, double p,
                             std::size_t samples, const SampleStream& stream) {
  require_same_frequency(d.frequency(), g.frequency(), "haar_norm");
  std::vector<std::vector<cplx>> chars;
  chars.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = stream.at(i);
    chars.push_back(character_values(g, haar_sample(g, rng)));
  }
  return haar_norm_from_characters(d.coefficients(), chars, p);
}

double flow_abs_average(const DirichletPolynomial& d_omega, double center, double length) {
  if (!(length > 0.0)) {
    throw ValidationError("interval length must be positive");
  }
  const auto lam = d_omega.frequency().values();
  const auto b = d_omega.coefficients();
  const double integral =
      composite_gauss_real([&](double t) { return std::abs(flow_value(b, lam, t)); },
                           center - 0.5 * length, center + 0.5 * length,
                           panels_for(d_omega.frequency(), length));
  return integral / length;
}

cplx time_average(const DirichletPolynomial& d, const GroupRealization& g,
                  const GroupPoint& omega, double half_width, std::size_t quad_points) {
  if (!(half_width > 0.0)) {
    throw ValidationError("time average needs T > 0");
  }
  if (quad_points < required_quad_points(d.frequency(), half_width)) {
    throw ResolutionError("time average: quadrature does not resolve the oscillation");
  }
  const auto dw = vertical_limit(d, g, omega);
  const auto lam = dw.frequency().values();
  const auto b = dw.coefficients();
  const std::size_t panels = std::max<std::size_t>(1, (quad_points + kNodesPerPanel - 1) /
                                                          kNodesPerPanel);
  const cplx integral =
      composite_gauss([&](double t) { return flow_value(b, lam, t); }, -half_width, half_width,
                      panels);
  return integral / (2.0 * half_width);
}

std::vector<double> maximal_x_grid(const Frequency& f, std::size_t points) {
  double lo = 0.0;
  for (double v : f.values()) {
    if (v > 0.0) {
      lo = v;
      break;
    }
  }
  const double hi = 1.5 * f[f.size() - 1];
  if (lo == 0.0 || !(hi > lo)) {
    // a single frequency value: just cover it
    const double top = std::max(1.0, hi);
    return geometric_span(top / 64.0, top, points);
  }
  return geometric_span(lo, hi, points);
}

RieszMaximalOperator::RieszMaximalOperator(const DirichletPolynomial& d, double k,
                                           std::vector<double> x_grid)
    : coefficients_(d.coefficients().begin(), d.coefficients().end()), x_grid_(std::move(x_grid)) {
  if (x_grid_.empty()) {
    throw ValidationError("maximal operator needs a nonempty x grid");
  }
  weights_.reserve(x_grid_.size());
  for (double x : x_grid_) {
    auto w = riesz_weights(d.frequency(), RieszParams::first(k, x));
    while (!w.empty() && w.back() == 0.0) {
      w.pop_back();
    }
    weights_.push_back(std::move(w));
  }
}

MaximalSample RieszMaximalOperator::evaluate(std::span<const cplx> characters) const {
  if (characters.size() != coefficients_.size()) {
    throw MismatchError("character values do not match the polynomial length");
  }
  MaximalSample out;
  for (std::size_t j = 0; j < x_grid_.size(); ++j) {
    const auto& w = weights_[j];
    cplx v{};
    for (std::size_t n = 0; n < w.size(); ++n) {
      v += (coefficients_[n] * w[n]) * characters[n];
    }
    const double m = std::abs(v);
    if (m > out.max_value || j == 0) {
      out.max_value = m;
      out.arg_x = x_grid_[j];
    }
  }
  return out;
}

MaximalSample riesz_maximal_sample(const DirichletPolynomial& d, const GroupRealization& g,
                                   double k, std::span<const double> x_grid,
                                   const GroupPoint& omega) {
  require_same_frequency(d.frequency(), g.frequency(), "riesz_maximal_sample");
  RieszMaximalOperator op(d, k, {x_grid.begin(), x_grid.end()});
  return op.evaluate(character_values(g, omega));
}

double hl_maximal_flow_sample(const DirichletPolynomial& d, const GroupRealization& g,
                              const GroupPoint& omega, std::span<const double> interval_lengths,
                              std::span<const double> t_grid) {
  if (interval_lengths.empty() || t_grid.empty()) {
    throw ValidationError("HL maximal sample needs interval lengths and centres");
  }
  const auto dw = vertical_limit(d, g, omega);
  double sup = 0.0;
  for (double c : t_grid) {
    for (double len : interval_lengths) {
      sup = std::max(sup, flow_abs_average(dw, c, len));
    }
  }
  return sup;
}

WeakTypeTail weak_type_tail(std::span<const double> samples, double norm1,
                            std::span<const double> alpha_grid) {
  if (samples.empty()) {
    throw ValidationError("weak type tail needs samples");
  }
  if (!(norm1 > 0.0)) {
    throw ValidationError("weak type tail needs a positive L1 norm");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> alphas(alpha_grid.begin(), alpha_grid.end());
  if (alphas.empty()) {
    alphas = sorted;
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  }
  WeakTypeTail out;
  const auto count = static_cast<double>(sorted.size());
  for (double alpha : alphas) {
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), alpha);
    const double mass = static_cast<double>(above) / count;
    out.curve.push_back({alpha, mass});
    out.sup_alpha_mass = std::max(out.sup_alpha_mass, alpha * mass / norm1);
  }
  return out;
}

std::vector<double> poisson_u_grid(std::size_t points) {
  return geometric_span(1e-3, 10.0, points);
}

double poisson_maximal_sample(const DirichletPolynomial& d, const GroupRealization& g,
                              const GroupPoint& omega, std::span<const double> u_grid) {
  if (u_grid.empty()) {
    throw ValidationError("Poisson maximal sample needs a u grid");
  }
  const auto dw = vertical_limit(d, g, omega);
  double sup = 0.0;
  for (double u : u_grid) {
    sup = std::max(sup, std::abs(evaluate(poisson_translate(dw, u), cplx{})));
  }
  return sup;
}

} // namespace riesz
