#pragma once

#include "riesz/group.hpp"
#include "riesz/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace riesz {

/// Coefficients a_n e^{-u l_n}: convolution with the Poisson measure p_u.
DirichletPolynomial poisson_translate(const DirichletPolynomial& d, double u);

/// P_u(t) = u / (pi (u^2 + t^2)).
double poisson_kernel(double u, double t);

/// sqrt(sum |a_n|^2).
double l2_norm(const DirichletPolynomial& d);

/// Minimum node count that resolves the fastest oscillation on [-T, T]
/// at 10 nodes per period 2 pi / l_N.
std::size_t required_quad_points(const Frequency& f, double half_width);

/// ((1/2T) int_{-T}^{T} |sum a_n e^{-i l_n t}|^p dt)^{1/p} by composite Gauss-Legendre.
double besicovitch_norm(const DirichletPolynomial& d, double p, double half_width,
                        std::size_t quad_points);

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

/// Seed for per-sample random streams: sample i draws from Rng::derive(seed, stream, i).
struct SampleStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  Rng at(std::uint64_t index) const { return Rng::derive(seed, stream, index); }
};

/// Haar points 0..count-1 of a stream.
std::vector<GroupPoint> haar_points(const GroupRealization& g, const SampleStream& stream,
                                    std::size_t count);

/// Monte-Carlo (int_G |sum a_n h_n|^p)^{1/p}; the standard error of the p-th
/// power mean is carried through the 1/p power by the delta method.
MonteCarloEstimate haar_norm(const DirichletPolynomial& d, const GroupRealization& g, double p,
                             std::size_t samples, const SampleStream& stream);

/// Same estimator over caller-supplied character tables (row i = h_n(omega_i)).
MonteCarloEstimate haar_norm_from_characters(std::span<const cplx> coefficients,
                                             const std::vector<std::vector<cplx>>& characters,
                                             double p);

/// |f_omega(t)| time-average over [center - L/2, center + L/2] with the
/// standard panel sizing.
double flow_abs_average(const DirichletPolynomial& d_omega, double center, double length);

/// (1/2T) int_{-T}^{T} f_omega(t) dt.
cplx time_average(const DirichletPolynomial& d, const GroupRealization& g,
                  const GroupPoint& omega, double half_width, std::size_t quad_points);

struct MaximalSample {
  std::uint64_t omega_seed = 0;
  double max_value = 0.0;
  double arg_x = 0.0;
};

/// Default grid for the Riesz maximal operator: geometric over
/// (smallest positive l_n, 1.5 l_N].
std::vector<double> maximal_x_grid(const Frequency& f, std::size_t points = 64);

/// Grid maximum of |R_x^{l,k}(D^omega)(0)| with the weights precomputed once.
class RieszMaximalOperator {
public:
  RieszMaximalOperator(const DirichletPolynomial& d, double k, std::vector<double> x_grid);

  /// Evaluates on a vertical limit given its character values.
  MaximalSample evaluate(std::span<const cplx> characters) const;
  const std::vector<double>& x_grid() const noexcept { return x_grid_; }

private:
  std::vector<cplx> coefficients_;
  std::vector<double> x_grid_;
  std::vector<std::vector<double>> weights_; // per grid point, truncated at the cutoff
};

MaximalSample riesz_maximal_sample(const DirichletPolynomial& d, const GroupRealization& g,
                                   double k, std::span<const double> x_grid,
                                   const GroupPoint& omega);

/// Hardy-Littlewood maximal function along the flow, sup over centred intervals.
double hl_maximal_flow_sample(const DirichletPolynomial& d, const GroupRealization& g,
                              const GroupPoint& omega, std::span<const double> interval_lengths,
                              std::span<const double> t_grid);

struct WeakTypeCurvePoint {
  double alpha;
  double mass;
};

struct WeakTypeTail {
  double sup_alpha_mass = 0.0;
  std::vector<WeakTypeCurvePoint> curve;
};

/// mass(alpha) = fraction of samples > alpha; sup over the grid of
/// alpha mass(alpha) / norm1. An empty alpha grid means the sample values.
WeakTypeTail weak_type_tail(std::span<const double> samples, double norm1,
                            std::span<const double> alpha_grid = {});

/// Default u grid: 48 points geometric over [1e-3, 10].
std::vector<double> poisson_u_grid(std::size_t points = 48);

/// sup over u of |(f * p_u)(omega)|.
double poisson_maximal_sample(const DirichletPolynomial& d, const GroupRealization& g,
                              const GroupPoint& omega, std::span<const double> u_grid);

} // namespace riesz
