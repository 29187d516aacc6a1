#include "riesz/analysis.hpp"
#include "riesz/error.hpp"
#include "riesz/io.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace riesz;

namespace {

FrequencyPtr lognat(std::size_t n) {
  return make_standard_frequency(StandardFrequency::log_naturals, n);
}

DirichletPolynomial three_four() {
  return DirichletPolynomial(lognat(3), {0.0, 3.0, 4.0});
}

} // namespace

TEST_CASE("Poisson kernel and translate") {
  CHECK(std::abs(poisson_kernel(1.0, 0.0) - 1.0 / std::numbers::pi) <= 1e-16);
  CHECK(std::abs(poisson_kernel(1.0, 1.0) - 0.5 / std::numbers::pi) <= 1e-16);
  const auto d = three_four();
  const auto same = poisson_translate(d, 0.0);
  CHECK(std::equal(same.coefficients().begin(), same.coefficients().end(),
                   d.coefficients().begin()));
  CHECK(std::abs(poisson_translate(d, 1.0).coefficients()[1] - 1.5) <= 1e-15);
  const auto twice = poisson_translate(poisson_translate(d, 0.3), 0.4);
  const auto once = poisson_translate(d, 0.7);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(std::abs(twice.coefficients()[n] - once.coefficients()[n]) <= 4e-16 * 4);
  }
  CHECK_THROWS_AS(poisson_translate(d, -1.0), ValidationError);
}

TEST_CASE("l2 and Besicovitch norms") {
  const auto d = three_four();
  CHECK(l2_norm(d) == 5.0);
  const double T = 1e4;
  const auto q = required_quad_points(d.frequency(), T);
  const double b2 = besicovitch_norm(d, 2.0, T, q);
  CHECK(std::abs(b2 - 5.0) <= 0.05);
  // cross term 24 sin(dT) / (dT) with d = log(3/2)
  CHECK(std::abs(b2 * b2 - 25.0) <= 24.0 / (T * std::log(1.5)) + 1e-9);
  CHECK_THROWS_AS(besicovitch_norm(d, 2.0, T, q / 2), ResolutionError);

  const DirichletPolynomial c(lognat(1), {cplx{0.0, -2.0}});
  for (double t : {1.0, 10.0, 1234.5}) {
    CHECK(std::abs(besicovitch_norm(c, 1.0, t, 10) - 2.0) <= 1e-13);
  }
}

TEST_CASE("Haar norms") {
  const auto f = lognat(12);
  const auto g = realize_group(f, RealizationHint::prime_factorization);
  std::vector<cplx> single(12, 0.0);
  single[5] = {0.6, -0.8};
  const DirichletPolynomial one(f, single);
  const SampleStream stream{3, stream_key("test")};
  const auto e = haar_norm(one, g, 1.0, 500, stream);
  CHECK(std::abs(e.value - 1.0) <= 1e-14);
  CHECK(e.standard_error <= 1e-14);

  const DirichletPolynomial d(f, io::coefficient_rule("random_disc:4", 12));
  const auto e2 = haar_norm(d, g, 2.0, 20000, stream);
  const auto again = haar_norm(d, g, 2.0, 20000, stream);
  CHECK(again.value == e2.value);
  // calibration of the delta-method standard error over independent streams
  int outside = 0;
  double mean_z2 = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto e = haar_norm(d, g, 2.0, 4000, SampleStream{100 + i, stream_key("calibration")});
    const double z = (e.value - l2_norm(d)) / e.standard_error;
    outside += std::abs(z) > 3.0 ? 1 : 0;
    mean_z2 += z * z / 50.0;
  }
  CHECK(outside <= 2);
  CHECK(mean_z2 >= 0.5);
  CHECK(mean_z2 <= 1.6);
}

TEST_CASE("time average") {
  const auto f = lognat(10);
  const auto g = realize_group(f, RealizationHint::prime_factorization);
  const DirichletPolynomial d(f, io::coefficient_rule("random_disc:8", 10));
  Rng rng(1);
  const auto omega = haar_sample(g, rng);
  for (double T : {10.0, 100.0, 1e4}) {
    const cplx avg = time_average(d, g, omega, T, required_quad_points(*f, T));
    double bound = 0.0;
    for (std::size_t n = 1; n < 10; ++n) bound += std::abs(d.coefficients()[n]) / (T * f->values()[n]);
    CHECK(std::abs(avg - d.coefficients()[0]) <= bound + 1e-6);
  }
  const DirichletPolynomial c(lognat(1), {cplx{1.0, 2.0}});
  const auto g1 = realize_group(c.frequency_ptr(), RealizationHint::automatic);
  CHECK(std::abs(time_average(c, g1, identity_point(g1), 7.0, 10) - cplx{1.0, 2.0}) <= 1e-14);
}

TEST_CASE("maximal operators") {
  const auto f = lognat(8);
  const auto g = realize_group(f, RealizationHint::prime_factorization);
  const DirichletPolynomial d(f, io::coefficient_rule("random_sign:2", 8));
  const auto grid = maximal_x_grid(*f);
  CHECK(grid.size() == 64);
  CHECK(grid.front() == doctest::Approx(std::log(2.0)));
  CHECK(grid.back() == doctest::Approx(1.5 * std::log(8.0)));
  Rng rng(12);
  const auto omega = haar_sample(g, rng);
  const auto m = riesz_maximal_sample(d, g, 1.0, grid, omega);
  const auto m2 = riesz_maximal_sample(d * cplx{2.0, 0.0}, g, 1.0, grid, omega);
  CHECK(std::abs(m2.max_value - 2 * m.max_value) <= 1e-14);
  CHECK(m2.arg_x == m.arg_x);

  std::vector<cplx> single(8, 0.0);
  single[0] = 3.0;
  const DirichletPolynomial one(f, single);
  CHECK(riesz_maximal_sample(one, g, 1.0, grid, omega).max_value ==
        doctest::Approx(3.0 * (1 - 0.0)).epsilon(1e-15));

  const std::vector<double> lengths{0.5, 2.0, 8.0};
  const std::vector<double> centres{-3.0, 0.0, 5.0};
  CHECK(std::abs(hl_maximal_flow_sample(one, g, omega, lengths, centres) - 3.0) <= 1e-13);

  std::vector<cplx> positive(8);
  for (std::size_t n = 0; n < 8; ++n) positive[n] = 1.0 / (n + 1.0);
  const DirichletPolynomial pos(f, positive);
  const auto u_grid = poisson_u_grid();
  CHECK(u_grid.size() == 48);
  const double sup = poisson_maximal_sample(pos, g, identity_point(g), u_grid);
  CHECK(std::abs(sup - std::abs(evaluate(poisson_translate(pos, u_grid.front()), 0.0))) <= 1e-15);
  CHECK(std::abs(poisson_maximal_sample(one, g, omega, u_grid) - 3.0) <= 1e-15);
}

TEST_CASE("weak type tail") {
  const std::vector<double> equal(100, 2.0);
  const std::vector<double> alphas{0.5, 1.0, 1.999999};
  const auto t = weak_type_tail(equal, 2.0, alphas);
  CHECK(t.sup_alpha_mass == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(weak_type_tail(equal, 2.0).sup_alpha_mass == 0.0); // empty tail at the max sample

  Rng rng(77);
  std::vector<double> cauchy(1000000);
  for (auto& c : cauchy) c = std::abs(std::tan(std::numbers::pi * (rng.uniform() - 0.5)));
  const std::vector<double> far{10.0, 20.0, 50.0};
  const auto tail = weak_type_tail(cauchy, 1.0, far);
  // alpha P(|C| > alpha) -> 2 / pi = 0.63661977236758134307553505349
  CHECK(std::abs(tail.sup_alpha_mass - 0.63661977236758134307553505349) <= 0.02);
  CHECK_THROWS_AS(weak_type_tail({}, 1.0), ValidationError);
}
