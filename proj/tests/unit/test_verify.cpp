#include "riesz/error.hpp"
#include "riesz/io.hpp"
#include "riesz/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace riesz;

TEST_CASE("Perron kernel") {
  const double t = perron_truncation(1.0, 1.0, 1.0, 5e-4);
  CHECK(perron_tail_bound(1.0, 1.0, 1.0, t) <= 5e-4);
  const auto r = perron_kernel_check(1.0, 1.0, 1.0, 1e5, 1e-3);
  CHECK(r.passed);
  CHECK(std::abs(r.lhs - 1.0) <= 1e-3);
  CHECK(perron_kernel_check(1.0, -1.0, 1.0, 1e5, 1e-3).passed);
  for (double k : {0.5, 2.0}) {
    const double tk = perron_truncation(k, 0.0, 1.0, 5e-4);
    const auto z = perron_kernel_check(k, 0.0, 1.0, tk, 1e-3);
    CHECK(z.rhs == cplx{});
    CHECK(z.passed);
  }
  CHECK_THROWS_AS(perron_kernel_check(1.0, 1.0, 1.0, 10.0, 1e-3), InfeasibleError);
  CHECK_THROWS_AS(perron_truncation(0.0, 1.0, 1.0, 1e-3), ValidationError);
}

TEST_CASE("kernel bound") {
  const auto a = kernel_bound_check(0.0, 1.0, 0.0, 1.0);
  CHECK(std::abs(a.lhs.real() - 0.5) <= 1e-6);
  CHECK(a.rhs.real() == doctest::Approx(2.0));
  CHECK(a.passed);
  const auto b = kernel_bound_check(1.0, 1.0, 0.0, 1.0);
  CHECK(std::abs(b.lhs.real() - 1.0 / 3.0) <= 1e-6);
  CHECK(b.rhs.real() == doctest::Approx(3.0));
  CHECK(b.passed);
  const auto c = kernel_bound_check(0.0, 1.0, 100.0, 1.0);
  // closed form 2 / (4 + 1e4) = 1.99920031987205e-4
  CHECK(std::abs(c.lhs.real() - 1.99920031987205e-4) <= 1e-9);
  CHECK(c.lhs.real() <= 2.0 / (1.0 + 1e4));
  CHECK(c.passed);
}

TEST_CASE("Fourier representation") {
  const auto one_f = make_standard_frequency(StandardFrequency::log_naturals, 1);
  const DirichletPolynomial one(one_f, {cplx{0.5, -1.0}});
  const auto g1 = realize_group(one_f, RealizationHint::automatic);
  const auto r = ft_representation_check(one, g1, identity_point(g1), 1.0, 1.0, 2.0, 1e-6);
  CHECK(r.passed);
  CHECK(std::abs(r.lhs - cplx{0.5, -1.0}) <= 1e-14);

  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 4);
  const auto g = realize_group(f, RealizationHint::prime_factorization);
  const DirichletPolynomial d(f, io::coefficient_rule("random_disc:3", 4));
  Rng rng(4);
  const auto omega = haar_sample(g, rng);
  const auto q = ft_representation_check(d, g, omega, 1.0, 1.0, 2.0, 1e-6);
  CHECK(q.passed);
  CHECK(q.error <= 1e-3);

  const auto shifted = std::make_shared<const Frequency>(
      std::vector<double>{std::log(2.0), std::log(3.0)});
  const DirichletPolynomial e(shifted, {1.0, 1.0});
  const auto gs = realize_group(shifted, RealizationHint::user_basis,
                                UserBasis{{std::log(2.0), std::log(3.0)}, {{1, 0}, {0, 1}}});
  const auto empty = ft_representation_check(e, gs, identity_point(gs), 1.0, 0.0, 0.5, 1e-6);
  CHECK(empty.lhs == cplx{});
  CHECK(std::abs(empty.rhs) <= 1e-3);
}

TEST_CASE("Abel inequality") {
  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 1);
  const DirichletPolynomial one(f, {2.0});
  CHECK(abel_ratio(one, 1.0, 1.0, 0.5, 3.0) == doctest::Approx(1.0).epsilon(1e-2));

  const auto f64 = make_standard_frequency(StandardFrequency::log_naturals, 64);
  const DirichletPolynomial d(f64, io::coefficient_rule("random_sign:9", 64));
  for (double x : {1.0, 3.0, 5.0}) {
    const double r = abel_ratio(d, 1.0, 1.0, 0.5, x);
    const double r3 = abel_ratio(d * cplx{0.0, 3.0}, 1.0, 1.0, 0.5, x);
    CHECK(r3 == doctest::Approx(r).epsilon(1e-12));
  }
  std::vector<DirichletPolynomial> family{d, d * cplx{2.0, 0.0}};
  const auto grid = geometric_span(0.5, 6.0, 8);
  const auto probe = abel_inequality_probe(family, 1.0, 1.0, 0.5, grid);
  CHECK(probe.member_max_ratio.size() == 2);
  CHECK(std::isfinite(probe.max_ratio));
  CHECK_FALSE(probe.grid_artifact);
  CHECK(probe.member_max_ratio[0] == doctest::Approx(probe.member_max_ratio[1]).epsilon(1e-12));
}

TEST_CASE("circle norms and second means") {
  const std::vector<cplx> constant{cplx{0.0, 2.0}};
  CHECK(circle_l1_norm(constant, 16) == doctest::Approx(2.0));
  const std::vector<cplx> two{1.0, 1.0};
  // |1 + e^{it}| averages to 4 / pi = 1.27323954473516268615107010698
  CHECK(std::abs(circle_l1_norm(two, 4096) - 1.27323954473516268615107010698) <= 1e-6);
  CHECK_THROWS_AS(circle_l1_norm(two, 4), ResolutionError);

  const std::vector<int> xs{16, 64, 256};
  const auto probe = second_means_growth_probe(xs, 8192);
  REQUIRE(probe.points.size() == 3);
  CHECK(probe.points[0].second_ratio < probe.points[1].second_ratio);
  CHECK(probe.points[1].second_ratio < probe.points[2].second_ratio);
  CHECK(probe.slope_vs_logx > 0.0);
  for (const auto& p : probe.points) CHECK(p.first_ratio <= 3.0);
  CHECK_THROWS_AS(second_means_growth_probe(std::vector<int>{16}, 8192), ValidationError);
}
