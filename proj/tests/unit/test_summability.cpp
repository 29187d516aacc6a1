#include "riesz/error.hpp"
#include "riesz/io.hpp"
#include "riesz/rng.hpp"
#include "riesz/summability.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace riesz;

namespace {

DirichletPolynomial grandi(std::size_t n) {
  return DirichletPolynomial(make_standard_frequency(StandardFrequency::naturals, n),
                             io::coefficient_rule("alternating", n));
}

DirichletPolynomial ordinary(std::size_t n, const char* rule) {
  return DirichletPolynomial(make_standard_frequency(StandardFrequency::log_naturals, n),
                             io::coefficient_rule(rule, n));
}

} // namespace

TEST_CASE("constant series") {
  const DirichletPolynomial d(make_standard_frequency(StandardFrequency::naturals, 1), {2.5});
  const auto grid = geometric_grid(100.0);
  const auto r = detect_riesz_limit(d, RieszKind::first, 1.0, 0.0, grid, 1e-12);
  REQUIRE(r.converged);
  CHECK(*r.limit == cplx{2.5, 0.0});
  CHECK(r.cauchy_residual == 0.0);
}

TEST_CASE("Grandi series") {
  const auto d = grandi(10001);
  const auto grid = geometric_grid(1e4);
  const auto r1 = detect_riesz_limit(d, RieszKind::first, 1.0, 0.0, grid, 1e-3);
  REQUIRE(r1.converged);
  CHECK(std::abs(*r1.limit - 0.5) <= 1e-3);
  const auto r0 = detect_riesz_limit(d, RieszKind::first, 0.0, 0.0, grid, 1e-3);
  CHECK_FALSE(r0.converged);
  CHECK_FALSE(r0.limit.has_value());

  const auto c = consistency_first(d, 1.0, 2.0, 0.0, grid, 1e-3);
  CHECK_FALSE(c.inconclusive);
  CHECK(c.agree);
  CHECK(std::abs(*c.hypothesis.limit - 0.5) <= 1e-3);
  CHECK(std::abs(*c.conclusion.limit - 0.5) <= 1e-3);

  const auto second = consistency_second(d, 1.0, 0.0, geometric_grid(std::log(1e4)), 1e-3);
  CHECK(second.inconclusive);
  CHECK_FALSE(second.agree);

  const auto tail = tail_decay_check(d, 1.0, 0.5, 1000, 10000);
  CHECK(tail.size() == 9001);
  double worst = 0.0;
  for (const auto& p : tail) worst = std::max(worst, p.value);
  CHECK(worst <= 1e-3);
}

TEST_CASE("scaling invariance") {
  const auto d = grandi(2001);
  const auto grid = geometric_grid(2000.0);
  const auto base = detect_riesz_limit(d, RieszKind::first, 1.0, 0.0, grid, 2e-3);
  const cplx c{0.0, -3.0};
  const auto scaled = detect_riesz_limit(d * c, RieszKind::first, 1.0, 0.0, grid, 2e-3 * 3.0);
  CHECK(base.converged == scaled.converged);
  REQUIRE(base.limit);
  CHECK(std::abs(*scaled.limit - c * *base.limit) <= 1e-14);
}

TEST_CASE("geometric series") {
  const DirichletPolynomial d(make_standard_frequency(StandardFrequency::naturals, 80),
                              io::coefficient_rule("geometric:0.5", 80));
  // sum_{n >= 1} 2^-n = 1; the rule starts at r^0 so scale by 1/2
  const auto half = d * cplx{0.5, 0.0};
  const auto c = consistency_first(half, 0.0, 1.0, 0.0, geometric_grid(1e8), 1e-6);
  REQUIRE_FALSE(c.inconclusive);
  CHECK(c.agree);
  CHECK(std::abs(*c.hypothesis.limit - 1.0) <= 1e-6);
  CHECK(std::abs(*c.conclusion.limit - 1.0) <= 1e-6);
}

TEST_CASE("diverging hypothesis is inconclusive") {
  const DirichletPolynomial d(make_standard_frequency(StandardFrequency::naturals, 500),
                              io::coefficient_rule("ones", 500));
  const auto c = consistency_first(d, 1.0, 2.0, 0.0, geometric_grid(400.0), 1e-3);
  CHECK(c.inconclusive);
  CHECK_FALSE(c.agree);
}

TEST_CASE("second consistency") {
  const auto d = ordinary(2000, "power:2");
  const auto c = consistency_second(d, 1.0, 0.0, geometric_grid(1e6), 1e-4);
  REQUIRE_FALSE(c.inconclusive);
  CHECK(c.agree);
  const cplx full = evaluate(d, 0.0);
  CHECK(std::abs(*c.hypothesis.limit - full) <= 1e-4);
  CHECK(std::abs(*c.conclusion.limit - full) <= 1e-4);

  const DirichletPolynomial one(make_standard_frequency(StandardFrequency::log_naturals, 1),
                                {cplx{0.3, 0.4}});
  const auto c1 = consistency_second(one, 2.0, 0.0, geometric_grid(50.0), 1e-3);
  CHECK(c1.agree);
}

TEST_CASE("lacunary tail factor") {
  const DirichletPolynomial d(make_standard_frequency(StandardFrequency::powers_of_two, 10),
                              std::vector<cplx>(10, 1.0));
  const auto tail = tail_decay_check(d, 1.0, 0.0, 1, 9);
  for (const auto& p : tail) {
    CHECK(std::abs(p.value - 0.5 * static_cast<double>(p.index)) <= 1e-12 * p.index);
  }
}

TEST_CASE("order reduction") {
  CHECK(split_order(2.7).first == doctest::Approx(2.0));
  CHECK(split_order(2.7).second == doctest::Approx(0.7));
  CHECK(split_order(2.0) == std::pair{1.0, 1.0});
  CHECK(split_order(0.5) == std::pair{0.0, 0.5});

  const DirichletPolynomial one(make_standard_frequency(StandardFrequency::log_naturals, 1),
                                {cplx{1.5, 0.0}});
  const auto trivial = order_reduction_eval(one, 2.0, 3.0, 0.0, 1e-9);
  CHECK(std::abs(trivial.direct - 1.5) <= 1e-15);
  CHECK(std::abs(trivial.reduced - 1.5) <= 1e-9);

  Rng rng(23);
  std::vector<cplx> a(16);
  for (auto& c : a) c = {2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
  const DirichletPolynomial d(make_standard_frequency(StandardFrequency::log_naturals, 16), a);
  const auto r = order_reduction_eval(d, 2.0, 5.0, 0.0, 1e-9);
  CHECK(r.quadrature_converged);
  CHECK(r.error <= 1e-6);

  const auto loose = order_reduction_eval(d, 2.7, 2.5, cplx{0.2, 1.0}, 1e-3);
  const auto tight = order_reduction_eval(d, 2.7, 2.5, cplx{0.2, 1.0}, 1e-9);
  CHECK(tight.error <= 1e-6);
  CHECK((tight.error == 0.0 || loose.error / tight.error >= 5.0));
}

TEST_CASE("abscissa estimates") {
  const std::vector<double> t_grid{0.0};
  const auto zeta = ordinary(100000, "ones");
  const auto est = abscissa_uniform_riesz(zeta, 1.0, linear_span(9.0, 11.5, 8), t_grid);
  CHECK(std::abs(est.slope - 1.0) <= 0.1);

  const auto square = ordinary(10000, "power:2");
  const auto bounded = abscissa_uniform_riesz(square, 1.0, linear_span(2.0, 9.0, 8), t_grid);
  CHECK(bounded.slope <= 0.05);

  const DirichletPolynomial one(make_standard_frequency(StandardFrequency::log_naturals, 1),
                                {cplx{2.0, 0.0}});
  CHECK(abscissa_uniform_riesz(one, 1.0, linear_span(1.0, 5.0, 6), t_grid).slope == 0.0);
}
