#include "riesz/error.hpp"
#include "riesz/rng.hpp"
#include "riesz/series.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace riesz;

namespace {

FrequencyPtr lognat(std::size_t n) {
  return make_standard_frequency(StandardFrequency::log_naturals, n);
}

std::vector<cplx> disc(Rng& rng, std::size_t n) {
  std::vector<cplx> out(n);
  for (auto& a : out) {
    a = std::polar(std::sqrt(rng.uniform()), 2 * std::numbers::pi * rng.uniform());
  }
  return out;
}

} // namespace

TEST_CASE("evaluation") {
  const auto f = lognat(100);
  const DirichletPolynomial constant(lognat(1), {1.0});
  CHECK(evaluate(constant, cplx{3.0, -7.0}) == cplx{1.0, 0.0});

  const DirichletPolynomial two_three(lognat(3), {0.0, 1.0, 1.0});
  CHECK(std::abs(evaluate(two_three, 2.0) - (1.0 / 4 + 1.0 / 9)) <= 1e-16);

  std::vector<cplx> ones(100, 1.0);
  const DirichletPolynomial zeta(f, ones);
  // sum_{n <= 100} n^-2 = 1.63498390018489286507716949818
  CHECK(std::abs(evaluate(zeta, 2.0) - 1.63498390018489286507716949818) <= 4e-16);

  CHECK_THROWS_AS(evaluate(zeta, -200.0), RangeError);
  CHECK_THROWS_AS(DirichletPolynomial(f, {1.0}), ValidationError);
  CHECK_THROWS_AS(DirichletPolynomial(lognat(1), {cplx{NAN, 0}}), ValidationError);
}

TEST_CASE("translation") {
  const DirichletPolynomial d(lognat(2), {0.0, 1.0});
  CHECK(std::abs(translate(d, 1.0).coefficients()[1] - 0.5) < 1e-16);
  CHECK(translate(d, 0.0).coefficients()[1] == cplx{1.0, 0.0});

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const DirichletPolynomial e(lognat(20), disc(rng, 20));
    const cplx s{rng.uniform() * 2 - 1, 10 * rng.uniform()};
    const cplx z{rng.uniform(), 5 * rng.uniform() - 2.5};
    const cplx direct = evaluate(e, s + z);
    CHECK(std::abs(evaluate(translate(e, z), s) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("partial sums use a strict cutoff") {
  const DirichletPolynomial d(lognat(3), {1.0, 1.0, 1.0});
  CHECK(partial_sum(d, std::log(3.0), 0.0) == cplx{2.0, 0.0});
  CHECK(partial_sum(d, 1e-300, 0.0) == cplx{1.0, 0.0}); // l_1 = 0 < x
  const DirichletPolynomial shifted(std::make_shared<const Frequency>(std::vector<double>{1, 2}),
                                    {1.0, 1.0});
  CHECK(partial_sum(shifted, 1.0, 0.0) == cplx{});
  CHECK(partial_sum(shifted, 0.5, 0.0) == cplx{});
  CHECK(partial_sum(d, 10.0, 0.5) == evaluate(d, 0.5));
  // jump at l_n from above
  CHECK(partial_sum(d, std::nextafter(std::log(3.0), 10.0), 0.0) == cplx{3.0, 0.0});
}

TEST_CASE("Riesz means") {
  const DirichletPolynomial d(lognat(3), {1.0, 1.0, 1.0});
  // 3 - log 6 / log 4 = 1.70751874963942190927313052803
  CHECK(std::abs(riesz_mean(d, RieszParams::first(1.0, std::log(4.0)), 0.0) -
                 1.70751874963942190927313052803) <= 1e-15);
  CHECK(std::abs(riesz_mean(d, RieszParams::second(1.0, std::log(4.0)), 0.0) - 1.5) <= 1e-15);

  Rng rng(5);
  const DirichletPolynomial e(lognat(30), disc(rng, 30));
  for (double x : {0.3, 1.0, std::log(7.0), 3.3}) {
    CHECK(riesz_mean(e, RieszParams::first(0.0, x), 0.25) == partial_sum(e, x, 0.25));
  }
  CHECK_THROWS_AS(riesz_mean(e, RieszParams::first(-1.0, 1.0), 0.0), ValidationError);
  CHECK_THROWS_AS(riesz_mean(e, RieszParams::first(1.0, 0.0), 0.0), ValidationError);
}

TEST_CASE("Riesz coefficients and weights") {
  Rng rng(9);
  const auto f = lognat(40);
  const DirichletPolynomial d(f, disc(rng, 40));
  const auto p = RieszParams::first(1.0, f->at(2));
  const auto w = riesz_weights(*f, p);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == 0.0);
  CHECK(w[2] == 0.0);
  for (auto kind : {RieszKind::first, RieszKind::second}) {
    for (double k : {0.0, 0.5, 1.0, 2.5}) {
      for (double x : {0.5, 2.0, 3.5, 10.0}) {
        const RieszParams q{kind, k, x};
        for (double v : riesz_weights(*f, q)) {
          CHECK(v >= 0.0);
          CHECK(v <= 1.0);
        }
        const cplx s{0.3, -2.0};
        CHECK(evaluate(riesz_coefficients(d, q), s) == riesz_mean(d, q, s));
      }
    }
  }
}

TEST_CASE("linearity") {
  Rng rng(13);
  const auto f = lognat(25);
  const DirichletPolynomial a(f, disc(rng, 25));
  const DirichletPolynomial b(f, disc(rng, 25));
  const cplx alpha{0.7, -1.2};
  const cplx beta{-2.0, 0.4};
  const auto p = RieszParams::first(0.7, 2.9);
  const cplx s{0.1, 4.0};
  const cplx lhs = riesz_mean(alpha * a + beta * b, p, s);
  const cplx rhs = alpha * riesz_mean(a, p, s) + beta * riesz_mean(b, p, s);
  CHECK(std::abs(lhs - rhs) <= 1e-13);
}

TEST_CASE("frequency mismatch uses exact equality") {
  const auto f = lognat(4);
  const auto g = lognat(4);
  const DirichletPolynomial a(f, {1, 2, 3, 4});
  const DirichletPolynomial b(g, {1, 1, 1, 1});
  CHECK((a + b).coefficients()[3] == cplx{5.0, 0.0});
  auto values = std::vector<double>(f->values().begin(), f->values().end());
  values[3] = std::nextafter(values[3], 10.0);
  const DirichletPolynomial c(std::make_shared<const Frequency>(values), {1, 1, 1, 1});
  CHECK_THROWS_AS(a + c, MismatchError);
}

TEST_CASE("second means through the exponential frequency") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(rng.uniform() * 64);
    const auto f = lognat(n);
    const DirichletPolynomial d(f, disc(rng, n));
    const DirichletPolynomial de(exp_frequency(*f), std::vector<cplx>(d.coefficients().begin(),
                                                                       d.coefficients().end()));
    const double k = 3 * rng.uniform();
    const double x = 0.1 + 1.2 * std::log(static_cast<double>(n) + 1) * rng.uniform();
    const auto s_coeffs = riesz_coefficients(d, RieszParams::second(k, x)).coefficients();
    const auto r_coeffs = riesz_coefficients(de, RieszParams::first(k, std::exp(x))).coefficients();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(s_coeffs[i] - r_coeffs[i]) <= 1e-15 * std::abs(d.coefficients()[i]));
    }
  }
}

TEST_CASE("Cesaro means") {
  const DirichletPolynomial d(lognat(5), {3.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(cesaro_mean(d, 2, 0.0) == cplx{1.5, 0.0});
  const DirichletPolynomial e(lognat(10), {1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  for (std::size_t nc = 1; nc <= 10; ++nc) {
    CHECK(std::abs(cesaro_mean(e, nc, 0.0) - (nc - 1.0) / nc) <= 1e-15);
  }
  CHECK_THROWS_AS(cesaro_mean(d, 6, 0.0), RangeError);
  CHECK_THROWS_AS(cesaro_mean(d, 0, 0.0), ValidationError);
  const DirichletPolynomial nat(make_standard_frequency(StandardFrequency::naturals, 3), {1, 1, 1});
  CHECK_THROWS_AS(cesaro_mean(nat, 2, 0.0), ValidationError);

  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(rng.uniform() * 64);
    const DirichletPolynomial p(lognat(n), disc(rng, n));
    const auto nc = 1 + static_cast<std::size_t>(rng.uniform() * n);
    const cplx s{rng.uniform(), 3 * rng.uniform()};
    // terms a_n n^{-s} carried by the frequency (n)
    const auto shifted = translate(p, s);
    const auto terms = shifted.coefficients();
    const DirichletPolynomial pe(exp_frequency(p.frequency()),
                                 std::vector<cplx>(terms.begin(), terms.end()));
    const cplx c = cesaro_mean(p, nc, s);
    const cplx r = riesz_mean(pe, RieszParams::first(1.0, static_cast<double>(nc)), 0.0);
    CHECK(std::abs(c - r) <= 1e-12 * std::max(std::abs(r), 1e-300));
  }
}
