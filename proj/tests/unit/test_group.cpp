#include "riesz/error.hpp"
#include "riesz/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace riesz;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("prime factorization realization") {
  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 8);
  const auto g = realize_group(f, RealizationHint::prime_factorization);
  REQUIRE(g.dimension() == 4);
  CHECK(g.basis()[0] == std::log(2.0));
  CHECK(g.basis()[3] == std::log(7.0));
  const auto m = g.dense_matrix();
  CHECK(m[5] == std::vector<long long>{1, 1, 0, 0});
  CHECK(m[7] == std::vector<long long>{3, 0, 0, 0});
  CHECK(m[0] == std::vector<long long>{0, 0, 0, 0});

  const auto one = realize_group(make_standard_frequency(StandardFrequency::log_naturals, 1),
                                 RealizationHint::prime_factorization);
  CHECK(one.dimension() == 1);
}

TEST_CASE("naturals and automatic realization") {
  const auto f = make_standard_frequency(StandardFrequency::naturals, 3);
  const auto g = realize_group(f, RealizationHint::naturals);
  CHECK(g.dimension() == 1);
  CHECK(g.dense_matrix() == GroupRealization::DenseMatrix{{0}, {1}, {2}});
  CHECK(realize_group(f, RealizationHint::automatic).dimension() == 1);

  const auto lg = make_standard_frequency(StandardFrequency::log_naturals, 30);
  CHECK(realize_group(lg, RealizationHint::automatic).dimension() == 10);

  const auto irr = std::make_shared<const Frequency>(std::vector<double>{0.0, std::sqrt(2.0)});
  CHECK_THROWS_AS(realize_group(irr, RealizationHint::automatic), RealizationError);
  CHECK_THROWS_AS(realize_group(irr, RealizationHint::naturals), RealizationError);
  CHECK_THROWS_AS(realize_group(f, RealizationHint::prime_factorization), RealizationError);
}

TEST_CASE("user basis") {
  const auto irr = std::make_shared<const Frequency>(
      std::vector<double>{0.0, std::sqrt(2.0), 1.0 + std::sqrt(2.0)});
  const UserBasis ok{{1.0, std::sqrt(2.0)}, {{0, 0}, {0, 1}, {1, 1}}};
  const auto g = realize_group(irr, RealizationHint::user_basis, ok);
  CHECK(g.dimension() == 2);
  const UserBasis bad{{1.0, std::sqrt(2.0)}, {{0, 0}, {0, 1}, {2, 1}}};
  CHECK_THROWS_AS(realize_group(irr, RealizationHint::user_basis, bad), ValidationError);
  const UserBasis dup{{1.0}, {{0}, {0}, {0}}};
  const auto zeros = std::make_shared<const Frequency>(std::vector<double>{0.0, 1e-13, 2e-13});
  CHECK_THROWS_AS(realize_group(zeros, RealizationHint::user_basis, dup), ValidationError);
  CHECK_THROWS_AS(realize_group(irr, RealizationHint::user_basis), ValidationError);

  // negative exponents are characters too
  const auto neg = std::make_shared<const Frequency>(std::vector<double>{1.0, 2.0});
  const UserBasis nb{{3.0, 1.0}, {{1, -2}, {1, -1}}};
  const auto gn = realize_group(neg, RealizationHint::user_basis, nb);
  const GroupPoint w({std::polar(1.0, 0.3), std::polar(1.0, 0.7)});
  CHECK(std::abs(character_value(gn, w, 1) - std::polar(1.0, 0.3 - 1.4)) < 1e-14);
}

TEST_CASE("haar samples") {
  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 4);
  const auto g = realize_group(f, RealizationHint::automatic);
  Rng a(42);
  Rng b(42);
  const auto pa = haar_sample(g, a);
  const auto pb = haar_sample(g, b);
  for (std::size_t j = 0; j < g.dimension(); ++j) {
    CHECK(pa[j] == pb[j]);
  }

  constexpr std::size_t samples = 100000;
  Rng rng(7);
  cplx mean1{};
  cplx mean12{};
  std::vector<double> args;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto w = haar_sample(g, rng);
    mean1 += w[0];
    mean12 += w[0] * std::conj(w[1]);
    args.push_back(std::arg(w[0]) < 0 ? std::arg(w[0]) + 2 * std::numbers::pi : std::arg(w[0]));
  }
  CHECK(std::abs(mean1) / samples <= 0.02);
  CHECK(std::abs(mean12) / samples <= 0.02);

  std::sort(args.begin(), args.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double cdf = args[i] / (2 * std::numbers::pi);
    ks = std::max({ks, std::abs(cdf - static_cast<double>(i) / samples),
                   std::abs(cdf - static_cast<double>(i + 1) / samples)});
  }
  CHECK(ks <= 1.63 / std::sqrt(static_cast<double>(samples)));
}

TEST_CASE("Kronecker flow") {
  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 200);
  const auto g = realize_group(f, RealizationHint::automatic);
  const auto id = flow_point(g, 0.0);
  for (const auto& c : id.coords()) {
    CHECK(c == cplx{1.0, 0.0});
  }
  const auto w = flow_point(g, 1.0);
  CHECK(std::abs(w[0] - std::exp(-I * std::log(2.0))) < 1e-15);

  const auto nat = realize_group(make_standard_frequency(StandardFrequency::naturals, 4),
                                 RealizationHint::naturals);
  CHECK(std::abs(flow_point(nat, std::numbers::pi)[0] - cplx{-1.0, 0.0}) < 1e-15);

  double worst = 0.0;
  for (double t : {-1234.5, -3.0, 0.1, 2.0, 77.7, 1e4}) {
    const auto p = flow_point(g, t);
    for (std::size_t n = 1; n <= f->size(); ++n) {
      worst = std::max(worst, std::abs(character_value(g, p, n) - std::exp(-I * f->at(n) * t)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("characters") {
  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 8);
  const auto g = realize_group(f, RealizationHint::automatic);
  const GroupPoint w({I, cplx{-1, 0}, cplx{1, 0}, cplx{1, 0}});
  CHECK(std::abs(character_value(g, w, 6) - (-I)) < 1e-15);
  CHECK(character_value(g, w, 1) == cplx{1.0, 0.0});
  CHECK_THROWS_AS(character_value(g, w, 0), IndexError);
  CHECK_THROWS_AS(character_value(g, w, 9), IndexError);
  CHECK_THROWS_AS(character_value(g, GroupPoint({I}), 2), MismatchError);
  CHECK_THROWS_AS(GroupPoint({cplx{1.1, 0.0}}), ValidationError);

  // homomorphism
  Rng rng(3);
  const auto big = make_standard_frequency(StandardFrequency::log_naturals, 1000);
  const auto gb = realize_group(big, RealizationHint::automatic);
  const auto a = haar_sample(gb, rng);
  const auto b = haar_sample(gb, rng);
  const auto ab = a * b;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 1000; ++n) {
    const auto v = character_value(gb, ab, n);
    worst = std::max(worst, std::abs(v - character_value(gb, a, n) * character_value(gb, b, n)));
    worst = std::max(worst, std::abs(std::abs(v) - 1.0));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("large exponents stay unimodular") {
  const auto f = std::make_shared<const Frequency>(std::vector<double>{0.0, 1e6, 2e6 + 1});
  const UserBasis ub{{1.0}, {{0}, {1000000}, {2000001}}};
  const auto g = realize_group(f, RealizationHint::user_basis, ub);
  const auto p = flow_point(g, 0.123);
  CHECK(std::abs(std::abs(character_value(g, p, 3)) - 1.0) < 1e-12);
  CHECK(std::abs(character_value(g, p, 2) - std::polar(1.0, -0.123e6)) < 1e-8);
}

TEST_CASE("vertical limits") {
  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 4);
  const auto g = realize_group(f, RealizationHint::automatic);
  const DirichletPolynomial d(f, {0, 1, 0, 0});
  const GroupPoint w({I, cplx{1, 0}});
  const auto v = vertical_limit(d, g, w);
  CHECK(v.coefficients()[1] == I);

  const DirichletPolynomial e(f, {1.0, cplx{2, 1}, -0.5, 3.0});
  const auto tau = 0.77;
  const auto vt = vertical_limit(e, g, flow_point(g, tau));
  const auto tr = translate(e, cplx{0.0, tau});
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(std::abs(vt.coefficients()[n] - tr.coefficients()[n]) < 1e-14);
  }
  const auto vi = vertical_limit(e, g, identity_point(g));
  CHECK(std::equal(vi.coefficients().begin(), vi.coefficients().end(),
                   e.coefficients().begin()));

  const auto other = make_standard_frequency(StandardFrequency::log_naturals, 5);
  CHECK_THROWS_AS(vertical_limit(DirichletPolynomial(other, std::vector<cplx>(5)), g, w),
                  MismatchError);
}

TEST_CASE("Bohr transform") {
  AnalyticPolynomial z1;
  z1.add_term({1}, 1.0);
  const auto d1 = bohr_transform(z1, 4);
  CHECK(d1.coefficients()[1] == cplx{1.0, 0.0});
  CHECK(d1.coefficients()[0] == cplx{});

  AnalyticPolynomial one;
  one.add_term({}, 1.0);
  CHECK(bohr_transform(one, 1).coefficients()[0] == cplx{1.0, 0.0});

  AnalyticPolynomial z12;
  z12.add_term({1, 1}, cplx{0.5, -2.0});
  const auto d6 = bohr_transform(z12, 10);
  CHECK(d6.coefficients()[5] == cplx{0.5, -2.0});
  CHECK(inverse_bohr_transform(d6) == z12);

  AnalyticPolynomial big;
  big.add_term({0, 0, 1}, 1.0);
  CHECK_THROWS_AS(bohr_transform(big, 4), RangeError);
  CHECK_THROWS_AS(z1.add_term({1, 0}, 2.0), ValidationError);

  const auto nat = make_standard_frequency(StandardFrequency::naturals, 3);
  CHECK_THROWS_AS(inverse_bohr_transform(DirichletPolynomial(nat, std::vector<cplx>(3))),
                  ValidationError);
}

TEST_CASE("primes") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(primes_up_to(10000).size() == 1229);
}
