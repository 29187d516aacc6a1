#include "riesz/series.hpp"

#include "riesz/error.hpp"

#include <cmath>
#include <string>

namespace riesz {
namespace {

// e^{-lambda s}; RangeError when the modulus overflows.
cplx exp_term(double lambda, cplx s) {
  const double log_mod = -lambda * s.real();
  if (log_mod > 709.0) {
    throw RangeError("e^{-lambda s} overflows (lambda Re s = " + std::to_string(-log_mod) + ")");
  }
  if (lambda == 0.0) {
    return {1.0, 0.0};
  }
  return std::polar(std::exp(log_mod), -lambda * s.imag());
}

} // namespace

DirichletPolynomial::DirichletPolynomial(FrequencyPtr frequency, std::vector<cplx> coefficients)
    : frequency_(std::move(frequency)), coefficients_(std::move(coefficients)) {
  if (!frequency_) {
    throw ValidationError("Dirichlet polynomial needs a frequency");
  }
  if (coefficients_.size() != frequency_->size()) {
    throw ValidationError("coefficient count " + std::to_string(coefficients_.size()) +
                          " does not match frequency length " +
                          std::to_string(frequency_->size()));
  }
  for (const auto& a : coefficients_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("coefficients must be finite");
    }
  }
}

DirichletPolynomial DirichletPolynomial::with_coefficients(std::vector<cplx> coefficients) const {
  return {frequency_, std::move(coefficients)};
}

DirichletPolynomial DirichletPolynomial::truncate(std::size_t n) const {
  auto f = std::make_shared<const Frequency>(frequency_->prefix(n));
  return {std::move(f), std::vector<cplx>(coefficients_.begin(),
                                          coefficients_.begin() + static_cast<long>(n))};
}

DirichletPolynomial DirichletPolynomial::operator*(cplx c) const {
  std::vector<cplx> out(coefficients_);
  for (auto& a : out) {
    a *= c;
  }
  return with_coefficients(std::move(out));
}

DirichletPolynomial DirichletPolynomial::operator+(const DirichletPolynomial& other) const {
  require_same_frequency(*frequency_, other.frequency(), "polynomial sum");
  std::vector<cplx> out(coefficients_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += other.coefficients_[i];
  }
  return with_coefficients(std::move(out));
}

DirichletPolynomial DirichletPolynomial::operator-(const DirichletPolynomial& other) const {
  return *this + other * cplx{-1.0, 0.0};
}

void require_same_frequency(const Frequency& a, const Frequency& b, const char* what) {
  if (&a != &b && !(a == b)) {
    throw MismatchError(std::string(what) + ": frequencies differ");
  }
}

void RieszParams::validate() const {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw ValidationError("Riesz order k must be finite and >= 0");
  }
  if (!(x > 0.0)) {
    throw ValidationError("Riesz length x must be > 0");
  }
}

cplx evaluate(const DirichletPolynomial& d, cplx s) {
  const auto lam = d.frequency().values();
  const auto a = d.coefficients();
  CompensatedComplexSum sum;
  for (std::size_t n = 0; n < a.size(); ++n) {
    sum.add(a[n] * exp_term(lam[n], s));
  }
  return sum.value();
}

DirichletPolynomial translate(const DirichletPolynomial& d, cplx z) {
  const auto lam = d.frequency().values();
  std::vector<cplx> out(d.coefficients().begin(), d.coefficients().end());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] *= exp_term(lam[n], z);
  }
  return d.with_coefficients(std::move(out));
}

cplx partial_sum(const DirichletPolynomial& d, double x, cplx s) {
  const auto lam = d.frequency().values();
  const auto a = d.coefficients();
  CompensatedComplexSum sum;
  for (std::size_t n = 0; n < a.size() && lam[n] < x; ++n) {
    sum.add(a[n] * exp_term(lam[n], s));
  }
  return sum.value();
}

double riesz_weight(const RieszParams& p, double lambda) {
  if (!(lambda < p.x)) {
    return 0.0;
  }
  if (p.k == 0.0) {
    return 1.0;
  }
  if (p.kind == RieszKind::first) {
    return one_minus_pow(lambda / p.x, p.k);
  }
  // (1 - e^{lambda - x})^k with the base formed by expm1 to keep digits near the cutoff
  const double base = -std::expm1(lambda - p.x);
  return std::exp(p.k * std::log(base));
}

std::vector<double> riesz_weights(const Frequency& f, const RieszParams& p) {
  p.validate();
  std::vector<double> w(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    w[n] = riesz_weight(p, f[n]);
  }
  return w;
}

cplx riesz_mean(const DirichletPolynomial& d, const RieszParams& p, cplx s) {
  p.validate();
  const auto lam = d.frequency().values();
  const auto a = d.coefficients();
  CompensatedComplexSum sum;
  for (std::size_t n = 0; n < a.size() && lam[n] < p.x; ++n) {
    sum.add((a[n] * riesz_weight(p, lam[n])) * exp_term(lam[n], s));
  }
  return sum.value();
}

DirichletPolynomial riesz_coefficients(const DirichletPolynomial& d, const RieszParams& p) {
  const auto w = riesz_weights(d.frequency(), p);
  std::vector<cplx> out(d.coefficients().begin(), d.coefficients().end());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] *= w[n];
  }
  return d.with_coefficients(std::move(out));
}

cplx cesaro_mean(const DirichletPolynomial& d, std::size_t nc, cplx s) {
  if (nc == 0) {
    throw ValidationError("cesaro_mean: Nc must be positive");
  }
  if (!is_log_naturals(d.frequency())) {
    throw ValidationError("cesaro_mean is defined for the ordinary frequency (log n) only");
  }
  if (d.size() < nc) {
    throw RangeError("cesaro_mean: frequency prefix of length " + std::to_string(d.size()) +
                     " does not cover n <= " + std::to_string(nc));
  }
  const auto lam = d.frequency().values();
  const auto a = d.coefficients();
  // partial sums P_k = sum_{n <= k} a_n n^{-s}, k = 0..Nc-1; P_0 = 0
  CompensatedComplexSum running;
  CompensatedComplexSum total;
  for (std::size_t k = 1; k < nc; ++k) {
    running.add(a[k - 1] * exp_term(lam[k - 1], s));
    total.add(running.value());
  }
  return total.value() / static_cast<double>(nc);
}

} // namespace riesz
