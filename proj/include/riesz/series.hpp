#pragma once

#include "riesz/frequency.hpp"
#include "riesz/numerics.hpp"

#include <span>
#include <vector>

namespace riesz {

/// D = sum_n a_n e^{-l_n s} over a finite frequency prefix.
class DirichletPolynomial {
public:
  DirichletPolynomial(FrequencyPtr frequency, std::vector<cplx> coefficients);

  const Frequency& frequency() const noexcept { return *frequency_; }
  const FrequencyPtr& frequency_ptr() const noexcept { return frequency_; }
  std::span<const cplx> coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }

  /// Same frequency, new coefficients.
  DirichletPolynomial with_coefficients(std::vector<cplx> coefficients) const;

  /// Leading N terms.
  DirichletPolynomial truncate(std::size_t n) const;

  DirichletPolynomial operator*(cplx c) const;
  friend DirichletPolynomial operator*(cplx c, const DirichletPolynomial& d) { return d * c; }
  DirichletPolynomial operator+(const DirichletPolynomial& other) const;
  DirichletPolynomial operator-(const DirichletPolynomial& other) const;

private:
  FrequencyPtr frequency_;
  std::vector<cplx> coefficients_;
};

/// Throws MismatchError unless both frequencies are bitwise equal.
void require_same_frequency(const Frequency& a, const Frequency& b, const char* what);

enum class RieszKind { first, second };

struct RieszParams {
  RieszKind kind = RieszKind::first;
  double k = 1.0;
  double x = 1.0;

  static RieszParams first(double k, double x) { return {RieszKind::first, k, x}; }
  static RieszParams second(double k, double x) { return {RieszKind::second, k, x}; }
  void validate() const;
};

/// sum_n a_n e^{-l_n s}, compensated, in increasing n.
cplx evaluate(const DirichletPolynomial& d, cplx s);

/// Coefficients a_n e^{-l_n z}.
DirichletPolynomial translate(const DirichletPolynomial& d, cplx z);

/// sum over l_n < x (strict) of a_n e^{-l_n s}.
cplx partial_sum(const DirichletPolynomial& d, double x, cplx s);

/// Riesz weight of a single frequency value: (1 - l/x)^k or (1 - e^{l-x})^k
/// for l < x, and 0 for l >= x.
double riesz_weight(const RieszParams& p, double lambda);

/// Weights w_n for every entry of the frequency.
std::vector<double> riesz_weights(const Frequency& f, const RieszParams& p);

cplx riesz_mean(const DirichletPolynomial& d, const RieszParams& p, cplx s);

/// The polynomial with coefficients a_n w_n; evaluating it reproduces riesz_mean.
DirichletPolynomial riesz_coefficients(const DirichletPolynomial& d, const RieszParams& p);

/// (1/Nc) sum_{k=0}^{Nc-1} sum_{n <= k} a_n n^{-s}, for ordinary (log n) frequency.
cplx cesaro_mean(const DirichletPolynomial& d, std::size_t nc, cplx s);

} // namespace riesz
