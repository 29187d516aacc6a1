#pragma once

#include "riesz/frequency.hpp"
#include "riesz/numerics.hpp"
#include "riesz/rng.hpp"
#include "riesz/series.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace riesz {

/// Truncated Dirichlet group realised as the torus T^d: the n-th character
/// is omega -> prod_j omega_j^{M[n,j]} and l_n = sum_j M[n,j] b_j.
///
/// The decomposition is stored row-sparse; ordinary frequencies have only
/// a handful of nonzero exponents per row even when d runs into the thousands.
class GroupRealization {
public:
  struct Entry {
    std::uint32_t coord;
    long long power;
  };

  using DenseMatrix = std::vector<std::vector<long long>>;

  GroupRealization(FrequencyPtr frequency, std::vector<double> basis, const DenseMatrix& matrix);
  GroupRealization(FrequencyPtr frequency, std::vector<double> basis,
                   std::vector<std::vector<Entry>> sparse_rows);

  const Frequency& frequency() const noexcept { return *frequency_; }
  const FrequencyPtr& frequency_ptr() const noexcept { return frequency_; }
  std::span<const double> basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Nonzero exponents of row n (1-based).
  std::span<const Entry> row(std::size_t n) const;
  long long entry(std::size_t n, std::size_t j) const;
  DenseMatrix dense_matrix() const;

private:
  void validate() const;

  FrequencyPtr frequency_;
  std::vector<double> basis_;
  std::vector<std::vector<Entry>> rows_;
};

/// A point of the torus; every coordinate unimodular to 1e-12.
class GroupPoint {
public:
  explicit GroupPoint(std::vector<cplx> coords);

  std::span<const cplx> coords() const noexcept { return coords_; }
  std::size_t dimension() const noexcept { return coords_.size(); }
  cplx operator[](std::size_t j) const { return coords_[j]; }

  /// Coordinatewise product (the group operation).
  GroupPoint operator*(const GroupPoint& other) const;

private:
  std::vector<cplx> coords_;
};

enum class RealizationHint { automatic, naturals, prime_factorization, user_basis };

struct UserBasis {
  std::vector<double> basis;
  GroupRealization::DenseMatrix matrix;
};

GroupRealization realize_group(const FrequencyPtr& f, RealizationHint hint,
                               const std::optional<UserBasis>& user = {});

GroupPoint identity_point(const GroupRealization& g);

/// Independent uniform phases on every coordinate.
GroupPoint haar_sample(const GroupRealization& g, Rng& rng);

/// Kronecker flow: omega_j = e^{-i b_j t}.
GroupPoint flow_point(const GroupRealization& g, double t);

/// h_{l_n}(omega) for 1-based n.
cplx character_value(const GroupRealization& g, const GroupPoint& omega, std::size_t n);

/// h_{l_n}(omega) for every n.
std::vector<cplx> character_values(const GroupRealization& g, const GroupPoint& omega);

/// D^omega = sum a_n h_{l_n}(omega) e^{-l_n s}.
DirichletPolynomial vertical_limit(const DirichletPolynomial& d, const GroupRealization& g,
                                   const GroupPoint& omega);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Analytic polynomial sum_alpha c_alpha z^alpha. Exponent vectors are stored
/// without trailing zeros and zero coefficients are dropped, so equal
/// polynomials have equal term maps.
class AnalyticPolynomial {
public:
  using Exponent = std::vector<unsigned>;

  AnalyticPolynomial() = default;
  void add_term(Exponent alpha, cplx coefficient);
  const std::map<Exponent, cplx>& terms() const noexcept { return terms_; }

  friend bool operator==(const AnalyticPolynomial&, const AnalyticPolynomial&) = default;

private:
  std::map<Exponent, cplx> terms_;
};

/// z^alpha -> coefficient at n = p^alpha on (log 1, ..., log N).
DirichletPolynomial bohr_transform(const AnalyticPolynomial& p, std::size_t n);

/// Inverse of bohr_transform; the frequency must be ordinary.
AnalyticPolynomial inverse_bohr_transform(const DirichletPolynomial& d);

} // namespace riesz
