#include "riesz/group.hpp"

#include "riesz/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace riesz {
namespace {

constexpr double kReconstructionTol = 1e-12;
constexpr double kUnimodularTol = 1e-12;

std::vector<std::vector<GroupRealization::Entry>>
sparsify(const GroupRealization::DenseMatrix& m, std::size_t d) {
  std::vector<std::vector<GroupRealization::Entry>> rows(m.size());
  for (std::size_t n = 0; n < m.size(); ++n) {
    if (m[n].size() != d) {
      throw ValidationError("decomposition row " + std::to_string(n + 1) + " has " +
                            std::to_string(m[n].size()) + " entries, basis has " +
                            std::to_string(d));
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (m[n][j] != 0) {
        rows[n].push_back({static_cast<std::uint32_t>(j), m[n][j]});
      }
    }
  }
  return rows;
}

// Exponent vector of n over the supplied primes; n must factor completely.
std::vector<GroupRealization::Entry> factor_row(std::uint64_t n,
                                                const std::vector<std::uint64_t>& primes) {
  std::vector<GroupRealization::Entry> row;
  for (std::size_t j = 0; j < primes.size() && n > 1; ++j) {
    const auto p = primes[j];
    if (p * p > n) {
      // remaining n is prime
      const auto it = std::lower_bound(primes.begin(), primes.end(), n);
      row.push_back({static_cast<std::uint32_t>(it - primes.begin()), 1});
      n = 1;
      break;
    }
    long long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      row.push_back({static_cast<std::uint32_t>(j), e});
    }
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.coord < b.coord; });
  return row;
}

GroupRealization realize_naturals(const FrequencyPtr& f) {
  std::vector<std::vector<GroupRealization::Entry>> rows(f->size());
  for (std::size_t n = 0; n < f->size(); ++n) {
    const double v = (*f)[n];
    if (v != std::nearbyint(v) || v > 9.0e15) {
      throw RealizationError("naturals realization needs integer frequencies (value " +
                             std::to_string(v) + " at index " + std::to_string(n + 1) + ")");
    }
    if (v != 0.0) {
      rows[n].push_back({0, static_cast<long long>(v)});
    }
  }
  return {f, {1.0}, std::move(rows)};
}

GroupRealization realize_primes(const FrequencyPtr& f) {
  if (!is_log_naturals(*f)) {
    throw RealizationError("prime factorization realization needs (log 1, ..., log N)");
  }
  const auto primes = primes_up_to(f->size());
  std::vector<double> basis;
  basis.reserve(primes.size());
  for (auto p : primes) {
    basis.push_back(std::log(static_cast<double>(p)));
  }
  if (basis.empty()) {
    // N = 1: only the trivial character; keep one coordinate (log 2) so d >= 1
    basis.push_back(std::log(2.0));
  }
  std::vector<std::vector<GroupRealization::Entry>> rows(f->size());
  for (std::size_t n = 1; n <= f->size(); ++n) {
    rows[n - 1] = factor_row(n, primes);
  }
  return {f, std::move(basis), std::move(rows)};
}

} // namespace

GroupRealization::GroupRealization(FrequencyPtr frequency, std::vector<double> basis,
                                   const DenseMatrix& matrix)
    : GroupRealization(frequency, basis, sparsify(matrix, basis.size())) {}

GroupRealization::GroupRealization(FrequencyPtr frequency, std::vector<double> basis,
                                   std::vector<std::vector<Entry>> sparse_rows)
    : frequency_(std::move(frequency)), basis_(std::move(basis)), rows_(std::move(sparse_rows)) {
  validate();
}

void GroupRealization::validate() const {
  if (!frequency_) {
    throw ValidationError("group realization needs a frequency");
  }
  if (basis_.empty()) {
    throw ValidationError("group realization needs a basis of dimension >= 1");
  }
  if (rows_.size() != frequency_->size()) {
    throw ValidationError("decomposition has " + std::to_string(rows_.size()) +
                          " rows, frequency has " + std::to_string(frequency_->size()));
  }
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    CompensatedSum recon;
    for (const auto& e : rows_[n]) {
      if (e.coord >= basis_.size()) {
        throw ValidationError("decomposition entry outside the basis");
      }
      recon.add(static_cast<double>(e.power) * basis_[e.coord]);
    }
    const double lam = (*frequency_)[n];
    if (std::abs(recon.value() - lam) > kReconstructionTol * std::max(1.0, std::abs(lam))) {
      throw ValidationError("decomposition row " + std::to_string(n + 1) +
                            " does not reconstruct the frequency value " + std::to_string(lam));
    }
  }
  std::set<std::vector<std::pair<std::uint32_t, long long>>> seen;
  for (const auto& r : rows_) {
    std::vector<std::pair<std::uint32_t, long long>> key;
    key.reserve(r.size());
    for (const auto& e : r) {
      key.emplace_back(e.coord, e.power);
    }
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) {
      throw ValidationError("decomposition rows must be pairwise distinct");
    }
  }
}

std::span<const GroupRealization::Entry> GroupRealization::row(std::size_t n) const {
  if (n == 0 || n > rows_.size()) {
    throw IndexError("character index " + std::to_string(n) + " outside 1.." +
                     std::to_string(rows_.size()));
  }
  return rows_[n - 1];
}

long long GroupRealization::entry(std::size_t n, std::size_t j) const {
  for (const auto& e : row(n)) {
    if (e.coord == j) {
      return e.power;
    }
  }
  return 0;
}

GroupRealization::DenseMatrix GroupRealization::dense_matrix() const {
  DenseMatrix m(rows_.size(), std::vector<long long>(basis_.size(), 0));
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    for (const auto& e : rows_[n]) {
      m[n][e.coord] = e.power;
    }
  }
  return m;
}

GroupPoint::GroupPoint(std::vector<cplx> coords) : coords_(std::move(coords)) {
  for (const auto& w : coords_) {
    if (std::abs(std::abs(w) - 1.0) > kUnimodularTol) {
      throw ValidationError("group point coordinates must be unimodular");
    }
  }
}

GroupPoint GroupPoint::operator*(const GroupPoint& other) const {
  if (other.dimension() != dimension()) {
    throw MismatchError("group points of different dimension");
  }
  std::vector<cplx> out(coords_);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] *= other.coords_[j];
    out[j] /= std::abs(out[j]);
  }
  return GroupPoint(std::move(out));
}

GroupRealization realize_group(const FrequencyPtr& f, RealizationHint hint,
                               const std::optional<UserBasis>& user) {
  if (!f) {
    throw ValidationError("realize_group: null frequency");
  }
  switch (hint) {
  case RealizationHint::naturals:
    return realize_naturals(f);
  case RealizationHint::prime_factorization:
    return realize_primes(f);
  case RealizationHint::user_basis:
    if (!user) {
      throw ValidationError("user_basis realization needs a basis and matrix");
    }
    return {f, user->basis, user->matrix};
  case RealizationHint::automatic:
    try {
      return realize_naturals(f);
    } catch (const RealizationError&) {
    }
    try {
      return realize_primes(f);
    } catch (const RealizationError&) {
    }
    throw RealizationError("no integer decomposition found for frequency '" + f->label() +
                           "'; supply a user basis");
  }
  throw ValidationError("unknown realization hint");
}

GroupPoint identity_point(const GroupRealization& g) {
  return GroupPoint(std::vector<cplx>(g.dimension(), cplx{1.0, 0.0}));
}

GroupPoint haar_sample(const GroupRealization& g, Rng& rng) {
  std::vector<cplx> coords(g.dimension());
  for (auto& w : coords) {
    w = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  }
  return GroupPoint(std::move(coords));
}

GroupPoint flow_point(const GroupRealization& g, double t) {
  std::vector<cplx> coords(g.dimension());
  const auto b = g.basis();
  for (std::size_t j = 0; j < coords.size(); ++j) {
    coords[j] = std::polar(1.0, -b[j] * t);
  }
  return GroupPoint(std::move(coords));
}

cplx character_value(const GroupRealization& g, const GroupPoint& omega, std::size_t n) {
  if (omega.dimension() != g.dimension()) {
    throw MismatchError("group point dimension does not match the realization");
  }
  cplx value{1.0, 0.0};
  for (const auto& e : g.row(n)) {
    value *= unimodular_pow(omega[e.coord], e.power);
  }
  return value;
}

std::vector<cplx> character_values(const GroupRealization& g, const GroupPoint& omega) {
  std::vector<cplx> out(g.size());
  for (std::size_t n = 1; n <= g.size(); ++n) {
    out[n - 1] = character_value(g, omega, n);
  }
  return out;
}

DirichletPolynomial vertical_limit(const DirichletPolynomial& d, const GroupRealization& g,
                                   const GroupPoint& omega) {
  require_same_frequency(d.frequency(), g.frequency(), "vertical_limit");
  const auto chars = character_values(g, omega);
  std::vector<cplx> out(d.coefficients().begin(), d.coefficients().end());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] *= chars[n];
  }
  return d.with_coefficients(std::move(out));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) {
    return primes;
  }
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) {
      continue;
    }
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) {
      composite[j] = true;
    }
  }
  return primes;
}

void AnalyticPolynomial::add_term(Exponent alpha, cplx coefficient) {
  while (!alpha.empty() && alpha.back() == 0) {
    alpha.pop_back();
  }
  if (terms_.count(alpha) != 0) {
    throw ValidationError("analytic polynomial: repeated monomial");
  }
  if (coefficient != cplx{}) {
    terms_.emplace(std::move(alpha), coefficient);
  }
}

DirichletPolynomial bohr_transform(const AnalyticPolynomial& p, std::size_t n) {
  auto f = make_standard_frequency(StandardFrequency::log_naturals, n);
  std::size_t max_dim = 0;
  for (const auto& [alpha, c] : p.terms()) {
    max_dim = std::max(max_dim, alpha.size());
  }
  // the j-th prime is at most ~ j (log j + log log j) + a bit; grow until enough
  std::uint64_t bound = 16;
  auto primes = primes_up_to(bound);
  while (primes.size() < max_dim) {
    bound *= 2;
    primes = primes_up_to(bound);
  }
  std::vector<cplx> coeffs(n, cplx{});
  for (const auto& [alpha, c] : p.terms()) {
    std::uint64_t value = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      for (unsigned e = 0; e < alpha[j]; ++e) {
        if (value > n / primes[j]) {
          throw RangeError("bohr_transform: monomial index exceeds the prefix length " +
                           std::to_string(n));
        }
        value *= primes[j];
      }
    }
    coeffs[value - 1] = c;
  }
  return {std::move(f), std::move(coeffs)};
}

AnalyticPolynomial inverse_bohr_transform(const DirichletPolynomial& d) {
  if (!is_log_naturals(d.frequency())) {
    throw ValidationError("inverse_bohr_transform needs the ordinary frequency (log n)");
  }
  const auto primes = primes_up_to(d.size());
  AnalyticPolynomial p;
  const auto a = d.coefficients();
  for (std::size_t n = 1; n <= a.size(); ++n) {
    if (a[n - 1] == cplx{}) {
      continue;
    }
    AnalyticPolynomial::Exponent alpha;
    for (const auto& e : factor_row(n, primes)) {
      if (alpha.size() <= e.coord) {
        alpha.resize(e.coord + 1, 0);
      }
      alpha[e.coord] = static_cast<unsigned>(e.power);
    }
    p.add_term(std::move(alpha), a[n - 1]);
  }
  return p;
}

} // namespace riesz
