#pragma once

#include "riesz/group.hpp"
#include "riesz/io.hpp"
#include "riesz/series.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace riesz {

/// CSV text plus a JSON summary of one analysis run.
struct Report {
  std::string csv;
  io::json summary;
};

/// Columns (x, re, im).
Report converge_report(const DirichletPolynomial& d, RieszKind kind, double k, cplx s,
                       std::span<const double> x_grid, double tol);

/// which = "first" compares (l, k) with (l, ell); "second" compares second
/// and first means of order k. Columns (x, hypothesis_re, hypothesis_im,
/// conclusion_re, conclusion_im).
Report consistency_report(const DirichletPolynomial& d, const std::string& which, double k,
                          double ell, cplx s, std::span<const double> x_grid, double tol);

/// Columns (x, sup_norm).
Report abscissa_report(const DirichletPolynomial& d, double k, std::span<const double> x_grid,
                       std::span<const double> t_grid);

/// Columns (seed, max_value, arg_x). Sample i uses the point drawn from
/// Rng(seed_i) with seed_i derived from (seed, i); an empty grid means the
/// default maximal grid.
Report maximal_report(const DirichletPolynomial& d, const GroupRealization& g, double k,
                      std::size_t samples, std::uint64_t seed, std::span<const double> x_grid);

/// Columns (norm, p, value, stderr) for the l2, Besicovitch and Haar norms.
Report norms_report(const DirichletPolynomial& d, const GroupRealization& g, double half_width,
                    std::size_t samples, std::uint64_t seed);

/// Columns (alpha, mass) of the Riesz maximal function tail.
Report weaktype_report(const DirichletPolynomial& d, const GroupRealization& g, double k,
                       std::size_t samples, std::uint64_t seed);

/// Runs the standard parameter grid of a verification check:
/// perron | kernel | ftrep | abel | secondmeans. Columns (params..., lhs, rhs, passed).
Report verify_report(const std::string& check, std::uint64_t seed = 1);

} // namespace riesz
