#include "riesz/reports.hpp"

#include "riesz/analysis.hpp"
#include "riesz/error.hpp"
#include "riesz/summability.hpp"
#include "riesz/verify.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace riesz {
namespace {

using io::CsvWriter;
using io::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json convergence_json(const ConvergenceReport& r) {
  json j{{"converged", r.converged}, {"cauchy_residual", r.cauchy_residual}};
  j["limit"] = r.limit ? complex_json(*r.limit) : json(nullptr);
  return j;
}

std::uint64_t sample_seed(std::uint64_t seed, std::string_view stream, std::size_t i) {
  return Rng::derive(seed, stream_key(stream), i).next_u64();
}

std::vector<GroupPoint> seeded_points(const GroupRealization& g, std::uint64_t seed,
                                      std::string_view stream, std::size_t samples,
                                      std::vector<std::uint64_t>* seeds = nullptr) {
  std::vector<GroupPoint> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto s = sample_seed(seed, stream, i);
    Rng rng(s);
    out.push_back(haar_sample(g, rng));
    if (seeds) {
      seeds->push_back(s);
    }
  }
  return out;
}

Report verify_perron() {
  constexpr double tol = 1e-3;
  CsvWriter csv({"k", "y", "alpha", "T", "lhs", "rhs", "passed"});
  bool all = true;
  for (double k : {0.5, 1.0, 2.0}) {
    for (double y : {-1.0, 0.0, 0.5, 2.0}) {
      for (double alpha : {0.5, 1.0}) {
        const double t = perron_truncation(k, y, alpha, 0.5 * tol);
        const auto r = perron_kernel_check(k, y, alpha, t, tol);
        all = all && r.passed;
        csv.cell(k).cell(y).cell(alpha).cell(t).cell(r.lhs.real()).cell(r.rhs.real()).cell(
            r.passed);
        csv.end_row();
      }
    }
  }
  return {csv.str(), {{"check", "perron"}, {"all_passed", all}}};
}

Report verify_kernel() {
  CsvWriter csv({"u", "v", "a", "k", "lhs", "rhs", "passed"});
  bool all = true;
  std::size_t cells = 0;
  for (double u : {0.0, 0.5, 1.0}) {
    for (double v : {0.1, 1.0, 2.0}) {
      for (double a : {0.0, 1.0, -1.0, 5.0, -5.0}) {
        for (double k : {0.25, 0.5, 1.0}) {
          const auto r = kernel_bound_check(u, v, a, k);
          all = all && r.passed;
          ++cells;
          csv.cell(u).cell(v).cell(a).cell(k).cell(r.lhs.real()).cell(r.rhs.real()).cell(r.passed);
          csv.end_row();
        }
      }
    }
  }
  return {csv.str(), {{"check", "kernel"}, {"all_passed", all}, {"cells", cells}}};
}

Report verify_ftrep(std::uint64_t seed) {
  CsvWriter csv({"instance", "n", "k", "u", "x", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                 "rel_error", "passed"});
  bool all = true;
  constexpr std::size_t instances = 20;
  for (std::size_t i = 0; i < instances; ++i) {
    auto rng = Rng::derive(seed, stream_key("ftrep"), i);
    const auto n = 1 + static_cast<std::size_t>(rng.uniform() * 4.0);
    const double k = rng.uniform() < 0.5 ? 0.5 : 1.0;
    const double u = rng.uniform() < 0.5 ? 0.0 : 1.0;
    const double x = std::array{1.0, 2.0, 4.0}[static_cast<std::size_t>(rng.uniform() * 3.0)];
    const auto f = make_standard_frequency(StandardFrequency::log_naturals, n);
    const auto g = realize_group(f, RealizationHint::automatic);
    const DirichletPolynomial d(
        f, io::coefficient_rule("random_disc:" + std::to_string(rng.next_u64()), n));
    const auto omega = haar_sample(g, rng);
    const auto r = ft_representation_check(d, g, omega, k, u, x, 1e-6);
    all = all && r.passed;
    const double scale = std::abs(r.lhs) > 0.0 ? std::abs(r.lhs) : 1.0;
    csv.cell(static_cast<std::uint64_t>(i))
        .cell(static_cast<std::uint64_t>(n))
        .cell(k)
        .cell(u)
        .cell(x)
        .cell(r.lhs.real())
        .cell(r.lhs.imag())
        .cell(r.rhs.real())
        .cell(r.rhs.imag())
        .cell(r.error / scale)
        .cell(r.passed);
    csv.end_row();
  }
  return {csv.str(), {{"check", "ftrep"}, {"all_passed", all}, {"seed", seed}}};
}

std::vector<DirichletPolynomial> sign_family(const FrequencyPtr& f, std::uint64_t seed,
                                             std::size_t members) {
  std::vector<DirichletPolynomial> out;
  for (std::size_t m = 0; m < members; ++m) {
    const auto s = sample_seed(seed, "abel-family", m);
    out.emplace_back(f, io::coefficient_rule("random_sign:" + std::to_string(s), f->size()));
  }
  return out;
}

Report verify_abel(std::uint64_t seed) {
  constexpr double k = 1.0;
  constexpr double u = 1.0;
  constexpr double eps = 0.5;
  const auto f = make_standard_frequency(StandardFrequency::log_naturals, 64);
  const auto x_grid = geometric_span(0.5, 1.5 * (*f)[63], 16);
  CsvWriter csv({"family", "member", "k", "u", "eps", "lhs", "rhs", "passed"});
  double maxima[2] = {0.0, 0.0};
  for (std::size_t fam = 0; fam < 2; ++fam) {
    const auto family = sign_family(f, seed + fam, 100);
    const auto probe = abel_inequality_probe(family, k, u, eps, x_grid);
    maxima[fam] = probe.max_ratio;
    for (std::size_t m = 0; m < family.size(); ++m) {
      // lhs is the member's max ratio; rhs the family max it is bounded by
      const double ratio = probe.member_max_ratio[m];
      csv.cell(static_cast<std::uint64_t>(fam))
          .cell(static_cast<std::uint64_t>(m))
          .cell(k)
          .cell(u)
          .cell(eps)
          .cell(ratio)
          .cell(probe.max_ratio)
          .cell(std::isfinite(ratio));
      csv.end_row();
    }
  }
  const double spread = std::max(maxima[0], maxima[1]) / std::min(maxima[0], maxima[1]);
  const bool stable = std::isfinite(spread) && spread <= 2.0;
  return {csv.str(),
          {{"check", "abel"},
           {"max_ratio", json::array({maxima[0], maxima[1]})},
           {"two_seed_spread", spread},
           {"all_passed", stable}}};
}

Report verify_secondmeans() {
  const std::vector<int> xs{4, 16, 64, 256};
  const auto probe = second_means_growth_probe(xs, 8192);
  CsvWriter csv({"x", "lhs", "rhs", "first_ratio", "passed"});
  bool increasing = true;
  bool control = true;
  for (std::size_t i = 0; i < probe.points.size(); ++i) {
    const auto& p = probe.points[i];
    // lhs: second-means ratio at x; rhs: the previous grid value it must exceed
    const double prev = i ? probe.points[i - 1].second_ratio : 0.0;
    const bool up = p.second_ratio > prev;
    increasing = increasing && up;
    control = control && p.first_ratio <= 3.0;
    csv.cell(p.x).cell(p.second_ratio).cell(prev).cell(p.first_ratio).cell(
        up && p.first_ratio <= 3.0);
    csv.end_row();
  }
  return {csv.str(),
          {{"check", "secondmeans"},
           {"slope_vs_logx", probe.slope_vs_logx},
           {"all_passed", increasing && control && probe.slope_vs_logx > 0.0}}};
}

} // namespace

Report converge_report(const DirichletPolynomial& d, RieszKind kind, double k, cplx s,
                       std::span<const double> x_grid, double tol) {
  const auto r = detect_riesz_limit(d, kind, k, s, x_grid, tol);
  CsvWriter csv({"x", "re", "im"});
  for (std::size_t i = 0; i < r.x_grid.size(); ++i) {
    csv.cell(r.x_grid[i]).cell(r.values[i].real()).cell(r.values[i].imag());
    csv.end_row();
  }
  return {csv.str(), convergence_json(r)};
}

Report consistency_report(const DirichletPolynomial& d, const std::string& which, double k,
                          double ell, cplx s, std::span<const double> x_grid, double tol) {
  ConsistencyResult r;
  if (which == "first") {
    r = consistency_first(d, k, ell, s, x_grid, tol);
  } else if (which == "second") {
    r = consistency_second(d, k, s, x_grid, tol);
  } else {
    throw ValidationError("consistency: --which must be first or second");
  }
  CsvWriter csv({"x", "hypothesis_re", "hypothesis_im", "conclusion_re", "conclusion_im"});
  for (std::size_t i = 0; i < r.hypothesis.x_grid.size(); ++i) {
    csv.cell(r.hypothesis.x_grid[i])
        .cell(r.hypothesis.values[i].real())
        .cell(r.hypothesis.values[i].imag())
        .cell(r.conclusion.values[i].real())
        .cell(r.conclusion.values[i].imag());
    csv.end_row();
  }
  return {csv.str(),
          {{"which", which},
           {"hypothesis", convergence_json(r.hypothesis)},
           {"conclusion", convergence_json(r.conclusion)},
           {"inconclusive", r.inconclusive},
           {"agree", r.agree},
           {"difference", r.difference}}};
}

Report abscissa_report(const DirichletPolynomial& d, double k, std::span<const double> x_grid,
                       std::span<const double> t_grid) {
  const auto r = abscissa_uniform_riesz(d, k, x_grid, t_grid);
  CsvWriter csv({"x", "sup_norm"});
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    csv.cell(x_grid[i]).cell(r.per_x_norms[i]);
    csv.end_row();
  }
  return {csv.str(), {{"slope", r.slope}}};
}

Report maximal_report(const DirichletPolynomial& d, const GroupRealization& g, double k,
                      std::size_t samples, std::uint64_t seed, std::span<const double> x_grid) {
  require_same_frequency(d.frequency(), g.frequency(), "maximal");
  std::vector<double> grid(x_grid.begin(), x_grid.end());
  if (grid.empty()) {
    grid = maximal_x_grid(d.frequency());
  }
  const RieszMaximalOperator op(d, k, grid);
  std::vector<std::uint64_t> seeds;
  const auto points = seeded_points(g, seed, "maximal", samples, &seeds);
  CsvWriter csv({"seed", "max_value", "arg_x"});
  double top = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto m = op.evaluate(character_values(g, points[i]));
    top = std::max(top, m.max_value);
    csv.cell(seeds[i]).cell(m.max_value).cell(m.arg_x);
    csv.end_row();
  }
  return {csv.str(), {{"samples", samples}, {"seed", seed}, {"largest_max_value", top}}};
}

Report norms_report(const DirichletPolynomial& d, const GroupRealization& g, double half_width,
                    std::size_t samples, std::uint64_t seed) {
  CsvWriter csv({"norm", "p", "value", "stderr"});
  json summary = json::object();
  const double l2 = l2_norm(d);
  csv.cell("l2").cell(2.0).cell(l2).cell(0.0);
  csv.end_row();
  summary["l2"] = l2;
  const auto qp = required_quad_points(d.frequency(), half_width);
  const SampleStream stream{seed, stream_key("norms")};
  for (double p : {1.0, 2.0}) {
    const double b = besicovitch_norm(d, p, half_width, qp);
    csv.cell("besicovitch").cell(p).cell(b).cell(0.0);
    csv.end_row();
    const auto h = haar_norm(d, g, p, samples, stream);
    csv.cell("haar").cell(p).cell(h.value).cell(h.standard_error);
    csv.end_row();
    const auto tag = p == 1.0 ? std::string("1") : std::string("2");
    summary["besicovitch_p" + tag] = b;
    summary["haar_p" + tag] = {{"value", h.value}, {"stderr", h.standard_error}};
  }
  return {csv.str(), summary};
}

Report weaktype_report(const DirichletPolynomial& d, const GroupRealization& g, double k,
                       std::size_t samples, std::uint64_t seed) {
  require_same_frequency(d.frequency(), g.frequency(), "weaktype");
  const RieszMaximalOperator op(d, k, maximal_x_grid(d.frequency()));
  const auto points = seeded_points(g, seed, "weaktype", samples);
  std::vector<std::vector<cplx>> chars;
  std::vector<double> maxima;
  for (const auto& w : points) {
    chars.push_back(character_values(g, w));
    maxima.push_back(op.evaluate(chars.back()).max_value);
  }
  const auto norm1 = haar_norm_from_characters(d.coefficients(), chars, 1.0);
  const auto tail = weak_type_tail(maxima, norm1.value);
  CsvWriter csv({"alpha", "mass"});
  for (const auto& p : tail.curve) {
    csv.cell(p.alpha).cell(p.mass);
    csv.end_row();
  }
  return {csv.str(),
          {{"sup_alpha_mass", tail.sup_alpha_mass},
           {"norm1", norm1.value},
           {"norm1_stderr", norm1.standard_error}}};
}

Report verify_report(const std::string& check, std::uint64_t seed) {
  if (check == "perron") {
    return verify_perron();
  }
  if (check == "kernel") {
    return verify_kernel();
  }
  if (check == "ftrep") {
    return verify_ftrep(seed);
  }
  if (check == "abel") {
    return verify_abel(seed);
  }
  if (check == "secondmeans") {
    return verify_secondmeans();
  }
  throw ValidationError("unknown check '" + check + "' (perron|kernel|ftrep|abel|secondmeans)");
}

} // namespace riesz
