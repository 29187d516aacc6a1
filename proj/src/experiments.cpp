#include "riesz/experiments.hpp"

#include "riesz/analysis.hpp"
#include "riesz/error.hpp"
#include "riesz/group.hpp"
#include "riesz/summability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#ifndef RIESZ_GIT_DESCRIBE
#define RIESZ_GIT_DESCRIBE "unknown"
#endif

namespace riesz {
namespace {

using io::json;

// Runs body(i) for i in [0, count) on a few threads. Callers write results
// into slot i, so output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& th : pool) {
    th.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

const char* kind_name(ExperimentKind kind) {
  switch (kind) {
  case ExperimentKind::ae_summability:
    return "ae_summability";
  case ExperimentKind::weak_type:
    return "weak_type";
  case ExperimentKind::norm_approx:
    return "norm_approx";
  case ExperimentKind::fatou:
    return "fatou";
  }
  return "?";
}

ExperimentKind kind_from_name(const std::string& name) {
  for (auto kind : {ExperimentKind::ae_summability, ExperimentKind::weak_type,
                    ExperimentKind::norm_approx, ExperimentKind::fatou}) {
    if (name == kind_name(kind)) {
      return kind;
    }
  }
  throw ValidationError("unknown experiment kind '" + name + "'");
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.name.empty() || cfg.name.find_first_of("/\\") != std::string::npos) {
    throw ValidationError("experiment name must be a nonempty file stem");
  }
  if (cfg.truncations.empty() || std::find(cfg.truncations.begin(), cfg.truncations.end(), 0u) !=
                                     cfg.truncations.end()) {
    throw ValidationError(cfg.name + ": truncations must be positive");
  }
  if (cfg.samples == 0 || cfg.family_size == 0) {
    throw ValidationError(cfg.name + ": samples and family_size must be positive");
  }
  if (!(cfg.k >= 0.0) || !(cfg.tolerance > 0.0) || !(cfg.x_max_factor > 0.0) ||
      !(cfg.grid_ratio > 1.0) || cfg.grid_points < 2) {
    throw ValidationError(cfg.name + ": invalid Riesz order, tolerance or grid");
  }
}

FrequencyPtr config_frequency(const ExperimentConfig& cfg, std::size_t n) {
  return io::parse_frequency_spec(cfg.frequency + ":" + std::to_string(n));
}

// Random rules given without a seed draw one per family member from the
// experiment seed; explicit seeds are offset by the member index.
std::vector<cplx> member_coefficients(const ExperimentConfig& cfg, std::size_t member,
                                      std::size_t n) {
  const std::string& rule = cfg.coefficients;
  if (rule == "random_sign" || rule == "random_disc") {
    const auto seed = Rng::derive(cfg.seed, stream_key(cfg.name + "/family"), member).next_u64();
    return io::coefficient_rule(rule + ":" + std::to_string(seed), n);
  }
  const auto colon = rule.find(':');
  const auto head = rule.substr(0, colon);
  if ((head == "random_sign" || head == "random_disc") && member > 0) {
    const auto seed = std::stoull(rule.substr(colon + 1)) + member;
    return io::coefficient_rule(head + ":" + std::to_string(seed), n);
  }
  return io::coefficient_rule(rule, n);
}

SampleStream config_stream(const ExperimentConfig& cfg) {
  return {cfg.seed, stream_key(cfg.name)};
}

std::vector<std::vector<cplx>> character_table(const GroupRealization& g,
                                               const SampleStream& stream, std::size_t samples) {
  std::vector<std::vector<cplx>> out(samples);
  parallel_for(samples, [&](std::size_t i) {
    auto rng = stream.at(i);
    out[i] = character_values(g, haar_sample(g, rng));
  });
  return out;
}

double abs_sum(std::span<const cplx> a) {
  CompensatedSum s;
  for (const auto& v : a) {
    s.add(std::abs(v));
  }
  return s.value();
}

ExperimentResult make_result(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.name = cfg.name;
  r.seed = cfg.seed;
  return r;
}

} // namespace

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  static const std::set<std::string> known{"name",    "kind",    "frequency", "coefficients",
                                           "truncations", "riesz", "samples", "seed",
                                           "grid",    "tolerance", "family_size"};
  if (!j.is_object()) {
    throw ValidationError("experiment config must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) {
      throw ValidationError("unknown experiment config key '" + item.key() + "'");
    }
  }
  ExperimentConfig cfg;
  try {
    cfg.name = j.at("name").get<std::string>();
    cfg.kind = kind_from_name(j.value("kind", std::string(kind_name(cfg.kind))));
    if (!j.contains("seed")) {
      throw ValidationError(cfg.name + ": a seed is required");
    }
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.frequency = j.value("frequency", cfg.frequency);
    cfg.coefficients = j.value("coefficients", cfg.coefficients);
    cfg.truncations = j.value("truncations", cfg.truncations);
    cfg.samples = j.value("samples", cfg.samples);
    cfg.tolerance = j.value("tolerance", cfg.tolerance);
    cfg.family_size = j.value("family_size", cfg.family_size);
    if (j.contains("riesz")) {
      const auto& r = j.at("riesz");
      const auto kind = r.value("kind", std::string("first"));
      if (kind != "first" && kind != "second") {
        throw ValidationError(cfg.name + ": riesz.kind must be first or second");
      }
      cfg.riesz_kind = kind == "first" ? RieszKind::first : RieszKind::second;
      cfg.k = r.value("k", cfg.k);
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      cfg.x_max_factor = g.value("x_max_factor", cfg.x_max_factor);
      cfg.grid_points = g.value("points", cfg.grid_points);
      cfg.grid_ratio = g.value("ratio", cfg.grid_ratio);
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("experiment config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

json ExperimentConfig::to_json() const {
  return {{"name", name},
          {"kind", kind_name(kind)},
          {"frequency", frequency},
          {"coefficients", coefficients},
          {"truncations", truncations},
          {"riesz", {{"kind", riesz_kind == RieszKind::first ? "first" : "second"}, {"k", k}}},
          {"samples", samples},
          {"seed", seed},
          {"grid", {{"x_max_factor", x_max_factor}, {"points", grid_points}, {"ratio", grid_ratio}}},
          {"tolerance", tolerance},
          {"family_size", family_size}};
}

json ExperimentResult::summary() const {
  return {{"name", name}, {"metrics", metrics}, {"seed", seed}, {"git_describe", git_describe()}};
}

const char* git_describe() noexcept { return RIESZ_GIT_DESCRIBE; }

ExperimentResult run_ae_summability(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<std::size_t> levels = cfg.truncations;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t n_max = levels.back();

  const auto f = config_frequency(cfg, n_max);
  const auto g = realize_group(f, RealizationHint::automatic);
  const auto coeffs = member_coefficients(cfg, 0, n_max);
  const auto x_grid = geometric_grid(cfg.x_max_factor * (*f)[n_max - 1], cfg.grid_points,
                                     cfg.grid_ratio);

  // weighted coefficients a_n w_n(x) per level and grid point, cut at the last nonzero
  std::vector<std::vector<std::vector<cplx>>> weighted(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto prefix = f->prefix(levels[l]);
    for (double x : x_grid) {
      const auto w = riesz_weights(prefix, {cfg.riesz_kind, cfg.k, x});
      std::vector<cplx> row;
      for (std::size_t n = 0; n < w.size() && w[n] != 0.0; ++n) {
        row.push_back(coeffs[n] * w[n]);
      }
      weighted[l].push_back(std::move(row));
    }
  }

  struct Row {
    std::vector<ConvergenceReport> reports;
    bool stabilized = false;
    double spread = 0.0;
  };
  const auto stream = config_stream(cfg);
  std::vector<Row> rows(cfg.samples);
  parallel_for(cfg.samples, [&](std::size_t i) {
    auto rng = stream.at(i);
    const auto chars = character_values(g, haar_sample(g, rng));
    Row& row = rows[i];
    for (std::size_t l = 0; l < levels.size(); ++l) {
      std::vector<cplx> values;
      for (const auto& w : weighted[l]) {
        CompensatedComplexSum s;
        for (std::size_t n = 0; n < w.size(); ++n) {
          s.add(w[n] * chars[n]);
        }
        values.push_back(s.value());
      }
      row.reports.push_back(convergence_from_values(x_grid, std::move(values), cfg.tolerance));
    }
    row.stabilized = std::all_of(row.reports.begin(), row.reports.end(),
                                 [](const auto& r) { return r.converged; });
    if (row.stabilized) {
      const cplx top = *row.reports.back().limit;
      for (const auto& r : row.reports) {
        row.spread = std::max(row.spread, std::abs(*r.limit - top));
      }
      row.stabilized = row.spread <= cfg.tolerance;
    }
  });

  std::vector<std::string> header{"sample"};
  for (auto n : levels) {
    const auto tag = "_N" + std::to_string(n);
    for (const char* col : {"converged", "limit_re", "limit_im", "residual"}) {
      header.push_back(col + tag);
    }
  }
  header.insert(header.end(), {"spread", "stabilized"});
  io::CsvWriter csv(header);
  std::size_t stabilized = 0;
  double worst_residual = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    csv.cell(static_cast<std::uint64_t>(i));
    for (const auto& r : rows[i].reports) {
      const cplx lim = r.limit.value_or(cplx{NAN, NAN});
      csv.cell(r.converged).cell(lim.real()).cell(lim.imag()).cell(r.cauchy_residual);
      worst_residual = std::max(worst_residual, r.cauchy_residual);
    }
    csv.cell(rows[i].spread).cell(rows[i].stabilized);
    csv.end_row();
    stabilized += rows[i].stabilized ? 1 : 0;
  }
  auto result = make_result(cfg);
  result.metrics["stabilized_fraction"] =
      static_cast<double>(stabilized) / static_cast<double>(cfg.samples);
  result.metrics["samples"] = static_cast<double>(cfg.samples);
  result.metrics["max_cauchy_residual"] = worst_residual;
  result.csv = csv.str();
  return result;
}

ExperimentResult run_weak_type(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t n = cfg.truncations.front();
  const auto f = config_frequency(cfg, n);
  const auto g = realize_group(f, RealizationHint::automatic);
  const auto x_grid = maximal_x_grid(*f, std::max<std::size_t>(64, cfg.grid_points));
  const auto chars = character_table(g, config_stream(cfg), cfg.samples);

  io::CsvWriter csv({"member", "norm1", "norm1_stderr", "sup_alpha_mass"});
  std::vector<double> ratios(cfg.family_size);
  std::vector<MonteCarloEstimate> norms(cfg.family_size);
  parallel_for(cfg.family_size, [&](std::size_t m) {
    const DirichletPolynomial d(f, member_coefficients(cfg, m, n));
    const RieszMaximalOperator op(d, cfg.k, x_grid);
    std::vector<double> maxima(cfg.samples);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      maxima[i] = op.evaluate(chars[i]).max_value;
    }
    norms[m] = haar_norm_from_characters(d.coefficients(), chars, 1.0);
    ratios[m] = weak_type_tail(maxima, norms[m].value).sup_alpha_mass;
  });
  for (std::size_t m = 0; m < cfg.family_size; ++m) {
    csv.cell(static_cast<std::uint64_t>(m))
        .cell(norms[m].value)
        .cell(norms[m].standard_error)
        .cell(ratios[m]);
    csv.end_row();
  }
  auto result = make_result(cfg);
  result.metrics["sup_alpha_mass"] = *std::max_element(ratios.begin(), ratios.end());
  result.metrics["min_member_sup_alpha_mass"] = *std::min_element(ratios.begin(), ratios.end());
  result.metrics["family_size"] = static_cast<double>(cfg.family_size);
  result.csv = csv.str();
  return result;
}

ExperimentResult run_norm_approx(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t n = cfg.truncations.front();
  const auto f = config_frequency(cfg, n);
  const auto g = realize_group(f, RealizationHint::automatic);
  const DirichletPolynomial d(f, member_coefficients(cfg, 0, n));
  const auto chars = character_table(g, config_stream(cfg), cfg.samples);

  const double lam_max = (*f)[n - 1];
  double lam_min = lam_max;
  for (double v : f->values()) {
    if (v > 0.0) {
      lam_min = v;
      break;
    }
  }
  if (!(lam_max > 0.0)) {
    throw ValidationError(cfg.name + ": norm approximation needs a positive frequency value");
  }
  const auto x_grid = geometric_span(0.5 * lam_min, 1e3 * lam_max, cfg.grid_points);
  const double a1 = abs_sum(d.coefficients());
  const double deficit_slope = std::max(1.0, cfg.k) * lam_max; // 1-(1-r)^k <= max(1,k) r

  const auto baseline = haar_norm_from_characters(d.coefficients(), chars, 1.0);
  std::vector<MonteCarloEstimate> errors(x_grid.size());
  parallel_for(x_grid.size(), [&](std::size_t j) {
    const auto w = riesz_weights(*f, {cfg.riesz_kind, cfg.k, x_grid[j]});
    std::vector<cplx> diff(n);
    for (std::size_t i = 0; i < n; ++i) {
      diff[i] = d.coefficients()[i] * (1.0 - w[i]);
    }
    errors[j] = haar_norm_from_characters(diff, chars, 1.0);
  });

  io::CsvWriter csv({"x", "error", "stderr", "bernoulli_bound"});
  for (std::size_t j = 0; j < x_grid.size(); ++j) {
    const double bound = x_grid[j] > lam_max ? deficit_slope / x_grid[j] * a1 : NAN;
    csv.cell(x_grid[j]).cell(errors[j].value).cell(errors[j].standard_error).cell(bound);
    csv.end_row();
  }
  auto result = make_result(cfg);
  result.metrics["norm1"] = baseline.value;
  result.metrics["norm1_stderr"] = baseline.standard_error;
  result.metrics["error_at_max_x"] = errors.back().value;
  result.metrics["max_x"] = x_grid.back();
  result.csv = csv.str();
  return result;
}

ExperimentResult run_fatou(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t n = cfg.truncations.front();
  const auto f = config_frequency(cfg, n);
  const auto g = realize_group(f, RealizationHint::automatic);
  const DirichletPolynomial d(f, member_coefficients(cfg, 0, n));
  const auto chars = character_table(g, config_stream(cfg), cfg.samples);

  std::vector<double> u_grid{0.0};
  const auto tail = poisson_u_grid(cfg.grid_points);
  u_grid.insert(u_grid.end(), tail.begin(), tail.end());
  const double a1 = abs_sum(d.coefficients());
  const double lam_max = (*f)[n - 1];
  const auto a = d.coefficients();

  // per sample value f(omega) once, then each u
  std::vector<cplx> base(cfg.samples);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    CompensatedComplexSum s;
    for (std::size_t m = 0; m < n; ++m) {
      s.add(a[m] * chars[i][m]);
    }
    base[i] = s.value();
  }
  std::vector<double> mean_dev(u_grid.size());
  std::vector<double> max_dev(u_grid.size());
  parallel_for(u_grid.size(), [&](std::size_t j) {
    const auto shifted = poisson_translate(d, u_grid[j]);
    const auto translated = shifted.coefficients();
    CompensatedSum total;
    double worst = 0.0;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      CompensatedComplexSum s;
      for (std::size_t m = 0; m < n; ++m) {
        s.add(translated[m] * chars[i][m]);
      }
      const double dev = u_grid[j] == 0.0 ? 0.0 : std::abs(s.value() - base[i]);
      total.add(dev);
      worst = std::max(worst, dev);
    }
    mean_dev[j] = total.value() / static_cast<double>(cfg.samples);
    max_dev[j] = worst;
  });

  io::CsvWriter csv({"u", "mean_deviation", "max_deviation", "bound"});
  double excess = 0.0;
  for (std::size_t j = 0; j < u_grid.size(); ++j) {
    const double bound = -std::expm1(-u_grid[j] * lam_max) * a1;
    excess = std::max(excess, max_dev[j] - bound);
    csv.cell(u_grid[j]).cell(mean_dev[j]).cell(max_dev[j]).cell(bound);
    csv.end_row();
  }
  auto result = make_result(cfg);
  result.metrics["deviation_at_min_u"] = mean_dev[1];
  result.metrics["deviation_at_max_u"] = mean_dev.back();
  result.metrics["max_bound_excess"] = excess;
  result.csv = csv.str();
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
  case ExperimentKind::ae_summability:
    return run_ae_summability(cfg);
  case ExperimentKind::weak_type:
    return run_weak_type(cfg);
  case ExperimentKind::norm_approx:
    return run_norm_approx(cfg);
  case ExperimentKind::fatou:
    return run_fatou(cfg);
  }
  throw ValidationError("unknown experiment kind");
}

std::vector<ExperimentResult> run_experiment_file(const std::filesystem::path& config,
                                                  const std::filesystem::path& out_dir) {
  const auto j = io::read_json_file(config);
  std::vector<ExperimentConfig> configs;
  if (j.is_array()) {
    for (const auto& item : j) {
      configs.push_back(ExperimentConfig::from_json(item));
    }
  } else {
    configs.push_back(ExperimentConfig::from_json(j));
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  }
  std::vector<ExperimentResult> results;
  for (const auto& cfg : configs) {
    auto r = run_experiment(cfg);
    io::write_text_file(out_dir / (cfg.name + ".csv"), r.csv);
    io::write_text_file(out_dir / (cfg.name + ".summary.json"), r.summary().dump(2) + "\n");
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace riesz
