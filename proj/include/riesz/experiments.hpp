#pragma once

#include "riesz/io.hpp"
#include "riesz/series.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace riesz {

enum class ExperimentKind { ae_summability, weak_type, norm_approx, fatou };

/// One experiment. See configs/README.md for the JSON schema.
struct ExperimentConfig {
  std::string name;
  ExperimentKind kind = ExperimentKind::ae_summability;
  std::string frequency = "lognat"; // naturals | lognat | pow2; length from truncations
  std::string coefficients = "power:1";
  std::vector<std::size_t> truncations{4096};
  RieszKind riesz_kind = RieszKind::first;
  double k = 1.0;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  double x_max_factor = 100.0;
  std::size_t grid_points = 32;
  double grid_ratio = 1.3;
  double tolerance = 0.05;
  std::size_t family_size = 1;

  static ExperimentConfig from_json(const io::json& j);
  io::json to_json() const;
};

struct ExperimentResult {
  std::string name;
  std::uint64_t seed = 0;
  std::map<std::string, double> metrics;
  std::string csv;

  io::json summary() const; // {name, metrics, seed, git_describe}
};

/// Per Haar sample: stabilized iff the limit is detected at both truncation
/// levels and the two limits lie within tolerance.
ExperimentResult run_ae_summability(const ExperimentConfig& cfg);

/// Max over a family of sup_alpha alpha mass(alpha) / ||f||_1 for the grid
/// Riesz maximal operator.
ExperimentResult run_weak_type(const ExperimentConfig& cfg);

/// ||f - R_x f||_1 against x with the Haar samples shared across x.
ExperimentResult run_norm_approx(const ExperimentConfig& cfg);

/// Mean over omega of |(f * p_u)(omega) - f(omega)| against u.
ExperimentResult run_fatou(const ExperimentConfig& cfg);

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// A config file holds one experiment object or an array of them. Writes
/// <out>/<name>.csv and <out>/<name>.summary.json for each.
std::vector<ExperimentResult> run_experiment_file(const std::filesystem::path& config,
                                                  const std::filesystem::path& out_dir);

const char* git_describe() noexcept;

} // namespace riesz
