#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace riesz {

/// Finite prefix 0 <= l_1 < l_2 < ... < l_N of a frequency. Immutable.
///
/// Frequencies compare by exact binary equality of their values: build one
/// and share it (see FrequencyPtr) instead of recomputing values.
class Frequency {
public:
  explicit Frequency(std::vector<double> values, std::string label = {});

  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  /// 1-based access matching the usual l_n notation.
  double at(std::size_t n) const;
  std::size_t size() const noexcept { return values_.size(); }
  const std::string& label() const noexcept { return label_; }

  /// Leading prefix of length n (n <= size()).
  Frequency prefix(std::size_t n) const;

  friend bool operator==(const Frequency& a, const Frequency& b) noexcept {
    return a.values_ == b.values_;
  }

private:
  std::vector<double> values_;
  std::string label_;
};

using FrequencyPtr = std::shared_ptr<const Frequency>;

enum class StandardFrequency { naturals, log_naturals, powers_of_two, custom };

/// naturals -> (0, 1, ..., N-1); log_naturals -> (log 1, ..., log N);
/// powers_of_two -> (2, 4, ..., 2^N); custom -> the supplied values.
FrequencyPtr make_standard_frequency(StandardFrequency kind, std::size_t n,
                                     const std::optional<std::vector<double>>& custom = {});

/// (e^{l_1}, ..., e^{l_N}). Throws RangeError if a value overflows or two
/// values collapse after rounding.
FrequencyPtr exp_frequency(const Frequency& f);

enum class SpacingCondition { bohr, landau };

struct SpacingParams {
  double l = 0.0;
  double delta = 1.0;
  double c = 1.0;
};

struct SpacingReport {
  double min_ratio = 0.0;
  bool pass = false;
  std::size_t witness_index = 0; // 1-based n attaining the minimum
};

/// Gap test over the prefix: min_n (l_{n+1} - l_n) / bound(l_n) with
/// bound = C e^{-(l+delta) l_n} (Bohr) or C e^{-e^{delta l_n}} (Landau).
SpacingReport check_spacing_condition(const Frequency& f, SpacingCondition kind,
                                      const SpacingParams& params);

/// True if f is (log 1, ..., log N) to within 1e-12 per entry.
bool is_log_naturals(const Frequency& f) noexcept;

} // namespace riesz
