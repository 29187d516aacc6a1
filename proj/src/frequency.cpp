#include "riesz/frequency.hpp"

#include "riesz/error.hpp"

#include <cmath>
#include <limits>

namespace riesz {

Frequency::Frequency(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) {
    throw ValidationError("frequency must contain at least one value");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ValidationError("frequency values must be finite");
    }
    if (i == 0 && values_[0] < 0.0) {
      throw ValidationError("frequency values must be non-negative");
    }
    if (i > 0 && !(values_[i] > values_[i - 1])) {
      throw ValidationError("frequency values must be strictly increasing (index " +
                            std::to_string(i + 1) + ")");
    }
  }
}

double Frequency::at(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw IndexError("frequency index " + std::to_string(n) + " outside 1.." +
                     std::to_string(values_.size()));
  }
  return values_[n - 1];
}

Frequency Frequency::prefix(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw IndexError("prefix length out of range");
  }
  return Frequency(std::vector<double>(values_.begin(), values_.begin() + static_cast<long>(n)),
                   label_);
}

FrequencyPtr make_standard_frequency(StandardFrequency kind, std::size_t n,
                                     const std::optional<std::vector<double>>& custom) {
  if (n == 0) {
    throw ValidationError("frequency length must be positive");
  }
  std::vector<double> v;
  v.reserve(n);
  switch (kind) {
  case StandardFrequency::naturals:
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(static_cast<double>(i));
    }
    return std::make_shared<const Frequency>(std::move(v), "naturals");
  case StandardFrequency::log_naturals:
    for (std::size_t i = 1; i <= n; ++i) {
      v.push_back(std::log(static_cast<double>(i)));
    }
    return std::make_shared<const Frequency>(std::move(v), "log_naturals");
  case StandardFrequency::powers_of_two:
    if (n > 1023) {
      throw RangeError("powers_of_two: 2^N overflows for N > 1023");
    }
    for (std::size_t j = 1; j <= n; ++j) {
      v.push_back(std::ldexp(1.0, static_cast<int>(j)));
    }
    return std::make_shared<const Frequency>(std::move(v), "powers_of_two");
  case StandardFrequency::custom:
    if (!custom) {
      throw ValidationError("custom frequency requires values");
    }
    if (custom->size() != n) {
      throw ValidationError("custom frequency: N does not match the number of values");
    }
    return std::make_shared<const Frequency>(*custom, "custom");
  }
  throw ValidationError("unknown frequency kind");
}

FrequencyPtr exp_frequency(const Frequency& f) {
  std::vector<double> v;
  v.reserve(f.size());
  for (double l : f.values()) {
    const double e = std::exp(l);
    if (!std::isfinite(e)) {
      throw RangeError("exp_frequency: e^" + std::to_string(l) + " overflows");
    }
    if (!v.empty() && !(e > v.back())) {
      throw RangeError("exp_frequency: consecutive values collapse after rounding");
    }
    v.push_back(e);
  }
  return std::make_shared<const Frequency>(std::move(v), "exp(" + f.label() + ")");
}

SpacingReport check_spacing_condition(const Frequency& f, SpacingCondition kind,
                                      const SpacingParams& params) {
  if (f.size() < 2) {
    throw ValidationError("spacing condition needs at least two frequencies");
  }
  if (!(params.delta > 0.0) || !(params.c > 0.0)) {
    throw ValidationError("spacing condition needs delta > 0 and C > 0");
  }
  SpacingReport report;
  report.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double gap = f[i + 1] - f[i];
    const double lam = f[i];
    // gap / (C e^{-g(lam)}) = gap e^{g(lam)} / C, evaluated in log space
    const double exponent = kind == SpacingCondition::bohr ? (params.l + params.delta) * lam
                                                           : std::exp(params.delta * lam);
    const double ratio = std::exp(std::log(gap) + exponent - std::log(params.c));
    if (ratio < report.min_ratio) {
      report.min_ratio = ratio;
      report.witness_index = i + 1;
    }
  }
  report.pass = report.min_ratio >= 1.0;
  return report;
}

bool is_log_naturals(const Frequency& f) noexcept {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double expect = std::log(static_cast<double>(i + 1));
    if (std::abs(f[i] - expect) > 1e-12 * std::max(1.0, expect)) {
      return false;
    }
  }
  return true;
}

} // namespace riesz
