#pragma once

#include "riesz/group.hpp"
#include "riesz/series.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace riesz::io {

using json = nlohmann::json;

json frequency_to_json(const Frequency& f);
FrequencyPtr frequency_from_json(const json& j);

json group_to_json(const GroupRealization& g);
GroupRealization group_from_json(const FrequencyPtr& f, const json& j);

/// {frequency: [...], coefficients: [[re, im], ...]}
json polynomial_to_json(const DirichletPolynomial& d);
DirichletPolynomial polynomial_from_json(const json& j);

/// naturals:N | lognat:N | pow2:N | file:<path> (a JSON array).
FrequencyPtr parse_frequency_spec(std::string_view spec);

/// auto | naturals | primes | file:<path> (a JSON {basis, matrix} object).
GroupRealization parse_group_spec(std::string_view spec, const FrequencyPtr& f);

/// Coefficients a_1..a_N from a rule:
///   ones, power:p (n^-p), alternating ((-1)^{n+1}), geometric:r (r^{n-1}),
///   random_disc:seed (uniform in the unit disc), random_sign:seed (+-1).
std::vector<cplx> coefficient_rule(std::string_view rule, std::size_t n);

/// "re,im" or "re".
cplx parse_complex(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
json read_json_file(const std::filesystem::path& path);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Comma-separated rows with a fixed header; numbers use format_double so
/// equal inputs give byte-identical files.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);

  CsvWriter& cell(double v);
  CsvWriter& cell(std::uint64_t v);
  CsvWriter& cell(std::string_view v);
  CsvWriter& cell(const char* v) { return cell(std::string_view(v)); }
  CsvWriter& cell(bool v);
  void end_row();

  std::string str() const;
  std::size_t rows() const noexcept { return rows_; }

private:
  std::size_t columns_;
  std::size_t in_row_ = 0;
  std::size_t rows_ = 0;
  std::string text_;
};

} // namespace riesz::io
