#include "riesz/io.hpp"

#include "riesz/error.hpp"
#include "riesz/rng.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace riesz::io {
namespace {

std::pair<std::string_view, std::string_view> split_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    return {spec, {}};
  }
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ValidationError(std::string("cannot parse ") + what + " from '" + std::string(text) +
                          "'");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ValidationError(std::string("cannot parse ") + what + " from '" + std::string(text) +
                          "'");
  }
  return v;
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) {
    return {j.get<double>(), 0.0};
  }
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError("complex numbers are written as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

} // namespace

json frequency_to_json(const Frequency& f) {
  return json(std::vector<double>(f.values().begin(), f.values().end()));
}

FrequencyPtr frequency_from_json(const json& j) {
  return json_guard("frequency JSON", [&] {
    if (!j.is_array()) {
      throw ValidationError("frequency JSON must be an array of numbers");
    }
    return std::make_shared<const Frequency>(j.get<std::vector<double>>());
  });
}

json group_to_json(const GroupRealization& g) {
  return {{"basis", std::vector<double>(g.basis().begin(), g.basis().end())},
          {"matrix", g.dense_matrix()}};
}

GroupRealization group_from_json(const FrequencyPtr& f, const json& j) {
  return json_guard("group JSON", [&] {
    UserBasis user{j.at("basis").get<std::vector<double>>(),
                   j.at("matrix").get<GroupRealization::DenseMatrix>()};
    return realize_group(f, RealizationHint::user_basis, user);
  });
}

json polynomial_to_json(const DirichletPolynomial& d) {
  json coeffs = json::array();
  for (const auto& a : d.coefficients()) {
    coeffs.push_back({a.real(), a.imag()});
  }
  return {{"frequency", frequency_to_json(d.frequency())}, {"coefficients", coeffs}};
}

DirichletPolynomial polynomial_from_json(const json& j) {
  return json_guard("polynomial JSON", [&] {
    auto f = frequency_from_json(j.at("frequency"));
    std::vector<cplx> coeffs;
    for (const auto& c : j.at("coefficients")) {
      coeffs.push_back(complex_from_json(c));
    }
    return DirichletPolynomial(std::move(f), std::move(coeffs));
  });
}

FrequencyPtr parse_frequency_spec(std::string_view spec) {
  const auto [kind, arg] = split_spec(spec);
  if (kind == "file") {
    return frequency_from_json(read_json_file(std::string(arg)));
  }
  const auto n = static_cast<std::size_t>(parse_unsigned(arg, "frequency length"));
  if (kind == "naturals") {
    return make_standard_frequency(StandardFrequency::naturals, n);
  }
  if (kind == "lognat") {
    return make_standard_frequency(StandardFrequency::log_naturals, n);
  }
  if (kind == "pow2") {
    return make_standard_frequency(StandardFrequency::powers_of_two, n);
  }
  throw ValidationError("unknown frequency spec '" + std::string(spec) + "'");
}

GroupRealization parse_group_spec(std::string_view spec, const FrequencyPtr& f) {
  const auto [kind, arg] = split_spec(spec);
  if (kind == "auto") {
    return realize_group(f, RealizationHint::automatic);
  }
  if (kind == "naturals") {
    return realize_group(f, RealizationHint::naturals);
  }
  if (kind == "primes") {
    return realize_group(f, RealizationHint::prime_factorization);
  }
  if (kind == "file") {
    return group_from_json(f, read_json_file(std::string(arg)));
  }
  throw ValidationError("unknown group spec '" + std::string(spec) + "'");
}

std::vector<cplx> coefficient_rule(std::string_view rule, std::size_t n) {
  const auto [kind, arg] = split_spec(rule);
  std::vector<cplx> out(n);
  if (kind == "ones") {
    std::fill(out.begin(), out.end(), cplx{1.0, 0.0});
  } else if (kind == "power") {
    const double p = parse_double(arg, "power exponent");
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = std::pow(static_cast<double>(i + 1), -p);
    }
  } else if (kind == "alternating") {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = i % 2 == 0 ? 1.0 : -1.0;
    }
  } else if (kind == "geometric") {
    const double r = parse_double(arg, "geometric ratio");
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = std::pow(r, static_cast<double>(i));
    }
  } else if (kind == "random_disc" || kind == "random_sign") {
    auto rng = Rng::derive(parse_unsigned(arg, "coefficient seed"), stream_key(kind), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (kind == "random_sign") {
        out[i] = rng.uniform() < 0.5 ? -1.0 : 1.0;
      } else {
        const double r = std::sqrt(rng.uniform());
        out[i] = std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
      }
    }
  } else {
    throw ValidationError("unknown coefficient rule '" + std::string(rule) + "'");
  }
  return out;
}

cplx parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    return {parse_double(text, "complex number"), 0.0};
  }
  return {parse_double(text.substr(0, comma), "real part"),
          parse_double(text.substr(comma + 1), "imaginary part")};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

json read_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string format_double(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    text_ += (i ? "," : "") + header[i];
  }
  text_ += '\n';
}

CsvWriter& CsvWriter::cell(std::string_view v) {
  if (in_row_ == columns_) {
    throw ValidationError("CSV row has more cells than the header");
  }
  if (in_row_++ > 0) {
    text_ += ',';
  }
  text_ += v;
  return *this;
}

CsvWriter& CsvWriter::cell(double v) { return cell(std::string_view(format_double(v))); }

CsvWriter& CsvWriter::cell(std::uint64_t v) { return cell(std::string_view(std::to_string(v))); }

CsvWriter& CsvWriter::cell(bool v) { return cell(std::string_view(v ? "1" : "0")); }

void CsvWriter::end_row() {
  if (in_row_ != columns_) {
    throw ValidationError("CSV row has fewer cells than the header");
  }
  text_ += '\n';
  in_row_ = 0;
  ++rows_;
}

std::string CsvWriter::str() const { return text_; }

} // namespace riesz::io
