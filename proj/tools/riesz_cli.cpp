// Command-line front end. Talks to the library only through riesz.h.
#include "riesz/riesz.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

struct Failure : std::runtime_error {
  rz_status status;
  Failure(rz_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(rz_status status, const char* what) {
  if (status != RZ_OK) {
    throw Failure(status, std::string(what) + ": " + rz_status_name(status) + ": " +
                              rz_last_error());
  }
}

struct StringDeleter {
  void operator()(char* s) const { rz_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using Frequency = std::unique_ptr<rz_frequency, HandleDeleter<rz_frequency, rz_frequency_free>>;
using Group = std::unique_ptr<rz_group, HandleDeleter<rz_group, rz_group_free>>;
using Poly = std::unique_ptr<rz_poly, HandleDeleter<rz_poly, rz_poly_free>>;

rz_complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      return {std::stod(text), 0.0};
    }
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Failure(RZ_ERR_VALIDATION, "cannot parse complex number '" + text + "'");
  }
}

std::string format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Failure(RZ_ERR_IO, "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Source {
  std::string frequency = "lognat:16";
  std::string group = "auto";
  std::string coeffs = "ones";
  std::string poly_file;

  void add_options(CLI::App* app, bool with_group) {
    app->add_option("--frequency", frequency,
                    "naturals:N | lognat:N | pow2:N | file:<path>")
        ->capture_default_str();
    app->add_option("--coeffs", coeffs,
                    "ones | power:p | alternating | geometric:r | random_disc:seed | "
                    "random_sign:seed")
        ->capture_default_str();
    app->add_option("--poly", poly_file, "polynomial JSON file (overrides --frequency/--coeffs)");
    if (with_group) {
      app->add_option("--group", group, "auto | naturals | primes | file:<path>")
          ->capture_default_str();
    }
  }

  Poly poly() const {
    rz_poly* p = nullptr;
    if (!poly_file.empty()) {
      check(rz_poly_from_json(read_file(poly_file).c_str(), &p), "--poly");
      return Poly(p);
    }
    rz_frequency* f = nullptr;
    check(rz_frequency_from_spec(frequency.c_str(), &f), "--frequency");
    Frequency owned(f);
    check(rz_poly_from_rule(f, coeffs.c_str(), &p), "--coeffs");
    return Poly(p);
  }

  Group realize(const rz_poly* p) const {
    rz_frequency* f = nullptr;
    check(rz_poly_frequency(p, &f), "frequency");
    Frequency owned(f);
    rz_group* g = nullptr;
    check(rz_group_from_spec(group.c_str(), f, &g), "--group");
    return Group(g);
  }
};

std::vector<double> frequency_values(const rz_poly* p) {
  rz_frequency* f = nullptr;
  check(rz_poly_frequency(p, &f), "frequency");
  Frequency owned(f);
  std::vector<double> v(rz_frequency_size(f));
  check(rz_frequency_values(f, v.data(), v.size()), "frequency");
  return v;
}

// x_max / ratio^{points-1-i}, ending exactly at x_max
std::vector<double> geometric(double x_max, std::size_t points, double ratio) {
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = x_max / std::pow(ratio, static_cast<double>(points - 1 - i));
  }
  return out;
}

std::vector<double> linear(double lo, double hi, std::size_t points) {
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (points - 1.0);
  }
  return out;
}

struct Output {
  std::string path;

  void add_options(CLI::App* app) {
    app->add_option("--out", path, "CSV output file (default: stdout)");
  }

  // CSV to the file or stdout; the JSON summary goes to stderr when the CSV
  // occupies stdout.
  void write(char* csv, char* summary) const {
    OwnedString c(csv);
    OwnedString s(summary);
    if (path.empty()) {
      std::cout << c.get();
      if (s) {
        std::cerr << s.get() << "\n";
      }
      return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << c.get())) {
      throw Failure(RZ_ERR_IO, "cannot write " + path);
    }
    if (s) {
      std::cout << s.get() << "\n";
    }
  }
};

rz_kind kind_from(const std::string& kind) { return kind == "second" ? RZ_SECOND : RZ_FIRST; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz means of general Dirichlet series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rz_version()) + " (" + rz_git_describe() + ")");

  int exit_code = 0;

  // eval
  Source eval_src;
  std::string eval_kind = "first";
  double eval_k = 1.0;
  double eval_x = NAN;
  std::string eval_s = "0,0";
  std::size_t eval_cesaro = 0;
  auto* eval = app.add_subcommand("eval", "evaluate D(s), a Riesz mean, or a Cesaro mean");
  eval_src.add_options(eval, false);
  eval->add_option("--kind", eval_kind, "first | second")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  eval->add_option("--k", eval_k, "Riesz order k >= 0")->capture_default_str();
  eval->add_option("--x", eval_x, "cutoff x (omit to evaluate D(s) itself)");
  eval->add_option("--s", eval_s, "point re,im")->capture_default_str();
  eval->add_option("--cesaro", eval_cesaro, "Cesaro mean of order Nc instead");
  eval->callback([&] {
    const auto p = eval_src.poly();
    const auto s = parse_complex(eval_s);
    rz_complex v{};
    if (eval_cesaro > 0) {
      check(rz_cesaro_mean(p.get(), eval_cesaro, s, &v), "cesaro");
    } else if (std::isnan(eval_x)) {
      check(rz_evaluate(p.get(), s, &v), "eval");
    } else {
      check(rz_riesz_mean(p.get(), kind_from(eval_kind), eval_k, eval_x, s, &v), "riesz mean");
    }
    std::cout << format(v.re) << "," << format(v.im) << "\n";
  });

  // converge / consistency share the x grid options
  struct GridOpts {
    double x_max = NAN;
    std::size_t points = 32;
    double ratio = 1.3;
    double tol = 1e-3;
    void add(CLI::App* app) {
      app->add_option("--x-max", x_max, "largest grid point (default 100 l_N)");
      app->add_option("--points", points, "grid points")->capture_default_str();
      app->add_option("--ratio", ratio, "geometric ratio")->capture_default_str();
      app->add_option("--tol", tol, "stabilisation tolerance")->capture_default_str();
    }
    std::vector<double> grid(const rz_poly* p) const {
      double top = x_max;
      if (std::isnan(top)) {
        const auto v = frequency_values(p);
        top = 100.0 * std::max(1.0, v.back());
      }
      return geometric(top, points, ratio);
    }
  };

  Source conv_src;
  Output conv_out;
  GridOpts conv_grid;
  std::string conv_kind = "first";
  double conv_k = 1.0;
  std::string conv_s = "0,0";
  auto* converge = app.add_subcommand("converge", "Riesz means on a geometric x grid");
  conv_src.add_options(converge, false);
  conv_out.add_options(converge);
  conv_grid.add(converge);
  converge->add_option("--kind", conv_kind)
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  converge->add_option("--k", conv_k)->capture_default_str();
  converge->add_option("--s", conv_s)->capture_default_str();
  converge->callback([&] {
    const auto p = conv_src.poly();
    const auto grid = conv_grid.grid(p.get());
    char* csv = nullptr;
    char* summary = nullptr;
    check(rz_converge(p.get(), kind_from(conv_kind), conv_k, parse_complex(conv_s), grid.data(),
                      grid.size(), conv_grid.tol, &csv, &summary),
          "converge");
    conv_out.write(csv, summary);
  });

  Source cons_src;
  Output cons_out;
  GridOpts cons_grid;
  std::string cons_which = "first";
  double cons_k = 0.0;
  double cons_ell = 1.0;
  std::string cons_s = "0,0";
  auto* consistency = app.add_subcommand("consistency", "compare two summability methods");
  cons_src.add_options(consistency, false);
  cons_out.add_options(consistency);
  cons_grid.add(consistency);
  consistency->add_option("--which", cons_which, "first: (l,k) vs (l,ell); second: S vs R")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
  consistency->add_option("--k", cons_k)->capture_default_str();
  consistency->add_option("--ell", cons_ell, "larger order for --which first")
      ->capture_default_str();
  consistency->add_option("--s", cons_s)->capture_default_str();
  consistency->callback([&] {
    const auto p = cons_src.poly();
    const auto grid = cons_grid.grid(p.get());
    char* csv = nullptr;
    char* summary = nullptr;
    check(rz_consistency(p.get(), cons_which.c_str(), cons_k, cons_ell, parse_complex(cons_s),
                         grid.data(), grid.size(), cons_grid.tol, &csv, &summary),
          "consistency");
    cons_out.write(csv, summary);
  });

  Source absc_src;
  Output absc_out;
  double absc_k = 1.0;
  double absc_x_min = 1.0;
  double absc_x_max = NAN;
  std::size_t absc_points = 8;
  double absc_t_max = 100.0;
  std::size_t absc_t_points = 5;
  auto* abscissa = app.add_subcommand("abscissa", "growth slope of sup_t |R_x(it)|");
  absc_src.add_options(abscissa, false);
  absc_out.add_options(abscissa);
  abscissa->add_option("--k", absc_k)->capture_default_str();
  abscissa->add_option("--x-min", absc_x_min)->capture_default_str();
  abscissa->add_option("--x-max", absc_x_max, "default l_N");
  abscissa->add_option("--points", absc_points)->capture_default_str();
  abscissa->add_option("--t-max", absc_t_max, "t grid is linear over [0, t-max]")
      ->capture_default_str();
  abscissa->add_option("--t-points", absc_t_points)->capture_default_str();
  abscissa->callback([&] {
    const auto p = absc_src.poly();
    double top = absc_x_max;
    if (std::isnan(top)) {
      top = frequency_values(p.get()).back();
    }
    const auto xs = linear(absc_x_min, top, absc_points);
    const auto ts = linear(0.0, absc_t_max, absc_t_points);
    char* csv = nullptr;
    char* summary = nullptr;
    check(rz_abscissa(p.get(), absc_k, xs.data(), xs.size(), ts.data(), ts.size(), &csv,
                      &summary),
          "abscissa");
    absc_out.write(csv, summary);
  });

  Source max_src;
  Output max_out;
  double max_k = 1.0;
  std::size_t max_samples = 1000;
  std::uint64_t max_seed = 1;
  auto* maximal = app.add_subcommand("maximal", "Riesz maximal function on Haar samples");
  max_src.add_options(maximal, true);
  max_out.add_options(maximal);
  maximal->add_option("--k", max_k)->capture_default_str();
  maximal->add_option("--samples", max_samples)->capture_default_str();
  maximal->add_option("--seed", max_seed)->capture_default_str();
  maximal->callback([&] {
    const auto p = max_src.poly();
    const auto g = max_src.realize(p.get());
    char* csv = nullptr;
    char* summary = nullptr;
    check(rz_maximal(p.get(), g.get(), max_k, max_samples, max_seed, nullptr, 0, &csv, &summary),
          "maximal");
    max_out.write(csv, summary);
  });

  Source norm_src;
  Output norm_out;
  double norm_t = 1e3;
  std::size_t norm_samples = 10000;
  std::uint64_t norm_seed = 1;
  auto* norms = app.add_subcommand("norms", "l2, Besicovitch and Haar norms");
  norm_src.add_options(norms, true);
  norm_out.add_options(norms);
  norms->add_option("--T", norm_t, "Besicovitch half width")->capture_default_str();
  norms->add_option("--samples", norm_samples)->capture_default_str();
  norms->add_option("--seed", norm_seed)->capture_default_str();
  norms->callback([&] {
    const auto p = norm_src.poly();
    const auto g = norm_src.realize(p.get());
    char* csv = nullptr;
    char* summary = nullptr;
    check(rz_norms(p.get(), g.get(), norm_t, norm_samples, norm_seed, &csv, &summary), "norms");
    norm_out.write(csv, summary);
  });

  Source weak_src;
  Output weak_out;
  double weak_k = 1.0;
  std::size_t weak_samples = 10000;
  std::uint64_t weak_seed = 1;
  auto* weaktype = app.add_subcommand("weaktype", "distribution tail of the maximal function");
  weak_src.add_options(weaktype, true);
  weak_out.add_options(weaktype);
  weaktype->add_option("--k", weak_k)->capture_default_str();
  weaktype->add_option("--samples", weak_samples)->capture_default_str();
  weaktype->add_option("--seed", weak_seed)->capture_default_str();
  weaktype->callback([&] {
    const auto p = weak_src.poly();
    const auto g = weak_src.realize(p.get());
    char* csv = nullptr;
    char* summary = nullptr;
    check(rz_weaktype(p.get(), g.get(), weak_k, weak_samples, weak_seed, &csv, &summary),
          "weaktype");
    weak_out.write(csv, summary);
  });

  Output ver_out;
  std::string ver_check;
  std::uint64_t ver_seed = 1;
  auto* verify = app.add_subcommand("verify", "run a numerical verification grid");
  ver_out.add_options(verify);
  verify->add_option("--check", ver_check)
      ->required()
      ->check(CLI::IsMember({"perron", "kernel", "ftrep", "abel", "secondmeans"}));
  verify->add_option("--seed", ver_seed, "seed for randomised checks")->capture_default_str();
  verify->callback([&] {
    char* csv = nullptr;
    char* summary = nullptr;
    int passed = 0;
    check(rz_verify(ver_check.c_str(), ver_seed, &csv, &summary, &passed), "verify");
    ver_out.write(csv, summary);
    exit_code = passed ? 0 : 3;
  });

  std::string exp_config;
  std::string exp_out;
  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo experiments");
  experiment->require_subcommand(1);
  auto* run = experiment->add_subcommand("run", "run every experiment in a config file");
  run->add_option("config", exp_config, "config JSON")->required();
  run->add_option("--out", exp_out, "output directory")->required();
  run->callback([&] {
    char* summary = nullptr;
    check(rz_experiment_run(exp_config.c_str(), exp_out.c_str(), &summary), "experiment");
    OwnedString s(summary);
    std::cout << s.get() << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Failure& e) {
    std::cerr << "riesz: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
