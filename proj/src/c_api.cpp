#include "riesz/riesz.h"

#include "riesz/error.hpp"
#include "riesz/experiments.hpp"
#include "riesz/io.hpp"
#include "riesz/reports.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct rz_frequency {
  riesz::FrequencyPtr value;
};

struct rz_group {
  riesz::GroupRealization value;
};

struct rz_poly {
  riesz::DirichletPolynomial value;
};

namespace {

thread_local std::string last_error;

rz_status fail(rz_status status, const char* message) {
  last_error = message;
  return status;
}

template <class F>
rz_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return RZ_OK;
  } catch (const riesz::ValidationError& e) {
    return fail(RZ_ERR_VALIDATION, e.what());
  } catch (const riesz::RangeError& e) {
    return fail(RZ_ERR_RANGE, e.what());
  } catch (const riesz::RealizationError& e) {
    return fail(RZ_ERR_REALIZATION, e.what());
  } catch (const riesz::IndexError& e) {
    return fail(RZ_ERR_INDEX, e.what());
  } catch (const riesz::MismatchError& e) {
    return fail(RZ_ERR_MISMATCH, e.what());
  } catch (const riesz::ResolutionError& e) {
    return fail(RZ_ERR_RESOLUTION, e.what());
  } catch (const riesz::QuadratureError& e) {
    return fail(RZ_ERR_QUADRATURE, e.what());
  } catch (const riesz::InfeasibleError& e) {
    return fail(RZ_ERR_INFEASIBLE, e.what());
  } catch (const riesz::IoError& e) {
    return fail(RZ_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RZ_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const riesz::Report& r, char** csv, char** summary) {
  // allocate both before handing either out
  char* c = csv ? dup_string(r.csv) : nullptr;
  char* s = nullptr;
  try {
    s = summary ? dup_string(r.summary.dump()) : nullptr;
  } catch (...) {
    std::free(c);
    throw;
  }
  if (csv) {
    *csv = c;
  }
  if (summary) {
    *summary = s;
  }
}

riesz::cplx to_cplx(rz_complex z) { return {z.re, z.im}; }
rz_complex from_cplx(riesz::cplx z) { return {z.real(), z.imag()}; }

riesz::RieszKind to_kind(rz_kind kind) {
  switch (kind) {
  case RZ_FIRST:
    return riesz::RieszKind::first;
  case RZ_SECOND:
    return riesz::RieszKind::second;
  }
  throw riesz::ValidationError("unknown Riesz kind");
}

std::span<const double> grid(const double* values, std::size_t n) {
  if (n > 0 && values == nullptr) {
    throw riesz::ValidationError("null grid with nonzero length");
  }
  return values ? std::span<const double>(values, n) : std::span<const double>();
}

} // namespace

extern "C" {

const char* rz_version(void) { return "0.1.0"; }

const char* rz_git_describe(void) { return riesz::git_describe(); }

const char* rz_last_error(void) { return last_error.c_str(); }

const char* rz_status_name(rz_status status) {
  switch (status) {
  case RZ_OK:
    return "ok";
  case RZ_ERR_VALIDATION:
    return "validation error";
  case RZ_ERR_RANGE:
    return "range error";
  case RZ_ERR_REALIZATION:
    return "realization error";
  case RZ_ERR_INDEX:
    return "index error";
  case RZ_ERR_MISMATCH:
    return "frequency mismatch";
  case RZ_ERR_RESOLUTION:
    return "resolution error";
  case RZ_ERR_QUADRATURE:
    return "quadrature error";
  case RZ_ERR_INFEASIBLE:
    return "tolerance infeasible";
  case RZ_ERR_IO:
    return "i/o error";
  case RZ_ERR_NULL_ARGUMENT:
    return "null argument";
  case RZ_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

void rz_string_free(char* s) { std::free(s); }

rz_status rz_frequency_from_spec(const char* spec, rz_frequency** out) {
  if (!spec || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new rz_frequency{riesz::io::parse_frequency_spec(spec)}; });
}

rz_status rz_frequency_from_values(const double* values, size_t n, rz_frequency** out) {
  if (!values || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new rz_frequency{
        std::make_shared<const riesz::Frequency>(std::vector<double>(values, values + n))};
  });
}

rz_status rz_frequency_from_json(const char* json, rz_frequency** out) {
  if (!json || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    riesz::io::json j;
    try {
      j = riesz::io::json::parse(json);
    } catch (const riesz::io::json::exception& e) {
      throw riesz::ValidationError(e.what());
    }
    *out = new rz_frequency{riesz::io::frequency_from_json(j)};
  });
}

rz_status rz_frequency_to_json(const rz_frequency* f, char** out) {
  if (!f || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = dup_string(riesz::io::frequency_to_json(*f->value).dump()); });
}

size_t rz_frequency_size(const rz_frequency* f) { return f ? f->value->size() : 0; }

rz_status rz_frequency_values(const rz_frequency* f, double* out, size_t n) {
  if (!f || (!out && n > 0)) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  const auto v = f->value->values();
  std::copy_n(v.begin(), std::min(n, v.size()), out);
  return RZ_OK;
}

void rz_frequency_free(rz_frequency* f) { delete f; }

rz_status rz_group_from_spec(const char* spec, const rz_frequency* f, rz_group** out) {
  if (!spec || !f || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new rz_group{riesz::io::parse_group_spec(spec, f->value)}; });
}

rz_status rz_group_to_json(const rz_group* g, char** out) {
  if (!g || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = dup_string(riesz::io::group_to_json(g->value).dump()); });
}

size_t rz_group_dimension(const rz_group* g) { return g ? g->value.dimension() : 0; }

void rz_group_free(rz_group* g) { delete g; }

rz_status rz_poly_create(const rz_frequency* f, const rz_complex* coefficients, size_t n,
                         rz_poly** out) {
  if (!f || !out || (!coefficients && n > 0)) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<riesz::cplx> c(n);
    for (size_t i = 0; i < n; ++i) {
      c[i] = to_cplx(coefficients[i]);
    }
    *out = new rz_poly{riesz::DirichletPolynomial(f->value, std::move(c))};
  });
}

rz_status rz_poly_from_rule(const rz_frequency* f, const char* rule, rz_poly** out) {
  if (!f || !rule || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new rz_poly{riesz::DirichletPolynomial(
        f->value, riesz::io::coefficient_rule(rule, f->value->size()))};
  });
}

rz_status rz_poly_from_json(const char* json, rz_poly** out) {
  if (!json || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    riesz::io::json j;
    try {
      j = riesz::io::json::parse(json);
    } catch (const riesz::io::json::exception& e) {
      throw riesz::ValidationError(e.what());
    }
    *out = new rz_poly{riesz::io::polynomial_from_json(j)};
  });
}

rz_status rz_poly_to_json(const rz_poly* p, char** out) {
  if (!p || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = dup_string(riesz::io::polynomial_to_json(p->value).dump()); });
}

rz_status rz_poly_frequency(const rz_poly* p, rz_frequency** out) {
  if (!p || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new rz_frequency{p->value.frequency_ptr()}; });
}

size_t rz_poly_size(const rz_poly* p) { return p ? p->value.size() : 0; }

void rz_poly_free(rz_poly* p) { delete p; }

rz_status rz_evaluate(const rz_poly* p, rz_complex s, rz_complex* out) {
  if (!p || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = from_cplx(riesz::evaluate(p->value, to_cplx(s))); });
}

rz_status rz_riesz_mean(const rz_poly* p, rz_kind kind, double k, double x, rz_complex s,
                        rz_complex* out) {
  if (!p || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = from_cplx(riesz::riesz_mean(p->value, {to_kind(kind), k, x}, to_cplx(s)));
  });
}

rz_status rz_cesaro_mean(const rz_poly* p, size_t nc, rz_complex s, rz_complex* out) {
  if (!p || !out) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = from_cplx(riesz::cesaro_mean(p->value, nc, to_cplx(s))); });
}

rz_status rz_converge(const rz_poly* p, rz_kind kind, double k, rz_complex s,
                      const double* x_grid, size_t n_x, double tol, char** csv, char** summary) {
  if (!p) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    emit(riesz::converge_report(p->value, to_kind(kind), k, to_cplx(s), grid(x_grid, n_x), tol),
         csv, summary);
  });
}

rz_status rz_consistency(const rz_poly* p, const char* which, double k, double ell, rz_complex s,
                         const double* x_grid, size_t n_x, double tol, char** csv,
                         char** summary) {
  if (!p || !which) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    emit(riesz::consistency_report(p->value, which, k, ell, to_cplx(s), grid(x_grid, n_x), tol),
         csv, summary);
  });
}

rz_status rz_abscissa(const rz_poly* p, double k, const double* x_grid, size_t n_x,
                      const double* t_grid, size_t n_t, char** csv, char** summary) {
  if (!p) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    emit(riesz::abscissa_report(p->value, k, grid(x_grid, n_x), grid(t_grid, n_t)), csv,
         summary);
  });
}

rz_status rz_maximal(const rz_poly* p, const rz_group* g, double k, size_t samples,
                     uint64_t seed, const double* x_grid, size_t n_x, char** csv,
                     char** summary) {
  if (!p || !g) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    emit(riesz::maximal_report(p->value, g->value, k, samples, seed, grid(x_grid, n_x)), csv,
         summary);
  });
}

rz_status rz_norms(const rz_poly* p, const rz_group* g, double half_width, size_t samples,
                   uint64_t seed, char** csv, char** summary) {
  if (!p || !g) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    emit(riesz::norms_report(p->value, g->value, half_width, samples, seed), csv, summary);
  });
}

rz_status rz_weaktype(const rz_poly* p, const rz_group* g, double k, size_t samples,
                      uint64_t seed, char** csv, char** summary) {
  if (!p || !g) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    emit(riesz::weaktype_report(p->value, g->value, k, samples, seed), csv, summary);
  });
}

rz_status rz_verify(const char* check, uint64_t seed, char** csv, char** summary,
                    int* all_passed) {
  if (!check) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto r = riesz::verify_report(check, seed);
    if (all_passed) {
      *all_passed = r.summary.value("all_passed", false) ? 1 : 0;
    }
    emit(r, csv, summary);
  });
}

rz_status rz_experiment_run(const char* config_path, const char* out_dir, char** summary) {
  if (!config_path || !out_dir) {
    return fail(RZ_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto results = riesz::run_experiment_file(config_path, out_dir);
    if (summary) {
      auto arr = riesz::io::json::array();
      for (const auto& r : results) {
        arr.push_back(r.summary());
      }
      *summary = dup_string(arr.dump());
    }
  });
}

} // extern "C"
