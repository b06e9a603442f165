#include "elastosurf/elastosurf.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "elastosurf/errors.hpp"
#include "elastosurf/geometry.hpp"
#include "elastosurf/sphere_cavity.hpp"

#ifndef ELASTOSURF_VERSION_STRING
#define ELASTOSURF_VERSION_STRING "0.0.0"
#endif

struct es_sweep {
  std::vector<elastosurf::SweepRow> rows;
};

struct es_profile {
  std::vector<elastosurf::ProfileSample> samples;
};

struct es_geometry_report {
  std::vector<elastosurf::GeometryCheckRow> rows;
  double fd_step;
};

namespace {

using namespace elastosurf;

struct ThreadState {
  std::string error;
  std::vector<std::string> warnings;
  std::vector<ScanSample> scan;
};

ThreadState& state() {
  thread_local ThreadState s;
  return s;
}

es_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument:
      return ES_ERR_INVALID_ARGUMENT;
    case ErrorKind::domain:
      return ES_ERR_DOMAIN;
    case ErrorKind::definiteness:
      return ES_ERR_DEFINITENESS;
    case ErrorKind::chart:
      return ES_ERR_CHART;
    case ErrorKind::normalization:
    case ErrorKind::singularity:
    case ErrorKind::incompressibility:
      return ES_ERR_CONSTRAINT;
    case ErrorKind::unsupported_model:
      return ES_ERR_UNSUPPORTED;
    case ErrorKind::bracketing:
      return ES_ERR_BRACKETING;
  }
  return ES_ERR_INTERNAL;
}

es_status fail_with(es_status s, const char* what) {
  state().error = what;
  return s;
}

// Runs `body`, translating exceptions into status codes and thread-local details.
template <typename Body>
es_status guarded(Body&& body) {
  try {
    body();
    return ES_OK;
  } catch (const BracketingError& e) {
    state().scan = e.scan();
    return fail_with(ES_ERR_BRACKETING, e.what());
  } catch (const Error& e) {
    return fail_with(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(ES_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(ES_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(ES_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::invalid_argument, what);
}

NondimensionalProblem to_core(const es_nondimensional_params& p) {
  NondimensionalProblem nd;
  nd.alpha = p.alpha;
  nd.xi = p.xi;
  nd.eta = p.eta;
  nd.eta_f = p.eta_f;
  nd.p_hat_o = p.p_hat_o;
  nd.omega_s = p.omega_s;
  nd.omega_l = p.omega_l;
  nd.wet = p.wet != 0;
  return nd;
}

SolverOptions to_core(const es_solver_options* o) {
  SolverOptions opts;
  if (o) {
    opts.bracket_lo = o->bracket_lo;
    opts.bracket_hi = o->bracket_hi;
    opts.scan_points = o->scan_points;
    opts.tolerance = o->tolerance;
  }
  return opts;
}

void fill(const CavitySolution& s, es_cavity_solution* out) {
  *out = es_cavity_solution{};
  out->x = s.x;
  out->lambda_o = s.lambda_o;
  out->residual = s.residual;
  out->gamma0_over_mu_Ri = s.gamma0_over_mu_Ri;
  out->p_f_over_mu = s.p_f_over_mu;
  out->sigma_i_over_mu = s.sigma_i_over_mu;
  out->j0 = s.j0;
  out->e_c = s.e_c;
  out->e_c_hat = s.e_c_hat;
  out->root_count = s.roots.size();
  for (std::size_t k = 0; k < s.roots.size() && k < ES_MAX_ROOTS; ++k) out->roots[k] = s.roots[k];
  out->warning_count = s.warnings.size();
  state().warnings = s.warnings;
}

void begin_call() {
  ThreadState& s = state();
  s.error.clear();
  s.scan.clear();
}

}  // namespace

extern "C" {

const char* es_version(void) { return ELASTOSURF_VERSION_STRING; }

const char* es_status_string(es_status status) {
  switch (status) {
    case ES_OK:
      return "ok";
    case ES_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case ES_ERR_DOMAIN:
      return "domain error";
    case ES_ERR_BRACKETING:
      return "bracketing failure";
    case ES_ERR_DEFINITENESS:
      return "not positive definite";
    case ES_ERR_CHART:
      return "chart error";
    case ES_ERR_CONSTRAINT:
      return "constraint violated";
    case ES_ERR_UNSUPPORTED:
      return "unsupported model";
    case ES_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* es_last_error(void) { return state().error.c_str(); }

size_t es_last_warning_count(void) { return state().warnings.size(); }

const char* es_last_warning(size_t index) {
  const auto& w = state().warnings;
  return index < w.size() ? w[index].c_str() : nullptr;
}

size_t es_last_scan_size(void) { return state().scan.size(); }

es_status es_last_scan_row(size_t index, double* x, double* residual) {
  const auto& scan = state().scan;
  if (index >= scan.size() || !x || !residual) return ES_ERR_INVALID_ARGUMENT;
  *x = scan[index].x;
  *residual = scan[index].residual;
  return ES_OK;
}

void es_solver_options_default(es_solver_options* out) {
  if (!out) return;
  const SolverOptions d;
  *out = es_solver_options{d.bracket_lo, d.bracket_hi, d.scan_points, d.tolerance};
}

es_status es_nondimensionalize(const es_dimensional_params* in, es_nondimensional_params* out) {
  begin_call();
  return guarded([&] {
    require(in && out, "null argument");
    SphereProblem p;
    p.R_i = in->R_i;
    p.R_o = in->R_o;
    p.mu = in->mu;
    p.mu_s = in->mu_s;
    p.kappa_s = in->kappa_s;
    p.kappa_f = in->kappa_f;
    p.p_o = in->p_o;
    p.omega_s = in->omega_s;
    p.omega_l = in->omega_l;
    p.wet = in->wet != 0;
    const NondimensionalProblem nd = p.nondimensionalize();
    *out = es_nondimensional_params{nd.alpha, nd.xi, nd.eta, nd.eta_f, nd.p_hat_o, nd.omega_s, nd.omega_l, nd.wet ? 1 : 0};
  });
}

es_status es_validate(const es_nondimensional_params* params) {
  begin_call();
  return guarded([&] {
    require(params, "null argument");
    state().warnings = to_core(*params).validate();
  });
}

es_status es_equilibrium_residual(const es_nondimensional_params* params, double x, double* out) {
  begin_call();
  return guarded([&] {
    require(params && out, "null argument");
    *out = equilibrium_residual(x, to_core(*params));
  });
}

es_status es_solve(const es_nondimensional_params* params, double p_hat_o, const es_solver_options* options,
                   es_cavity_solution* out) {
  begin_call();
  return guarded([&] {
    require(params && out, "null argument");
    state().warnings.clear();
    fill(solve_stretch(to_core(*params), p_hat_o, to_core(options)), out);
  });
}

es_status es_relax(const es_nondimensional_params* params, const es_solver_options* options, es_cavity_solution* out) {
  begin_call();
  return guarded([&] {
    require(params && out, "null argument");
    state().warnings.clear();
    fill(relax(to_core(*params), to_core(options)), out);
  });
}

es_status es_linear_grid(double from, double to, int count, double* out) {
  begin_call();
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto g = linear_grid(from, to, count);
    for (std::size_t k = 0; k < g.size(); ++k) out[k] = g[k];
  });
}

es_status es_sweep_run(const es_nondimensional_params* params, const double* p_hat_grid, size_t count,
                       const es_solver_options* options, es_sweep** out) {
  begin_call();
  if (out) *out = nullptr;
  return guarded([&] {
    require(params && out && (p_hat_grid || count == 0), "null argument");
    const NondimensionalProblem nd = to_core(*params);
    state().warnings = nd.validate();
    auto* s = new es_sweep{pressure_sweep(nd, std::vector<double>(p_hat_grid, p_hat_grid + count), to_core(options))};
    *out = s;
  });
}

size_t es_sweep_size(const es_sweep* sweep) { return sweep ? sweep->rows.size() : 0; }

es_status es_sweep_get(const es_sweep* sweep, size_t index, es_sweep_row* out) {
  if (!sweep || !out || index >= sweep->rows.size()) return fail_with(ES_ERR_INVALID_ARGUMENT, "sweep index out of range");
  const SweepRow& r = sweep->rows[index];
  *out = es_sweep_row{r.p_hat_o, r.x, r.lambda_o, r.strain, r.gamma0_over_mu_Ri, r.e_c, r.p_f_over_mu, r.residual};
  return ES_OK;
}

void es_sweep_destroy(es_sweep* sweep) { delete sweep; }

es_status es_profile_run(const es_nondimensional_params* params, double p_hat_o, int samples,
                         const es_solver_options* options, es_profile** out) {
  begin_call();
  if (out) *out = nullptr;
  return guarded([&] {
    require(params && out, "null argument");
    const NondimensionalProblem nd = to_core(*params);
    state().warnings = nd.validate();
    *out = new es_profile{stress_profile(nd, p_hat_o, samples, to_core(options))};
  });
}

size_t es_profile_size(const es_profile* profile) { return profile ? profile->samples.size() : 0; }

es_status es_profile_get(const es_profile* profile, size_t index, es_profile_sample* out) {
  if (!profile || !out || index >= profile->samples.size())
    return fail_with(ES_ERR_INVALID_ARGUMENT, "profile index out of range");
  const ProfileSample& s = profile->samples[index];
  *out = es_profile_sample{s.radius_ratio, s.sigma_rr_over_mu, s.sigma_tt_over_mu, s.p_over_mu};
  return ES_OK;
}

void es_profile_destroy(es_profile* profile) { delete profile; }

es_status es_geometry_check_run(double fd_step, es_geometry_report** out) {
  begin_call();
  if (out) *out = nullptr;
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(fd_step > 0.0, "fd_step must be positive");
    *out = new es_geometry_report{geometry_check(fd_step), fd_step};
  });
}

size_t es_geometry_report_size(const es_geometry_report* report) { return report ? report->rows.size() : 0; }

es_status es_geometry_report_get(const es_geometry_report* report, size_t index, es_geometry_row* out) {
  if (!report || !out || index >= report->rows.size())
    return fail_with(ES_ERR_INVALID_ARGUMENT, "geometry index out of range");
  const GeometryCheckRow& r = report->rows[index];
  *out = es_geometry_row{r.fixture.c_str(), r.check.c_str(), r.value, report->fd_step};
  return ES_OK;
}

void es_geometry_report_destroy(es_geometry_report* report) { delete report; }

}  // extern "C"
