#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "hh/errors.hpp"

namespace hh {

// Error-control settings shared by the adaptive integrators.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-14;
  int max_subdiv = 2000;
};

// Outcome of a numerical integration. `err_estimate` is a heuristic bound on
// |value - exact|; `converged` records whether the requested target
// max(rel*|value|, abs) was met. Divergence surfaces as converged == false,
// never as an exception.
struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

// An integral failed to converge where convergence is required; `partial`
// carries the best estimate obtained.
struct DivergenceError : Error {
  QuadResult partial;
  DivergenceError(const std::string& msg, QuadResult p) : Error(msg), partial(p) {}
};

// Integral of f over (0, inf). The domain is split at 1 and the tail mapped
// onto (0,1] via s -> 1/s, so integrable endpoint singularities at 0 and
// algebraic decay at infinity are both resolved by the same adaptive
// 15-point Gauss-Kronrod refinement. f is never evaluated at 0.
// NaN from f raises EvalError; overflow during refinement is treated as
// suspected divergence and ends in converged == false.
QuadResult integrate_half_line(const std::function<double(double)>& f,
                               const Tolerance& tol = {});

// Iterated integral of f over (0, inf)^2: inner in s, outer in r. Inner error
// estimates propagate additively into the reported err_estimate; the result
// is converged only if the outer run and every inner run converged.
QuadResult integrate_half_plane(const std::function<double(double, double)>& f,
                                const Tolerance& tol = {});

// General nested form: integrates post(r, I(r)) over r in (0, inf), where
// I(r) = integral over s in (0, inf) of f(r, s). `inner_sensitivity` scales
// the propagated inner error (pass d(post)/dI in relative terms, e.g. p when
// post raises the inner value to the p-th power).
QuadResult integrate_half_line_nested(
    const std::function<double(double, double)>& f,
    const std::function<double(double, double)>& post,
    double inner_sensitivity, const Tolerance& tol = {});

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct McOptions {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 42;
  std::uint64_t chunk_size = 0;  // 0 = single chunk
};

// Plain Monte Carlo over an axis-aligned box. Samples are drawn from
// mt19937_64 streams with splitmix64-derived per-chunk seeds and accumulated
// in chunk order, so results are bit-identical for fixed
// (seed, n_samples, chunk_size). err_estimate is the standard error of the
// mean scaled by the box volume.
QuadResult mc_integrate(const std::function<double(std::span<const double>)>& f,
                        std::span<const Interval> box, const McOptions& opt = {});

// Gamma function for x > 0 (Lanczos approximation, g = 7, 9 coefficients;
// small arguments are lifted through the recurrence). InputError for x <= 0.
double gamma_fn(double x);

}  // namespace hh
