#pragma once

#include <vector>

#include "hh/constants.hpp"
#include "hh/errors.hpp"
#include "hh/group.hpp"
#include "hh/kernel.hpp"
#include "hh/quad.hpp"
#include "hh/radial.hpp"

namespace hh {

// Outcome of checking one inequality instance. `rhs_norms` is the product of
// the norm factors without the constant, so ratio = lhs / (constant * norms).
// `holds` is exactly ratio <= 1 + 10*(combined relative tolerance), where the
// combined tolerance adds the requested relative tolerance and the relative
// error estimates attached to every quadrature result involved. Any infinite
// or unconverged ingredient forces holds == false; lhs == 0 holds trivially.
struct VerificationReport {
  double lhs = 0.0;
  double rhs_norms = 0.0;
  SharpConstant constant;
  double ratio = 0.0;
  bool holds = false;
  std::vector<QuadResult> quad_diagnostics;  // lhs first, then norm factors
};

// |S|^2 times the iterated integral of k(r,s) f(r) g(s) (rs)^(Q-1), the polar
// form of the bilinear pairing of two radial functions. An unconverged
// integral is reported as an infinite value with converged == false.
QuadResult bilinear_form(const Kernel& k, const RadialFunction& f,
                         const RadialFunction& g, const HomogeneousGroup& grp,
                         const Tolerance& tol = {});

// bilinear_form(k,f,g) against constant * |f|_p |g|_q
VerificationReport verify_hh(const Kernel& k, const RadialFunction& f,
                             const RadialFunction& g, double p,
                             const HomogeneousGroup& grp,
                             const SharpConstant& constant,
                             const Tolerance& tol = {});

// (|S| integral over r of (|S| integral of k(r,s) f(s) s^(Q-1) ds)^p
// r^(Q-1) dr)^(1/p) against constant * |f|_p
VerificationReport verify_hardy(const Kernel& k, const RadialFunction& f,
                                double p, const HomogeneousGroup& grp,
                                const SharpConstant& constant,
                                const Tolerance& tol = {});

// same operator measured in the conjugate space: the q-th power form against
// constant * |g|_q
VerificationReport verify_dual(const Kernel& k, const RadialFunction& g,
                               double q, const HomogeneousGroup& grp,
                               const SharpConstant& constant,
                               const Tolerance& tol = {});

// psi(s) = (|S| integral of k(r,s) f(r) r^(Q-1) dr)^(p-1), the pairing
// function that turns the Hoelder step of the bilinear bound into an
// equality: bilinear_form(k, f, psi) equals the p-th power of the
// verify_hardy lhs for the transposed kernel (same kernel when symmetric).
// Materialized on a 4096-node log grid over [1e-6, 1e6]. Divergence of the
// profile integral raises DivergenceError naming the failing radius.
RadialFunction conjugate_function(const Kernel& k, const RadialFunction& f,
                                  double p, const HomogeneousGroup& grp,
                                  const Tolerance& tol = {});

struct SweepEntry {
  double beta = 0.0;
  double ratio = 0.0;
  QuadResult quad;  // the lower-bound integral behind the ratio
};

// Lower-bound ratios for the sharp constant from the truncated power family:
// for each beta, |S| integral of k(1,t) t^(Q-1-Q/p-beta) min(1,t)^(beta p) dt
// divided by cstar_group(k, p). Ratios increase towards 1 as beta decreases.
// betas must be positive and strictly decreasing; an unconverged entry keeps
// converged == false and the sweep continues. PreconditionError when the
// constant itself is infinite.
std::vector<SweepEntry> sharpness_sweep(const Kernel& k, double p,
                                        const HomogeneousGroup& grp,
                                        const std::vector<double>& betas,
                                        const Tolerance& tol = {});

struct DilationEntry {
  double a = 0.0;
  double ratio = 0.0;
  bool converged = false;
};

struct DilationProbe {
  std::vector<DilationEntry> entries;
  double slope = 0.0;     // least-squares slope of log ratio against log a
  bool slope_ok = false;  // at least two usable entries backed the fit
};

// Measures how the normalized pairing responds to dilating both inputs:
// ratio(a) = bilinear(f∘D_a, g∘D_a) / (|f∘D_a|_p |g∘D_a|_q) scales like
// a^(-(Q+lambda)) for a kernel of order lambda, so the fitted slope is zero
// exactly at the critical order -Q. The kernel's claimed order is verified
// first (PreconditionError on mismatch). Needs at least two distinct scales.
DilationProbe dilation_probe(const Kernel& k, const RadialFunction& f,
                             const RadialFunction& g, double p,
                             const HomogeneousGroup& grp,
                             const std::vector<double>& scales = {0.5, 1.0, 2.0,
                                                                  4.0},
                             const Tolerance& tol = {});

// The group Hilbert inequality for the kernel 1/(r+s) through its sphere
// average reduction: lhs = Q|S| times the iterated integral of
// r^((Q-1)/p) s^((Q-1)/q) f(r) g(s) / (r+s), checked against
// group_hilbert_constant(Q,p) * |f|_p |g|_q. On the line with |S| = 1 this
// is exactly verify_hh with the plain Hilbert kernel.
VerificationReport verify_group_hilbert(const RadialFunction& f,
                                        const RadialFunction& g, double p,
                                        const HomogeneousGroup& grp,
                                        const Tolerance& tol = {});

}  // namespace hh
