#pragma once

#include <optional>

#include "hh/errors.hpp"
#include "hh/group.hpp"
#include "hh/kernel.hpp"
#include "hh/quad.hpp"

namespace hh {

enum class ConstantMode {
  Classical,  // half-line theory, Lebesgue measure
  Group,      // radial theory on a homogeneous group, |S|-weighted
};

enum class ConstantSource {
  NumericQuadrature,
  ClosedForm,
};

// The best constant C*_p of a bilinear inequality, always stored on the C*_p
// scale (callers raise to the p-th power where a norm-power form is needed).
// An infinite value is a legitimate outcome meaning the inequality carries no
// finite constant for this kernel and exponent; in that case `quad` holds the
// divergent partial result. For numeric constants, `cross_check_dev` is the
// relative gap between the two equivalent defining integrals, and the stored
// quad result is marked unconverged when that gap exceeds what the individual
// error estimates justify.
struct SharpConstant {
  double value = 0.0;
  ConstantMode mode = ConstantMode::Classical;
  double p = 0.0;
  double q = 0.0;  // conjugate exponent, 1/p + 1/q = 1
  ConstantSource source = ConstantSource::ClosedForm;
  std::optional<QuadResult> quad;
  double cross_check_dev = 0.0;

  bool finite() const;
};

// integral of k(1,s) s^(-1/p) over (0,inf), cross-checked against the
// equivalent form integral of k(r,1) r^(-1/q). The kernel must be homogeneous
// of order -1 (PreconditionError otherwise). Requires p > 1.
SharpConstant cstar_classical(const Kernel& k, double p, const Tolerance& tol = {});

// |S| times the integral of k(1,s) s^(Q-1-Q/p), cross-checked against |S| times
// the integral of k(r,1) r^(Q-1-Q/q). The kernel must be homogeneous of order
// -Q for the group's homogeneous dimension Q.
SharpConstant cstar_group(const Kernel& k, double p, const HomogeneousGroup& g,
                          const Tolerance& tol = {});

// pi / sin(pi/p), the constant of the plain Hilbert kernel 1/(r+s)
SharpConstant classical_hilbert_constant(double p);

// pi / (lam sin(pi/m)), the constant of the weighted family with scaling
// parameter lam and shape exponent m > 1. The constant does not depend on p;
// p is recorded so reports carry the exponent pair they were computed for.
SharpConstant power_hilbert_constant(double lam, double m, double p);

// Q pi / sin(pi/p), the group form of the plain Hilbert constant
SharpConstant group_hilbert_constant(double Q, double p);

// (n pi / sin(pi/p)) * pi^(n/2) / Gamma(n/2 + 1), the Euclidean R^n case
SharpConstant euclidean_hilbert_constant(int n, double p);

// Q pi / (lam sin(pi/m)), the group form of the weighted family constant
SharpConstant group_power_hilbert_constant(double Q, double lam, double m, double p);

}  // namespace hh
