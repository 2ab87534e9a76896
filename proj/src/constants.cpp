#include "hh/constants.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hh {
namespace {

constexpr double kPi = std::numbers::pi_v<double>;

double conjugate_exponent(double p) {
  if (!(std::isfinite(p) && p > 1.0)) {
    throw InputError("exponent p must be finite and greater than 1, got " +
                     std::to_string(p));
  }
  return p / (p - 1.0);
}

void require_order(const Kernel& k, double order) {
  const HomogeneityReport rep = check_homogeneity(k, order, 200, 1e-8, 424242);
  if (rep.pass) return;
  std::string msg = "kernel";
  if (!k.name.empty()) msg += " '" + k.name + "'";
  msg += " is not homogeneous of order " + std::to_string(order);
  if (!rep.note.empty()) {
    msg += ": " + rep.note;
  } else {
    msg += " (max relative deviation " + std::to_string(rep.max_rel_dev) + ")";
  }
  throw PreconditionError(msg);
}

// Combines the two equivalent defining integrals. Either one failing to
// converge means the constant is infinite; otherwise the gap between the two
// values acts as an empirical error bound on top of the quadrature estimates.
SharpConstant from_two_forms(const QuadResult& primary, const QuadResult& cross,
                             ConstantMode mode, double p, double q,
                             const Tolerance& tol) {
  SharpConstant out;
  out.mode = mode;
  out.p = p;
  out.q = q;
  out.source = ConstantSource::NumericQuadrature;
  if (!primary.converged || !cross.converged) {
    QuadResult bad = primary.converged ? cross : primary;
    bad.evaluations = primary.evaluations + cross.evaluations;
    out.value = std::numeric_limits<double>::infinity();
    out.quad = bad;
    return out;
  }
  const double scale = std::max(std::abs(primary.value), std::abs(cross.value));
  const double dev =
      scale > 0.0 ? std::abs(primary.value - cross.value) / scale : 0.0;
  const double budget =
      (primary.err_estimate + cross.err_estimate) / std::max(scale, 1e-300) +
      10.0 * tol.rel;
  QuadResult merged = primary;
  merged.err_estimate =
      std::max(primary.err_estimate, std::abs(primary.value - cross.value));
  merged.evaluations = primary.evaluations + cross.evaluations;
  merged.converged = dev <= budget;
  out.value = primary.value;
  out.quad = merged;
  out.cross_check_dev = dev;
  return out;
}

SharpConstant closed(double value, ConstantMode mode, double p) {
  SharpConstant out;
  out.value = value;
  out.mode = mode;
  out.p = p;
  out.q = p / (p - 1.0);
  out.source = ConstantSource::ClosedForm;
  return out;
}

}  // namespace

bool SharpConstant::finite() const { return std::isfinite(value); }

SharpConstant cstar_classical(const Kernel& k, double p, const Tolerance& tol) {
  const double q = conjugate_exponent(p);
  require_order(k, -1.0);
  const QuadResult primary = integrate_half_line(
      [&](double s) { return k(1.0, s) * std::pow(s, -1.0 / p); }, tol);
  const QuadResult cross = integrate_half_line(
      [&](double r) { return k(r, 1.0) * std::pow(r, -1.0 / q); }, tol);
  return from_two_forms(primary, cross, ConstantMode::Classical, p, q, tol);
}

SharpConstant cstar_group(const Kernel& k, double p, const HomogeneousGroup& g,
                          const Tolerance& tol) {
  const double q = conjugate_exponent(p);
  const double Q = g.Q();
  require_order(k, -Q);
  const double surface = g.sphere_measure().value;
  QuadResult primary = integrate_half_line(
      [&](double s) { return k(1.0, s) * std::pow(s, Q - 1.0 - Q / p); }, tol);
  QuadResult cross = integrate_half_line(
      [&](double r) { return k(r, 1.0) * std::pow(r, Q - 1.0 - Q / q); }, tol);
  primary.value *= surface;
  primary.err_estimate *= surface;
  cross.value *= surface;
  cross.err_estimate *= surface;
  return from_two_forms(primary, cross, ConstantMode::Group, p, q, tol);
}

SharpConstant classical_hilbert_constant(double p) {
  conjugate_exponent(p);
  return closed(kPi / std::sin(kPi / p), ConstantMode::Classical, p);
}

SharpConstant power_hilbert_constant(double lam, double m, double p) {
  if (!(std::isfinite(lam) && lam > 0.0)) {
    throw InputError("scaling parameter lam must be positive");
  }
  if (!(std::isfinite(m) && m > 1.0)) {
    throw InputError("shape exponent m must be greater than 1");
  }
  conjugate_exponent(p);
  return closed(kPi / (lam * std::sin(kPi / m)), ConstantMode::Classical, p);
}

SharpConstant group_hilbert_constant(double Q, double p) {
  if (!(std::isfinite(Q) && Q > 0.0)) {
    throw InputError("homogeneous dimension Q must be positive");
  }
  conjugate_exponent(p);
  return closed(Q * kPi / std::sin(kPi / p), ConstantMode::Group, p);
}

SharpConstant euclidean_hilbert_constant(int n, double p) {
  if (n < 1) throw InputError("dimension n must be at least 1");
  conjugate_exponent(p);
  const double ball = std::pow(kPi, n / 2.0) / gamma_fn(n / 2.0 + 1.0);
  return closed(n * kPi / std::sin(kPi / p) * ball, ConstantMode::Group, p);
}

SharpConstant group_power_hilbert_constant(double Q, double lam, double m,
                                           double p) {
  if (!(std::isfinite(Q) && Q > 0.0)) {
    throw InputError("homogeneous dimension Q must be positive");
  }
  if (!(std::isfinite(lam) && lam > 0.0)) {
    throw InputError("scaling parameter lam must be positive");
  }
  if (!(std::isfinite(m) && m > 1.0)) {
    throw InputError("shape exponent m must be greater than 1");
  }
  conjugate_exponent(p);
  return closed(Q * kPi / (lam * std::sin(kPi / m)), ConstantMode::Group, p);
}

}  // namespace hh
