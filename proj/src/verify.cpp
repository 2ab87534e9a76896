#include "hh/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace hh {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

double conjugate_exponent(double p) {
  if (!(std::isfinite(p) && p > 1.0)) {
    throw InputError("exponent p must be finite and greater than 1, got " +
                     fmt(p));
  }
  return p / (p - 1.0);
}

double rel_err(const QuadResult& q) {
  if (!std::isfinite(q.value) || q.value == 0.0) return 0.0;
  return std::abs(q.err_estimate / q.value);
}

// Shared report assembly. The slack in `holds` is 10x the combined relative
// tolerance: the requested one plus the relative error estimate of every
// quadrature involved, including the constant's own when it was integrated.
VerificationReport finish(double lhs, double rhs_norms, const SharpConstant& c,
                          std::vector<QuadResult> diags, const Tolerance& tol) {
  VerificationReport rep;
  rep.lhs = lhs;
  rep.rhs_norms = rhs_norms;
  rep.constant = c;
  rep.quad_diagnostics = std::move(diags);
  if (!std::isfinite(lhs) || !std::isfinite(rhs_norms) || !c.finite()) {
    rep.ratio = std::numeric_limits<double>::quiet_NaN();
    rep.holds = false;
    return rep;
  }
  if (lhs == 0.0) {
    rep.ratio = 0.0;
    rep.holds = true;
    return rep;
  }
  const double denom = c.value * rhs_norms;
  if (denom == 0.0) {
    rep.ratio = kInf;
    rep.holds = false;
    return rep;
  }
  rep.ratio = lhs / denom;
  double combined = tol.rel;
  for (const QuadResult& d : rep.quad_diagnostics) combined += rel_err(d);
  if (c.quad.has_value()) combined += rel_err(*c.quad);
  rep.holds = rep.ratio <= 1.0 + 10.0 * combined;
  return rep;
}

// lhs of the p-th power operator inequality and its report; verify_hardy and
// verify_dual differ only in which exponent the caller measures in.
VerificationReport operator_report(const Kernel& k, const RadialFunction& f,
                                   double e, const HomogeneousGroup& grp,
                                   const SharpConstant& constant,
                                   const Tolerance& tol) {
  conjugate_exponent(e);
  const double Q = grp.Q();
  const double surface = grp.sphere_measure().value;
  QuadResult lhs_quad = integrate_half_line_nested(
      [&](double r, double s) {
        (void)r;
        const double v = f(s);
        return v == 0.0 ? 0.0 : k(r, s) * v * std::pow(s, Q - 1.0);
      },
      [&](double r, double inner) {
        const double t = surface * inner;
        return t <= 0.0 ? 0.0 : std::pow(t, e) * std::pow(r, Q - 1.0);
      },
      e, tol);
  lhs_quad.value *= surface;
  lhs_quad.err_estimate *= surface;
  double lhs = 0.0;
  if (!lhs_quad.converged) {
    lhs_quad.value = kInf;
    lhs = kInf;
  } else if (lhs_quad.value > 0.0) {
    const double mass = lhs_quad.value;
    const double err = lhs_quad.err_estimate;
    lhs = std::pow(mass, 1.0 / e);
    lhs_quad.value = lhs;
    lhs_quad.err_estimate = lhs * err / (e * mass);
  }
  QuadResult norm = lp_norm(f, e, grp, tol);
  return finish(lhs, norm.value, constant, {lhs_quad, norm}, tol);
}

}  // namespace

QuadResult bilinear_form(const Kernel& k, const RadialFunction& f,
                         const RadialFunction& g, const HomogeneousGroup& grp,
                         const Tolerance& tol) {
  const double Q = grp.Q();
  const double surface = grp.sphere_measure().value;
  QuadResult out = integrate_half_plane(
      [&](double r, double s) {
        const double a = f(r);
        if (a == 0.0) return 0.0;
        const double b = g(s);
        if (b == 0.0) return 0.0;
        return k(r, s) * a * b * std::pow(r, Q - 1.0) * std::pow(s, Q - 1.0);
      },
      tol);
  out.value *= surface * surface;
  out.err_estimate *= surface * surface;
  if (!out.converged) out.value = kInf;
  return out;
}

VerificationReport verify_hh(const Kernel& k, const RadialFunction& f,
                             const RadialFunction& g, double p,
                             const HomogeneousGroup& grp,
                             const SharpConstant& constant,
                             const Tolerance& tol) {
  const double q = conjugate_exponent(p);
  QuadResult lhs = bilinear_form(k, f, g, grp, tol);
  QuadResult nf = lp_norm(f, p, grp, tol);
  QuadResult ng = lp_norm(g, q, grp, tol);
  return finish(lhs.value, nf.value * ng.value, constant, {lhs, nf, ng}, tol);
}

VerificationReport verify_hardy(const Kernel& k, const RadialFunction& f,
                                double p, const HomogeneousGroup& grp,
                                const SharpConstant& constant,
                                const Tolerance& tol) {
  return operator_report(k, f, p, grp, constant, tol);
}

VerificationReport verify_dual(const Kernel& k, const RadialFunction& g,
                               double q, const HomogeneousGroup& grp,
                               const SharpConstant& constant,
                               const Tolerance& tol) {
  return operator_report(k, g, q, grp, constant, tol);
}

RadialFunction conjugate_function(const Kernel& k, const RadialFunction& f,
                                  double p, const HomogeneousGroup& grp,
                                  const Tolerance& tol) {
  conjugate_exponent(p);
  if (f.is_zero()) return RadialFunction::zero();
  const double Q = grp.Q();
  const double surface = grp.sphere_measure().value;
  const int n = 4096;
  const double x0 = std::log(1e-6);
  const double h = (std::log(1e6) - x0) / static_cast<double>(n - 1);
  std::vector<double> xs(n);
  std::vector<double> vals(n);
  bool all_zero = true;
  for (int i = 0; i < n; ++i) {
    xs[i] = x0 + h * static_cast<double>(i);
    const double s = std::exp(xs[i]);
    QuadResult inner = integrate_half_line(
        [&](double r) {
          const double v = f(r);
          return v == 0.0 ? 0.0 : k(r, s) * v * std::pow(r, Q - 1.0);
        },
        tol);
    if (!inner.converged) {
      throw DivergenceError(
          "conjugate profile integral diverges at radius s = " + fmt(s), inner);
    }
    const double u = surface * inner.value;
    vals[i] = u <= 0.0 ? 0.0 : std::pow(u, p - 1.0);
    if (vals[i] != 0.0) all_zero = false;
  }
  if (all_zero) return RadialFunction::zero();
  for (double& v : vals) v = std::max(v, 1e-300);
  const std::string kname = k.name.empty() ? std::string("kernel") : k.name;
  return RadialFunction::from_grid(std::move(xs), std::move(vals),
                                   "conjugate(" + kname + "," + f.name() + ")");
}

std::vector<SweepEntry> sharpness_sweep(const Kernel& k, double p,
                                        const HomogeneousGroup& grp,
                                        const std::vector<double>& betas,
                                        const Tolerance& tol) {
  conjugate_exponent(p);
  if (betas.empty()) {
    throw InputError("sharpness sweep needs at least one beta");
  }
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(std::isfinite(betas[i]) && betas[i] > 0.0)) {
      throw InputError("sweep betas must be positive, got " + fmt(betas[i]));
    }
    if (i > 0 && !(betas[i] < betas[i - 1])) {
      throw InputError("sweep betas must be strictly decreasing");
    }
  }
  const SharpConstant c = cstar_group(k, p, grp, tol);
  if (!c.finite()) {
    throw PreconditionError(
        "sharpness sweep needs a finite sharp constant for this kernel");
  }
  const double Q = grp.Q();
  const double surface = grp.sphere_measure().value;
  std::vector<SweepEntry> out;
  out.reserve(betas.size());
  for (double beta : betas) {
    QuadResult lower = integrate_half_line(
        [&](double t) {
          return k(1.0, t) * std::pow(t, Q - 1.0 - Q / p - beta) *
                 std::pow(std::min(1.0, t), beta * p);
        },
        tol);
    lower.value *= surface;
    lower.err_estimate *= surface;
    SweepEntry e;
    e.beta = beta;
    e.ratio = lower.value / c.value;
    e.quad = lower;
    out.push_back(e);
  }
  return out;
}

DilationProbe dilation_probe(const Kernel& k, const RadialFunction& f,
                             const RadialFunction& g, double p,
                             const HomogeneousGroup& grp,
                             const std::vector<double>& scales,
                             const Tolerance& tol) {
  const double q = conjugate_exponent(p);
  if (scales.size() < 2) {
    throw InputError("dilation probe needs at least two scales");
  }
  for (double a : scales) {
    if (!(std::isfinite(a) && a > 0.0)) {
      throw InputError("dilation scales must be positive, got " + fmt(a));
    }
  }
  if (*std::max_element(scales.begin(), scales.end()) <=
      *std::min_element(scales.begin(), scales.end())) {
    throw InputError("dilation scales must not all coincide");
  }
  const HomogeneityReport hom =
      check_homogeneity(k, k.claimed_order, 200, 1e-8, 424242);
  if (!hom.pass) {
    throw PreconditionError("kernel '" + k.name +
                            "' does not match its claimed order " +
                            fmt(k.claimed_order));
  }

  DilationProbe probe;
  std::vector<double> xs;
  std::vector<double> ys;
  for (double a : scales) {
    const RadialFunction fa = f.scaled(a);
    const RadialFunction ga = g.scaled(a);
    const QuadResult bl = bilinear_form(k, fa, ga, grp, tol);
    const QuadResult nf = lp_norm(fa, p, grp, tol);
    const QuadResult ng = lp_norm(ga, q, grp, tol);
    DilationEntry e;
    e.a = a;
    const double denom = nf.value * ng.value;
    e.ratio = denom > 0.0 ? bl.value / denom : kInf;
    e.converged = bl.converged && nf.converged && ng.converged &&
                  std::isfinite(e.ratio);
    if (e.converged && e.ratio > 0.0) {
      xs.push_back(std::log(a));
      ys.push_back(std::log(e.ratio));
    }
    probe.entries.push_back(e);
  }

  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx > 0.0) {
      probe.slope = sxy / sxx;
      probe.slope_ok = true;
    }
  }
  return probe;
}

VerificationReport verify_group_hilbert(const RadialFunction& f,
                                        const RadialFunction& g, double p,
                                        const HomogeneousGroup& grp,
                                        const Tolerance& tol) {
  const double q = conjugate_exponent(p);
  const double Q = grp.Q();
  const double surface = grp.sphere_measure().value;
  QuadResult lhs_quad = integrate_half_plane(
      [&](double r, double s) {
        const double a = f(r);
        if (a == 0.0) return 0.0;
        const double b = g(s);
        if (b == 0.0) return 0.0;
        return std::pow(r, (Q - 1.0) / p) * std::pow(s, (Q - 1.0) / q) * a * b /
               (r + s);
      },
      tol);
  lhs_quad.value *= Q * surface;
  lhs_quad.err_estimate *= Q * surface;
  if (!lhs_quad.converged) lhs_quad.value = kInf;
  QuadResult nf = lp_norm(f, p, grp, tol);
  QuadResult ng = lp_norm(g, q, grp, tol);
  return finish(lhs_quad.value, nf.value * ng.value,
                group_hilbert_constant(Q, p), {lhs_quad, nf, ng}, tol);
}

}  // namespace hh
