#include "hh/radial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <utility>

namespace hh {
namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

bool uses_s(const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == ExprKind::Var && e->var == 's') return true;
  return uses_s(e->a) || uses_s(e->b);
}

void check_nonnegative(const std::function<double(double)>& f,
                       const std::string& name) {
  std::mt19937_64 rng(20240817u);
  for (int i = 0; i < 1000; ++i) {
    const double r = std::pow(10.0, -6.0 + 12.0 * u01(rng));
    const double v = f(r);
    if (!(v >= 0.0)) {  // also catches NaN
      throw InputError("radial profile '" + name + "' is negative at r = " +
                       fmt(r) + " (value " + fmt(v) + ")");
    }
  }
}

// Uniform grid in x = log r carrying y = log f and limited slopes m, so the
// interpolant is a monotonicity-preserving cubic in log-log coordinates and
// extends past the ends as the edge power laws.
struct LogGrid {
  double x0 = 0.0;
  double h = 0.0;
  std::vector<double> y;
  std::vector<double> m;
};

std::shared_ptr<const LogGrid> build_grid(std::vector<double> x,
                                          std::vector<double> vals,
                                          const std::string& name) {
  const std::size_t n = x.size();
  if (n < 4 || vals.size() != n) {
    throw InputError("grid profile '" + name +
                     "' needs at least 4 nodes with matching values");
  }
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw InputError("grid nodes must increase");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs((x[i + 1] - x[i]) - h) > 1e-9 * h) {
      throw InputError("grid nodes must be uniformly spaced in log r");
    }
  }
  auto g = std::make_shared<LogGrid>();
  g->x0 = x.front();
  g->h = h;
  g->y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(vals[i] > 0.0) || !std::isfinite(vals[i])) {
      throw InputError("grid profile '" + name +
                       "' needs positive finite values");
    }
    g->y[i] = std::log(vals[i]);
  }

  const std::vector<double>& y = g->y;
  std::vector<double> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / h;

  // fourth-order slope estimates, then the Fritsch-Carlson limiter: zero at
  // local extrema, magnitude at most 3x the smaller adjacent secant
  std::vector<double>& m = g->m;
  m.resize(n);
  m[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  m[1] = 0.5 * (d[0] + d[1]);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    m[i] = (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
  }
  m[n - 2] = 0.5 * (d[n - 3] + d[n - 2]);
  m[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      const double lim = 3.0 * std::min(std::abs(d[i - 1]), std::abs(d[i]));
      m[i] = std::copysign(std::min(std::abs(m[i]), lim), d[i]);
    }
  }
  return g;
}

double eval_grid(const LogGrid& g, double r) {
  if (!(r > 0.0)) return 0.0;
  const double x = std::log(r);
  const std::size_t n = g.y.size();
  const double x_end = g.x0 + g.h * static_cast<double>(n - 1);
  if (x <= g.x0) return std::exp(g.y.front() + g.m.front() * (x - g.x0));
  if (x >= x_end) return std::exp(g.y.back() + g.m.back() * (x - x_end));
  std::size_t i = static_cast<std::size_t>((x - g.x0) / g.h);
  if (i >= n - 1) i = n - 2;
  const double t = (x - (g.x0 + g.h * static_cast<double>(i))) / g.h;
  const double omt = 1.0 - t;
  const double h00 = (1.0 + 2.0 * t) * omt * omt;
  const double h10 = t * omt * omt;
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  const double y = h00 * g.y[i] + h10 * g.h * g.m[i] + h01 * g.y[i + 1] +
                   h11 * g.h * g.m[i + 1];
  return std::exp(y);
}

}  // namespace

RadialFunction RadialFunction::from_expr(ExprPtr e) {
  if (!e) throw InputError("radial profile expression is null");
  if (uses_s(e)) {
    throw InputError("radial profiles use the single variable r");
  }
  RadialFunction f;
  f.name_ = print_expr(e);
  f.eval_ = [e = std::move(e)](double r) { return eval_expr(e, r, 0.0); };
  check_nonnegative(f.eval_, f.name_);
  return f;
}

RadialFunction RadialFunction::from_expr(const std::string& text) {
  return from_expr(parse_expr_univariate(text));
}

RadialFunction RadialFunction::power_cutoff(double beta, double p, double Q) {
  if (!(std::isfinite(beta) && beta > 0.0)) {
    throw InputError("power cutoff needs beta > 0, got " + fmt(beta));
  }
  if (!(std::isfinite(p) && p >= 1.0)) {
    throw InputError("power cutoff needs exponent p >= 1, got " + fmt(p));
  }
  if (!std::isfinite(Q)) throw InputError("power cutoff needs finite Q");
  const double e = -Q / p - beta;
  RadialFunction f;
  f.name_ = "power_cutoff(beta=" + fmt(beta) + ",p=" + fmt(p) +
            ",Q=" + fmt(Q) + ")";
  f.eval_ = [e](double r) { return r > 1.0 ? std::pow(r, e) : 0.0; };
  return f;
}

RadialFunction RadialFunction::from_callable(std::function<double(double)> f,
                                             std::string name) {
  if (!f) throw InputError("radial profile callable is null");
  RadialFunction out;
  out.eval_ = std::move(f);
  out.name_ = std::move(name);
  check_nonnegative(out.eval_, out.name_);
  return out;
}

RadialFunction RadialFunction::from_grid(std::vector<double> log_r,
                                         std::vector<double> values,
                                         std::string name) {
  auto g = build_grid(std::move(log_r), std::move(values), name);
  RadialFunction out;
  out.name_ = std::move(name);
  out.eval_ = [g](double r) { return eval_grid(*g, r); };
  return out;
}

RadialFunction RadialFunction::zero() {
  RadialFunction f;
  f.zero_ = true;
  f.name_ = "zero";
  f.eval_ = [](double) { return 0.0; };
  return f;
}

double RadialFunction::operator()(double r) const { return eval_(r); }

RadialFunction RadialFunction::scaled(double a) const {
  if (!(std::isfinite(a) && a > 0.0)) {
    throw InputError("dilation scale must be positive, got " + fmt(a));
  }
  if (zero_) return *this;
  RadialFunction out;
  out.name_ = "dilate(" + fmt(a) + ") " + name_;
  out.eval_ = [base = eval_, a](double r) { return base(a * r); };
  return out;
}

QuadResult lp_norm(const RadialFunction& f, double p, const HomogeneousGroup& g,
                   const Tolerance& tol) {
  if (!(std::isfinite(p) && p >= 1.0)) {
    throw InputError("lp_norm needs p >= 1, got " + fmt(p));
  }
  const double Q = g.Q();
  const double surface = g.sphere_measure().value;
  QuadResult out = integrate_half_line(
      [&](double r) {
        const double v = f(r);
        return v == 0.0 ? 0.0 : std::pow(v, p) * std::pow(r, Q - 1.0);
      },
      tol);
  out.value *= surface;
  out.err_estimate *= surface;
  if (!out.converged) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  const double mass = out.value;
  const double err = out.err_estimate;
  if (mass > 0.0) {
    out.value = std::pow(mass, 1.0 / p);
    out.err_estimate = out.value * err / (p * mass);
  } else {
    out.value = 0.0;
    out.err_estimate = std::pow(err, 1.0 / p);
  }
  return out;
}

}  // namespace hh
