#include "hh/kernel.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

namespace hh {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double log_uniform(std::mt19937_64& rng, double lo_exp, double hi_exp) {
  return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * u01(rng));
}

std::string fmt(double v) {
  char buf[48];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

double conjugate(double p) { return p / (p - 1.0); }

ExprPtr var_pow(char v, double e) {
  if (e == 0.0) return Expr::number(1.0);
  if (e == 1.0) return Expr::variable(v);
  return Expr::binary(ExprKind::Pow, Expr::variable(v), Expr::constant(e));
}

}  // namespace

Kernel make_kernel(ExprPtr expr, double claimed_order, std::string name) {
  if (!expr) throw InputError("kernel needs an expression");
  Kernel k{std::move(expr), claimed_order, false, std::move(name)};
  k.positivity_checked = check_positivity(k, 1000, 20240817).pass;
  return k;
}

Kernel kernel_hilbert() {
  ExprPtr e = Expr::binary(ExprKind::Div, Expr::number(1.0),
                           Expr::binary(ExprKind::Add, Expr::variable('r'),
                                        Expr::variable('s')));
  return make_kernel(std::move(e), -1.0, "hilbert");
}

Kernel kernel_hilbert_lambda(double lam) {
  if (!(lam > 0.0) || !std::isfinite(lam))
    throw InputError("hilbert_lambda needs lam > 0");
  ExprPtr e = Expr::binary(
      ExprKind::Div, Expr::number(1.0),
      Expr::binary(ExprKind::Add, var_pow('r', lam), var_pow('s', lam)));
  return make_kernel(std::move(e), -lam, "hilbert_lambda(" + fmt(lam) + ")");
}

Kernel kernel_weighted_hilbert(double lam, double p, double k_exp) {
  if (!(lam > 0.0) || !std::isfinite(lam))
    throw InputError("weighted_hilbert needs lam > 0");
  if (!(p > 1.0) || !std::isfinite(p))
    throw InputError("weighted_hilbert needs p > 1");
  if (!(k_exp > 1.0) || !std::isfinite(k_exp))
    throw InputError("weighted_hilbert needs k_exp > 1");
  const double m = conjugate(k_exp);
  const double q = conjugate(p);
  const double er = -1.0 + lam / k_exp + 1.0 / p;
  const double es = -1.0 + lam / m + 1.0 / q;
  ExprPtr num = Expr::binary(ExprKind::Mul, var_pow('r', er), var_pow('s', es));
  ExprPtr den =
      Expr::binary(ExprKind::Add, var_pow('r', lam), var_pow('s', lam));
  return make_kernel(Expr::binary(ExprKind::Div, std::move(num), std::move(den)),
                     -1.0,
                     "weighted_hilbert(" + fmt(lam) + "," + fmt(p) + "," +
                         fmt(k_exp) + ")");
}

Kernel kernel_max() {
  ExprPtr e = Expr::binary(ExprKind::Div, Expr::number(1.0),
                           Expr::binary(ExprKind::Max, Expr::variable('r'),
                                        Expr::variable('s')));
  return make_kernel(std::move(e), -1.0, "max_kernel");
}

Kernel kernel_group_weighted_hilbert(double p, double Q, double c) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw InputError("group_weighted_hilbert needs p > 1");
  if (!(Q > 0.0) || !std::isfinite(Q))
    throw InputError("group_weighted_hilbert needs Q > 0");
  if (!(c > 0.0) || !std::isfinite(c))
    throw InputError("group_weighted_hilbert needs c > 0");
  const double q = conjugate(p);
  ExprPtr num = Expr::binary(
      ExprKind::Mul,
      Expr::binary(ExprKind::Mul, Expr::number(c), var_pow('r', (1.0 - Q) / q)),
      var_pow('s', (1.0 - Q) / p));
  ExprPtr den =
      Expr::binary(ExprKind::Add, Expr::variable('r'), Expr::variable('s'));
  return make_kernel(Expr::binary(ExprKind::Div, std::move(num), std::move(den)),
                     -Q,
                     "group_weighted_hilbert(" + fmt(p) + "," + fmt(Q) + "," +
                         fmt(c) + ")");
}

Kernel transpose(const Kernel& k) {
  Kernel out{transpose_expr(k.expr), k.claimed_order, k.positivity_checked,
             "transpose(" + k.name + ")"};
  return out;
}

HomogeneityReport check_homogeneity(const Kernel& k, double order,
                                    int n_samples, double tol,
                                    std::uint64_t seed) {
  if (n_samples < 100)
    throw InputError("homogeneity check needs at least 100 samples");
  if (!(tol > 0.0)) throw InputError("homogeneity tolerance must be positive");
  std::mt19937_64 rng(seed);
  HomogeneityReport rep;
  rep.pass = true;
  for (int i = 0; i < n_samples; ++i) {
    const double r = log_uniform(rng, -3.0, 3.0);
    const double s = log_uniform(rng, -3.0, 3.0);
    const double a = log_uniform(rng, -2.0, 2.0);
    double dev = 0.0;
    try {
      const double base = eval_expr(k.expr, r, s);
      const double scaled = eval_expr(k.expr, a * r, a * s);
      const double expect = std::pow(a, order) * base;
      if (expect == 0.0)
        dev = scaled == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      else
        dev = std::abs(scaled - expect) / std::abs(expect);
    } catch (const EvalError& e) {
      rep.pass = false;
      rep.r = r;
      rep.s = s;
      rep.a = a;
      rep.note = e.what();
      return rep;
    }
    if (dev > rep.max_rel_dev) {
      rep.max_rel_dev = dev;
      rep.r = r;
      rep.s = s;
      rep.a = a;
    }
  }
  rep.pass = rep.max_rel_dev <= tol;
  return rep;
}

PositivityReport check_positivity(const Kernel& k, int n_samples,
                                  std::uint64_t seed) {
  if (n_samples < 1) throw InputError("positivity check needs samples");
  std::mt19937_64 rng(seed);
  PositivityReport rep;
  rep.min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    const double r = log_uniform(rng, -3.0, 3.0);
    const double s = log_uniform(rng, -3.0, 3.0);
    double v = 0.0;
    try {
      v = eval_expr(k.expr, r, s);
    } catch (const EvalError& e) {
      rep.pass = false;
      rep.r = r;
      rep.s = s;
      rep.note = e.what();
      return rep;
    }
    if (v < rep.min_value) {
      rep.min_value = v;
      rep.r = r;
      rep.s = s;
    }
  }
  rep.pass = rep.min_value > 0.0;
  return rep;
}

}  // namespace hh
