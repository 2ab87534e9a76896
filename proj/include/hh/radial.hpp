#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hh/errors.hpp"
#include "hh/expr.hpp"
#include "hh/group.hpp"
#include "hh/quad.hpp"

namespace hh {

// Radial profile on (0, inf), the r-dependence of a radial function on a
// homogeneous group. Expression and callable profiles are sample-checked for
// nonnegativity at construction (InputError on a negative sample).
class RadialFunction {
 public:
  // one-variable expression in r
  static RadialFunction from_expr(ExprPtr e);
  static RadialFunction from_expr(const std::string& text);

  // r^(-Q/p - beta) on (1, inf), zero elsewhere; beta > 0, p >= 1
  static RadialFunction power_cutoff(double beta, double p, double Q);

  static RadialFunction from_callable(std::function<double(double)> f,
                                      std::string name);

  // samples on a uniform grid in log r, interpolated by a monotone cubic in
  // log-log coordinates and extrapolated by the edge power laws; values must
  // be positive
  static RadialFunction from_grid(std::vector<double> log_r,
                                  std::vector<double> values, std::string name);

  static RadialFunction zero();

  double operator()(double r) const;

  // profile of the dilated input: r -> f(a r)
  RadialFunction scaled(double a) const;

  bool is_zero() const { return zero_; }
  const std::string& name() const { return name_; }

 private:
  RadialFunction() = default;

  std::function<double(double)> eval_;
  std::string name_;
  bool zero_ = false;
};

// (|S| integral of f(r)^p r^(Q-1) dr)^(1/p) over (0, inf). An unconverged
// integral is reported as an infinite norm with converged == false, never
// thrown. err_estimate is pushed through the 1/p power by the delta method.
QuadResult lp_norm(const RadialFunction& f, double p, const HomogeneousGroup& g,
                   const Tolerance& tol = {});

}  // namespace hh
