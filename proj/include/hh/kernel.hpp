#pragma once

#include <cstdint>
#include <string>

#include "hh/expr.hpp"

namespace hh {

// Bivariate kernel k(r,s) on (0,inf)^2 with its claimed homogeneity order:
// k(ar, as) = a^order k(r,s). positivity_checked records that a sampled
// positivity sweep passed.
struct Kernel {
  ExprPtr expr;
  double claimed_order = 0.0;
  bool positivity_checked = false;
  std::string name;

  double operator()(double r, double s) const { return eval_expr(expr, r, s); }
};

// Wraps an expression as a kernel and runs the sampled positivity sweep.
Kernel make_kernel(ExprPtr expr, double claimed_order, std::string name);

// 1/(r+s), order -1
Kernel kernel_hilbert();
// 1/(r^lam + s^lam), order -lam
Kernel kernel_hilbert_lambda(double lam);
// r^(-1+lam/k+1/p) s^(-1+lam/m+1/q) / (r^lam + s^lam) with m, q the
// conjugates of k_exp, p; order -1 for every valid parameter choice
Kernel kernel_weighted_hilbert(double lam, double p, double k_exp);
// 1/max(r,s), order -1
Kernel kernel_max();
// c r^((1-Q)/q) s^((1-Q)/p) / (r+s), order -Q
Kernel kernel_group_weighted_hilbert(double p, double Q, double c);

// Swaps the two arguments; the homogeneity order is unchanged.
Kernel transpose(const Kernel& k);

struct HomogeneityReport {
  bool pass = false;
  double max_rel_dev = 0.0;
  double r = 0.0, s = 0.0, a = 0.0;  // worst (or failing) sample
  std::string note;                  // nonempty when evaluation failed
};

// Samples (r,s) log-uniform in [1e-3,1e3]^2 and a log-uniform in [1e-2,1e2],
// and compares k(ar,as) against a^order k(r,s) in relative terms. A domain
// error at any sample is reported as failure at that point.
HomogeneityReport check_homogeneity(const Kernel& k, double order,
                                    int n_samples, double tol,
                                    std::uint64_t seed);

struct PositivityReport {
  bool pass = false;
  double min_value = 0.0;
  double r = 0.0, s = 0.0;  // location of the minimum (or failure)
  std::string note;
};

// Samples k log-uniformly over [1e-3,1e3]^2 and reports the minimum.
PositivityReport check_positivity(const Kernel& k, int n_samples,
                                  std::uint64_t seed);

}  // namespace hh
