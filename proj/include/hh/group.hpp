#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hh/errors.hpp"
#include "hh/quad.hpp"

namespace hh {

enum class QuasiNormKind {
  MaxAnisotropic,    // |x| = max_i |x_i|^(1/v_i), valid for any positive weights
  PowerAnisotropic,  // |x| = (sum_i |x_i|^(2M/v_i))^(1/2M), needs 2M/v_i even
  Euclidean,         // weights all 1
};

struct QuasiNorm {
  QuasiNormKind kind = QuasiNormKind::MaxAnisotropic;
  int two_m = 0;  // the exponent 2M, PowerAnisotropic only
};

using Point = std::vector<double>;

// Anisotropic dilation structure on R^N: weights (v_1..v_N), homogeneous
// dimension Q = sum v_i, a quasi-norm, and the total surface measure |S| of
// the unit sphere, fixed at construction (closed form when Euclidean, Monte
// Carlo hit counting otherwise, or an explicit override).
class HomogeneousGroup {
 public:
  HomogeneousGroup(std::vector<double> weights, QuasiNorm norm);
  HomogeneousGroup(std::vector<double> weights, QuasiNorm norm,
                   double sphere_measure_override);

  const std::vector<double>& weights() const { return weights_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  double Q() const { return q_; }
  const QuasiNorm& norm() const { return norm_; }
  const QuadResult& sphere_measure() const { return sphere_; }

 private:
  std::vector<double> weights_;
  QuasiNorm norm_;
  double q_ = 0.0;
  QuadResult sphere_;
};

// (lam^(v_1) x_1, ..., lam^(v_N) x_N)
Point dilate(const HomogeneousGroup& g, double lam, const Point& x);

double quasi_norm(const HomogeneousGroup& g, const Point& x);

// (|S|/Q) r^Q, the measure of the quasi-ball of radius r
double ball_volume(const HomogeneousGroup& g, double r);

// |S| = Q * |B(0,1)|. Euclidean groups use the closed form 2 pi^(n/2) /
// Gamma(n/2) exactly; other norms estimate |B(0,1)| by hit counting over the
// enclosing box [-1,1]^N. mc_samples must be at least 10^4.
QuadResult sphere_measure(const HomogeneousGroup& g, std::uint64_t mc_samples,
                          std::uint64_t seed);

// The Monte Carlo path unconditionally, for cross-checking the closed forms.
QuadResult sphere_measure_mc(const HomogeneousGroup& g, std::uint64_t mc_samples,
                             std::uint64_t seed);

// |S| * integral of phi(r) r^(Q-1) over (0,inf), the polar form of a radial
// integral over the group. Throws DivergenceError (carrying the partial
// result) when the integral fails to converge.
QuadResult integrate_radial(const HomogeneousGroup& g,
                            const std::function<double(double)>& phi,
                            const Tolerance& tol = {});

}  // namespace hh
