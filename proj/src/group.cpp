#include "hh/group.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <utility>

namespace hh {

namespace {

void validate_weights(const std::vector<double>& w) {
  if (w.empty()) throw InputError("group needs at least one weight");
  for (double v : w)
    if (!(v > 0.0) || !std::isfinite(v))
      throw InputError("group weights must be positive finite reals");
}

void validate_norm(const std::vector<double>& w, const QuasiNorm& n) {
  switch (n.kind) {
    case QuasiNormKind::MaxAnisotropic:
      return;
    case QuasiNormKind::Euclidean:
      for (double v : w)
        if (v != 1.0)
          throw InputError("the Euclidean norm requires all weights equal to 1");
      return;
    case QuasiNormKind::PowerAnisotropic: {
      if (n.two_m < 2 || n.two_m % 2 != 0)
        throw InputError("power norm exponent must be a positive even integer");
      for (double v : w) {
        const double q = n.two_m / v;
        const double k = std::round(q);
        if (std::abs(q - k) > 1e-9 * std::max(1.0, q) || k < 2.0 ||
            std::fmod(k, 2.0) != 0.0)
          throw InputError(
              "power norm exponent divided by each weight must be a positive "
              "even integer");
      }
      return;
    }
  }
  throw InputError("unknown quasi-norm kind");
}

double norm_at(const std::vector<double>& w, const QuasiNorm& n,
               std::span<const double> x) {
  switch (n.kind) {
    case QuasiNormKind::MaxAnisotropic: {
      double m = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i)
        m = std::fmax(m, std::pow(std::abs(x[i]), 1.0 / w[i]));
      return m;
    }
    case QuasiNormKind::Euclidean: {
      double ss = 0.0;
      for (double c : x) ss += c * c;
      return std::sqrt(ss);
    }
    case QuasiNormKind::PowerAnisotropic: {
      double acc = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i)
        acc += std::pow(std::abs(x[i]), n.two_m / w[i]);
      return std::pow(acc, 1.0 / n.two_m);
    }
  }
  throw InputError("unknown quasi-norm kind");
}

}  // namespace

HomogeneousGroup::HomogeneousGroup(std::vector<double> weights, QuasiNorm norm)
    : weights_(std::move(weights)), norm_(norm) {
  validate_weights(weights_);
  validate_norm(weights_, norm_);
  for (double v : weights_) q_ += v;
  sphere_ = hh::sphere_measure(*this, 1'000'000, 42);
}

HomogeneousGroup::HomogeneousGroup(std::vector<double> weights, QuasiNorm norm,
                                   double sphere_measure_override)
    : weights_(std::move(weights)), norm_(norm) {
  validate_weights(weights_);
  validate_norm(weights_, norm_);
  if (!(sphere_measure_override > 0.0) || !std::isfinite(sphere_measure_override))
    throw InputError("sphere measure override must be a positive finite real");
  for (double v : weights_) q_ += v;
  sphere_ = {sphere_measure_override, 0.0, 0, true};
}

Point dilate(const HomogeneousGroup& g, double lam, const Point& x) {
  if (!(lam > 0.0) || !std::isfinite(lam))
    throw InputError("dilation parameter must be a positive finite real");
  if (static_cast<int>(x.size()) != g.dim())
    throw InputError("point dimension does not match the group");
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = x[i] * std::pow(lam, g.weights()[i]);
  return out;
}

double quasi_norm(const HomogeneousGroup& g, const Point& x) {
  if (static_cast<int>(x.size()) != g.dim())
    throw InputError("point dimension does not match the group");
  return norm_at(g.weights(), g.norm(), x);
}

double ball_volume(const HomogeneousGroup& g, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw InputError("ball radius must be a positive finite real");
  return g.sphere_measure().value / g.Q() * std::pow(r, g.Q());
}

QuadResult sphere_measure(const HomogeneousGroup& g, std::uint64_t mc_samples,
                          std::uint64_t seed) {
  if (mc_samples < 10'000)
    throw InputError("sphere measure needs at least 10^4 samples");
  if (g.norm().kind == QuasiNormKind::Euclidean) {
    const double n = static_cast<double>(g.dim());
    const double s =
        2.0 * std::pow(std::numbers::pi_v<double>, n / 2.0) / gamma_fn(n / 2.0);
    return {s, 0.0, 0, true};
  }
  return sphere_measure_mc(g, mc_samples, seed);
}

QuadResult sphere_measure_mc(const HomogeneousGroup& g, std::uint64_t mc_samples,
                             std::uint64_t seed) {
  if (mc_samples < 10'000)
    throw InputError("sphere measure needs at least 10^4 samples");
  // [-1,1]^N encloses the unit ball for every supported norm: each coordinate
  // of a unit-ball point satisfies |x_i| <= |x|^(v_i) <= 1
  std::vector<Interval> box(g.dim(), Interval{-1.0, 1.0});
  McOptions opt;
  opt.n_samples = mc_samples;
  opt.seed = seed;
  QuadResult vol = mc_integrate(
      [&g](std::span<const double> x) {
        return norm_at(g.weights(), g.norm(), x) <= 1.0 ? 1.0 : 0.0;
      },
      box, opt);
  vol.value *= g.Q();
  vol.err_estimate *= g.Q();
  return vol;
}

QuadResult integrate_radial(const HomogeneousGroup& g,
                            const std::function<double(double)>& phi,
                            const Tolerance& tol) {
  if (!phi) throw InputError("radial integration: missing profile");
  const double qm1 = g.Q() - 1.0;
  QuadResult out = integrate_half_line(
      [&phi, qm1](double r) { return phi(r) * std::pow(r, qm1); }, tol);
  const double s = g.sphere_measure().value;
  out.value *= s;
  out.err_estimate *= s;
  if (!out.converged)
    throw DivergenceError("radial integral did not converge", out);
  return out;
}

}  // namespace hh
