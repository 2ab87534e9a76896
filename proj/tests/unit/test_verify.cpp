#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hh/constants.hpp"
#include "hh/group.hpp"
#include "hh/kernel.hpp"
#include "hh/radial.hpp"
#include "hh/verify.hpp"

using namespace hh;

namespace {

constexpr double pi = std::numbers::pi_v<double>;
const double two_log_two = 2.0 * std::numbers::ln2_v<double>;

HomogeneousGroup line_group() {
  return HomogeneousGroup({1.0}, {QuasiNormKind::Euclidean, 0}, 1.0);
}

HomogeneousGroup aniso_group() {  // weights (1,1,2), Q = 4, |S| = 32
  return HomogeneousGroup({1, 1, 2}, {QuasiNormKind::MaxAnisotropic, 0});
}

RadialFunction unit_box() {
  return RadialFunction::from_callable(
      [](double r) { return r < 1.0 ? 1.0 : 0.0; }, "unit_box");
}

}  // namespace

// ========================== radial profiles ==========================

TEST_CASE("radial: truncated power family point values") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  CHECK(f(0.5) == 0.0);
  CHECK(f(1.0) == 0.0);
  CHECK(f(2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f(4.0) == doctest::Approx(0.25).epsilon(1e-15));

  RadialFunction g = RadialFunction::power_cutoff(0.25, 2.0, 4.0);
  CHECK(g(2.0) == doctest::Approx(std::pow(2.0, -2.25)).epsilon(1e-15));
}

TEST_CASE("radial: expression profiles evaluate and reject negativity") {
  RadialFunction f = RadialFunction::from_expr("exp(-r)");
  CHECK(f(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(RadialFunction::from_expr("r+s"), ParseError);
  CHECK_THROWS_AS(RadialFunction::from_expr("r-2"), InputError);
  CHECK_THROWS_AS(
      RadialFunction::from_callable([](double r) { return 1.0 - r; }, "bad"),
      InputError);
}

TEST_CASE("radial: parameter validation") {
  CHECK_THROWS_AS(RadialFunction::power_cutoff(0.0, 2.0, 1.0), InputError);
  CHECK_THROWS_AS(RadialFunction::power_cutoff(-0.5, 2.0, 1.0), InputError);
  CHECK_THROWS_AS(RadialFunction::power_cutoff(0.5, 0.5, 1.0), InputError);
  CHECK_THROWS_AS(RadialFunction::power_cutoff(0.5, 2.0, 1.0).scaled(0.0),
                  InputError);
}

TEST_CASE("radial: scaling composes with the profile") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  RadialFunction f2 = f.scaled(2.0);
  for (double r : {0.3, 0.6, 1.0, 5.0}) {
    CAPTURE(r);
    CHECK(f2(r) == f(2.0 * r));
  }
  CHECK(RadialFunction::zero().scaled(3.0).is_zero());
}

TEST_CASE("lp_norm: truncated power profile has norm (|S|/(beta p))^(1/p)") {
  HomogeneousGroup line = line_group();
  QuadResult n1 = lp_norm(RadialFunction::power_cutoff(0.5, 2.0, 1.0), 2.0, line);
  CHECK(n1.converged);
  CHECK(n1.value == doctest::Approx(1.0).epsilon(1e-10));

  HomogeneousGroup g = aniso_group();
  QuadResult n2 = lp_norm(RadialFunction::power_cutoff(0.25, 2.0, 4.0), 2.0, g);
  CHECK(n2.value == doctest::Approx(8.0).epsilon(1e-10));  // (32/0.5)^(1/2)
}

TEST_CASE("lp_norm: exponential profile in L1 on the line") {
  QuadResult n = lp_norm(RadialFunction::from_expr("exp(-r)"), 1.0, line_group());
  CHECK(n.converged);
  CHECK(n.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("lp_norm: dilation scales the norm by a^(-Q/p)") {
  HomogeneousGroup g = aniso_group();
  RadialFunction f = RadialFunction::power_cutoff(0.25, 2.0, 4.0);
  QuadResult n = lp_norm(f.scaled(2.0), 2.0, g);
  CHECK(n.value == doctest::Approx(8.0 * std::pow(2.0, -2.0)).epsilon(1e-9));
}

TEST_CASE("lp_norm: divergence reports an infinite norm") {
  QuadResult n = lp_norm(RadialFunction::from_expr("1/(1+r)"), 1.0, line_group());
  CHECK_FALSE(n.converged);
  CHECK(std::isinf(n.value));

  QuadResult z = lp_norm(RadialFunction::zero(), 2.0, line_group());
  CHECK(z.value == 0.0);
  CHECK_THROWS_AS(
      lp_norm(RadialFunction::power_cutoff(0.5, 2.0, 1.0), 0.5, line_group()),
      InputError);
}

// =========================== bilinear form ===========================

TEST_CASE("bilinear_form: separable kernel and box profiles") {
  Kernel k = make_kernel(parse_expr("exp(-r)*exp(-s)"), 0.0, "separable");
  const double expect = (1.0 - std::exp(-1.0)) * (1.0 - std::exp(-1.0));
  QuadResult one = bilinear_form(k, unit_box(), unit_box(), line_group());
  CHECK(one.converged);
  CHECK(one.value == doctest::Approx(expect).epsilon(1e-9));

  HomogeneousGroup wide({1.0}, {QuasiNormKind::Euclidean, 0}, 3.0);
  QuadResult three = bilinear_form(k, unit_box(), unit_box(), wide);
  CHECK(three.value == doctest::Approx(9.0 * expect).epsilon(1e-9));
}

TEST_CASE("bilinear_form: Hilbert pairing of truncated powers is 2 log 2") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  QuadResult v = bilinear_form(kernel_hilbert(), f, f, line_group());
  CHECK(v.converged);
  CHECK(v.value == doctest::Approx(two_log_two).epsilon(1e-8));
}

TEST_CASE("bilinear_form: matches Monte Carlo after mapping the quarter plane") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  QuadResult v = bilinear_form(kernel_hilbert(), f, f, line_group());

  // x = u^-2, y = v^-2 turns the integrand into the bounded 4uv/(u^2+v^2)
  const std::vector<Interval> box = {{0.0, 1.0}, {0.0, 1.0}};
  QuadResult mc = mc_integrate(
      [](std::span<const double> t) {
        const double u = t[0], w = t[1];
        if (u == 0.0 && w == 0.0) return 0.0;
        return 4.0 * u * w / (u * u + w * w);
      },
      box);
  CHECK(std::abs(v.value - mc.value) <= 3.0 * mc.err_estimate);
}

TEST_CASE("bilinear_form: dilating both inputs scales by a^(-2Q-lambda)") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  HomogeneousGroup line = line_group();

  QuadResult base = bilinear_form(kernel_hilbert(), f, f, line);
  QuadResult scaled =
      bilinear_form(kernel_hilbert(), f.scaled(2.0), f.scaled(2.0), line);
  CHECK(scaled.value == doctest::Approx(0.5 * base.value).epsilon(1e-8));

  Kernel sq = make_kernel(parse_expr("1/(r+s)^2"), -2.0, "inverse_square_sum");
  QuadResult b2 = bilinear_form(sq, f, f, line);
  QuadResult s2 = bilinear_form(sq, f.scaled(2.0), f.scaled(2.0), line);
  CHECK(s2.value == doctest::Approx(b2.value).epsilon(1e-8));
}

TEST_CASE("bilinear_form: divergence reports an infinite value") {
  RadialFunction slow = RadialFunction::from_expr("(1+r)^(-0.4)");
  QuadResult v = bilinear_form(kernel_hilbert(), slow, slow, line_group());
  CHECK_FALSE(v.converged);
  CHECK(std::isinf(v.value));
}

// ======================= inequality verification =======================

TEST_CASE("verify_hh: Hilbert kernel on truncated powers") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  SharpConstant c = cstar_classical(kernel_hilbert(), 2.0);
  VerificationReport rep = verify_hh(kernel_hilbert(), f, f, 2.0, line_group(), c);
  CHECK(rep.lhs == doctest::Approx(two_log_two).epsilon(1e-8));
  CHECK(rep.rhs_norms == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.ratio == doctest::Approx(two_log_two / pi).epsilon(1e-8));
  CHECK(rep.ratio < 1.0);
  CHECK(rep.holds);
  CHECK(rep.quad_diagnostics.size() == 3);
}

TEST_CASE("verify_hh: zero input holds trivially") {
  SharpConstant c = classical_hilbert_constant(2.0);
  VerificationReport rep = verify_hh(kernel_hilbert(), RadialFunction::zero(),
                                     RadialFunction::power_cutoff(0.5, 2.0, 1.0),
                                     2.0, line_group(), c);
  CHECK(rep.lhs == 0.0);
  CHECK(rep.ratio == 0.0);
  CHECK(rep.holds);
}

TEST_CASE("verify_hh: infinite ingredients force holds=false") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  SharpConstant infinite;
  infinite.value = std::numeric_limits<double>::infinity();
  infinite.p = 2.0;
  infinite.q = 2.0;
  VerificationReport rep =
      verify_hh(kernel_hilbert(), f, f, 2.0, line_group(), infinite);
  CHECK_FALSE(rep.holds);

  SharpConstant c = classical_hilbert_constant(2.0);
  VerificationReport bad = verify_hh(kernel_hilbert(), RadialFunction::from_expr("1"),
                                     f, 2.0, line_group(), c);
  CHECK_FALSE(bad.holds);
}

TEST_CASE("verify_hh: weighted kernel on the anisotropic group against Q pi") {
  HomogeneousGroup g = aniso_group();
  const double c0 = g.Q() / g.sphere_measure().value;
  Kernel k = kernel_group_weighted_hilbert(2.0, g.Q(), c0);
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 4.0);
  VerificationReport rep =
      verify_hh(k, f, f, 2.0, g, group_hilbert_constant(g.Q(), 2.0));
  CHECK(rep.ratio == doctest::Approx(two_log_two / pi).epsilon(1e-7));
  CHECK(rep.holds);
}

TEST_CASE("verify_hh: conjugate-exponent symmetry under kernel transpose") {
  Kernel k = kernel_weighted_hilbert(1.0, 3.0, 2.0);
  RadialFunction f = RadialFunction::power_cutoff(0.5, 3.0, 1.0);
  RadialFunction g = RadialFunction::power_cutoff(0.5, 1.5, 1.0);
  HomogeneousGroup line = line_group();

  VerificationReport a =
      verify_hh(k, f, g, 3.0, line, cstar_classical(transpose(k), 3.0));
  VerificationReport b =
      verify_hh(transpose(k), g, f, 1.5, line, cstar_classical(k, 1.5));
  CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-8));
  CHECK(a.rhs_norms == doctest::Approx(b.rhs_norms).epsilon(1e-9));
  CHECK(a.ratio == doctest::Approx(b.ratio).epsilon(1e-7));
}

TEST_CASE("verify_hardy: Hilbert operator norm ratio on the line") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  SharpConstant c = classical_hilbert_constant(2.0);
  VerificationReport rep = verify_hardy(kernel_hilbert(), f, 2.0, line_group(), c);
  CHECK(rep.lhs == doctest::Approx(pi / std::sqrt(3.0)).epsilon(1e-8));
  CHECK(rep.rhs_norms == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.ratio == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-8));
  CHECK(rep.holds);
  CHECK(rep.quad_diagnostics.size() == 2);
}

TEST_CASE("verify_hardy: smaller beta pushes the ratio towards 1") {
  SharpConstant c = classical_hilbert_constant(2.0);
  HomogeneousGroup line = line_group();
  VerificationReport wide = verify_hardy(
      kernel_hilbert(), RadialFunction::power_cutoff(0.5, 2.0, 1.0), 2.0, line, c);
  VerificationReport tight = verify_hardy(
      kernel_hilbert(), RadialFunction::power_cutoff(0.05, 2.0, 1.0), 2.0, line, c);
  CHECK(tight.ratio > wide.ratio);
  CHECK(tight.holds);
}

TEST_CASE("verify_hardy: zero and non-integrable inputs") {
  SharpConstant c = classical_hilbert_constant(2.0);
  VerificationReport z =
      verify_hardy(kernel_hilbert(), RadialFunction::zero(), 2.0, line_group(), c);
  CHECK(z.lhs == 0.0);
  CHECK(z.holds);

  VerificationReport bad = verify_hardy(
      kernel_hilbert(), RadialFunction::from_expr("1"), 2.0, line_group(), c);
  CHECK_FALSE(bad.holds);
}

TEST_CASE("verify_dual: self-dual at p=2 and strict at p=3") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  SharpConstant c2 = classical_hilbert_constant(2.0);
  VerificationReport hardy = verify_hardy(kernel_hilbert(), f, 2.0, line_group(), c2);
  VerificationReport dual = verify_dual(kernel_hilbert(), f, 2.0, line_group(), c2);
  CHECK(dual.lhs == doctest::Approx(hardy.lhs).epsilon(1e-12));
  CHECK(dual.ratio == doctest::Approx(hardy.ratio).epsilon(1e-12));

  SharpConstant c3 = classical_hilbert_constant(3.0);
  RadialFunction g = RadialFunction::power_cutoff(0.5, 1.5, 1.0);
  VerificationReport rep = verify_dual(kernel_hilbert(), g, 1.5, line_group(), c3);
  CHECK(rep.ratio < 1.0);
  CHECK(rep.holds);
}

// ======================== conjugate pairing ========================

TEST_CASE("conjugate_function: box profile against the log oracle") {
  RadialFunction psi =
      conjugate_function(kernel_hilbert(), unit_box(), 2.0, line_group());
  for (double s : {1e-3, 0.1, 1.0, 37.0, 1e4}) {
    CAPTURE(s);
    CHECK(psi(s) == doctest::Approx(std::log1p(1.0 / s)).epsilon(1e-6));
  }
}

TEST_CASE("conjugate_function: zero input short-circuits") {
  RadialFunction psi = conjugate_function(kernel_hilbert(), RadialFunction::zero(),
                                          2.0, line_group());
  CHECK(psi.is_zero());
  CHECK(psi(3.0) == 0.0);
}

TEST_CASE("conjugate_function: divergent profile integral names the radius") {
  CHECK_THROWS_AS(conjugate_function(kernel_hilbert(), RadialFunction::from_expr("1"),
                                     2.0, line_group()),
                  DivergenceError);
}

TEST_CASE("conjugate_function: pairing equality at p=2") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  HomogeneousGroup line = line_group();
  RadialFunction psi = conjugate_function(kernel_hilbert(), f, 2.0, line);

  for (double s : {0.2, 1.0, 8.0}) {
    CAPTURE(s);
    CHECK(psi(s) == doctest::Approx(std::log1p(s) / s).epsilon(1e-6));
  }

  QuadResult pairing = bilinear_form(kernel_hilbert(), f, psi, line);
  VerificationReport hardy = verify_hardy(kernel_hilbert(), f, 2.0, line,
                                          classical_hilbert_constant(2.0));
  CHECK(pairing.value == doctest::Approx(pi * pi / 3.0).epsilon(1e-6));
  CHECK(hardy.lhs * hardy.lhs == doctest::Approx(pi * pi / 3.0).epsilon(1e-8));
  CHECK(pairing.value ==
        doctest::Approx(std::pow(hardy.lhs, 2.0)).epsilon(2e-6));
}

TEST_CASE("conjugate_function: pairing equality at p=3") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 3.0, 1.0);
  HomogeneousGroup line = line_group();
  RadialFunction psi = conjugate_function(kernel_hilbert(), f, 3.0, line);
  QuadResult pairing = bilinear_form(kernel_hilbert(), f, psi, line);
  VerificationReport hardy = verify_hardy(kernel_hilbert(), f, 3.0, line,
                                          classical_hilbert_constant(3.0));
  CHECK(pairing.value ==
        doctest::Approx(std::pow(hardy.lhs, 3.0)).epsilon(2e-6));
}

// ========================= sharpness sweep =========================

TEST_CASE("sharpness_sweep: max kernel ratios follow 1/(1+2 beta)") {
  const std::vector<double> betas = {0.5, 0.2, 0.1, 0.05, 0.02};
  auto entries = sharpness_sweep(kernel_max(), 2.0, line_group(), betas);
  REQUIRE(entries.size() == betas.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CAPTURE(betas[i]);
    CHECK(entries[i].beta == betas[i]);
    CHECK(entries[i].quad.converged);
    CHECK(entries[i].ratio ==
          doctest::Approx(1.0 / (1.0 + 2.0 * betas[i])).epsilon(1e-7));
  }
}

TEST_CASE("sharpness_sweep: Hilbert kernel approaches its constant from below") {
  auto entries = sharpness_sweep(kernel_hilbert(), 2.0, line_group(),
                                 {0.5, 0.2, 0.1, 0.05, 0.02});
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    CHECK(entries[i + 1].ratio >= entries[i].ratio - 1e-12);
  }
  CHECK(entries.back().ratio > entries.front().ratio);
  for (const auto& e : entries) CHECK(e.ratio <= 1.0 + 1e-9);
}

TEST_CASE("sharpness_sweep: group form on the anisotropic Q=4 group") {
  auto entries = sharpness_sweep(kernel_hilbert_lambda(4), 2.0, aniso_group(),
                                 {0.5, 0.1, 0.02});
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    CHECK(entries[i + 1].ratio >= entries[i].ratio - 1e-12);
  }
  for (const auto& e : entries) {
    CHECK(e.quad.converged);
    CHECK(e.ratio <= 1.0 + 1e-9);
  }
}

TEST_CASE("sharpness_sweep: single entry stays below the constant") {
  auto entries = sharpness_sweep(kernel_hilbert(), 3.0, line_group(), {0.3});
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].ratio <= 1.0 + 1e-9);
  CHECK(entries[0].quad.converged);
}

TEST_CASE("sharpness_sweep: schedule validation") {
  HomogeneousGroup line = line_group();
  CHECK_THROWS_AS(sharpness_sweep(kernel_hilbert(), 2.0, line, {}), InputError);
  CHECK_THROWS_AS(sharpness_sweep(kernel_hilbert(), 2.0, line, {0.5, 0.5}),
                  InputError);
  CHECK_THROWS_AS(sharpness_sweep(kernel_hilbert(), 2.0, line, {0.2, 0.5}),
                  InputError);
  CHECK_THROWS_AS(sharpness_sweep(kernel_hilbert(), 2.0, line, {-0.1}),
                  InputError);
}

// ========================= dilation probe =========================

TEST_CASE("dilation_probe: critical order is dilation invariant") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  DilationProbe probe =
      dilation_probe(kernel_hilbert(), f, f, 2.0, line_group());
  REQUIRE(probe.slope_ok);
  CHECK(std::abs(probe.slope) <= 1e-3);
  for (const auto& e : probe.entries) {
    CAPTURE(e.a);
    CHECK(e.converged);
    CHECK(e.ratio == doctest::Approx(two_log_two).epsilon(1e-6));
  }
}

TEST_CASE("dilation_probe: super-critical order drifts with slope Q+lambda negated") {
  Kernel sq = make_kernel(parse_expr("1/(r+s)^2"), -2.0, "inverse_square_sum");
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  DilationProbe probe = dilation_probe(sq, f, f, 2.0, line_group());
  REQUIRE(probe.slope_ok);
  CHECK(probe.slope == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("dilation_probe: critical power kernel on the Q=4 group") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 4.0);
  DilationProbe probe =
      dilation_probe(kernel_hilbert_lambda(4), f, f, 2.0, aniso_group());
  REQUIRE(probe.slope_ok);
  CHECK(std::abs(probe.slope) <= 1e-3);
}

TEST_CASE("dilation_probe: validation") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  HomogeneousGroup line = line_group();
  Kernel mislabeled = make_kernel(parse_expr("1/(r+s)"), -2.0, "mislabeled");
  CHECK_THROWS_AS(dilation_probe(mislabeled, f, f, 2.0, line), PreconditionError);
  CHECK_THROWS_AS(dilation_probe(kernel_hilbert(), f, f, 2.0, line, {2.0}),
                  InputError);
  CHECK_THROWS_AS(dilation_probe(kernel_hilbert(), f, f, 2.0, line, {2.0, 2.0}),
                  InputError);
  CHECK_THROWS_AS(dilation_probe(kernel_hilbert(), f, f, 2.0, line, {1.0, -1.0}),
                  InputError);
}

// ==================== sphere-average reduction ====================

TEST_CASE("verify_group_hilbert: reduces to the classical pairing on the line") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 1.0);
  HomogeneousGroup line = line_group();
  VerificationReport rep = verify_group_hilbert(f, f, 2.0, line);
  VerificationReport classical = verify_hh(kernel_hilbert(), f, f, 2.0, line,
                                           classical_hilbert_constant(2.0));
  CHECK(rep.lhs == doctest::Approx(classical.lhs).epsilon(1e-9));
  CHECK(rep.ratio == doctest::Approx(classical.ratio).epsilon(1e-9));
  CHECK(rep.constant.value == doctest::Approx(pi).epsilon(1e-15));
}

TEST_CASE("verify_group_hilbert: anisotropic Q=4 group at p=2") {
  RadialFunction f = RadialFunction::power_cutoff(0.5, 2.0, 4.0);
  VerificationReport rep = verify_group_hilbert(f, f, 2.0, aniso_group());
  CHECK(rep.constant.value == doctest::Approx(4.0 * pi).epsilon(1e-15));
  CHECK(rep.lhs == doctest::Approx(128.0 * two_log_two).epsilon(1e-8));
  CHECK(rep.ratio == doctest::Approx(two_log_two / pi).epsilon(1e-8));
  CHECK(rep.holds);
}

TEST_CASE("verify_group_hilbert: Euclidean plane at p=3") {
  HomogeneousGroup plane({1, 1}, {QuasiNormKind::Euclidean, 0});
  RadialFunction f = RadialFunction::power_cutoff(0.5, 3.0, 2.0);
  RadialFunction g = RadialFunction::power_cutoff(0.5, 1.5, 2.0);
  VerificationReport rep = verify_group_hilbert(f, g, 3.0, plane);
  CHECK(rep.ratio < 1.0);
  CHECK(rep.holds);
}

TEST_CASE("verify_group_hilbert: Euclidean constant factors through the ball volume") {
  HomogeneousGroup plane({1, 1}, {QuasiNormKind::Euclidean, 0});
  CHECK(euclidean_hilbert_constant(2, 2.0).value ==
        doctest::Approx(group_hilbert_constant(2.0, 2.0).value *
                        ball_volume(plane, 1.0))
            .epsilon(1e-14));
}
