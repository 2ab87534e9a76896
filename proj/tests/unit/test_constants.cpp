#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hh/constants.hpp"
#include "hh/group.hpp"
#include "hh/kernel.hpp"

using namespace hh;

namespace {

constexpr double pi = std::numbers::pi_v<double>;

double conj(double p) { return p / (p - 1.0); }

HomogeneousGroup line_group() {
  return HomogeneousGroup({1.0}, {QuasiNormKind::Euclidean, 0}, 1.0);
}

}  // namespace

// ========================== classical constants ==========================

TEST_CASE("cstar_classical: plain Hilbert kernel across exponents") {
  Kernel h = kernel_hilbert();
  for (double p : {1.25, 1.5, 2.0, 3.0, 8.0}) {
    CAPTURE(p);
    SharpConstant c = cstar_classical(h, p);
    CHECK(c.value == doctest::Approx(pi / std::sin(pi / p)).epsilon(1e-9));
    CHECK(c.mode == ConstantMode::Classical);
    CHECK(c.source == ConstantSource::NumericQuadrature);
    CHECK(c.p == p);
    CHECK(std::abs(1.0 / c.p + 1.0 / c.q - 1.0) <= 1e-15);
    REQUIRE(c.quad.has_value());
    CHECK(c.quad->converged);
    CHECK(c.cross_check_dev <= 1e-9);
  }
}

TEST_CASE("cstar_classical: max kernel equals p+q") {
  Kernel k = kernel_max();
  for (double p : {1.25, 2.0, 3.0}) {
    CAPTURE(p);
    SharpConstant c = cstar_classical(k, p);
    CHECK(c.value == doctest::Approx(p + conj(p)).epsilon(1e-10));
  }
}

TEST_CASE("cstar_classical: weighted family, first-slot versus second-slot pairing") {
  // the bilinear pairing puts f in the first kernel slot, so the constant of
  // the weighted family is the second-form integral of the transposed kernel
  struct Pt { double lam, p, ke; };
  for (Pt t : {Pt{1, 3, 2}, Pt{0.5, 1.5, 4}, Pt{2, 2, 1.5}, Pt{2, 3, 4}}) {
    CAPTURE(t.lam);
    CAPTURE(t.p);
    CAPTURE(t.ke);
    const double m = conj(t.ke);
    SharpConstant c =
        cstar_classical(transpose(kernel_weighted_hilbert(t.lam, t.p, t.ke)), t.p);
    CHECK(c.value ==
          doctest::Approx(pi / (t.lam * std::sin(pi / m))).epsilon(1e-8));
  }

  // untransposed, the defining integral pairs the weight exponents the other
  // way; for lam=1, p=3, k_exp=2 it evaluates to pi/sin(5 pi/6) = 2 pi
  SharpConstant first = cstar_classical(kernel_weighted_hilbert(1, 3, 2), 3.0);
  CHECK(first.value == doctest::Approx(2.0 * pi).epsilon(1e-9));
}

TEST_CASE("cstar_classical: divergence is an infinite first-class result") {
  // exponents tuned so the defining integral blows up at zero like s^(-1.5)
  SharpConstant c = cstar_classical(kernel_weighted_hilbert(0.5, 1.2, 1.5), 1.2);
  CHECK(std::isinf(c.value));
  CHECK(c.value > 0.0);
  REQUIRE(c.quad.has_value());
  CHECK_FALSE(c.quad->converged);
}

TEST_CASE("cstar_classical: homogeneity precondition") {
  CHECK_THROWS_AS(cstar_classical(kernel_hilbert_lambda(2), 2.0), PreconditionError);
  CHECK_THROWS_AS(cstar_classical(kernel_hilbert(), 1.0), InputError);
  CHECK_THROWS_AS(cstar_classical(kernel_hilbert(), 0.5), InputError);
}

// ============================ group constants ============================

TEST_CASE("cstar_group: power kernel on a Q=4 Euclidean group") {
  HomogeneousGroup g(std::vector<double>(4, 1.0), {QuasiNormKind::Euclidean, 0});
  SharpConstant c = cstar_group(kernel_hilbert_lambda(4), 2.0, g);
  const double sphere = 2.0 * pi * pi;  // closed form for n=4
  CHECK(g.sphere_measure().value == doctest::Approx(sphere).epsilon(1e-14));
  CHECK(c.value == doctest::Approx(sphere / 4.0 * pi).epsilon(1e-9));
  CHECK(c.mode == ConstantMode::Group);
  CHECK(c.cross_check_dev <= 1e-9);
}

TEST_CASE("cstar_group: power kernel on the anisotropic weights-(1,1,2) group") {
  HomogeneousGroup g({1, 1, 2}, {QuasiNormKind::MaxAnisotropic, 0});  // |S| = 32
  CHECK(g.sphere_measure().value == 32.0);
  SharpConstant c = cstar_group(kernel_hilbert_lambda(4), 2.0, g);
  CHECK(c.value == doctest::Approx(8.0 * pi).epsilon(1e-9));
}

TEST_CASE("cstar_group: group-weighted kernel reproduces Q pi at p=2") {
  HomogeneousGroup g({1, 1, 2}, {QuasiNormKind::MaxAnisotropic, 0});
  const double c0 = g.Q() / g.sphere_measure().value;
  SharpConstant c =
      cstar_group(kernel_group_weighted_hilbert(2.0, g.Q(), c0), 2.0, g);
  CHECK(c.value == doctest::Approx(g.Q() * pi).epsilon(1e-9));
}

TEST_CASE("cstar_group: reduces to the classical constant on the half line") {
  SharpConstant c = cstar_group(kernel_hilbert(), 3.0, line_group());
  CHECK(c.value == doctest::Approx(pi / std::sin(pi / 3.0)).epsilon(1e-9));
}

TEST_CASE("cstar_group: the two defining integrals agree for order -Q kernels") {
  for (double hom_dim : {2.0, 3.0, 4.0}) {
    std::vector<double> w(static_cast<std::size_t>(hom_dim), 1.0);
    HomogeneousGroup g(w, {QuasiNormKind::Euclidean, 0});
    SharpConstant c = cstar_group(kernel_hilbert_lambda(hom_dim), 2.0, g);
    CAPTURE(hom_dim);
    CHECK(c.quad->converged);
    CHECK(c.cross_check_dev <= 2e-10 + 2.0 * c.quad->err_estimate / c.value);
  }
  // non-symmetric probe: the agreement is a structural identity, not a
  // symmetry accident
  HomogeneousGroup g4(std::vector<double>(4, 1.0), {QuasiNormKind::Euclidean, 0});
  SharpConstant c = cstar_group(kernel_group_weighted_hilbert(2.2, 4.0, 0.7), 2.2, g4);
  CHECK(c.quad->converged);
  CHECK(c.cross_check_dev <= 1e-8);
}

TEST_CASE("cstar_group: order precondition") {
  HomogeneousGroup g({1, 1}, {QuasiNormKind::Euclidean, 0});
  CHECK_THROWS_AS(cstar_group(kernel_hilbert(), 2.0, g), PreconditionError);
}

// ============================= closed forms ==============================

TEST_CASE("closed forms: catalog values") {
  CHECK(classical_hilbert_constant(2.0).value == doctest::Approx(pi).epsilon(1e-15));
  CHECK(classical_hilbert_constant(4.0).value ==
        doctest::Approx(pi * std::numbers::sqrt2_v<double>).epsilon(1e-15));
  CHECK(power_hilbert_constant(1.0, 2.0, 2.0).value == doctest::Approx(pi).epsilon(1e-15));
  CHECK(power_hilbert_constant(0.5, 3.0, 2.0).value ==
        doctest::Approx(2.0 * pi / std::sin(pi / 3.0)).epsilon(1e-15));
  CHECK(group_hilbert_constant(4.0, 2.0).value == doctest::Approx(4.0 * pi).epsilon(1e-15));
  CHECK(euclidean_hilbert_constant(2, 2.0).value ==
        doctest::Approx(2.0 * pi * pi).epsilon(1e-15));
  CHECK(group_power_hilbert_constant(2.0, 0.5, 3.0, 2.0).value ==
        doctest::Approx(8.0 * pi / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(classical_hilbert_constant(2.0).source == ConstantSource::ClosedForm);
  CHECK(group_hilbert_constant(4.0, 2.0).mode == ConstantMode::Group);
}

TEST_CASE("closed forms: conjugate exponents give the same constant") {
  for (double p : {1.25, 3.0, 8.0}) {
    CAPTURE(p);
    const double a = classical_hilbert_constant(p).value;
    const double b = classical_hilbert_constant(conj(p)).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-14));
  }
}

TEST_CASE("closed forms: numeric agreement for the catalog kernel") {
  for (double p : {1.5, 2.0, 3.0}) {
    CAPTURE(p);
    SharpConstant numeric = cstar_classical(kernel_hilbert(), p);
    SharpConstant closed = classical_hilbert_constant(p);
    CHECK(numeric.value == doctest::Approx(closed.value).epsilon(1e-9));
  }
}

TEST_CASE("closed forms: validation") {
  CHECK_THROWS_AS(classical_hilbert_constant(1.0), InputError);
  CHECK_THROWS_AS(power_hilbert_constant(0.0, 2.0, 2.0), InputError);
  CHECK_THROWS_AS(power_hilbert_constant(1.0, 1.0, 2.0), InputError);
  CHECK_THROWS_AS(group_hilbert_constant(0.0, 2.0), InputError);
  CHECK_THROWS_AS(euclidean_hilbert_constant(0, 2.0), InputError);
  CHECK_THROWS_AS(group_power_hilbert_constant(2.0, 1.0, 2.0, 1.0), InputError);
}
