#include <doctest.h>

#include <cmath>
#include <vector>

#include "hh/kernel.hpp"

using namespace hh;

// ================================ catalog ================================

TEST_CASE("catalog: point values") {
  CHECK(kernel_hilbert()(1, 1) == 0.5);
  CHECK(kernel_hilbert_lambda(2)(1, 2) == 0.2);
  CHECK(kernel_max()(2, 3) == 1.0 / 3.0);

  // with p = k_exp = 2 both weight exponents vanish and the plain
  // Hilbert kernel remains
  Kernel w = kernel_weighted_hilbert(1, 2, 2);
  CHECK(w(1, 1) == 0.5);
  CHECK(w(2, 3) == doctest::Approx(0.2).epsilon(1e-15));

  // lam=2, p=3, k_exp=1.5: conjugates m=3, q=1.5, so the weights are
  // r^(2/3) s^(1/3)
  Kernel w2 = kernel_weighted_hilbert(2, 3, 1.5);
  CHECK(w2(2, 1) == doctest::Approx(std::pow(2.0, 2.0 / 3.0) / 5.0).epsilon(1e-15));

  // p = 2, Q = 3: both weight exponents are -1
  Kernel gw = kernel_group_weighted_hilbert(2, 3, 0.25);
  CHECK(gw(1, 1) == 0.125);
  CHECK(gw(2, 1) == doctest::Approx(0.25 / (2.0 * 3.0)).epsilon(1e-15));
}

TEST_CASE("catalog: kernels are positive and flagged as checked") {
  for (const Kernel& k :
       {kernel_hilbert(), kernel_hilbert_lambda(3), kernel_max(),
        kernel_weighted_hilbert(0.5, 1.5, 4), kernel_group_weighted_hilbert(2.2, 4, 0.7)}) {
    CAPTURE(k.name);
    CHECK(k.positivity_checked);
  }
}

TEST_CASE("catalog: parameter validation") {
  CHECK_THROWS_AS(kernel_hilbert_lambda(0.0), InputError);
  CHECK_THROWS_AS(kernel_hilbert_lambda(-1.0), InputError);
  CHECK_THROWS_AS(kernel_weighted_hilbert(1, 1, 2), InputError);   // p <= 1
  CHECK_THROWS_AS(kernel_weighted_hilbert(1, 2, 1), InputError);   // k_exp <= 1
  CHECK_THROWS_AS(kernel_weighted_hilbert(0, 2, 2), InputError);   // lam <= 0
  CHECK_THROWS_AS(kernel_group_weighted_hilbert(1, 3, 1), InputError);
  CHECK_THROWS_AS(kernel_group_weighted_hilbert(2, 0, 1), InputError);
  CHECK_THROWS_AS(kernel_group_weighted_hilbert(2, 3, 0), InputError);
}

// ============================== homogeneity ==============================

TEST_CASE("check_homogeneity: catalog kernels pass at their declared order") {
  std::vector<Kernel> ks{kernel_hilbert(), kernel_max(),
                         kernel_group_weighted_hilbert(2.2, 4, 0.7)};
  for (double lam : {0.5, 1.0, 2.0, 3.0}) ks.push_back(kernel_hilbert_lambda(lam));
  for (const Kernel& k : ks) {
    CAPTURE(k.name);
    auto rep = check_homogeneity(k, k.claimed_order, 200, 1e-10, 7);
    CHECK(rep.pass);
    CHECK(rep.max_rel_dev <= 1e-10);
  }
}

TEST_CASE("check_homogeneity: weighted family has order -1 across the grid") {
  for (double lam : {0.5, 1.0, 2.0}) {
    for (double p : {1.5, 2.0, 3.0}) {
      for (double ke : {1.5, 2.0, 4.0}) {
        Kernel k = kernel_weighted_hilbert(lam, p, ke);
        CAPTURE(k.name);
        auto rep = check_homogeneity(k, -1.0, 200, 1e-10, 11);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("check_homogeneity: wrong order and mixed scaling fail") {
  Kernel k = make_kernel(parse_expr("1/(r+s^2)"), -1.0, "mixed");
  auto rep = check_homogeneity(k, -1.0, 200, 1e-10, 3);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_rel_dev > 1e-10);

  auto wrong = check_homogeneity(kernel_hilbert_lambda(3), -1.0, 200, 1e-10, 3);
  CHECK_FALSE(wrong.pass);
}

TEST_CASE("check_homogeneity: a domain error is reported as failure with the point") {
  Kernel k = make_kernel(parse_expr("log(r-s)/(r+s)"), -1.0, "partial-domain");
  auto rep = check_homogeneity(k, -1.0, 200, 1e-10, 5);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.note.empty());
}

TEST_CASE("check_homogeneity: sample-count precondition") {
  CHECK_THROWS_AS(check_homogeneity(kernel_hilbert(), -1.0, 99, 1e-10, 1), InputError);
}

// =============================== positivity ==============================

TEST_CASE("check_positivity: sign changes are located") {
  auto rep = check_positivity(make_kernel(parse_expr("r-s"), 0.0, "signed"), 500, 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.min_value < 0.0);

  auto ok = check_positivity(kernel_hilbert(), 500, 1);
  CHECK(ok.pass);
  CHECK(ok.min_value > 0.0);
}

// ================================ transpose ===============================

TEST_CASE("transpose: swaps arguments and preserves the order") {
  Kernel k = kernel_weighted_hilbert(2, 3, 1.5);
  Kernel kt = transpose(k);
  CHECK(kt.claimed_order == k.claimed_order);
  for (double r : {0.3, 1.0, 2.5}) {
    for (double s : {0.7, 1.0, 4.0}) {
      CHECK(kt(r, s) == k(s, r));
    }
  }
  CHECK(expr_equal(transpose(kt).expr, k.expr));
  CHECK(check_homogeneity(kt, -1.0, 200, 1e-10, 13).pass);

  // symmetric kernels transpose to themselves up to argument order
  Kernel h = kernel_hilbert();
  CHECK(transpose(h)(0.4, 1.9) == h(0.4, 1.9));
}
