#include <doctest.h>

#include <cmath>

#include "phf/identities.hpp"

using namespace phf;

static Scalar Q(long p, long q = 1) { return Scalar::rational(p, q); }

static HyperParams params(Family f, std::vector<Scalar> tau, Scalar theta) {
  HyperParams p;
  p.family = f;
  p.n = int(tau.size());
  p.tau = std::move(tau);
  p.theta = std::move(theta);
  return p;
}

// Rejects draws that hit a pole of any shifted copy (theta in -N..0).
static HyperParams draw(Rng& rng, Family f, int n) {
  std::vector<Scalar> tau;
  for (int i = 0; i < n; ++i) tau.push_back(rng.rational(12, 3));
  return params(f, tau, rng.rational(12, 3, true));
}

TEST_CASE("type A contiguity") {
  Rng rng(101);
  for (int t = 0; t < 3; ++t) {
    auto r = check_contiguity_A(draw(rng, Family::A, 2), 8);
    CHECK(r.pass);
    CHECK(r.max_discrepancy == 0.0);
  }
  auto r3 = check_contiguity_A(params(Family::A, {Q(1, 2), Q(1, 2), Q(-1, 3)}, Q(5, 7)), 6);
  CHECK(r3.pass);
  auto z = check_contiguity_A(params(Family::A, {Q(0), Q(2, 3), Q(1, 5)}, Q(7, 4)), 5);
  CHECK(z.pass);
}

TEST_CASE("type C, B, D contiguity") {
  Rng rng(202);
  auto c1 = check_contiguity_C(params(Family::C, {Q(3, 5)}, Q(7, 3)), 6);
  CHECK(c1.pass);
  CHECK(c1.details["printed_form"]["d(2,1)"] == 0.0);
  for (int t = 0; t < 2; ++t) {
    CHECK(check_contiguity_C(draw(rng, Family::C, 2), 5).pass);
    CHECK(check_contiguity_D(draw(rng, Family::D, 2), 5).pass);
    auto b = check_contiguity_B(draw(rng, Family::B, 2), 5);
    CHECK(b.pass);
    // one reading of the diagonal relation survives at s = 2
    int zeros = 0;
    for (auto& [k, v] : b.details["diagonal_variants"]["d(4,2)"].items()) zeros += v == 0.0;
    CHECK(zeros == 1);
    CHECK(b.details["diagonal_variants"]["d(4,2)"]["sum_r,step1,over_theta"] == 0.0);
  }
}

TEST_CASE("Euler operator systems") {
  Rng rng(303);
  CHECK(check_pde_A(draw(rng, Family::A, 2), 8).pass);
  CHECK(check_pde_A(draw(rng, Family::A, 3), 5).pass);
  CHECK(check_pde_C(draw(rng, Family::C, 2), 5).pass);
  CHECK(check_pde_BD(draw(rng, Family::B, 2), 5).pass);
  CHECK(check_pde_BD(draw(rng, Family::D, 2), 5).pass);
  CHECK_THROWS(check_pde_BD(draw(rng, Family::C, 2), 5));
}

TEST_CASE("wrong-sign ratio breaks the top-row system") {
  // Sanity check that the comparison is not vacuous: perturbing X breaks the relation.
  HyperParams p = params(Family::A, {Q(1, 3), Q(2, 5)}, Q(3, 7));
  auto good = check_pde_A(p, 6);
  CHECK(good.pass);
  HyperParams q = p;
  q.theta = Q(4, 7);
  auto lhs = build_XA(p, 6), other = build_XA(q, 6);
  CHECK_FALSE(compare(lhs, other, 6).exactly_zero);
}

TEST_CASE("kernel product") {
  auto r2 = check_kernel_product({Q(2, 3), Q(5)}, 2, 8);
  CHECK(r2.pass);
  Rng rng(404);
  for (int t = 0; t < 2; ++t) {
    std::vector<Scalar> tau{rng.rational(12, 3), rng.rational(12, 3), rng.rational(12, 3)};
    CHECK(check_kernel_product(tau, 3, 6).pass);
  }
  CHECK(check_kernel_product({Q(0), Q(0), Q(0)}, 3, 4).pass);
}

TEST_CASE("Gauss equation") {
  Rng rng(505);
  for (int t = 0; t < 3; ++t) {
    auto r = check_gauss_ode(rng.rational(12, 3), rng.rational(12, 3), rng.rational(12, 3, true), 10);
    CHECK(r.pass);
    CHECK(r.details["relations"].contains("second"));
  }
  auto a0 = check_gauss_ode(Q(0), Q(3, 2), Q(5, 2), 6);
  CHECK(a0.pass);
  auto ci = check_gauss_ode(Q(1, 2), Q(1, 3), Q(3), 6);
  CHECK(ci.pass);
  CHECK_FALSE(ci.details["relations"].contains("second"));
}

TEST_CASE("Euler integral") {
  auto p2 = params(Family::A, {Scalar(0.5), Scalar(1.5)}, Scalar(3.0));
  auto r = check_integral_rep_A(p2, {0.1}, 1e-8, 30);
  CHECK(r.pass);
  auto zero = check_integral_rep_A(p2, {0.0}, 1e-12, 4);
  CHECK(zero.max_discrepancy < 1e-12);
  auto p3 = params(Family::A, {Scalar(0.3), Scalar(0.4), Scalar(0.6)}, Scalar(2.0));
  auto r3 = check_integral_rep_A(p3, {{0.05, 0.02}, {-0.08, 0.0}, {0.1, -0.03}}, 1e-8, 10);
  CHECK(r3.pass);
  CHECK_THROWS_AS(check_integral_rep_A(params(Family::A, {Scalar(0.5), Scalar(3.5)}, Scalar(3.0)), {0.1}, 1e-8, 5),
                  PreconditionError);
  // the integral error shrinks as the series order grows
  double e5 = check_integral_rep_A(p3, {0.1, 0.1, 0.1}, 1e-12, 5).max_discrepancy;
  double e10 = check_integral_rep_A(p3, {0.1, 0.1, 0.1}, 1e-12, 10).max_discrepancy;
  CHECK(e10 < e5);
}

TEST_CASE("gamma recurrence") {
  for (double z = 0.15; z < 6.0; z += 0.37) CHECK(std::fabs(std::tgamma(z + 1) / (z * std::tgamma(z)) - 1) < 1e-12);
}
