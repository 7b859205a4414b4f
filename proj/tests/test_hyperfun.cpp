#include <doctest.h>

#include "phf/hyperfun.hpp"
#include "phf/report.hpp"

using namespace phf;

static Scalar Q(long p, long q = 1) { return Scalar::rational(p, q); }

static HyperParams params(Family f, std::vector<Scalar> tau, Scalar theta) {
  HyperParams p;
  p.family = f;
  p.n = f == Family::Gauss ? 1 : int(tau.size());
  p.tau = std::move(tau);
  p.theta = theta;
  return p;
}

TEST_CASE("Gauss series") {
  auto s = gauss_2f1(Q(1), Q(1), Q(1), 6);
  for (int k = 0; k <= 6; ++k) CHECK(s.coeff(MultiIndex::unit(0, k)) == Q(1));
  auto t = gauss_2f1(Q(-1), Q(3, 5), Q(2, 7), 6);
  CHECK(t.size() == 2);
  CHECK(t.constant_term() == Q(1));
  CHECK(t.coeff(MultiIndex::unit(0, 1)) == -(Q(3, 5) / Q(2, 7)));
  CHECK_THROWS_AS(gauss_2f1(Q(1), Q(1), Q(-2), 6), PreconditionError);
}

TEST_CASE("type A at rank two is the Gauss series") {
  Rng rng(101);
  for (int t = 0; t < 10; ++t) {
    Scalar a = rng.rational(12, 4), b = rng.rational(12, 4), c = rng.rational(12, 4, true);
    auto xa = build_XA(params(Family::A, {a, b}, c), 12);
    auto g = gauss_2f1(a, b, c, 12);
    for (int k = 0; k <= 12; ++k) CHECK(xa.coeff(MultiIndex::unit(0, k)) == g.coeff(MultiIndex::unit(0, k)));
  }
}

TEST_CASE("hand-evaluated coefficients") {
  Scalar t1 = Q(2, 3), t2 = Q(-5, 4), t3 = Q(7, 2), th = Q(9, 5);
  auto p = params(Family::A, {t1, t2, t3}, th);
  VarSet a3(Lattice::A, 3);
  auto xa = build_XA(p, 3);
  CHECK(xa.constant_term() == Q(1));
  CHECK(xa.coeff(MultiIndex::unit(a3.index(2, 1))) == t1);
  CHECK(xa.coeff(MultiIndex::unit(a3.index(3, 1))) == t1 * t3 / th);
  CHECK(xa.coeff(MultiIndex::unit(a3.index(3, 2))) == t2 * t3 / th);

  auto c1 = build_XC(params(Family::C, {t1}, th), 5);
  for (int m = 0; m <= 5; ++m)
    CHECK(c1.coeff(MultiIndex::unit(0, m)) == rising(t1, 2 * m) / (factorial(m, Mode::Exact) * rising(th, m)));

  VarSet c2(Lattice::C, 2);
  auto xc = build_XC(params(Family::C, {t1, t2}, th), 3);
  CHECK(xc.coeff(MultiIndex::unit(c2.index(4, 1))) == t1 * t2 / th);
  CHECK(xc.coeff(MultiIndex::unit(c2.index(3, 1))) == t1 * (t1 + 1) / th);
  auto xb = build_XB(params(Family::B, {t1, t2}, th), 3);
  CHECK(xb.coeff(MultiIndex::unit(c2.index(3, 1))) == t1 / th);
  CHECK(xb.coeff(MultiIndex::unit(c2.index(4, 1))) == t1 * t2 / th);
  CHECK(xb.coeff(MultiIndex::unit(c2.index(2, 1))) == xc.coeff(MultiIndex::unit(c2.index(2, 1))));

  auto xd = build_XD(params(Family::D, {t1, t2}, th), 6);
  CHECK(xd.constant_term() == Q(1));
  VarSet d2(Lattice::D, 2);
  for (int m = 0; m <= 6; ++m)
    CHECK(xd.coeff(MultiIndex::unit(d2.index(2, 1), m)) == rising(t1, m) / factorial(m, Mode::Exact));
  CHECK(build_XB(params(Family::B, {t1, t2}, th), 2).constant_term() == Q(1));
}

TEST_CASE("term-ratio recurrences reproduce every family") {
  Rng rng(7);
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = 1; n <= 3; ++n) {
      if (f == Family::A && n == 1) continue;
      for (int t = 0; t < 3; ++t) {
        std::vector<Scalar> tau;
        for (int i = 0; i < n; ++i) tau.push_back(rng.rational(12, 3, true));
        auto p = params(f, tau, rng.rational(12, 3, true));
        int N = n == 3 && f != Family::A ? 3 : 5;
        auto direct = build_X(p, N);
        auto walked = build_by_ratios(p, N);
        auto d = compare(direct, walked, N);
        INFO(family_name(f) << " n=" << n << " " << d.worst);
        CHECK(d.exactly_zero);
      }
    }
  }
}

TEST_CASE("parameter shifts") {
  auto p = params(Family::A, {Q(1), Q(1)}, Q(3));
  auto s = shifted(p, ParamShift::ab(1, 2));
  CHECK(s.tau[0] == Q(2));
  CHECK(s.tau[1] == Q(0));
  CHECK(s.theta == Q(3));
  auto c = params(Family::C, {Q(1, 2), Q(1, 3)}, Q(5, 7));
  auto d = shifted(c, ParamShift::dbl(1));
  CHECK(d.tau[0] == Q(5, 2));
  CHECK(d.theta == Q(12, 7));
  auto t = shifted(c, ParamShift::top(1, 2));
  CHECK(t.tau[0] == Q(3, 2));
  CHECK(t.tau[1] == Q(4, 3));
  CHECK(t.theta == Q(12, 7));
  auto b = shifted(c, ParamShift::single_b(2));
  CHECK(b.tau[1] == Q(4, 3));
  CHECK(b.theta == Q(12, 7));
  CHECK_THROWS(shifted(c, ParamShift::ab(1, 3)));
  CHECK_THROWS(shifted(c, ParamShift::top(2, 1)));
}

TEST_CASE("theta poles are rejected") {
  CHECK_THROWS_AS(build_XA(params(Family::A, {Q(1, 2), Q(1, 3)}, Q(-2)), 5), PreconditionError);
  CHECK_NOTHROW(build_XA(params(Family::A, {Q(1, 2), Q(1, 3)}, Q(-2)), 2));
  CHECK_THROWS_AS(build_XC(params(Family::C, {Q(1, 2)}, Q(0)), 3), PreconditionError);
}
