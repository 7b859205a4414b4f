#include <doctest.h>

#include "phf/pathpoly.hpp"

using namespace phf;

TEST_CASE("paths between integers") {
  auto p22 = enumerate_paths(2, 2);
  REQUIRE(p22.size() == 1);
  CHECK(p22[0].nodes == std::vector<int>{2});
  auto p12 = enumerate_paths(1, 2);
  REQUIRE(p12.size() == 1);
  CHECK(p12[0].nodes == std::vector<int>{1, 2});
  auto p13 = enumerate_paths(1, 3);
  REQUIRE(p13.size() == 2);
  CHECK(p13[0].nodes == std::vector<int>{1, 3});
  CHECK(p13[1].nodes == std::vector<int>{1, 2, 3});
  CHECK(enumerate_paths(2, 7).size() == 16);
  CHECK_THROWS(enumerate_paths(3, 1));
}

TEST_CASE("path polynomials") {
  VarSet a3(Lattice::A, 3);
  auto one = path_polynomial(2, 2, 3);
  CHECK(one.size() == 1);
  CHECK(one.constant_term() == Scalar(1L));
  auto p12 = path_polynomial(1, 2, 3);
  CHECK(p12.size() == 1);
  CHECK(p12.coeff(MultiIndex::unit(a3.index(2, 1))) == Scalar(-1L));
  auto p13 = path_polynomial(1, 3, 3);
  CHECK(p13.size() == 2);
  CHECK(p13.coeff(MultiIndex::unit(a3.index(3, 1))) == Scalar(-1L));
  MultiIndex m;
  m.set(a3.index(2, 1), 1);
  m.set(a3.index(3, 2), 1);
  CHECK(p13.coeff(m) == Scalar(1L));
  CHECK_THROWS(path_polynomial(0, 2, 3));
  CHECK_THROWS(path_polynomial(2, 4, 3));
}

TEST_CASE("first-step recursion and term counts") {
  for (int n = 2; n <= 7; ++n) {
    VarSet vs(Lattice::A, n);
    for (int k1 = 1; k1 < n; ++k1)
      for (int k2 = k1 + 1; k2 <= n; ++k2) {
        auto p = path_polynomial(k1, k2, vs, n);
        CHECK(long(p.size()) == (1L << (k2 - k1 - 1)));
        Series rhs(vs, n, Mode::Exact);
        for (int m = k1 + 1; m <= k2; ++m)
          rhs -= Series::variable(vs, n, vs.index(m, k1), Mode::Exact) * path_polynomial(m, k2, vs, n);
        CHECK(compare(p, rhs, n).exactly_zero);
      }
  }
}

TEST_CASE("triangular inverse identity") {
  for (int n = 2; n <= 8; ++n) {
    auto r = check_inverse_identity(n);
    CHECK(r.pass);
    CHECK(r.max_discrepancy == 0.0);
  }
}
