#pragma once

#include <complex>
#include <vector>

#include "phf/hyperfun.hpp"
#include "phf/report.hpp"

namespace phf {

// Derivative relations of X_A, X_B, X_C, X_D against shifted copies.
CheckReport check_contiguity_A(const HyperParams& p, int N);
CheckReport check_contiguity_C(const HyperParams& p, int N);
CheckReport check_contiguity_B(const HyperParams& p, int N);
CheckReport check_contiguity_D(const HyperParams& p, int N);

// Euler-operator systems satisfied by the series.
CheckReport check_pde_A(const HyperParams& p, int N);
CheckReport check_pde_C(const HyperParams& p, int N);
// B and D systems; p.family selects which (B or D).
CheckReport check_pde_BD(const HyperParams& p, int N);

// Theta-free kernel against the product of binomial series, plain and t-graded.
CheckReport check_kernel_product(const std::vector<Scalar>& tau, int n, int N);

// Residual of the hypergeometric equation for both local solutions at 0.
CheckReport check_gauss_ode(const Scalar& a, const Scalar& b, const Scalar& c, int N);

// Euler integral against the truncated series at a point (float mode).
CheckReport check_integral_rep_A(const HyperParams& p, const std::vector<std::complex<double>>& point,
                                 double quad_tol, int N);

// Euler operator c + sum_v w_v z_v d/dz_v.
struct EulerOp {
  Scalar c;
  std::vector<std::pair<int, long>> weights;
  Series operator()(const Series& s) const;
};

}  // namespace phf
