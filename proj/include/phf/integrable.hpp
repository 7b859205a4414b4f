#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "phf/report.hpp"
#include "phf/scalar.hpp"

namespace phf {

enum class FactorKind {
  Z,             // z_i
  Diff,          // z_i - z_j
  ProdMinusOne,  // z_i z_j - 1
  SymDiff,       // z_i + 1/z_i - z_j - 1/z_j
  Anti,          // z_i - 1/z_i
  HalfAnti,      // z_i^{1/2} - z_i^{-1/2}
  SqMinusOne     // z_i^2 - 1
};

struct Factor {
  FactorKind kind;
  int i = 1, j = 0;  // 1-based; j unused for single-variable kinds
  double exponent = 1.0;
};

// prod base^exponent, times optional cofactors.
struct ProductForm {
  int n = 1;
  std::vector<Factor> factors;
  // g(zeta) = sum gauss[m] zeta^m with zeta = z_2/(z_2 - z_1)
  std::vector<double> gauss;
  // sum c z^m over integer exponent vectors m
  std::vector<std::pair<std::vector<int>, double>> laurent;
  // Cofactor without a closed-form derivative; its log-derivatives come from finite differences.
  std::function<double(const std::vector<double>&)> numeric;
};

// Value and Euler log-derivatives d1[k] = z_k d log f / d z_k, d2[k] = z_k d(d1[k]) / d z_k.
struct LogDerivs {
  std::complex<double> value;
  std::vector<double> d1, d2;
};

LogDerivs log_derivatives(const ProductForm& f, const std::vector<double>& z);
// Fourth-order central differences in log z_k, step h, with one Richardson step when two steps disagree.
LogDerivs log_derivatives_fd(const ProductForm& f, const std::vector<double>& z, double h = 1e-4);
std::complex<double> evaluate(const ProductForm& f, const std::vector<double>& z);

enum class Model { CS, OP };

struct ModelSpec {
  Model model = Model::CS;
  int n = 1;
  double K = 0;                          // CS
  double K1 = 0, K2 = 0, K3 = 0, K4 = 0;  // OP
  double nu = 0;
  // pair sums run over pair_from <= i < j <= n
  int pair_from = 1;
};

double potential(const ModelSpec& spec, const std::vector<double>& z);

struct PointResidual {
  double relative = 0;  // |residual / f| / (|nu| + 1)
  double absolute = 0;  // |residual|
};
PointResidual residual_at(const ProductForm& f, const ModelSpec& spec, const std::vector<double>& z,
                          bool finite_differences = false);
// Euler form sum (z_i d_i)^2 f + V f - nu f at each point.
CheckReport residual(const ProductForm& f, const ModelSpec& spec, const std::vector<std::vector<double>>& points,
                     double tolerance, bool finite_differences = false);

// Throws PreconditionError when a point lies within `eps` of a singular locus or leaves the positive orthant.
void check_point(const std::vector<double>& z, double eps = 1e-3);
// Positive reals, log-uniform in [lo, hi], at distance >= margin from the singular loci.
std::vector<std::vector<double>> sample_points(Rng& rng, int n, int count, double lo = 0.2, double hi = 5.0,
                                               double margin = 0.05);

enum class WeylType { A, B, C, D };
WeylType parse_weyl_type(const std::string& s);

// A: phi^A_{mu1,mu2}; B: phi^B_{mu1,mu2}; C: phi^C_{mu1,mu2}; D: phi^D_{mu2} (mu1 ignored).
ProductForm weyl_variation(WeylType t, int n, double mu1, double mu2);
// Canonical exponents: A (1-n)/2, 1; B, C 1, 1; D 1.
ProductForm weyl(WeylType t, int n);
// Vandermonde product prod_{i<j} (z_i - z_j).
ProductForm vandermonde(int n);
// prod over positive roots of z^{alpha/2} - z^{-alpha/2}.
double weyl_from_roots(WeylType t, const std::vector<double>& z);

CheckReport check_laplacian_eigen(WeylType t, int n, const std::vector<std::vector<double>>& points);
double laplacian_eigenvalue(WeylType t, int n);

CheckReport check_identity_6_8(int n, const std::vector<std::vector<double>>& points);
double identity_6_8_sum(const std::vector<double>& z);

// ids "2.2", "6.2", "6.3", "6.4", "6.5", "7.1".
// exponents: 2.2 (mu1, mu2, a); 6.2/6.4/6.5 (mu1, mu2); 6.3 (mu); 7.1 (lambda_n).
// Series cofactors are truncated at N and 2N; the report carries both residuals.
CheckReport check_theorem(const std::string& id, int n, const std::vector<Scalar>& exponents,
                          const std::vector<std::vector<double>>& points, int N = 8);

// mu = sum_{i<n} (lambda_n - i/2)(lambda_n + 3i/2 + 2)
Scalar casimir_sp(int n, const Scalar& lambda_n);
// Psi = W_C E_C with the hypergeometric factor truncated at degree N in the xi variables.
ProductForm theorem_7_1_function(int n, const Scalar& lambda_n, int N);
// The same function with the whole trace body expanded and truncated at order N in the trace variables.
ProductForm theorem_7_1_laurent(int n, const Scalar& lambda_n, int N);
ProductForm theorem_2_2_function(double mu1, double mu2, double a, int N);

// Points with |zeta| in [zeta_min, zeta_max], zeta = z_2/(z_2 - z_1) < 0.
std::vector<std::vector<double>> sample_points_zeta(Rng& rng, int count, double zeta_min, double zeta_max);
// Points in the expansion region of the sp(2n) trace with every xi variable of modulus <= xi_max.
std::vector<std::vector<double>> sample_points_trace(Rng& rng, int n, int count, double xi_max);

// Analytic against finite-difference log-derivatives for every factor kind and cofactor.
CheckReport check_log_derivatives(const std::vector<std::vector<double>>& points, double rel_tol = 1e-6);

}  // namespace phf
