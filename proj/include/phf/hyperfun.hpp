#pragma once

#include <vector>

#include "phf/series.hpp"

namespace phf {

enum class Family { A, B, C, D, Gauss };

const char* family_name(Family f);

struct HyperParams {
  Family family = Family::A;
  int n = 1;
  std::vector<Scalar> tau;  // tau_1..tau_n, or (a,b) for Gauss
  Scalar theta;             // vartheta, or c for Gauss
  Mode mode() const { return theta.mode(); }
  std::string str() const;
};

struct ParamShift {
  enum Kind { AB, Top, Double, SingleB } kind = AB;
  int i = 1, j = 1;
  // tau_k increment used by SingleB; the spec leaves 1 vs 2 open
  int single_b_step = 1;
  static ParamShift ab(int i, int j) { return {AB, i, j}; }
  static ParamShift top(int j1, int j2) { return {Top, j1, j2}; }
  static ParamShift dbl(int k) { return {Double, k, k}; }
  static ParamShift single_b(int k, int step = 1) { return {SingleB, k, k, step}; }
};

HyperParams shifted(const HyperParams& p, const ParamShift& s);
// tau += dtau, theta += dtheta
HyperParams shift_by(const HyperParams& p, const std::vector<long>& dtau, long dtheta);

VarSet varset_for(Family f, int n);

Series gauss_2f1(const Scalar& a, const Scalar& b, const Scalar& c, int N);

// Coefficient of z^m computed straight from the defining Pochhammer products.
Scalar x_coefficient(const HyperParams& p, const VarSet& vs, const MultiIndex& m);
Series build_XA(const HyperParams& p, int N);
Series build_XB(const HyperParams& p, int N);
Series build_XC(const HyperParams& p, int N);
Series build_XD(const HyperParams& p, int N);
Series build_X(const HyperParams& p, int N);

// coefficient(m + e_var) / coefficient(m) from the term-ratio recurrences.
Scalar term_ratio(const HyperParams& p, const VarSet& vs, const MultiIndex& m, int var);
// Rebuilds the series from 1 by multiplying term ratios along a path in the lattice.
Series build_by_ratios(const HyperParams& p, int N);

}  // namespace phf
