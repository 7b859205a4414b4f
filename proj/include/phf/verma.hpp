#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phf/report.hpp"
#include "phf/series.hpp"

namespace phf {

enum class Algebra { GL, SP };

// E_{row,col} for gl(n); C_{row,col} for sp(2n) with rows/columns in 1..2n.
struct Gen {
  int row = 0, col = 0;
  friend bool operator<(const Gen& a, const Gen& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); }
  friend bool operator==(const Gen& a, const Gen& b) { return a.row == b.row && a.col == b.col; }
};

using Mat = std::map<std::pair<int, int>, Scalar>;
// PBW coefficients: E^alpha v (gl) or C^alpha v (sp).
using Vec = std::map<MultiIndex, Scalar>;
// Laurent coefficients: (x-exponent offset, PBW index) -> coefficient.
using LKey = std::pair<std::vector<int>, MultiIndex>;
using LVec = std::map<LKey, Scalar>;

void add_to(Vec& v, const MultiIndex& m, const Scalar& c);
void add_to(LVec& v, const LKey& k, const Scalar& c);

class Verma {
 public:
  // Highest weight lambda_1..lambda_n.
  static Verma gl(std::vector<Scalar> lambda);
  // lambda(h_i) = -1/2 for i<n, lambda(h_n) = lambda_n.
  static Verma sp(int n, Scalar lambda_n);

  Algebra algebra() const { return alg_; }
  int n() const { return n_; }
  const VarSet& pbw() const { return pbw_; }
  // Eigenvalue of E_kk (gl) or C_kk (sp) on v, k = 1..n.
  const std::vector<Scalar>& top_weight() const { return top_; }

  enum class Rule { Formula, Straighten };

  bool valid(Gen g) const;
  Gen canonical(Gen g) const;
  bool is_negative(Gen g) const;
  bool is_cartan(Gen g) const;
  bool is_positive(Gen g) const;
  int height(Gen g) const;
  long height(const MultiIndex& a) const;
  std::string name(Gen g) const;
  std::vector<Gen> generators() const;

  Mat matrix(Gen g) const;
  std::vector<std::pair<Gen, Scalar>> decompose(const Mat& m) const;
  std::vector<std::pair<Gen, Scalar>> bracket(Gen a, Gen b) const;

  // Formula: closed-form rules (simple raising, lowering, Cartan); other generators by commutators.
  Vec act(Gen g, const Vec& v, Rule rule = Rule::Formula) const;
  Vec act(Gen g, const MultiIndex& a, Rule rule = Rule::Formula) const;
  // sp(2n) closed-form rules; as_printed keeps the exponent index and the missing factor 2
  // of the off-diagonal lowering rule exactly as displayed.
  Vec act_sp_formula(Gen g, const MultiIndex& a, bool as_printed) const;

  // Action on Laurent series with coefficients in the module.
  LVec act_tilde(Gen g, const LVec& u, const Scalar& mu, long max_height = -1) const;

 private:
  Vec straighten(Gen g, const MultiIndex& a) const;
  Vec gl_formula(Gen g, const MultiIndex& a) const;
  Scalar cartan_value(const Mat& h, const MultiIndex& a) const;
  int gen_id(Gen g) const;
  Gen var_gen(int var) const;
  int gen_var(Gen g) const;

  Algebra alg_ = Algebra::GL;
  int n_ = 0;
  VarSet pbw_;
  std::vector<Scalar> top_;
  Mode mode_ = Mode::Exact;
  mutable std::map<std::pair<int, MultiIndex>, Vec> cache_straight_, cache_formula_;
};

// sl(2) rules on E21^i v: raising, lowering and Cartan.
Vec act_gl2(Gen g, const Vec& v, const Scalar& lambda1, const Scalar& lambda2);

// Singular vector of weight lambda in the Laurent module, truncated at PBW height N.
LVec singular_vector(const Verma& M, const Scalar& mu, int N);
// Applies the raising generators; nonzero coefficients within the exact range fail.
CheckReport verify_singular(const Verma& M, const LVec& u, const Scalar& mu, int N);

struct TraceSeries {
  std::vector<Scalar> prefactor;  // z_k^{prefactor[k-1]}
  Series body;                    // power series in r_1..r_{n-1} (and s for sp)
};
nlohmann::json to_json(const TraceSeries& t);

// r_i = z_{i+1}/z_i; for sp also s = 1/z_n^2.
VarSet trace_vars(Algebra alg, int n);

// Brute-force trace: coefficient of E^alpha v in E^alpha(u), summed with z^{weight}.
TraceSeries trace_oracle(const Verma& M, const Scalar& mu, int N);

// xi variables.
enum class XiA { LargerIndex, SmallerIndex };  // numerator z_{r2} or z_s
std::vector<Series> xi_A(const VarSet& tv, int n, int N, XiA variant);
std::complex<double> xi_A_value(const std::vector<std::complex<double>>& z, int r2, int r1, XiA variant);

struct XiCOptions {
  // w_{r,r+1} doubled: the factor 2 of [C_{n+j,r}, C_{r,j}] = 2 C_{n+j,j} carried into the recursion
  bool double_superdiagonal = false;
  // product limits in the off-diagonal xi^C taken from the printed bounds instead of the index ranges
  bool printed_range = false;
};
// xi^C_{n+s2,s1} for the C pairs of Lattice::C, in VarSet order.
std::vector<Series> xi_C(const VarSet& tv, int n, int N, const XiCOptions& opt);
std::map<std::pair<int, int>, std::complex<double>> xi_C_values(const std::vector<std::complex<double>>& z,
                                                                 const XiCOptions& opt);
// z_1..z_n from trace-variable values (r_i and, for sp, s).
std::vector<std::complex<double>> z_from_trace_vars(Algebra alg, int n, const std::vector<std::complex<double>>& vals);

enum class ThetaSlot { MinusSigma, LambdaNMinusMu };
TraceSeries closed_trace_gl2(const std::vector<Scalar>& lambda, const Scalar& mu, int N);
TraceSeries closed_trace_A(const std::vector<Scalar>& lambda, const Scalar& mu, int N, XiA xi, ThetaSlot slot);
TraceSeries closed_trace_C(const Scalar& lambda_n, int n, int N, XiA xi, const XiCOptions& opt);

// Oracle against the closed form; gl(n) tries every xi/theta reading and records the ones that agree.
CheckReport compare_trace(Algebra alg, const std::vector<Scalar>& lambda, const Scalar& mu, int n, int N);

// Checks the admissibility conditions; throws PreconditionError.
void check_trace_params(Algebra alg, const std::vector<Scalar>& lambda, const Scalar& mu, int N);

}  // namespace phf
