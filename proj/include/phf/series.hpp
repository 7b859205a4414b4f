#pragma once

#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "phf/multiindex.hpp"
#include "phf/scalar.hpp"

namespace phf {

struct SeriesMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Sparse multivariate power series truncated at total degree N.
class Series {
 public:
  Series() = default;
  Series(VarSet vs, int N, Mode mode) : vs_(std::move(vs)), N_(N), mode_(mode) {}
  static Series constant(const VarSet& vs, int N, const Scalar& c);
  static Series variable(const VarSet& vs, int N, int var, Mode mode);
  static Series monomial(const VarSet& vs, int N, const MultiIndex& m, const Scalar& c);

  const VarSet& vars() const { return vs_; }
  int order() const { return N_; }
  Mode mode() const { return mode_; }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(const MultiIndex& m) const;
  Scalar constant_term() const { return coeff(MultiIndex()); }
  // Accumulate; terms above N are dropped, zeros removed.
  void add_term(const MultiIndex& m, const Scalar& c);
  Series truncated(int N) const;
  int min_degree() const;  // -1 for the zero series

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series operator-() const;
  Series scaled(const Scalar& c) const;

 private:
  void check(const Series& o) const;
  VarSet vs_;
  int N_ = 0;
  Mode mode_ = Mode::Exact;
  std::map<MultiIndex, Scalar> terms_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Series& a, const Scalar& c);
Series operator*(const Scalar& c, const Series& a);

Series pow(const Series& s, int e);

// linearForm^exponent by the binomial series; the constant term must be 1.
Series geometric_expand(const Series& linear_form, const Scalar& exponent, int N);

// Multiplies each coefficient by sum_v weight_v * exponent_v.
Series euler_op(const Series& s, const std::vector<int>& vars);
Series euler_op_weighted(const Series& s, const std::vector<std::pair<int, long>>& weights);
Series partial(const Series& s, int var);
Series mul_var(const Series& s, int var);

Scalar eval_at(const Series& s, const std::vector<Scalar>& values);

// X(subs[0], subs[1], ...) where every substituted series has zero constant term.
Series compose(const Series& X, const std::vector<Series>& subs, int N);

// Exact or float maximum |a-b| over common degrees <= upto; worst monomial reported.
struct SeriesDiff {
  double max_abs = 0.0;
  bool exactly_zero = true;
  std::string worst = "";
  long nonzero_terms = 0;
};
SeriesDiff compare(const Series& a, const Series& b, int upto);

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);
nlohmann::json scalar_json(const Scalar& c);
Scalar scalar_from_json(const nlohmann::json& j, Mode m);

}  // namespace phf
