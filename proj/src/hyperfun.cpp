#include "phf/hyperfun.hpp"

#include <stdexcept>

namespace phf {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Gauss: return "2F1";
  }
  return "?";
}

std::string HyperParams::str() const {
  std::string s = std::string(family_name(family)) + "(";
  for (size_t i = 0; i < tau.size(); ++i) s += (i ? "," : "") + tau[i].str();
  return s + ";" + theta.str() + ")";
}

static void check_index(const HyperParams& p, int k) {
  if (k < 1 || k > p.n) throw std::out_of_range("parameter shift index out of range");
}

HyperParams shifted(const HyperParams& p, const ParamShift& s) {
  HyperParams q = p;
  switch (s.kind) {
    case ParamShift::AB:
      check_index(p, s.i), check_index(p, s.j);
      if (s.i == s.j) throw std::invalid_argument("ShiftAB needs distinct indices");
      q.tau[s.i - 1] = q.tau[s.i - 1] + 1;
      q.tau[s.j - 1] = q.tau[s.j - 1] - 1;
      break;
    case ParamShift::Top:
      check_index(p, s.i), check_index(p, s.j);
      if (s.i >= s.j) throw std::invalid_argument("ShiftTop needs j1 < j2");
      q.tau[s.i - 1] = q.tau[s.i - 1] + 1;
      q.tau[s.j - 1] = q.tau[s.j - 1] + 1;
      q.theta = q.theta + 1;
      break;
    case ParamShift::Double:
      check_index(p, s.i);
      q.tau[s.i - 1] = q.tau[s.i - 1] + 2;
      q.theta = q.theta + 1;
      break;
    case ParamShift::SingleB:
      check_index(p, s.i);
      q.tau[s.i - 1] = q.tau[s.i - 1] + long(s.single_b_step);
      q.theta = q.theta + 1;
      break;
  }
  return q;
}

HyperParams shift_by(const HyperParams& p, const std::vector<long>& dtau, long dtheta) {
  HyperParams q = p;
  for (size_t i = 0; i < dtau.size() && i < q.tau.size(); ++i) q.tau[i] = q.tau[i] + dtau[i];
  q.theta = q.theta + dtheta;
  return q;
}

VarSet varset_for(Family f, int n) {
  switch (f) {
    case Family::A: return VarSet(Lattice::A, n);
    case Family::B:
    case Family::C: return VarSet(Lattice::C, n);
    case Family::D: return VarSet(Lattice::D, n);
    case Family::Gauss: return VarSet::line();
  }
  return VarSet::line();
}

static Scalar pole_checked_rising(const Scalar& c, long m, const char* what) {
  Scalar r = rising(c, m);
  if (r.is_zero()) throw PreconditionError(std::string("pole: (") + what + ")_" + std::to_string(m) + " vanishes");
  return r;
}

static void check_params(const HyperParams& p) {
  size_t want = p.family == Family::Gauss ? 2 : size_t(p.n);
  if (p.tau.size() != want) throw std::invalid_argument("wrong number of tau parameters");
  for (auto& t : p.tau)
    if (t.mode() != p.theta.mode()) throw ModeMismatch("parameters in mixed modes");
}

Series gauss_2f1(const Scalar& a, const Scalar& b, const Scalar& c, int N) {
  Mode m = c.mode();
  if (a.mode() != m || b.mode() != m) throw ModeMismatch("parameters in mixed modes");
  Series s(VarSet::line(), N, m);
  Scalar t = Scalar::one(m);
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      Scalar den = (c + (k - 1)) * Scalar::integer(k, m);
      if ((c + (k - 1)).is_zero()) throw PreconditionError("pole: c is a non-positive integer");
      t = t * (a + (k - 1)) * (b + (k - 1)) / den;
    }
    s.add_term(MultiIndex::unit(0, k), t);
  }
  return s;
}

Scalar x_coefficient(const HyperParams& p, const VarSet& vs, const MultiIndex& m) {
  Mode mode = p.mode();
  if (p.family == Family::Gauss) {
    int k = m.get(0);
    return rising(p.tau[0], k) * rising(p.tau[1], k) /
           (factorial(k, mode) * pole_checked_rising(p.theta, k, "c"));
  }
  auto st = stats(vs, m);
  int n = p.n;
  Scalar num = Scalar::one(mode);
  Scalar den = Scalar::one(mode);
  for (auto [v, e] : m.entries()) den *= factorial(e, mode);
  switch (p.family) {
    case Family::A:
      for (int s = 1; s <= n - 1; ++s) num *= rising(p.tau[s - 1] - st.under[s], st.over[s]);
      num *= rising(p.tau[n - 1], st.under[n]);
      den *= pole_checked_rising(p.theta, st.under[n], "theta");
      break;
    case Family::C:
      for (int r = 1; r <= n; ++r) num *= rising(p.tau[r - 1] - st.under[r], st.over[r] + st.c[r]);
      den *= pole_checked_rising(p.theta, st.c_total, "theta");
      break;
    case Family::B:
      for (int r = 1; r <= n; ++r) num *= rising(p.tau[r - 1] - st.under[r], st.over[r] + st.b[r]);
      den *= pole_checked_rising(p.theta, st.c_total, "theta");
      break;
    case Family::D:
      for (int r = 1; r <= n; ++r) num *= rising(p.tau[r - 1] - st.under[r], st.over[r] + st.d[r]);
      den *= pole_checked_rising(p.theta, st.d_total, "theta");
      break;
    default:
      break;
  }
  return num / den;
}

static void precheck_theta(const HyperParams& p, int N) {
  // the theta Pochhammer reaches index N at most
  pole_checked_rising(p.theta, N, p.family == Family::Gauss ? "c" : "theta");
}

static Series build(const HyperParams& p, int N, Family expect) {
  check_params(p);
  if (p.family != expect) throw std::invalid_argument("parameter family does not match the builder");
  VarSet vs = varset_for(p.family, p.n);
  precheck_theta(p, vs.size() ? N : 0);
  Series s(vs, N, p.mode());
  for (auto& m : enumerate_upto(vs, N)) s.add_term(m, x_coefficient(p, vs, m));
  return s;
}

Series build_XA(const HyperParams& p, int N) { return build(p, N, Family::A); }
Series build_XB(const HyperParams& p, int N) { return build(p, N, Family::B); }
Series build_XC(const HyperParams& p, int N) { return build(p, N, Family::C); }
Series build_XD(const HyperParams& p, int N) { return build(p, N, Family::D); }

Series build_X(const HyperParams& p, int N) {
  if (p.family == Family::Gauss) {
    check_params(p);
    return gauss_2f1(p.tau[0], p.tau[1], p.theta, N);
  }
  return build(p, N, p.family);
}

Scalar term_ratio(const HyperParams& p, const VarSet& vs, const MultiIndex& m, int var) {
  Mode mode = p.mode();
  Scalar next = Scalar::integer(m.get(var) + 1, mode);
  if (p.family == Family::Gauss) {
    long k = m.get(0);
    return (p.tau[0] + k) * (p.tau[1] + k) / ((p.theta + k) * next);
  }
  auto st = stats(vs, m);
  int n = p.n;
  auto [j, k] = vs.pair(var);
  auto tau = [&](int r) { return p.tau[r - 1]; };
  if (j <= n) {
    int r2 = j, r1 = k;
    if (p.family == Family::A) {
      Scalar first = tau(r1) - st.under[r1] + st.over[r1];
      if (r2 < n)
        return (tau(r2) - st.under[r2] - 1) * first / ((tau(r2) - 1 - st.under[r2] + st.over[r2]) * next);
      return (tau(n) + st.under[n]) * first / ((p.theta + st.under[n]) * next);
    }
    const std::vector<long>& x = p.family == Family::C ? st.c : (p.family == Family::B ? st.b : st.d);
    return (tau(r1) - st.under[r1] + st.over[r1] + x[r1]) * (tau(r2) - 1 - st.under[r2]) /
           (next * (tau(r2) - 1 - st.under[r2] + st.over[r2] + x[r2]));
  }
  int r2 = j - n, r1 = k;
  const std::vector<long>& x = p.family == Family::C ? st.c : (p.family == Family::B ? st.b : st.d);
  long total = p.family == Family::D ? st.d_total : st.c_total;
  Scalar den = next * (p.theta + total);
  if (r1 != r2)
    return (tau(r1) - st.under[r1] + st.over[r1] + x[r1]) * (tau(r2) - st.under[r2] + st.over[r2] + x[r2]) / den;
  Scalar base = tau(r1) - st.under[r1] + st.over[r1] + x[r1];
  if (p.family == Family::C) return base * (base + 1) / den;
  return base / den;
}

Series build_by_ratios(const HyperParams& p, int N) {
  check_params(p);
  VarSet vs = varset_for(p.family, p.n);
  Series s(vs, N, p.mode());
  std::map<MultiIndex, Scalar> coef;
  coef.emplace(MultiIndex(), Scalar::one(p.mode()));
  for (auto& m : enumerate_upto(vs, N)) {
    if (m.degree() == 0) continue;
    int v = m.entries().front().first;
    MultiIndex prev = m;
    prev.add(v, -1);
    Scalar c = coef.at(prev) * term_ratio(p, vs, prev, v);
    coef.emplace(m, c);
  }
  for (auto& [m, c] : coef) s.add_term(m, c);
  return s;
}

}  // namespace phf
