#include <cmath>

#include "phf/hyperfun.hpp"
#include "phf/verma.hpp"

namespace phf {

namespace {

using Key = std::pair<int, int>;

// Series in the trace variables r_1..r_{n-1}, s.
struct SeriesField {
  using T = Series;
  VarSet tv;
  int n, N;
  Mode mode;
  SeriesField(Algebra alg, int n_, int N_, Mode m) : tv(trace_vars(alg, n_)), n(n_), N(N_), mode(m) {}

  Series one() const { return Series::constant(tv, N, Scalar::one(mode)); }
  Series scalar(long p, long q = 1) const { return Series::constant(tv, N, Scalar::rational(p, q).as(mode)); }
  Series mono(const std::vector<int>& e) const {
    MultiIndex m;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0)
        throw std::logic_error("negative exponent in a trace-variable monomial");
      else if (e[i])
        m.set(int(i), e[i]);
    return Series::monomial(tv, N, m, Scalar::one(mode));
  }
  // z_j / z_k for j > k
  std::vector<int> rho(int j, int k) const {
    std::vector<int> e(tv.size(), 0);
    for (int t = k; t < j; ++t) e[t - 1]++;
    return e;
  }
  // 1/(z_a z_b)
  std::vector<int> v(int a, int b) const {
    std::vector<int> e(tv.size(), 0);
    e[n - 1]++;
    for (int t = a; t < n; ++t) e[t - 1]++;
    for (int t = b; t < n; ++t) e[t - 1]++;
    return e;
  }
  Series inv(const Series& x) const { return geometric_expand(x, Scalar::integer(-1, mode), N); }
  Series inv1m(const Series& x) const { return inv(one() - x); }
  // prod y_num / prod y_den with y_{a,b} = 1/(z_a z_b - 1) = v/(1-v)
  Series yratio(const std::vector<Key>& num, const std::vector<Key>& den) const {
    std::vector<int> e(tv.size(), 0);
    Series out = one();
    for (auto [a, b] : num) {
      auto x = v(a, b);
      for (size_t i = 0; i < e.size(); ++i) e[i] += x[i];
      out = out * inv1m(mono(x));
    }
    for (auto [a, b] : den) {
      auto x = v(a, b);
      for (size_t i = 0; i < e.size(); ++i) e[i] -= x[i];
      out = out * (one() - mono(x));
    }
    return out * mono(e);
  }
};

// Direct evaluation at a point z.
struct NumField {
  using T = std::complex<double>;
  std::vector<T> z;
  T one() const { return 1.0; }
  T scalar(long p, long q = 1) const { return double(p) / double(q); }
  T inv(const T& x) const { return 1.0 / x; }
  T y(int a, int b) const { return 1.0 / (z[a - 1] * z[b - 1] - 1.0); }
  T yratio(const std::vector<Key>& num, const std::vector<Key>& den) const {
    T out = 1.0;
    for (auto [a, b] : num) out *= y(a, b);
    for (auto [a, b] : den) out /= y(a, b);
    return out;
  }
};

template <class F>
using WMap = std::map<Key, typename F::T>;

template <class F>
WMap<F> initial_w(const F& f, int n, bool double_superdiagonal) {
  WMap<F> w;
  for (int r1 = 2; r1 <= n - 1; ++r1)
    for (int r2 = r1; r2 <= n - 1; ++r2) {
      std::vector<Key> num, den;
      for (int t = 0; t <= n - 1 - r2; ++t) {
        num.push_back({r2 + t, r1 + t});
        den.push_back({r2 + 1 + t, r1 + t});
      }
      w[{r2, r1}] = f.yratio(num, den);
    }
  for (int k = 1; k <= n - 1; ++k) w[{k, n}] = f.yratio({{n, k}}, {});
  for (int r1 = 1; r1 <= n - 1; ++r1)
    for (int r2 = r1 + 1; r2 <= n - 1; ++r2) {
      std::vector<Key> num, den;
      for (int t = 0; t <= n - r2; ++t) num.push_back({r2 + t, r1 + t});
      for (int t = 0; t <= n - 1 - r2; ++t) den.push_back({r2 + t, r1 + 1 + t});
      w[{r1, r2}] = f.yratio(num, den);
    }
  if (double_superdiagonal)
    for (int r = 1; r <= n - 1; ++r) w[{r, r + 1}] = w[{r, r + 1}] * f.scalar(2);
  return w;
}

template <class F>
const typename F::T& w_at(const WMap<F>& w, int a, int b) {
  auto it = w.find({a, b});
  if (it == w.end())
    throw PreconditionError("w_{" + std::to_string(a) + "," + std::to_string(b) + "} lies outside the index grid");
  return it->second;
}

// Scales the entries named in `ups` by factor (mul) or its inverse (div); keys off the grid are skipped.
template <class F>
void scale(const F& f, WMap<F>& next, const std::vector<std::pair<Key, bool>>& ups, const typename F::T& factor) {
  typename F::T invf = f.inv(factor);
  for (auto& [k, up] : ups) {
    auto it = next.find(k);
    if (it == next.end()) continue;
    it->second = it->second * (up ? factor : invf);
  }
}

// levels[L] holds w^{(L)} for L = 1..2n.
template <class F>
std::vector<WMap<F>> w_levels(const F& f, int n, bool double_superdiagonal) {
  std::vector<WMap<F>> lv(2 * n + 1);
  lv[2 * n] = initial_w(f, n, double_superdiagonal);
  for (int k = n; k >= 1; --k) {
    // 2k -> 2k-1
    {
      const WMap<F>& cur = lv[2 * k];
      WMap<F> next = cur;
      int iota = std::max(1, 2 * k - 1 - n);
      for (int r = iota; r <= k - 2; ++r) {
        auto G = f.one() + w_at<F>(cur, r, 2 * k - r - 1) + w_at<F>(cur, 2 * k - r - 2, r + 1);
        std::vector<std::pair<Key, bool>> ups;
        for (int s = 1; s <= r; ++s) {
          ups.push_back({{2 * k - 2 - 2 * r + s, s}, true});
          ups.push_back({{s, 2 * k - 2 - 2 * r + s}, true});
          ups.push_back({{2 * k - 2 - 2 * r + s, s + 1}, false});
          ups.push_back({{s, 2 * k - 1 - 2 * r + s}, false});
        }
        scale(f, next, ups, G);
      }
      if (k >= 2) {
        auto H = f.one() + w_at<F>(cur, k - 1, k);
        std::vector<std::pair<Key, bool>> ups;
        for (int r = 1; r <= k - 1; ++r) ups.push_back({{r, r}, true});
        for (int s = 1; s <= k - 2; ++s) ups.push_back({{s, s + 1}, false});
        scale(f, next, ups, H);
      }
      lv[2 * k - 1] = std::move(next);
    }
    if (k - 1 < 1) break;
    // 2(k-1)+1 -> 2(k-1)
    {
      int kk = k - 1;
      const WMap<F>& cur = lv[2 * kk + 1];
      WMap<F> next = cur;
      int ell = std::max(1, 2 * kk - n);
      for (int r = ell; r <= kk - 1; ++r) {
        auto Fr = f.one() + w_at<F>(cur, r, 2 * kk - r) + w_at<F>(cur, 2 * kk - r - 1, r + 1);
        std::vector<std::pair<Key, bool>> ups;
        for (int s = 1; s <= r; ++s) {
          ups.push_back({{2 * kk - 1 - 2 * r + s, s}, true});
          ups.push_back({{s, 2 * kk - 1 - 2 * r + s}, true});
          ups.push_back({{2 * kk - 1 - 2 * r + s, s + 1}, false});
          ups.push_back({{s, 2 * kk - 2 * r + s}, false});
        }
        scale(f, next, ups, Fr);
      }
      lv[2 * kk] = std::move(next);
    }
  }
  return lv;
}

// xi^C_{r2,r1}, 1 <= r1 <= r2 <= n.
template <class F>
std::map<Key, typename F::T> xi_C_generic(const F& f, int n, const XiCOptions& opt) {
  using T = typename F::T;
  std::map<Key, T> xi;
  auto lv = w_levels(f, n, opt.double_superdiagonal);
  for (int i = 1; i <= n; ++i) {
    std::vector<Key> num;
    for (int t = i; t <= n; ++t) num.push_back({n, t});
    long sign = (n + i + 1) % 2 ? -1 : 1;
    xi[{n, i}] = f.yratio(num, {}) * f.scalar(sign, i == n ? 4 : 2);
  }
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<Key> num;
    for (int t = i; t <= n; ++t) num.push_back({t, t});
    T x = f.yratio(num, {}) * f.scalar(-1, 4);
    for (int k = i + 1; k <= n; ++k) x = x * (f.one() + w_at<F>(lv[2 * k], k - 1, k));
    xi[{i, i}] = x;
  }
  for (int r1 = 1; r1 <= n - 1; ++r1)
    for (int r2 = r1 + 1; r2 <= n - 1; ++r2) {
      std::vector<Key> num;
      for (int t = 0; t <= n - 1 - r2; ++t) num.push_back({r2 + t, r1 + t});
      for (int t = n + r1 - r2; t <= n; ++t) num.push_back({n, t});
      long sign = (r1 + r2 + 1) % 2 ? -1 : 1;
      T x = f.yratio(num, {}) * f.scalar(sign, 2);
      int d = r2 - r1;
      if (d % 2) {
        int lo = opt.printed_range ? (d + 3) / 2 : 2;
        for (int k = lo; k <= n - 1; ++k) {
          int a = (2 * k + r1 - r2 - 1) / 2, b = (2 * k - r1 + r2 + 1) / 2;
          if (!opt.printed_range && (a < std::max(1, 2 * k - n) || a > k - 1 || a < r1)) continue;
          x = x * (f.one() + w_at<F>(lv[2 * k + 1], a, b) + w_at<F>(lv[2 * k + 1], b - 1, a + 1));
        }
      } else {
        int lo = opt.printed_range ? (d + 2) / 2 : 1;
        for (int k = lo; k <= n - 1; ++k) {
          int a = (2 * k + r1 - r2) / 2, b = (2 * k - r1 + r2 + 2) / 2;
          int kk = k + 1;
          if (!opt.printed_range && (a < std::max(1, 2 * kk - 1 - n) || a > kk - 2 || a < r1)) continue;
          x = x * (f.one() + w_at<F>(lv[2 * k + 2], a, b) + w_at<F>(lv[2 * k + 2], b - 1, a + 1));
        }
      }
      xi[{r2, r1}] = x;
    }
  return xi;
}

std::vector<Series> xi_A_impl(const SeriesField& f, XiA variant) {
  VarSet A(Lattice::A, f.n);
  std::vector<Series> out;
  for (int v = 0; v < A.size(); ++v) {
    auto [r2, r1] = A.pair(v);
    Series x = f.one();
    for (int s = r1; s < r2; ++s) {
      Series rho = f.mono(f.rho(r2, s));
      Series g = f.inv1m(rho) * Scalar::integer(-1, f.mode);
      x = x * (variant == XiA::LargerIndex ? rho * g : g);
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Series> xi_A(const VarSet& tv, int n, int N, XiA variant) {
  Mode mode = Mode::Exact;
  SeriesField f(tv.size() == n ? Algebra::SP : Algebra::GL, n, N, mode);
  return xi_A_impl(f, variant);
}

std::complex<double> xi_A_value(const std::vector<std::complex<double>>& z, int r2, int r1, XiA variant) {
  std::complex<double> x = 1.0;
  for (int s = r1; s < r2; ++s) x *= (variant == XiA::LargerIndex ? z[r2 - 1] : z[s - 1]) / (z[r2 - 1] - z[s - 1]);
  return x;
}

std::vector<Series> xi_C(const VarSet& tv, int n, int N, const XiCOptions& opt) {
  (void)tv;
  SeriesField f(Algebra::SP, n, N, Mode::Exact);
  auto m = xi_C_generic(f, n, opt);
  VarSet C(Lattice::C, n);
  std::vector<Series> out;
  for (int v = C.a_size(); v < C.size(); ++v) {
    auto [row, col] = C.pair(v);
    out.push_back(m.at({row - n, col}));
  }
  return out;
}

std::map<std::pair<int, int>, std::complex<double>> xi_C_values(const std::vector<std::complex<double>>& z,
                                                                 const XiCOptions& opt) {
  NumField f{z};
  return xi_C_generic(f, int(z.size()), opt);
}

std::vector<std::complex<double>> z_from_trace_vars(Algebra alg, int n, const std::vector<std::complex<double>>& vals) {
  std::vector<std::complex<double>> z(n);
  if (alg == Algebra::GL) {
    z[0] = 1.0;
    for (int i = 1; i < n; ++i) z[i] = z[i - 1] * vals[i - 1];
  } else {
    z[n - 1] = 1.0 / std::sqrt(vals[n - 1]);
    for (int i = n - 2; i >= 0; --i) z[i] = z[i + 1] / vals[i];
  }
  return z;
}

TraceSeries closed_trace_gl2(const std::vector<Scalar>& lambda, const Scalar& mu, int N) {
  if (lambda.size() != 2) throw PreconditionError("gl(2) weight has two entries");
  check_trace_params(Algebra::GL, lambda, mu, N);
  Mode mode = mu.mode();
  SeriesField f(Algebra::GL, 2, N, mode);
  Scalar sigma = lambda[0] - lambda[1];
  Series r = f.mono({1});
  Series xi = r * f.inv1m(r) * Scalar::integer(-1, mode);
  Series F = compose(gauss_2f1(mu + 1, -mu, -sigma, N), {xi}, N);
  return {lambda, f.inv1m(r) * F};
}

TraceSeries closed_trace_A(const std::vector<Scalar>& lambda, const Scalar& mu, int N, XiA xi, ThetaSlot slot) {
  check_trace_params(Algebra::GL, lambda, mu, N);
  int n = int(lambda.size());
  Mode mode = mu.mode();
  SeriesField f(Algebra::GL, n, N, mode);
  HyperParams p;
  p.family = Family::A;
  p.n = n;
  p.tau.assign(n, mu + 1);
  p.tau[n - 1] = -mu;
  p.theta = slot == ThetaSlot::MinusSigma ? lambda[n - 1] - lambda[n - 2] : lambda[n - 1] - mu;
  Series X = build_XA(p, N);
  Series body = compose(X, xi_A_impl(f, xi), N);
  for (int j = 2; j <= n; ++j)
    for (int k = 1; k < j; ++k) body = body * f.inv1m(f.mono(f.rho(j, k)));
  return {lambda, body};
}

TraceSeries closed_trace_C(const Scalar& lambda_n, int n, int N, XiA xi, const XiCOptions& opt) {
  check_trace_params(Algebra::SP, {lambda_n}, lambda_n, N);
  Mode mode = lambda_n.mode();
  SeriesField f(Algebra::SP, n, N, mode);
  HyperParams p;
  p.family = Family::C;
  p.n = n;
  p.tau.assign(n, Scalar::rational(1, 2).as(mode));
  p.theta = -lambda_n;
  Series X = build_XC(p, N);
  std::vector<Series> subs = xi_A_impl(f, xi);
  auto xc = xi_C_generic(f, n, opt);
  VarSet C(Lattice::C, n);
  for (int v = C.a_size(); v < C.size(); ++v) {
    auto [row, col] = C.pair(v);
    subs.push_back(xc.at({row - n, col}));
  }
  Series body = compose(X, subs, N);
  for (int j = 2; j <= n; ++j)
    for (int k = 1; k < j; ++k) body = body * f.inv1m(f.mono(f.rho(j, k)));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b) body = body * f.inv1m(f.mono(f.v(a, b)));
  std::vector<Scalar> pre;
  for (int k = 1; k <= n; ++k) pre.push_back(lambda_n - Scalar::rational(n - k, 2).as(mode));
  return {pre, body};
}

namespace {

const char* xi_name(XiA x) { return x == XiA::LargerIndex ? "xiA=z_r2" : "xiA=z_s"; }

void compare_into(CheckReport& rep, const std::string& name, const TraceSeries& closed, const TraceSeries& oracle,
                  int N, std::vector<std::string>& winners) {
  SeriesDiff d = compare(closed.body, oracle.body, N);
  bool same_pre = closed.prefactor == oracle.prefactor;
  bool ok = same_pre && (rep.mode == Mode::Exact ? d.exactly_zero : d.max_abs <= rep.tolerance);
  rep.details["variants"][name] = {
      {"maxDiscrepancy", d.max_abs}, {"worst", d.worst}, {"prefactorMatches", same_pre}, {"pass", ok}};
  if (ok) winners.push_back(name);
}

}  // namespace

CheckReport compare_trace(Algebra alg, const std::vector<Scalar>& lambda, const Scalar& mu, int n, int N) {
  CheckReport rep;
  rep.truncation = N;
  rep.mode = lambda.empty() ? Mode::Exact : lambda[0].mode();
  rep.tolerance = rep.mode == Mode::Float ? 1e-9 : 0.0;
  std::vector<std::string> winners;
  if (alg == Algebra::GL) {
    if (int(lambda.size()) != n) throw PreconditionError("weight length must equal n");
    rep.id = n == 2 ? "trace-gl2" : "trace-gln";
    check_trace_params(alg, lambda, mu, N);
    TraceSeries oracle = trace_oracle(Verma::gl(lambda), mu, N);
    rep.details["oracle"] = to_json(oracle);
    if (n == 2) {
      std::vector<std::string> w2;
      compare_into(rep, "gauss", closed_trace_gl2(lambda, mu, N), oracle, N, w2);
      rep.details["orderOneCoefficient"] = scalar_json(oracle.body.coeff(MultiIndex::unit(0)));
      if (w2.empty()) rep.failed_sub = true;
    }
    for (XiA x : {XiA::LargerIndex, XiA::SmallerIndex})
      for (ThetaSlot t : {ThetaSlot::MinusSigma, ThetaSlot::LambdaNMinusMu}) {
        std::string name = std::string(xi_name(x)) + "," + (t == ThetaSlot::MinusSigma ? "theta=-sigma" : "theta=lambda_n-mu");
        try {
          compare_into(rep, name, closed_trace_A(lambda, mu, N, x, t), oracle, N, winners);
        } catch (const PreconditionError& e) {
          rep.details["variants"][name] = {{"pass", false}, {"precondition", e.what()}};
        }
      }
  } else {
    if (lambda.size() != 1) throw PreconditionError("sp(2n) weight is given by lambda_n alone");
    rep.id = "trace-sp";
    check_trace_params(alg, lambda, mu, N);
    TraceSeries oracle = trace_oracle(Verma::sp(n, lambda[0]), mu, N);
    rep.details["oracle"] = to_json(oracle);
    for (XiA x : {XiA::LargerIndex, XiA::SmallerIndex})
      for (bool dbl : {false, true}) {
        std::string name = std::string(xi_name(x)) + (dbl ? ",w_{r,r+1} doubled" : ",w as printed");
        try {
          compare_into(rep, name, closed_trace_C(lambda[0], n, N, x, {dbl, false}), oracle, N, winners);
        } catch (const PreconditionError& e) {
          rep.details["variants"][name] = {{"pass", false}, {"precondition", e.what()}};
        }
      }
  }
  rep.details["agreeing"] = winners;
  if (winners.empty()) {
    rep.exact_nonzero = rep.mode == Mode::Exact;
    double best = INFINITY;
    for (auto& [k, v] : rep.details["variants"].items())
      if (v.contains("maxDiscrepancy")) best = std::min(best, v["maxDiscrepancy"].get<double>());
    rep.max_discrepancy = std::isfinite(best) ? best : NAN;
    rep.worst = "no reading agrees";
  }
  rep.finish();
  return rep;
}

}  // namespace phf
