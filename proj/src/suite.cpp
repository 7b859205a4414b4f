#include "phf/suite.hpp"

#include <cmath>

#include "phf/hyperfun.hpp"
#include "phf/identities.hpp"
#include "phf/integrable.hpp"
#include "phf/pathpoly.hpp"
#include "phf/verma.hpp"

namespace phf {

using nlohmann::json;

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> ids{
      "contiguity-a", "contiguity-b",   "contiguity-c", "contiguity-d",   "pde-a",        "pde-c",
      "pde-bd",       "kernel-product", "gauss-ode",    "integral-a",     "inverse-5.28", "weyl-6.2",
      "weyl-6.3",     "weyl-6.4",       "weyl-6.5",     "laplacian-eigen", "identity-6.8", "theorem-2.2",
      "theorem-7.1",  "trace-gl2",      "trace-gln",    "trace-sp",       "xa-2f1",       "properties"};
  return ids;
}

namespace {

bool has(const json& p, const char* key) { return p.is_object() && p.contains(key); }

Scalar param(const json& p, const char* key, Mode m) {
  try {
    return scalar_from_json(p.at(key), m);
  } catch (const json::exception&) {
    throw ParseError(std::string("bad value for parameter '") + key + "'");
  }
}

std::vector<Scalar> param_list(const json& p, const char* key, Mode m) {
  const json& a = p.at(key);
  if (!a.is_array()) throw ParseError(std::string("parameter '") + key + "' must be a list");
  std::vector<Scalar> out;
  for (auto& x : a) out.push_back(scalar_from_json(x, m));
  return out;
}

Scalar param_or(const json& p, const char* key, Mode m, const Scalar& fallback) {
  return has(p, key) ? param(p, key, m) : fallback;
}

int pick(int v, int fallback) { return v >= 0 ? v : fallback; }

void mark_exact(CheckReport& r, bool ok, double size, const std::string& where) {
  if (ok) return;
  r.exact_nonzero = true;
  r.absorb_value(size, where);
}

HyperParams hyper(Family f, std::vector<Scalar> tau, Scalar theta) {
  HyperParams p;
  p.family = f;
  p.n = int(tau.size());
  p.tau = std::move(tau);
  p.theta = std::move(theta);
  return p;
}

// Rational parameters with small denominators; a non-integer theta keeps every shifted copy pole-free.
HyperParams draw_hyper(Rng& rng, const json& prm, Family f, int n) {
  std::vector<Scalar> tau;
  if (has(prm, "tau")) {
    tau = param_list(prm, "tau", Mode::Exact);
    if (int(tau.size()) != n) throw ParseError("tau must have n entries");
  } else {
    for (int i = 0; i < n; ++i) tau.push_back(rng.rational(12, 3));
  }
  Scalar theta = has(prm, "theta") ? param(prm, "theta", Mode::Exact) : rng.rational(12, 3, true);
  return hyper(f, tau, theta);
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw ParseError("unknown family '" + s + "'");
}

// One draw of a registered check.
CheckReport run_once(const std::string& id, const CheckOptions& o, Rng& rng) {
  const json& prm = o.params;
  if (id == "contiguity-a") return check_contiguity_A(draw_hyper(rng, prm, Family::A, pick(o.n, 3)), pick(o.N, 6));
  if (id == "contiguity-b") return check_contiguity_B(draw_hyper(rng, prm, Family::B, pick(o.n, 2)), pick(o.N, 5));
  if (id == "contiguity-c") return check_contiguity_C(draw_hyper(rng, prm, Family::C, pick(o.n, 2)), pick(o.N, 5));
  if (id == "contiguity-d") return check_contiguity_D(draw_hyper(rng, prm, Family::D, pick(o.n, 2)), pick(o.N, 5));
  if (id == "pde-a") return check_pde_A(draw_hyper(rng, prm, Family::A, pick(o.n, 3)), pick(o.N, 6));
  if (id == "pde-c") return check_pde_C(draw_hyper(rng, prm, Family::C, pick(o.n, 2)), pick(o.N, 5));
  if (id == "pde-bd") {
    if (has(prm, "family"))
      return check_pde_BD(draw_hyper(rng, prm, parse_family(prm.at("family").get<std::string>()), pick(o.n, 2)),
                          pick(o.N, 5));
    CheckReport r;
    r.id = "pde-bd";
    r.mode = Mode::Exact;
    r.truncation = pick(o.N, 5);
    for (Family f : {Family::B, Family::D}) {
      auto s = check_pde_BD(draw_hyper(rng, prm, f, pick(o.n, 2)), r.truncation);
      r.details[family_name(f)] = to_json(s);
      r.merge(s);
    }
    r.finish();
    return r;
  }
  if (id == "kernel-product") {
    int n = pick(o.n, 3);
    std::vector<Scalar> tau;
    if (has(prm, "tau"))
      tau = param_list(prm, "tau", Mode::Exact);
    else
      for (int i = 0; i < n; ++i) tau.push_back(rng.rational(12, 3));
    return check_kernel_product(tau, n, pick(o.N, 6));
  }
  if (id == "gauss-ode") {
    Scalar a = param_or(prm, "a", Mode::Exact, rng.rational(12, 3));
    Scalar b = param_or(prm, "b", Mode::Exact, rng.rational(12, 3));
    Scalar c = param_or(prm, "c", Mode::Exact, rng.rational(12, 3, true));
    return check_gauss_ode(a, b, c, pick(o.N, 10));
  }
  if (id == "xa-2f1") {
    Scalar a = param_or(prm, "a", Mode::Exact, rng.rational(12, 4));
    Scalar b = param_or(prm, "b", Mode::Exact, rng.rational(12, 4));
    Scalar c = param_or(prm, "c", Mode::Exact, rng.rational(12, 4, true));
    return check_xa_gauss(a, b, c, pick(o.N, 12));
  }
  if (id == "integral-a") {
    int n = pick(o.n, 2);
    std::vector<Scalar> tau;
    Scalar theta;
    if (has(prm, "tau")) {
      tau = param_list(prm, "tau", Mode::Float);
      if (int(tau.size()) != n) throw ParseError("tau must have n entries");
    } else {
      for (int i = 0; i < n; ++i) tau.push_back(Scalar(rng.uniform(0.2, 1.5)));
    }
    theta = has(prm, "theta") ? param(prm, "theta", Mode::Float)
                              : Scalar(tau[n - 1].real() + rng.uniform(0.5, 2.0));
    HyperParams p = hyper(Family::A, tau, theta);
    int vars = n * (n - 1) / 2, N = pick(o.N, 10);
    CheckReport r;
    r.id = "integral-a";
    r.mode = Mode::Float;
    r.truncation = N;
    r.tolerance = 1e-8;
    r.details["params"] = p.str();
    for (int k = 0, np = pick(o.points, 5); k < np; ++k) {
      std::vector<std::complex<double>> z;
      for (int v = 0; v < vars; ++v) z.push_back(rng.uniform(-0.1, 0.1));
      auto s = check_integral_rep_A(p, z, r.tolerance, N);
      s.id = "point " + std::to_string(k);
      r.details["points"].push_back(to_json(s));
      r.merge(s);
    }
    r.finish();
    return r;
  }
  if (id == "inverse-5.28") return check_inverse_identity(pick(o.n, 4));
  if (id.rfind("weyl-6.", 0) == 0) {
    std::string th = id.substr(5);
    int n = pick(o.n, 3);
    std::vector<Scalar> e;
    if (th == "6.3") {
      e.push_back(param_or(prm, "mu", Mode::Float, Scalar(rng.uniform(-2, 2))));
    } else {
      e.push_back(param_or(prm, "mu1", Mode::Float, Scalar(rng.uniform(-2, 2))));
      e.push_back(param_or(prm, "mu2", Mode::Float, Scalar(rng.uniform(-2, 2))));
    }
    auto r = check_theorem(th, n, e, sample_points(rng, n, pick(o.points, 20)));
    r.id = id;
    return r;
  }
  if (id == "laplacian-eigen") {
    int n = pick(o.n, 3), np = pick(o.points, 10);
    if (has(prm, "type"))
      return check_laplacian_eigen(parse_weyl_type(prm.at("type").get<std::string>()), n, sample_points(rng, n, np));
    CheckReport r;
    r.id = "laplacian-eigen";
    r.mode = Mode::Float;
    r.tolerance = 1e-10;
    for (auto [t, name] : {std::pair{WeylType::A, "A"}, {WeylType::B, "B"}, {WeylType::C, "C"}, {WeylType::D, "D"}}) {
      auto s = check_laplacian_eigen(t, n, sample_points(rng, n, np));
      s.id = name;
      r.details[name] = to_json(s);
      r.merge(s);
    }
    r.finish();
    return r;
  }
  if (id == "identity-6.8") {
    int n = pick(o.n, 3);
    return check_identity_6_8(n, sample_points(rng, n, pick(o.points, 10)));
  }
  if (id == "theorem-2.2") {
    Scalar m1 = param_or(prm, "mu1", Mode::Float, Scalar(rng.uniform(-1, 1)));
    Scalar m2 = param_or(prm, "mu2", Mode::Float, Scalar(rng.uniform(0.1, 0.9)));
    Scalar a = param_or(prm, "a", Mode::Float, Scalar(rng.uniform(-1.5, 1.5)));
    auto r = check_theorem("2.2", 2, {m1, m2, a}, sample_points_zeta(rng, pick(o.points, 10), 0.02, 0.2),
                           pick(o.N, 8));
    r.id = id;
    return r;
  }
  if (id == "theorem-7.1") {
    int n = pick(o.n, 1);
    Scalar lam = has(prm, "lambda") ? (prm.at("lambda").is_array() ? param_list(prm, "lambda", Mode::Exact).back()
                                                                   : param(prm, "lambda", Mode::Exact))
                                    : rng.rational(12, 3, true);
    auto r = check_theorem("7.1", n, {lam}, sample_points_trace(rng, n, pick(o.points, 10), 0.05), pick(o.N, 4));
    r.id = id;
    return r;
  }
  if (id == "trace-gl2" || id == "trace-gln") {
    int n = id == "trace-gl2" ? 2 : pick(o.n, 3);
    if (id == "trace-gl2" && o.n >= 0 && o.n != 2) throw ParseError("trace-gl2 has n = 2");
    Scalar mu = has(prm, "mu") ? param(prm, "mu", Mode::Exact) : rng.rational(12, 2);
    std::vector<Scalar> lambda;
    if (has(prm, "lambda")) {
      lambda = param_list(prm, "lambda", Mode::Exact);
    } else {
      Scalar ln = rng.rational(6, 2), sigma = rng.rational(12, 3, true);
      lambda.assign(n, ln);
      lambda[n - 2] = ln + sigma;
      for (int k = n - 3; k >= 0; --k) lambda[k] = lambda[k + 1] + mu;
    }
    auto r = compare_trace(Algebra::GL, lambda, mu, n, pick(o.N, n == 2 ? 8 : 4));
    r.id = id;
    return r;
  }
  if (id == "trace-sp") {
    int n = pick(o.n, 1);
    Scalar lam = has(prm, "lambda") ? (prm.at("lambda").is_array() ? param_list(prm, "lambda", Mode::Exact).back()
                                                                   : param(prm, "lambda", Mode::Exact))
                                    : rng.rational(12, 3, true);
    auto r = compare_trace(Algebra::SP, {lam}, Scalar::zero(Mode::Exact), n, pick(o.N, n == 1 ? 6 : 3));
    r.id = id;
    return r;
  }
  if (id == "properties") {
    CheckReport r;
    r.id = "properties";
    r.mode = Mode::Exact;
    std::uint64_t s = rng.engine()();
    for (auto sub : {check_brackets(pick(o.n, 3), s), check_singular_vectors(s + 1), check_pochhammer_duality(s + 2),
                     check_series_laws(s + 3)}) {
      r.details[sub.id] = to_json(sub);
      r.merge(sub);
    }
    r.finish();
    return r;
  }
  throw ParseError("unknown check id '" + id + "'");
}

}  // namespace

CheckReport run_check(const std::string& id, const CheckOptions& opt) {
  bool known = false;
  for (auto& k : registered_checks()) known |= k == id;
  if (!known) throw ParseError("unknown check id '" + id + "'");
  if (opt.draws < 1) throw ParseError("draws must be positive");
  if (!opt.params.is_object()) throw ParseError("params must be a JSON object");
  Rng rng(opt.seed);
  // Random draws that land on a precondition are redrawn; user-given parameters are not.
  bool user_params = !opt.params.empty();
  auto once = [&]() {
    for (int attempt = 0;; ++attempt) {
      try {
        return run_once(id, opt, rng);
      } catch (const PreconditionError&) {
        if (user_params || attempt >= 20) throw;
      }
    }
  };
  if (opt.draws == 1) {
    CheckReport r = once();
    r.seed = opt.seed;
    return r;
  }
  CheckReport agg;
  agg.id = id;
  bool all = true;
  for (int d = 0; d < opt.draws; ++d) {
    CheckReport s = once();
    if (d == 0) {
      agg.mode = s.mode;
      agg.truncation = s.truncation;
      agg.tolerance = s.tolerance;
    }
    all = all && s.pass;
    json sj = to_json(s);
    s.id = "draw " + std::to_string(d);
    agg.merge(s);
    agg.details["draws"].push_back(std::move(sj));
  }
  agg.pass = all;
  agg.seed = opt.seed;
  return agg;
}

CheckReport check_xa_gauss(const Scalar& a, const Scalar& b, const Scalar& c, int N) {
  CheckReport r;
  r.id = "xa-2f1";
  r.mode = a.mode();
  r.truncation = N;
  auto xa = build_XA(hyper(Family::A, {a, b}, c), N);
  auto g = gauss_2f1(a, b, c, N);
  r.details["params"] = "a=" + a.str() + ",b=" + b.str() + ",c=" + c.str();
  for (int k = 0; k <= N; ++k) {
    Scalar d = xa.coeff(MultiIndex::unit(0, k)) - g.coeff(MultiIndex::unit(0, k));
    mark_exact(r, d.is_zero(), d.abs(), "degree " + std::to_string(k));
  }
  r.finish();
  return r;
}

CheckReport check_brackets(int n_max, std::uint64_t seed) {
  CheckReport r;
  r.id = "brackets";
  r.mode = Mode::Exact;
  Rng rng(seed);
  auto run = [&](const Verma& M, int max_degree, Verma::Rule rule, const std::string& tag) {
    long bad = 0;
    auto gens = M.generators();
    for (int d = 0; d <= max_degree; ++d)
      for (auto& a : enumerate(M.pbw(), d))
        for (Gen g : gens)
          for (Gen h : gens) {
            Vec lhs = M.act(g, M.act(h, a, rule), rule);
            for (auto& [m, c] : M.act(h, M.act(g, a, rule), rule)) add_to(lhs, m, -c);
            for (auto& [k, c] : M.bracket(g, h))
              for (auto& [m, x] : M.act(k, a, rule)) add_to(lhs, m, -c * x);
            bad += !lhs.empty();
          }
    r.details[tag] = bad;
    mark_exact(r, bad == 0, double(bad), tag);
  };
  for (int n = 2; n <= n_max + 1 && n <= 4; ++n) {
    std::vector<Scalar> lambda;
    for (int k = 0; k < n; ++k) lambda.push_back(rng.rational(12, 3));
    run(Verma::gl(lambda), n == 4 ? 2 : 3, Verma::Rule::Formula, "gl(" + std::to_string(n) + ")");
  }
  for (int n = 1; n <= n_max; ++n) {
    Verma M = Verma::sp(n, rng.rational(12, 3, true));
    int deg = n == 3 ? 2 : 3;
    run(M, deg, Verma::Rule::Formula, "sp(" + std::to_string(2 * n) + ") closed rules");
    run(M, deg, Verma::Rule::Straighten, "sp(" + std::to_string(2 * n) + ") rewriting");
  }
  r.finish();
  return r;
}

CheckReport check_singular_vectors(std::uint64_t seed) {
  CheckReport r;
  r.id = "singular-vectors";
  r.mode = Mode::Exact;
  Rng rng(seed);
  auto add = [&](const Verma& M, const Scalar& mu, int N, const std::string& tag) {
    auto s = verify_singular(M, singular_vector(M, mu, N), mu, N);
    s.id = tag;
    r.details[tag] = s.pass;
    r.merge(s);
  };
  for (int n : {2, 3}) {
    Scalar mu = rng.rational(12, 2), ln = rng.rational(6, 2), sigma = rng.rational(12, 3, true);
    std::vector<Scalar> lambda(n, ln);
    lambda[n - 2] = ln + sigma;
    for (int k = n - 3; k >= 0; --k) lambda[k] = lambda[k + 1] + mu;
    add(Verma::gl(lambda), mu, 5, "gl(" + std::to_string(n) + ")");
  }
  for (int n : {1, 2}) add(Verma::sp(n, rng.rational(12, 3, true)), Scalar(0L), 6, "sp(" + std::to_string(2 * n) + ")");
  r.finish();
  return r;
}

CheckReport check_pochhammer_duality(std::uint64_t seed, int count, int max_i) {
  CheckReport r;
  r.id = "falling-rising-duality";
  r.mode = Mode::Exact;
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    Scalar c = rng.rational(12, 6);
    for (int i = 0; i <= max_i; ++i) {
      Scalar rhs = rising(-c, i);
      if (i % 2) rhs = -rhs;
      Scalar d = falling(c, i) - rhs;
      mark_exact(r, d.is_zero(), d.abs(), "c=" + c.str() + ",i=" + std::to_string(i));
    }
  }
  r.finish();
  return r;
}

CheckReport check_series_laws(std::uint64_t seed, int trials) {
  CheckReport r;
  r.id = "series-laws";
  r.mode = Mode::Exact;
  Rng rng(seed);
  VarSet vs(Lattice::A, 3);
  auto random_series = [&](int N) {
    Series s(vs, N, Mode::Exact);
    for (auto& m : enumerate_upto(vs, N))
      if (rng.integer(0, 2) == 0) s.add_term(m, rng.rational(5, 3));
    return s;
  };
  for (int t = 0; t < trials; ++t) {
    int N = 1 + int(rng.integer(0, 4));
    auto a = random_series(N), b = random_series(N), c = random_series(N);
    r.absorb(compare(a * b, b * a, N), "commutativity");
    r.absorb(compare((a * b) * c, a * (b * c), N), "associativity");
    r.absorb(compare(a * (b + c), a * b + a * c, N), "distributivity");
    auto f = random_series(5);
    f.add_term(MultiIndex(), Scalar(1L) - f.constant_term());
    Scalar e1 = rng.rational(6, 3), e2 = rng.rational(6, 3);
    r.absorb(compare(geometric_expand(f, e1, 5) * geometric_expand(f, e2, 5), geometric_expand(f, e1 + e2, 5), 5),
             "binomial exponent law");
    auto g = random_series(6);
    int v = int(rng.integer(0, vs.size() - 1));
    r.absorb(compare(partial(mul_var(g, v), v) - mul_var(partial(g, v), v), g, 5), "[d/dz, z] = 1");
    r.absorb(compare(euler_op(g, {v}), mul_var(partial(g, v), v), 5), "Euler operator");
  }
  r.finish();
  return r;
}

Profile parse_profile(const std::string& s) {
  if (s == "quick") return Profile::Quick;
  if (s == "desk") return Profile::Desk;
  if (s == "full") return Profile::Full;
  throw ParseError("unknown profile '" + s + "'");
}

namespace {

// Runs each listed configuration with its own seed and merges the reports.
CheckReport combine(const std::string& id, std::uint64_t seed, const std::vector<std::pair<std::string, CheckOptions>>& runs) {
  CheckReport r;
  r.id = id;
  r.seed = seed;
  bool all = true;
  std::uint64_t k = 0;
  for (auto [check, o] : runs) {
    o.seed = seed + 1000 * k++;
    CheckReport s;
    try {
      s = run_check(check, o);
    } catch (const PreconditionError& e) {
      s.id = check;
      s.pass = false;
      s.max_discrepancy = NAN;
      s.notes.push_back(std::string("precondition: ") + e.what());
    }
    std::string tag = check + (o.n >= 0 ? " n=" + std::to_string(o.n) : "") + (o.N >= 0 ? " N=" + std::to_string(o.N) : "");
    if (s.mode == Mode::Float) r.mode = Mode::Float;
    r.tolerance = std::max(r.tolerance, s.tolerance);
    all = all && s.pass;
    r.details["runs"].push_back({{"run", tag}, {"report", to_json(s)}});
    s.id = tag;
    r.merge(s);
  }
  r.pass = all;
  return r;
}

CheckOptions opts(int n, int N, int draws = 1, int points = -1) {
  CheckOptions o;
  o.n = n;
  o.N = N;
  o.draws = draws;
  o.points = points;
  return o;
}

}  // namespace

std::vector<Criterion> suite_criteria(Profile p) {
  const bool quick = p == Profile::Quick, full = p == Profile::Full;
  // criteria that state no draw count use five draws per configuration
  const int draws = quick ? 1 : full ? 10 : 5;
  std::vector<Criterion> c;
  c.push_back({1, "X_A at n=2 equals 2F1 to degree 12", [=](std::uint64_t s) {
                 return combine("criterion-1", s, {{"xa-2f1", opts(2, 12, quick ? 3 : 10)}});
               }});
  c.push_back({2, "gl(2) trace oracle equals the closed form", [=](std::uint64_t s) {
                 return combine("criterion-2", s, {{"trace-gl2", opts(2, full ? 10 : 8, quick ? 2 : 5)}});
               }});
  c.push_back({3, "gl(3) trace oracle equals the closed form", [=](std::uint64_t s) {
                 std::vector<std::pair<std::string, CheckOptions>> runs{{"trace-gln", opts(3, quick ? 3 : 4)}};
                 if (full) runs.push_back({"trace-gln", opts(3, 5)}), runs.push_back({"trace-gln", opts(4, 3)});
                 return combine("criterion-3", s, runs);
               }});
  c.push_back({4, "sp(2n) trace oracle equals the closed form", [=](std::uint64_t s) {
                 std::vector<std::pair<std::string, CheckOptions>> runs{{"trace-sp", opts(1, 6)},
                                                                         {"trace-sp", opts(2, quick ? 2 : 3)}};
                 if (full) runs.push_back({"trace-sp", opts(2, 6)});
                 return combine("criterion-4", s, runs);
               }});
  c.push_back({5, "identity suite exact", [=](std::uint64_t s) {
                 std::vector<std::pair<std::string, CheckOptions>> runs{
                     {"contiguity-a", opts(3, quick ? 4 : 6, draws)},
                     {"pde-a", opts(3, quick ? 4 : 6, draws)},
                     {"contiguity-c", opts(2, 5, draws)},
                     {"pde-c", opts(2, 5, draws)},
                     {"contiguity-b", opts(2, 5, draws)},
                     {"contiguity-d", opts(2, 5, draws)},
                     {"pde-bd", opts(2, 5, draws)},
                     {"kernel-product", opts(3, 6, draws)},
                     {"gauss-ode", opts(-1, 10, draws)}};
                 for (int n = 2; n <= (quick ? 5 : 8); ++n) runs.push_back({"inverse-5.28", opts(n, -1)});
                 return combine("criterion-5", s, runs);
               }});
  c.push_back({6, "Euler integral against the truncated series", [=](std::uint64_t s) {
                 return combine("criterion-6", s,
                                {{"integral-a", opts(2, 10, draws, 5)}, {"integral-a", opts(3, 10, draws, 5)}});
               }});
  c.push_back({7, "triple-sum identity", [=](std::uint64_t s) {
                 std::vector<std::pair<std::string, CheckOptions>> runs;
                 for (int n = 3; n <= 6; ++n) runs.push_back({"identity-6.8", opts(n, -1, 1, 10)});
                 return combine("criterion-7", s, runs);
               }});
  c.push_back({8, "Laplacian eigen-identities", [=](std::uint64_t s) {
                 std::vector<std::pair<std::string, CheckOptions>> runs;
                 for (int n = 2; n <= 4; ++n) runs.push_back({"laplacian-eigen", opts(n, -1, 1, 10)});
                 return combine("criterion-8", s, runs);
               }});
  c.push_back({9, "Weyl-variation eigenfunctions", [=](std::uint64_t s) {
                 std::vector<std::pair<std::string, CheckOptions>> runs;
                 for (const char* id : {"weyl-6.2", "weyl-6.3", "weyl-6.4", "weyl-6.5"})
                   for (int n = 2; n <= 4; ++n) runs.push_back({id, opts(n, -1, quick ? 2 : full ? 10 : 5, 20)});
                 return combine("criterion-9", s, runs);
               }});
  c.push_back({10, "Gauss-cofactor eigenfunction", [=](std::uint64_t s) {
                  return combine("criterion-10", s, {{"theorem-2.2", opts(2, 8, draws, 10)}});
                }});
  c.push_back({11, "type C trace eigenfunction", [=](std::uint64_t s) {
                  std::vector<std::pair<std::string, CheckOptions>> runs{
                      {"theorem-7.1", opts(1, 4, draws, 10)}, {"theorem-7.1", opts(2, 4, draws, 10)}};
                  if (full) runs.push_back({"theorem-7.1", opts(3, 4, 2, 10)});
                  return combine("criterion-11", s, runs);
                }});
  c.push_back({12, "property suites", [=](std::uint64_t s) {
                  return combine("criterion-12", s, {{"properties", opts(quick ? 2 : 3, -1)}});
                }});
  return c;
}

}  // namespace phf
