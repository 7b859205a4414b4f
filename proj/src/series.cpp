#include "phf/series.hpp"

#include <algorithm>
#include <sstream>

namespace phf {

Series Series::constant(const VarSet& vs, int N, const Scalar& c) {
  Series s(vs, N, c.mode());
  s.add_term(MultiIndex(), c);
  return s;
}

Series Series::variable(const VarSet& vs, int N, int var, Mode mode) {
  if (var < 0 || var >= vs.size()) throw SeriesMismatch("unknown variable");
  Series s(vs, N, mode);
  s.add_term(MultiIndex::unit(var), Scalar::one(mode));
  return s;
}

Series Series::monomial(const VarSet& vs, int N, const MultiIndex& m, const Scalar& c) {
  Series s(vs, N, c.mode());
  s.add_term(m, c);
  return s;
}

Scalar Series::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return Scalar::zero(mode_);
  return it->second;
}

void Series::add_term(const MultiIndex& m, const Scalar& c) {
  if (c.mode() != mode_) throw ModeMismatch("series and coefficient modes differ");
  if (m.degree() > N_ || c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series Series::truncated(int N) const {
  Series r(vs_, std::min(N, N_), mode_);
  for (auto& [m, c] : terms_)
    if (m.degree() <= r.N_) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

int Series::min_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

void Series::check(const Series& o) const {
  if (vs_ != o.vs_) throw SeriesMismatch("series over different variable sets");
  if (mode_ != o.mode_) throw ModeMismatch("series with different arithmetic modes");
}

Series& Series::operator+=(const Series& o) {
  check(o);
  if (o.N_ < N_) *this = truncated(o.N_);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check(o);
  if (o.N_ < N_) *this = truncated(o.N_);
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Series Series::scaled(const Scalar& c) const {
  Series r(vs_, N_, mode_);
  if (c.mode() != mode_) throw ModeMismatch("series and scalar modes differ");
  if (c.is_zero()) return r;
  for (auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
  return r;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator*(const Series& a, const Scalar& c) { return a.scaled(c); }
Series operator*(const Scalar& c, const Series& a) { return a.scaled(c); }

Series operator*(const Series& a, const Series& b) {
  if (a.vars() != b.vars()) throw SeriesMismatch("series over different variable sets");
  if (a.mode() != b.mode()) throw ModeMismatch("series with different arithmetic modes");
  int N = std::min(a.order(), b.order());
  Series r(a.vars(), N, a.mode());
  std::vector<std::pair<const MultiIndex*, const Scalar*>> bt;
  bt.reserve(b.size());
  for (auto& [m, c] : b.terms()) bt.push_back({&m, &c});
  std::map<MultiIndex, Scalar> acc;
  for (auto& [ma, ca] : a.terms()) {
    int room = N - ma.degree();
    if (room < 0) break;
    for (auto& [mb, cb] : bt) {
      if (mb->degree() > room) break;
      MultiIndex m = ma + *mb;
      auto [it, fresh] = acc.emplace(m, ca * *cb);
      if (!fresh) it->second += ca * *cb;
    }
  }
  for (auto& [m, c] : acc) r.add_term(m, c);
  return r;
}

Series pow(const Series& s, int e) {
  if (e < 0) throw std::invalid_argument("negative power of a series");
  Series r = Series::constant(s.vars(), s.order(), Scalar::one(s.mode()));
  Series b = s;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Series geometric_expand(const Series& L, const Scalar& e, int N) {
  if (L.constant_term() != Scalar::one(L.mode()))
    throw PreconditionError("geometric_expand needs constant term exactly 1");
  if (e.mode() != L.mode()) throw ModeMismatch("exponent and series modes differ");
  int M = std::min(N, L.order());
  Series u = L.truncated(M);
  u.add_term(MultiIndex(), -Scalar::one(L.mode()));
  Series result = Series::constant(L.vars(), M, Scalar::one(L.mode()));
  Series upow = Series::constant(L.vars(), M, Scalar::one(L.mode()));
  // (1+u)^e = sum_k <e>_k / k! u^k
  Scalar coef = Scalar::one(L.mode());
  int md = u.min_degree();
  if (md <= 0) return result;
  for (int k = 1; k * md <= M; ++k) {
    upow = upow * u;
    coef = coef * (e - (k - 1)) / Scalar::integer(k, L.mode());
    if (coef.is_zero()) break;
    result += upow * coef;
  }
  return result;
}

Series euler_op_weighted(const Series& s, const std::vector<std::pair<int, long>>& weights) {
  for (auto& [v, w] : weights)
    if (v < 0 || v >= s.vars().size()) throw SeriesMismatch("unknown variable in Euler operator");
  Series r(s.vars(), s.order(), s.mode());
  for (auto& [m, c] : s.terms()) {
    long f = 0;
    for (auto& [v, w] : weights) f += w * m.get(v);
    if (f) r.add_term(m, c * Scalar::integer(f, s.mode()));
  }
  return r;
}

Series euler_op(const Series& s, const std::vector<int>& vars) {
  std::vector<std::pair<int, long>> w;
  for (int v : vars) w.push_back({v, 1});
  return euler_op_weighted(s, w);
}

Series partial(const Series& s, int var) {
  if (var < 0 || var >= s.vars().size()) throw SeriesMismatch("unknown variable in partial");
  Series r(s.vars(), std::max(s.order() - 1, 0), s.mode());
  for (auto& [m, c] : s.terms()) {
    int e = m.get(var);
    if (!e) continue;
    MultiIndex mm = m;
    mm.add(var, -1);
    r.add_term(mm, c * Scalar::integer(e, s.mode()));
  }
  return r;
}

Series mul_var(const Series& s, int var) {
  if (var < 0 || var >= s.vars().size()) throw SeriesMismatch("unknown variable");
  Series r(s.vars(), s.order(), s.mode());
  for (auto& [m, c] : s.terms()) {
    MultiIndex mm = m;
    mm.add(var, 1);
    r.add_term(mm, c);
  }
  return r;
}

Scalar eval_at(const Series& s, const std::vector<Scalar>& values) {
  if (int(values.size()) != s.vars().size()) throw PreconditionError("eval_at: every variable needs a value");
  Mode m = s.mode();
  for (auto& v : values)
    if (v.mode() != m) m = Mode::Float;
  Scalar total = Scalar::zero(m);
  for (auto& [mi, c] : s.terms()) {
    Scalar t = c.as(m);
    for (auto [v, e] : mi.entries()) t *= pow(values[v].as(m), e);
    total += t;
  }
  return total;
}

Series compose(const Series& X, const std::vector<Series>& subs, int N) {
  if (int(subs.size()) != X.vars().size()) throw SeriesMismatch("compose: one series per variable required");
  if (subs.empty()) return Series::constant(VarSet::free({}), N, X.constant_term());
  const VarSet& W = subs[0].vars();
  Mode mode = X.mode();
  for (auto& s : subs) {
    if (s.vars() != W) throw SeriesMismatch("compose: substituted series over different variables");
    if (s.mode() != mode) throw ModeMismatch("compose: mode mismatch");
    if (!s.constant_term().is_zero())
      throw PreconditionError("compose: substituted series has nonzero constant term");
    N = std::min(N, s.order());
  }
  std::vector<int> mindeg;
  for (auto& s : subs) mindeg.push_back(s.is_zero() ? N + 1 : s.min_degree());
  std::vector<std::vector<Series>> powers(subs.size());
  auto power = [&](int v, int e) -> const Series& {
    auto& p = powers[v];
    if (p.empty()) p.push_back(Series::constant(W, N, Scalar::one(mode)));
    while (int(p.size()) <= e) p.push_back(p.back() * subs[v].truncated(N));
    return p[e];
  };
  std::map<std::vector<std::pair<int, int>>, Series> prefix;
  Series out(W, N, mode);
  for (auto& [m, c] : X.terms()) {
    long low = 0;
    for (auto [v, e] : m.entries()) low += long(e) * mindeg[v];
    if (low > N) continue;
    const auto& ent = m.entries();
    if (ent.empty()) {
      out.add_term(MultiIndex(), c);
      continue;
    }
    std::vector<std::pair<int, int>> key(ent.begin(), ent.end() - 1);
    Series base = Series::constant(W, N, Scalar::one(mode));
    if (!key.empty()) {
      auto it = prefix.find(key);
      if (it == prefix.end()) {
        Series acc = Series::constant(W, N, Scalar::one(mode));
        for (auto [v, e] : key) acc = acc * power(v, e);
        it = prefix.emplace(key, acc).first;
      }
      base = it->second;
    }
    Series full = base * power(ent.back().first, ent.back().second);
    prefix.emplace(std::vector<std::pair<int, int>>(ent.begin(), ent.end()), full);
    out += full * c;
  }
  return out;
}

SeriesDiff compare(const Series& a, const Series& b, int upto) {
  SeriesDiff d;
  Mode m = a.mode();
  auto consider = [&](const MultiIndex& mi, const Scalar& diff) {
    if (diff.is_zero()) return;
    d.exactly_zero = false;
    ++d.nonzero_terms;
    double v = diff.abs();
    if (v > d.max_abs || d.worst.empty()) {
      d.max_abs = std::max(d.max_abs, v);
      d.worst = to_string(a.vars(), mi);
    }
  };
  if (a.vars() != b.vars()) throw SeriesMismatch("compare: different variable sets");
  if (a.mode() != b.mode()) throw ModeMismatch("compare: different modes");
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      if (ia->first.degree() <= upto) consider(ia->first, ia->second);
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      if (ib->first.degree() <= upto) consider(ib->first, -ib->second);
      ++ib;
    } else {
      if (ia->first.degree() <= upto) consider(ia->first, ia->second - ib->second);
      ++ia, ++ib;
    }
  }
  (void)m;
  return d;
}

nlohmann::json scalar_json(const Scalar& c) {
  if (c.is_exact()) return c.str();
  auto z = c.to_complex();
  return nlohmann::json::array({z.real(), z.imag()});
}

Scalar scalar_from_json(const nlohmann::json& j, Mode m) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), m);
  if (j.is_number_integer()) return Scalar::integer(j.get<long>(), m);
  if (j.is_number()) {
    if (m == Mode::Exact) return Scalar::parse(j.dump(), m);
    return Scalar(j.get<double>());
  }
  if (j.is_array() && j.size() == 2) {
    if (m == Mode::Exact) throw ParseError("complex value given for an exact quantity");
    return Scalar(std::complex<double>(j[0].get<double>(), j[1].get<double>()));
  }
  throw ParseError("cannot read a number from " + j.dump());
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json j;
  j["lattice"] = lattice_name(s.vars().lattice());
  j["n"] = s.vars().n();
  if (s.vars().lattice() == Lattice::Free) j["vars"] = s.vars().names();
  j["maxDegree"] = s.order();
  j["mode"] = mode_name(s.mode());
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [m, c] : s.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (auto [v, e] : m.entries()) exps[s.vars().label(v)] = e;
    terms.push_back({{"exps", exps}, {"coeff", scalar_json(c)}});
  }
  j["terms"] = terms;
  return j;
}

Series series_from_json(const nlohmann::json& j) {
  std::string lat = j.at("lattice").get<std::string>();
  int n = j.at("n").get<int>();
  VarSet vs;
  if (lat == "A") vs = VarSet(Lattice::A, n);
  else if (lat == "C") vs = VarSet(Lattice::C, n);
  else if (lat == "D") vs = VarSet(Lattice::D, n);
  else if (lat == "line") vs = VarSet::line();
  else if (lat == "free") vs = VarSet::free(j.at("vars").get<std::vector<std::string>>());
  else throw ParseError("unknown lattice '" + lat + "'");
  Mode mode = j.at("mode").get<std::string>() == "exact" ? Mode::Exact : Mode::Float;
  Series s(vs, j.at("maxDegree").get<int>(), mode);
  for (auto& t : j.at("terms")) {
    MultiIndex m;
    for (auto& [k, e] : t.at("exps").items()) {
      int v = vs.find_label(k);
      if (v < 0) throw ParseError("unknown variable '" + k + "'");
      m.set(v, e.get<int>());
    }
    s.add_term(m, scalar_from_json(t.at("coeff"), mode));
  }
  return s;
}

}  // namespace phf
