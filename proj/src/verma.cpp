#include "phf/verma.hpp"

#include <algorithm>
#include <functional>

namespace phf {

void add_to(Vec& v, const MultiIndex& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(m);
  if (it == v.end()) {
    v.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

void add_to(LVec& v, const LKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(k);
  if (it == v.end()) {
    v.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

namespace {

// alpha + sum of (var, delta); nullopt if an exponent would go negative or a var is absent.
std::optional<MultiIndex> shifted_index(const MultiIndex& a, std::initializer_list<std::pair<int, int>> d) {
  MultiIndex out = a;
  for (auto [v, e] : d) {
    if (v < 0) return std::nullopt;
    int cur = out.get(v) + e;
    if (cur < 0) return std::nullopt;
    out.set(v, cur);
  }
  return out;
}

void add_scaled(Vec& out, const Vec& in, const Scalar& c) {
  for (auto& [m, x] : in) add_to(out, m, x * c);
}

}  // namespace

Verma Verma::gl(std::vector<Scalar> lambda) {
  if (lambda.size() < 2) throw PreconditionError("gl(n) module needs n >= 2");
  Verma M;
  M.alg_ = Algebra::GL;
  M.n_ = int(lambda.size());
  M.pbw_ = VarSet(Lattice::A, M.n_);
  M.mode_ = lambda[0].mode();
  M.top_ = std::move(lambda);
  return M;
}

Verma Verma::sp(int n, Scalar lambda_n) {
  if (n < 1) throw PreconditionError("sp(2n) module needs n >= 1");
  Verma M;
  M.alg_ = Algebra::SP;
  M.n_ = n;
  M.pbw_ = VarSet(Lattice::C, n);
  M.mode_ = lambda_n.mode();
  for (int k = 1; k <= n; ++k) M.top_.push_back(lambda_n - Scalar::rational(n - k, 2).as(M.mode_));
  return M;
}

bool Verma::valid(Gen g) const {
  if (alg_ == Algebra::GL) return g.row >= 1 && g.row <= n_ && g.col >= 1 && g.col <= n_;
  return g.row >= 1 && g.row <= 2 * n_ && g.col >= 1 && g.col <= 2 * n_ && !(g.row > n_ && g.col > n_);
}

Gen Verma::canonical(Gen g) const {
  if (!valid(g)) throw PreconditionError("no generator " + std::to_string(g.row) + "," + std::to_string(g.col));
  if (alg_ == Algebra::SP) {
    if (g.row > n_) {
      int i = g.row - n_, j = g.col;
      if (i < j) return {n_ + j, i};
    } else if (g.col > n_) {
      int i = g.row, j = g.col - n_;
      if (i > j) return {j, n_ + i};
    }
  }
  return g;
}

bool Verma::is_negative(Gen g) const {
  g = canonical(g);
  if (alg_ == Algebra::SP && g.row > n_) return true;
  if (alg_ == Algebra::SP && g.col > n_) return false;
  return g.row > g.col;
}

bool Verma::is_cartan(Gen g) const {
  g = canonical(g);
  return g.row == g.col;
}

bool Verma::is_positive(Gen g) const { return !is_negative(g) && !is_cartan(g); }

int Verma::height(Gen g) const {
  g = canonical(g);
  if (alg_ == Algebra::SP && g.row > n_) return 2 * n_ + 1 - (g.row - n_) - g.col;
  if (alg_ == Algebra::SP && g.col > n_) return 2 * n_ + 1 - (g.col - n_) - g.row;
  return std::abs(g.row - g.col);
}

long Verma::height(const MultiIndex& a) const {
  long h = 0;
  for (auto [v, e] : a.entries()) h += long(e) * height(var_gen(v));
  return h;
}

std::string Verma::name(Gen g) const {
  return std::string(alg_ == Algebra::GL ? "E" : "C") + "_{" + std::to_string(g.row) + "," + std::to_string(g.col) +
         "}";
}

std::vector<Gen> Verma::generators() const {
  std::vector<Gen> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out.push_back({i, j});
  if (alg_ == Algebra::SP)
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        if (i <= j) out.push_back({i, n_ + j});
        if (i >= j) out.push_back({n_ + i, j});
      }
  return out;
}

Mat Verma::matrix(Gen g) const {
  g = canonical(g);
  Mat m;
  Scalar one = Scalar::one(mode_);
  if (alg_ == Algebra::GL) {
    m[{g.row, g.col}] = one;
    return m;
  }
  int n = n_;
  if (g.row <= n && g.col <= n) {
    m[{g.row, g.col}] += one;
    m[{n + g.col, n + g.row}] -= one;
  } else if (g.col > n) {
    int p = g.row, q = g.col - n;
    m[{p, n + q}] = one;
    if (p != q) m[{q, n + p}] = one;
  } else {
    int p = g.row - n, q = g.col;
    m[{n + p, q}] = one;
    if (p != q) m[{n + q, p}] = one;
  }
  for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
  return m;
}

std::vector<std::pair<Gen, Scalar>> Verma::decompose(const Mat& m) const {
  std::vector<std::pair<Gen, Scalar>> out;
  auto get = [&](int i, int j) {
    auto it = m.find({i, j});
    return it == m.end() ? Scalar::zero(mode_) : it->second;
  };
  for (auto g : generators()) {
    Scalar c = get(g.row, g.col);
    if (!c.is_zero()) out.push_back({g, c});
  }
  return out;
}

std::vector<std::pair<Gen, Scalar>> Verma::bracket(Gen a, Gen b) const {
  Mat A = matrix(a), B = matrix(b), C;
  for (auto& [ij, x] : A)
    for (auto& [kl, y] : B) {
      if (ij.second == kl.first) C[{ij.first, kl.second}] += x * y;
      if (kl.second == ij.first) C[{kl.first, ij.second}] -= y * x;
    }
  for (auto it = C.begin(); it != C.end();) it = it->second.is_zero() ? C.erase(it) : std::next(it);
  return decompose(C);
}

int Verma::gen_id(Gen g) const {
  g = canonical(g);
  return (g.row - 1) * 2 * n_ + (g.col - 1);
}

Gen Verma::var_gen(int var) const {
  auto [r, c] = pbw_.pair(var);
  return {r, c};
}

int Verma::gen_var(Gen g) const {
  g = canonical(g);
  return pbw_.index(g.row, g.col);
}

Scalar Verma::cartan_value(const Mat& h, const MultiIndex& a) const {
  auto diag = [&](int i) {
    auto it = h.find({i, i});
    return it == h.end() ? Scalar::zero(mode_) : it->second;
  };
  Scalar v = Scalar::zero(mode_);
  for (int k = 1; k <= n_; ++k) v += diag(k) * top_[k - 1];
  for (auto [var, e] : a.entries()) {
    Gen g = var_gen(var);
    v += (diag(g.row) - diag(g.col)) * long(e);
  }
  return v;
}

Vec Verma::act(Gen g, const Vec& v, Rule rule) const {
  Vec out;
  for (auto& [m, c] : v) add_scaled(out, act(g, m, rule), c);
  return out;
}

Vec Verma::act(Gen g, const MultiIndex& a, Rule rule) const {
  g = canonical(g);
  if (rule == Rule::Formula) return alg_ == Algebra::GL ? gl_formula(g, a) : act_sp_formula(g, a, false);
  return straighten(g, a);
}

// Moves g to its PBW position by commutators.
Vec Verma::straighten(Gen g, const MultiIndex& a) const {
  auto key = std::make_pair(gen_id(g), a);
  if (auto it = cache_straight_.find(key); it != cache_straight_.end()) return it->second;
  Vec out;
  if (is_cartan(g)) {
    add_to(out, a, cartan_value(matrix(g), a));
  } else if (a.degree() == 0) {
    if (is_negative(g)) add_to(out, MultiIndex::unit(gen_var(g)), Scalar::one(mode_));
  } else {
    int first = a.entries().front().first;
    if (is_negative(g) && gen_var(g) <= first) {
      MultiIndex b = a;
      b.add(gen_var(g), 1);
      add_to(out, b, Scalar::one(mode_));
    } else {
      Gen Y = var_gen(first);
      MultiIndex rest = a;
      rest.add(first, -1);
      Vec inner = straighten(g, rest);
      for (auto& [m, c] : inner) add_scaled(out, straighten(Y, m), c);
      for (auto& [h, c] : bracket(g, Y)) add_scaled(out, straighten(h, rest), c);
    }
  }
  cache_straight_.emplace(key, out);
  return out;
}

Vec Verma::gl_formula(Gen g, const MultiIndex& a) const {
  auto key = std::make_pair(gen_id(g), a);
  if (auto it = cache_formula_.find(key); it != cache_formula_.end()) return it->second;
  const int n = n_;
  auto idx = [&](int j, int k) { return pbw_.index(j, k); };
  auto al = [&](int j, int k) { return long(a.get(idx(j, k))); };
  auto put = [&](Vec& out, std::initializer_list<std::pair<int, int>> d, const Scalar& c) {
    if (auto m = shifted_index(a, d)) add_to(out, *m, c);
  };
  Vec out;
  int i = g.row, j = g.col;
  if (i == j) {
    Scalar v = top_[i - 1];
    for (int p = 1; p < i; ++p) v += Scalar(al(i, p));
    for (int q = i + 1; q <= n; ++q) v -= Scalar(al(q, i));
    add_to(out, a, v);
  } else if (i > j) {
    put(out, {{idx(i, j), 1}}, Scalar::one(mode_));
    for (int p = 1; p < j; ++p)
      if (al(j, p)) put(out, {{idx(i, p), 1}, {idx(j, p), -1}}, Scalar::integer(al(j, p), mode_));
  } else if (j == i + 1) {
    for (int p = 1; p < i; ++p)
      if (al(i + 1, p)) put(out, {{idx(i, p), 1}, {idx(i + 1, p), -1}}, Scalar::integer(al(i + 1, p), mode_));
    for (int p = i + 2; p <= n; ++p)
      if (al(p, i)) put(out, {{idx(p, i + 1), 1}, {idx(p, i), -1}}, Scalar::integer(-al(p, i), mode_));
    if (long c = al(i + 1, i)) {
      Scalar s = top_[i - 1] - top_[i] + 1;
      for (int p = i + 1; p <= n; ++p) s -= Scalar(al(p, i));
      for (int p = i + 2; p <= n; ++p) s += Scalar(al(p, i + 1));
      put(out, {{idx(i + 1, i), -1}}, s * c);
    }
  } else {
    // E_{i,j} = [E_{i,i+1}, E_{i+1,j}]
    Gen s{i, i + 1}, t{i + 1, j};
    Vec x = gl_formula(t, a), y = gl_formula(s, a);
    for (auto& [m, c] : x) add_scaled(out, gl_formula(s, m), c);
    for (auto& [m, c] : y) add_scaled(out, gl_formula(t, m), -c);
  }
  cache_formula_.emplace(key, out);
  return out;
}

Vec Verma::act_sp_formula(Gen g, const MultiIndex& a, bool as_printed) const {
  if (alg_ != Algebra::SP) return act(g, a);
  g = canonical(g);
  const int n = n_;
  auto idx = [&](int r, int c) {
    if (r > n && c <= n && r - n < c) return pbw_.index(n + c, r - n);
    return pbw_.index(r, c);
  };
  auto al = [&](int r, int c) {
    int v = idx(r, c);
    return v < 0 ? 0L : long(a.get(v));
  };
  auto put = [&](Vec& out, std::initializer_list<std::pair<int, int>> d, const Scalar& c) {
    if (auto m = shifted_index(a, d)) add_to(out, *m, c);
  };
  auto S = [&](long v) { return Scalar::integer(v, mode_); };
  Vec out;
  int i = g.row, j = g.col;
  if (i < n && j == i + 1) {
    for (int q = 1; q < i; ++q)
      if (al(i + 1, q)) put(out, {{idx(i, q), 1}, {idx(i + 1, q), -1}}, S(al(i + 1, q)));
    for (int q = i + 2; q <= n; ++q)
      if (al(q, i)) put(out, {{idx(q, i + 1), 1}, {idx(q, i), -1}}, S(-al(q, i)));
    for (int k = 1; k <= n; ++k)
      if (k != i + 1 && al(n + k, i)) put(out, {{idx(n + k, i), -1}, {idx(n + k, i + 1), 1}}, S(-al(n + k, i)));
    if (al(n + i + 1, i)) put(out, {{idx(n + i + 1, i), -1}, {idx(n + i + 1, i + 1), 1}}, S(-2 * al(n + i + 1, i)));
    if (long c = al(i + 1, i)) {
      Scalar s = Scalar::rational(1, 2).as(mode_);
      for (int q = i + 1; q <= n; ++q) s -= S(al(q, i));
      for (int q = i + 2; q <= n; ++q) s += S(al(q, i + 1));
      for (int k = 1; k <= n; ++k)
        if (k != i && k != i + 1) s += S(al(n + k, i + 1) - al(n + k, i));
      s += S(2 * al(n + i + 1, i + 1) - 2 * al(n + i, i));
      put(out, {{idx(i + 1, i), -1}}, s * c);
    }
  } else if (i == n && j == 2 * n) {
    for (int r = 1; r < n; ++r) {
      long c = al(2 * n, r);
      if (!c) continue;
      put(out, {{idx(2 * n, r), -1}, {idx(n, r), 1}}, S(c));
      put(out, {{idx(2 * n, r), -2}, {idx(n + r, r), 1}}, S(c * (c - 1)));
      for (int q = 1; q < r; ++q)
        if (al(2 * n, q)) put(out, {{idx(2 * n, r), -1}, {idx(2 * n, q), -1}, {idx(n + r, q), 1}}, S(c * al(2 * n, q)));
    }
    if (long c = al(2 * n, n)) put(out, {{idx(2 * n, n), -1}}, (top_[n - 1] + 1 - S(c)) * c);
  } else if (i <= n && j < i) {
    put(out, {{idx(i, j), 1}}, S(1));
    for (int p = 1; p < j; ++p)
      if (al(j, p)) put(out, {{idx(i, p), 1}, {idx(j, p), -1}}, S(al(j, p)));
  } else if (i > n && i - n > j) {
    int jj = i - n, ii = j;  // C_{n+jj, ii}, ii < jj
    // as printed: exponent of C_{n+jj,q} and no factor 2 from [C_{n+jj,q}, C_{q,q}]-type brackets
    auto lowered = [&](int q) { return as_printed ? al(n + jj, q) : al(jj, q); };
    auto delta2 = [&](int q, int p) { return long(1 + (!as_printed && q == p)); };
    put(out, {{idx(n + jj, ii), 1}}, S(1));
    for (int q = 1; q < jj; ++q)
      if (long c = lowered(q)) put(out, {{idx(n + q, ii), 1}, {idx(jj, q), -1}}, S(delta2(q, ii) * c));
    for (int p = 1; p < ii; ++p) {
      long c = al(ii, p);
      if (!c) continue;
      put(out, {{idx(n + jj, p), 1}, {idx(ii, p), -1}}, S(c));
      for (int q = 1; q < jj; ++q)
        if (long e = lowered(q)) put(out, {{idx(n + q, p), 1}, {idx(ii, p), -1}, {idx(jj, q), -1}}, S(delta2(q, p) * c * e));
    }
  } else if (i > n && i - n == j) {
    int k = j;
    put(out, {{idx(n + k, k), 1}}, S(1));
    for (int r = 1; r < k; ++r) {
      long c = al(k, r);
      if (!c) continue;
      put(out, {{idx(k, r), -1}, {idx(n + k, r), 1}}, S(c));
      put(out, {{idx(k, r), -2}, {idx(n + r, r), 1}}, S(c * (c - 1)));
      for (int s = r + 1; s < k; ++s)
        if (al(k, s)) put(out, {{idx(k, r), -1}, {idx(k, s), -1}, {idx(n + s, r), 1}}, S(c * al(k, s)));
    }
  } else {
    return straighten(g, a);
  }
  return out;
}

LVec Verma::act_tilde(Gen g, const LVec& u, const Scalar& mu, long max_height) const {
  g = canonical(g);
  const int n = n_;
  LVec out;
  auto half = Scalar::rational(1, 2).as(mode_);
  for (auto& [key, c] : u) {
    auto& [e, a] = key;
    for (auto& [b, d] : act(g, a)) {
      if (max_height >= 0 && height(b) > max_height) continue;
      add_to(out, {e, b}, c * d);
    }
    std::vector<int> f = e;
    Scalar x = Scalar::zero(mode_);
    if (alg_ == Algebra::GL) {
      int p = g.row, q = g.col;
      if (p == q) {
        x = Scalar::integer(e[p - 1], mode_);
      } else {
        x = mu + e[q - 1];
        f[p - 1]++, f[q - 1]--;
      }
    } else if (g.row <= n && g.col <= n) {
      int p = g.row, q = g.col;
      if (p == q) {
        x = Scalar::integer(e[p - 1], mode_);
      } else {
        x = Scalar::integer(e[q - 1], mode_) - half;
        f[p - 1]++, f[q - 1]--;
      }
    } else if (g.col > n) {
      int p = g.row, q = g.col - n;
      x = p == q ? -half : Scalar::integer(-1, mode_);
      f[p - 1]++, f[q - 1]++;
    } else {
      int p = g.row - n, q = g.col;
      if (p == q) {
        x = half * (Scalar::integer(e[p - 1], mode_) - half) * (Scalar::integer(e[p - 1], mode_) - 3 * half);
        f[p - 1] -= 2;
      } else {
        x = (Scalar::integer(e[p - 1], mode_) - half) * (Scalar::integer(e[q - 1], mode_) - half);
        f[p - 1]--, f[q - 1]--;
      }
    }
    add_to(out, {f, a}, c * x);
  }
  return out;
}

Vec act_gl2(Gen g, const Vec& v, const Scalar& lambda1, const Scalar& lambda2) {
  Vec out;
  Scalar sigma = lambda1 - lambda2;
  for (auto& [m, c] : v) {
    long i = m.get(0);
    if (g.row == 1 && g.col == 2) {
      if (i > 0) add_to(out, MultiIndex::unit(0, int(i - 1)), c * (sigma + 1 - Scalar::integer(i, c.mode())) * i);
    } else if (g.row == 2 && g.col == 1) {
      add_to(out, MultiIndex::unit(0, int(i + 1)), c);
    } else if (g.row == 1 && g.col == 1) {
      add_to(out, m, c * (lambda1 - Scalar::integer(i, c.mode())));
    } else if (g.row == 2 && g.col == 2) {
      add_to(out, m, c * (lambda2 + Scalar::integer(i, c.mode())));
    } else {
      throw PreconditionError("gl(2) has no generator " + std::to_string(g.row) + "," + std::to_string(g.col));
    }
  }
  return out;
}

void check_trace_params(Algebra alg, const std::vector<Scalar>& lambda, const Scalar& mu, int N) {
  if (N < 0) throw PreconditionError("truncation must be nonnegative");
  auto natural = [](const Scalar& s) { return s.is_integer() && s.real() >= 0; };
  if (alg == Algebra::GL) {
    int n = int(lambda.size());
    if (n < 2) throw PreconditionError("gl(n) needs n >= 2");
    for (int k = 0; k + 2 < n; ++k)
      if (lambda[k] - lambda[k + 1] != mu)
        throw PreconditionError("lambda_" + std::to_string(k + 1) + " - lambda_" + std::to_string(k + 2) +
                                " must equal mu");
    if (natural(lambda[n - 2] - lambda[n - 1])) throw PreconditionError("lambda_{n-1} - lambda_n is a natural number");
  } else {
    if (lambda.size() != 1) throw PreconditionError("sp(2n) weight is given by lambda_n alone");
    if (natural(lambda[0])) throw PreconditionError("lambda_n is a natural number");
  }
}

LVec singular_vector(const Verma& M, const Scalar& mu, int N) {
  const int n = M.n();
  const VarSet& pbw = M.pbw();
  Mode mode = M.top_weight()[0].mode();
  LVec u;
  if (M.algebra() == Algebra::GL) {
    Scalar sigma = M.top_weight()[n - 2] - M.top_weight()[n - 1];
    std::vector<int> i(n - 1, 0);
    std::function<void(int, int)> rec = [&](int p, int budget) {
      if (p == n - 1) {
        long tot = 0;
        Scalar den = Scalar::one(mode);
        MultiIndex a;
        for (int k = 0; k < n - 1; ++k) {
          tot += i[k];
          den *= factorial(i[k], mode);
          if (i[k]) a.set(pbw.index(k + 2, k + 1), i[k]);
        }
        den *= falling(sigma, i[n - 2]);
        Scalar c = falling(mu, i[n - 2]) / den;
        if (tot % 2) c = -c;
        std::vector<int> e(n);
        e[0] = i[0];
        for (int k = 1; k < n - 1; ++k) e[k] = i[k] - i[k - 1];
        e[n - 1] = -i[n - 2];
        add_to(u, {e, a}, c);
        return;
      }
      for (int v = 0; v <= budget; ++v) {
        i[p] = v;
        rec(p + 1, budget - v);
      }
      i[p] = 0;
    };
    rec(0, N);
  } else {
    Scalar ln = M.top_weight()[n - 1];
    std::vector<int> i(n, 0);
    std::function<void(int, int)> rec = [&](int p, int budget) {
      if (p == n) {
        long tot = 0;
        Scalar den = Scalar::one(mode);
        MultiIndex a;
        for (int k = 0; k < n; ++k) den *= factorial(i[k], mode);
        for (int k = 0; k + 1 < n; ++k) {
          tot += i[k];
          if (i[k]) a.set(pbw.index(k + 2, k + 1), i[k]);
        }
        if (i[n - 1]) a.set(pbw.index(2 * n, n), i[n - 1]);
        den *= pow(Scalar::integer(2, mode), i[n - 1]) * falling(ln, i[n - 1]);
        Scalar c = Scalar::one(mode) / den;
        if (tot % 2) c = -c;
        std::vector<int> e(n);
        if (n == 1) {
          e[0] = 2 * i[0];
        } else {
          e[0] = i[0];
          for (int k = 1; k < n - 1; ++k) e[k] = i[k] - i[k - 1];
          e[n - 1] = 2 * i[n - 1] - i[n - 2];
        }
        add_to(u, {e, a}, c);
        return;
      }
      for (int v = 0; v <= budget; ++v) {
        i[p] = v;
        rec(p + 1, budget - v);
      }
      i[p] = 0;
    };
    rec(0, N);
  }
  return u;
}

CheckReport verify_singular(const Verma& M, const LVec& u, const Scalar& mu, int N) {
  CheckReport rep;
  rep.id = M.algebra() == Algebra::GL ? "singular-gl" : "singular-sp";
  rep.mode = M.top_weight()[0].mode();
  rep.truncation = N;
  rep.tolerance = rep.mode == Mode::Float ? 1e-9 : 0.0;
  const int n = M.n();
  std::vector<Gen> raising;
  if (M.algebra() == Algebra::GL) {
    for (int i = 1; i < n; ++i) raising.push_back({i, i + 1});
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) raising.push_back({i, j});
    for (int p = 1; p <= n; ++p)
      for (int q = p; q <= n; ++q) raising.push_back({p, n + q});
  }
  for (Gen g : raising) {
    long exact_upto = N - M.height(g);
    LVec r = M.act_tilde(g, u, mu);
    double worst = 0.0;
    std::string where;
    long checked = 0;
    for (auto& [k, c] : r) {
      if (M.height(k.second) > exact_upto) continue;
      ++checked;
      if (c.abs() > worst) {
        worst = c.abs();
        where = M.name(g) + " at " + to_string(M.pbw(), k.second);
      }
    }
    rep.details["generators"][M.name(g)] = {{"maxCoefficient", worst}, {"exactThroughHeight", exact_upto}};
    if (worst > 0) {
      if (rep.mode == Mode::Exact) rep.exact_nonzero = true;
      rep.absorb_value(worst, where);
    }
  }
  rep.finish();
  return rep;
}

VarSet trace_vars(Algebra alg, int n) {
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("r" + std::to_string(i));
  if (alg == Algebra::SP) names.push_back("s");
  return VarSet::free(names);
}

namespace {

// Exponents in the trace variables of the weight of one PBW generator.
MultiIndex weight_of_var(const Verma& M, int var) {
  const int n = M.n();
  auto [row, col] = M.pbw().pair(var);
  MultiIndex m;
  if (row <= n) {
    for (int t = col; t < row; ++t) m.add(t - 1, 1);
  } else {
    int i = row - n, j = col;
    m.add(n - 1, 1);
    for (int t = i; t < n; ++t) m.add(t - 1, 1);
    for (int t = j; t < n; ++t) m.add(t - 1, 1);
  }
  return m;
}

}  // namespace

TraceSeries trace_oracle(const Verma& M, const Scalar& mu, int N) {
  const int n = M.n();
  std::vector<Scalar> lam = M.top_weight();
  if (M.algebra() == Algebra::GL)
    check_trace_params(Algebra::GL, lam, mu, N);
  else
    check_trace_params(Algebra::SP, {lam[n - 1]}, mu, N);
  Mode mode = lam[0].mode();
  VarSet tv = trace_vars(M.algebra(), n);
  TraceSeries out{lam, Series(tv, N, mode)};
  LVec u = singular_vector(M, mu, N);
  const int m = M.pbw().size();
  std::vector<MultiIndex> wt(m);
  for (int v = 0; v < m; ++v) wt[v] = weight_of_var(M, v);
  std::vector<int> alpha(m, 0);
  std::function<void(int, const LVec&, long)> dfs = [&](int v, const LVec& S, long h) {
    if (v < 0) {
      MultiIndex a = MultiIndex::from_dense(alpha);
      Scalar c = Scalar::zero(mode);
      for (auto& [k, x] : S) {
        if (k.second != a) continue;
        for (int e : k.first)
          if (e != 0) throw std::logic_error("trace: nonzero x-offset on a diagonal term");
        c += x;
      }
      MultiIndex w;
      for (int t = 0; t < m; ++t)
        if (alpha[t])
          for (auto [var, e] : wt[t].entries()) w.add(var, e * alpha[t]);
      out.body.add_term(w, c);
      return;
    }
    Gen g{M.pbw().pair(v).first, M.pbw().pair(v).second};
    int hv = M.height(g);
    LVec cur = S;
    for (int a = 0; h + long(a) * hv <= N; ++a) {
      alpha[v] = a;
      dfs(v - 1, cur, h + long(a) * hv);
      if (h + long(a + 1) * hv > N) break;
      cur = M.act_tilde(g, cur, mu, N);
    }
    alpha[v] = 0;
  };
  dfs(m - 1, u, 0);
  return out;
}

nlohmann::json to_json(const TraceSeries& t) {
  nlohmann::json j;
  j["prefactor"] = nlohmann::json::array();
  for (auto& s : t.prefactor) j["prefactor"].push_back(scalar_json(s));
  j["body"] = to_json(t.body);
  return j;
}

}  // namespace phf
