#include "phf/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace phf {

const char* lattice_name(Lattice l) {
  switch (l) {
    case Lattice::A: return "A";
    case Lattice::C: return "C";
    case Lattice::D: return "D";
    case Lattice::Line: return "line";
    case Lattice::Free: return "free";
  }
  return "?";
}

VarSet::VarSet(Lattice l, int n) : lattice_(l), n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (l == Lattice::Line) {
    pairs_.push_back({1, 0});
    a_count_ = 1;
    return;
  }
  if (l == Lattice::Free) throw std::invalid_argument("use VarSet::free");
  for (int j = 2; j <= n; ++j)
    for (int k = 1; k < j; ++k) pairs_.push_back({j, k});
  a_count_ = int(pairs_.size());
  if (l == Lattice::C || l == Lattice::D) {
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= j; ++k) {
        if (l == Lattice::D && k == j) continue;
        pairs_.push_back({n + j, k});
      }
  }
}

VarSet VarSet::line() { return VarSet(Lattice::Line, 1); }

VarSet VarSet::free(std::vector<std::string> names) {
  VarSet v;
  v.lattice_ = Lattice::Free;
  v.n_ = int(names.size());
  v.names_ = std::move(names);
  for (int i = 0; i < v.n_; ++i) v.pairs_.push_back({i, 0});
  v.a_count_ = v.n_;
  return v;
}

int VarSet::index(int j, int k) const {
  if (lattice_ == Lattice::Line || lattice_ == Lattice::Free) return -1;
  if (j <= n_) {
    if (k < 1 || k >= j) return -1;
    return (j - 1) * (j - 2) / 2 + (k - 1);
  }
  if (lattice_ == Lattice::A) return -1;
  int jj = j - n_;
  if (jj > n_ || k < 1) return -1;
  if (lattice_ == Lattice::C) {
    if (k > jj) return -1;
    return a_count_ + jj * (jj - 1) / 2 + (k - 1);
  }
  if (k >= jj) return -1;
  return a_count_ + (jj - 1) * (jj - 2) / 2 + (k - 1);
}

std::string VarSet::label(int idx) const {
  if (lattice_ == Lattice::Free) return names_[idx];
  if (lattice_ == Lattice::Line) return "x";
  return std::to_string(pairs_[idx].first) + "," + std::to_string(pairs_[idx].second);
}

int VarSet::find_label(const std::string& s) const {
  for (int i = 0; i < size(); ++i)
    if (label(i) == s) return i;
  return -1;
}

MultiIndex MultiIndex::unit(int var, int e) {
  MultiIndex m;
  m.set(var, e);
  return m;
}

MultiIndex MultiIndex::from_dense(const std::vector<int>& d) {
  MultiIndex m;
  for (int i = 0; i < int(d.size()); ++i)
    if (d[i]) {
      m.e_.push_back({i, d[i]});
      m.degree_ += d[i];
    }
  return m;
}

int MultiIndex::get(int var) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(var, 0));
  if (it != e_.end() && it->first == var) return it->second;
  return 0;
}

void MultiIndex::set(int var, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(var, 0));
  if (it != e_.end() && it->first == var) {
    degree_ += e - it->second;
    if (e == 0)
      e_.erase(it);
    else
      it->second = e;
  } else if (e > 0) {
    e_.insert(it, {var, e});
    degree_ += e;
  }
}

void MultiIndex::add(int var, int de) { set(var, get(var) + de); }

std::vector<int> MultiIndex::dense(int nvars) const {
  std::vector<int> d(nvars, 0);
  for (auto [v, e] : e_) d[v] = e;
  return d;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r;
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
      r.e_.push_back(e_[i++]);
    else if (i == e_.size() || o.e_[j].first < e_[i].first)
      r.e_.push_back(o.e_[j++]);
    else {
      r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
      ++i, ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool MultiIndex::divides(const MultiIndex& o) const {
  for (auto [v, e] : e_)
    if (o.get(v) < e) return false;
  return true;
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  size_t i = 0, j = 0;
  while (i < a.e_.size() && j < b.e_.size()) {
    if (a.e_[i] == b.e_[j]) {
      ++i, ++j;
      continue;
    }
    if (a.e_[i].first != b.e_[j].first) return a.e_[i].first < b.e_[j].first;
    return a.e_[i].second > b.e_[j].second;
  }
  return i < a.e_.size() && j == b.e_.size();
}

std::string to_string(const VarSet& vs, const MultiIndex& m) {
  if (m.degree() == 0) return "1";
  std::string s;
  for (auto [v, e] : m.entries()) {
    if (!s.empty()) s += "*";
    s += "z[" + vs.label(v) + "]";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

static void compose_rec(int var, int nvars, int left, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (var == nvars - 1) {
    cur[var] = left;
    out.push_back(MultiIndex::from_dense(cur));
    cur[var] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[var] = e;
    compose_rec(var + 1, nvars, left - e, cur, out);
  }
  cur[var] = 0;
}

std::vector<MultiIndex> enumerate(const VarSet& vs, int d) {
  std::vector<MultiIndex> out;
  int m = vs.size();
  if (d < 0) return out;
  if (m == 0) {
    if (d == 0) out.push_back(MultiIndex());
    return out;
  }
  std::vector<int> cur(m, 0);
  compose_rec(0, m, d, cur, out);
  return out;
}

std::vector<MultiIndex> enumerate_upto(const VarSet& vs, int N) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= N; ++d) {
    auto part = enumerate(vs, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

LatticeStats stats(const VarSet& vs, const MultiIndex& m) {
  int n = vs.n();
  LatticeStats s;
  s.under.assign(n + 1, 0);
  s.over.assign(n + 1, 0);
  bool cpart = vs.lattice() == Lattice::C || vs.lattice() == Lattice::D;
  if (cpart) {
    s.c.assign(n + 1, 0);
    s.b.assign(n + 1, 0);
    s.d.assign(n + 1, 0);
  }
  for (auto [v, e] : m.entries()) {
    auto [j, k] = vs.pair(v);
    if (j <= n) {
      s.under[j] += e;
      s.over[k] += e;
      continue;
    }
    int r2 = j - n, r1 = k;  // z_{n+r2, r1}, r1 <= r2
    if (r1 == r2) {
      s.c[r1] += 2 * e;
      s.b[r1] += e;
    } else {
      s.c[r1] += e;
      s.c[r2] += e;
      s.b[r1] += e;
      s.b[r2] += e;
      s.d[r1] += e;
      s.d[r2] += e;
      s.d_total += e;
    }
    s.c_total += e;
  }
  return s;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace phf
