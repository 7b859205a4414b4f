#include "phf/pathpoly.hpp"

#include <stdexcept>

namespace phf {

std::vector<Path> enumerate_paths(int k1, int k2) {
  if (k1 > k2) throw std::invalid_argument("path endpoints out of order");
  if (k1 < 1) throw std::invalid_argument("path nodes must be positive");
  std::vector<Path> out;
  if (k1 == k2) {
    out.push_back({{k1}});
    return out;
  }
  int inner = k2 - k1 - 1;
  for (unsigned long mask = 0; mask < (1UL << inner); ++mask) {
    Path p;
    p.nodes.push_back(k1);
    for (int b = 0; b < inner; ++b)
      if (mask & (1UL << b)) p.nodes.push_back(k1 + 1 + b);
    p.nodes.push_back(k2);
    out.push_back(std::move(p));
  }
  return out;
}

Series path_polynomial(int k1, int k2, const VarSet& vs, int N) {
  if (k1 < 1 || k2 > vs.n() || k1 > k2) throw std::out_of_range("path polynomial indices out of range");
  Series s(vs, N, Mode::Exact);
  for (auto& p : enumerate_paths(k1, k2)) {
    MultiIndex m;
    for (int t = 1; t <= p.steps(); ++t) m.add(vs.index(p.nodes[t], p.nodes[t - 1]), 1);
    s.add_term(m, Scalar(p.steps() % 2 ? -1L : 1L));
  }
  return s;
}

Series path_polynomial(int k1, int k2, int n) { return path_polynomial(k1, k2, VarSet(Lattice::A, n), n); }

CheckReport check_inverse_identity(int n) {
  CheckReport rep;
  rep.id = "inverse-5.28";
  rep.mode = Mode::Exact;
  rep.truncation = n;
  if (n < 2) throw PreconditionError("matrix inverse identity needs n >= 2");
  VarSet vs(Lattice::A, n);
  auto entry_L = [&](int i, int j) {
    if (i == j) return Series::constant(vs, n, Scalar(1L));
    if (i > j) return Series::variable(vs, n, vs.index(i, j), Mode::Exact);
    return Series(vs, n, Mode::Exact);
  };
  auto entry_P = [&](int i, int j) {
    if (i >= j) return path_polynomial(j, i, vs, n);
    return Series(vs, n, Mode::Exact);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Series acc(vs, n, Mode::Exact);
      for (int k = 1; k <= n; ++k) acc += entry_L(i, k) * entry_P(k, j);
      Series id = i == j ? Series::constant(vs, n, Scalar(1L)) : Series(vs, n, Mode::Exact);
      rep.absorb(compare(acc, id, n), "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  rep.finish();
  return rep;
}

}  // namespace phf
