#pragma once

#include <vector>

#include "phf/report.hpp"
#include "phf/series.hpp"

namespace phf {

// Strictly increasing node sequence m_0 < m_1 < ... < m_r.
struct Path {
  std::vector<int> nodes;
  int steps() const { return int(nodes.size()) - 1; }
};

// Interior subsets of (k1,k2) in binary counting order.
std::vector<Path> enumerate_paths(int k1, int k2);

// P_{[k1,k2]} = sum over paths of (-1)^r z_{m1,m0} ... z_{mr,m(r-1)}, over the A-part of `vs`.
Series path_polynomial(int k1, int k2, const VarSet& vs, int N);
Series path_polynomial(int k1, int k2, int n);

// L * P = I for the unit lower-triangular L = (z_{i,j}) and P = (P_{[j,i]}).
CheckReport check_inverse_identity(int n);

}  // namespace phf
