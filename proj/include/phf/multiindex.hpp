#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phf {

// A: pairs (j,k), 1<=k<j<=n.  C: A-pairs plus (n+j,k), 1<=k<=j<=n.
// D: A-pairs plus (n+j,k), 1<=k<j<=n.  Line: one variable.  Free: named variables.
enum class Lattice { A, C, D, Line, Free };

const char* lattice_name(Lattice l);

class VarSet {
 public:
  VarSet() = default;
  VarSet(Lattice l, int n);
  static VarSet line();
  static VarSet free(std::vector<std::string> names);

  Lattice lattice() const { return lattice_; }
  int n() const { return n_; }
  int size() const { return int(pairs_.size()); }
  // (row, column) of variable `idx`; rows of the C-part are offset by n.
  std::pair<int, int> pair(int idx) const { return pairs_[idx]; }
  // -1 when (j,k) is not a variable of this set.
  int index(int j, int k) const;
  int a_size() const { return a_count_; }
  bool is_c_part(int idx) const { return idx >= a_count_ && (lattice_ == Lattice::C || lattice_ == Lattice::D); }
  std::string label(int idx) const;
  int find_label(const std::string& s) const;
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.lattice_ == b.lattice_ && a.n_ == b.n_ && a.names_ == b.names_;
  }
  friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

 private:
  Lattice lattice_ = Lattice::Line;
  int n_ = 1;
  int a_count_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::string> names_;
};

// Sparse exponent vector: sorted (variable, exponent>0) pairs.
class MultiIndex {
 public:
  MultiIndex() = default;
  static MultiIndex unit(int var, int e = 1);
  static MultiIndex from_dense(const std::vector<int>& d);

  int degree() const { return degree_; }
  int get(int var) const;
  void set(int var, int e);
  void add(int var, int de);
  const std::vector<std::pair<int, int>>& entries() const { return e_; }
  std::vector<int> dense(int nvars) const;
  MultiIndex operator+(const MultiIndex& o) const;
  bool divides(const MultiIndex& o) const;

  // degree first, then the larger exponent on the earlier variable
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

 private:
  std::vector<std::pair<int, int>> e_;
  int degree_ = 0;
};

std::string to_string(const VarSet& vs, const MultiIndex& m);

// All multi-indices of total degree exactly d over `vs`, in series order.
std::vector<MultiIndex> enumerate(const VarSet& vs, int d);
std::vector<MultiIndex> enumerate_upto(const VarSet& vs, int N);

struct LatticeStats {
  std::vector<long> under;  // index 1..n
  std::vector<long> over;
  std::vector<long> c;  // lattice C: diagonal counted twice
  long c_total = 0;
  std::vector<long> b;  // lattice C, diagonal counted once
  std::vector<long> d;  // lattice D
  long d_total = 0;
};

LatticeStats stats(const VarSet& vs, const MultiIndex& m);

long binomial(long n, long k);

}  // namespace phf
