#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "singraph/ring.hpp"

namespace singraph {

// Dense row-major n x n matrix (n = 2 or 3) over a Ring. Equality and the
// canonical key are taken on the reduced entry codes, entry (0,0) most
// significant, so sorting by key is lexicographic entry order.
class Matrix {
 public:
  Matrix(Ring ring, int n);
  static Matrix identity(Ring ring, int n);
  static Matrix from_key(Ring ring, int n, std::uint64_t key);

  int dim() const { return n_; }
  const Ring& ring() const { return ring_; }
  RingElement at(int i, int j) const { return e_[i * n_ + j]; }
  void set(int i, int j, RingElement v) { e_[i * n_ + j] = v; }

  Matrix mul(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix neg() const;
  Matrix inverse() const;  // adjugate / det; NonUnit if det is not invertible
  RingElement det() const;
  RingElement trace() const;

  std::uint64_t key() const;
  bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool is_identity() const;
  std::string str() const;

 private:
  Ring ring_;
  int n_;
  std::array<RingElement, 9> e_{};
};

// |SL_n(R)|: q^{n(n-1)/2} prod_{i=2..n}(q^i - 1) over fields,
// p^{(n^2-1)(e-1)} |SL_n(F_p)| over Z/p^e.
std::int64_t sl_order(const Ring& r, int n);

// All of SL_n(R) in canonical lexicographic entry order. Fields are scanned
// directly; Z/p^e is filled by Hensel lifting the SL_n(F_p) fibers.
// CapExceeded when the group order is above `cap`.
std::vector<Matrix> sl_enumerate(const Ring& r, int n, std::int64_t cap = 20000);

// Row-echelon rank by Gaussian elimination; NotAField over Z/p^e, e > 1.
int matrix_rank(const Matrix& m);

// A connection set: closed under inverses and identity-free (checked at
// construction).
class SymmetricSet {
 public:
  enum class Kind { EigenNeg1, RankLe, Explicit };

  static SymmetricSet explicit_set(std::vector<Matrix> elements);

  Kind kind() const { return kind_; }
  int rank_ell() const { return ell_; }
  const std::vector<Matrix>& elements() const { return elems_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
  bool contains(const Matrix& m) const;

 private:
  friend SymmetricSet eigen_neg1_set(const Ring&, std::int64_t);
  friend SymmetricSet rank_le_set(const Ring&, int, int, std::int64_t);
  SymmetricSet(Kind kind, int ell, std::vector<Matrix> elems);
  void validate() const;

  Kind kind_;
  int ell_;
  std::vector<Matrix> elems_;  // sorted by key
  std::vector<std::uint64_t> keys_;
};

// {x in SL_2(R) : tr(x) = -2}, i.e. det(I + x) = 0. Over a field this is the
// set of matrices with eigenvalue -1 and has exactly q^2 elements. Needs 2
// invertible (p odd).
SymmetricSet eigen_neg1_set(const Ring& r, std::int64_t cap = 20000);

// {x in SL_n(F_q) : rank(I + x) <= n - ell}; ell = 1 recovers the
// eigenvalue -1 set, ell = n leaves {-I} (empty when -I is not in SL_n).
SymmetricSet rank_le_set(const Ring& field, int n, int ell, std::int64_t cap = 20000);

enum class UnipotentClass { MinusI, ClassT1, ClassT2 };

// Conjugacy class representatives of the trace -2 classes: T1 = [[-1,0],[-1,-1]],
// T2 = [[-1,0],[-nu,-1]] with nu the canonical generator of F_q*.
Matrix unipotent_rep_t1(const Ring& field);
Matrix unipotent_rep_t2(const Ring& field);

// SL_2-conjugacy class of a trace -2 element over a field. Decides via the
// rank-1 decomposition x + I = v w^T, w = lambda (v2, -v1): the square class
// of lambda is a class invariant, with lambda = -1 on the class of T1.
// NotInSet when tr(x) != -2.
UnipotentClass unipotent_class_of(const Matrix& x);

// a_{x,y} = [[1-4xy, -2x],[2y, 1]] in SL_2(R); injective whenever 2 is a unit.
Matrix embed_a(const Ring& r, RingElement x, RingElement y);

}  // namespace singraph
