#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "singraph/matrix.hpp"
#include "singraph/ring.hpp"

namespace singraph {

// Index view of a finite group: elements are 0 .. order-1 in canonical order.
// Implementations are immutable after construction and safe to share.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  virtual std::int64_t order() const = 0;
  virtual int identity() const = 0;
  virtual int op(int a, int b) const = 0;
  virtual int inverse(int a) const = 0;
  virtual std::string element_name(int a) const = 0;
};

// SL_n(R), indexed by the canonical lexicographic enumeration.
class MatrixGroup final : public FiniteGroup {
 public:
  MatrixGroup(Ring ring, int n, std::int64_t cap = 20000);

  std::int64_t order() const override { return static_cast<std::int64_t>(elems_.size()); }
  int identity() const override { return identity_; }
  int op(int a, int b) const override;
  int inverse(int a) const override;
  std::string element_name(int a) const override { return elems_[a].str(); }

  const Ring& ring() const { return ring_; }
  int dim() const { return n_; }
  const std::vector<Matrix>& elements() const { return elems_; }
  const Matrix& element(int i) const { return elems_[i]; }
  int index_of(const Matrix& m) const;  // -1 when absent

 private:
  Ring ring_;
  int n_;
  std::vector<Matrix> elems_;
  std::vector<std::uint64_t> keys_;  // parallel to elems_, ascending
  int identity_;
};

// (R^2, +); index = code(x) * |R| + code(y).
class PairGroup final : public FiniteGroup {
 public:
  explicit PairGroup(Ring ring) : ring_(std::move(ring)), size_(ring_.size()) {}

  std::int64_t order() const override { return size_ * size_; }
  int identity() const override { return 0; }
  int op(int a, int b) const override;
  int inverse(int a) const override;
  std::string element_name(int a) const override;

  const Ring& ring() const { return ring_; }
  std::pair<RingElement, RingElement> element(int i) const;
  int index_of(RingElement x, RingElement y) const {
    return static_cast<int>(x.code() * size_ + y.code());
  }

 private:
  Ring ring_;
  std::int64_t size_;
};

// Z/m additive; handy for small fixture graphs.
class CyclicGroup final : public FiniteGroup {
 public:
  explicit CyclicGroup(int m) : m_(m) {}
  std::int64_t order() const override { return m_; }
  int identity() const override { return 0; }
  int op(int a, int b) const override { return (a + b) % m_; }
  int inverse(int a) const override { return (m_ - a) % m_; }
  std::string element_name(int a) const override { return std::to_string(a); }

 private:
  int m_;
};

}  // namespace singraph
