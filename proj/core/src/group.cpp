#include "singraph/group.hpp"

#include <algorithm>

namespace singraph {

MatrixGroup::MatrixGroup(Ring ring, int n, std::int64_t cap)
    : ring_(std::move(ring)), n_(n), elems_(sl_enumerate(ring_, n, cap)) {
  keys_.reserve(elems_.size());
  for (const Matrix& m : elems_) keys_.push_back(m.key());
  identity_ = index_of(Matrix::identity(ring_, n_));
}

int MatrixGroup::index_of(const Matrix& m) const {
  const std::uint64_t k = m.key();
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return -1;
  return static_cast<int>(it - keys_.begin());
}

int MatrixGroup::op(int a, int b) const {
  const int idx = index_of(elems_[a].mul(elems_[b]));
  if (idx < 0) throw Error("group not closed under multiplication");
  return idx;
}

int MatrixGroup::inverse(int a) const {
  const int idx = index_of(elems_[a].inverse());
  if (idx < 0) throw Error("group not closed under inversion");
  return idx;
}

int PairGroup::op(int a, int b) const {
  const auto [ax, ay] = element(a);
  const auto [bx, by] = element(b);
  return index_of(ring_.add(ax, bx), ring_.add(ay, by));
}

int PairGroup::inverse(int a) const {
  const auto [x, y] = element(a);
  return index_of(ring_.neg(x), ring_.neg(y));
}

std::pair<RingElement, RingElement> PairGroup::element(int i) const {
  return {ring_.element(i / size_), ring_.element(i % size_)};
}

std::string PairGroup::element_name(int a) const {
  const auto [x, y] = element(a);
  return "(" + std::to_string(x.code()) + "," + std::to_string(y.code()) + ")";
}

}  // namespace singraph
