#include "singraph/matrix.hpp"

#include <algorithm>

namespace singraph {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Matrix::Matrix(Ring ring, int n) : ring_(std::move(ring)), n_(n) {
  if (n != 2 && n != 3) throw BadArgumentError("matrix dimension must be 2 or 3");
}

Matrix Matrix::identity(Ring ring, int n) {
  Matrix m(std::move(ring), n);
  for (int i = 0; i < n; ++i) m.set(i, i, m.ring_.one());
  return m;
}

Matrix Matrix::from_key(Ring ring, int n, std::uint64_t key) {
  Matrix m(std::move(ring), n);
  const auto size = static_cast<std::uint64_t>(m.ring_.size());
  for (int k = n * n - 1; k >= 0; --k) {
    m.e_[k] = m.ring_.element(static_cast<std::int64_t>(key % size));
    key /= size;
  }
  return m;
}

std::uint64_t Matrix::key() const {
  const auto size = static_cast<std::uint64_t>(ring_.size());
  std::uint64_t k = 0;
  for (int i = 0; i < n_ * n_; ++i) k = k * size + static_cast<std::uint64_t>(e_[i].code());
  return k;
}

Matrix Matrix::mul(const Matrix& o) const {
  Matrix r(ring_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      RingElement acc = ring_.zero();
      for (int k = 0; k < n_; ++k) acc = ring_.add(acc, ring_.mul(at(i, k), o.at(k, j)));
      r.set(i, j, acc);
    }
  }
  return r;
}

Matrix Matrix::add(const Matrix& o) const {
  Matrix r(ring_, n_);
  for (int i = 0; i < n_ * n_; ++i) r.e_[i] = ring_.add(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::neg() const {
  Matrix r(ring_, n_);
  for (int i = 0; i < n_ * n_; ++i) r.e_[i] = ring_.neg(e_[i]);
  return r;
}

RingElement Matrix::det() const {
  const Ring& R = ring_;
  if (n_ == 2) {
    return R.sub(R.mul(at(0, 0), at(1, 1)), R.mul(at(0, 1), at(1, 0)));
  }
  // Sarrus
  RingElement d = R.mul(at(0, 0), R.sub(R.mul(at(1, 1), at(2, 2)), R.mul(at(1, 2), at(2, 1))));
  d = R.sub(d, R.mul(at(0, 1), R.sub(R.mul(at(1, 0), at(2, 2)), R.mul(at(1, 2), at(2, 0)))));
  d = R.add(d, R.mul(at(0, 2), R.sub(R.mul(at(1, 0), at(2, 1)), R.mul(at(1, 1), at(2, 0)))));
  return d;
}

RingElement Matrix::trace() const {
  RingElement t = ring_.zero();
  for (int i = 0; i < n_; ++i) t = ring_.add(t, at(i, i));
  return t;
}

Matrix Matrix::inverse() const {
  const Ring& R = ring_;
  const RingElement dinv = R.inverse(det());  // NonUnit if det is a zero divisor
  Matrix r(R, n_);
  if (n_ == 2) {
    r.set(0, 0, R.mul(at(1, 1), dinv));
    r.set(0, 1, R.mul(R.neg(at(0, 1)), dinv));
    r.set(1, 0, R.mul(R.neg(at(1, 0)), dinv));
    r.set(1, 1, R.mul(at(0, 0), dinv));
    return r;
  }
  // adjugate^T / det
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      const RingElement cof =
          R.sub(R.mul(at(r0, c0), at(r1, c1)), R.mul(at(r0, c1), at(r1, c0)));
      r.set(j, i, R.mul(cof, dinv));
    }
  }
  return r;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? ring_.one() : ring_.zero())) return false;
  return true;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < n_; ++j) s += (j ? "," : "") + std::to_string(at(i, j).code());
  }
  return s + "]";
}

std::int64_t sl_order(const Ring& r, int n) {
  const std::int64_t p = r.characteristic();
  std::int64_t field_order = ipow(p, n * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) field_order *= ipow(p, i) - 1;
  const int e = r.kind() == Ring::Kind::ModularRing ? r.exponent() : 1;
  std::int64_t order = field_order * ipow(p, (n * n - 1) * (e - 1));
  if (r.kind() == Ring::Kind::ExtensionField) {
    const std::int64_t q = r.size();
    order = ipow(q, n * (n - 1) / 2);
    for (int i = 2; i <= n; ++i) {
      std::int64_t qi = 1;
      for (int k = 0; k < i; ++k) qi *= q;
      order *= qi - 1;
    }
  }
  return order;
}

namespace {

// SL_n over a field by direct lexicographic scan with a det filter.
std::vector<Matrix> sl_scan_field(const Ring& r, int n) {
  std::vector<Matrix> out;
  const std::int64_t size = r.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= static_cast<std::uint64_t>(size);
  for (std::uint64_t key = 0; key < total; ++key) {
    Matrix m = Matrix::from_key(r, n, key);
    if (m.det() == r.one()) out.push_back(std::move(m));
  }
  return out;
}

// SL_n(Z/p^e) by lifting each SL_n(Z/p^k) point through the det == 1
// congruence one exponent at a time. Every point of a fiber is found by
// scanning the p^{n^2} offsets; exactly p^{n^2-1} survive.
std::vector<Matrix> sl_hensel(const Ring& r, int n) {
  const std::int64_t p = r.characteristic();
  const int e = r.exponent();
  const int nn = n * n;

  // integer entry vectors mod p^k
  const Ring fp = Ring::prime_field(p);
  std::vector<std::vector<std::int64_t>> level;
  for (const Matrix& m : sl_scan_field(fp, n)) {
    std::vector<std::int64_t> ent(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ent[i * n + j] = m.at(i, j).code();
    level.push_back(std::move(ent));
  }

  auto det_mod = [n](const std::vector<std::int64_t>& a, std::int64_t m) {
    auto at = [&](int i, int j) { return a[i * n + j]; };
    std::int64_t d;
    if (n == 2) {
      d = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    } else {
      d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
          at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
          at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }
    return ((d % m) + m) % m;
  };

  std::int64_t mod = p;
  for (int k = 1; k < e; ++k) {
    const std::int64_t next_mod = mod * p;
    std::vector<std::vector<std::int64_t>> lifted;
    lifted.reserve(level.size() * static_cast<std::size_t>(ipow(p, nn - 1)));
    std::vector<std::int64_t> cand(nn);
    const std::int64_t offsets = ipow(p, nn);
    for (const auto& base : level) {
      for (std::int64_t off = 0; off < offsets; ++off) {
        std::int64_t t = off;
        for (int i = 0; i < nn; ++i) {
          cand[i] = base[i] + mod * (t % p);
          t /= p;
        }
        if (det_mod(cand, next_mod) == 1) lifted.push_back(cand);
      }
    }
    level = std::move(lifted);
    mod = next_mod;
  }

  std::vector<Matrix> out;
  out.reserve(level.size());
  for (const auto& ent : level) {
    Matrix m(r, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, r.element(ent[i * n + j]));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Matrix> sl_enumerate(const Ring& r, int n, std::int64_t cap) {
  const std::int64_t order = sl_order(r, n);
  if (order > cap) {
    throw CapExceededError("|SL_" + std::to_string(n) + "(" + r.name() + ")| = " +
                           std::to_string(order) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<Matrix> out;
  if (r.kind() == Ring::Kind::ModularRing && r.exponent() > 1) {
    out = sl_hensel(r, n);
    std::sort(out.begin(), out.end(),
              [](const Matrix& a, const Matrix& b) { return a.key() < b.key(); });
  } else {
    out = sl_scan_field(r, n);  // scan order is already lexicographic
  }
  if (static_cast<std::int64_t>(out.size()) != order)
    throw Error("enumeration size does not match the group order formula");
  return out;
}

int matrix_rank(const Matrix& m) {
  const Ring& R = m.ring();
  if (!R.is_field()) throw NotAFieldError("rank needs a field, got " + R.name());
  const int n = m.dim();
  std::vector<RingElement> a(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int row = rank; row < n; ++row) {
      if (a[row * n + col] != R.zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[rank * n + j]);
    const RingElement inv = R.inverse(a[rank * n + col]);
    for (int j = 0; j < n; ++j) a[rank * n + j] = R.mul(a[rank * n + j], inv);
    for (int row = 0; row < n; ++row) {
      if (row == rank || a[row * n + col] == R.zero()) continue;
      const RingElement f = a[row * n + col];
      for (int j = 0; j < n; ++j)
        a[row * n + j] = R.sub(a[row * n + j], R.mul(f, a[rank * n + j]));
    }
    ++rank;
  }
  return rank;
}

SymmetricSet::SymmetricSet(Kind kind, int ell, std::vector<Matrix> elems)
    : kind_(kind), ell_(ell), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(),
            [](const Matrix& a, const Matrix& b) { return a.key() < b.key(); });
  keys_.reserve(elems_.size());
  for (const Matrix& m : elems_) keys_.push_back(m.key());
  validate();
}

SymmetricSet SymmetricSet::explicit_set(std::vector<Matrix> elements) {
  return SymmetricSet(Kind::Explicit, 0, std::move(elements));
}

void SymmetricSet::validate() const {
  for (std::size_t i = 1; i < keys_.size(); ++i)
    if (keys_[i] == keys_[i - 1]) throw BadArgumentError("duplicate element in connection set");
  for (const Matrix& m : elems_) {
    if (m.is_identity()) throw IdentityInSetError("connection set contains the identity");
    if (!contains(m.inverse()))
      throw AsymmetricSetError("connection set not closed under inverses");
  }
}

bool SymmetricSet::contains(const Matrix& m) const {
  const std::uint64_t k = m.key();
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  return it != keys_.end() && *it == k;
}

SymmetricSet eigen_neg1_set(const Ring& r, std::int64_t cap) {
  if (r.characteristic() == 2)
    throw PreconditionFailedError("eigenvalue -1 set needs 2 invertible");
  const RingElement minus_two = r.neg(r.from_int(2));
  std::vector<Matrix> elems;
  for (Matrix& m : sl_enumerate(r, 2, cap)) {
    if (m.trace() == minus_two) elems.push_back(std::move(m));
  }
  return SymmetricSet(SymmetricSet::Kind::EigenNeg1, 0, std::move(elems));
}

SymmetricSet rank_le_set(const Ring& field, int n, int ell, std::int64_t cap) {
  if (!field.is_field()) throw NotAFieldError("rank-cut sets need a field");
  if (ell < 1 || ell > n) throw BadArgumentError("need 1 <= ell <= n");
  const Matrix id = Matrix::identity(field, n);
  std::vector<Matrix> elems;
  for (Matrix& m : sl_enumerate(field, n, cap)) {
    if (matrix_rank(id.add(m)) <= n - ell) elems.push_back(std::move(m));
  }
  return SymmetricSet(SymmetricSet::Kind::RankLe, ell, std::move(elems));
}

Matrix unipotent_rep_t1(const Ring& field) {
  Matrix t(field, 2);
  const RingElement m1 = field.neg(field.one());
  t.set(0, 0, m1);
  t.set(1, 0, m1);
  t.set(1, 1, m1);
  return t;
}

Matrix unipotent_rep_t2(const Ring& field) {
  Matrix t(field, 2);
  const RingElement m1 = field.neg(field.one());
  t.set(0, 0, m1);
  t.set(1, 0, field.neg(field.multiplicative_generator()));
  t.set(1, 1, m1);
  return t;
}

UnipotentClass unipotent_class_of(const Matrix& x) {
  const Ring& R = x.ring();
  if (!R.is_field() || x.dim() != 2) throw BadArgumentError("classification is over SL_2(F_q)");
  if (x.trace() != R.neg(R.from_int(2))) throw NotInSetError("trace is not -2");
  const Matrix b = x.add(Matrix::identity(R, 2));
  const bool zero0 = b.at(0, 0) == R.zero() && b.at(1, 0) == R.zero();
  const bool zero1 = b.at(0, 1) == R.zero() && b.at(1, 1) == R.zero();
  if (zero0 && zero1) return UnipotentClass::MinusI;

  // b = v w^T with w = lambda (v2, -v1); det(x) = 1 forces w orthogonal to v.
  RingElement v0, v1, w0, w1;
  if (!zero0) {
    v0 = b.at(0, 0);
    v1 = b.at(1, 0);
    // second column = mu * v
    const RingElement mu =
        v0 != R.zero() ? R.mul(b.at(0, 1), R.inverse(v0)) : R.mul(b.at(1, 1), R.inverse(v1));
    w0 = R.one();
    w1 = mu;
  } else {
    v0 = b.at(0, 1);
    v1 = b.at(1, 1);
    w0 = R.zero();
    w1 = R.one();
  }
  const RingElement lambda =
      v1 != R.zero() ? R.mul(w0, R.inverse(v1)) : R.neg(R.mul(w1, R.inverse(v0)));
  // calibration: lambda = -1 on the class of T1
  return R.square_class(R.neg(lambda)) == SquareClass::Square ? UnipotentClass::ClassT1
                                                              : UnipotentClass::ClassT2;
}

Matrix embed_a(const Ring& r, RingElement x, RingElement y) {
  if (!r.is_unit(r.from_int(2))) throw PreconditionFailedError("embedding needs 2 invertible");
  const RingElement two = r.from_int(2);
  const RingElement four = r.from_int(4);
  Matrix a(r, 2);
  a.set(0, 0, r.sub(r.one(), r.mul(four, r.mul(x, y))));
  a.set(0, 1, r.neg(r.mul(two, x)));
  a.set(1, 0, r.mul(two, y));
  a.set(1, 1, r.one());
  return a;
}

}  // namespace singraph
