#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "singraph/matrix.hpp"
#include "singraph/rng.hpp"

using namespace singraph;

TEST_CASE("group order formula matches enumeration") {
  struct Case {
    Ring ring;
    int n;
    std::int64_t expect;
  };
  const Case cases[] = {
      {Ring::prime_field(3), 2, 24},        {Ring::prime_field(5), 2, 120},
      {Ring::prime_field(7), 2, 336},       {Ring::extension_field(3, 2), 2, 720},
      {Ring::prime_field(2), 3, 168},       {Ring::prime_field(3), 3, 5616},
      {Ring::modular_ring(5, 2), 2, 15000}, {Ring::modular_ring(3, 2), 2, 648},
  };
  for (const auto& c : cases) {
    CHECK(sl_order(c.ring, c.n) == c.expect);
    const auto elems = sl_enumerate(c.ring, c.n);
    CHECK(static_cast<std::int64_t>(elems.size()) == c.expect);
    // canonical lexicographic order, no duplicates
    for (std::size_t i = 1; i < elems.size(); ++i) CHECK(elems[i - 1].key() < elems[i].key());
    for (const Matrix& m : elems) CHECK(m.det() == c.ring.one());
  }
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(sl_enumerate(Ring::prime_field(5), 3), CapExceededError);  // 372000
  CHECK_THROWS_AS(sl_enumerate(Ring::prime_field(997), 2), CapExceededError);
}

TEST_CASE("lifted enumeration equals the brute-force scan over Z/9") {
  const Ring z9 = Ring::modular_ring(3, 2);
  std::set<std::uint64_t> brute;
  for (std::uint64_t key = 0; key < 9 * 9 * 9 * 9; ++key) {
    const Matrix m = Matrix::from_key(z9, 2, key);
    if (m.det() == z9.one()) brute.insert(key);
  }
  const auto lifted = sl_enumerate(z9, 2);
  CHECK(lifted.size() == brute.size());
  for (const Matrix& m : lifted) CHECK(brute.count(m.key()) == 1);
}

TEST_CASE("matrix inverse and arithmetic over rings") {
  Rng rng(7);
  for (const Ring& r : {Ring::prime_field(7), Ring::extension_field(3, 2),
                        Ring::modular_ring(5, 2)}) {
    const auto elems = sl_enumerate(r, 2);
    const Matrix id = Matrix::identity(r, 2);
    for (int t = 0; t < 50; ++t) {
      const Matrix& m = elems[rng.below(elems.size())];
      CHECK(m.mul(m.inverse()) == id);
      CHECK(m.inverse().det() == r.one());
    }
  }
  // zero-divisor determinant has no inverse
  const Ring z25 = Ring::modular_ring(5, 2);
  Matrix m(z25, 2);
  m.set(0, 0, z25.from_int(5));
  m.set(1, 1, z25.from_int(1));
  CHECK_THROWS_AS(m.inverse(), NonUnitError);
}

TEST_CASE("rank by elimination") {
  const Ring f5 = Ring::prime_field(5);
  CHECK(matrix_rank(Matrix::identity(f5, 2)) == 2);
  CHECK(matrix_rank(Matrix(f5, 2)) == 0);
  CHECK(matrix_rank(Matrix::identity(f5, 3)) == 3);

  // I + T1 has a single nonzero entry
  const Matrix t1 = unipotent_rep_t1(f5);
  CHECK(matrix_rank(Matrix::identity(f5, 2).add(t1)) == 1);

  CHECK_THROWS_AS(matrix_rank(Matrix::identity(Ring::modular_ring(5, 2), 2)), NotAFieldError);
}

TEST_CASE("eigenvalue -1 sets have q^2 elements over fields") {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    const Ring r = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    const SymmetricSet s = eigen_neg1_set(r);
    CHECK(s.size() == q * q);
    const Matrix minus_i = Matrix::identity(r, 2).neg();
    CHECK(s.contains(minus_i));
    for (const Matrix& m : s.elements()) CHECK(!m.is_identity());
  }
  // over Z/p^e the set still excludes the identity and is inverse-closed
  const SymmetricSet s25 = eigen_neg1_set(Ring::modular_ring(5, 2));
  CHECK(s25.size() == 725);
  for (const Matrix& m : s25.elements()) CHECK(s25.contains(m.inverse()));
}

TEST_CASE("trace -2 classes split as 1 + (q^2-1)/2 + (q^2-1)/2") {
  for (std::int64_t q : {3, 5, 7, 9}) {
    const Ring r = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    std::map<UnipotentClass, std::int64_t> sizes;
    for (const Matrix& m : eigen_neg1_set(r).elements()) sizes[unipotent_class_of(m)]++;
    CHECK(sizes[UnipotentClass::MinusI] == 1);
    CHECK(sizes[UnipotentClass::ClassT1] == (q * q - 1) / 2);
    CHECK(sizes[UnipotentClass::ClassT2] == (q * q - 1) / 2);
  }
}

TEST_CASE("class labels recover the representatives and resist conjugation") {
  for (std::int64_t q : {3, 5, 7}) {
    const Ring r = Ring::prime_field(q);
    CHECK(unipotent_class_of(unipotent_rep_t1(r)) == UnipotentClass::ClassT1);
    CHECK(unipotent_class_of(unipotent_rep_t2(r)) == UnipotentClass::ClassT2);
    CHECK(unipotent_class_of(Matrix::identity(r, 2).neg()) == UnipotentClass::MinusI);
    CHECK_THROWS_AS(unipotent_class_of(Matrix::identity(r, 2)), NotInSetError);

    const auto group = sl_enumerate(r, 2);
    Rng rng(42 + q);
    for (const Matrix& x : eigen_neg1_set(r).elements()) {
      const UnipotentClass label = unipotent_class_of(x);
      for (int t = 0; t < 100 / static_cast<int>(q); ++t) {
        const Matrix& g = group[rng.below(group.size())];
        CHECK(unipotent_class_of(g.mul(x).mul(g.inverse())) == label);
      }
    }
  }
}

TEST_CASE("class labels agree with a brute-force conjugation search") {
  for (std::int64_t q : {3, 5, 7}) {
    const Ring r = Ring::prime_field(q);
    const auto group = sl_enumerate(r, 2);
    const Matrix t1 = unipotent_rep_t1(r);
    std::set<std::uint64_t> t1_orbit;
    for (const Matrix& g : group) t1_orbit.insert(g.mul(t1).mul(g.inverse()).key());
    for (const Matrix& x : eigen_neg1_set(r).elements()) {
      if (x == Matrix::identity(r, 2).neg()) continue;
      const bool in_t1 = t1_orbit.count(x.key()) == 1;
      CHECK(unipotent_class_of(x) ==
            (in_t1 ? UnipotentClass::ClassT1 : UnipotentClass::ClassT2));
    }
  }
}

TEST_CASE("rank cut sets interpolate between the eigenvalue set and -I") {
  const Ring f3 = Ring::prime_field(3);
  const SymmetricSet cut1 = rank_le_set(f3, 2, 1);
  const SymmetricSet eig = eigen_neg1_set(f3);
  CHECK(cut1.size() == eig.size());
  for (const Matrix& m : eig.elements()) CHECK(cut1.contains(m));

  const SymmetricSet cut2 = rank_le_set(f3, 2, 2);
  CHECK(cut2.size() == 1);
  CHECK(cut2.contains(Matrix::identity(f3, 2).neg()));

  // n = 3 over F_2: counted by full enumeration of the 168-element group
  const SymmetricSet cut31 = rank_le_set(Ring::prime_field(2), 3, 1);
  CHECK(cut31.size() == 120);

  CHECK_THROWS_AS(rank_le_set(f3, 2, 0), BadArgumentError);
  CHECK_THROWS_AS(rank_le_set(Ring::modular_ring(5, 2), 2, 1), NotAFieldError);
}

TEST_CASE("symmetric set validation rejects bad explicit sets") {
  const Ring f5 = Ring::prime_field(5);
  CHECK_THROWS_AS(SymmetricSet::explicit_set({Matrix::identity(f5, 2)}), IdentityInSetError);
  // T1 alone is not inverse-closed
  CHECK_THROWS_AS(SymmetricSet::explicit_set({unipotent_rep_t1(f5)}), AsymmetricSetError);
  // adding the inverse fixes it
  const Matrix t1 = unipotent_rep_t1(f5);
  CHECK_NOTHROW(SymmetricSet::explicit_set({t1, t1.inverse()}));
}

TEST_CASE("embedding a_{x,y}") {
  const Ring z25 = Ring::modular_ring(5, 2);
  CHECK(embed_a(z25, z25.zero(), z25.zero()) == Matrix::identity(z25, 2));

  // all |R|^2 images distinct, all in SL_2
  std::set<std::uint64_t> keys;
  for (std::int64_t x = 0; x < 25; ++x) {
    for (std::int64_t y = 0; y < 25; ++y) {
      const Matrix a = embed_a(z25, z25.element(x), z25.element(y));
      CHECK(a.det() == z25.one());
      keys.insert(a.key());
    }
  }
  CHECK(keys.size() == 625);

  // det(a1 + a2) = 4 - 4 (x2-x1)(y2-y1) on random samples
  Rng rng(11);
  for (const Ring& r : {z25, Ring::prime_field(7)}) {
    for (int t = 0; t < 100; ++t) {
      const RingElement x1 = r.element(rng.below(r.size())), y1 = r.element(rng.below(r.size()));
      const RingElement x2 = r.element(rng.below(r.size())), y2 = r.element(rng.below(r.size()));
      const Matrix sum = embed_a(r, x1, y1).add(embed_a(r, x2, y2));
      const RingElement expect = r.sub(
          r.from_int(4), r.mul(r.from_int(4), r.mul(r.sub(x2, x1), r.sub(y2, y1))));
      CHECK(sum.det() == expect);
    }
  }
}
