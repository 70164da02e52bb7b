#include <numeric>
#include <set>

#include "doctest.h"
#include "singraph/ring.hpp"

using namespace singraph;

namespace {

// independent extended-Euclid oracle
std::int64_t egcd_inverse(std::int64_t x, std::int64_t m) {
  std::int64_t r0 = m, r1 = x, s0 = 0, s1 = 1;
  while (r1) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  REQUIRE(r0 == 1);
  return ((s0 % m) + m) % m;
}

}  // namespace

TEST_CASE("ring construction validates its parameters") {
  CHECK_NOTHROW(Ring::prime_field(2));  // only fields in characteristic 2
  CHECK_THROWS_AS(Ring::prime_field(9), BadArgumentError);
  CHECK_THROWS_AS(Ring::extension_field(2, 2), BadArgumentError);
  CHECK_THROWS_AS(Ring::extension_field(3, 5), BadArgumentError);
  CHECK_THROWS_AS(Ring::modular_ring(2, 3), BadArgumentError);
  CHECK_THROWS_AS(Ring::modular_ring(5, 0), BadArgumentError);
  CHECK(Ring::modular_ring(5, 1).is_field());
  CHECK(!Ring::modular_ring(5, 2).is_field());
}

TEST_CASE("inverses match the extended-Euclid oracle") {
  const Ring f5 = Ring::prime_field(5);
  CHECK(f5.inverse(f5.from_int(2)) == f5.from_int(3));

  const Ring z25 = Ring::modular_ring(5, 2);
  CHECK_THROWS_AS(z25.inverse(z25.from_int(5)), NonUnitError);
  CHECK(z25.inverse(z25.from_int(7)).code() == egcd_inverse(7, 25));
  CHECK(z25.inverse(z25.from_int(7)).code() == 18);

  for (std::int64_t c = 1; c < 25; ++c) {
    if (c % 5 == 0) continue;
    const RingElement x = z25.element(c);
    CHECK(z25.mul(x, z25.inverse(x)) == z25.one());
    CHECK(z25.inverse(z25.inverse(x)) == x);  // involution
  }
}

TEST_CASE("extension field uses the first irreducible modulus and exact arithmetic") {
  const Ring f9 = Ring::extension_field(3, 2);
  CHECK(f9.size() == 9);
  CHECK(f9.modulus_poly() == std::vector<std::int64_t>{1, 0, 1});  // t^2 + 1

  // elements are coefficient vectors; t has code 3
  const RingElement t = f9.element(3);
  CHECK(f9.coeffs(t) == std::vector<std::int64_t>{0, 1});
  CHECK(f9.mul(t, t) == f9.from_int(-1));  // t^2 = -1

  for (std::int64_t c = 1; c < 9; ++c) {
    const RingElement x = f9.element(c);
    CHECK(f9.mul(x, f9.inverse(x)) == f9.one());
    CHECK(f9.inverse(f9.inverse(x)) == x);
  }

  const Ring f27 = Ring::extension_field(3, 3);
  CHECK(f27.size() == 27);
  for (std::int64_t c = 1; c < 27; ++c)
    CHECK(f27.mul(f27.element(c), f27.inverse(f27.element(c))) == f27.one());
}

TEST_CASE("multiplicative generators have full order") {
  const Ring f5 = Ring::prime_field(5);
  CHECK(f5.multiplicative_generator() == f5.from_int(2));
  const Ring f7 = Ring::prime_field(7);
  CHECK(f7.multiplicative_generator() == f7.from_int(3));

  const Ring f9 = Ring::extension_field(3, 2);
  CHECK(f9.coeffs(f9.multiplicative_generator()) == std::vector<std::int64_t>{1, 1});  // t + 1

  for (const Ring& r : {f5, f7, f9}) {
    const RingElement nu = r.multiplicative_generator();
    std::set<std::int64_t> powers;
    RingElement x = r.one();
    for (std::int64_t i = 0; i + 1 < r.size(); ++i) {
      powers.insert(x.code());
      x = r.mul(x, nu);
    }
    CHECK(static_cast<std::int64_t>(powers.size()) == r.size() - 1);
  }

  CHECK_THROWS_AS(Ring::modular_ring(5, 2).multiplicative_generator(), NotAFieldError);
}

TEST_CASE("square classes follow the Euler criterion") {
  const Ring f5 = Ring::prime_field(5);
  CHECK(f5.square_class(f5.from_int(-1)) == SquareClass::Square);  // -1 = 2^2
  const Ring f7 = Ring::prime_field(7);
  CHECK(f7.square_class(f7.from_int(-1)) == SquareClass::NonSquare);
  CHECK(f7.square_class(f7.zero()) == SquareClass::Zero);

  for (std::int64_t q : {3, 5, 7, 9, 13}) {
    const Ring r = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    std::int64_t squares = 0;
    for (std::int64_t c = 1; c < q; ++c) {
      const RingElement x = r.element(c);
      CHECK(r.square_class(r.mul(x, x)) == SquareClass::Square);
      if (r.square_class(x) == SquareClass::Square) ++squares;
    }
    CHECK(squares == (q - 1) / 2);
  }
}

TEST_CASE("sign function is odd and splits the field in half") {
  const Ring f7 = Ring::prime_field(7);
  CHECK(f7.sign_lambda(f7.zero()) == 0);
  CHECK(f7.sign_lambda(f7.from_int(2)) == +1);
  CHECK(f7.sign_lambda(f7.from_int(5)) == -1);

  const Ring f9 = Ring::extension_field(3, 2);
  CHECK(f9.sign_lambda(f9.element(3)) == +1);   // t
  CHECK(f9.sign_lambda(f9.element(6)) == -1);   // 2t

  for (std::int64_t q : {3, 5, 7, 9, 13}) {
    const Ring r = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    std::int64_t plus = 0, minus = 0;
    for (std::int64_t c = 1; c < q; ++c) {
      const RingElement x = r.element(c);
      const int s = r.sign_lambda(x);
      CHECK(s != 0);
      CHECK(s == -r.sign_lambda(r.neg(x)));
      (s > 0 ? plus : minus) += 1;
    }
    CHECK(plus == (q - 1) / 2);
    CHECK(minus == (q - 1) / 2);
  }
}

TEST_CASE("epsilon tracks q mod 4") {
  CHECK(epsilon(5) == +1);
  CHECK(epsilon(7) == -1);
  CHECK(epsilon(9) == +1);
  CHECK(epsilon(3) == -1);
  CHECK(epsilon(13) == +1);
  CHECK_THROWS_AS(epsilon(8), BadArgumentError);
}

TEST_CASE("prime power factoring") {
  CHECK(factor_prime_power(9) == std::pair<std::int64_t, int>{3, 2});
  CHECK(factor_prime_power(7) == std::pair<std::int64_t, int>{7, 1});
  CHECK(factor_prime_power(125) == std::pair<std::int64_t, int>{5, 3});
  CHECK_THROWS_AS(factor_prime_power(12), BadArgumentError);
}
