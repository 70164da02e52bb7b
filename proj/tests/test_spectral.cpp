#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "singraph/cayley.hpp"
#include "singraph/spectral.hpp"

using namespace singraph;

namespace {

Spectrum sing2_dense(std::int64_t q) {
  const Ring r = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
  const auto group = std::make_shared<const MatrixGroup>(r, 2);
  return eig_dense(sing_graph(group));
}

}  // namespace

TEST_CASE("jacobi solves small symmetric matrices") {
  // [[0,1],[1,0]] ->{-1, 1}
  const auto e2 = jacobi_eigenvalues({0, 1, 1, 0}, 2);
  CHECK(e2[0] == doctest::Approx(-1).epsilon(1e-10));
  CHECK(e2[1] == doctest::Approx(1).epsilon(1e-10));
  // already diagonal
  const auto e3 = jacobi_eigenvalues({3, 0, 0, 0, -2, 0, 0, 0, 7}, 3);
  CHECK(e3 == std::vector<double>{-2, 3, 7});
  CHECK(jacobi_eigenvalues({}, 0).empty());
}

TEST_CASE("dense spectra of fixture graphs") {
  Graph edgeless(4);
  edgeless.finalize();
  const Spectrum s0 = eig_dense(edgeless);
  CHECK(s0.entries().size() == 1);
  CHECK(s0.entries()[0].value == doctest::Approx(0.0));
  CHECK(s0.entries()[0].multiplicity == 4);

  const Spectrum k4 = eig_dense(complete_graph(4));
  CHECK(k4.entries().size() == 2);
  CHECK(k4.entries()[0].value == doctest::Approx(3).epsilon(1e-8));
  CHECK(k4.entries()[0].multiplicity == 1);
  CHECK(k4.entries()[1].value == doctest::Approx(-1).epsilon(1e-8));
  CHECK(k4.entries()[1].multiplicity == 3);

  JacobiOptions opt;
  opt.dense_cap = 3;
  CHECK_THROWS_AS(eig_dense(complete_graph(4), opt), CapExceededError);
}

TEST_CASE("character table shape and entries") {
  const auto t5 = sl2_character_table(5);
  // psi row: dimension q, values (q, 0, 0)
  const auto psi = std::find_if(t5.begin(), t5.end(),
                                [](const CharacterRow& r) { return r.name == CharName::Psi; });
  REQUIRE(psi != t5.end());
  CHECK(psi->dim == 5);
  CHECK(psi->at_minus_i == QuadValue::integer(5));
  CHECK(psi->at_t1 == QuadValue::integer(0));
  CHECK(psi->at_t2 == QuadValue::integer(0));

  // xi_1 at T1 is (1 + sqrt(5))/2 when eps = +1
  const auto xi1 = std::find_if(t5.begin(), t5.end(),
                                [](const CharacterRow& r) { return r.name == CharName::Xi1; });
  REQUIRE(xi1 != t5.end());
  CHECK(xi1->dim == 3);
  CHECK(xi1->at_t1 == QuadValue(Rational(1, 2), Rational(1, 2), 5));

  // theta_1 over F_7: dimension 6, value -6 at -I
  const auto t7 = sl2_character_table(7);
  const auto theta1 = std::find_if(t7.begin(), t7.end(), [](const CharacterRow& r) {
    return r.name == CharName::Theta && r.index == 1;
  });
  REQUIRE(theta1 != t7.end());
  CHECK(theta1->dim == 6);
  CHECK(theta1->at_minus_i == QuadValue::integer(-6));

  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    std::int64_t dim2 = 0;
    for (const auto& row : sl2_character_table(q)) dim2 += row.dim * row.dim;
    CHECK(dim2 == q * (q * q - 1));
  }
  CHECK_THROWS_AS(sl2_character_table(8), BadArgumentError);
}

TEST_CASE("character sums cancel the radical and match the closed forms") {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    for (const auto& row : sl2_character_table(q)) {
      const Rational lambda = sing2_eigenvalue(row, q);
      CHECK(lambda.is_integer());
      CHECK(lambda.num() == sing2_eigenvalue_closed_form(row, q));
    }
  }
}

TEST_CASE("character-sum spectrum equals the dense eigensolver spectrum") {
  for (std::int64_t q : {3, 5}) {
    const Spectrum exact = sing2_spectrum_exact(q);
    CHECK(exact.total_multiplicity() == q * (q * q - 1));
    CHECK(exact.multiset_equal(sing2_dense(q), 1e-6));
    CHECK(exact.sum() == doctest::Approx(0.0));  // loop-free trace
  }
  // q = 5 multiplicities, aggregated over squared dimensions by sign
  const Spectrum s5 = sing2_spectrum_exact(5);
  std::map<std::int64_t, std::int64_t> m;
  for (std::size_t i = 0; i < s5.entries().size(); ++i)
    m[s5.exact_value(i)] = s5.entries()[i].multiplicity;
  CHECK(m[25] == 1);
  CHECK(m[1] == 25);
  CHECK(m[5] == 42);
  CHECK(m[-5] == 52);
}

TEST_CASE("second eigenvalue of the matrix graphs is nonnegative") {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    const Spectrum s = sing2_spectrum_exact(q);
    CHECK(s.largest() == doctest::Approx(static_cast<double>(q) * q));
    CHECK(s.entries().front().multiplicity == 1);
    CHECK(s.second_largest() >= 0);
    CHECK(s.smallest() < 0);
  }
}

TEST_CASE("hoffman bound") {
  for (std::int64_t q : {3, 5, 7, 9}) {
    const BoundValue b = hoffman_bound(sing2_spectrum_exact(q));
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == Rational(q + 1));
  }
  // complete graph: 1 - (n-1)/(-1) = n
  const BoundValue kn = hoffman_bound(Spectrum::from_exact({{4, 1}, {-1, 4}}));
  CHECK(*kn.exact == Rational(5));
  CHECK(hoffman_bound(eig_dense(complete_graph(5))).value == doctest::Approx(5).epsilon(1e-7));

  CHECK_THROWS_AS(hoffman_bound(Spectrum::from_exact({{0, 4}})), EmptyGraphError);
}

TEST_CASE("sarnak bound") {
  CHECK(sarnak_bound(sing2_spectrum_exact(7), 49) == doctest::Approx(7.0));
  CHECK(sarnak_bound(Spectrum::from_exact({{4, 1}, {-1, 4}}), 4) == doctest::Approx(4.0));
  // two disjoint triangles: degree eigenvalue has multiplicity 2
  CHECK_THROWS_AS(sarnak_bound(Spectrum::from_exact({{2, 2}, {-1, 4}}), 2), DisconnectedError);
}

TEST_CASE("quasirandom bound") {
  // D = (7-1)/2 = 3, |S| = 49, |G| = 336
  CHECK(quasirandom_bound(3, 49, 336) == doctest::Approx(std::sqrt(147.0 / 336.0)));
  CHECK(quasirandom_bound(3, 49, 336) == doctest::Approx(0.6614).epsilon(1e-3));
  CHECK(quasirandom_bound(1, 10, 100) <= 1.0);
  const double g = 100;
  CHECK(quasirandom_bound(g, g - 1, g) == doctest::Approx(std::sqrt(g - 1)));
  CHECK_THROWS_AS(quasirandom_bound(0, 1, 1), BadArgumentError);
}

TEST_CASE("bounds are functions of the multiset alone") {
  const Spectrum a = Spectrum::from_exact({{9, 1}, {3, 4}, {1, 9}, {-3, 10}});
  const Spectrum b = sing2_spectrum_exact(3);
  CHECK(a.multiset_equal(b, 0));
  CHECK(hoffman_bound(a).value == hoffman_bound(b).value);
  CHECK(sarnak_bound(a, 9) == sarnak_bound(b, 9));
}

TEST_CASE("spectrum csv") {
  const Spectrum s = sing2_spectrum_exact(3);
  CHECK(s.to_csv() == "value,multiplicity\n9,1\n3,4\n1,9\n-3,10\n");
}
