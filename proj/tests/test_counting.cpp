#include <cmath>

#include "doctest.h"
#include "singraph/counting.hpp"
#include "singraph/matrix.hpp"

using namespace singraph;

TEST_CASE("rank-1 cut counts are exactly q^2 for 2x2") {
  for (std::int64_t q : {3, 5, 7, 9}) {
    const Ring r = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    const CountReport report = count_rank_variety(2, 1, r);
    CHECK(report.count == q * q);
    CHECK(report.expected_exponent == doctest::Approx(2.0));
    CHECK(report.observed_exponent == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("3x3 counts agree between the rank route and the determinant route") {
  for (std::int64_t q : {2, 3}) {
    const Ring r = Ring::prime_field(q);
    const CountReport report = count_rank_variety(3, 1, r);

    // independent route: det(I + x) = 0 instead of Gaussian elimination
    const Matrix id = Matrix::identity(r, 3);
    std::int64_t det_count = 0;
    for (const Matrix& x : sl_enumerate(r, 3))
      if (id.add(x).det() == r.zero()) ++det_count;
    CHECK(report.count == det_count);
    CHECK(report.count == (q == 2 ? 120 : 2457));

    // observed slope within 0.35 of the codimension count 8 - 1
    CHECK(report.expected_exponent == doctest::Approx(7.0));
    CHECK(std::abs(report.observed_exponent - 7.0) <= 0.35);
  }
}

TEST_CASE("count preconditions") {
  CHECK_THROWS_AS(count_rank_variety(2, 2, Ring::prime_field(3)), BadArgumentError);
  CHECK_THROWS_AS(count_rank_variety(2, 0, Ring::prime_field(3)), BadArgumentError);
  CHECK_THROWS_AS(count_rank_variety(2, 1, Ring::modular_ring(5, 2)), NotAFieldError);
  CHECK_THROWS_AS(count_rank_variety(3, 1, Ring::prime_field(5)), CapExceededError);
}

TEST_CASE("mixing inequality holds on sampled triples") {
  const MatrixGroup sl2f5(Ring::prime_field(5), 2);
  const MixingReport report = gowers_mixing_check(sl2f5, 2, 25, 0);
  CHECK(report.satisfiable);
  CHECK(report.subset_size == 96);  // smallest s with s^3 > 120^3 / 2
  CHECK(report.trials_run == 25);
  CHECK(report.violations == 0);
}

TEST_CASE("mixing is deterministic in the seed") {
  const MatrixGroup sl2f3(Ring::prime_field(3), 2);
  const MixingReport a = gowers_mixing_check(sl2f3, 2, 10, 123);
  const MixingReport b = gowers_mixing_check(sl2f3, 2, 10, 123);
  CHECK(a.subset_size == b.subset_size);
  CHECK(a.violations == b.violations);
  CHECK(a.trials_run == b.trials_run);
}

TEST_CASE("an unsatisfiable hypothesis runs no trials") {
  const MatrixGroup sl2f3(Ring::prime_field(3), 2);
  const MixingReport report = gowers_mixing_check(sl2f3, 1, 50, 0);
  CHECK(!report.satisfiable);
  CHECK(report.trials_run == 0);
  CHECK(report.violations == 0);
}

TEST_CASE("mixing cap") {
  const MatrixGroup sl2f9(Ring::extension_field(3, 2), 2);  // order 720
  CHECK_THROWS_AS(gowers_mixing_check(sl2f9, 2, 1, 0), CapExceededError);
}

TEST_CASE("known quasirandomness degrees") {
  CHECK(sl2_quasirandom_degree(5) == 2);
  CHECK(sl2_quasirandom_degree(7) == 3);
  CHECK(sl2_quasirandom_degree(13) == 6);
  CHECK_THROWS_AS(sl2_quasirandom_degree(9), BadArgumentError);
}
