#pragma once

#include <cstdint>

#include "singraph/group.hpp"
#include "singraph/ring.hpp"

namespace singraph {

// Point count of {x in SL_n(F_q) : rank(I + x) <= n - ell} against the
// dimension count d - m = (n^2 - 1) - ell^2 expected from the codimension of
// the rank variety.
struct CountReport {
  int n = 0;
  int ell = 0;
  std::int64_t q = 0;
  std::int64_t count = 0;
  std::int64_t group_order = 0;
  double expected_exponent = 0;  // (n^2 - 1) - ell^2
  double observed_exponent = 0;  // log_q(count)
};

CountReport count_rank_variety(int n, int ell, const Ring& field, std::int64_t cap = 20000);

// Brute-force check of the mixing inequality: random A, B, C with
// |A||B||C| > |G|^3 / D must satisfy AB meets C. Subset sizes are the
// smallest equal sizes meeting the hypothesis; when none exist the check
// reports zero trials.
struct MixingReport {
  std::int64_t group_order = 0;
  std::int64_t d = 0;
  int trials_requested = 0;
  int trials_run = 0;
  int violations = 0;
  std::int64_t subset_size = 0;
  bool satisfiable = false;
  std::uint64_t seed = 0;
};

MixingReport gowers_mixing_check(const FiniteGroup& g, std::int64_t d, int trials,
                                 std::uint64_t seed);

// Frobenius: SL_2(F_p) is (p-1)/2-quasirandom. The general Lie-type bounds
// are not computed here; this is the one shipped known value.
std::int64_t sl2_quasirandom_degree(std::int64_t p);

}  // namespace singraph
