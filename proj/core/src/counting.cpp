#include "singraph/counting.hpp"

#include <cmath>
#include <vector>

#include "singraph/matrix.hpp"
#include "singraph/rng.hpp"

namespace singraph {

CountReport count_rank_variety(int n, int ell, const Ring& field, std::int64_t cap) {
  if (!field.is_field()) throw NotAFieldError("point counts run over fields");
  if (ell < 1 || ell >= n) throw BadArgumentError("need 1 <= ell < n");
  const Matrix id = Matrix::identity(field, n);
  std::int64_t count = 0;
  std::int64_t order = 0;
  for (const Matrix& x : sl_enumerate(field, n, cap)) {
    ++order;
    if (matrix_rank(id.add(x)) <= n - ell) ++count;
  }
  CountReport r;
  r.n = n;
  r.ell = ell;
  r.q = field.size();
  r.count = count;
  r.group_order = order;
  r.expected_exponent = static_cast<double>(n * n - 1 - ell * ell);
  r.observed_exponent =
      count > 0 ? std::log(static_cast<double>(count)) / std::log(static_cast<double>(r.q)) : 0.0;
  return r;
}

MixingReport gowers_mixing_check(const FiniteGroup& g, std::int64_t d, int trials,
                                 std::uint64_t seed) {
  const std::int64_t order = g.order();
  if (order > 400)
    throw CapExceededError("mixing check materializes the multiplication table; order " +
                           std::to_string(order) + " > 400");
  if (d < 1) throw BadArgumentError("quasirandomness degree must be >= 1");

  MixingReport report;
  report.group_order = order;
  report.d = d;
  report.trials_requested = trials;
  report.seed = seed;

  // smallest equal subset size with s^3 > |G|^3 / d
  std::int64_t s = order;
  {
    const double target = std::pow(static_cast<double>(order), 3.0) / static_cast<double>(d);
    std::int64_t lo = 1;
    while (lo <= order &&
           static_cast<double>(lo) * static_cast<double>(lo) * static_cast<double>(lo) <= target)
      ++lo;
    s = lo;
  }
  if (s > order) {
    report.satisfiable = false;  // hypothesis unreachable; nothing to test
    return report;
  }
  report.satisfiable = true;
  report.subset_size = s;

  const int n = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = g.op(a, b);

  Rng master(seed);
  std::vector<char> in_c(n), in_ab(n);
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.fork(static_cast<std::uint64_t>(t));
    const auto a = rng.sample_indices(n, static_cast<int>(s));
    const auto b = rng.sample_indices(n, static_cast<int>(s));
    const auto c = rng.sample_indices(n, static_cast<int>(s));
    std::fill(in_c.begin(), in_c.end(), 0);
    for (const int x : c) in_c[x] = 1;
    std::fill(in_ab.begin(), in_ab.end(), 0);
    bool hit = false;
    for (const int x : a) {
      const int* row = table.data() + static_cast<std::size_t>(x) * n;
      for (const int y : b) {
        const int xy = row[y];
        in_ab[xy] = 1;
        if (in_c[xy]) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    ++report.trials_run;
    if (!hit) ++report.violations;
  }
  return report;
}

std::int64_t sl2_quasirandom_degree(std::int64_t p) {
  if (!is_prime(p) || p < 3) throw BadArgumentError("known degrees cover SL_2(F_p), p odd prime");
  return (p - 1) / 2;
}

}  // namespace singraph
