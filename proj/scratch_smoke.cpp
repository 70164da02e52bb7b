#include <chrono>
#include <cstdio>

#include "singraph/cayley.hpp"
#include "singraph/chromatic.hpp"
#include "singraph/counting.hpp"
#include "singraph/kloosterman.hpp"
#include "singraph/spectral.hpp"

using namespace singraph;
using Clock = std::chrono::steady_clock;

double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int main() {
  // ring basics
  auto f5 = Ring::prime_field(5);
  std::printf("F5 gen=%lld\n", (long long)f5.multiplicative_generator().code());
  auto f9 = Ring::extension_field(3, 2);
  std::printf("F9 modulus:");
  for (auto c : f9.modulus_poly()) std::printf(" %lld", (long long)c);
  std::printf("  gen=%lld (coeffs", (long long)f9.multiplicative_generator().code());
  for (auto c : f9.coeffs(f9.multiplicative_generator())) std::printf(" %lld", (long long)c);
  std::printf(")\n");
  auto z25 = Ring::modular_ring(5, 2);
  std::printf("Z25 inv(7)=%lld\n", (long long)z25.inverse(z25.from_int(7)).code());

  // SL2 orders
  for (long q : {3L, 5L, 7L}) {
    auto r = Ring::prime_field(q);
    auto e = sl_enumerate(r, 2);
    auto s = eigen_neg1_set(r);
    std::printf("q=%ld |SL2|=%zu |E|=%lld\n", q, e.size(), (long long)s.size());
  }
  {
    auto e9 = sl_enumerate(f9, 2);
    auto s9 = eigen_neg1_set(f9);
    std::printf("F9 |SL2|=%zu |E|=%lld\n", e9.size(), (long long)s9.size());
  }
  {
    auto t0 = Clock::now();
    auto e25 = sl_enumerate(z25, 2);
    auto s25 = eigen_neg1_set(z25);
    std::printf("Z25 |SL2|=%zu |E|=%lld (%.2fs)\n", e25.size(), (long long)s25.size(),
                secs(t0, Clock::now()));
  }

  // exact vs dense spectrum
  for (long q : {3L, 5L, 9L}) {
    auto ring = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    auto group = std::make_shared<const MatrixGroup>(ring, 2);
    auto graph = sing_graph(group);
    auto t0 = Clock::now();
    auto dense = eig_dense(graph);
    auto exact = sing2_spectrum_exact(q);
    std::printf("q=%ld N=%lld match=%d (%.2fs) exact:", q, (long long)graph.num_vertices(),
                exact.multiset_equal(dense, 1e-6), secs(t0, Clock::now()));
    for (auto& e : exact.entries())
      std::printf(" %g x%lld", e.value, (long long)e.multiplicity);
    std::printf("\n");
  }

  // theta coloring + palettes
  for (long q : {3L, 5L, 7L}) {
    auto ring = Ring::prime_field(q);
    auto group = std::make_shared<const MatrixGroup>(ring, 2);
    auto graph = sing_graph(group);
    auto theta = theta_coloring(*group);
    auto viol = find_violating_edge(graph, theta);
    std::printf("q=%ld theta palette=%d proper=%d\n", q, theta.palette, !viol.has_value());
  }

  // chi / clique on Sing2(F_3)
  {
    auto ring = Ring::prime_field(3);
    auto group = std::make_shared<const MatrixGroup>(ring, 2);
    auto g = sing_graph(group).materialize();
    auto res = exact_chromatic(g);
    auto cl = clique_number(g);
    std::printf("Sing2(F3): chi=%lld (exact=%d) omega=%lld (exact=%d)\n",
                (long long)res.upper, res.exact.has_value(), (long long)cl.size, cl.exact);
  }
  for (long q : {5L, 7L}) {
    auto ring = Ring::prime_field(q);
    auto group = std::make_shared<const MatrixGroup>(ring, 2);
    auto g = sing_graph(group).materialize();
    SolveOptions opt;
    opt.max_vertices = 400;
    auto t0 = Clock::now();
    auto cl = clique_number(g, opt);
    std::printf("omega(Sing2(F%ld))=%lld exact=%d (%.2fs)\n", q, (long long)cl.size, cl.exact,
                secs(t0, Clock::now()));
  }

  // kloosterman
  auto k00 = kloosterman(0, 0, 5, 2);
  auto k10 = kloosterman(1, 0, 5, 1);
  auto k11 = kloosterman(1, 1, 5, 1);
  std::printf("Kl(0,0,25)=%g Kl(1,0,5)=%g Kl(1,1,5)=%.7f\n", k00.value, k10.value, k11.value);
  {
    auto t0 = Clock::now();
    auto h5 = hyperbola_graph(Ring::modular_ring(5, 1));
    auto dense = eig_dense(h5);
    auto formula = hyperbola_spectrum(5, 1);
    std::printf("H(Z5) match=%d hoffman=%.6f sarnak=%.6f (%.2fs)\n",
                formula.multiset_equal(dense, 1e-8), hoffman_bound(dense).value,
                sarnak_bound(formula, 4), secs(t0, Clock::now()));
    std::printf("klo_sl_bound(5,1)=%.6f (5,2)=%.6f (7,1)=%.6f\n", klo_sl_bound(5, 1),
                klo_sl_bound(5, 2), klo_sl_bound(7, 1));
  }

  // counting
  {
    auto r2 = count_rank_variety(3, 1, Ring::prime_field(2));
    auto r3 = count_rank_variety(3, 1, Ring::prime_field(3));
    std::printf("count(3,1,2)=%lld obs=%.3f; count(3,1,3)=%lld obs=%.3f\n",
                (long long)r2.count, r2.observed_exponent, (long long)r3.count,
                r3.observed_exponent);
  }

  // jacobi timing q=7 (336), q=9 (720), q=11 (1320)
  for (long q : {7L, 9L, 11L}) {
    auto ring = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    auto group = std::make_shared<const MatrixGroup>(ring, 2);
    auto graph = sing_graph(group);
    auto t0 = Clock::now();
    auto dense = eig_dense(graph);
    auto exact = sing2_spectrum_exact(q);
    std::printf("q=%ld N=%lld match=%d time=%.2fs\n", q, (long long)graph.num_vertices(),
                exact.multiset_equal(dense, 1e-6), secs(t0, Clock::now()));
  }
  return 0;
}
