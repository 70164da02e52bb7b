#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "singraph/cayley.hpp"
#include "singraph/spectral.hpp"

namespace singraph {

struct KloostermanValue {
  std::int64_t u = 0, v = 0, modulus = 0;
  double value = 0;        // the sum is real; the imaginary part is checked <= 1e-9
  double weil_budget = 0;  // 2 gcd(u,v,p^n)^{1/2} p^{n/2}
};

// Kl(u,v,p^n) = sum over units x mod p^n of exp(2 pi i (ux + v x^-1)/p^n),
// by direct summation with a precomputed inverse table. BadModulus unless
// p >= 3 is prime and n >= 1. A nonreal sum (|imag| > 1e-9) is an internal
// error, not data.
KloostermanValue kloosterman(std::int64_t u, std::int64_t v, std::int64_t p, int n);

struct WeilCheck {
  bool holds = false;
  double ratio = 0;  // |Kl| / bound
  KloostermanValue kv;
};

// Estermann-Weil: |Kl(u,v,p^n)| <= 2 gcd(u,v,p^n)^{1/2} p^{n/2}.
WeilCheck weil_check(std::int64_t u, std::int64_t v, std::int64_t p, int n);

std::vector<KloostermanValue> kloosterman_sweep(std::int64_t p, int n);

void write_kloosterman_csv(std::ostream& os, const std::vector<KloostermanValue>& values);

// Spectrum of H(Z/p^n): the multiset {Kl(u,v,p^n) : 0 <= u,v < p^n}. The
// (0,0) term is the degree p^n - p^{n-1}; p >= 5 keeps the graph connected.
Spectrum hyperbola_spectrum(std::int64_t p, int n);

// Sarnak bound of the hyperbola spectrum; by the embedding of H(Z/p^n) into
// Sing_2(Z/p^n) this lower-bounds chi(Sing_2(Z/p^n)). Asserts the
// gcd-controlled Weil budget |lambda| <= 2 p^{n-1/2} on every nontrivial
// eigenvalue and the floor value sqrt(p)/4.
double klo_sl_bound(std::int64_t p, int n);

}  // namespace singraph
