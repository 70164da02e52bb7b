#include "singraph/kloosterman.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <ostream>

#include "singraph/ring.hpp"

namespace singraph {

namespace {

constexpr double kImagTol = 1e-9;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_modulus(std::int64_t p, int n) {
  if (p < 3 || !is_prime(p) || n < 1)
    throw BadModulusError("modulus must be p^n with p >= 3 prime, n >= 1");
}

// inverse table for units mod m; -1 on non-units
std::vector<std::int64_t> inverse_table(std::int64_t m, std::int64_t p) {
  std::vector<std::int64_t> inv(m, -1);
  for (std::int64_t x = 1; x < m; ++x) {
    if (x % p == 0) continue;
    if (inv[x] >= 0) continue;
    // extended Euclid
    std::int64_t r0 = m, r1 = x, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    const std::int64_t xi = ((s0 % m) + m) % m;
    inv[x] = xi;
    inv[xi] = x;
  }
  return inv;
}

KloostermanValue evaluate(std::int64_t u, std::int64_t v, std::int64_t p, int n,
                          const std::vector<std::int64_t>& inv) {
  const std::int64_t m = ipow(p, n);
  double re = 0, im = 0;
  for (std::int64_t x = 1; x < m; ++x) {
    if (inv[x] < 0) continue;
    const std::int64_t phase = (u * x + v * inv[x]) % m;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(m);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  if (std::abs(im) > kImagTol)
    throw Error("Kloosterman sum is not real: imag = " + std::to_string(im));
  const auto g = std::gcd(std::gcd(((u % m) + m) % m, ((v % m) + m) % m), m);
  KloostermanValue kv;
  kv.u = u;
  kv.v = v;
  kv.modulus = m;
  kv.value = re;
  kv.weil_budget = 2.0 * std::sqrt(static_cast<double>(g)) *
                   std::pow(static_cast<double>(p), static_cast<double>(n) / 2.0);
  return kv;
}

}  // namespace

KloostermanValue kloosterman(std::int64_t u, std::int64_t v, std::int64_t p, int n) {
  check_modulus(p, n);
  const std::int64_t m = ipow(p, n);
  return evaluate(u, v, p, n, inverse_table(m, p));
}

WeilCheck weil_check(std::int64_t u, std::int64_t v, std::int64_t p, int n) {
  WeilCheck out;
  out.kv = kloosterman(u, v, p, n);
  out.holds = std::abs(out.kv.value) <= out.kv.weil_budget + 1e-6;
  out.ratio = std::abs(out.kv.value) / out.kv.weil_budget;
  return out;
}

std::vector<KloostermanValue> kloosterman_sweep(std::int64_t p, int n) {
  check_modulus(p, n);
  const std::int64_t m = ipow(p, n);
  const auto inv = inverse_table(m, p);
  std::vector<KloostermanValue> out;
  out.reserve(static_cast<std::size_t>(m) * m);
  for (std::int64_t u = 0; u < m; ++u)
    for (std::int64_t v = 0; v < m; ++v) out.push_back(evaluate(u, v, p, n, inv));
  return out;
}

void write_kloosterman_csv(std::ostream& os, const std::vector<KloostermanValue>& values) {
  os << "u,v,m,value,weil_ratio\n";
  char buf[128];
  for (const auto& kv : values) {
    std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%.12g,%.12g",
                  static_cast<long long>(kv.u), static_cast<long long>(kv.v),
                  static_cast<long long>(kv.modulus), kv.value,
                  std::abs(kv.value) / kv.weil_budget);
    os << buf << "\n";
  }
}

Spectrum hyperbola_spectrum(std::int64_t p, int n) {
  check_modulus(p, n);
  if (p < 5) throw BadArgumentError("hyperbola spectrum needs p >= 5");
  std::vector<double> values;
  const std::int64_t m = ipow(p, n);
  values.reserve(static_cast<std::size_t>(m) * m);
  const auto inv = inverse_table(m, p);
  for (std::int64_t u = 0; u < m; ++u)
    for (std::int64_t v = 0; v < m; ++v) values.push_back(evaluate(u, v, p, n, inv).value);
  return Spectrum::from_values(std::move(values), 1e-9);
}

double klo_sl_bound(std::int64_t p, int n) {
  const Spectrum s = hyperbola_spectrum(p, n);
  const std::int64_t m = ipow(p, n);
  const std::int64_t degree = m - m / p;
  const double weil_ceiling =
      2.0 * std::pow(static_cast<double>(p), static_cast<double>(n) - 0.5);
  // gcd(u,v,p^n) <= p^{n-1} off the trivial character, so Estermann-Weil caps
  // every nontrivial eigenvalue at 2 p^{n-1/2}
  bool first = true;
  for (const auto& e : s.entries()) {
    std::int64_t mult = e.multiplicity;
    if (first) {
      if (std::abs(e.value - static_cast<double>(degree)) > 1e-6 || e.multiplicity < 1)
        throw Error("hyperbola spectrum lost its degree eigenvalue");
      mult -= 1;
      first = false;
    }
    if (mult > 0 && std::abs(e.value) > weil_ceiling + 1e-6)
      throw Error("nontrivial hyperbola eigenvalue above the Weil budget");
  }
  const double bound = sarnak_bound(s, degree);
  if (bound < std::sqrt(static_cast<double>(p)) / 4.0 - 1e-9)
    throw Error("spectral bound fell below sqrt(p)/4");
  return bound;
}

}  // namespace singraph
