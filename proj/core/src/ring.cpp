#include "singraph/ring.hpp"

#include <algorithm>
#include <numeric>

namespace singraph {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// x^-1 mod m by extended Euclid; -1 when gcd(x, m) != 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  std::int64_t r0 = m, r1 = x % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return -1;
  return ((s0 % m) + m) % m;
}

// Polynomials over F_p as coefficient vectors, lowest degree first, no
// trailing zeros (except the zero polynomial = empty vector).
using Poly = std::vector<std::int64_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  // m monic
  while (a.size() >= m.size() && !a.empty()) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    poly_trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  poly_trim(r);
  return r;
}

bool poly_is_irreducible(const Poly& f, std::int64_t p) {
  // Trial division by every monic polynomial of degree <= deg(f)/2.
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::int64_t count = ipow(p, d);
    for (std::int64_t v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      std::int64_t t = v;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of the given degree, ordered by the value
// c0 + c1*p + ... of the non-leading coefficients.
Poly find_modulus(std::int64_t p, int degree) {
  const std::int64_t count = ipow(p, degree);
  for (std::int64_t v = 0; v < count; ++v) {
    Poly f(degree + 1, 0);
    std::int64_t t = v;
    for (int i = 0; i < degree; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[degree] = 1;
    if (poly_is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible modulus found");  // unreachable for prime p
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::int64_t, int> factor_prime_power(std::int64_t q) {
  if (q < 2) throw BadArgumentError("not a prime power: " + std::to_string(q));
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int f = 0;
      std::int64_t r = q;
      while (r % p == 0) {
        r /= p;
        ++f;
      }
      if (r != 1) throw BadArgumentError("not a prime power: " + std::to_string(q));
      return {p, f};
    }
  }
  return {q, 1};
}

int epsilon(std::int64_t q) {
  if (q % 2 == 0) throw BadArgumentError("epsilon needs odd q");
  return q % 4 == 1 ? +1 : -1;
}

Ring Ring::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw BadArgumentError("not a prime: " + std::to_string(p));
  auto d = std::make_shared<Data>();
  d->kind = Kind::PrimeField;
  d->p = p;
  d->exponent = 1;
  d->size = p;
  Ring r{d};
  d->generator = static_cast<std::int32_t>(r.multiplicative_generator_search());
  return r;
}

Ring Ring::extension_field(std::int64_t p, int degree) {
  if (!is_prime(p) || p < 3) throw BadArgumentError("extension fields need an odd prime");
  if (degree < 2 || degree > 4) throw BadArgumentError("extension degree must be in [2,4]");
  auto d = std::make_shared<Data>();
  d->kind = Kind::ExtensionField;
  d->p = p;
  d->exponent = degree;
  d->size = ipow(p, degree);
  d->modulus = find_modulus(p, degree);
  Ring r{d};
  d->generator = static_cast<std::int32_t>(r.multiplicative_generator_search());
  return r;
}

Ring Ring::modular_ring(std::int64_t p, int exponent) {
  if (!is_prime(p) || p < 3) throw BadArgumentError("modular rings need an odd prime");
  if (exponent < 1) throw BadArgumentError("modulus exponent must be >= 1");
  auto d = std::make_shared<Data>();
  d->kind = exponent == 1 ? Kind::PrimeField : Kind::ModularRing;
  d->p = p;
  d->exponent = exponent;
  d->size = ipow(p, exponent);
  Ring r{d};
  if (exponent == 1) d->generator = static_cast<std::int32_t>(r.multiplicative_generator_search());
  return r;
}

const std::vector<std::int64_t>& Ring::modulus_poly() const {
  if (d_->kind != Kind::ExtensionField) throw BadArgumentError("no modulus: not an extension field");
  return d_->modulus;
}

RingElement Ring::element(std::int64_t code) const {
  if (code < 0 || code >= d_->size) throw BadArgumentError("element code out of range");
  return RingElement(static_cast<std::int32_t>(code));
}

RingElement Ring::from_int(std::int64_t v) const {
  const std::int64_t m = d_->kind == Kind::ExtensionField ? d_->p : d_->size;
  return RingElement(static_cast<std::int32_t>(((v % m) + m) % m));
}

std::vector<std::int64_t> Ring::decode(std::int64_t code) const {
  std::vector<std::int64_t> c(d_->exponent, 0);
  for (int i = 0; i < d_->exponent; ++i) {
    c[i] = code % d_->p;
    code /= d_->p;
  }
  return c;
}

std::int64_t Ring::encode(const std::vector<std::int64_t>& c) const {
  std::int64_t code = 0;
  for (int i = d_->exponent - 1; i >= 0; --i) {
    code = code * d_->p + (i < static_cast<int>(c.size()) ? c[i] : 0);
  }
  return code;
}

std::vector<std::int64_t> Ring::coeffs(RingElement x) const {
  if (d_->kind == Kind::ExtensionField) return decode(x.code());
  return {x.code()};
}

RingElement Ring::add(RingElement a, RingElement b) const {
  if (d_->kind != Kind::ExtensionField)
    return RingElement(static_cast<std::int32_t>((a.code() + b.code()) % d_->size));
  auto ca = decode(a.code()), cb = decode(b.code());
  for (int i = 0; i < d_->exponent; ++i) ca[i] = (ca[i] + cb[i]) % d_->p;
  return RingElement(static_cast<std::int32_t>(encode(ca)));
}

RingElement Ring::sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

RingElement Ring::neg(RingElement a) const {
  if (d_->kind != Kind::ExtensionField)
    return RingElement(static_cast<std::int32_t>((d_->size - a.code()) % d_->size));
  auto c = decode(a.code());
  for (auto& ci : c) ci = (d_->p - ci) % d_->p;
  return RingElement(static_cast<std::int32_t>(encode(c)));
}

RingElement Ring::mul(RingElement a, RingElement b) const {
  if (d_->kind != Kind::ExtensionField)
    return RingElement(static_cast<std::int32_t>((a.code() * b.code()) % d_->size));
  Poly pa = decode(a.code()), pb = decode(b.code());
  poly_trim(pa);
  poly_trim(pb);
  Poly r = poly_mod(poly_mul(pa, pb, d_->p), d_->modulus, d_->p);
  return RingElement(static_cast<std::int32_t>(encode(r)));
}

RingElement Ring::pow(RingElement a, std::int64_t e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  RingElement r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Ring::is_unit(RingElement a) const {
  if (d_->kind == Kind::ModularRing) return a.code() % d_->p != 0;
  return a.code() != 0;
}

RingElement Ring::inverse(RingElement a) const {
  if (!is_unit(a)) throw NonUnitError("not a unit in " + name());
  if (d_->kind != Kind::ExtensionField) {
    const std::int64_t inv = mod_inverse(a.code(), d_->size);
    return RingElement(static_cast<std::int32_t>(inv));
  }
  return pow(a, d_->size - 2);  // Fermat in F_q
}

std::int64_t Ring::multiplicative_generator_search() const {
  // Ascending canonical order; first element of full multiplicative order.
  // Full order checked on the maximal proper divisors of q-1.
  const std::int64_t order = d_->size - 1;
  const auto primes = prime_factors(order);
  for (std::int64_t code = 1; code < d_->size; ++code) {
    const RingElement x = RingElement(static_cast<std::int32_t>(code));
    bool full = true;
    for (const std::int64_t ell : primes) {
      if (pow(x, order / ell) == one()) {
        full = false;
        break;
      }
    }
    if (full) return code;
  }
  throw Error("no generator found");  // unreachable for a field
}

RingElement Ring::multiplicative_generator() const {
  if (!is_field()) throw NotAFieldError("generator needs a field, got " + name());
  return RingElement(d_->generator);
}

SquareClass Ring::square_class(RingElement x) const {
  if (!is_field()) throw NotAFieldError("square class needs a field, got " + name());
  if (x.code() == 0) return SquareClass::Zero;
  // Euler criterion
  return pow(x, (d_->size - 1) / 2) == one() ? SquareClass::Square : SquareClass::NonSquare;
}

int Ring::sign_lambda(RingElement x) const {
  if (!is_field()) throw NotAFieldError("sign_lambda needs a field, got " + name());
  if (d_->p == 2) throw BadArgumentError("sign_lambda needs odd characteristic");
  const auto c = coeffs(x);
  for (const std::int64_t ci : c) {
    if (ci != 0) return ci <= (d_->p - 1) / 2 ? +1 : -1;
  }
  return 0;
}

bool Ring::operator==(const Ring& o) const {
  if (d_ == o.d_) return true;
  return d_->kind == o.d_->kind && d_->p == o.d_->p && d_->exponent == o.d_->exponent &&
         d_->modulus == o.d_->modulus;
}

std::string Ring::name() const {
  switch (d_->kind) {
    case Kind::PrimeField:
      return "F_" + std::to_string(d_->p);
    case Kind::ExtensionField:
      return "F_" + std::to_string(d_->size);
    case Kind::ModularRing:
      return "Z/" + std::to_string(d_->size);
  }
  return "?";
}

}  // namespace singraph
