#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "singraph/errors.hpp"

namespace singraph {

// An element of a Ring, held as its canonical code in [0, ring.size()).
// For F_p and Z/p^n the code is the reduced representative; for F_{p^f} the
// code is c0 + c1*p + ... + c_{f-1}*p^{f-1} over the coefficient vector.
// Arithmetic goes through the owning Ring; codes from different rings must
// not be mixed.
class RingElement {
 public:
  constexpr RingElement() = default;
  std::int64_t code() const { return code_; }
  auto operator<=>(const RingElement&) const = default;

 private:
  friend class Ring;
  explicit constexpr RingElement(std::int32_t code) : code_(code) {}
  std::int32_t code_ = 0;
};

enum class SquareClass { Zero, Square, NonSquare };

// F_p (p prime), F_{p^f} (p odd, 2 <= f <= 4, smallest-lexicographic monic
// irreducible modulus), or Z/p^nZ (p odd). Cheap-to-copy handle; all state
// is immutable after construction.
class Ring {
 public:
  enum class Kind { PrimeField, ExtensionField, ModularRing };

  static Ring prime_field(std::int64_t p);
  static Ring extension_field(std::int64_t p, int degree);
  static Ring modular_ring(std::int64_t p, int exponent);

  Kind kind() const { return d_->kind; }
  std::int64_t characteristic() const { return d_->p; }
  // f for extension fields, n for modular rings, 1 for prime fields.
  int exponent() const { return d_->exponent; }
  std::int64_t size() const { return d_->size; }
  bool is_field() const { return d_->kind != Kind::ModularRing || d_->exponent == 1; }
  // Monic modulus polynomial (c0, ..., c_{f-1}, 1); extension fields only.
  const std::vector<std::int64_t>& modulus_poly() const;

  RingElement zero() const { return RingElement(0); }
  RingElement one() const { return RingElement(1); }
  RingElement element(std::int64_t code) const;
  RingElement from_int(std::int64_t v) const;
  std::vector<std::int64_t> coeffs(RingElement x) const;

  RingElement add(RingElement a, RingElement b) const;
  RingElement sub(RingElement a, RingElement b) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  RingElement pow(RingElement a, std::int64_t e) const;
  bool is_unit(RingElement a) const;
  RingElement inverse(RingElement a) const;  // NonUnit

  // Fields only (NotAField otherwise).
  RingElement multiplicative_generator() const;
  SquareClass square_class(RingElement x) const;
  // lambda(0) = 0 and lambda(x) = -lambda(-x): +1 iff the first nonzero
  // coefficient of x lies in [1, (p-1)/2].
  int sign_lambda(RingElement x) const;

  bool operator==(const Ring& o) const;
  std::string name() const;

 private:
  struct Data {
    Kind kind;
    std::int64_t p;
    int exponent;
    std::int64_t size;
    std::vector<std::int64_t> modulus;   // extension fields
    std::int32_t generator = -1;         // fields: cached at construction
  };

  explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::vector<std::int64_t> decode(std::int64_t code) const;
  std::int64_t encode(const std::vector<std::int64_t>& c) const;
  std::int64_t multiplicative_generator_search() const;

  std::shared_ptr<const Data> d_;
};

// (-1)^((q-1)/2): +1 iff q = 1 mod 4. q must be odd.
int epsilon(std::int64_t q);

bool is_prime(std::int64_t n);

// Factor a prime power q = p^f; BadArgument if q is not one.
std::pair<std::int64_t, int> factor_prime_power(std::int64_t q);

}  // namespace singraph
