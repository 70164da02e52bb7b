#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "singraph/errors.hpp"

namespace singraph {

// Exact rational on int64 parts. Desk-scale values stay far below overflow;
// intermediates go through __int128 anyway.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw BadArgumentError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num_ = g ? n / g : n;
    den_ = g ? d / g : d;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw BadArgumentError("rational division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 g = 1;
    {
      i128 x = a, y = d;
      while (y) {
        i128 t = x % y;
        x = y;
        y = t;
      }
      g = x ? x : 1;
    }
    return Rational(static_cast<std::int64_t>(n / g), static_cast<std::int64_t>(d / g));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// a + b*sqrt(d) with rational a, b. d is carried along and may be negative
// (the character table of SL2 over F_q with q = 3 mod 4 has complex entries);
// the arithmetic is formal in sqrt(d) and never evaluates the radical.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(Rational a, Rational b, std::int64_t d) : a_(a), b_(b), d_(d) {}
  static QuadValue integer(std::int64_t v) { return QuadValue(Rational(v), Rational(0), 0); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return b_ == Rational(0); }

  QuadValue operator+(const QuadValue& o) const {
    return QuadValue(a_ + o.a_, b_ + o.b_, merged_radicand(o));
  }
  QuadValue operator-(const QuadValue& o) const {
    return QuadValue(a_ - o.a_, b_ - o.b_, merged_radicand(o));
  }
  QuadValue operator*(const QuadValue& o) const {
    const std::int64_t d = merged_radicand(o);
    return QuadValue(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
  }
  QuadValue scaled(const Rational& r) const { return QuadValue(a_ * r, b_ * r, d_); }

  bool operator==(const QuadValue& o) const {
    if (!(a_ == o.a_) || !(b_ == o.b_)) return false;
    return is_rational() || o.is_rational() || d_ == o.d_;
  }

  std::string str() const {
    if (is_rational()) return a_.str();
    std::string s = a_ == Rational(0) ? std::string() : a_.str();
    if (!s.empty() && !(b_ < Rational(0))) s += "+";
    if (b_ == Rational(-1)) {
      s += "-";
    } else if (!(b_ == Rational(1))) {
      s += b_.str() + "*";
    }
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
  }

 private:
  std::int64_t merged_radicand(const QuadValue& o) const {
    if (is_rational()) return o.d_;
    if (o.is_rational()) return d_;
    if (d_ != o.d_) throw BadArgumentError("mixing quadratic values over different radicands");
    return d_;
  }

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;  // meaningful only when b_ != 0
};

}  // namespace singraph
