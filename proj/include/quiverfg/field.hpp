#pragma once

#include <gmpxx.h>

#include <string>

namespace qfg {

// Every scalar is an mpq_class. Over a prime field the value is kept as a
// canonical residue 0..p-1 with denominator one.
using Scalar = mpq_class;

class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(long p);

  bool is_rationals() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  long characteristic() const noexcept { return p_; }

  // Maps an arbitrary rational into the field (denominator must be a unit).
  Scalar from_rational(const mpq_class& q) const;
  Scalar from_int(long v) const { return from_rational(mpq_class(v)); }

  void reduce(Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // a <- a - c*b
  void sub_mul(Scalar& a, const Scalar& c, const Scalar& b) const;
  // a <- a + c*b
  void add_mul(Scalar& a, const Scalar& c, const Scalar& b) const;

  std::string to_string() const;

  friend bool operator==(const Field& x, const Field& y) { return x.p_ == y.p_; }
  friend bool operator!=(const Field& x, const Field& y) { return x.p_ != y.p_; }

 private:
  explicit Field(long p) : p_(p) {}
  long p_ = 0;
};

bool is_prime(long n);

}  // namespace qfg
