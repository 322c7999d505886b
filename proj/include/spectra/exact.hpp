#pragma once

// Exact arithmetic in quadratic number fields Q(sqrt(d)).
//
// All comparisons are decided by integer case analysis; floating point is
// used only when a caller explicitly asks for a decimal or double rendering.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spectra {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

// Floor division for arbitrary signs (cpp_int's / truncates toward zero).
BigInt floor_div(const BigInt& num, const BigInt& den);

// Largest integer r with r*r <= n.  Requires n >= 0.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

// Writes n = f*f*s with s squarefree and returns s; f is stored in *factor.
// Requires n > 0.  Cost is trial division up to sqrt of the squarefree
// cofactor, which stays small for the discriminants seen here.
BigInt squarefree_part(const BigInt& n, BigInt* factor = nullptr);

// a + b*sqrt(d) with rational a, b and integer d.
//
// Canonical form: d is squarefree and > 1 whenever b != 0; a pure rational
// is stored as b == 0, d == 1.  The constructor enforces this, so equal
// values always have identical (a, b, d) triples and operator== is exact.
class Surd {
 public:
  Surd() : a_(0), b_(0), d_(1) {}
  Surd(const Rational& value) : a_(value), b_(0), d_(1) {}  // NOLINT: implicit
  Surd(long long value) : a_(value), b_(0), d_(1) {}        // NOLINT: implicit
  Surd(Rational a, Rational b, BigInt d);

  static Surd sqrt_of(const BigInt& n) { return Surd(0, 1, n); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  // Sign of the exact value: -1, 0 or +1.
  int sign() const;

  // Sign of *this - other.  The operands must lie in one field: mixing two
  // irrational Surds with different radicands is a contract error.
  int compare(const Surd& other) const;
  int compare(const Rational& other) const;

  Surd operator-() const;
  Surd& operator+=(const Surd& rhs);
  Surd& operator-=(const Surd& rhs);
  Surd& operator*=(const Surd& rhs);

  // Multiplicative inverse via the conjugate; domain error on zero.
  Surd inverse() const;

  BigInt floor_value() const;

  // Round-to-nearest decimal rendering with the given number of fractional
  // digits (exact rational ties round up).  Display only.
  std::string to_decimal(int digits) const;

  // Directed rendering: Down never exceeds the value, Up never undercuts
  // it, so printed interval endpoints stay conservative.
  enum class Rounding { Nearest, Down, Up };
  std::string to_decimal(int digits, Rounding mode) const;

  double to_double() const;

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
  friend bool operator<(const Surd& x, const Surd& y) { return x.compare(y) < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return x.compare(y) > 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return x.compare(y) <= 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return x.compare(y) >= 0; }

 private:
  Rational a_, b_;
  BigInt d_;
};

Surd operator+(Surd lhs, const Surd& rhs);
Surd operator-(Surd lhs, const Surd& rhs);
Surd operator*(Surd lhs, const Surd& rhs);
Surd operator/(const Surd& lhs, const Surd& rhs);

// The root of c*x^2 + (d - a)*x - b = 0 lying strictly inside (0, 1), for
// the Moebius map x -> (a*x + b)/(c*x + d).  The radicand (d-a)^2 + 4*b*c
// is normalized by extracting square factors, so equal values compare
// equal.  Throws std::domain_error when no root lies in (0, 1).
Surd mobius_fixed_point(const BigInt& a, const BigInt& b,
                        const BigInt& c, const BigInt& d);

}  // namespace spectra
