#include "spectra/exact.hpp"

#include <cmath>
#include <utility>

namespace spectra {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("floor_div: zero divisor");
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

BigInt squarefree_part(const BigInt& n, BigInt* factor) {
  if (n <= 0) throw std::domain_error("squarefree_part: argument must be positive");
  BigInt r;
  if (is_perfect_square(n, &r)) {
    if (factor) *factor = r;
    return 1;
  }
  BigInt remaining = n;
  BigInt square_root = 1;   // sqrt of the extracted square part
  BigInt squarefree = 1;
  for (BigInt p = 2; p * p <= remaining; p == 2 ? p = 3 : p += 2) {
    if (remaining % p != 0) continue;
    int count = 0;
    while (remaining % p == 0) {
      remaining /= p;
      ++count;
    }
    for (int i = 0; i < count / 2; ++i) square_root *= p;
    if (count % 2) squarefree *= p;
  }
  // No prime factor below its own square root survives trial division, so
  // whatever remains is 1 or prime, hence squarefree.
  if (remaining > 1) squarefree *= remaining;
  if (factor) *factor = square_root;
  return squarefree;
}

Surd::Surd(Rational a, Rational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_ == 0) {
    d_ = 1;
    return;
  }
  if (d_ <= 0) throw std::domain_error("Surd: radicand must be positive");
  BigInt f;
  d_ = squarefree_part(d_, &f);
  if (f != 1) b_ *= f;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

int Surd::sign() const {
  int sa = sign_of(a_);
  int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the winner is whichever of |a| and |b|*sqrt(d) is
  // larger, decided exactly by squaring.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  if (lhs == rhs) return 0;  // unreachable for squarefree d > 1
  return lhs > rhs ? sa : sb;
}

namespace {

void require_same_field(const Surd& x, const Surd& y) {
  if (x.radical_coefficient() != 0 && y.radical_coefficient() != 0 &&
      x.radicand() != y.radicand()) {
    throw std::invalid_argument("Surd: mixing values from different quadratic fields");
  }
}

}  // namespace

int Surd::compare(const Surd& other) const {
  require_same_field(*this, other);
  Surd diff = *this;
  diff -= other;
  return diff.sign();
}

int Surd::compare(const Rational& other) const {
  Surd diff = *this;
  diff -= Surd(other);
  return diff.sign();
}

Surd Surd::operator-() const {
  Surd out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Surd& Surd::operator+=(const Surd& rhs) {
  require_same_field(*this, rhs);
  if (b_ == 0) d_ = rhs.d_;
  a_ += rhs.a_;
  b_ += rhs.b_;
  if (b_ == 0) d_ = 1;
  return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
  *this += -rhs;
  return *this;
}

Surd& Surd::operator*=(const Surd& rhs) {
  require_same_field(*this, rhs);
  const BigInt d = (b_ != 0) ? d_ : rhs.d_;
  Rational na = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d);
  Rational nb = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = (b_ == 0) ? BigInt(1) : d;
  return *this;
}

Surd Surd::inverse() const {
  if (sign() == 0) throw std::domain_error("Surd: inverse of zero");
  if (b_ == 0) {
    Surd out;
    out.a_ = Rational(1) / a_;  // keeps the sign on the numerator
    return out;
  }
  // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2*d); the norm cannot
  // vanish because sqrt(d) is irrational.
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  Surd out;
  out.a_ = a_ / norm;
  out.b_ = -b_ / norm;
  out.d_ = d_;
  return out;
}

BigInt Surd::floor_value() const {
  if (b_ == 0) return floor_div(numerator(a_), denominator(a_));
  // Common denominator: value = (u + w*sqrt(d)) / m with m > 0.
  BigInt an = numerator(a_), ad = denominator(a_);
  BigInt bn = numerator(b_), bd = denominator(b_);
  BigInt m = ad * bd;
  BigInt u = an * bd;
  BigInt w = bn * ad;
  // floor(w*sqrt(d)); w*w*d is never a perfect square since d is squarefree
  // and > 1, so the negative branch is exact.
  BigInt t = isqrt(w * w * d_);
  BigInt wf = (w >= 0) ? t : -t - 1;
  BigInt n = floor_div(u + wf, m);
  while (compare(Rational(n + 1)) >= 0) ++n;
  while (compare(Rational(n)) < 0) --n;
  return n;
}

std::string Surd::to_decimal(int digits) const {
  return to_decimal(digits, Rounding::Nearest);
}

std::string Surd::to_decimal(int digits, Rounding mode) const {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  Surd scaled = *this;
  scaled *= Surd(Rational(scale));
  if (mode == Rounding::Nearest) scaled += Surd(Rational(1, 2));
  BigInt n = scaled.floor_value();
  if (mode == Rounding::Up) {
    bool integral = scaled.is_rational() &&
                    boost::multiprecision::denominator(scaled.rational_part()) == 1;
    if (!integral) ++n;
  }
  bool neg = n < 0;
  BigInt mag = boost::multiprecision::abs(n);
  BigInt ip = mag / scale;
  BigInt fp = mag % scale;
  std::string out;
  if (neg) out += '-';
  out += ip.str();
  if (digits > 0) {
    std::string frac = fp.str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

double Surd::to_double() const {
  double value = static_cast<double>(a_);
  if (b_ != 0) {
    value += static_cast<double>(b_) *
             std::sqrt(static_cast<double>(d_));
  }
  return value;
}

Surd operator+(Surd lhs, const Surd& rhs) {
  lhs += rhs;
  return lhs;
}

Surd operator-(Surd lhs, const Surd& rhs) {
  lhs -= rhs;
  return lhs;
}

Surd operator*(Surd lhs, const Surd& rhs) {
  lhs *= rhs;
  return lhs;
}

Surd operator/(const Surd& lhs, const Surd& rhs) {
  return lhs * rhs.inverse();
}

Surd mobius_fixed_point(const BigInt& a, const BigInt& b,
                        const BigInt& c, const BigInt& d) {
  const Rational zero(0), one(1);
  if (c == 0) {
    if (d == a) throw std::domain_error("mobius_fixed_point: degenerate map");
    Surd x{Rational(b, d - a)};
    if (x.compare(zero) > 0 && x.compare(one) < 0) return x;
    throw std::domain_error("mobius_fixed_point: no fixed point in (0,1)");
  }
  BigInt disc = (d - a) * (d - a) + 4 * b * c;
  if (disc < 0) throw std::domain_error("mobius_fixed_point: complex fixed points");
  Rational base(a - d, 2 * c);
  if (disc == 0) {
    Surd x{base};
    if (x.compare(zero) > 0 && x.compare(one) < 0) return x;
    throw std::domain_error("mobius_fixed_point: no fixed point in (0,1)");
  }
  Rational coeff(1, 2 * c);
  for (int pick = 0; pick < 2; ++pick) {
    Surd x(base, pick == 0 ? coeff : -coeff, disc);
    if (x.compare(zero) > 0 && x.compare(one) < 0) return x;
  }
  throw std::domain_error("mobius_fixed_point: no fixed point in (0,1)");
}

}  // namespace spectra
