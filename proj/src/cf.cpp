#include "spectra/cf.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectra {

namespace {

void validate_digits(const std::vector<Digit>& ds, int k) {
  if (k < 1 || k > 255) throw std::invalid_argument("Word: alphabet bound out of range");
  for (Digit d : ds) {
    if (d < 1 || static_cast<int>(d) > k) {
      throw std::invalid_argument("Word: digit outside [1,k]");
    }
  }
}

}  // namespace

Word::Word(std::vector<Digit> ds, int alphabet) : digits(std::move(ds)), k(alphabet) {
  validate_digits(digits, k);
}

Word::Word(std::initializer_list<int> ds, int alphabet) : k(alphabet) {
  digits.reserve(ds.size());
  for (int d : ds) digits.push_back(static_cast<Digit>(d));
  validate_digits(digits, k);
}

Word Word::suffix() const {
  if (digits.empty()) throw std::invalid_argument("Word: suffix of the empty word");
  return Word(std::vector<Digit>(digits.begin() + 1, digits.end()), k);
}

Word Word::rotated_left() const {
  if (digits.empty()) return *this;
  std::vector<Digit> out(digits.begin() + 1, digits.end());
  out.push_back(digits.front());
  return Word(std::move(out), k);
}

Word Word::reversed() const {
  std::vector<Digit> out(digits.rbegin(), digits.rend());
  return Word(std::move(out), k);
}

Word Word::prepended(Digit a) const {
  std::vector<Digit> out;
  out.reserve(digits.size() + 1);
  out.push_back(a);
  out.insert(out.end(), digits.begin(), digits.end());
  return Word(std::move(out), k);
}

void Convergents::push_digit(Digit b) {
  BigInt p = BigInt(b) * p_n + p_prev;
  BigInt q = BigInt(b) * q_n + q_prev;
  p_prev = std::move(p_n);
  q_prev = std::move(q_n);
  p_n = std::move(p);
  q_n = std::move(q);
}

Convergents convergents(const Word& w) {
  Convergents c;
  for (Digit d : w.digits) c.push_digit(d);
  return c;
}

KContext make_context(int k) {
  if (k < 2) throw std::invalid_argument("make_context: k must be at least 2");
  if (k > 255) throw std::invalid_argument("make_context: k too large");
  KContext ctx;
  ctx.k = k;
  // alpha_plus is the root of x^2 + k*x - k = 0 in (0,1), and alpha_minus
  // is alpha_plus / k: prepending the digit k maps one onto the other.
  BigInt kk(k);
  ctx.alpha_plus = Surd(Rational(-kk, 2), Rational(1, 2), kk * kk + 4 * kk);
  ctx.alpha_minus = ctx.alpha_plus * Surd(Rational(1, kk));
  ctx.diam_ratio_lower = Rational(kk, (kk * (kk + 1) + 1) * (kk + 2));
  switch (k) {
    case 2:
      ctx.hd_lower = 0.5312;
      ctx.hd_upper = 0.5313;
      ctx.c1 = 0.28;
      ctx.c2 = 4.98;
      break;
    case 3:
      ctx.hd_lower = 0.7056;
      ctx.hd_upper = 0.7057;
      ctx.c1 = 0.23;
      ctx.c2 = 14.85;
      break;
    case 4:
      ctx.hd_lower = 0.7889;
      ctx.hd_upper = 0.7890;
      ctx.c1 = 0.23;
      ctx.c2 = 31.2;
      break;
    default:
      break;
  }
  return ctx;
}

namespace {

Surd endpoint(const Convergents& c, const Surd& tail) {
  Surd num = Surd(Rational(c.p_n)) + tail * Surd(Rational(c.p_prev));
  Surd den = Surd(Rational(c.q_n)) + tail * Surd(Rational(c.q_prev));
  return num * den.inverse();
}

}  // namespace

std::pair<Surd, Surd> cylinder_interval(const Convergents& c, const KContext& ctx) {
  Surd lo = endpoint(c, ctx.alpha_minus);
  Surd hi = endpoint(c, ctx.alpha_plus);
  if (hi < lo) std::swap(lo, hi);
  return {lo, hi};
}

std::pair<Surd, Surd> cylinder_interval(const Word& w, const KContext& ctx) {
  if (w.k != ctx.k) throw std::invalid_argument("cylinder_interval: context mismatch");
  return cylinder_interval(convergents(w), ctx);
}

Surd cylinder_diam(const Convergents& c, const KContext& ctx) {
  // (alpha_plus - alpha_minus) / ((q_n + alpha_plus*q_prev)(q_n + alpha_minus*q_prev))
  Surd den = (Surd(Rational(c.q_n)) + ctx.alpha_plus * Surd(Rational(c.q_prev))) *
             (Surd(Rational(c.q_n)) + ctx.alpha_minus * Surd(Rational(c.q_prev)));
  return (ctx.alpha_plus - ctx.alpha_minus) * den.inverse();
}

Surd cylinder_diam(const Word& w, const KContext& ctx) {
  if (w.k != ctx.k) throw std::invalid_argument("cylinder_diam: context mismatch");
  return cylinder_diam(convergents(w), ctx);
}

Surd cylinder_mid(const Convergents& c, const KContext& ctx) {
  auto [lo, hi] = cylinder_interval(c, ctx);
  return (lo + hi) * Surd(Rational(1, 2));
}

Surd cylinder_mid(const Word& w, const KContext& ctx) {
  if (w.k != ctx.k) throw std::invalid_argument("cylinder_mid: context mismatch");
  return cylinder_mid(convergents(w), ctx);
}

Surd periodic_value(const Word& w) {
  if (w.empty()) throw std::invalid_argument("periodic_value: empty period");
  Convergents c = convergents(w);
  // The tail value x = [0; w w w ...] is the fixed point of
  // x -> (p_prev*x + p_n)/(q_prev*x + q_n) inside (0,1).
  return mobius_fixed_point(c.p_prev, c.p_n, c.q_prev, c.q_n);
}

}  // namespace spectra
