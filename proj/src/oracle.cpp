#include "spectra/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace spectra {

namespace {

Rational rational_floor_ratio(const Rational& x, const BigInt& scale) {
  Rational s = x * scale;
  BigInt f = floor_div(boost::multiprecision::numerator(s),
                       boost::multiprecision::denominator(s));
  return Rational(f, scale);
}

Rational rational_ceil_ratio(const Rational& x, const BigInt& scale) {
  Rational s = x * scale;
  BigInt f = -floor_div(-boost::multiprecision::numerator(s),
                        boost::multiprecision::denominator(s));
  return Rational(f, scale);
}

// Both endpoints the truncated continued fraction can reach over arbitrary
// continuations: x = 0 gives p_n/q_n, x -> 1 gives the mediant with the
// previous convergent.  The true tail value lies strictly between.
template <typename F>
std::pair<Rational, Rational> truncated_tail(F&& digit_at, long long start,
                                             long long step, int depth) {
  Convergents c;
  for (int j = 0; j < depth; ++j) c.push_digit(digit_at(start + step * j));
  Rational a(c.p_n, c.q_n);
  Rational b(c.p_n + c.p_prev, c.q_n + c.q_prev);
  if (b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace

ValueEnclosure enclosure_of(const Surd& x, int digits) {
  if (digits < 1) throw std::invalid_argument("enclosure_of: digits must be positive");
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  Surd scaled = x * Surd(Rational(scale));
  BigInt n = scaled.floor_value();
  return {Rational(n, scale), Rational(n + 1, scale)};
}

int compare_values(const Surd& x, const Surd& y) {
  if (x == y) return 0;
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    return x.compare(y);
  }
  for (int g : {20, 40, 80, 160, 320}) {
    ValueEnclosure a = enclosure_of(x, g);
    ValueEnclosure b = enclosure_of(y, g);
    if (a.hi < b.lo) return -1;
    if (b.hi < a.lo) return 1;
  }
  throw std::logic_error("compare_values: failed to separate distinct values");
}

Surd lagrange_periodic(const PeriodicSequence& s) {
  if (s.period.empty()) throw std::invalid_argument("lagrange_periodic: empty period");
  Word rot = s.period;
  Surd best;
  for (std::size_t i = 0; i < s.period.size(); ++i) {
    Surd val = Surd(Rational(rot.digits.front())) + periodic_value(rot.rotated_left()) +
               periodic_value(rot.reversed());
    if (i == 0 || best < val) best = val;
    rot = rot.rotated_left();
  }
  return best;
}

ValueEnclosure lambda0_enclosure(Digit a0, const std::vector<Digit>& future,
                                 const std::vector<Digit>& past, int depth) {
  if (depth < 1) throw std::invalid_argument("lambda0_enclosure: depth must be positive");
  if (future.size() < static_cast<std::size_t>(depth) ||
      past.size() < static_cast<std::size_t>(depth)) {
    throw std::invalid_argument("lambda0_enclosure: not enough digits for the depth");
  }
  for (Digit d : future) {
    if (d < 1) throw std::invalid_argument("lambda0_enclosure: zero digit");
  }
  for (Digit d : past) {
    if (d < 1) throw std::invalid_argument("lambda0_enclosure: zero digit");
  }
  auto f = truncated_tail([&](long long i) { return future[i]; }, 0, 1, depth);
  auto p = truncated_tail([&](long long i) { return past[i]; }, 0, 1, depth);
  Rational d(static_cast<int>(a0));
  return {d + f.first + p.first, d + f.second + p.second};
}

ValueEnclosure markov_window(const EventuallyPeriodic& s, int w, int precision) {
  if (w < 1) throw std::invalid_argument("markov_window: half-width must be positive");
  if (precision < 1) throw std::invalid_argument("markov_window: precision must be positive");
  if (s.left_period.empty() || s.right_period.empty()) {
    throw std::invalid_argument("markov_window: periods must be nonempty");
  }
  const auto& left = s.left_period.digits;
  const auto& center = s.center.digits;
  const auto& right = s.right_period.digits;
  const long long m = static_cast<long long>(center.size());
  const long long ln = static_cast<long long>(left.size());
  const long long rn = static_cast<long long>(right.size());

  // Center block occupies positions 1..m; the left period fills n <= 0 and
  // the right period fills n > m.
  auto digit_at = [&](long long n) -> Digit {
    if (n >= 1 && n <= m) return center[n - 1];
    if (n > m) return right[(n - m - 1) % rn];
    return left[ln - 1 - ((-n) % ln)];
  };
  auto right_pure = [&](long long n) -> Digit {
    long long r = n % rn;
    if (r < 0) r += rn;
    return right[r];
  };
  auto left_pure = [&](long long n) -> Digit {
    long long r = n % ln;
    if (r < 0) r += ln;
    return left[r];
  };

  // One full evaluation at truncation depth ww.  Positions further than ww
  // from the center read both their tails entirely inside a pure period, so
  // the per-phase enclosures of the pure periodic words cover them.
  auto raw = [&](int ww) -> std::pair<Rational, Rational> {
    bool first = true;
    Rational best_lo, best_hi;
    auto position = [&](auto&& dig, long long n) {
      auto f = truncated_tail(dig, n + 1, +1, ww);
      auto p = truncated_tail(dig, n - 1, -1, ww);
      Rational d(static_cast<int>(dig(n)));
      Rational lo = d + f.first + p.first;
      Rational hi = d + f.second + p.second;
      if (first) {
        best_lo = lo;
        best_hi = hi;
        first = false;
        return;
      }
      if (best_lo < lo) best_lo = lo;
      if (best_hi < hi) best_hi = hi;
    };
    for (long long n = 1 - ww; n <= m + ww; ++n) position(digit_at, n);
    for (long long i = 0; i < rn; ++i) position(right_pure, i);
    for (long long i = 0; i < ln; ++i) position(left_pure, i);
    return {best_lo, best_hi};
  };

  // Intersecting the enclosures from every depth up to w keeps the result
  // monotone under widening: a larger w only intersects further.
  Rational lo, hi;
  for (int ww = 1; ww <= w; ++ww) {
    auto [rlo, rhi] = raw(ww);
    if (ww == 1) {
      lo = rlo;
      hi = rhi;
    } else {
      if (lo < rlo) lo = rlo;
      if (rhi < hi) hi = rhi;
    }
  }
  if (hi < lo) throw std::logic_error("markov_window: refinements disagree");

  // Outward rounding at a fixed scale, so nesting survives the rounding and
  // the added width stays below 10^-precision.
  BigInt scale = 2 * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(precision));
  return {rational_floor_ratio(lo, scale), rational_ceil_ratio(hi, scale)};
}

std::vector<Surd> periodic_net(const KContext& ctx, int maxlen) {
  if (maxlen < 1) throw std::invalid_argument("periodic_net: maxlen must be positive");
  if (maxlen >= 20) {
    throw std::invalid_argument("periodic_net: maxlen >= 20 rejected (K^maxlen words)");
  }
  const int k = ctx.k;
  std::vector<Surd> values;

  // Duval's generation of Lyndon words of length <= maxlen over {1..k}:
  // one canonical representative per primitive rotation class, and every
  // longer word with a shorter primitive root repeats that root's value.
  std::vector<Digit> w{1};
  while (true) {
    values.push_back(lagrange_periodic({Word(w, k)}));
    std::vector<Digit> t;
    while (t.size() < static_cast<std::size_t>(maxlen)) t.push_back(w[t.size() % w.size()]);
    while (!t.empty() && t.back() == k) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = std::move(t);
  }

  std::sort(values.begin(), values.end(),
            [](const Surd& a, const Surd& b) { return compare_values(a, b) < 0; });
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

int certified_density_exponent(int k, int maxlen) {
  if (k < 2) throw std::invalid_argument("certified_density_exponent: k must be at least 2");
  if (maxlen < k) return -1;
  int n = 0;
  long long pw = k;  // k^(2n+1)
  while (pw <= maxlen / (k * k)) {
    pw *= k * k;
    ++n;
  }
  return n;
}

namespace {

struct DistanceDecision {
  bool within = false;
  Rational lower;  // certified lower bound on |v - w|
  Rational upper;  // certified upper bound
};

DistanceDecision decide_distance(const Surd& v, const Surd& w, const Rational& tol) {
  DistanceDecision out;
  if (v.is_rational() || w.is_rational() || v.radicand() == w.radicand()) {
    Surd d = v - w;
    if (d.sign() < 0) d = -d;
    out.within = d.compare(tol) <= 0;
    ValueEnclosure e = enclosure_of(d, 40);
    out.lower = e.lo;
    out.upper = e.hi;
    return out;
  }
  Rational zero(0);
  for (int g = 40; g <= 1280; g *= 2) {
    ValueEnclosure ve = enclosure_of(v, g);
    ValueEnclosure we = enclosure_of(w, g);
    Rational d_lo = std::max(zero, std::max(Rational(ve.lo - we.hi), Rational(we.lo - ve.hi)));
    Rational d_hi = std::max(Rational(ve.hi - we.lo), Rational(we.hi - ve.lo));
    out.lower = d_lo;
    out.upper = d_hi;
    if (d_hi <= tol) {
      out.within = true;
      return out;
    }
    if (tol < d_lo) {
      out.within = false;
      return out;
    }
  }
  // |v - w| = tol exactly would make a cross-field difference rational.
  throw std::logic_error("decide_distance: refinement failed to decide");
}

}  // namespace

VerifyReport verify_spectrum(const SpectrumApproximation& sa, const std::vector<Surd>& net) {
  if (sa.q <= 0) throw std::invalid_argument("verify_spectrum: nonpositive q");
  VerifyReport rep;
  const Rational tol(1, sa.q);
  const auto& ws = sa.weights;

  if (ws.empty()) {
    for (const Surd& v : net) {
      rep.ok = false;
      rep.violations.push_back({v, Rational(0)});
    }
    return rep;
  }

  std::vector<ValueEnclosure> wenc;
  wenc.reserve(ws.size());
  for (const Surd& w : ws) wenc.push_back(enclosure_of(w, 40));

  for (const Surd& v : net) {
    ValueEnclosure ve = enclosure_of(v, 40);
    Rational win_lo = ve.lo - tol;
    Rational win_hi = ve.hi + tol;

    // Weights whose enclosure is fully below or above the tolerance window
    // are certified farther than tol away; only the rest need a decision.
    std::size_t first = std::partition_point(wenc.begin(), wenc.end(),
                                             [&](const ValueEnclosure& e) {
                                               return e.hi < win_lo;
                                             }) -
                        wenc.begin();
    std::size_t last = std::partition_point(wenc.begin(), wenc.end(),
                                            [&](const ValueEnclosure& e) {
                                              return !(win_hi < e.lo);
                                            }) -
                       wenc.begin();

    bool found = false;
    Rational best_upper;
    Rational best_lower;
    bool have_lower = false;
    for (std::size_t i = first; i < last; ++i) {
      DistanceDecision d = decide_distance(v, ws[i], tol);
      if (d.within) {
        if (!found || d.upper < best_upper) best_upper = d.upper;
        found = true;
      }
      if (!have_lower || d.lower < best_lower) {
        best_lower = d.lower;
        have_lower = true;
      }
    }
    if (found) {
      if (rep.worst_gap < best_upper) rep.worst_gap = best_upper;
      continue;
    }

    // Violation: fold in the certified separations of the window's border
    // neighbours so the reported bound covers every weight.
    if (first > 0) {
      Rational side = ve.lo - wenc[first - 1].hi;
      if (!have_lower || side < best_lower) {
        best_lower = side;
        have_lower = true;
      }
    }
    if (last < ws.size()) {
      Rational side = wenc[last].lo - ve.hi;
      if (!have_lower || side < best_lower) {
        best_lower = side;
        have_lower = true;
      }
    }
    rep.ok = false;
    rep.violations.push_back({v, have_lower ? best_lower : Rational(0)});
  }
  return rep;
}

}  // namespace spectra
