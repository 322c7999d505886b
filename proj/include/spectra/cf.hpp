#pragma once

// Continued fraction machinery over a bounded digit alphabet {1..k}:
// convergents, cylinder intervals, and values of periodic expansions.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spectra/exact.hpp"

namespace spectra {

using Digit = std::uint8_t;

// A finite block of partial quotients together with its alphabet bound.
struct Word {
  std::vector<Digit> digits;
  int k = 0;

  Word() = default;
  Word(std::vector<Digit> ds, int alphabet);
  Word(std::initializer_list<int> ds, int alphabet);

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }

  Word suffix() const;              // drop the first digit
  Word rotated_left() const;        // (w2..wn w1)
  Word reversed() const;
  Word prepended(Digit a) const;    // (a w1..wn)

  friend bool operator==(const Word& x, const Word& y) {
    return x.k == y.k && x.digits == y.digits;
  }
};

// Numerators and denominators of the last two convergents of [0; b1..bn].
// Seeds (empty word): p_n = 0, p_prev = 1, q_n = 1, q_prev = 0.
struct Convergents {
  BigInt p_n = 0;
  BigInt q_n = 1;
  BigInt p_prev = 1;
  BigInt q_prev = 0;

  void push_digit(Digit b);
};

Convergents convergents(const Word& w);

// Everything that depends only on the alphabet bound k >= 2: the extreme
// points of the set of continued fractions with digits in {1..k}, and the
// published numeric envelope constants for k in {2, 3, 4}.
struct KContext {
  int k = 0;
  Surd alpha_minus;        // [0; k,1,k,1,...], the smallest such value
  Surd alpha_plus;         // [0; 1,k,1,k,...], the largest such value
  Rational diam_ratio_lower;  // k / ((k(k+1)+1)(k+2))
  std::optional<double> hd_lower, hd_upper;  // dimension bracket of the digit set
  std::optional<double> c1, c2;              // leaf-count envelope constants
};

KContext make_context(int k);

// Closed interval of real numbers whose expansion starts with w (digits in
// {1..k}); endpoints are (p_n + x*p_prev)/(q_n + x*q_prev) at the two
// extreme tail values x = alpha_minus, alpha_plus, returned sorted.
std::pair<Surd, Surd> cylinder_interval(const Convergents& c, const KContext& ctx);
std::pair<Surd, Surd> cylinder_interval(const Word& w, const KContext& ctx);

Surd cylinder_diam(const Convergents& c, const KContext& ctx);
Surd cylinder_diam(const Word& w, const KContext& ctx);

Surd cylinder_mid(const Convergents& c, const KContext& ctx);
Surd cylinder_mid(const Word& w, const KContext& ctx);

// Value of the purely periodic continued fraction [0; w w w ...].
Surd periodic_value(const Word& w);

}  // namespace spectra
