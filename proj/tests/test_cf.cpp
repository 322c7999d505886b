#include "spectra/cf.hpp"

#include <doctest.h>

#include "spectra/oracle.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace spectra;

namespace {

// Backward evaluation of [0; w] as an exact rational, the textbook way:
// fold 1/(digit + acc) from the right.  Completely independent of the
// convergent recurrence under test.
Rational backward_value(const Word& w) {
  Rational acc = 0;
  for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
    acc = Rational(1) / (Rational(*it) + acc);
  }
  return acc;
}

Word random_word(std::mt19937& rng, int k, int len) {
  std::uniform_int_distribution<int> d(1, k);
  std::vector<Digit> ds;
  for (int i = 0; i < len; ++i) ds.push_back(static_cast<Digit>(d(rng)));
  return Word(std::move(ds), k);
}

}  // namespace

TEST_CASE("word validation and editing") {
  CHECK_THROWS_AS(Word({0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Word({1, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Word({1}, 0), std::invalid_argument);

  Word w({1, 2, 2}, 3);
  CHECK(w.suffix() == Word({2, 2}, 3));
  CHECK(w.rotated_left() == Word({2, 2, 1}, 3));
  CHECK(w.reversed() == Word({2, 2, 1}, 3));
  CHECK(w.prepended(3) == Word({3, 1, 2, 2}, 3));
  CHECK(Word({}, 3).empty());
}

TEST_CASE("convergents match backward evaluation") {
  std::mt19937 rng(101);
  for (int iter = 0; iter < 500; ++iter) {
    int k = 2 + iter % 3;
    Word w = random_word(rng, k, 1 + iter % 14);
    Convergents c = convergents(w);
    CHECK(Rational(c.p_n, c.q_n) == backward_value(w));
    // determinant identity: p_n q_{n-1} - p_{n-1} q_n = (-1)^(n+1) for [0;...]
    BigInt det = c.p_n * c.q_prev - c.p_prev * c.q_n;
    CHECK((det == 1 || det == -1));
  }
  Convergents seed;
  CHECK(seed.p_n == 0);
  CHECK(seed.q_n == 1);
  CHECK(seed.p_prev == 1);
  CHECK(seed.q_prev == 0);
}

TEST_CASE("alphabet context") {
  KContext c2 = make_context(2);
  CHECK(c2.alpha_plus == Surd(-1, 1, 3));                       // [0;1,2,1,2,...]
  CHECK(c2.alpha_minus == Surd(Rational(-1, 2), Rational(1, 2), 3));
  CHECK(c2.diam_ratio_lower == Rational(1, 14));

  KContext c3 = make_context(3);
  CHECK(c3.alpha_plus == Surd(Rational(-3, 2), Rational(1, 2), 21));
  CHECK(c3.alpha_minus == Surd(Rational(-1, 2), Rational(1, 6), 21));
  CHECK(c3.diam_ratio_lower == Rational(3, 65));

  KContext c4 = make_context(4);
  CHECK(c4.alpha_plus == Surd(-2, 2, 2));
  CHECK(c4.alpha_minus == Surd(Rational(-1, 2), Rational(1, 2), 2));
  CHECK(c4.diam_ratio_lower == Rational(2, 63));

  for (int k : {2, 3, 4}) {
    KContext c = make_context(k);
    CHECK(c.hd_lower.has_value());
    CHECK(c.hd_upper.has_value());
    CHECK(c.c1.has_value());
    CHECK(c.c2.has_value());
    CHECK(*c.hd_lower < *c.hd_upper);
  }
  CHECK(*make_context(2).hd_lower == doctest::Approx(0.5312));
  CHECK(*make_context(2).hd_upper == doctest::Approx(0.5313));
  CHECK(*make_context(3).hd_lower == doctest::Approx(0.7056));
  CHECK(*make_context(4).hd_upper == doctest::Approx(0.7890));
  CHECK_FALSE(make_context(5).hd_lower.has_value());

  CHECK_THROWS_AS(make_context(1), std::invalid_argument);
  CHECK_THROWS_AS(make_context(0), std::invalid_argument);

  // alpha_minus and alpha_plus really are the periodic extremes.
  CHECK(c2.alpha_plus == periodic_value(Word({1, 2}, 2)));
  CHECK(c2.alpha_minus == periodic_value(Word({2, 1}, 2)));
  CHECK(c3.alpha_plus == periodic_value(Word({1, 3}, 3)));
  CHECK(c4.alpha_minus == periodic_value(Word({4, 1}, 4)));
}

TEST_CASE("periodic values") {
  CHECK(periodic_value(Word({1}, 2)) == Surd(Rational(-1, 2), Rational(1, 2), 5));
  CHECK(periodic_value(Word({2}, 2)) == Surd(-1, 1, 2));
  CHECK(periodic_value(Word({3}, 3)) == Surd(Rational(-3, 2), Rational(1, 2), 13));
  CHECK(periodic_value(Word({4}, 4)) == Surd(-2, 1, 5));
  CHECK(periodic_value(Word({1, 4}, 4)) == Surd(-2, 2, 2));
  CHECK(periodic_value(Word({4, 1}, 4)) == Surd(Rational(-1, 2), Rational(1, 2), 2));

  // invariance under writing the period twice
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    Word w = random_word(rng, 3, 1 + iter % 5);
    Word ww(w.digits, 3);
    ww.digits.insert(ww.digits.end(), w.digits.begin(), w.digits.end());
    CHECK(periodic_value(w) == periodic_value(ww));
  }

  CHECK_THROWS_AS(periodic_value(Word({}, 2)), std::invalid_argument);
}

TEST_CASE("cylinder intervals nest and separate") {
  std::mt19937 rng(4242);
  for (int k : {2, 3}) {
    KContext ctx = make_context(k);

    auto [rlo, rhi] = cylinder_interval(Word({}, k), ctx);
    CHECK(rlo == ctx.alpha_minus);
    CHECK(rhi == ctx.alpha_plus);

    for (int iter = 0; iter < 120; ++iter) {
      Word w = random_word(rng, k, 1 + iter % 8);
      auto [lo, hi] = cylinder_interval(w, ctx);
      CHECK(lo < hi);
      CHECK(cylinder_diam(w, ctx) == hi - lo);
      Surd mid = cylinder_mid(w, ctx);
      CHECK(lo < mid);
      CHECK(mid < hi);

      // children live strictly inside the parent and are pairwise disjoint
      std::vector<std::pair<Surd, Surd>> kids;
      for (int a = 1; a <= k; ++a) {
        Word child = w;
        child.digits.push_back(static_cast<Digit>(a));
        auto iv = cylinder_interval(child, ctx);
        CHECK(lo <= iv.first);
        CHECK(iv.second <= hi);
        CHECK(cylinder_diam(child, ctx) < cylinder_diam(w, ctx));
        kids.push_back(iv);
      }
      for (size_t i = 0; i < kids.size(); ++i) {
        for (size_t j = i + 1; j < kids.size(); ++j) {
          bool disjoint = kids[i].second < kids[j].first || kids[j].second < kids[i].first;
          CHECK(disjoint);
        }
      }

      // the purely periodic repetition of w lands inside w's cylinder; its
      // value usually lives in a different quadratic field than the endpoints
      Surd pv = periodic_value(w);
      CHECK(compare_values(lo, pv) <= 0);
      CHECK(compare_values(pv, hi) <= 0);
    }

    // any finite extension's exact value stays inside the prefix cylinder
    for (int iter = 0; iter < 200; ++iter) {
      Word w = random_word(rng, k, 1 + iter % 6);
      Word ext = w;
      Word tail = random_word(rng, k, 30);
      ext.digits.insert(ext.digits.end(), tail.digits.begin(), tail.digits.end());
      Convergents c = convergents(ext);
      Rational value(c.p_n, c.q_n);
      auto [lo, hi] = cylinder_interval(w, ctx);
      CHECK(lo.compare(value) <= 0);
      CHECK(hi.compare(value) >= 0);
    }
  }
}

TEST_CASE("diameters shrink geometrically") {
  KContext ctx = make_context(2);
  Surd prev = cylinder_diam(Word({}, 2), ctx);
  std::vector<Digit> ds;
  for (int n = 1; n <= 24; ++n) {
    ds.push_back(n % 2 ? 1 : 2);
    Surd d = cylinder_diam(Word(ds, 2), ctx);
    CHECK(d < prev);
    prev = d;
  }
  // after 24 alternating digits the cylinder is far below 1e-6
  CHECK(prev.compare(Rational(1, 1000000)) < 0);
}
