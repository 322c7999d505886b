#include "spectra/oracle.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "spectra/cylinders.hpp"

using namespace spectra;

namespace {

Word random_word(std::mt19937& rng, int k, int len) {
  std::uniform_int_distribution<int> d(1, k);
  std::vector<Digit> ds;
  for (int i = 0; i < len; ++i) ds.push_back(static_cast<Digit>(d(rng)));
  return Word(std::move(ds), k);
}

bool contains(const ValueEnclosure& e, const Surd& x) {
  return x.compare(e.lo) >= 0 && x.compare(e.hi) <= 0;
}

}  // namespace

TEST_CASE("heights of short periods") {
  auto L = [](std::initializer_list<int> ds, int k) {
    return lagrange_periodic({Word(ds, k)});
  };

  CHECK(L({1}, 2) == Surd(0, 1, 5));
  CHECK(L({2}, 2) == Surd(0, 2, 2));
  CHECK(L({3}, 3) == Surd(0, 1, 13));
  CHECK(L({4}, 4) == Surd(0, 2, 5));
  CHECK(L({1, 2}, 2) == Surd(0, 2, 3));
  CHECK(L({2, 1}, 2) == Surd(0, 2, 3));       // rotation class, same height
  CHECK(L({1, 3}, 3) == Surd(0, 1, 21));
  CHECK(L({3, 1}, 3) == Surd(0, 1, 21));
  CHECK(L({2, 2, 1, 1}, 2) == Surd(0, Rational(1, 5), 221));

  // single-digit periods satisfy height = k + 2*[0; k,k,k,...]
  for (int k = 1; k <= 4; ++k) {
    Word w({k}, std::max(k, 2));
    CHECK(lagrange_periodic({w}) == Surd(Rational(k)) + periodic_value(w) + periodic_value(w));
  }

  CHECK_THROWS_AS(lagrange_periodic({Word({}, 2)}), std::invalid_argument);
}

TEST_CASE("height ignores rotation and reversal") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 150; ++iter) {
    Word w = random_word(rng, 2 + iter % 2, 1 + iter % 6);
    Surd base = lagrange_periodic({w});
    Word r = w;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      r = r.rotated_left();
      CHECK(lagrange_periodic({r}) == base);
    }
    CHECK(lagrange_periodic({w.reversed()}) == base);
  }
}

TEST_CASE("decimal enclosures") {
  Surd r2 = Surd::sqrt_of(2);
  ValueEnclosure e = enclosure_of(r2, 5);
  CHECK(e.lo == Rational(141421, 100000));
  CHECK(e.hi == Rational(141422, 100000));
  CHECK(e.width() == Rational(1, 100000));
  CHECK(contains(e, r2));

  ValueEnclosure neg = enclosure_of(-r2, 5);
  CHECK(contains(neg, -r2));
  CHECK(neg.hi == Rational(-141421, 100000));

  // nested at divisible digit counts
  ValueEnclosure e10 = enclosure_of(r2, 10);
  ValueEnclosure e20 = enclosure_of(r2, 20);
  CHECK(e10.lo >= e.lo);
  CHECK(e10.hi <= e.hi);
  CHECK(e20.lo >= e10.lo);
  CHECK(e20.hi <= e10.hi);

  CHECK_THROWS_AS(enclosure_of(r2, 0), std::invalid_argument);
}

TEST_CASE("value comparison across fields") {
  CHECK(compare_values(Surd(0, 2, 3), Surd(0, 1, 13)) < 0);   // 3.4641 vs 3.6055
  CHECK(compare_values(Surd(0, 1, 13), Surd(0, 1, 10)) > 0);
  CHECK(compare_values(Surd(0, 1, 5), Surd(0, 2, 2)) < 0);
  CHECK(compare_values(Surd(0, 2, 3), Surd(0, 2, 3)) == 0);
  CHECK(compare_values(Surd(Rational(1, 2)), Surd(Rational(2, 4))) == 0);
  CHECK(compare_values(Surd(Rational(7, 5)), Surd::sqrt_of(2)) < 0);
  CHECK(compare_values(Surd(0, Rational(1, 5), 221), Surd(0, 1, 10)) < 0);  // 2.9732 vs 3.1623

  // stress: consistent with same-field exact comparison
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int iter = 0; iter < 500; ++iter) {
    Surd x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 7);
    Surd y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 7);
    CHECK(compare_values(x, y) == x.compare(y));
  }
}

TEST_CASE("two-sided height enclosures") {
  std::vector<Digit> ones(40, 1);
  ValueEnclosure e = lambda0_enclosure(1, ones, ones, 40);
  CHECK(contains(e, Surd(0, 1, 5)));
  CHECK(e.width() <= Rational(4, BigInt(1) << 39));

  // mixed-field value: 2 + [0;(1,2)...] + [0;(1)...], checked against a
  // 16-digit decimal of sqrt(3) - 1 + (sqrt(5) - 1)/2 + 2
  std::vector<Digit> alt;
  for (int i = 0; i < 40; ++i) alt.push_back(i % 2 ? 2 : 1);
  ValueEnclosure m = lambda0_enclosure(2, alt, ones, 40);
  Rational approx2(BigInt("3350084796318772"), BigInt("1000000000000000"));
  Rational slack(1, BigInt("100000000000000"));  // 1e-14 float-side error
  CHECK(m.lo - slack <= approx2);
  CHECK(approx2 <= m.hi + slack);
  CHECK(m.width() <= Rational(4, BigInt(1) << 39));

  CHECK_THROWS_AS(lambda0_enclosure(1, std::vector<Digit>(39, 1), ones, 40),
                  std::invalid_argument);
  std::vector<Digit> withzero(40, 1);
  withzero[5] = 0;
  CHECK_THROWS_AS(lambda0_enclosure(1, withzero, ones, 40), std::invalid_argument);
}

TEST_CASE("sup over an eventually periodic word") {
  // ...,1,1,[2,2],1,1,...  the run of twos is scanned directly and the
  // supremum is exactly 3 = 2 + [0;2,1,1,...] + [0;1,1,1,...]
  EventuallyPeriodic defect{Word({1}, 2), Word({2, 2}, 2), Word({1}, 2)};
  ValueEnclosure e = markov_window(defect, 40, 30);
  CHECK(contains(e, Surd(3)));
  CHECK(e.width() <= Rational(4, BigInt(1) << 39) + Rational(2, pow(BigInt(10), 30)));

  // ...,2,1,2,1,[,]1,2,1,2,...: the junction doubles the 1, heights near it
  // stay low, and the supremum 2*sqrt(3) is approached far out, where the
  // pure-period phase enclosures take over
  EventuallyPeriodic seam{Word({2, 1}, 2), Word({}, 2), Word({1, 2}, 2)};
  ValueEnclosure s = markov_window(seam, 40, 30);
  CHECK(contains(s, Surd(0, 2, 3)));

  // purely periodic content reproduces the exact rotation-max height
  std::mt19937 rng(31);
  for (int iter = 0; iter < 60; ++iter) {
    Word w = random_word(rng, 2, 1 + iter % 4);
    EventuallyPeriodic pure{w, Word({}, 2), w};
    ValueEnclosure p = markov_window(pure, 30, 25);
    CHECK(contains(p, lagrange_periodic({w})));
  }

  // widening the window only sharpens the answer
  for (int iter = 0; iter < 20; ++iter) {
    EventuallyPeriodic ep{random_word(rng, 2, 1 + iter % 3), random_word(rng, 2, iter % 5),
                          random_word(rng, 2, 1 + (iter / 2) % 3)};
    ValueEnclosure wide = markov_window(ep, 12, 25);
    for (int w = 22; w <= 42; w += 10) {
      ValueEnclosure tight = markov_window(ep, w, 25);
      CHECK(tight.lo >= wide.lo);
      CHECK(tight.hi <= wide.hi);
      CHECK(tight.width() <= Rational(4, BigInt(1) << (w - 1)) + Rational(2, pow(BigInt(10), 25)));
      wide = tight;
    }
  }

  CHECK_THROWS_AS(markov_window({Word({}, 2), Word({}, 2), Word({1}, 2)}, 10, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(markov_window(defect, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(markov_window(defect, 10, 0), std::invalid_argument);
}

TEST_CASE("net of short periodic heights") {
  KContext ctx = make_context(2);

  // period <= 2: exactly three heights
  std::vector<Surd> tiny = periodic_net(ctx, 2);
  REQUIRE(tiny.size() == 3);
  CHECK(tiny[0] == Surd(0, 1, 5));
  CHECK(tiny[1] == Surd(0, 2, 2));
  CHECK(tiny[2] == Surd(0, 2, 3));

  // period <= 4: eight heights, every one known in closed form
  std::vector<Surd> net4 = periodic_net(ctx, 4);
  std::vector<Surd> expect{
      Surd(0, 1, 5),                 // (1)
      Surd(0, 2, 2),                 // (2)
      Surd(0, Rational(1, 5), 221),  // (1,1,2,2)
      Surd(0, Rational(1, 3), 85),   // (1,2,2)
      Surd(0, Rational(4, 7), 30),   // (1,2,2,2)
      Surd(0, 1, 10),                // (1,1,2)
      Surd(0, Rational(4, 3), 6),    // (1,1,1,2)
      Surd(0, 2, 3),                 // (1,2)
  };
  CHECK(net4 == expect);

  // longer nets only add values and keep the extremes
  std::vector<Surd> net6 = periodic_net(ctx, 6);
  CHECK(net6.size() > net4.size());
  for (const Surd& v : net4) {
    CHECK(std::find(net6.begin(), net6.end(), v) != net6.end());
  }
  Surd lo(0, 1, 5), hi_limit(0, 1, 13);
  for (const Surd& v : net6) {
    CHECK(compare_values(v, lo) >= 0);
    CHECK(compare_values(v, hi_limit) <= 0);
  }
  CHECK(net6.back() == Surd(0, 2, 3));  // the largest short height is 2*sqrt(3)

  // k = 3 includes the heavier single digits
  std::vector<Surd> net3 = periodic_net(make_context(3), 2);
  CHECK(std::find(net3.begin(), net3.end(), Surd(0, 1, 13)) != net3.end());
  CHECK(net3.back() == Surd(0, 1, 21));

  CHECK_THROWS_AS(periodic_net(ctx, 20), std::invalid_argument);
  CHECK_THROWS_AS(periodic_net(ctx, 0), std::invalid_argument);
}

TEST_CASE("density exponent bookkeeping") {
  CHECK(certified_density_exponent(2, 1) == -1);
  CHECK(certified_density_exponent(2, 2) == 0);
  CHECK(certified_density_exponent(2, 7) == 0);
  CHECK(certified_density_exponent(2, 8) == 1);
  CHECK(certified_density_exponent(2, 19) == 1);
  CHECK(certified_density_exponent(3, 2) == -1);
  CHECK(certified_density_exponent(3, 3) == 0);
}

TEST_CASE("spectrum verification") {
  CylinderSet cs = build_cylinders(make_context(2), 100);
  SpectrumApproximation sa = spectrum(cs, Kind::lagrange);
  std::vector<Surd> net = periodic_net(make_context(2), 4);

  VerifyReport rep = verify_spectrum(sa, net);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
  CHECK(rep.worst_gap <= Rational(1, 100) + Rational(1, pow(BigInt(10), 20)));
  CHECK(rep.worst_gap > 0);

  // shifting every weight by 3/q must be caught, with sqrt(5) at certified
  // distance greater than 1/q from the shifted set
  SpectrumApproximation bad = sa;
  for (Surd& w : bad.weights) w += Surd(Rational(3, 100));
  VerifyReport caught = verify_spectrum(bad, net);
  CHECK_FALSE(caught.ok);
  REQUIRE(!caught.violations.empty());
  bool found = false;
  for (const auto& v : caught.violations) {
    if (v.value == Surd(0, 1, 5)) {
      found = true;
      CHECK(v.gap_lower_bound > Rational(1, 100));
    }
  }
  CHECK(found);

  // no weights at all: everything is violated, nothing is certified
  SpectrumApproximation empty = sa;
  empty.weights.clear();
  empty.provenance.clear();
  VerifyReport hollow = verify_spectrum(empty, net);
  CHECK_FALSE(hollow.ok);
  CHECK(hollow.violations.size() == net.size());
  for (const auto& v : hollow.violations) CHECK(v.gap_lower_bound == 0);

  // empty net: vacuously fine
  VerifyReport vac = verify_spectrum(sa, {});
  CHECK(vac.ok);
  CHECK(vac.worst_gap == 0);
}
