#pragma once

// Independent evaluation of spectrum values for (eventually) periodic digit
// sequences: exact where one quadratic field suffices, certified rational
// enclosures where fields mix.  Serves as ground truth for the graph
// pipeline without sharing any of its machinery.

#include <vector>

#include "spectra/cf.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

struct PeriodicSequence {
  Word period;  // nonempty
};

// ... left_period repeated, then center, then right_period repeated ...
struct EventuallyPeriodic {
  Word left_period;   // nonempty
  Word center;        // may be empty
  Word right_period;  // nonempty
};

struct ValueEnclosure {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
};

// [floor(x*10^digits), same + 1] / 10^digits.  Enclosures at digit counts
// that divide each other are nested.
ValueEnclosure enclosure_of(const Surd& x, int digits);

// Total order on exact values across quadratic fields: exact comparison
// when the fields agree or a side is rational, adaptive enclosure
// refinement otherwise.  Distinct values in distinct fields always
// separate; failure to separate is reported as std::logic_error.
int compare_values(const Surd& x, const Surd& y);

// Largest height over the biinfinite periodic word: max over rotations r of
// r0 + [0; r1 r2 ...] + [0; r-1 r-2 ...], each tail purely periodic.  All
// rotations and reversals share one quadratic field, so the max is exact.
Surd lagrange_periodic(const PeriodicSequence& s);

// Enclosure of a0 + [0; future...] + [0; past...] with both tails truncated
// at the given depth; each sequence must supply at least depth digits.
// Truncation error per tail is below 1/2^(depth-1).
ValueEnclosure lambda0_enclosure(Digit a0, const std::vector<Digit>& future,
                                 const std::vector<Digit>& past, int depth);

// Enclosure of sup over all positions of the height of the eventually
// periodic word, with tails truncated at depth w.  Positions within w of
// the center are evaluated in place; the two periodic ends are covered by
// their pure periods' per-phase enclosures.  Width is at most 4/2^(w-1)
// plus 10^(-precision) rounding slack, and never grows when w is widened.
ValueEnclosure markov_window(const EventuallyPeriodic& s, int w, int precision);

// Sorted deduplicated exact values of every periodic word of period length
// at most maxlen, one representative per rotation class (Lyndon words).
// maxlen >= 20 is rejected as a combinatorial explosion guard.
std::vector<Surd> periodic_net(const KContext& ctx, int maxlen);

// Largest N such that a net of the given maxlen certifies 1/2^(N-2) density
// (maxlen >= k^(2N+1)), or -1 when not even N = 0 is certified.
int certified_density_exponent(int k, int maxlen);

// One-sided closeness check: every net value must have a weight within 1/q.
struct VerifyReport {
  struct Violation {
    Surd value;
    Rational gap_lower_bound;  // certified lower bound on distance to the set
  };
  bool ok = true;
  std::vector<Violation> violations;
  Rational worst_gap = 0;  // upper bound on max over net of distance to the set
};

VerifyReport verify_spectrum(const SpectrumApproximation& sa, const std::vector<Surd>& net);

}  // namespace spectra
