#pragma once

// Sorted weight sets of the product graph, packaged per kind with the exact
// data each weight was computed from.

#include <utility>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

enum class Kind { lagrange, markov };

struct SpectrumApproximation {
  Kind kind = Kind::lagrange;
  KContext ctx;
  long long q = 0;
  std::vector<Surd> weights;           // strictly increasing
  std::vector<ShiftInfo> provenance;   // one witnessing shift edge per weight
};

// Build the product graph for cs and extract the requested weight set.
SpectrumApproximation spectrum(const CylinderSet& cs, Kind kind);

// Same, over an already built graph.
SpectrumApproximation spectrum(const ProductGraph& pg, Kind kind);

// One incremental run yields both kinds; first is Lagrange.
std::pair<SpectrumApproximation, SpectrumApproximation> both_spectra(const ProductGraph& pg);

// Largest distance from a point of a to the set b, and the symmetric max.
// Both inputs sorted ascending and in one quadratic field; b nonempty.
Surd directed_gap(const std::vector<Surd>& a, const std::vector<Surd>& b);
Surd hausdorff_gap(const std::vector<Surd>& a, const std::vector<Surd>& b);

}  // namespace spectra
