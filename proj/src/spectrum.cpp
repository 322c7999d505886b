#include "spectra/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectra {

namespace {

SpectrumApproximation package(const ProductGraph& pg, Kind kind,
                              const std::vector<Surd>& weights,
                              const std::vector<std::uint32_t>& witnesses) {
  SpectrumApproximation out;
  out.kind = kind;
  out.ctx = pg.cs.ctx;
  out.q = pg.cs.q;
  out.weights = weights;
  out.provenance.reserve(witnesses.size());
  for (std::uint32_t e : witnesses) {
    std::int32_t si = pg.edge_shift[e];
    if (si < 0) throw std::logic_error("spectrum: witness is a prolongation edge");
    out.provenance.push_back(pg.shifts[si]);
  }
  return out;
}

}  // namespace

std::pair<SpectrumApproximation, SpectrumApproximation> both_spectra(const ProductGraph& pg) {
  SpectrumSets<Surd> sets = incremental_weight_sets(pg.graph);
  return {package(pg, Kind::lagrange, sets.lagrange, sets.lagrange_witness),
          package(pg, Kind::markov, sets.markov, sets.markov_witness)};
}

SpectrumApproximation spectrum(const ProductGraph& pg, Kind kind) {
  auto pair = both_spectra(pg);
  return kind == Kind::lagrange ? std::move(pair.first) : std::move(pair.second);
}

SpectrumApproximation spectrum(const CylinderSet& cs, Kind kind) {
  return spectrum(build_product(cs), kind);
}

Surd directed_gap(const std::vector<Surd>& a, const std::vector<Surd>& b) {
  if (b.empty()) throw std::invalid_argument("directed_gap: empty reference set");
  Surd worst(0);
  for (const Surd& v : a) {
    auto it = std::lower_bound(b.begin(), b.end(), v);
    Surd best = it != b.end() ? *it - v : v - b.back();
    if (it != b.begin()) {
      Surd left = v - *(it - 1);
      if (left < best) best = left;
    }
    if (worst < best) worst = best;
  }
  return worst;
}

Surd hausdorff_gap(const std::vector<Surd>& a, const std::vector<Surd>& b) {
  Surd ab = directed_gap(a, b);
  Surd ba = directed_gap(b, a);
  return ab < ba ? ba : ab;
}

}  // namespace spectra
