// Python bindings for the main operations: cylinder covers, weight sets,
// plot intervals, the periodic-height oracle, and the verification report.
// Exact values cross the boundary as floats plus decimal strings; the exact
// arithmetic itself stays on the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/cli.hpp"
#include "spectra/cylinders.hpp"
#include "spectra/graph.hpp"
#include "spectra/oracle.hpp"
#include "spectra/spectrum.hpp"

namespace py = pybind11;
using namespace spectra;

namespace {

Kind parse_kind(const std::string& kind) {
  if (kind == "lagrange") return Kind::lagrange;
  if (kind == "markov") return Kind::markov;
  throw std::invalid_argument("kind must be 'lagrange' or 'markov'");
}

SpectrumApproximation compute_spectrum(int k, long long q, const std::string& kind) {
  return spectrum(build_cylinders(make_context(k), q), parse_kind(kind));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Finite approximations of Lagrange and Markov spectra over continued "
      "fractions with bounded partial quotients";

  m.def(
      "constants",
      [](int k, int digits) {
        py::dict out;
        for (const ConstantRow& row : constants_table(k)) {
          out[py::str(row.name)] = row.value.to_decimal(digits);
        }
        return out;
      },
      py::arg("k"), py::arg("digits") = 12,
      "Named exact constants for alphabet {1..k}, rendered to `digits` decimals");

  m.def(
      "cylinder_count",
      [](int k, long long q) { return build_cylinders(make_context(k), q).size(); },
      py::arg("k"), py::arg("q"),
      "Number of cylinders in the minimal cover at resolution 1/q");

  m.def(
      "compute",
      [](int k, long long q, const std::string& kind) {
        std::vector<double> out;
        for (const Surd& w : compute_spectrum(k, q, kind).weights) {
          out.push_back(w.to_double());
        }
        return out;
      },
      py::arg("k"), py::arg("q"), py::arg("kind") = "lagrange",
      "Sorted weight set, 1/q-close in Hausdorff distance to the spectrum");

  m.def(
      "compute_decimals",
      [](int k, long long q, const std::string& kind, int digits) {
        std::vector<std::string> out;
        for (const Surd& w : compute_spectrum(k, q, kind).weights) {
          out.push_back(w.to_decimal(digits));
        }
        return out;
      },
      py::arg("k"), py::arg("q"), py::arg("kind") = "lagrange", py::arg("digits") = 12,
      "Sorted weight set rendered as exact decimal strings");

  m.def(
      "plot_intervals",
      [](int k, long long q, const std::string& kind) {
        std::vector<std::pair<double, double>> out;
        SpectrumApproximation sa = compute_spectrum(k, q, kind);
        for (const PlotInterval& iv : merge_plot_intervals(sa.weights, q)) {
          out.emplace_back(iv.lo.to_double(), iv.hi.to_double());
        }
        return out;
      },
      py::arg("k"), py::arg("q"), py::arg("kind") = "lagrange",
      "Disjoint intervals covering the weight set fattened by 1/q");

  m.def(
      "periodic_heights",
      [](int k, int maxlen) {
        std::vector<double> out;
        for (const Surd& v : periodic_net(make_context(k), maxlen)) {
          out.push_back(v.to_double());
        }
        return out;
      },
      py::arg("k"), py::arg("maxlen"),
      "Exact heights of all periodic words with period length at most maxlen");

  m.def(
      "verify",
      [](int k, long long q, const std::string& kind, int maxlen) {
        SpectrumApproximation sa = compute_spectrum(k, q, kind);
        VerifyReport rep = verify_spectrum(sa, periodic_net(sa.ctx, maxlen));
        py::list violations;
        for (const auto& v : rep.violations) {
          py::dict d;
          d["value"] = v.value.to_double();
          d["gap_at_least"] = Surd(v.gap_lower_bound).to_double();
          violations.append(d);
        }
        py::dict out;
        out["ok"] = rep.ok;
        out["violations"] = violations;
        out["worst_gap"] = Surd(rep.worst_gap).to_double();
        return out;
      },
      py::arg("k"), py::arg("q"), py::arg("kind") = "lagrange", py::arg("maxlen") = 6,
      "Check every periodic height of the net against the computed weights");

  m.def(
      "graph_stats",
      [](int k, long long q) {
        ProductGraph pg = build_product(build_cylinders(make_context(k), q));
        py::dict out;
        out["leaf_count"] = pg.cs.size();
        out["vertex_count"] = pg.graph.n_vertices;
        out["shift_edges"] = pg.shift_edge_count;
        out["prolongation_edges"] = pg.prolongation_edge_count;
        return out;
      },
      py::arg("k"), py::arg("q"), "Size report for the weighted walk graph");

  m.def(
      "hausdorff",
      [](int k, long long q1, long long q2, const std::string& kind) {
        SpectrumApproximation a = compute_spectrum(k, q1, kind);
        SpectrumApproximation b = compute_spectrum(k, q2, kind);
        return hausdorff_gap(a.weights, b.weights).to_double();
      },
      py::arg("k"), py::arg("q1"), py::arg("q2"), py::arg("kind") = "lagrange",
      "Hausdorff distance between the weight sets at two resolutions");
}
