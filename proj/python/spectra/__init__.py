"""Finite approximations of Lagrange and Markov spectra.

Thin package wrapper around the compiled extension.  All heavy lifting
(exact quadratic arithmetic, cylinder covers, the walk graph, the cycle
solvers) happens in C++; this module re-exports the operational surface.
"""

from ._core import (
    compute,
    compute_decimals,
    constants,
    cylinder_count,
    graph_stats,
    hausdorff,
    periodic_heights,
    plot_intervals,
    verify,
)

__version__ = "1.0.0"

__all__ = [
    "compute",
    "compute_decimals",
    "constants",
    "cylinder_count",
    "graph_stats",
    "hausdorff",
    "periodic_heights",
    "plot_intervals",
    "verify",
]
