"""Sequential unsharp-measurement coherence-advantage simulation.

Thin wrapper over the C++ core: advantage functionals and sequential-observer
scenarios on the two-qubit singlet, the three coherence measures with their
complementarity bounds, closed-form cross-checks, and threshold solving.
"""

from ._core import (
    coherence,
    complementarity_bound,
    complementarity_sum,
    luders_nonselective,
    max_alices,
    naqc_value,
    oracle,
    partial_trace,
    random_qubit_state,
    sequential_naqc,
    sequential_naqc_state,
    singlet,
    threshold,
    von_neumann_entropy,
    weak_equivalents,
)

__all__ = [
    "coherence",
    "complementarity_bound",
    "complementarity_sum",
    "luders_nonselective",
    "max_alices",
    "naqc_value",
    "oracle",
    "partial_trace",
    "random_qubit_state",
    "sequential_naqc",
    "sequential_naqc_state",
    "singlet",
    "threshold",
    "von_neumann_entropy",
    "weak_equivalents",
]

__version__ = "0.1.0"
