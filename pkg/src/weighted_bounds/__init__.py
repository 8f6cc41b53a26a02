"""Entanglement measures for small qubit systems and s-parameterized
weighted monogamy / polygamy bounds."""

from .config import TOL, Tolerances
from .errors import (
    BoundWarning,
    ConvergenceError,
    DomainError,
    InputError,
    ValidationError,
)
from .linalg import (
    DensityMatrix,
    PureState,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
    purity,
    trace_norm,
)
from .measures import (
    MeasureVector,
    build_measure_vector,
    concurrence_pure,
    concurrence_two_qubit,
    negativity,
    scren_pure,
    state_measure_vector,
)
from .bounds import (
    BoundParams,
    BoundReport,
    check_lemma1,
    comparison_bounds,
    intro_weights,
    kernel_h,
    max_admissible_a,
    monogamy_bound_multipartite,
    monogamy_bound_tripartite,
    polygamy_bound_multipartite,
    polygamy_bound_tripartite,
    threshold_ratio,
    tightness_sweep,
)

__all__ = [
    "BoundParams",
    "BoundReport",
    "BoundWarning",
    "ConvergenceError",
    "DensityMatrix",
    "DomainError",
    "InputError",
    "MeasureVector",
    "PureState",
    "TOL",
    "Tolerances",
    "ValidationError",
    "build_measure_vector",
    "check_lemma1",
    "comparison_bounds",
    "concurrence_pure",
    "concurrence_two_qubit",
    "hermitian_eigenvalues",
    "intro_weights",
    "kernel_h",
    "max_admissible_a",
    "monogamy_bound_multipartite",
    "monogamy_bound_tripartite",
    "negativity",
    "partial_trace",
    "partial_transpose",
    "polygamy_bound_multipartite",
    "polygamy_bound_tripartite",
    "purity",
    "scren_pure",
    "state_measure_vector",
    "threshold_ratio",
    "tightness_sweep",
    "trace_norm",
]

__version__ = "0.1.0"
