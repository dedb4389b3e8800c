"""Bi-squeezed tripartite Gaussian states: generation, measures and homodyne conditioning."""
from .generation import (
    CovarianceElements,
    DecoupledParameters,
    PumpParameters,
    ThermalSpec,
    bisqueezed_state,
    covariance_elements,
    decouple,
)
from .homodyne import conditional_elements, homodyne_condition, local_invariants, nu_minus_after_homodyne
from .measures import (
    CoherenceReport,
    EntanglementReport,
    bipartition_negativities,
    first_order_coherence,
    negativity,
    relative_entropy_of_coherence,
    tripartite_negativity,
    von_neumann_entropy,
)
from .symplectic import (
    NonPhysicalStateError,
    NumericalError,
    is_physical,
    partial_trace,
    partial_transpose,
    purity,
    symplectic_eigenvalues,
)

__all__ = [
    "CoherenceReport",
    "CovarianceElements",
    "DecoupledParameters",
    "EntanglementReport",
    "NonPhysicalStateError",
    "NumericalError",
    "PumpParameters",
    "ThermalSpec",
    "bipartition_negativities",
    "bisqueezed_state",
    "conditional_elements",
    "covariance_elements",
    "decouple",
    "first_order_coherence",
    "homodyne_condition",
    "is_physical",
    "local_invariants",
    "negativity",
    "nu_minus_after_homodyne",
    "partial_trace",
    "partial_transpose",
    "purity",
    "relative_entropy_of_coherence",
    "symplectic_eigenvalues",
    "tripartite_negativity",
    "von_neumann_entropy",
]
