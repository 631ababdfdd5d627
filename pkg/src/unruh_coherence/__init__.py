"""Basis-independent coherence of Dirac-field modes under the Unruh effect."""

from .errors import InvalidArgumentError, NotAStateError, NumericError
from .linalg import (
    check_density_matrix,
    hermitian_eigenvalues,
    hermitian_eigh,
    kron,
    partial_trace,
    von_neumann_entropy,
)
from .unruh import Bipartition, check_accel, reduced_density, unruh_state
from .coherence import (
    CoherenceReport,
    basis_independent_coherence,
    closed_form_coherence,
    closed_form_density,
    closed_form_mix_entropy,
    closed_form_state_entropy,
    coherence_report,
    frozen_coherence_constant,
    l1_coherence,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CoherenceReport",
    "InvalidArgumentError",
    "NotAStateError",
    "NumericError",
    "basis_independent_coherence",
    "check_accel",
    "check_density_matrix",
    "closed_form_coherence",
    "closed_form_density",
    "closed_form_mix_entropy",
    "closed_form_state_entropy",
    "coherence_report",
    "frozen_coherence_constant",
    "hermitian_eigenvalues",
    "hermitian_eigh",
    "kron",
    "l1_coherence",
    "partial_trace",
    "reduced_density",
    "unruh_state",
    "von_neumann_entropy",
]
