"""Coherence measures and closed-form reference values.

``basis_independent_coherence`` is the square-root Jensen-Shannon-type
distance between a state and the maximally mixed state ``I/d``::

    C(rho) = sqrt( S((rho + I/d)/2) - (S(rho) + log2 d)/2 )

The ``closed_form_*`` functions evaluate the analytic expressions for the
Bell-state (theta = pi/4) Unruh reductions. They never touch the eigensolver
and exist to cross-check the numerical pipeline.
"""

from dataclasses import asdict, dataclass
from math import cos, log2, sin, sqrt

import numpy as np

from .errors import NumericError
from .linalg import check_density_matrix, von_neumann_entropy
from .unruh import BELL_THETA, Bipartition, check_accel, reduced_density

RADICAND_TOL = 1e-10


def _mixture_entropies(rho):
    rho = check_density_matrix(rho)
    d = rho.shape[0]
    s_rho = von_neumann_entropy(rho)
    s_mix = von_neumann_entropy((rho + np.eye(d) / d) / 2)
    return s_rho, s_mix, log2(d)


def _coherence_from_entropies(s_mix, s_rho, log_d):
    radicand = s_mix - (s_rho + log_d) / 2
    if radicand < -RADICAND_TOL:
        raise NumericError(f"coherence radicand {radicand:.3e} is negative")
    return sqrt(max(radicand, 0.0))


def basis_independent_coherence(rho):
    """Basis-independent coherence of a density matrix; d is taken from its shape."""
    s_rho, s_mix, log_d = _mixture_entropies(rho)
    return _coherence_from_entropies(s_mix, s_rho, log_d)


def l1_coherence(rho):
    """Sum of absolute values of the off-diagonal entries, computational basis."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.sum(np.abs(rho)) - np.sum(np.abs(np.diag(rho))))


@dataclass(frozen=True)
class CoherenceReport:
    r: float
    cut: Bipartition
    c_basis_independent: float
    c_l1: float
    s_rho: float
    s_mix: float

    def as_dict(self):
        out = asdict(self)
        out["cut"] = self.cut.name
        return out


def coherence_report(r, cut, theta=BELL_THETA):
    """Both coherences and both entropies of one reduction at one r."""
    if isinstance(cut, str):
        cut = Bipartition.parse(cut)
    rho = reduced_density(r, cut, theta)
    s_rho, s_mix, log_d = _mixture_entropies(rho)
    return CoherenceReport(
        r=float(r),
        cut=cut,
        c_basis_independent=_coherence_from_entropies(s_mix, s_rho, log_d),
        c_l1=l1_coherence(rho),
        s_rho=s_rho,
        s_mix=s_mix,
    )


# closed forms, Bell input state only


def _h(p):
    """-p log2 p with the 0 log 0 = 0 convention."""
    return 0.0 if p <= 0.0 else -p * log2(p)


def _cut(cut):
    return Bipartition.parse(cut) if isinstance(cut, str) else cut


def closed_form_density(r, cut):
    """Analytic 4x4 reduction of the Bell-state Unruh state."""
    r = check_accel(r)
    cut = _cut(cut)
    c, s = cos(r), sin(r)
    rho = np.zeros((4, 4), dtype=complex)
    if cut is Bipartition.AB_I:
        rho[0, 0] = c * c / 2
        rho[1, 1] = s * s / 2
        rho[3, 3] = 0.5
        rho[0, 3] = rho[3, 0] = c / 2
    elif cut is Bipartition.AB_II:
        rho[0, 0] = c * c / 2
        rho[1, 1] = s * s / 2
        rho[2, 2] = 0.5
        rho[1, 2] = rho[2, 1] = s / 2
    else:
        rho[0, 0] = c * c / 2
        rho[2, 2] = 0.5
        rho[3, 3] = s * s / 2
        rho[0, 3] = rho[3, 0] = s * c / 2
    return rho


def frozen_coherence_constant():
    """Acceleration-independent coherence between the two Rindler modes."""
    return sqrt(-(3 / 4) * (1 + log2(3 / 8)))


def closed_form_state_entropy(r, cut):
    """Analytic S(rho) in bits for the given reduction."""
    r = check_accel(r)
    cut = _cut(cut)
    if cut is Bipartition.AB_I:
        return _h((3 + cos(2 * r)) / 4) + _h(sin(r) ** 2 / 2)
    if cut is Bipartition.AB_II:
        return _h(cos(r) ** 2 / 2) + _h((3 - cos(2 * r)) / 4)
    # rank-1 block of weight 1/2 on {|00>, |11>} plus 1/2 on |10>
    return _h(0.5) + _h(0.5)


def closed_form_mix_entropy(r, cut):
    """Analytic S((rho + I/4)/2) in bits for the given reduction."""
    r = check_accel(r)
    cut = _cut(cut)
    if cut is Bipartition.AB_I:
        return 3 / 4 + _h((4 + cos(2 * r)) / 8) + _h((1 + 2 * sin(r) ** 2) / 8)
    if cut is Bipartition.AB_II:
        return 3 / 4 + _h((1 + 2 * cos(r) ** 2) / 8) + _h((4 - cos(2 * r)) / 8)
    radicand = -(3 / 4) * (1 + log2(3 / 8))
    return radicand + (closed_form_state_entropy(r, cut) + 2) / 2


def closed_form_coherence(r, cut):
    """Analytic basis-independent coherence for the given reduction."""
    cut = _cut(cut)
    if cut is Bipartition.B_I_B_II:
        check_accel(r)
        return frozen_coherence_constant()
    return _coherence_from_entropies(closed_form_mix_entropy(r, cut), closed_form_state_entropy(r, cut), 2.0)
