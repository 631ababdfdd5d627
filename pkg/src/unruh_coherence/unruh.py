"""Tripartite Rindler-mode state and its two-mode reductions.

Alice's mode A and Bob's Minkowski mode B start in
``cos(theta)|00> + sin(theta)|11>``. Seen by a uniformly accelerated Bob, B
splits into Rindler modes B_I and B_II:

    |0_B> -> cos r |0_I 0_II> + sin r |1_I 1_II>
    |1_B> -> |1_I 0_II>

Qubits are ordered (A, B_I, B_II) with A most significant.
"""

import enum
from math import cos, pi, sin

import numpy as np

from .errors import InvalidArgumentError
from .linalg import partial_trace

R_MAX = pi / 4
BELL_THETA = pi / 4
MODE_DIMS = (2, 2, 2)


class Bipartition(enum.Enum):
    """The three two-mode reductions of the (A, B_I, B_II) state."""

    AB_I = (0, 1)
    AB_II = (0, 2)
    B_I_B_II = (1, 2)

    @property
    def keep(self):
        return self.value

    @property
    def label(self):
        return self.name

    @classmethod
    def parse(cls, name):
        try:
            return cls[name]
        except KeyError:
            choices = ", ".join(c.name for c in cls)
            raise InvalidArgumentError(f"unknown bipartition {name!r} (choose from {choices})") from None


def check_accel(r):
    """Validate the acceleration parameter, 0 <= r <= pi/4, and return it as float."""
    r = float(r)
    if not 0.0 <= r <= R_MAX:
        raise InvalidArgumentError(f"acceleration parameter r={r!r} outside [0, pi/4]")
    return r


def unruh_state(r, theta=BELL_THETA):
    """Amplitudes of the accelerated state over |A B_I B_II>, length 8.

    With the default ``theta`` the inertial state is the Bell state and the
    nonzero amplitudes are cos(r)/sqrt2 on |000>, sin(r)/sqrt2 on |011> and
    1/sqrt2 on |110>.
    """
    r = check_accel(r)
    theta = float(theta)
    if not np.isfinite(theta):
        raise InvalidArgumentError(f"theta must be finite, got {theta!r}")
    psi = np.zeros(8, dtype=complex)
    psi[0b000] = cos(theta) * cos(r)
    psi[0b011] = cos(theta) * sin(r)
    psi[0b110] = sin(theta)
    return psi


def reduced_density(r, cut, theta=BELL_THETA):
    """4x4 density matrix of the two modes named by ``cut``."""
    if isinstance(cut, str):
        cut = Bipartition.parse(cut)
    psi = unruh_state(r, theta)
    rho = np.outer(psi, psi.conj())
    return partial_trace(rho, MODE_DIMS, cut.keep)
