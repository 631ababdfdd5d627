"""Dense complex linear algebra for few-qubit density matrices.

Matrices are plain ``numpy`` complex arrays. Multi-qubit bases are ordered
row-major with the first listed subsystem most significant, so for two
qubits the basis is |00>, |01>, |10>, |11>.
"""

from math import prod, sqrt
from string import ascii_letters

import numpy as np

from .errors import InvalidArgumentError, NotAStateError, NumericError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-10
PSD_TOL = 1e-10

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
MAX_EIG_DIM = 64


def _as_square(m, name="matrix"):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise InvalidArgumentError(f"{name} must be a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidArgumentError(f"{name} contains NaN or Inf")
    return m


def kron(a, b):
    """Kronecker product ``a (x) b``; the row/column dimensions multiply."""
    a = np.atleast_2d(np.asarray(a, dtype=complex))
    b = np.atleast_2d(np.asarray(b, dtype=complex))
    ra, ca = a.shape
    rb, cb = b.shape
    # out[i*rb + k, j*cb + l] = a[i, j] * b[k, l]
    out = a[:, None, :, None] * b[None, :, None, :]
    return out.reshape(ra * rb, ca * cb)


def partial_trace(rho, dims, keep):
    """Trace out every subsystem not listed in ``keep``.

    ``dims`` gives the local dimension of each subsystem (2 for qubits) in
    basis order. ``keep`` must be non-empty and strictly increasing; the
    kept subsystems stay in their original relative order.
    """
    rho = _as_square(rho, "rho")
    dims = [int(d) for d in dims]
    keep = [int(k) for k in keep]
    n = len(dims)
    if n == 0 or any(d < 1 for d in dims):
        raise InvalidArgumentError(f"invalid subsystem dimensions {dims}")
    if prod(dims) != rho.shape[0]:
        raise InvalidArgumentError(
            f"subsystem dimensions {dims} multiply to {prod(dims)}, matrix is {rho.shape[0]}x{rho.shape[0]}"
        )
    if not keep:
        raise InvalidArgumentError("keep must name at least one subsystem")
    if any(b <= a for a, b in zip(keep, keep[1:])):
        raise InvalidArgumentError(f"keep must be strictly increasing, got {keep}")
    if keep[0] < 0 or keep[-1] >= n:
        raise InvalidArgumentError(f"keep indices {keep} out of range for {n} subsystems")
    if 2 * n > len(ascii_letters):
        raise InvalidArgumentError("too many subsystems")

    row = list(ascii_letters[:n])
    col = list(ascii_letters[n:2 * n])
    for i in range(n):
        if i not in keep:
            col[i] = row[i]
    out = "".join(row[k] for k in keep) + "".join(col[k] for k in keep)
    subscripts = "".join(row) + "".join(col) + "->" + out
    reduced = np.einsum(subscripts, rho.reshape(dims + dims))
    d_keep = prod(dims[k] for k in keep)
    return reduced.reshape(d_keep, d_keep)


def _check_hermitian(h):
    h = _as_square(h)
    if h.shape[0] > MAX_EIG_DIM:
        raise InvalidArgumentError(f"dimension {h.shape[0]} exceeds eigensolver limit {MAX_EIG_DIM}")
    dev = np.max(np.abs(h - h.conj().T))
    if dev > HERMITIAN_TOL:
        raise InvalidArgumentError(f"matrix is not Hermitian (max |H - H^dag| = {dev:.3e})")
    return h


def _off_norm(h):
    off = h - np.diag(np.diag(h))
    return float(np.linalg.norm(off))


def hermitian_eigh(h, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigen-decompose a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(eigenvalues, vectors)`` with real eigenvalues sorted in
    descending order and the matching orthonormal eigenvectors as columns,
    so that ``h ~= vectors @ diag(eigenvalues) @ vectors^dag``.

    Sweeps stop once the off-diagonal Frobenius norm falls below
    ``tol * max(1, ||h||_F)``; raises :class:`NumericError` if that does not
    happen within ``max_sweeps``.
    """
    a = _check_hermitian(h).copy()
    a = (a + a.conj().T) / 2
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for _ in range(max_sweeps):
        if _off_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                # phase rotation makes a[p, q] real, then a real Givens rotation zeroes it
                phase = np.conj(apq) / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                u = np.array([[c, s], [-s * phase, c * phase]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u
                a[idx, :] = u.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ u
    else:
        if _off_norm(a) >= threshold:
            raise NumericError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")

    evals = np.real(np.diag(a))
    order = np.argsort(-evals, kind="stable")
    return evals[order], v[:, order]


def hermitian_eigenvalues(h):
    """Real eigenvalues of a Hermitian matrix, descending."""
    return hermitian_eigh(h)[0]


def _density_spectrum(rho):
    evals = hermitian_eigenvalues(rho)
    tr = float(np.real(np.trace(np.asarray(rho, dtype=complex))))
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotAStateError(f"trace is {tr!r}, expected 1")
    if evals[-1] < -PSD_TOL:
        raise NotAStateError(f"negative eigenvalue {evals[-1]:.3e}")
    return evals


def check_density_matrix(rho):
    """Return ``rho`` as a complex array after checking it is a valid state.

    Hermitian within 1e-12, unit trace within 1e-10 and no eigenvalue below
    -1e-10.
    """
    rho = _as_square(rho, "rho")
    _density_spectrum(rho)
    return rho


def von_neumann_entropy(rho):
    """Von Neumann entropy in bits, with 0 log 0 = 0.

    Eigenvalues in [-1e-10, 0) are treated as zero; anything more negative
    raises :class:`NotAStateError`.
    """
    evals = np.clip(_density_spectrum(rho), 0.0, None)
    nz = evals[evals > 0.0]
    return float(-np.sum(nz * np.log2(nz))) + 0.0
