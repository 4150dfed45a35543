"""Dense complex Hermitian linear algebra for small spin Hamiltonians.

Provides Kronecker products, spin-1/2 operator sets, and a cyclic Jacobi
eigensolver with complex rotations. Everything targets dimensions <= 64,
small enough that a self-contained deterministic solver is preferable to a
LAPACK call whose rotation order and tie-breaking vary across builds.

Conventions: matrices are complex128 throughout, even for models that happen
to be real symmetric. Energies carried by these operators are in kelvin
(k_B = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError, NonHermitianError

# Relative Hermiticity tolerance: max|A - A'| entrywise vs max|A|.
HERMITICITY_RTOL = 1e-10

# Jacobi sweep cap and convergence target for the off-diagonal Frobenius norm.
_JACOBI_MAX_SWEEPS = 100
_JACOBI_TARGET_RTOL = 1e-13
_JACOBI_ACCEPT_RTOL = 1e-12


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square complex matrices.

    The block at block-row i, block-col j is ``a[i, j] * b``. Thin wrapper
    over ``numpy.kron`` that enforces square inputs and a complex result.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"kron: first factor is not square, shape {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"kron: second factor is not square, shape {b.shape}")
    return np.kron(a, b)


def spin_half_operators():
    """Spin-1/2 operator set.

    Returns
    -------
    (Sx, Sy, Sz, sigma_x, sigma_y, sigma_z) : tuple of 2x2 complex arrays
        Spin operators S = sigma/2 and the standard Pauli matrices.
    """
    sigma_x = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    sigma_y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
    sigma_z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    return (0.5 * sigma_x, 0.5 * sigma_y, 0.5 * sigma_z,
            sigma_x, sigma_y, sigma_z)


@dataclass(frozen=True)
class HermitianOperator:
    """A dense complex matrix validated to be Hermitian.

    Parameters
    ----------
    matrix : ndarray
        Square complex matrix. Checked entrywise against its adjoint;
        ``hermiticity_defect`` records max|A - A'|.

    Raises
    ------
    NonHermitianError
        If the defect exceeds ``HERMITICITY_RTOL * max|A|``.
    """

    matrix: np.ndarray
    hermiticity_defect: float = 0.0

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"operator matrix must be square, got {m.shape}")
        if not np.all(np.isfinite(m.view(float))):
            raise ValueError("operator matrix has non-finite entries")
        defect = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
        scale = float(np.max(np.abs(m))) if m.size else 0.0
        if defect > HERMITICITY_RTOL * max(scale, 1e-300):
            raise NonHermitianError(
                f"hermiticity defect {defect:.3e} exceeds "
                f"{HERMITICITY_RTOL:.0e} * max|A| = {HERMITICITY_RTOL * scale:.3e}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "hermiticity_defect", defect)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectrum of a Hermitian operator.

    ``values`` are real and ascending (ties keep the solver's original
    ordering); ``vectors`` holds the matching eigenvectors as columns of a
    unitary matrix.
    """

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)
        self.vectors.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.values.shape[0]


def _offdiag_norm_sq(a: np.ndarray) -> float:
    # summed directly (not as total - diagonal, which cancels to sqrt(eps))
    sq = np.abs(a) ** 2
    np.fill_diagonal(sq, 0.0)
    return float(np.sum(sq))


def hermitian_eigen(a) -> EigenDecomposition:
    """Diagonalize a Hermitian operator by cyclic Jacobi rotations.

    Sweeps all (p, q) pairs in row order, annihilating each off-diagonal
    entry with a complex plane rotation, until the off-diagonal Frobenius
    norm drops below ``1e-13 * ||A||_F`` or 100 sweeps elapse.

    Parameters
    ----------
    a : HermitianOperator or ndarray
        Raw arrays are validated first (may raise ``NonHermitianError``).

    Returns
    -------
    EigenDecomposition
        Ascending eigenvalues and unitary eigenvector columns.

    Raises
    ------
    NoConvergenceError
        Off-diagonal norm still above ``1e-12 * ||A||_F`` after the cap.
    """
    if not isinstance(a, HermitianOperator):
        a = HermitianOperator(np.asarray(a, dtype=complex))
    n = a.dim
    work = a.matrix.astype(complex, copy=True)
    vectors = np.eye(n, dtype=complex)

    norm = math.sqrt(float(np.sum(np.abs(work) ** 2)))
    if n <= 1 or norm == 0.0:
        values = np.real(np.diag(work)).copy()
        return EigenDecomposition(values=values, vectors=vectors)

    target_sq = (_JACOBI_TARGET_RTOL * norm) ** 2
    skip = 1e-300  # rotations on exactly-zero entries are no-ops

    converged = False
    for _ in range(_JACOBI_MAX_SWEEPS):
        if _offdiag_norm_sq(work) < target_sq:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = work[p, q]
                mag = abs(beta)
                if mag <= skip:
                    continue
                phase = beta / mag
                theta = float((work[q, q].real - work[p, p].real) / (2.0 * mag))
                # smaller root of t^2 - 2*theta*t - 1 = 0
                if abs(theta) > 1e150:  # theta^2 would overflow
                    t = -0.5 / theta
                else:
                    t = -math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = (t * c) * phase.conjugate()
                s_conj = s.conjugate()

                # A <- G' A G with G = I except G[pp]=G[qq]=c,
                # G[pq] = -conj(s), G[qp] = s
                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = c * col_p + s * col_q
                work[:, q] = -s_conj * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = c * row_p + s_conj * row_q
                work[q, :] = -s * row_p + c * row_q
                work[p, q] = 0.0
                work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real

                vec_p = vectors[:, p].copy()
                vec_q = vectors[:, q].copy()
                vectors[:, p] = c * vec_p + s * vec_q
                vectors[:, q] = -s_conj * vec_p + c * vec_q
    else:
        if _offdiag_norm_sq(work) >= (_JACOBI_ACCEPT_RTOL * norm) ** 2:
            raise NoConvergenceError(
                f"off-diagonal norm {math.sqrt(_offdiag_norm_sq(work)):.3e} "
                f"after {_JACOBI_MAX_SWEEPS} sweeps (||A|| = {norm:.3e})"
            )
        converged = True

    if not converged:  # pragma: no cover - loop exits via break or else-clause
        raise NoConvergenceError("jacobi iteration ended in unexpected state")

    raw = np.real(np.diag(work))
    order = np.argsort(raw, kind="stable")
    values = np.ascontiguousarray(raw[order])
    vectors = np.ascontiguousarray(vectors[:, order])
    return EigenDecomposition(values=values, vectors=vectors)


def eigenbasis_diagonal(operator, basis: np.ndarray) -> np.ndarray:
    """Diagonal matrix elements <n|A|n> in the given eigenbasis columns."""
    m = operator.matrix if isinstance(operator, HermitianOperator) else np.asarray(operator, dtype=complex)
    if m.shape[0] != basis.shape[0]:
        raise ValueError(
            f"operator dim {m.shape[0]} does not match basis dim {basis.shape[0]}")
    return np.real(np.einsum("in,ij,jn->n", basis.conj(), m, basis))
