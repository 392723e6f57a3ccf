"""Dense complex matrix helpers: Hermitian eigenproblem, trace norm, kron.

Matrices are plain ``numpy.ndarray`` of complex128. The eigensolver is the
package's own cyclic Jacobi kernel (compiled when available); nothing here
calls LAPACK, which keeps every reported number reproducible from first
principles.
"""

from dataclasses import dataclass

import numpy as np

from wedgemap._kernels import jacobi_eigh
from wedgemap.config import DEFAULTS
from wedgemap.errors import NoConvergence, NotHermitian


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues sorted descending and matching orthonormal column vectors."""

    values: np.ndarray
    vectors: np.ndarray


def _square(a: np.ndarray) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def is_hermitian(a: np.ndarray, tol: float = DEFAULTS.hermitian) -> bool:
    """True iff ``max |a_ij - conj(a_ji)| <= tol``. NaN/Inf entries fail."""
    m = _square(a)
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    return bool(dev <= tol)


def hermitian_eigendecompose(
    a: np.ndarray,
    tol: float = DEFAULTS.hermitian,
    max_sweeps: int = DEFAULTS.jacobi_max_sweeps,
) -> EigenDecomposition:
    """Eigendecompose a Hermitian matrix.

    Parameters
    ----------
    a : square complex matrix, Hermitian within ``tol``.
    tol : Hermiticity tolerance checked before solving.
    max_sweeps : Jacobi sweep budget; exhausting it raises ``NoConvergence``.

    Ties in the descending eigenvalue sort keep the first-encountered
    vector, so degenerate spectra are stable across calls.
    """
    m = _square(a)
    if not is_hermitian(m, tol):
        raise NotHermitian(f"matrix is not Hermitian within {tol:g}")
    values, vectors, converged = jacobi_eigh(m, DEFAULTS.jacobi_rel, max_sweeps)
    if not converged:
        raise NoConvergence(f"Jacobi sweeps exhausted (budget {max_sweeps})")
    order = np.argsort(-values, kind="stable")
    return EigenDecomposition(values=values[order], vectors=vectors[:, order])


def trace_norm(a: np.ndarray, tol: float = DEFAULTS.hermitian) -> float:
    """Sum of eigenvalue moduli of a Hermitian matrix."""
    eig = hermitian_eigendecompose(a, tol)
    return float(np.sum(np.abs(eig.values)))


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the first factor major (lexicographic basis)."""
    return np.kron(_square(a), _square(b))
