"""Validated quantum-state types and seeded random state generation.

The dataclasses store data without checking it; the ``density_from_*``,
``pure_state`` and ``diagonal_distribution`` factories are the validation
gates. Validation never repairs input (no clamping, no renormalizing), so
a failed invariant always surfaces as a named error.
"""

import math
from dataclasses import dataclass

import numpy as np

from wedgemap.config import DEFAULTS
from wedgemap.errors import NotHermitian, NotPositive, TraceNotOne
from wedgemap.linalg import hermitian_eigendecompose, is_hermitian
from wedgemap.rng import SplitMix64


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix."""

    dim: int
    mat: np.ndarray


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm amplitude vector."""

    dim: int
    amplitudes: np.ndarray


@dataclass(frozen=True, eq=False)
class DiagonalDistribution:
    """Probability vector: nonnegative entries summing to 1."""

    probs: np.ndarray


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.array(a, copy=True)
    out.setflags(write=False)
    return out


def density_from_matrix(
    m: np.ndarray,
    tol: float = DEFAULTS.hermitian,
    trace_tol: float = DEFAULTS.trace,
    psd_tol: float = DEFAULTS.psd,
) -> DensityMatrix:
    """Validate a matrix as a quantum state; the matrix is stored unchanged.

    Raises ``NotHermitian``, ``TraceNotOne`` or ``NotPositive`` naming the
    violated invariant.
    """
    arr = np.asarray(m, dtype=complex)
    if not is_hermitian(arr, tol):
        raise NotHermitian(f"state matrix is not Hermitian within {tol:g}")
    tr = float(np.trace(arr).real)
    if abs(tr - 1.0) > trace_tol:
        raise TraceNotOne(f"trace is {tr!r}, expected 1 within {trace_tol:g}")
    smallest = float(hermitian_eigendecompose(arr, tol).values[-1])
    if smallest < -psd_tol:
        raise NotPositive(f"smallest eigenvalue {smallest!r} below -{psd_tol:g}")
    return DensityMatrix(dim=arr.shape[0], mat=_frozen(arr))


def pure_state(amplitudes: np.ndarray, tol: float = DEFAULTS.unit_norm) -> PureState:
    """Validate an amplitude vector as a pure state."""
    a = np.asarray(amplitudes, dtype=complex).reshape(-1)
    norm_sq = float(np.sum(np.abs(a) ** 2))
    if abs(norm_sq - 1.0) > tol:
        raise ValueError(f"amplitudes have squared norm {norm_sq!r}, expected 1")
    return PureState(dim=a.size, amplitudes=_frozen(a))


def diagonal_distribution(probs, tol: float = DEFAULTS.prob_sum) -> DiagonalDistribution:
    """Validate a probability vector."""
    p = np.asarray(probs, dtype=float).reshape(-1)
    if np.any(p < 0.0):
        raise ValueError(f"negative probability in {p.tolist()}")
    total = float(np.sum(p))
    if abs(total - 1.0) > tol:
        raise ValueError(f"probabilities sum to {total!r}, expected 1")
    return DiagonalDistribution(probs=_frozen(p))


def density_from_pure(psi: PureState) -> DensityMatrix:
    """Rank-1 projector onto a pure state."""
    a = psi.amplitudes
    return density_from_matrix(np.outer(a, a.conj()))


def density_from_diagonal(p: DiagonalDistribution) -> DensityMatrix:
    """Diagonal state with the given probabilities."""
    return density_from_matrix(np.diag(p.probs.astype(complex)))


def random_pure(dim: int, seed: int) -> PureState:
    """Haar-distributed pure state: normalized complex Gaussian vector."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    gen = SplitMix64(seed)
    a = gen.complex_normals(dim)
    a /= math.sqrt(float(np.sum(np.abs(a) ** 2)))
    return pure_state(a)


def random_mixed(dim: int, seed: int) -> DensityMatrix:
    """Ginibre-induced mixed state ``G G† / tr(G G†)``."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    gen = SplitMix64(seed)
    g = gen.complex_normals(dim * dim).reshape(dim, dim)
    m = g @ g.conj().T
    m /= np.trace(m).real
    return density_from_matrix(m)


def random_unitary(dim: int, seed: int) -> np.ndarray:
    """Haar-distributed unitary.

    Gram-Schmidt on a Ginibre matrix yields the QR factor with positive
    diagonal R, which is exactly the Haar convention. Columns are
    orthogonalized twice for numerical safety.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    gen = SplitMix64(seed)
    g = gen.complex_normals(dim * dim).reshape(dim, dim)
    q = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        v = g[:, k].copy()
        for _ in range(2):
            for j in range(k):
                v -= (q[:, j].conj() @ v) * q[:, j]
        v /= math.sqrt(float(np.sum(np.abs(v) ** 2)))
        q[:, k] = v
    return q


def random_diagonal(dim: int, seed: int) -> DiagonalDistribution:
    """Uniform point on the probability simplex (spacings of sorted uniforms)."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    gen = SplitMix64(seed)
    cuts = sorted(gen.uniform() for _ in range(dim - 1))
    edges = [0.0, *cuts, 1.0]
    p = [edges[i + 1] - edges[i] for i in range(dim)]
    return diagonal_distribution(p)
