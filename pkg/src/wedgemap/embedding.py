"""Isomorphism between qudit states and antisymmetric two-fermion states.

A d-level system with N = d(d-1)/2 dimensions of state space maps onto two
identical d-dimensional fermions: the wedge vectors

    |g_k> = (|i>|j> - |j>|i>) / sqrt(2),   i < j lexicographic,

span the antisymmetric subspace of the d*d product space, and a density
matrix rho on the N-dimensional space embeds as sum_kl rho_kl |g_k><g_l|.
The embedding preserves the spectrum (it only adds zero eigenvalues), is
exactly invertible on the antisymmetric subspace, and its reduced
single-fermion states carry the correlations the rest of the library
measures.

Index convention: basis pair (i, j) is 0-based and flattens to i*d + j with
the first factor major.
"""

from dataclasses import dataclass

import numpy as np

from wedgemap.config import DEFAULTS
from wedgemap.errors import DimensionMismatch, DimensionTooSmall, NotAntisymmetric
from wedgemap.reductions import BipartiteShape, partial_trace
from wedgemap.states import DensityMatrix, density_from_matrix

_SQRT_HALF = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class WedgeBasis:
    """Ordered wedge-pair index list for single-fermion dimension d."""

    d: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True, eq=False)
class TwoFermionState:
    """d^2-dimensional state supported on the antisymmetric subspace."""

    d: int
    rho: DensityMatrix


def wedge_basis(d: int) -> WedgeBasis:
    """Lexicographically ordered pairs (i, j), i < j; N = d(d-1)/2 of them."""
    if d < 2:
        raise DimensionTooSmall(f"need d >= 2 for a two-fermion space, got {d}")
    pairs = tuple((i, j) for i in range(d) for j in range(i + 1, d))
    return WedgeBasis(d=d, pairs=pairs)


def wedge_isometry(d: int) -> np.ndarray:
    """d^2 x N matrix whose columns are the wedge vectors."""
    basis = wedge_basis(d)
    w = np.zeros((d * d, basis.size), dtype=complex)
    for k, (i, j) in enumerate(basis.pairs):
        w[i * d + j, k] = _SQRT_HALF
        w[j * d + i, k] = -_SQRT_HALF
    return w


def swap_matrix(d: int) -> np.ndarray:
    """Exchange of the two tensor factors: SWAP |i>|j> = |j>|i>."""
    s = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            s[j * d + i, i * d + j] = 1.0
    return s


def _check_support(m: np.ndarray, d: int, tol: float) -> None:
    sym = 0.5 * (m + swap_matrix(d) @ m)
    dev = float(np.max(np.abs(sym)))
    if dev > tol:
        raise NotAntisymmetric(
            f"symmetric-subspace component {dev:g} exceeds {tol:g}"
        )


def two_fermion_state(
    d: int, rho: DensityMatrix, tol: float = DEFAULTS.antisymmetric
) -> TwoFermionState:
    """Wrap a validated d^2-dim state after checking antisymmetric support."""
    if rho.dim != d * d:
        raise DimensionMismatch(f"state dim {rho.dim} is not {d}^2")
    _check_support(rho.mat, d, tol)
    return TwoFermionState(d=d, rho=rho)


def embed(rho: DensityMatrix, d: int) -> TwoFermionState:
    """Embed an N-dim state into the d^2-dim two-fermion space.

    Built by explicit outer-product accumulation over wedge vectors: each
    coefficient rho_kl lands as four signed half-entries. The companion
    ``embed_via_isometry`` computes the same matrix by conjugation and is
    kept as an independent cross-check.
    """
    basis = wedge_basis(d)
    if rho.dim != basis.size:
        raise DimensionMismatch(
            f"state dim {rho.dim} does not match d(d-1)/2 = {basis.size} for d = {d}"
        )
    m = rho.mat
    out = np.zeros((d * d, d * d), dtype=complex)
    for k, (i1, j1) in enumerate(basis.pairs):
        row_pos = i1 * d + j1
        row_neg = j1 * d + i1
        for l, (i2, j2) in enumerate(basis.pairs):
            col_pos = i2 * d + j2
            col_neg = j2 * d + i2
            half = 0.5 * m[k, l]
            out[row_pos, col_pos] += half
            out[row_pos, col_neg] -= half
            out[row_neg, col_pos] -= half
            out[row_neg, col_neg] += half
    return TwoFermionState(d=d, rho=density_from_matrix(out))


def embed_via_isometry(rho: DensityMatrix, d: int) -> np.ndarray:
    """Embedded matrix computed as W rho W† with W the wedge isometry."""
    basis = wedge_basis(d)
    if rho.dim != basis.size:
        raise DimensionMismatch(
            f"state dim {rho.dim} does not match d(d-1)/2 = {basis.size} for d = {d}"
        )
    w = wedge_isometry(d)
    return w @ rho.mat @ w.conj().T


def extract(state, d: int | None = None, tol: float = DEFAULTS.antisymmetric) -> DensityMatrix:
    """Invert the embedding: project a two-fermion state back to N dims.

    Accepts a ``TwoFermionState`` or a bare d^2-dim ``DensityMatrix`` (pass
    ``d`` explicitly in the latter case if the dimension is ambiguous).
    Raises ``NotAntisymmetric`` if the input has weight outside the wedge
    subspace, where the inverse is not defined.
    """
    if isinstance(state, TwoFermionState):
        rho, dd = state.rho, state.d
    else:
        rho = state
        dd = d if d is not None else round(np.sqrt(rho.dim))
    if rho.dim != dd * dd:
        raise DimensionMismatch(f"state dim {rho.dim} is not {dd}^2")
    _check_support(rho.mat, dd, tol)
    w = wedge_isometry(dd)
    return density_from_matrix(w.conj().T @ rho.mat @ w)


def reduced_fermion_state(rho: DensityMatrix, d: int) -> DensityMatrix:
    """Single-fermion marginal of the embedded state.

    The two marginals coincide by antisymmetry, so tracing out either
    factor gives the same d-dim state.
    """
    embedded = embed(rho, d)
    return partial_trace(embedded.rho, BipartiteShape(d, d), keep="A")
