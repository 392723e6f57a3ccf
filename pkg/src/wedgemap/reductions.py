"""Subsystem operations on bipartite states.

``partial_trace`` is the block-matrix recipe: with the composite index
split as (A major, B minor), keeping A takes the trace of each B-sized
block, keeping B sums the diagonal blocks. ``partial_trace_naive`` computes
the same object entry by entry from the basis-sum definition; it exists so
tests can pit the two against each other.
"""

from typing import NamedTuple

import numpy as np

from wedgemap.errors import ShapeMismatch
from wedgemap.states import DensityMatrix, density_from_matrix


class BipartiteShape(NamedTuple):
    """Factor dimensions (dim_a, dim_b) of a bipartite space."""

    dim_a: int
    dim_b: int


def _as_matrix(rho) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        return rho.mat
    return np.asarray(rho, dtype=complex)


def _check_shape(m: np.ndarray, shape) -> BipartiteShape:
    s = BipartiteShape(*shape)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {m.shape}")
    if s.dim_a * s.dim_b != m.shape[0]:
        raise ShapeMismatch(
            f"shape {s.dim_a}x{s.dim_b} does not factor a {m.shape[0]}-dim matrix"
        )
    return s


def _check_subsystem(which: str) -> str:
    if which not in ("A", "B"):
        raise ValueError(f"subsystem selector must be 'A' or 'B', got {which!r}")
    return which


def partial_trace(rho, shape, keep: str) -> DensityMatrix:
    """Trace out one factor of a bipartite state via the block recipe."""
    m = _as_matrix(rho)
    da, db = _check_shape(m, shape)
    _check_subsystem(keep)
    if keep == "A":
        out = np.empty((da, da), dtype=complex)
        for k in range(da):
            for l in range(da):
                out[k, l] = np.trace(m[k * db:(k + 1) * db, l * db:(l + 1) * db])
    else:
        out = np.zeros((db, db), dtype=complex)
        for k in range(da):
            out += m[k * db:(k + 1) * db, k * db:(k + 1) * db]
    return density_from_matrix(out)


def partial_trace_naive(rho, shape, keep: str) -> DensityMatrix:
    """Same contract as ``partial_trace``, computed by raw index sums."""
    m = _as_matrix(rho)
    da, db = _check_shape(m, shape)
    _check_subsystem(keep)
    if keep == "A":
        out = np.zeros((da, da), dtype=complex)
        for i1 in range(da):
            for i2 in range(da):
                for j in range(db):
                    out[i1, i2] += m[i1 * db + j, i2 * db + j]
    else:
        out = np.zeros((db, db), dtype=complex)
        for j1 in range(db):
            for j2 in range(db):
                for i in range(da):
                    out[j1, j2] += m[i * db + j1, i * db + j2]
    return density_from_matrix(out)


def partial_transpose(rho, shape, which: str) -> np.ndarray:
    """Transpose one factor of a bipartite matrix.

    Returns a plain matrix: the result is Hermitian with the same trace but
    may be indefinite, which is exactly what entanglement detection needs,
    so no state validation is applied.
    """
    m = _as_matrix(rho)
    da, db = _check_shape(m, shape)
    _check_subsystem(which)
    t = m.reshape(da, db, da, db)
    if which == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        t = t.transpose(2, 1, 0, 3)
    return np.ascontiguousarray(t.reshape(da * db, da * db))
