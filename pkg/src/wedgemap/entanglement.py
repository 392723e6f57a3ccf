"""Entanglement monotones and the diagonal-state closed form.

Negativity of a bipartite state is (||rho^PT||_1 - 1) / 2, equivalently the
sum of moduli of the negative eigenvalues of the partial transpose. For
embedded diagonal states diag(p1, p2, p3) the partial-transpose spectrum
reduces to six nonnegative half-probabilities plus half the roots of the
depressed cubic

    x^3 - (p1^2 + p2^2 + p3^2) x + 2 p1 p2 p3 = 0,

so the negativity is |negative root| / 2. The cubic is solved in closed
form (all three roots are real; the matrix block behind it is symmetric),
which keeps this path independent of the eigensolver.
"""

import math
from dataclasses import dataclass

import numpy as np

from wedgemap.config import DEFAULTS
from wedgemap.errors import DimensionMismatch, NotPure, ShapeMismatch
from wedgemap.linalg import hermitian_eigendecompose
from wedgemap.reductions import partial_trace, partial_transpose
from wedgemap.states import DensityMatrix, DiagonalDistribution


@dataclass(frozen=True, eq=False)
class MonotoneReport:
    """Negativity and companions for one bipartite state."""

    negativity: float
    log_negativity: float
    neg_eigenvalues: tuple[float, ...]
    entangled: bool


@dataclass(frozen=True, eq=False)
class CubicAnalysis:
    """Closed-form spectrum data for an embedded diagonal qutrit state.

    ``coefficients`` are (1, 0, c1, c0) of the monic depressed cubic,
    ``roots`` are sorted ascending, and ``negativity`` is |most negative
    root| / 2 (the 1/2 rescales cubic roots to partial-transpose
    eigenvalues).
    """

    coefficients: tuple[float, float, float, float]
    roots: tuple[float, float, float]
    negativity: float


def negativity(
    rho: DensityMatrix, shape, threshold: float = DEFAULTS.entangled
) -> MonotoneReport:
    """Negativity report of a bipartite state (transpose on factor B)."""
    pt = partial_transpose(rho, shape, which="B")
    values = hermitian_eigendecompose(pt).values
    negs = tuple(float(x) for x in values if x < 0.0)
    e = -math.fsum(negs)
    log_neg = math.log(float(np.sum(np.abs(values))))
    return MonotoneReport(
        negativity=e,
        log_negativity=log_neg,
        neg_eigenvalues=negs,
        entangled=e > threshold,
    )


def entanglement_entropy(
    rho: DensityMatrix, shape, purity_tol: float = DEFAULTS.purity
) -> float:
    """Von Neumann entropy of either marginal of a pure bipartite state."""
    purity = float(np.trace(rho.mat @ rho.mat).real)
    if purity < 1.0 - purity_tol:
        raise NotPure(f"trace(rho^2) = {purity!r}, expected 1 within {purity_tol:g}")
    marginal = partial_trace(rho, shape, keep="A")
    values = hermitian_eigendecompose(marginal.mat).values
    return -math.fsum(v * math.log(v) for v in values if v > 0.0)


def diagonal_cubic_analysis(p: DiagonalDistribution) -> CubicAnalysis:
    """Closed-form negativity of the embedded state of diag(p1, p2, p3)."""
    probs = p.probs
    if probs.size != 3:
        raise DimensionMismatch(f"need exactly 3 probabilities, got {probs.size}")
    p1, p2, p3 = (float(x) for x in probs)
    c1 = -(p1 * p1 + p2 * p2 + p3 * p3)
    c0 = 2.0 * p1 * p2 * p3
    roots = _depressed_cubic_roots(c1, c0)
    return CubicAnalysis(
        coefficients=(1.0, 0.0, c1, c0),
        roots=roots,
        negativity=max(0.0, -roots[0]) / 2.0,
    )


def _depressed_cubic_roots(c1: float, c0: float) -> tuple[float, float, float]:
    """All-real roots of x^3 + c1 x + c0 via the trigonometric form.

    Requires c1 < 0 with nonpositive discriminant, which holds for every
    probability vector (c1 <= -1/3 there). One Newton step polishes each
    root; the step is skipped at critical points of the cubic.
    """
    m = math.sqrt(-c1 / 3.0)
    arg = -c0 / (2.0 * m * m * m)
    arg = max(-1.0, min(1.0, arg))
    phi = math.acos(arg)
    roots = []
    for k in range(3):
        x = 2.0 * m * math.cos((phi + 2.0 * math.pi * k) / 3.0)
        slope = 3.0 * x * x + c1
        if slope != 0.0:
            x -= (x * x * x + c1 * x + c0) / slope
        roots.append(x)
    r0, r1, r2 = sorted(roots)
    return (r0, r1, r2)


def convexity_check(
    states: list[DensityMatrix],
    weights: DiagonalDistribution,
    shape,
    slack: float = DEFAULTS.entangled,
) -> bool:
    """True iff negativity of the mixture is below the weighted average.

    Checks E(sum_i w_i rho_i) <= sum_i w_i E(rho_i) + slack.
    """
    w = weights.probs
    if len(states) != w.size:
        raise ShapeMismatch(f"{len(states)} states but {w.size} weights")
    dims = {s.dim for s in states}
    if len(dims) != 1:
        raise ShapeMismatch(f"states have mixed dimensions {sorted(dims)}")
    mixture = DensityMatrix(
        dim=states[0].dim,
        mat=sum(wi * s.mat for wi, s in zip(w, states)),
    )
    lhs = negativity(mixture, shape).negativity
    rhs = math.fsum(wi * negativity(s, shape).negativity for wi, s in zip(w, states))
    return lhs <= rhs + slack
