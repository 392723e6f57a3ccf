"""Acceptance checks behind the ``verify`` command.

Each criterion recomputes one quantitative claim about the embedding from
scratch and reports target, computed value, and tolerance. The hand-written
reference matrices in this module are deliberate transliterations of the
known d = 3 closed forms, kept independent of the construction code they
check.
"""

import math
from dataclasses import dataclass

import numpy as np

from wedgemap.embedding import embed, embed_via_isometry, reduced_fermion_state
from wedgemap.entanglement import diagonal_cubic_analysis, negativity, entanglement_entropy
from wedgemap.linalg import hermitian_eigendecompose, tensor_product
from wedgemap.reductions import partial_trace, partial_trace_naive
from wedgemap.states import (
    DensityMatrix,
    density_from_diagonal,
    density_from_matrix,
    density_from_pure,
    diagonal_distribution,
    random_diagonal,
    random_mixed,
    random_pure,
    random_unitary,
)
from wedgemap.sweep import sweep_csv

LN2 = math.log(2.0)
SHAPE33 = (3, 3)


@dataclass(frozen=True)
class ClaimRow:
    criterion: int
    claim: str
    target: str
    computed: str
    tol: str
    passed: bool


def _num(x: float) -> str:
    return f"{x:.12g}"


def _row(criterion, claim, target, computed, tol, passed) -> ClaimRow:
    return ClaimRow(criterion, claim, target, computed, f"{tol:.0e}", passed)


def embedded_reference_d3(m: np.ndarray) -> np.ndarray:
    """Hand-written 9x9 embedded form of a 3x3 state (independent of embed)."""
    r = np.asarray(m, dtype=complex)
    z = 0.0
    rows = [
        [z, z, z, z, z, z, z, z, z],
        [z, r[0, 0], r[0, 1], -r[0, 0], z, r[0, 2], -r[0, 1], -r[0, 2], z],
        [z, r[1, 0], r[1, 1], -r[1, 0], z, r[1, 2], -r[1, 1], -r[1, 2], z],
        [z, -r[0, 0], -r[0, 1], r[0, 0], z, -r[0, 2], r[0, 1], r[0, 2], z],
        [z, z, z, z, z, z, z, z, z],
        [z, r[2, 0], r[2, 1], -r[2, 0], z, r[2, 2], -r[2, 1], -r[2, 2], z],
        [z, -r[1, 0], -r[1, 1], r[1, 0], z, -r[1, 2], r[1, 1], r[1, 2], z],
        [z, -r[2, 0], -r[2, 1], r[2, 0], z, -r[2, 2], r[2, 1], r[2, 2], z],
        [z, z, z, z, z, z, z, z, z],
    ]
    return 0.5 * np.array(rows, dtype=complex)


def reduced_reference_d3(m: np.ndarray) -> np.ndarray:
    """Hand-written single-fermion marginal of a 3x3 state."""
    r = np.asarray(m, dtype=complex)
    rows = [
        [r[0, 0] + r[1, 1], r[1, 2], -r[0, 2]],
        [r[2, 1], r[0, 0] + r[2, 2], r[0, 1]],
        [-r[2, 0], r[1, 0], r[1, 1] + r[2, 2]],
    ]
    return 0.5 * np.array(rows, dtype=complex)


def _embedded_negativity(rho: DensityMatrix) -> float:
    return negativity(embed(rho, 3).rho, SHAPE33).negativity


def _crit_1_pure_negativity(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    worst, maxdev = 0.5, 0.0
    for i in range(200):
        rho = density_from_pure(random_pure(3, seed + i))
        e = _embedded_negativity(rho)
        if abs(e - 0.5) > maxdev:
            maxdev, worst = abs(e - 0.5), e
    return [_row(1, "pure-state negativity", "0.5", _num(worst), tol, maxdev <= tol)]


def _crit_2_pure_entropy(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    worst_s, dev_s = LN2, 0.0
    worst_l, dev_l = 0.5, 0.0
    for i in range(200):
        rho = density_from_pure(random_pure(3, seed + i))
        state = embed(rho, 3)
        s = entanglement_entropy(state.rho, SHAPE33)
        if abs(s - LN2) > dev_s:
            dev_s, worst_s = abs(s - LN2), s
        values = hermitian_eigendecompose(reduced_fermion_state(rho, 3).mat).values
        for lam in values[:2]:
            if abs(lam - 0.5) > dev_l:
                dev_l, worst_l = abs(lam - 0.5), lam
    return [
        _row(2, "pure-state entropy", _num(LN2), _num(worst_s), tol, dev_s <= tol),
        _row(2, "pure-state reduced eigenvalue pair", "0.5", _num(worst_l), tol, dev_l <= tol),
    ]


def _crit_3_maximally_mixed(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    chaotic = density_from_matrix(np.eye(3, dtype=complex) / 3.0)
    e = _embedded_negativity(chaotic)
    analysis = diagonal_cubic_analysis(diagonal_distribution([1 / 3, 1 / 3, 1 / 3]))
    targets = (-2 / 3, 1 / 3, 1 / 3)
    root_dev = max(abs(r - t) for r, t in zip(analysis.roots, targets))
    return [
        _row(3, "maximally-mixed negativity", _num(1 / 3), _num(e), tol, abs(e - 1 / 3) <= tol),
        _row(
            3,
            "maximally-mixed cubic roots",
            "(-2/3, 1/3, 1/3)",
            "(" + ", ".join(f"{r:.6g}" for r in analysis.roots) + ")",
            tol,
            root_dev <= tol,
        ),
    ]


def _crit_4_embedded_golden(seed: int) -> list[ClaimRow]:
    tol = 1e-14
    rho = random_mixed(3, seed)
    dev = float(np.max(np.abs(embed(rho, 3).rho.mat - embedded_reference_d3(rho.mat))))
    return [_row(4, "embedded matrix matches hand reference", "0", _num(dev), tol, dev <= tol)]


def _crit_5_reduced_golden(seed: int) -> list[ClaimRow]:
    tol = 1e-12
    dev_mixed = 0.0
    for i in range(100):
        rho = random_mixed(3, seed + i)
        got = reduced_fermion_state(rho, 3).mat
        dev_mixed = max(dev_mixed, float(np.max(np.abs(got - reduced_reference_d3(rho.mat)))))
    dev_pure = 0.0
    for i in range(100):
        rho = density_from_pure(random_pure(3, seed + 500 + i))
        got = reduced_fermion_state(rho, 3).mat
        dev_pure = max(dev_pure, float(np.max(np.abs(got - reduced_reference_d3(rho.mat)))))
    return [
        _row(5, "reduced closed form (mixed states)", "0", _num(dev_mixed), tol, dev_mixed <= tol),
        _row(5, "reduced closed form (pure states)", "0", _num(dev_pure), tol, dev_pure <= tol),
    ]


def _crit_6_cubic_vs_full(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    maxdev = 0.0
    bad_root_counts = 0
    for i in range(1000):
        p = random_diagonal(3, seed + i)
        analysis = diagonal_cubic_analysis(p)
        full = _embedded_negativity(density_from_diagonal(p))
        maxdev = max(maxdev, abs(analysis.negativity - full))
        if sum(1 for r in analysis.roots if r < -1e-9) != 1:
            bad_root_counts += 1
    return [
        _row(6, "diagonal cubic matches full negativity", "0", _num(maxdev), tol, maxdev <= tol),
        ClaimRow(6, "single negative cubic root", "0 violations",
                 f"{bad_root_counts} violations", "exact", bad_root_counts == 0),
    ]


def _crit_7_spectrum_preserved(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    maxdev = 0.0
    for i in range(200):
        rho = random_mixed(3, seed + i)
        spec_in = hermitian_eigendecompose(rho.mat).values
        spec_out = hermitian_eigendecompose(embed(rho, 3).rho.mat).values
        dev = max(
            float(np.max(np.abs(spec_out[:3] - spec_in))),
            float(np.max(np.abs(spec_out[3:]))),
        )
        maxdev = max(maxdev, dev)
    return [_row(7, "embedding preserves spectrum", "0", _num(maxdev), tol, maxdev <= tol)]


def _crit_8_unitary_invariance(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    maxdev = 0.0
    for i in range(100):
        rho = random_mixed(3, seed + i)
        u = random_unitary(3, seed + 500 + i)
        rotated = density_from_matrix(u @ rho.mat @ u.conj().T)
        maxdev = max(maxdev, abs(_embedded_negativity(rotated) - _embedded_negativity(rho)))
    return [_row(8, "negativity invariant under basis rotation", "0", _num(maxdev), tol, maxdev <= tol)]


def _crit_9_range(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    values = []
    for i in range(1000):
        values.append(_embedded_negativity(random_mixed(3, seed + i)))
    lo, hi = min(values), max(values)
    return [
        _row(9, "negativity lower bound (mixed states)", ">= 1/3", _num(lo), tol, lo >= 1 / 3 - tol),
        _row(9, "negativity upper bound (mixed states)", "<= 1/2", _num(hi), tol, hi <= 0.5 + tol),
        _row(9, "always entangled", "> 0.001", _num(lo), 1e-3, lo > 1e-3),
    ]


def _crit_10_convexity(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    max_margin = -math.inf
    for i in range(100):
        parts = [embed(random_mixed(3, seed + 10 * i + k), 3).rho for k in range(3)]
        weights = random_diagonal(3, seed + 7000 + i).probs
        mixture = DensityMatrix(dim=9, mat=sum(w * s.mat for w, s in zip(weights, parts)))
        lhs = negativity(mixture, SHAPE33).negativity
        rhs = math.fsum(w * negativity(s, SHAPE33).negativity for w, s in zip(weights, parts))
        max_margin = max(max_margin, lhs - rhs)
    return [_row(10, "negativity convex on mixtures", "<= 0", _num(max_margin), tol, max_margin <= tol)]


def _crit_11_separable(seed: int) -> list[ClaimRow]:
    tol = 1e-9
    max_e = 0.0
    for i in range(100):
        a = random_mixed(3, seed + i)
        b = random_mixed(3, seed + 5000 + i)
        product = density_from_matrix(tensor_product(a.mat, b.mat))
        max_e = max(max_e, negativity(product, SHAPE33).negativity)
    return [_row(11, "product states have zero negativity", "0", _num(max_e), tol, max_e <= tol)]


def _crit_12_dual_routes(seed: int) -> list[ClaimRow]:
    tol_trace, tol_embed = 1e-14, 1e-13
    dev_trace = 0.0
    dev_embed = 0.0
    for i in range(100):
        rho = random_mixed(3, seed + i)
        state = embed(rho, 3)
        for keep in ("A", "B"):
            block = partial_trace(state.rho, SHAPE33, keep).mat
            naive = partial_trace_naive(state.rho, SHAPE33, keep).mat
            dev_trace = max(dev_trace, float(np.max(np.abs(block - naive))))
        dev_embed = max(
            dev_embed,
            float(np.max(np.abs(state.rho.mat - embed_via_isometry(rho, 3)))),
        )
    return [
        _row(12, "partial-trace implementations agree", "0", _num(dev_trace), tol_trace, dev_trace <= tol_trace),
        _row(12, "embedding implementations agree", "0", _num(dev_embed), tol_embed, dev_embed <= tol_embed),
    ]


def _crit_13_sweep_deterministic(seed: int) -> list[ClaimRow]:
    first = sweep_csv(0.05)
    second = sweep_csv(0.05)
    same = first == second
    return [
        ClaimRow(13, "sweep output deterministic (step 0.05)", "identical bytes",
                 "identical" if same else "MISMATCH", "exact", same)
    ]


CRITERIA = {
    1: _crit_1_pure_negativity,
    2: _crit_2_pure_entropy,
    3: _crit_3_maximally_mixed,
    4: _crit_4_embedded_golden,
    5: _crit_5_reduced_golden,
    6: _crit_6_cubic_vs_full,
    7: _crit_7_spectrum_preserved,
    8: _crit_8_unitary_invariance,
    9: _crit_9_range,
    10: _crit_10_convexity,
    11: _crit_11_separable,
    12: _crit_12_dual_routes,
    13: _crit_13_sweep_deterministic,
}


def run_criterion(criterion: int, seed: int) -> list[ClaimRow]:
    """Run one criterion; sample seeds are derived from ``seed`` per criterion."""
    return CRITERIA[criterion](seed + 100_000 * criterion)


def run_all(seed: int) -> tuple[list[ClaimRow], bool]:
    rows = []
    for criterion in sorted(CRITERIA):
        rows.extend(run_criterion(criterion, seed))
    return rows, all(r.passed for r in rows)


def format_table(rows: list[ClaimRow]) -> str:
    lines = [
        f"{'#':>2}  {'claim':<42} {'target':>18} {'computed':>18} {'tol':>6}  status",
        "-" * 97,
    ]
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{r.criterion:>2}  {r.claim:<42} {r.target:>18} {r.computed:>18} {r.tol:>6}  {status}"
        )
    n_pass = sum(r.passed for r in rows)
    lines.append("-" * 97)
    lines.append(f"{n_pass}/{len(rows)} claims pass")
    return "\n".join(lines)
