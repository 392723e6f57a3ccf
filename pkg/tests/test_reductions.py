"""Partial trace (block and naive routes) and partial transpose."""

import numpy as np
import pytest

from wedgemap.embedding import embed
from wedgemap.errors import ShapeMismatch
from wedgemap.linalg import tensor_product
from wedgemap.reductions import (
    BipartiteShape,
    partial_trace,
    partial_trace_naive,
    partial_transpose,
)
from wedgemap.states import (
    density_from_diagonal,
    density_from_matrix,
    diagonal_distribution,
    random_mixed,
    random_unitary,
)
from wedgemap.verify import reduced_reference_d3


def pt_reference_d3(m):
    """Hand-written B-side partial transpose of the embedded 9x9 state."""
    r = np.asarray(m, dtype=complex)
    z = 0.0
    rows = [
        [z, z, z, z, -r[0, 0], -r[1, 0], z, -r[0, 1], -r[1, 1]],
        [z, r[0, 0], r[1, 0], z, z, z, z, -r[0, 2], -r[1, 2]],
        [z, r[0, 1], r[1, 1], z, r[0, 2], r[1, 2], z, z, z],
        [z, z, z, r[0, 0], z, -r[2, 0], r[0, 1], z, -r[2, 1]],
        [-r[0, 0], z, r[2, 0], z, z, z, r[0, 2], z, -r[2, 2]],
        [-r[0, 1], z, r[2, 1], -r[0, 2], z, r[2, 2], z, z, z],
        [z, z, z, r[1, 0], r[2, 0], z, r[1, 1], r[2, 1], z],
        [-r[1, 0], -r[2, 0], z, z, z, z, r[1, 2], r[2, 2], z],
        [-r[1, 1], -r[2, 1], z, -r[1, 2], -r[2, 2], z, z, z, z],
    ]
    return 0.5 * np.array(rows, dtype=complex)


def pt_reference_diagonal(p1, p2, p3):
    """Hand-written B-side partial transpose for the embedded diag(p1,p2,p3)."""
    z = 0.0
    rows = [
        [z, z, z, z, -p1, z, z, z, -p2],
        [z, p1, z, z, z, z, z, z, z],
        [z, z, p2, z, z, z, z, z, z],
        [z, z, z, p1, z, z, z, z, z],
        [-p1, z, z, z, z, z, z, z, -p3],
        [z, z, z, z, z, p3, z, z, z],
        [z, z, z, z, z, z, p2, z, z],
        [z, z, z, z, z, z, z, p3, z],
        [-p2, z, z, z, -p3, z, z, z, z],
    ]
    return 0.5 * np.array(rows, dtype=complex)


def product_state(seed, da=3, db=3):
    a = random_mixed(da, seed)
    b = random_mixed(db, seed + 1000)
    return a, b, density_from_matrix(tensor_product(a.mat, b.mat))


@pytest.mark.parametrize("da,db", [(2, 3), (3, 2), (3, 3)])
def test_partial_trace_factorizes_products(da, db):
    a, b, prod = product_state(5, da, db)
    shape = BipartiteShape(da, db)
    assert np.max(np.abs(partial_trace(prod, shape, "A").mat - a.mat)) <= 1e-12
    assert np.max(np.abs(partial_trace(prod, shape, "B").mat - b.mat)) <= 1e-12


def test_partial_trace_of_embedded_state():
    rho = random_mixed(3, 21)
    state = embed(rho, 3)
    reduced = partial_trace(state.rho, (3, 3), keep="B").mat
    assert np.max(np.abs(reduced - reduced_reference_d3(rho.mat))) <= 1e-12


def test_partial_trace_bell_marginals():
    vec = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2)
    bell = density_from_matrix(np.outer(vec, vec))
    for keep in ("A", "B"):
        out = partial_trace(bell, (2, 2), keep).mat
        assert np.max(np.abs(out - np.eye(2) / 2)) <= 1e-12


@pytest.mark.parametrize("da,db", [(2, 3), (3, 2), (3, 3)])
@pytest.mark.parametrize("keep", ["A", "B"])
def test_partial_trace_block_equals_naive(da, db, keep):
    for seed in range(20):
        rho = random_mixed(da * db, seed)
        block = partial_trace(rho, (da, db), keep).mat
        naive = partial_trace_naive(rho, (da, db), keep).mat
        assert np.max(np.abs(block - naive)) <= 1e-14


def test_partial_trace_preserves_trace():
    rho = random_mixed(6, 3)
    for keep in ("A", "B"):
        out = partial_trace(rho, (2, 3), keep).mat
        assert np.trace(out).real == pytest.approx(1.0, abs=1e-12)


def test_partial_trace_unitary_covariance_on_traced_factor():
    rho = random_mixed(9, 14)
    u = random_unitary(3, 15)
    lifted = tensor_product(np.eye(3), u)
    rotated = density_from_matrix(lifted @ rho.mat @ lifted.conj().T)
    before = partial_trace(rho, (3, 3), "A").mat
    after = partial_trace(rotated, (3, 3), "A").mat
    assert np.max(np.abs(before - after)) <= 1e-10


def test_partial_trace_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        partial_trace(random_mixed(6, 0), (2, 2), "A")
    with pytest.raises(ValueError):
        partial_trace(random_mixed(6, 0), (2, 3), "C")


def test_partial_transpose_embedded_matches_reference():
    for seed in range(20):
        rho = random_mixed(3, seed + 30)
        pt = partial_transpose(embed(rho, 3).rho, (3, 3), which="B")
        assert np.max(np.abs(pt - pt_reference_d3(rho.mat))) <= 1e-15


def test_partial_transpose_diagonal_matches_reference():
    p = (0.6, 0.3, 0.1)
    rho = density_from_diagonal(diagonal_distribution(p))
    pt = partial_transpose(embed(rho, 3).rho, (3, 3), which="B")
    assert np.max(np.abs(pt - pt_reference_diagonal(*p))) <= 1e-15


def test_partial_transpose_product_state():
    a, b, prod = product_state(8)
    pt = partial_transpose(prod, (3, 3), which="B")
    assert np.max(np.abs(pt - tensor_product(a.mat, b.mat.T))) <= 1e-14
    assert np.linalg.eigvalsh(pt).min() >= -1e-9
    pt_a = partial_transpose(prod, (3, 3), which="A")
    assert np.max(np.abs(pt_a - tensor_product(a.mat.T, b.mat))) <= 1e-14


def test_partial_transpose_involution_exact():
    rho = random_mixed(6, 9)
    for which, shape in (("B", (2, 3)), ("A", (2, 3))):
        once = partial_transpose(rho, shape, which)
        twice = partial_transpose(once, shape, which)
        assert np.array_equal(twice, rho.mat)


def test_partial_transpose_preserves_trace_and_hermiticity():
    rho = random_mixed(9, 10)
    pt = partial_transpose(rho, (3, 3), which="B")
    assert np.trace(pt).real == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(pt - pt.conj().T)) <= 1e-12


def test_separable_mixtures_pass_ppt():
    rng_seeds = range(5)
    mats = []
    weights = [0.5, 0.3, 0.2]
    for seed in rng_seeds:
        parts = [product_state(100 * seed + k)[2].mat for k in range(3)]
        mats.append(sum(w * m for w, m in zip(weights, parts)))
    for m in mats:
        pt = partial_transpose(density_from_matrix(m), (3, 3), which="B")
        assert np.linalg.eigvalsh(pt).min() >= -1e-9


def test_partial_transpose_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        partial_transpose(random_mixed(6, 2), (3, 3), which="B")
