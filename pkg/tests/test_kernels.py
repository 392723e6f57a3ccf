"""Kernel-level checks: both Jacobi backends against LAPACK and each other."""

import numpy as np
import pytest

from wedgemap._kernels import BACKEND, jacobi_py

try:
    from wedgemap._kernels import _jacobi
except ImportError:
    _jacobi = None

KERNELS = [pytest.param(jacobi_py.jacobi_eigh, id="python")]
if _jacobi is not None:
    KERNELS.append(pytest.param(_jacobi.jacobi_eigh, id="cython"))


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (g + g.conj().T) / 2


@pytest.mark.parametrize("kernel", KERNELS)
@pytest.mark.parametrize("n", [1, 2, 3, 5, 9, 16])
def test_matches_lapack(kernel, n):
    h = random_hermitian(n, 100 + n)
    values, vectors, converged = kernel(h, 1e-12, 100)
    assert converged
    assert np.max(np.abs(np.sort(values) - np.linalg.eigvalsh(h))) < 1e-10


@pytest.mark.parametrize("kernel", KERNELS)
@pytest.mark.parametrize("n", [2, 3, 9])
def test_reconstruction_and_orthonormality(kernel, n):
    h = random_hermitian(n, 200 + n)
    values, vectors, converged = kernel(h, 1e-12, 100)
    assert converged
    assert np.max(np.abs((vectors * values) @ vectors.conj().T - h)) < 1e-10
    assert np.max(np.abs(vectors.conj().T @ vectors - np.eye(n))) < 1e-12


@pytest.mark.parametrize("kernel", KERNELS)
def test_input_not_mutated(kernel):
    h = random_hermitian(4, 5)
    copy = h.copy()
    kernel(h, 1e-12, 100)
    assert np.array_equal(h, copy)


@pytest.mark.parametrize("kernel", KERNELS)
def test_diagonal_input_converges_immediately(kernel):
    values, vectors, converged = kernel(np.diag([3.0, 1.0, 2.0]).astype(complex), 1e-12, 0)
    assert converged
    assert np.allclose(sorted(values), [1, 2, 3])


@pytest.mark.parametrize("kernel", KERNELS)
def test_sweep_budget_exhaustion_reported(kernel):
    h = random_hermitian(4, 6)
    _, _, converged = kernel(h, 1e-12, 0)
    assert not converged


@pytest.mark.skipif(_jacobi is None, reason="compiled kernel not built")
def test_backends_agree():
    for n in (2, 3, 9):
        h = random_hermitian(n, 300 + n)
        w_py, _, ok_py = jacobi_py.jacobi_eigh(h, 1e-12, 100)
        w_cy, _, ok_cy = _jacobi.jacobi_eigh(h, 1e-12, 100)
        assert ok_py and ok_cy
        assert np.max(np.abs(np.sort(w_py) - np.sort(w_cy))) < 1e-12


def test_backend_selection():
    assert BACKEND in ("cython", "python")
    if _jacobi is not None:
        assert BACKEND == "cython"
