# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver; mirror of ``jacobi_py``."""

import numpy as np

from libc.math cimport sqrt


def jacobi_eigh(matrix, double rel_tol, int max_sweeps):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(values, vectors, converged)`` exactly like the pure-Python
    kernel. Hermiticity of the input is the caller's responsibility.
    """
    a_arr = np.array(matrix, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = a_arr.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] a = a_arr
    cdef double complex[:, ::1] v = v_arr

    cdef Py_ssize_t i, j, k, p, q, sweep
    cdef double fro = 0.0, off, threshold
    cdef double app, aqq, r, tau, t, c, s
    cdef double complex apq, phase, sp, spc, x, y

    for i in range(n):
        for j in range(n):
            x = a[i, j]
            fro += x.real * x.real + x.imag * x.imag
    fro = sqrt(fro)
    threshold = rel_tol * fro

    cdef bint converged = _off_norm(a, n) <= threshold
    sweep = 0
    while not converged and sweep < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if r == 0.0:
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                spc = s * phase.conjugate()
                for k in range(n):
                    x = a[k, p]
                    y = a[k, q]
                    a[k, p] = c * x - spc * y
                    a[k, q] = sp * x + c * y
                for k in range(n):
                    x = a[p, k]
                    y = a[q, k]
                    a[p, k] = c * x - sp * y
                    a[q, k] = spc * x + c * y
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                for k in range(n):
                    x = v[k, p]
                    y = v[k, q]
                    v[k, p] = c * x - spc * y
                    v[k, q] = sp * x + c * y
        sweep += 1
        converged = _off_norm(a, n) <= threshold

    values = np.empty(n)
    for i in range(n):
        values[i] = a[i, i].real
    return values, v_arr, converged


cdef double _off_norm(double complex[:, ::1] a, Py_ssize_t n):
    cdef Py_ssize_t i, j
    cdef double total = 0.0
    cdef double complex x
    for i in range(n):
        for j in range(n):
            if i != j:
                x = a[i, j]
                total += x.real * x.real + x.imag * x.imag
    return sqrt(total)
