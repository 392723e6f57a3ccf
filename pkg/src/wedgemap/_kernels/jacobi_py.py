"""Pure-Python cyclic Jacobi eigensolver for Hermitian matrices.

This is the fallback twin of the compiled kernel in ``_jacobi.pyx``; both
implement the same algorithm step for step. Each rotation is a complex
Givens rotation G with

    G[p,p] = c,   G[p,q] = s*phase,
    G[q,p] = -s*conj(phase),   G[q,q] = c,

where ``phase = a[p,q] / |a[p,q]|`` and (c, s) are chosen so that
``G† A G`` annihilates the (p, q) entry. Sweeps run over all p < q in row
order until the off-diagonal Frobenius norm drops below
``rel_tol * ||A||_F``.
"""

import math

import numpy as np


def jacobi_eigh(matrix, rel_tol: float, max_sweeps: int):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(values, vectors, converged)`` with unsorted real diagonal
    values, eigenvector columns, and a convergence flag. Hermiticity of the
    input is the caller's responsibility.
    """
    arr = np.asarray(matrix, dtype=complex)
    n = arr.shape[0]
    a = [[complex(arr[i, j]) for j in range(n)] for i in range(n)]
    v = [[1.0 + 0.0j if i == j else 0.0j for j in range(n)] for i in range(n)]

    fro = math.sqrt(sum(abs(x) ** 2 for row in a for x in row))
    threshold = rel_tol * fro

    def off_norm():
        total = 0.0
        for i in range(n):
            row = a[i]
            for j in range(n):
                if i != j:
                    x = row[j]
                    total += x.real * x.real + x.imag * x.imag
        return math.sqrt(total)

    converged = off_norm() <= threshold
    sweeps = 0
    while not converged and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                tau = (a[q][q].real - a[p][p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                spc = s * phase.conjugate()
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp - spc * akq
                    a[k][q] = sp * akp + c * akq
                for k in range(n):
                    apk = a[p][k]
                    aqk = a[q][k]
                    a[p][k] = c * apk - sp * aqk
                    a[q][k] = spc * apk + c * aqk
                a[p][q] = 0.0j
                a[q][p] = 0.0j
                a[p][p] = complex(a[p][p].real, 0.0)
                a[q][q] = complex(a[q][q].real, 0.0)
                for k in range(n):
                    vkp = v[k][p]
                    vkq = v[k][q]
                    v[k][p] = c * vkp - spc * vkq
                    v[k][q] = sp * vkp + c * vkq
        sweeps += 1
        converged = off_norm() <= threshold

    values = np.array([a[i][i].real for i in range(n)])
    vectors = np.array(v, dtype=complex)
    return values, vectors, converged
