"""Dense symmetric eigensolver: Householder tridiagonalisation followed by
implicit-shift QL iterations, with eigenvector accumulation.

Complex Hermitian ``A = X + iY`` is handled through the real symmetric
embedding ``[[X, -Y], [Y, X]]``, whose spectrum is that of ``A`` with every
eigenvalue doubled.  A real eigenvector ``[x; y]`` of the embedding maps to
the complex eigenvector ``x + iy`` of ``A``.
"""

from __future__ import annotations

import math

import numpy as np

MAX_SWEEPS = 64
_EPS = np.finfo(float).eps


class ConvergenceFailure(RuntimeError):
    def __init__(self, message: str, cap: int, residual: float) -> None:
        super().__init__(message)
        self.cap = cap
        self.residual = residual


def tridiagonalize(a: np.ndarray) -> tuple[list[float], list[float], np.ndarray]:
    """Return ``d, e, q`` with ``q.T @ a @ q`` tridiagonal.

    ``d`` is the diagonal, ``e[i]`` couples ``i`` and ``i + 1`` and
    ``e[-1] == 0``.
    """
    a = np.array(a, dtype=float)
    m = a.shape[0]
    q = np.eye(m)
    for k in range(m - 2):
        x = a[k + 1 :, k]
        tail = float(np.dot(x[1:], x[1:]))
        if tail == 0.0:
            continue
        alpha = math.sqrt(float(x[0]) ** 2 + tail)
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)
        a[k + 1 :, :] -= 2.0 * np.outer(v, v @ a[k + 1 :, :])
        a[:, k + 1 :] -= 2.0 * np.outer(a[:, k + 1 :] @ v, v)
        q[:, k + 1 :] -= 2.0 * np.outer(q[:, k + 1 :] @ v, v)
    d = [float(a[i, i]) for i in range(m)]
    e = [float(a[i + 1, i]) for i in range(m - 1)] + [0.0]
    return d, e, q


def tridiagonal_ql(d: list[float], e: list[float], zt: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> None:
    """Implicit QL on a symmetric tridiagonal matrix, in place.

    ``zt`` holds the accumulated transform row-wise (row ``i`` is column
    ``i`` of the eigenvector matrix); on exit ``d`` holds the eigenvalues and
    ``zt[i]`` the eigenvector for ``d[i]``.
    """
    m = len(d)
    # absolute floor so blocks far below the matrix scale still deflate
    floor = _EPS * _EPS * max((abs(x) + abs(y) for x, y in zip(d, e)), default=0.0)
    for l in range(m):
        sweeps = 0
        while True:
            k = l
            while k < m - 1:
                dd = abs(d[k]) + abs(d[k + 1])
                if abs(e[k]) <= _EPS * dd or abs(e[k]) <= floor:
                    break
                k += 1
            if k == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise ConvergenceFailure(
                    f"QL iteration for eigenvalue {l} exceeded {max_sweeps} sweeps",
                    cap=max_sweeps,
                    residual=abs(e[l]),
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[k] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = k - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[k] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                upper = zt[i + 1].copy()
                zt[i + 1] = s * zt[i] + c * upper
                zt[i] = c * zt[i] - s * upper
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[k] = 0.0


def symmetric_eigh(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (unsorted) and eigenvectors (columns) of real symmetric ``a``."""
    d, e, q = tridiagonalize(a)
    zt = np.ascontiguousarray(q.T)
    tridiagonal_ql(d, e, zt, max_sweeps)
    return np.array(d), zt.T


def hermitian_eigh(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues sorted descending and matching unit eigenvectors of Hermitian ``a``.

    After sorting the doubled spectrum of the real embedding, entries
    ``0, 2, 4, ...`` are kept.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    x, y = a.real, a.imag
    big = np.block([[x, -y], [y, x]])
    w, z = symmetric_eigh(big, max_sweeps)
    order = np.argsort(-w, kind="stable")[0::2]
    vals = w[order]
    vecs = z[:n, order] + 1j * z[n:, order]
    vecs /= np.linalg.norm(vecs, axis=0)
    return vals, vecs
