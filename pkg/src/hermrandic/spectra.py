"""Spectra, energies, numeric characteristic polynomials and determinants of
Hermitian matrices, plus the spectrum-shape predicates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._eigen import MAX_SWEEPS, ConvergenceFailure, hermitian_eigh
from .graph import MixedGraph
from .matrices import hermitian_adjacency, hermitian_randic

__all__ = [
    "ConvergenceFailure",
    "Spectrum",
    "Flatness",
    "RESIDUAL_TOL",
    "eigenvalues",
    "hr_spectrum",
    "h_spectrum",
    "energy",
    "hr_energy",
    "h_energy",
    "char_poly_numeric",
    "poly_eval",
    "determinant",
    "is_flat_spectrum",
    "spectrum_symmetric_about_zero",
]

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the worst eigenpair residual
    ``||A v - mu v||`` that the solver achieved."""

    values: tuple[float, ...]
    max_residual: float

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


def _check_hermitian(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.conj().T):
        raise ValueError("matrix is not Hermitian")
    return a


def eigenvalues(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Spectrum of Hermitian ``a``.

    Raises :class:`ConvergenceFailure` when the QL sweep cap is hit or an
    eigenpair misses the residual target ``1e-9 * max(1, ||a||_F)``.
    """
    a = _check_hermitian(a)
    if a.shape[0] == 0:
        return Spectrum((), 0.0)
    vals, vecs = hermitian_eigh(a, max_sweeps)
    residuals = np.linalg.norm(a @ vecs - vecs * vals, axis=0)
    worst = float(residuals.max())
    target = RESIDUAL_TOL * max(1.0, float(np.linalg.norm(a)))
    if worst > target:
        raise ConvergenceFailure(
            f"eigenpair residual {worst:.3e} exceeds {target:.3e}", cap=max_sweeps, residual=worst
        )
    return Spectrum(tuple(float(v) for v in vals), worst)


def hr_spectrum(g: MixedGraph) -> Spectrum:
    return eigenvalues(hermitian_randic(g))


def h_spectrum(g: MixedGraph) -> Spectrum:
    return eigenvalues(hermitian_adjacency(g))


def energy(spectrum: Spectrum) -> float:
    return float(sum(abs(mu) for mu in spectrum.values))


def hr_energy(g: MixedGraph) -> float:
    """Hermitian-Randić energy; exactly 0.0 for an edgeless graph."""
    if g.is_edgeless():
        return 0.0
    return energy(hr_spectrum(g))


def h_energy(g: MixedGraph) -> float:
    if g.is_edgeless():
        return 0.0
    return energy(h_spectrum(g))


def char_poly_numeric(a: np.ndarray) -> tuple[float, ...]:
    """Coefficients ``(a_1, ..., a_n)`` of ``det(xI - a)`` by the
    Faddeev-LeVerrier trace recursion.

    The recursion runs in complex arithmetic; for Hermitian input the
    coefficients are real and the real parts are returned.
    """
    a = _check_hermitian(a)
    n = a.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    coeffs = []
    m = np.zeros_like(a)
    c = 1.0 + 0j
    eye = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        m = a @ m + c * eye
        c = -np.trace(a @ m) / k
        coeffs.append(c)
    return tuple(float(x.real) for x in coeffs)


def poly_eval(coeffs, x: float) -> float:
    """Evaluate ``x**n + a_1 x**(n-1) + ... + a_n`` by Horner's rule."""
    acc = 1.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def determinant(a: np.ndarray) -> float:
    """``(-1)**n * a_n`` of the numeric characteristic polynomial."""
    coeffs = char_poly_numeric(a)
    return (-1) ** len(coeffs) * coeffs[-1]


@dataclass(frozen=True)
class Flatness:
    flat: bool
    c: float | None


def is_flat_spectrum(a: np.ndarray, tol: float = 1e-7) -> Flatness:
    """Whether ``a @ a`` equals ``c * I`` entrywise within ``tol``, with
    ``c = trace(a @ a) / n``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _check_hermitian(a)
    n = a.shape[0]
    sq = a @ a
    c = float(np.trace(sq).real) / n
    dev = float(np.max(np.abs(sq - c * np.eye(n))))
    return Flatness(True, c) if dev <= tol else Flatness(False, None)


def spectrum_symmetric_about_zero(spectrum: Spectrum, tol: float = 1e-8) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    v = spectrum.values
    return all(abs(v[i] + v[-1 - i]) <= tol for i in range(len(v)))
