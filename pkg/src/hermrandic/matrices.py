"""Hermitian-adjacency and Hermitian-Randić matrices, the degree normaliser
and general Randić indices.

Matrices are dense ``complex128`` numpy arrays built by walking the edge and
arc sets, so they are Hermitian by construction.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import MixedGraph

__all__ = [
    "IsolatedVertex",
    "hermitian_adjacency",
    "hermitian_randic",
    "normalizer",
    "general_randic_index",
    "randic_minus_one",
]


class IsolatedVertex(ValueError):
    pass


def _fill(g: MixedGraph, weight) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=complex)
    for u, v in g.edges:
        w = weight(u, v)
        a[u, v] = w
        a[v, u] = w
    for u, v in g.arcs:
        w = weight(u, v)
        a[u, v] = 1j * w
        a[v, u] = -1j * w
    return a


def hermitian_adjacency(g: MixedGraph) -> np.ndarray:
    """1 for an edge, ``i`` at ``(u, v)`` and ``-i`` at ``(v, u)`` for an arc ``u -> v``."""
    return _fill(g, lambda u, v: 1.0)


def hermitian_randic(g: MixedGraph) -> np.ndarray:
    """Hermitian adjacency with each entry scaled by ``1/sqrt(d_u d_v)``.

    Isolated vertices give zero rows; no division by a zero degree happens
    because only existing connections are visited.
    """
    d = g.degrees
    return _fill(g, lambda u, v: 1.0 / math.sqrt(d[u] * d[v]))


def normalizer(g: MixedGraph) -> np.ndarray:
    """Diagonal ``D^{-1/2}`` of the underlying degrees."""
    for v, dv in enumerate(g.degrees):
        if dv == 0:
            raise IsolatedVertex(f"vertex {v} is isolated")
    return np.diag([1.0 / math.sqrt(dv) for dv in g.degrees])


def general_randic_index(g: MixedGraph, alpha: float) -> float:
    """Sum over unordered pairs of the underlying graph of ``(d_u d_v)**alpha``."""
    d = g.degrees
    return float(sum((d[u] * d[v]) ** alpha for u, v in g.pairs()))


def randic_minus_one(g: MixedGraph) -> float:
    d = g.degrees
    return float(sum(1.0 / (d[u] * d[v]) for u, v in g.pairs()))
