"""Exact characteristic polynomial and determinant of the Hermitian-Randić
matrix by enumerating real elementary subgraphs.

An elementary subgraph is a vertex-disjoint packing of single connections
(edge or arc, each one K2 component) and cycles of length >= 3.  Walking a
cycle multiplies the matrix entries it passes; the phase of that product is
``i**(f - b)`` where ``f``/``b`` count arcs traversed forwards/backwards.
Imaginary cycles (``f - b`` odd) cancel in the permutation expansion and are
skipped.  A subgraph ``S`` on ``k`` vertices contributes

    (-1)**(r + l) * 2**s * prod(1 / d_v for v in S)

to ``(-1)**k * a_k``, with ``r = k - c`` (``c`` components), ``l`` negative
cycles and ``s`` cycles.  All arithmetic is on :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .graph import Kind, MixedGraph

__all__ = [
    "DEFAULT_CAP",
    "TooLarge",
    "NotACycle",
    "CycleSign",
    "ElementarySubgraph",
    "cycle_sign",
    "enumerate_real_elementary",
    "charpoly_exact",
    "det_exact",
    "is_positive_mixed",
    "simple_cycles",
]

DEFAULT_CAP = 12


class TooLarge(ValueError):
    pass


class NotACycle(ValueError):
    pass


class CycleSign(enum.Enum):
    POSITIVE = 1
    NEGATIVE = -1
    IMAGINARY = 0


def _step(g: MixedGraph, u: int, v: int) -> int:
    """Phase exponent contributed by traversing ``u -> v``."""
    k = g.kind(u, v)
    if k is Kind.FORWARD:
        return 1
    if k is Kind.BACKWARD:
        return -1
    return 0


def _sign_of(phase: int) -> CycleSign:
    phase %= 4
    if phase == 0:
        return CycleSign.POSITIVE
    if phase == 2:
        return CycleSign.NEGATIVE
    return CycleSign.IMAGINARY


def cycle_sign(g: MixedGraph, cycle: Sequence[int]) -> CycleSign:
    """Classify the closed walk ``cycle[0] -> ... -> cycle[-1] -> cycle[0]``."""
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise NotACycle(f"{cyc} is not a simple cycle of length >= 3")
    phase = 0
    for u, v in zip(cyc, cyc[1:] + cyc[:1]):
        if not (0 <= u < g.n and 0 <= v < g.n) or g.kind(u, v) is None:
            raise NotACycle(f"{u} and {v} are not adjacent")
        phase += _step(g, u, v)
    return _sign_of(phase)


@dataclass(frozen=True)
class ElementarySubgraph:
    """One real elementary subgraph.

    ``pairs`` are K2 components ``(u, v)`` with ``u < v``; ``cycles`` are
    ``(vertices, sign)`` with the vertex tuple starting at its smallest
    vertex.  ``weight`` is ``prod(1 / d_v)`` over covered vertices.
    """

    pairs: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[tuple[int, ...], CycleSign], ...]
    order: int
    weight: Fraction

    @property
    def c(self) -> int:
        return len(self.pairs) + len(self.cycles)

    @property
    def r(self) -> int:
        return self.order - self.c

    @property
    def l(self) -> int:
        return sum(1 for _, sign in self.cycles if sign is CycleSign.NEGATIVE)

    @property
    def s(self) -> int:
        return len(self.cycles)

    @property
    def vertices(self) -> frozenset:
        vs = {v for p in self.pairs for v in p}
        vs.update(v for cyc, _ in self.cycles for v in cyc)
        return frozenset(vs)

    def sign(self) -> int:
        return -1 if (self.r + self.l) % 2 else 1

    def term(self, weighted: bool = True) -> Fraction:
        """``(-1)**(r + l) * 2**s * W``; with ``weighted=False`` W is 1,
        which gives the Hermitian-adjacency expansion."""
        base = self.weight if weighted else Fraction(1)
        return self.sign() * (1 << self.s) * base


def _packings(g: MixedGraph, max_order: int, exact_order: int | None) -> Iterator[ElementarySubgraph]:
    """Every real elementary subgraph of order ``<= max_order`` exactly once.

    Components are added in increasing order of their smallest vertex, and a
    cycle through its smallest vertex ``v`` is kept only in the direction
    whose second vertex is smaller than its last, so no packing repeats.
    When ``exact_order`` is set, branches that cannot reach it are pruned.
    """
    n = g.n
    adj = g.neighbors
    deg = g.degrees
    free = [deg[v] > 0 for v in range(n)]
    # suffix counts of coverable vertices, for pruning
    pairs: list[tuple[int, int]] = []
    cycles: list[tuple[tuple[int, ...], CycleSign]] = []

    def emit(covered: int, denom: int) -> ElementarySubgraph:
        return ElementarySubgraph(tuple(pairs), tuple(cycles), covered, Fraction(1, denom))

    def free_from(start: int) -> int:
        return sum(1 for v in range(start, n) if free[v])

    def cycles_from(v: int, limit: int):
        # simple paths v -> w1 -> ... -> wj over free vertices > v, closed back to v
        path = [v]
        phase = [0]

        def extend(x: int):
            for y in adj[x]:
                if y == v and len(path) >= 3 and path[1] < path[-1]:
                    total = phase[-1] + _step(g, x, v)
                    if total % 2 == 0:
                        yield tuple(path), _sign_of(total)
                elif y > v and free[y] and len(path) < limit:
                    free[y] = False
                    path.append(y)
                    phase.append(phase[-1] + _step(g, x, y))
                    yield from extend(y)
                    phase.pop()
                    path.pop()
                    free[y] = True

        yield from extend(v)

    def rec(start: int, covered: int, denom: int):
        if exact_order is None or covered == exact_order:
            yield emit(covered, denom)
        if covered >= max_order:
            return
        if exact_order is not None and covered + free_from(start) < exact_order:
            return
        room = max_order - covered
        for v in range(start, n):
            if not free[v]:
                continue
            if exact_order is not None and covered + free_from(v) < exact_order:
                return
            free[v] = False
            if room >= 2:
                for w in adj[v]:
                    if w > v and free[w]:
                        free[w] = False
                        pairs.append((v, w))
                        yield from rec(v + 1, covered + 2, denom * deg[v] * deg[w])
                        pairs.pop()
                        free[w] = True
            if room >= 3:
                for cyc, sign in list(cycles_from(v, room)):
                    for x in cyc[1:]:
                        free[x] = False
                    cycles.append((cyc, sign))
                    yield from rec(v + 1, covered + len(cyc), denom * math.prod(deg[x] for x in cyc))
                    cycles.pop()
                    for x in cyc[1:]:
                        free[x] = True
            free[v] = True

    yield from rec(0, 0, 1)


def _check_cap(g: MixedGraph, cap: int) -> None:
    if g.n > cap:
        raise TooLarge(f"order {g.n} exceeds the enumeration cap {cap}")


def enumerate_real_elementary(g: MixedGraph, k: int, cap: int = DEFAULT_CAP) -> Iterator[ElementarySubgraph]:
    """Yield every real elementary subgraph of ``g`` on exactly ``k`` vertices."""
    if not 0 <= k <= g.n:
        raise ValueError(f"order {k} outside [0, {g.n}]")
    _check_cap(g, cap)
    return _packings(g, k, k)


def charpoly_exact(g: MixedGraph, cap: int = DEFAULT_CAP, weighted: bool = True) -> tuple[Fraction, ...]:
    """Exact ``(a_1, ..., a_n)`` of ``det(xI - R_H)``.

    ``weighted=False`` drops the degree weights and yields the coefficients
    for the Hermitian-adjacency matrix instead.
    """
    _check_cap(g, cap)
    sums = [Fraction(0)] * (g.n + 1)
    for sub in _packings(g, g.n, None):
        sums[sub.order] += sub.term(weighted)
    return tuple((-1) ** k * sums[k] for k in range(1, g.n + 1))


def det_exact(g: MixedGraph, cap: int = DEFAULT_CAP, weighted: bool = True) -> Fraction:
    """Exact determinant as a sum over real spanning elementary subgraphs."""
    _check_cap(g, cap)
    return sum((sub.term(weighted) for sub in _packings(g, g.n, g.n)), Fraction(0))


def is_positive_mixed(g: MixedGraph) -> bool:
    """True iff every cycle of the underlying graph is positive.

    Equivalent to a potential ``phi: V -> Z/4`` with ``phi(y) - phi(x)``
    equal to the phase step of every connection ``x -> y``; found by BFS in
    linear time instead of listing cycles.
    """
    phi: list[int | None] = [None] * g.n
    for root in range(g.n):
        if phi[root] is not None:
            continue
        phi[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                want = (phi[x] + _step(g, x, y)) % 4
                if phi[y] is None:
                    phi[y] = want
                    queue.append(y)
                elif phi[y] != want:
                    return False
    return True


def simple_cycles(g: MixedGraph) -> Iterator[tuple[int, ...]]:
    """Every simple cycle of the underlying graph once, smallest vertex
    first and second vertex smaller than the last."""
    adj = g.neighbors
    for v in range(g.n):
        path = [v]
        on = {v}

        def extend(x):
            for y in adj[x]:
                if y == v and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif y > v and y not in on:
                    on.add(y)
                    path.append(y)
                    yield from extend(y)
                    path.pop()
                    on.discard(y)

        yield from extend(v)
