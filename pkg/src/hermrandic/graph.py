"""Mixed graphs: data model, structural queries, orientation transforms and
seeded random generators.

Vertices are ``0 .. n-1``.  A pair of vertices carries at most one
connection: an undirected edge ``{u, v}`` or an arc ``(u, v)`` meaning
``u -> v``.  All structural answers (degrees, components, bipartition,
cut-edges) refer to the underlying undirected graph.
"""

from __future__ import annotations

import enum
import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from ._rng import SplitMix64

__all__ = [
    "InvariantViolation",
    "LoopEdge",
    "DuplicateConnection",
    "IndexOutOfRange",
    "NotConnected",
    "Kind",
    "EdgeRef",
    "MixedGraph",
    "Structure",
    "build",
    "underlying",
    "structure",
    "cut_edges",
    "reorient",
    "reverse_at_vertex",
    "induced_subgraph",
    "disjoint_union",
    "random_mixed",
    "random_mixed_tree",
    "random_orientation",
    "random_positive_mixed",
    "random_mixed_bipartite",
    "random_corpus",
]


class InvariantViolation(ValueError):
    """A mixed graph would violate the simple-graph invariants."""


class LoopEdge(InvariantViolation):
    pass


class DuplicateConnection(InvariantViolation):
    pass


class IndexOutOfRange(InvariantViolation):
    pass


class NotConnected(ValueError):
    pass


class Kind(enum.Enum):
    """Kind of the connection on a pair ``u < v``."""

    UNDIRECTED = "undirected"
    FORWARD = "forward"  # arc u -> v
    BACKWARD = "backward"  # arc v -> u

    @classmethod
    def parse(cls, text: str) -> "Kind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown mode {text!r}; expected one of "
                + ", ".join(k.value for k in cls)
            ) from None


@dataclass(frozen=True, order=True)
class EdgeRef:
    """A connection of a graph, normalised so that ``u < v``."""

    u: int
    v: int
    kind: Kind = field(compare=False)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class MixedGraph:
    """Immutable simple mixed graph.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``; ``arcs`` holds ordered
    pairs ``(tail, head)``.  Use :func:`build` to construct one from loose
    lists; the constructor itself validates and normalises as well.
    """

    n: int
    edges: frozenset = frozenset()
    arcs: frozenset = frozenset()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvariantViolation(f"vertex count must be a positive integer, got {self.n!r}")
        seen: dict[tuple[int, int], str] = {}
        norm_edges = set()
        for e in self.edges:
            u, v = _check_pair(self.n, e, "edge")
            key = (min(u, v), max(u, v))
            _claim(seen, key, f"edge {{{u},{v}}}")
            norm_edges.add(key)
        norm_arcs = set()
        for a in self.arcs:
            u, v = _check_pair(self.n, a, "arc")
            _claim(seen, (min(u, v), max(u, v)), f"arc ({u},{v})")
            norm_arcs.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm_edges))
        object.__setattr__(self, "arcs", frozenset(norm_arcs))

    @property
    def size(self) -> int:
        return len(self.edges) + len(self.arcs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        for u, v in self.arcs:
            d[u] += 1
            d[v] += 1
        return tuple(d)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.pairs():
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def pairs(self) -> list[tuple[int, int]]:
        """All connected pairs ``(u, v)`` with ``u < v``, sorted."""
        return sorted(self.edges | {(min(a), max(a)) for a in self.arcs})

    def kind(self, u: int, v: int) -> Kind | None:
        """Kind of the ``{u, v}`` connection as seen from ``u`` towards ``v``.

        ``FORWARD`` means the arc ``u -> v`` exists regardless of whether
        ``u < v``; ``None`` means the pair is not connected.
        """
        if (min(u, v), max(u, v)) in self.edges:
            return Kind.UNDIRECTED
        if (u, v) in self.arcs:
            return Kind.FORWARD
        if (v, u) in self.arcs:
            return Kind.BACKWARD
        return None

    def connections(self) -> list[EdgeRef]:
        return [EdgeRef(u, v, self.kind(u, v)) for u, v in self.pairs()]

    def is_edgeless(self) -> bool:
        return not self.edges and not self.arcs


def _check_pair(n: int, pair: Sequence[int], what: str) -> tuple[int, int]:
    u, v = pair
    if not (0 <= u < n and 0 <= v < n):
        raise IndexOutOfRange(f"{what} ({u},{v}) has an endpoint outside [0, {n})")
    if u == v:
        raise LoopEdge(f"{what} ({u},{v}) is a loop")
    return int(u), int(v)


def _claim(seen: dict, key: tuple[int, int], label: str) -> None:
    if key in seen:
        raise DuplicateConnection(f"{label} duplicates {seen[key]} on pair {key}")
    seen[key] = label


def build(
    n: int,
    edges: Iterable[Sequence[int]] = (),
    arcs: Iterable[Sequence[int]] = (),
) -> MixedGraph:
    """Build a mixed graph on ``n`` vertices from edge and arc lists."""
    return MixedGraph(n, frozenset(tuple(e) for e in edges), frozenset(tuple(a) for a in arcs))


def underlying(g: MixedGraph) -> MixedGraph:
    return MixedGraph(g.n, frozenset(g.pairs()), frozenset())


@dataclass(frozen=True)
class Structure:
    components: tuple[tuple[int, ...], ...]
    is_tree: bool
    is_forest: bool
    bipartition: tuple[frozenset, frozenset] | None
    regular_degree: int | None
    has_isolated: bool

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None


def structure(g: MixedGraph) -> Structure:
    """Components, tree/forest flags, bipartition and regularity of ``g``."""
    color = [-1] * g.n
    components = []
    bipartite = True
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    comp.append(y)
                    queue.append(y)
                elif color[y] == color[x]:
                    bipartite = False
        components.append(tuple(sorted(comp)))
    is_forest = g.size == g.n - len(components)
    degs = set(g.degrees)
    bip = None
    if bipartite:
        bip = (
            frozenset(v for v in range(g.n) if color[v] == 0),
            frozenset(v for v in range(g.n) if color[v] == 1),
        )
    return Structure(
        components=tuple(components),
        is_tree=is_forest and len(components) == 1,
        is_forest=is_forest,
        bipartition=bip,
        regular_degree=degs.pop() if len(degs) == 1 else None,
        has_isolated=0 in g.degrees,
    )


def cut_edges(g: MixedGraph) -> list[EdgeRef]:
    """Bridges of the underlying graph via the DFS lowpoint method."""
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    bridges: list[EdgeRef] = []
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, iterator over neighbours)
        stack = [(root, -1, iter(g.neighbors[root]))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, x, iter(g.neighbors[y])))
                    advanced = True
                    break
                if y != parent:
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[x])
                if low[x] > disc[parent]:
                    u, v = min(x, parent), max(x, parent)
                    bridges.append(EdgeRef(u, v, g.kind(u, v)))
    return sorted(bridges)


def reorient(g: MixedGraph, pair: Sequence[int], mode: Kind | str) -> MixedGraph:
    """Return ``g`` with the ``{u, v}`` connection replaced by ``mode``.

    ``mode`` is read relative to the pair as given: ``FORWARD`` on
    ``(u, v)`` yields the arc ``u -> v``.
    """
    if isinstance(mode, str):
        mode = Kind.parse(mode)
    u, v = pair
    if g.kind(u, v) is None:
        raise NotConnected(f"vertices {u} and {v} are not connected")
    key = (min(u, v), max(u, v))
    edges = set(g.edges)
    arcs = set(g.arcs)
    edges.discard(key)
    arcs.discard((u, v))
    arcs.discard((v, u))
    if mode is Kind.UNDIRECTED:
        edges.add(key)
    elif mode is Kind.FORWARD:
        arcs.add((u, v))
    else:
        arcs.add((v, u))
    return MixedGraph(g.n, frozenset(edges), frozenset(arcs))


def reverse_at_vertex(g: MixedGraph, v: int) -> MixedGraph:
    """Reverse every arc incident with ``v``; undirected edges stay put."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} outside [0, {g.n})")
    arcs = frozenset((b, a) if v in (a, b) else (a, b) for a, b in g.arcs)
    return MixedGraph(g.n, g.edges, arcs)


def induced_subgraph(g: MixedGraph, vertices: Iterable[int]) -> MixedGraph:
    """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in sorted order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    arcs = [(index[u], index[v]) for u, v in g.arcs if u in index and v in index]
    return build(len(keep), edges, arcs)


def disjoint_union(*graphs: MixedGraph) -> MixedGraph:
    edges, arcs = [], []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        arcs += [(u + offset, v + offset) for u, v in g.arcs]
        offset += g.n
    return build(offset, edges, arcs)


# --------------------------------------------------------------------------
# random generators (all driven by SplitMix64, see _rng.py)


def _place(rng: SplitMix64, u: int, v: int, p_orient: float, edges: list, arcs: list) -> None:
    # one draw decides orientation; a second, only for arcs, picks direction
    if rng.random() < p_orient:
        arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    else:
        edges.append((u, v))


def _check_prob(**probs: float) -> None:
    for name, p in probs.items():
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {p}")


def random_mixed(n: int, p_edge: float, p_orient: float, seed: int) -> MixedGraph:
    """Each pair ``u < v`` (lexicographic order) is kept with ``p_edge`` and
    then oriented with ``p_orient``, direction uniform."""
    _check_prob(p_edge=p_edge, p_orient=p_orient)
    rng = SplitMix64(seed)
    edges: list = []
    arcs: list = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                _place(rng, u, v, p_orient, edges, arcs)
    return build(n, edges, arcs)


def _prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    out = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        out.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    out.append((u, v))
    return out


def random_mixed_tree(n: int, p_orient: float, seed: int) -> MixedGraph:
    """Uniform labelled tree (Prüfer decode), then each edge oriented in
    sorted order with probability ``p_orient``."""
    _check_prob(p_orient=p_orient)
    if n < 1:
        raise InvariantViolation("a tree needs at least one vertex")
    rng = SplitMix64(seed)
    if n == 1:
        return build(1)
    if n == 2:
        tree = [(0, 1)]
    else:
        tree = _prufer_decode([rng.below(n) for _ in range(n - 2)], n)
    edges: list = []
    arcs: list = []
    for u, v in sorted(tree):
        _place(rng, u, v, p_orient, edges, arcs)
    return build(n, edges, arcs)


def random_orientation(g: MixedGraph, p_orient: float, seed: int) -> MixedGraph:
    """Re-orient every connection of ``g`` (sorted pair order)."""
    _check_prob(p_orient=p_orient)
    rng = SplitMix64(seed)
    edges: list = []
    arcs: list = []
    for u, v in g.pairs():
        _place(rng, u, v, p_orient, edges, arcs)
    return build(g.n, edges, arcs)


def random_positive_mixed(n: int, p_edge: float, seed: int) -> MixedGraph:
    """Random mixed graph all of whose cycles are positive.

    Every vertex draws a potential in Z/4; a kept pair ``u < v`` with
    potential step ``phi(v) - phi(u)`` of 0, 1 or 3 becomes an edge, the arc
    ``u -> v`` or the arc ``v -> u``.  Pairs with step 2 are dropped, so the
    forward-minus-backward count telescopes to 0 around every cycle.
    """
    _check_prob(p_edge=p_edge)
    rng = SplitMix64(seed)
    phi = [rng.below(4) for _ in range(n)]
    edges, arcs = [], []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() >= p_edge:
                continue
            step = (phi[v] - phi[u]) % 4
            if step == 0:
                edges.append((u, v))
            elif step == 1:
                arcs.append((u, v))
            elif step == 3:
                arcs.append((v, u))
    return build(n, edges, arcs)


def random_mixed_bipartite(n: int, p_edge: float, p_orient: float, seed: int) -> MixedGraph:
    """Random sides for each vertex, then cross pairs kept with ``p_edge``."""
    _check_prob(p_edge=p_edge, p_orient=p_orient)
    rng = SplitMix64(seed)
    side = [rng.below(2) for _ in range(n)]
    edges: list = []
    arcs: list = []
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] != side[v] and rng.random() < p_edge:
                _place(rng, u, v, p_orient, edges, arcs)
    return build(n, edges, arcs)


def random_corpus(
    count: int,
    n_min: int,
    n_max: int,
    seed: int,
    p_edge: float | Sequence[float] = 0.5,
    p_orient: float = 0.5,
) -> list[MixedGraph]:
    """``count`` graphs from :func:`random_mixed`.

    A master stream seeded with ``seed`` supplies, per graph, the order
    ``n_min + below(n_max - n_min + 1)`` and then the graph's own seed.
    A sequence ``p_edge`` is cycled through by graph index.
    """
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"bad order range [{n_min}, {n_max}]")
    probs = [p_edge] if isinstance(p_edge, (int, float)) else list(p_edge)
    master = SplitMix64(seed)
    out = []
    for i in range(count):
        n = n_min + master.below(n_max - n_min + 1)
        out.append(random_mixed(n, probs[i % len(probs)], p_orient, master.next_u64()))
    return out
