"""Run every checkable identity, bound and invariance property on graphs.

Each check yields a :class:`Check` with status ``pass``, ``fail`` or
``skip`` (hypothesis not met, or the graph is too large for enumeration).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bounds import IDENTITY_TOL, check_identity_theorems, evaluate_bounds
from .elementary import DEFAULT_CAP, charpoly_exact, det_exact, is_positive_mixed
from .graph import Kind, MixedGraph, cut_edges, reorient, reverse_at_vertex, structure, underlying
from .io import serialize
from .matrices import hermitian_randic, randic_minus_one
from .spectra import char_poly_numeric, hr_energy, hr_spectrum, spectrum_symmetric_about_zero

__all__ = ["Check", "GraphVerification", "verify_graph", "verify_graphs"]

# bounds whose stated equality condition is necessary as well as sufficient
_IFF_EQUALITY = {"thm3.5", "cor3.6", "lemma3.7", "thm3.8"}


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class GraphVerification:
    graph: str
    checks: list[Check] = field(default_factory=list)

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]


def _same_spectrum(a, b) -> float:
    return max((abs(x - y) for x, y in zip(a.values, b.values)), default=0.0)


def _flag(name: str, ok: bool | None, detail: str = "") -> Check:
    if ok is None:
        return Check(name, "skip", detail)
    return Check(name, "pass" if ok else "fail", detail)


def verify_graph(g: MixedGraph, cap: int = DEFAULT_CAP) -> GraphVerification:
    out = GraphVerification(serialize(g))
    add = out.checks.append
    info = structure(g)
    spec = hr_spectrum(g)
    mu = spec.values
    r1 = randic_minus_one(g)
    small = g.n <= cap

    trace_err = max(abs(sum(mu)), abs(sum(x * x for x in mu) - 2 * r1))
    add(_flag("spectrum.trace_identities", trace_err <= 1e-9, f"max error {trace_err:.2e}"))

    exact = charpoly_exact(g, cap) if small else None
    if small:
        numeric = char_poly_numeric(hermitian_randic(g))
        err = max(abs(float(a) - b) for a, b in zip(exact, numeric))
        add(_flag("thm2.2.exact_vs_numeric", err <= IDENTITY_TOL, f"max coefficient gap {err:.2e}"))
    else:
        add(Check("thm2.2.exact_vs_numeric", "skip", f"n > {cap}"))

    ident = check_identity_theorems(g)
    add(_flag("thm3.2.det_ratio", ident["det_ratio_ok"]))
    if small:
        lhs = det_exact(g, cap) * math.prod(g.degrees)
        rhs = det_exact(g, cap, weighted=False)
        ok = (lhs == 0 and rhs == 0) if info.has_isolated else lhs == rhs
        add(_flag("thm3.2.det_ratio_exact", ok, f"{lhs} vs {rhs}"))
    add(_flag("thm3.3.regular_energy", ident["regular_energy_ok"]))
    add(_flag("thm3.4.flat_iff_equal_moduli", ident["flat_iff_equal_moduli_ok"]))
    add(_flag("lemma3.1.additivity", ident["component_additivity_ok"]))
    e = hr_energy(g)
    add(_flag("lemma3.1.zero_energy", (e == 0.0) == g.is_edgeless(), f"energy {e!r}"))

    if info.is_bipartite:
        ok = spectrum_symmetric_about_zero(spec, IDENTITY_TOL)
        if exact is not None:
            ok = ok and all(exact[k] == 0 for k in range(0, g.n, 2))  # a_1, a_3, ...
        add(_flag("cor2.3.bipartite_symmetry", ok))
    else:
        add(Check("cor2.3.bipartite_symmetry", "skip", "not bipartite"))

    if is_positive_mixed(g):
        ok = ident["positive_spectrum_ok"]
        if small:
            ok = ok and exact == charpoly_exact(underlying(g), cap)
        add(_flag("thm2.4.positive_spectrum", ok))
    else:
        add(Check("thm2.4.positive_spectrum", "skip", "not positive"))

    report = evaluate_bounds(g)
    for b in report.entries:
        name = f"bound.{b.name}.{b.side}"
        if not b.applicable:
            add(Check(name, "skip", "not applicable"))
            continue
        ok = b.holds and (not b.equality_predicted or b.equality_attained)
        if b.name in _IFF_EQUALITY:
            ok = ok and b.equality_attained == b.equality_predicted
        add(_flag(name, ok, f"{b.quantity} {b.value!r} vs bound {b.bound_value!r}"))

    worst = 0.0
    bridges = cut_edges(g)
    for ref in bridges:
        for mode in Kind:
            worst = max(worst, _same_spectrum(spec, hr_spectrum(reorient(g, ref.pair, mode))))
    add(_flag("thm4.1.cut_edge_invariance", worst <= IDENTITY_TOL if bridges else None,
              f"{len(bridges)} cut-edges, max gap {worst:.2e}"))

    if info.is_forest:
        worst = max(
            (_same_spectrum(spec, hr_spectrum(reverse_at_vertex(g, v))) for v in range(g.n)),
            default=0.0,
        )
        add(_flag("cor4.2.vertex_reversal", worst <= IDENTITY_TOL, f"max gap {worst:.2e}"))
        gap = abs(e - hr_energy(underlying(g)))
        add(_flag("cor4.3.tree_energy", gap <= IDENTITY_TOL, f"gap {gap:.2e}"))
    else:
        add(Check("cor4.2.vertex_reversal", "skip", "not a forest"))
        add(Check("cor4.3.tree_energy", "skip", "not a forest"))
    return out


def verify_graphs(graphs, cap: int = DEFAULT_CAP) -> list[GraphVerification]:
    return [verify_graph(g, cap) for g in graphs]
