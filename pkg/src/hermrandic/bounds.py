"""Energy bounds and spectral identities for the Hermitian-Randić matrix,
evaluated on a concrete graph.

Every bound is reported, applicable or not, so a report has a fixed schema.
``equality_predicted`` records whether the graph meets the stated equality
condition of that bound.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .elementary import is_positive_mixed
from .graph import MixedGraph, induced_subgraph, structure, underlying
from .matrices import hermitian_adjacency, hermitian_randic, randic_minus_one
from .spectra import (
    determinant,
    energy,
    h_energy,
    hr_energy,
    hr_spectrum,
    is_flat_spectrum,
)

__all__ = [
    "IDENTITY_TOL",
    "EQUALITY_TOL",
    "BoundEntry",
    "BoundsReport",
    "evaluate_bounds",
    "check_identity_theorems",
    "cor312_bound",
    "thm311_bound",
]

IDENTITY_TOL = 1e-8
EQUALITY_TOL = 1e-7


@dataclass(frozen=True)
class BoundEntry:
    """One bound: ``value`` is the bounded quantity (the energy or R_{-1})."""

    name: str
    side: str  # "lower" or "upper"
    quantity: str  # "energy" or "R_minus_one"
    value: float
    bound_value: float | None
    holds: bool | None
    applicable: bool
    equality_predicted: bool
    equality_attained: bool | None = None

    @property
    def slack(self) -> float | None:
        """Distance from violation; negative means the bound fails."""
        if self.bound_value is None:
            return None
        if self.side == "lower":
            return self.value - self.bound_value
        return self.bound_value - self.value


@dataclass
class BoundsReport:
    n: int
    R_minus_one: float
    p: float
    alpha: float
    beta: float
    alpha_bip: float | None
    energy: float
    spectrum: tuple[float, ...]
    flat: bool
    c: float | None
    entries: list[BoundEntry] = field(default_factory=list)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def violations(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and not e.holds]

    def to_dict(self) -> dict:
        return asdict(self)


def thm311_bound(r_minus_one: float, n: int, alpha: float, beta: float) -> float:
    return (2.0 * r_minus_one + n * alpha * beta) / (alpha + beta)


def cor312_bound(r_minus_one: float, beta: float) -> float:
    return 2.0 * r_minus_one / beta


def _entry(name, side, quantity, value, bound, applicable, predicted, tol=IDENTITY_TOL) -> BoundEntry:
    if not applicable:
        return BoundEntry(name, side, quantity, float(value), None, None, False, False, None)
    if side == "lower":
        holds = bound <= value + tol
    else:
        holds = value <= bound + tol
    attained = abs(value - bound) <= EQUALITY_TOL
    return BoundEntry(name, side, quantity, float(value), float(bound), holds, True, predicted, attained)


def _is_perfect_matching(g: MixedGraph) -> bool:
    return all(d == 1 for d in g.degrees)


def _is_matching_plus_p3(g: MixedGraph) -> bool:
    # one vertex of degree 2, all others leaves: (n - 3) / 2 copies of K2 plus a P3
    degs = sorted(g.degrees)
    return g.n >= 3 and degs[-1] == 2 and degs[:-1] == [1] * (g.n - 1)


def _is_complete(g: MixedGraph) -> bool:
    return g.size == g.n * (g.n - 1) // 2


def evaluate_bounds(g: MixedGraph) -> BoundsReport:
    """Evaluate every energy bound and the R_{-1} bracket on ``g``."""
    n = g.n
    info = structure(g)
    rh = hermitian_randic(g)
    spec = hr_spectrum(g)
    mu = spec.values
    e = 0.0 if g.is_edgeless() else energy(spec)
    r1 = randic_minus_one(g)
    p = abs(determinant(rh))
    p2n = p ** (2.0 / n) if p > 0 else 0.0
    moduli = [abs(x) for x in mu]
    alpha = min(moduli)
    beta = max(mu[0], abs(mu[-1]))
    half = n // 2
    alpha_bip = min(moduli[:half]) if half else None
    flat = is_flat_spectrum(rh, EQUALITY_TOL)
    no_isolated = not info.has_isolated
    r = info.regular_degree

    entries = [
        _entry("thm3.5", "lower", "energy", e, math.sqrt(2 * r1 + n * (n - 1) * p2n), True, flat.flat),
        _entry("thm3.5", "upper", "energy", e, math.sqrt(2 * n * r1), True, flat.flat),
    ]
    regular = r is not None and r != 0
    entries += [
        _entry("cor3.6", "lower", "energy", e,
               math.sqrt(n / r + n * (n - 1) * p2n) if regular else None, regular, flat.flat),
        _entry("cor3.6", "upper", "energy", e, n * math.sqrt(r) / r if regular else None, regular, flat.flat),
    ]
    entries += [
        _entry("lemma3.7", "lower", "R_minus_one", r1,
               n / (2 * (n - 1)) if n > 1 else None, no_isolated, _is_complete(g)),
        _entry("lemma3.7", "upper", "R_minus_one", r1, float(n // 2), no_isolated,
               _is_perfect_matching(g) if n % 2 == 0 else _is_matching_plus_p3(g)),
    ]
    ok38 = n >= 3 and no_isolated
    lower_shape = (
        _is_complete(g)
        and abs(mu[0] + mu[-1]) <= EQUALITY_TOL
        and mu[0] > EQUALITY_TOL
        and all(abs(x) <= EQUALITY_TOL for x in mu[1:-1])
    )
    entries += [
        _entry("thm3.8", "lower", "energy", e, math.sqrt(2 * n / (n - 1)) if ok38 else None, ok38, lower_shape),
        _entry("thm3.8", "upper", "energy", e, float(n), ok38, n % 2 == 0 and _is_perfect_matching(g)),
    ]
    ok311 = alpha + beta > 0
    entries += [
        _entry("thm3.11", "lower", "energy", e, thm311_bound(r1, n, alpha, beta) if ok311 else None, ok311, flat.flat),
        _entry("cor3.12", "lower", "energy", e, cor312_bound(r1, beta) if beta > 0 else None, beta > 0, flat.flat),
    ]
    bip = info.is_connected and info.is_bipartite and alpha_bip is not None and mu[0] > 0
    entries += [
        _entry("thm3.13", "lower", "energy", e,
               2 * (r1 + half * alpha_bip * mu[0]) / (alpha_bip + mu[0]) if bip else None, bip, flat.flat),
        _entry("cor3.14", "lower", "energy", e, 2 * r1 / mu[0] if bip else None, bip, flat.flat),
    ]
    return BoundsReport(
        n=n,
        R_minus_one=r1,
        p=p,
        alpha=alpha,
        beta=beta,
        alpha_bip=alpha_bip,
        energy=e,
        spectrum=mu,
        flat=flat.flat,
        c=flat.c,
        entries=entries,
    )


def check_identity_theorems(g: MixedGraph, tol: float = IDENTITY_TOL) -> dict[str, bool | None]:
    """Check the determinant ratio, regular energy ratio, flatness
    biconditional, positive-graph spectrum and component additivity.

    ``None`` marks a check whose hypothesis ``g`` does not meet.
    """
    info = structure(g)
    rh = hermitian_randic(g)
    h = hermitian_adjacency(g)
    det_rh = determinant(rh)
    det_h = determinant(h)
    out: dict[str, bool | None] = {}

    if info.has_isolated:
        out["det_ratio_ok"] = abs(det_rh) <= tol and abs(det_h) <= tol
    else:
        scaled = det_rh * math.prod(g.degrees)
        out["det_ratio_ok"] = abs(scaled - det_h) <= tol * max(1.0, abs(det_h))

    e_rh = hr_energy(g)
    r = info.regular_degree
    if r is None:
        out["regular_energy_ok"] = None
    elif r == 0:
        out["regular_energy_ok"] = e_rh == 0.0 and h_energy(g) == 0.0
    else:
        out["regular_energy_ok"] = abs(e_rh - h_energy(g) / r) <= tol

    spec = hr_spectrum(g)
    moduli = [abs(x) for x in spec.values]
    flat = is_flat_spectrum(rh, EQUALITY_TOL).flat
    out["flat_iff_equal_moduli_ok"] = flat == (max(moduli) - min(moduli) <= EQUALITY_TOL)

    if is_positive_mixed(g):
        base = hr_spectrum(underlying(g)).values
        out["positive_spectrum_ok"] = all(abs(a - b) <= tol for a, b in zip(spec.values, base))
    else:
        out["positive_spectrum_ok"] = None

    if len(info.components) > 1:
        parts = sum(hr_energy(induced_subgraph(g, comp)) for comp in info.components)
        out["component_additivity_ok"] = abs(e_rh - parts) <= tol
    else:
        out["component_additivity_ok"] = None
    return out
