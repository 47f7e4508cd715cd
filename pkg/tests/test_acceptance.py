"""Acceptance gate: one test per criterion, at the stated tolerances.

The terminal summary (see conftest) prints a PASS/FAIL line for each.
"""

import itertools
import math
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from hermrandic.bounds import evaluate_bounds
from hermrandic.cli import main
from hermrandic.elementary import charpoly_exact, det_exact, is_positive_mixed
from hermrandic.graph import (
    Kind,
    build,
    cut_edges,
    random_corpus,
    random_mixed_bipartite,
    random_mixed_tree,
    random_orientation,
    random_positive_mixed,
    reorient,
    reverse_at_vertex,
    structure,
    underlying,
)
from hermrandic.matrices import hermitian_adjacency, hermitian_randic, randic_minus_one
from hermrandic.spectra import (
    char_poly_numeric,
    determinant,
    h_energy,
    hr_energy,
    hr_spectrum,
    is_flat_spectrum,
    spectrum_symmetric_about_zero,
)

from oracles import all_mixed_graphs, complete, cycle, numpy_spectrum, perfect_matching, petersen

K3_ORIENTED = build(3, [], [(0, 1), (1, 2), (2, 0)])
# arcs 1->2, 3->2 and edge 1-3 in 1-based labels
K3_MIXED = build(3, [(0, 2)], [(0, 1), (2, 1)])


def all_orientations(g):
    pairs = g.pairs()
    for kinds in itertools.product(list(Kind), repeat=len(pairs)):
        edges = [p for p, k in zip(pairs, kinds) if k is Kind.UNDIRECTED]
        arcs = [p if k is Kind.FORWARD else p[::-1] for p, k in zip(pairs, kinds) if k is not Kind.UNDIRECTED]
        yield build(g.n, edges, arcs)


def max_gap(a, b):
    return max(abs(x - y) for x, y in zip(a, b))


@pytest.fixture(scope="module")
def oracle_corpus():
    exhaustive = [g for n in range(1, 5) for g in all_mixed_graphs(n)]
    sampled = random_corpus(200, 5, 8, seed=31337, p_edge=[0.3, 0.5, 0.7])
    return exhaustive + sampled


def test_ac01_triangle_spectra_and_speed():
    h = math.sqrt(3) / 2
    for g, expect in ((K3_ORIENTED, (h, 0.0, -h)), (K3_MIXED, (1.0, -0.5, -0.5))):
        assert max_gap(hr_spectrum(g).values, expect) <= 1e-9
        best = math.inf
        for _ in range(50):
            t0 = time.perf_counter()
            hr_spectrum(g)
            best = min(best, time.perf_counter() - t0)
        assert best < 1e-3, f"{best * 1e3:.3f} ms"


def test_ac02_exact_and_numeric_charpoly_agree(oracle_corpus):
    t0 = time.perf_counter()
    for g in oracle_corpus:
        exact = charpoly_exact(g)
        numeric = char_poly_numeric(hermitian_randic(g))
        assert max_gap([float(c) for c in exact], numeric) <= 1e-8, g
    assert len(oracle_corpus) == 1 + 4 + 64 + 4096 + 200
    assert time.perf_counter() - t0 < 60


def test_ac03_determinant_ratio(oracle_corpus):
    checked = 0
    for g in oracle_corpus:
        if structure(g).has_isolated:
            continue
        checked += 1
        prod = math.prod(g.degrees)
        det_h = determinant(hermitian_adjacency(g))
        assert abs(determinant(hermitian_randic(g)) * prod - det_h) <= 1e-8 * max(1.0, abs(det_h)), g
        assert det_exact(g) * prod == det_exact(g, weighted=False)
    assert checked > 1000


def test_ac04_regular_energy_ratio():
    for base in (cycle(4), cycle(6), complete(4), petersen()):
        r = structure(base).regular_degree
        for seed in range(50):
            g = random_orientation(base, 0.5, seed)
            assert abs(hr_energy(g) - h_energy(g) / r) <= 1e-9, g


def test_ac05_bipartite_symmetry():
    for i in range(100):
        g = random_mixed_bipartite(2 + i % 9, 0.6, 0.5, 1000 + i)
        coeffs = charpoly_exact(g)
        assert all(c == Fraction(0) for c in coeffs[0::2])  # a_1, a_3, ...
        assert spectrum_symmetric_about_zero(hr_spectrum(g), 1e-8)
        mu = numpy_spectrum(hermitian_randic(g))
        assert np.max(np.abs(mu + mu[::-1])) <= 1e-8


def test_ac06_energy_bounds(corpus):
    for g in corpus:
        report = evaluate_bounds(g)
        for e in report.entries:
            if e.applicable:
                assert e.slack >= -1e-8, (e, g)
        if not structure(g).has_isolated:
            r1 = randic_minus_one(g)
            assert g.n / (2 * (g.n - 1)) - 1e-8 <= r1 <= g.n // 2 + 1e-8

    # lower equality on complete graphs
    for n in range(2, 7):
        lo = evaluate_bounds(complete(n)).entry("lemma3.7")
        assert abs(randic_minus_one(complete(n)) - n / (2 * (n - 1))) <= 1e-12
        assert lo.equality_predicted and lo.equality_attained
    attained = {}
    for n in (3, 4, 5, 6):
        if n <= 4:
            graphs = all_orientations(complete(n))
        else:
            graphs = (random_orientation(complete(n), 0.3 + 0.7 * (s % 2), s) for s in range(300))
        hits = 0
        for g in graphs:
            e = evaluate_bounds(g).entry("thm3.8")
            assert e.equality_predicted == e.equality_attained, g
            hits += e.equality_attained
        attained[n] = hits
    assert attained[3] > 0  # the all-oriented triangle among them
    assert evaluate_bounds(K3_ORIENTED).entry("thm3.8").equality_attained

    # upper equality on perfect matchings
    for n in (4, 6, 8):
        report = evaluate_bounds(perfect_matching(n))
        assert abs(report.energy - n) <= 1e-9
        (up,) = [x for x in report.entries if x.name == "thm3.8" and x.side == "upper"]
        assert up.equality_predicted and up.equality_attained


def test_ac07_flatness_biconditional(corpus):
    for g in (perfect_matching(4), perfect_matching(10), build(2, [], [(0, 1)]), build(4, [], [(0, 1), (3, 2)])):
        f = is_flat_spectrum(hermitian_randic(g), 1e-7)
        assert f.flat and abs(f.c - 1) <= 1e-9
    assert not is_flat_spectrum(hermitian_randic(K3_ORIENTED), 1e-7).flat
    flats = 0
    for g in corpus:
        moduli = np.abs(numpy_spectrum(hermitian_randic(g)))
        equal = moduli.max() - moduli.min() <= 1e-7
        flat = is_flat_spectrum(hermitian_randic(g), 1e-7).flat
        assert flat == equal, g
        flats += flat
    assert flats > 0


def test_ac08_cut_edge_reorientation(corpus):
    total = 0
    for g in corpus:
        base = hr_spectrum(g).values
        for ref in cut_edges(g):
            for mode in Kind:
                assert max_gap(base, hr_spectrum(reorient(g, ref.pair, mode)).values) <= 1e-8, (g, ref)
                total += 1
    assert total > 100


def test_ac09_tree_orientations():
    for t in range(50):
        n = 2 + t % 11
        shape = underlying(random_mixed_tree(n, 0.0, 500 + t))
        reference = hr_energy(shape)
        for k in range(10):
            g = random_orientation(shape, 0.7, 10 * t + k)
            spec = hr_spectrum(g).values
            assert abs(hr_energy(g) - reference) <= 1e-8
            for v in range(n):
                assert max_gap(spec, hr_spectrum(reverse_at_vertex(g, v)).values) <= 1e-8


def test_ac10_positive_graphs():
    with_arcs = 0
    for i in range(50):
        g = random_positive_mixed(4 + i % 7, 0.5, 700 + i)
        assert is_positive_mixed(g)
        with_arcs += bool(g.arcs)
        u = underlying(g)
        assert max_gap(hr_spectrum(g).values, hr_spectrum(u).values) <= 1e-8
        assert charpoly_exact(g) == charpoly_exact(u)
    assert with_arcs >= 40


def test_ac11_command_line(tmp_path, capsys):
    data = Path(__file__).resolve().parent.parent / "data"
    assert main(["energy", str(data / "k3_oriented.mg")]) == 0
    assert capsys.readouterr().out.startswith("1.7320508")
    assert main(["charpoly", str(data / "k3_oriented.mg"), "--exact"]) == 0
    assert capsys.readouterr().out == "a1 = 0, a2 = -3/4, a3 = 0\n"

    bad = tmp_path / "loop.mg"
    bad.write_text("mgraph 2\ne 0 0\n")
    assert main(["energy", str(bad)]) == 2
    assert main(["energy"]) == 1
    capsys.readouterr()

    t0 = time.perf_counter()
    code = main(["verify", "--random", "--n", "8", "--count", "200", "--seed", "7"])
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    assert code == 0
    assert out.rstrip().endswith(" 0 violations")
    assert elapsed < 120
