import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hermrandic._eigen import ConvergenceFailure, hermitian_eigh, symmetric_eigh
from hermrandic.elementary import is_positive_mixed
from hermrandic.graph import build, disjoint_union, structure, underlying
from hermrandic.matrices import hermitian_adjacency, hermitian_randic, randic_minus_one
from hermrandic.spectra import (
    Spectrum,
    char_poly_numeric,
    determinant,
    eigenvalues,
    h_energy,
    hr_energy,
    hr_spectrum,
    is_flat_spectrum,
    poly_eval,
    spectrum_symmetric_about_zero,
)

from oracles import complete, cycle, numpy_spectrum, perfect_matching
from strategies import mixed_graphs

K3_ORIENTED = build(3, [], [(0, 1), (1, 2), (2, 0)])
K3_MIXED = build(3, [(0, 2)], [(0, 1), (2, 1)])
P3 = build(3, [(0, 1), (1, 2)])
SQ3 = math.sqrt(3) / 2

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def test_remark_spectra():
    np.testing.assert_allclose(hr_spectrum(K3_ORIENTED).values, (SQ3, 0, -SQ3), atol=1e-12)
    np.testing.assert_allclose(hr_spectrum(K3_MIXED).values, (1, -0.5, -0.5), atol=1e-12)


def test_remark_matrix_given_directly():
    # (r_h)_12 = (r_h)_32 = i/2, (r_h)_13 = 1/2 in 1-based indices
    a = np.array([[0, 0.5j, 0.5], [-0.5j, 0, -0.5j], [0.5, 0.5j, 0]])
    np.testing.assert_allclose(eigenvalues(a).values, (1, -0.5, -0.5), atol=1e-12)


def test_zero_matrix():
    s = eigenvalues(np.zeros((5, 5), dtype=complex))
    assert s.values == (0.0,) * 5
    assert s.max_residual == 0.0


def test_rejects_non_hermitian():
    with pytest.raises(ValueError):
        eigenvalues(np.array([[0, 1j], [1j, 0]]))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(
    arrays(float, (n, n), elements=finite), arrays(float, (n, n), elements=finite))))
def test_eigenvalues_match_numpy(parts):
    re, im = parts
    a = (re + 1j * im)
    a = a + a.conj().T
    s = eigenvalues(a)
    scale = max(1.0, np.linalg.norm(a))
    assert list(s.values) == sorted(s.values, reverse=True)
    np.testing.assert_allclose(s.values, numpy_spectrum(a), atol=1e-10 * scale)
    assert s.max_residual <= 1e-9 * scale


def test_real_symmetric_solver_against_numpy():
    rng = np.random.default_rng(5)
    for m in (1, 2, 3, 7, 20, 60):
        a = rng.normal(size=(m, m))
        a = a + a.T
        w, z = symmetric_eigh(a)
        np.testing.assert_allclose(np.sort(w), np.linalg.eigvalsh(a), atol=1e-11 * np.linalg.norm(a))
        np.testing.assert_allclose(z.T @ z, np.eye(m), atol=1e-12)


def test_repeated_eigenvalues():
    # K_n: eigenvalue -1/(n-1) with multiplicity n-1
    vals = hr_spectrum(complete(7)).values
    np.testing.assert_allclose(vals, [1] + [-1 / 6] * 6, atol=1e-12)


def test_sweep_cap_raises():
    a = hermitian_randic(cycle(9))
    with pytest.raises(ConvergenceFailure) as info:
        hermitian_eigh(a, max_sweeps=0)
    assert info.value.cap == 0


def test_energies():
    assert hr_energy(build(6)) == 0.0
    assert hr_energy(K3_ORIENTED) == pytest.approx(math.sqrt(3), abs=1e-12)
    c4 = cycle(4)
    assert h_energy(c4) == pytest.approx(4, abs=1e-12)
    assert hr_energy(c4) == pytest.approx(2, abs=1e-12)


@settings(max_examples=80, deadline=None)
@given(mixed_graphs(max_n=5), mixed_graphs(max_n=5))
def test_energy_additive_over_union(a, b):
    assert hr_energy(disjoint_union(a, b)) == pytest.approx(hr_energy(a) + hr_energy(b), abs=1e-9)


@settings(max_examples=150, deadline=None)
@given(mixed_graphs(max_n=8))
def test_zero_energy_iff_edgeless(g):
    assert (hr_energy(g) == 0.0) == g.is_edgeless()


def test_char_poly_examples():
    assert char_poly_numeric(hermitian_randic(P3)) == pytest.approx((0, -1, 0), abs=1e-14)
    assert char_poly_numeric(hermitian_randic(K3_ORIENTED)) == pytest.approx((0, -0.75, 0), abs=1e-14)
    assert char_poly_numeric(np.zeros((1, 1))) == (0.0,)


@settings(max_examples=150, deadline=None)
@given(mixed_graphs(max_n=9))
def test_char_poly_against_numpy_poly(g):
    r = hermitian_randic(g)
    ours = char_poly_numeric(r)
    ref = np.poly(numpy_spectrum(r))[1:]
    np.testing.assert_allclose(ours, ref.real, atol=1e-9)
    assert abs(ours[0]) <= 1e-12  # zero trace


@settings(max_examples=150, deadline=None)
@given(mixed_graphs(max_n=9))
def test_spectrum_invariants(g):
    r = hermitian_randic(g)
    s = eigenvalues(r)
    assert len(s) == g.n
    assert abs(sum(s.values)) <= 1e-9
    assert abs(sum(x * x for x in s.values) - 2 * randic_minus_one(g)) <= 1e-9
    coeffs = char_poly_numeric(r)
    bound = 1e-7 * max(1.0, np.linalg.norm(r)) ** g.n
    assert all(abs(poly_eval(coeffs, mu)) <= bound for mu in s.values)


def test_determinant_examples():
    p2 = build(2, [(0, 1)])
    assert determinant(hermitian_randic(p2)) == pytest.approx(-1)
    assert determinant(hermitian_adjacency(p2)) == pytest.approx(-1)
    iso = build(4, [(0, 1), (1, 2)], [(2, 0)])
    assert determinant(hermitian_randic(iso)) == 0.0
    assert determinant(hermitian_adjacency(iso)) == 0.0
    assert determinant(hermitian_randic(K3_ORIENTED)) == pytest.approx(0, abs=1e-15)


@settings(max_examples=150, deadline=None)
@given(mixed_graphs(max_n=8))
def test_determinant_against_numpy(g):
    h = hermitian_adjacency(g)
    assert determinant(h) == pytest.approx(np.linalg.det(h).real, abs=1e-8)


def test_flatness_examples():
    f = is_flat_spectrum(hermitian_randic(build(2, [(0, 1)])), 1e-9)
    assert f.flat and f.c == pytest.approx(1)
    assert not is_flat_spectrum(hermitian_randic(K3_ORIENTED), 1e-9).flat
    f = is_flat_spectrum(hermitian_randic(perfect_matching(8)), 1e-9)
    assert f.flat and f.c == pytest.approx(1)
    with pytest.raises(ValueError):
        is_flat_spectrum(np.eye(2), 0)


def test_symmetry_predicate():
    assert spectrum_symmetric_about_zero(hr_spectrum(P3), 1e-9)
    assert not spectrum_symmetric_about_zero(hr_spectrum(K3_MIXED), 1e-9)
    assert spectrum_symmetric_about_zero(hr_spectrum(build(4)), 1e-9)
    assert spectrum_symmetric_about_zero(Spectrum((1.0, 0.0, -1.0), 0.0), 1e-12)


@settings(max_examples=100, deadline=None)
@given(mixed_graphs(max_n=8))
def test_regular_energy_ratio(g):
    r = structure(g).regular_degree
    if r:
        assert hr_energy(g) == pytest.approx(h_energy(g) / r, abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(mixed_graphs(max_n=8))
def test_positive_graph_spectrum(g):
    if is_positive_mixed(g):
        np.testing.assert_allclose(hr_spectrum(g).values, hr_spectrum(underlying(g)).values, atol=1e-8)
