from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfkirby.algebra import (CycloNumber, cyclotomic_polynomial, euler_phi, format_complex,
                               inertia, zeta_pow)

MODULI = [1, 2, 3, 4, 5, 6, 8, 9, 12]

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def cyclo(draw, modulus=None):
    n = modulus if modulus is not None else draw(st.sampled_from(MODULI))
    coeffs = draw(st.lists(fractions, min_size=0, max_size=n + 2))
    return CycloNumber(n, coeffs)


@st.composite
def cyclo_triple(draw):
    n = draw(st.sampled_from(MODULI))
    return draw(cyclo(n)), draw(cyclo(n)), draw(cyclo(n))


@pytest.mark.parametrize("n,poly", [
    (1, [-1, 1]), (2, [1, 1]), (3, [1, 1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1]),
    (8, [1, 0, 0, 0, 1]), (12, [1, 0, -1, 0, 1]),
])
def test_cyclotomic_polynomials(n, poly):
    assert cyclotomic_polynomial(n) == poly


@pytest.mark.parametrize("n", range(1, 40))
def test_phi_matches_degree(n):
    assert euler_phi(n) == len(cyclotomic_polynomial(n)) - 1


@pytest.mark.parametrize("n", MODULI)
def test_zeta_powers_are_roots_of_unity(n):
    z = zeta_pow(n, 1)
    assert z ** n == 1
    for k in range(-2 * n, 2 * n):
        assert zeta_pow(n, k) == zeta_pow(n, k % n)
        assert abs(zeta_pow(n, k).to_complex() - cmath.exp(2j * cmath.pi * k / n)) < 1e-12


def test_canonical_form_reduces_high_powers():
    # zeta_6^2 = zeta_6 - 1 in Q(zeta_6)
    assert CycloNumber(6, [0, 0, 1]) == CycloNumber(6, [-1, 1])
    assert CycloNumber(6, [1, 0, 2]).coeffs == (Fraction(-1), Fraction(2))


@settings(max_examples=150, deadline=None)
@given(cyclo_triple())
def test_ring_axioms(xyz):
    x, y, w = xyz
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + w == x + (y + w)
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    assert x - x == 0
    assert x * 1 == x


@settings(max_examples=150, deadline=None)
@given(cyclo())
def test_inverse_and_conjugate(x):
    if not x.is_zero():
        assert x * x.inv() == 1
        assert (1 / x) * x == 1
    assert x.conj().conj() == x
    assert abs(x.conj().to_complex() - x.to_complex().conjugate()) < 1e-6


@settings(max_examples=100, deadline=None)
@given(cyclo_triple())
def test_float_image_is_a_homomorphism(xyz):
    x, y, _ = xyz
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-6
    assert abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-9


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        CycloNumber(6, [1]) + CycloNumber(4, [1])


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycloNumber(6, [1, 1]) / CycloNumber(6, [])
    with pytest.raises(ZeroDivisionError):
        CycloNumber(6, [1]) / 0


def test_rational_queries():
    x = CycloNumber(6, [Fraction(1, 2)])
    assert x.is_rational() and x.as_fraction() == Fraction(1, 2)
    assert not CycloNumber(6, [0, 1]).is_rational()


@pytest.mark.parametrize("z,text", [
    (complex(0, 3 ** 0.5), "0+1.732050808i"),
    (complex(1.5, -0.25), "1.500000000-0.250000000i"),
    (complex(0, 0), "0+0i"),
    (complex(-2, 1e-13), "-2.000000000+0i"),
])
def test_format_complex(z, text):
    assert format_complex(z) == text


def _eigen_signs(m):
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    return (int((ev > 1e-8).sum()), int((ev < -1e-8).sum()), int((abs(ev) <= 1e-8).sum()))


@st.composite
def symmetric(draw, max_size=6, min_size=1):
    k = draw(st.integers(min_size, max_size))
    m = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            m[i][j] = m[j][i] = draw(st.integers(-5, 5))
    return m


@settings(max_examples=200, deadline=None)
@given(symmetric())
def test_inertia_matches_eigenvalue_signs(m):
    assert inertia(m).as_tuple() == _eigen_signs(m)


@settings(max_examples=100, deadline=None)
@given(symmetric(4), st.lists(st.integers(-3, 3), min_size=16, max_size=16))
def test_inertia_is_a_congruence_invariant(m, flat):
    k = len(m)
    if k == 0:
        return
    p = np.array(flat[:k * k]).reshape(k, k)
    if round(np.linalg.det(p)) == 0:
        return
    q = (p.T @ np.array(m) @ p).tolist()
    assert inertia(q) == inertia(m)


@pytest.mark.parametrize("m,expected", [
    ([[-1]], (0, 1, 0)),
    ([[1]], (1, 0, 0)),
    ([[0]], (0, 0, 1)),
    ([[0, 1], [1, 0]], (1, 1, 0)),
    ([[0, 0], [0, 0]], (0, 0, 2)),
    ([], (0, 0, 0)),
])
def test_inertia_small_cases(m, expected):
    assert inertia(m).as_tuple() == expected


def test_inertia_rejects_asymmetric():
    with pytest.raises(ValueError):
        inertia([[1, 2], [3, 4]])
