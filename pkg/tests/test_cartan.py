import itertools
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from klrc.cartan import NotAWeightError, Weight, add, cartan, height, scale, sub

from conftest import datum_and_k


def xi_symbolic(ell, k, sign, i):
    """Termwise expansion of xi with sympy symbols for the simple roots."""
    a = sympy.symbols(f"a0:{ell + 1}")
    h = sympy.Rational(i, 2)
    if sign == "+":
        expr = sum((j * a[k + j] for j in range(1, i)), sympy.Integer(0))
        expr += sum((i * a[j] for j in range(k + i, ell)), sympy.Integer(0))
        expr += h * a[ell]
    else:
        expr = sum((j * a[k - j] for j in range(1, i)), sympy.Integer(0))
        expr += sum((i * a[j] for j in range(1, k - i + 1)), sympy.Integer(0))
        expr += h * a[0]
    poly = sympy.Poly(expr, *a)
    return tuple(int(poly.coeff_monomial(s)) for s in a)


def legal(ell, k):
    for sign in "+-":
        for i in range(0, ell + 1, 2):
            if 0 <= (k + i if sign == "+" else k - i) <= ell:
                yield sign, i


def test_matrix_entries():
    C = cartan(3)
    assert C.matrix == ((2, -1, 0, 0), (-2, 2, -1, 0), (0, -1, 2, -2), (0, 0, -1, 2))
    assert C.symmetrizer == (2, 1, 1, 2)
    assert cartan(2).matrix == ((2, -1, 0), (-2, 2, -2), (0, -1, 2))


@pytest.mark.parametrize("ell", range(2, 13))
def test_symmetrizable_and_delta_radical(ell):
    C = cartan(ell)
    for i, j in itertools.product(C.nodes, repeat=2):
        assert C.d(i) * C.a(i, j) == C.d(j) * C.a(j, i)
    assert all(C.root_pairing(j, C.delta()) == 0 for j in C.nodes)
    assert all(C.bilinear(C.delta(), k) == 2 for k in C.nodes)
    assert C.bilinear(C.delta(), C.delta()) == 0


def test_form_examples():
    C = cartan(4)
    assert C.bilinear(C.simple_root(0), C.simple_root(1)) == -2
    assert C.bilinear(C.simple_root(1), C.simple_root(0)) == -2
    assert C.bilinear(C.simple_root(0), C.simple_root(0)) == 4
    with pytest.raises(TypeError):
        C.bilinear(1, 2)


@pytest.mark.parametrize("ell", range(2, 9))
def test_xi_matches_symbolic_expansion(ell):
    C = cartan(ell)
    for k in C.nodes:
        for sign, i in legal(ell, k):
            assert C.xi(k, sign, i) == xi_symbolic(ell, k, sign, i), (k, sign, i)


@pytest.mark.parametrize("ell", range(2, 9))
def test_xi_pairing_fingerprint(ell):
    C = cartan(ell)
    for k in C.nodes:
        for sign, i in legal(ell, k):
            if i == 0:
                continue
            w = Weight(k, scale(-1, C.xi(k, sign, i)))
            target = k + i if sign == "+" else k - i
            expected = [0] * (ell + 1)
            expected[target] += 1
            assert C.pairings(w) == tuple(expected)
            assert C.bilinear(C.xi(k, sign, i), C.xi(k, sign, i)) == i


def test_xi_examples():
    assert cartan(3).xi(1, "+", 2) == (0, 0, 1, 1)
    assert sub(cartan(3).delta(), cartan(3).xi(1, "+", 2)) == (1, 2, 1, 0)
    assert cartan(4).xi(2, "-", 2) == (1, 1, 0, 0, 0)
    assert cartan(5).xi(0, "+", 0) == (0,) * 6


@pytest.mark.parametrize("args", [(1, "+", 1), (1, "+", 4), (0, "-", 2), (1, "x", 2), (1, "+", -2)])
def test_xi_rejects(args):
    with pytest.raises(ValueError):
        cartan(3).xi(*args)


def test_defect_examples():
    C = cartan(2)
    assert C.defect(1, C.zero()) == 0
    assert C.defect(1, C.simple_root(1)) == 0
    assert C.defect(1, C.delta()) == 2
    for ell in range(2, 7):
        C = cartan(ell)
        for k in C.nodes:
            for m in range(3):
                assert C.defect(k, scale(m, C.delta())) == 2 * m


@given(datum_and_k(), st.lists(st.integers(0, 3), min_size=7, max_size=7))
def test_defect_is_integral_and_formula(dk, coeffs):
    C, k = dk
    beta = tuple(coeffs[: C.ell + 1]) + (0,) * max(0, C.ell + 1 - len(coeffs))
    quad = sum(b1 * C.d(i) * C.a(i, j) * b2 for i, b1 in enumerate(beta) for j, b2 in enumerate(beta))
    assert quad % 2 == 0
    assert C.defect(k, beta) == C.d(k) * beta[k] - quad // 2


@given(datum_and_k(), st.integers(0, 8), st.data())
def test_reflection_involution_and_defect_invariance(dk, m, data):
    C, k = dk
    w = Weight(k, scale(m, C.delta()))
    word = data.draw(st.lists(st.integers(0, C.ell), max_size=12))
    v = C.act(word, w)
    assert C.defect(k, v.beta) == C.defect(k, w.beta)
    for j in C.nodes:
        assert C.reflect(j, C.reflect(j, v)) == v
    assert C.act(tuple(reversed(word)), v) == w
    assert C.act((), v) == v


def test_reflect_fixes_lambda_minus_delta():
    C = cartan(4)
    w = Weight(2, C.delta())
    for j in C.nodes:
        assert C.reflect(j, w) == (w if j != 2 else Weight(2, add(C.delta(), C.simple_root(2))))


@given(datum_and_k(max_ell=5), st.data())
def test_dominantize_properties(dk, data):
    C, k = dk
    m = data.draw(st.integers(0, 2))
    word = data.draw(st.lists(st.integers(0, C.ell), max_size=10))
    w = C.act(word, Weight(k, scale(m, C.delta())))
    dom, walk = C.dominantize(w)
    assert C.is_dominant(dom)
    assert C.act(walk, w) == dom
    assert dom == Weight(k, scale(m, C.delta()))


def test_dominantize_rejects_non_weights():
    C = cartan(3)
    with pytest.raises(NotAWeightError):
        C.dominantize(Weight(1, C.simple_root(0)))


def test_defect_two_walk():
    for ell in range(3, 7):
        C = cartan(ell)
        for k in C.nodes:
            if k + 2 > ell:
                continue
            beta = sub(C.delta(), C.xi(k, "+", 2))
            dom, _ = C.dominantize(Weight(k, beta))
            assert C.pairing(k + 2, dom) == 1
            assert C.defect(k, beta) == C.defect(k, dom.beta) == 1


def test_flip():
    for ell in range(2, 7):
        C = cartan(ell)
        assert C.flip(C.delta()) == C.delta()
        for k in C.nodes:
            for sign, i in legal(ell, k):
                if sign == "+":
                    assert C.flip(C.xi(k, "+", i)) == C.xi(ell - k, "-", i)
        beta = tuple(random.Random(ell).randint(0, 3) for _ in C.nodes)
        assert C.flip(C.flip(beta)) == beta
        assert height(C.flip(beta)) == height(beta)
