"""Knot invariants on reference diagrams."""

from fractions import Fraction

from lensurgery.diagram import UNKNOT, figure_eight, trefoil
from lensurgery.invariants import (LaurentPoly, alexander_polynomial,
                                   determinant, jones_in_t, jones_polynomial,
                                   kauffman_bracket)


def poly(terms: dict[int, int]) -> LaurentPoly:
    out = LaurentPoly.zero()
    for e, c in terms.items():
        out = out + LaurentPoly.monomial(c, e)
    return out


def test_unknot():
    assert kauffman_bracket(UNKNOT) == LaurentPoly.one()
    assert jones_polynomial(UNKNOT) == LaurentPoly.one()
    assert determinant(UNKNOT) == 1
    assert alexander_polynomial(UNKNOT) == LaurentPoly.one()


def test_trefoil():
    t = trefoil()
    assert determinant(t) == 3
    # left trefoil: V(t) = -t^-4 + t^-3 + t^-1, i.e. f(A) with t = A^-4
    jones_t = jones_in_t(jones_polynomial(t))
    assert jones_t == {Fraction(-4): -1, Fraction(-3): 1, Fraction(-1): 1}
    # t - 1 + t^-1 after normalization to min exponent 0
    assert alexander_polynomial(t) == poly({0: 1, 1: -1, 2: 1})


def test_figure_eight():
    f8 = figure_eight()
    assert determinant(f8) == 5
    jones_t = jones_in_t(jones_polynomial(f8))
    assert jones_t == {Fraction(-2): 1, Fraction(-1): -1, Fraction(0): 1,
                       Fraction(1): -1, Fraction(2): 1}
    assert alexander_polynomial(f8) == poly({0: -1, 1: 3, 2: -1})


def test_alexander_at_minus_one_is_determinant():
    for d in (UNKNOT, trefoil(), figure_eight()):
        val = alexander_polynomial(d)(Fraction(-1))
        assert abs(val) == determinant(d)


def test_laurent_arithmetic():
    a = LaurentPoly.monomial(2, 3) + LaurentPoly.monomial(-1, -1)
    b = LaurentPoly.monomial(1, 1)
    assert a * b == LaurentPoly.monomial(2, 4) + LaurentPoly.monomial(-1, 0)
    assert (a * b).divide_exact(b) == a
    assert a.mirror().mirror() == a
    assert a(Fraction(2)) == 2 * 8 - Fraction(1, 2)
