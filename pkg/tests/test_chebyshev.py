"""Chebyshev-style recurrences and the power-basis reduction."""

import random
from fractions import Fraction

import pytest

from qskein.chebyshev import (
    Polynomial,
    chebyshev_a,
    chebyshev_reduce,
    chebyshev_s,
    chebyshev_t,
)


def test_seed_values():
    assert chebyshev_t(0) == Polynomial.constant(2)
    assert chebyshev_t(1) == Polynomial.x()
    assert chebyshev_s(0) == Polynomial.constant(1)
    assert chebyshev_s(1) == Polynomial.x()


def test_small_members():
    x = Polynomial.x()
    assert chebyshev_t(2) == x * x - 2
    assert chebyshev_t(3) == x ** 3 - x * 3
    assert chebyshev_s(2) == x * x - 1
    assert chebyshev_s(3) == x ** 3 - x * 2
    assert chebyshev_a(1) == x
    assert chebyshev_a(2) == x * x - 1
    assert chebyshev_a(3) == x ** 3 - x
    assert chebyshev_a(4) == x ** 4 - x * x * 2


def test_recurrences_hold():
    x = Polynomial.x()
    for n in range(2, 16):
        assert chebyshev_t(n) == x * chebyshev_t(n - 1) - chebyshev_t(n - 2)
        assert chebyshev_s(n) == x * chebyshev_s(n - 1) - chebyshev_s(n - 2)
    for n in range(3, 16):
        assert chebyshev_a(n) == chebyshev_s(n) + chebyshev_a(n - 2)


def test_t_is_s_difference():
    for n in range(2, 13):
        assert chebyshev_t(n) == chebyshev_s(n) - chebyshev_s(n - 2)


def test_a_family_monic_unitriangular():
    for n in range(1, 21):
        a = chebyshev_a(n)
        assert a.degree() == n
        assert a.leading_coefficient() == 1


def test_a_family_rejects_zero():
    with pytest.raises(ValueError):
        chebyshev_a(0)


def test_composition_multiplicativity():
    for m in range(1, 7):
        for n in range(1, 7):
            assert chebyshev_t(m).compose(chebyshev_t(n)) == chebyshev_t(m * n)


def test_composition_identity_and_pins():
    p = Polynomial({3: Fraction(2), 1: Fraction(-1), 0: Fraction(7)})
    assert p.compose(Polynomial.x()) == p
    assert chebyshev_t(2).compose(chebyshev_t(3)) == chebyshev_t(6)
    assert chebyshev_t(3).compose(chebyshev_t(5)) == chebyshev_t(15)


def test_top_coefficient_of_t_is_one():
    for n in range(1, 12):
        assert chebyshev_t(n).leading_coefficient() == 1


def test_polynomial_basics():
    p = Polynomial({2: Fraction(1), 0: Fraction(-1)})
    assert p.coefficient(2) == 1
    assert p.coefficient(5) == 0
    assert (p - p).is_zero()
    with pytest.raises(ValueError):
        (p - p).degree()
    q = p * p
    assert q.degree() == 4
    assert q.coefficient(2) == -2


def test_reduce_cubic_pin():
    """x^3 at order 3 splits as T_3 plus 3x."""
    form = chebyshev_reduce(Polynomial({3: Fraction(1)}), 3)
    assert form.columns[0] == Polynomial({1: Fraction(1)})
    assert form.columns[1] == Polynomial.constant(3)
    assert form.columns[2].is_zero()
    assert form.substitute() == Polynomial({3: Fraction(1)})


def test_reduce_below_order_is_identity_column():
    form = chebyshev_reduce(Polynomial({2: Fraction(1)}), 3)
    assert form.columns[2] == Polynomial.constant(1)
    assert form.columns[0].is_zero() and form.columns[1].is_zero()


def test_reduce_round_trip_random():
    rng = random.Random(407)
    for order in (3, 5):
        for _ in range(40):
            coeffs = {}
            for d in range(rng.randint(0, 5 * order) + 1):
                if rng.random() < 0.5:
                    c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                    if c:
                        coeffs[d] = c
            p = Polynomial(coeffs)
            form = chebyshev_reduce(p, order)
            assert len(form.columns) == order
            assert form.substitute() == p


def test_reduce_columns_only_low_x_degrees():
    form = chebyshev_reduce(Polynomial({11: Fraction(1), 7: Fraction(3)}), 3)
    # every stored column index is an x-exponent below the order
    assert len(form.columns) == 3
    assert form.substitute() == Polynomial({11: Fraction(1), 7: Fraction(3)})
