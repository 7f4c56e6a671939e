import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlab.scalars import GF2, GF4, SQRT2, SQRT3, SQRT6, MixedFields, NotIntegral, Quad, field, reduce_mod2, val2


def test_characteristic_two():
    assert GF2(1) + GF2(1) == GF2(0)


def test_gf4_generator_relation():
    w = GF4(GF4.generator())
    assert w * w == w + GF4(1)
    assert w * w + w + GF4(1) == GF4(0)


def test_gf4_inverse_matches_search():
    w = GF4.generator()
    found = [b for b in range(1, 4) if GF4.mul(w, b) == 1]
    assert found == [w ^ 1]
    assert int(GF4.inv(w)) == w ^ 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        GF4(0).inverse()


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        GF2(1) + GF4(1)


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_field_axioms_exhaustive(e):
    F = field(e)
    els = np.arange(F.order)
    a, b, c = np.meshgrid(els, els, els, indexing="ij")
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.mul(a, b ^ c), F.mul(a, b) ^ F.mul(a, c))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    assert all(F.mul(x, F.inv(x)) == 1 for x in range(1, F.order))


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_frobenius_has_order_e(e):
    F = field(e)
    for x in F.elements():
        y = x
        for _ in range(e):
            y = F.frobenius(y)
        assert y == x


def test_quad_products():
    assert SQRT2 * SQRT2 == 2
    assert SQRT2 * SQRT3 == SQRT6
    assert (5 * SQRT2).conj2() == -5 * SQRT2
    assert (1 + SQRT2).inverse() * (1 + SQRT2) == 1


def test_reduce_mod2_examples():
    assert reduce_mod2(5 * SQRT2) == GF2(0)
    assert reduce_mod2(SQRT3) == GF2(1)
    assert reduce_mod2(1) == GF2(1)
    assert reduce_mod2((SQRT2 + SQRT6) / 2) == GF2(1)
    with pytest.raises(NotIntegral):
        reduce_mod2(Quad(Fraction(1, 2)))


def test_val2_examples():
    assert val2(50) == 1
    assert val2(25) == 0
    assert val2(Fraction(1, 2)) == -1
    assert val2(0) == math.inf


small = st.integers(-20, 20)
# integral elements a + b√2 + c√3 + d(√2 + √6)/2
integral = st.builds(lambda a, b, c, d: Quad(a) + b * SQRT2 + c * SQRT3 + d * (SQRT2 + SQRT6) / 2, small, small, small, small)
rational_quad = st.builds(
    lambda *xs: Quad(*(Fraction(n, m) for n, m in zip(xs[::2], xs[1::2]))),
    *[small, st.integers(1, 9)] * 4,
)


@settings(max_examples=1000, deadline=None)
@given(integral, integral)
def test_reduce_mod2_is_a_ring_map(x, y):
    assert reduce_mod2(x + y) == reduce_mod2(x) + reduce_mod2(y)
    assert reduce_mod2(x * y) == reduce_mod2(x) * reduce_mod2(y)


@settings(max_examples=300, deadline=None)
@given(rational_quad)
def test_conjugations_commute_with_order_two(x):
    assert x.conj2().conj2() == x
    assert x.conj3().conj3() == x
    assert x.conj2().conj3() == x.conj3().conj2()


@settings(max_examples=300, deadline=None)
@given(rational_quad, rational_quad)
def test_conjugations_are_multiplicative(x, y):
    assert (x * y).conj2() == x.conj2() * y.conj2()
    assert (x * y).conj3() == x.conj3() * y.conj3()


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**6, 10**6).filter(bool), st.integers(-10**6, 10**6).filter(bool))
def test_val2_is_additive(a, b):
    assert val2(a * b) == val2(a) + val2(b)
    assert val2(Fraction(a, b)) == val2(a) - val2(b)


def test_gf16_contains_gf4():
    F = field(4)
    sub = [x for x in F.elements() if F.pow(x, 4) == x]
    assert len(sub) == 4
    for a, b in itertools.product(sub, repeat=2):
        assert int(F.mul(a, b)) in sub and a ^ b in sub
