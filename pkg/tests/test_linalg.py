import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlab import linalg as la
from quiverlab.scalars import GF2, GF4

FIELDS = {"gf2": GF2, "gf4": GF4}


def mats(F, max_dim=40):
    """Random matrices drawn from a seed; hypothesis shrinks shape and seed."""
    return st.builds(
        lambda r, c, seed: la.random_matrix(np.random.default_rng(seed), r, c, F),
        st.integers(0, max_dim),
        st.integers(0, max_dim),
        st.integers(0, 2**32 - 1),
    )


def test_identity_and_zero():
    r, k, _ = la.rref(la.identity(3))
    assert np.array_equal(r, la.identity(3)) and k == 3
    r, k, _ = la.rref(la.zeros(2, 5))
    assert not r.any() and k == 0


def test_rref_small_by_hand():
    r, k, pivots = la.rref(np.array([[1, 1], [1, 1]], dtype=np.uint8))
    assert r.tolist() == [[1, 1], [0, 0]] and k == 1 and pivots == [0]


def test_kernels():
    assert la.kernel(la.identity(3)).dim == 0
    assert la.kernel(la.zeros(4, 4)).dim == 4
    assert la.kernel(np.array([[1, 1]], dtype=np.uint8)) == la.Subspace.span([[1, 1]], 2)


def test_solve():
    b = np.array([1, 0, 1], dtype=np.uint8)
    assert np.array_equal(la.solve(la.identity(3), b), b)
    with pytest.raises(la.NoSolution):
        la.solve(la.zeros(2, 2), np.array([1, 0], dtype=np.uint8))
    x = la.solve(np.array([[1, 1], [0, 1]], dtype=np.uint8), np.array([0, 1], dtype=np.uint8))
    assert x.tolist() == [1, 1]


def test_subspace_lattice_examples():
    e = la.identity(3)
    a = la.Subspace.span(e[:2], 3)
    b = la.Subspace.span(e[1:], 3)
    assert a + a == a
    assert la.Subspace.full(3).intersect(b) == b
    assert a.intersect(b) == la.Subspace.span(e[1:2], 3)


def test_intersection_by_enumeration():
    # every vector of GF(2)^3 tested against both spans
    e = la.identity(3)
    a, b = la.Subspace.span(e[:2], 3), la.Subspace.span(e[1:], 3)
    vecs = [np.array([(n >> i) & 1 for i in range(3)], dtype=np.uint8) for n in range(8)]
    common = [v for v in vecs if a.contains(v) and b.contains(v)]
    assert len(common) == 2 ** a.intersect(b).dim


def test_ambient_mismatch():
    with pytest.raises(la.AmbientMismatch):
        la.Subspace.full(2) + la.Subspace.full(3)


def test_inverse_roundtrip():
    rng = np.random.default_rng(1)
    for F in (GF2, GF4):
        for _ in range(20):
            m = la.random_matrix(rng, 6, 6, F)
            if la.is_invertible(m, F):
                assert np.array_equal(la.matmul(m, la.inverse(m, F), F), la.identity(6))


@pytest.mark.parametrize("name", FIELDS)
@settings(max_examples=500, deadline=None)
@given(data=st.data())
def test_rank_nullity(name, data):
    F = FIELDS[name]
    m = data.draw(mats(F))
    assert la.rank(m, F) + la.kernel(m, F).dim == m.shape[1]
    for v in la.kernel_basis(m, F):
        assert not la.matmul(m, v.reshape(-1, 1), F).any()


@pytest.mark.parametrize("name", FIELDS)
@settings(max_examples=200, deadline=None)
@given(data=st.data(), seed=st.integers(0, 2**32 - 1))
def test_rref_canonical_under_row_operations(name, data, seed):
    F = FIELDS[name]
    m = data.draw(mats(F, 12))
    r, _, _ = la.rref(m, F)
    assert np.array_equal(la.rref(r, F)[0], r)
    rng = np.random.default_rng(seed)
    n = m.shape[0]
    g = la.random_matrix(rng, n, n, F)
    while n and not la.is_invertible(g, F):
        g = la.random_matrix(rng, n, n, F)
    assert np.array_equal(la.rref(la.matmul(g, m, F), F)[0], r)


@settings(max_examples=1000, deadline=None)
@given(mats(GF2))
def test_packed_backend_agrees_with_generic(m):
    a = la.rref_packed(m)
    b = la.rref_generic(m, GF2)
    assert np.array_equal(a[0], b[0]) and a[1] == b[1] and a[2] == b[2]


@pytest.mark.parametrize("name", FIELDS)
@settings(max_examples=300, deadline=None)
@given(data=st.data())
def test_modular_law(name, data):
    F = FIELDS[name]
    n = data.draw(st.integers(1, 10))
    rows = st.integers(0, n)
    a = la.Subspace.span(la.random_matrix(np.random.default_rng(data.draw(st.integers(0, 10**6))), data.draw(rows), n, F), n, F)
    b = la.Subspace.span(la.random_matrix(np.random.default_rng(data.draw(st.integers(0, 10**6))), data.draw(rows), n, F), n, F)
    assert (a + b).dim + a.intersect(b).dim == a.dim + b.dim
    assert a.intersect(b) <= a and a <= a + b


def test_independent_rows_extend_base():
    base = la.identity(4)[:2]
    cands = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [1, 0, 1, 0], [0, 0, 0, 1]], dtype=np.uint8)
    assert la.independent_rows(base, cands) == [1, 3]
    assert la.independent_rows(base, cands, GF4) == [1, 3]
