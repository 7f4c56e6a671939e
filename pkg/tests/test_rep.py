import itertools

import numpy as np
import pytest

from quiverlab import linalg as la
from quiverlab import rep as R
from quiverlab.algebra import Quiver, RelationSet, build_algebra, lambda_algebra, lambdahat_algebra

L0, H0 = lambda_algebra(0), lambdahat_algebra(0)


def zoo(alg):
    mods = [R.simple(alg, 0), R.simple(alg, 1), R.projective(alg, 0), R.projective(alg, 1)]
    mods += [R.uniserial(alg, f) for f in [(0, 1), (1, 0), (0, 0, 1), (1, 0, 0)]]
    mods.append(R.syzygy(R.simple(alg, 0)))
    mods.append(R.direct_sum(R.simple(alg, 0), R.uniserial(alg, (0, 1))))
    return mods


def test_uniserials_exist():
    assert R.uniserial(H0, (0, 1)).dim == 2
    assert R.uniserial(H0, (0, 0, 1)).dim == 3
    with pytest.raises(R.NoSuchUniserial):
        R.uniserial(L0, (1, 1))


def test_hom_dimensions():
    M = R.uniserial(L0, (0, 0, 1))
    assert R.end(M).dim == 1
    assert R.hom(R.simple(L0, 0), R.simple(L0, 1)).dim == 0


def test_stable_hom():
    P0 = R.projective(L0, 0)
    assert R.stable_hom(P0, P0).dim == 0
    M = R.uniserial(L0, (0, 1))
    assert R.stable_hom(M, M).dim == 1


def test_ext2_of_m001_over_lambdahat():
    M = R.uniserial(H0, (0, 0, 1))
    W = R.syzygy_power(M, 2)
    assert W.dim == 17
    assert R.hom(W, M).dim == 2
    assert R.stable_hom(W, M).dim == 1
    assert R.ext(M, M, 2) == 1


def test_syzygy_of_s1_is_x():
    X = R.uniserial(L0, (0, 0, 1, 0, 0, 1))
    assert R.is_isomorphic(R.syzygy(R.simple(L0, 1)), X)
    assert R.ext1_dim_cocycles(X, R.uniserial(L0, (0, 0, 1))) == 0


def test_syzygy_of_projective_vanishes():
    assert R.syzygy(R.projective(L0, 0)).dim == 0


@pytest.mark.parametrize("alg", [L0, H0], ids=["lambda", "lambdahat"])
def test_ext_between_simples(alg):
    S = [R.simple(alg, 0), R.simple(alg, 1)]
    # Ext^1(S_i, S_j) counts arrows i -> j; the preset quiver has a 0->0, b 0->1, g 1->0
    arrows = {(i, j): sum(1 for s, t in alg.arrows.values() if (s, t) == (i, j)) for i in (0, 1) for j in (0, 1)}
    for i, j in itertools.product((0, 1), repeat=2):
        assert R.ext(S[i], S[j]) == R.ext1_dim_cocycles(S[i], S[j]) == arrows[(i, j)]
    assert R.ext(S[1], S[1]) == 0


def test_loewy_data():
    M = R.uniserial(L0, (0, 0, 1))
    assert M.loewy.radical_layers == ((0,), (0,), (1,)) and M.loewy.length == 3
    assert R.projective(L0, 1).loewy.length == 7
    assert R.simple(L0, 0).loewy.radical_layers == ((0,),)


def test_isomorphism_and_indecomposability():
    assert not R.is_isomorphic(R.uniserial(L0, (0, 1)), R.uniserial(L0, (1, 0)))
    assert R.is_indecomposable(R.uniserial(L0, (0, 0, 1)))
    assert not R.is_indecomposable(R.direct_sum(R.simple(L0, 0), R.simple(L0, 0)))


@pytest.mark.parametrize("alg", [L0, H0], ids=["lambda", "lambdahat"])
def test_hom_from_projective_counts_factors(alg):
    for M in zoo(alg):
        mult = M.composition_factors()
        for v in alg.vertices:
            assert R.hom(R.projective(alg, v), M).dim == mult.get(v, 0)


@pytest.mark.parametrize("alg", [L0, H0], ids=["lambda", "lambdahat"])
def test_loewy_totals_match_composition(alg):
    for M in zoo(alg):
        counts = {}
        for layer in M.loewy.radical_layers:
            for v in layer:
                counts[v] = counts.get(v, 0) + 1
        assert counts == {v: n for v, n in M.composition_factors().items() if n}


@pytest.mark.parametrize("alg", [L0, H0], ids=["lambda", "lambdahat"])
def test_syzygy_cosyzygy_inverse(alg):
    for M in zoo(alg):
        if R.is_projective(M):
            continue
        assert R.is_isomorphic(R.cosyzygy(R.syzygy(M)), M)


def test_dual_numbers_ext_by_enumeration():
    A = build_algebra(Quiver((0,), {"x": (0, 0)}), RelationSet(lambda_algebra(0).F, [{"xx": 1}], name="k[x]/(x^2)"))
    k = R.simple(A, 0)
    split = R.direct_sum(k, k)
    classes = []
    for bits in itertools.product((0, 1), repeat=4):
        m = np.array(bits, dtype=np.uint8).reshape(2, 2)
        if la.matmul(m, m).any():
            continue
        E = R.Rep(A, (2,), {"x": m})
        if R.is_isomorphic(E, split) or any(R.is_isomorphic(E, c) for c in classes):
            continue
        classes.append(E)
    assert len(classes) == 1
    assert R.ext(k, k) == R.ext1_dim_cocycles(k, k) == 1


def test_relation_violations_rejected():
    with pytest.raises(R.NotAModule):
        R.Rep(L0, (1, 0), {"a": np.array([[1]], dtype=np.uint8), "b": la.zeros(0, 1), "g": la.zeros(1, 0)})


def test_extension_module_is_middle_term():
    M, N = R.uniserial(L0, (0, 1)), R.simple(L0, 0)
    ext = R.ext1_cocycles(M, N)
    for z in ext.class_dicts():
        E = R.extension(M, N, z)
        assert E.dims == tuple(a + b for a, b in zip(M.dims, N.dims))
