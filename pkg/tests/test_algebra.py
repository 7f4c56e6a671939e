import numpy as np
import pytest

from quiverlab import rep as R
from quiverlab.algebra import (
    Q,
    CapTooSmall,
    Quiver,
    RelationSet,
    build_algebra,
    cartan,
    check_surjection,
    lambda_algebra,
    lambdahat_algebra,
)
from quiverlab.scalars import GF2, GF4

BOTH = [0, 1]


def point_algebra():
    return build_algebra(Quiver((0,), {}), RelationSet(GF2, [], name="k"))


def dual_numbers():
    return build_algebra(Quiver((0,), {"x": (0, 0)}), RelationSet(GF2, [{"xx": 1}], name="k[x]/(x^2)"))


@pytest.mark.parametrize("c", BOTH)
def test_lambda_dimensions(c):
    A = lambda_algebra(c)
    assert A.dim == 19
    assert A.projective_dims() == {0: 12, 1: 7}


@pytest.mark.parametrize("d", BOTH)
def test_lambdahat_dimensions(d):
    A = lambdahat_algebra(d)
    assert A.dim == 38
    assert A.projective_dims() == {0: 24, 1: 14}


def test_gf4_parameters_keep_dimensions():
    for d in range(4):
        assert lambdahat_algebra(d, GF4).projective_dims() == {0: 24, 1: 14}
    assert lambda_algebra(1, GF4).dim == 19


def test_point_algebra():
    A = point_algebra()
    assert A.dim == 1
    assert cartan(A).tolist() == [[1]]


@pytest.mark.parametrize("build", [lambda_algebra, lambdahat_algebra])
@pytest.mark.parametrize("p", BOTH)
def test_structure_constants(build, p):
    A = build(p)
    assert A.check_associativity()
    assert A.check_unit()


@pytest.mark.parametrize("p", BOTH)
def test_cartan_matrices(p):
    assert cartan(lambda_algebra(p)).tolist() == [[8, 4], [4, 3]]
    assert cartan(lambdahat_algebra(p)).tolist() == [[16, 8], [8, 6]]


@pytest.mark.parametrize("build", [lambda_algebra, lambdahat_algebra])
def test_cartan_symmetric_and_sums_to_dim(build):
    for p in BOTH:
        C = cartan(build(p))
        assert np.array_equal(C, C.T)
        assert C.sum() == build(p).dim


@pytest.mark.parametrize("build", [lambda_algebra, lambdahat_algebra])
def test_idempotents_cut_out_paths(build):
    A = build(0)
    e = {v: A.index[(v, "")] for v in A.vertices}
    T = A.structure
    for k, p in enumerate(A.basis):
        x = np.zeros(A.dim, dtype=np.uint8)
        x[k] = 1
        left = np.einsum("j,jk->k", x, T[e[0]].astype(np.int64)) % 2  # e0 * x
        both = np.einsum("i,ik->k", left, T[:, e[1]].astype(np.int64)) % 2  # (e0 x) e1
        assert bool(both.any()) == (p.source == 1 and p.target == 0)


def test_projective_p1_is_uniserial():
    P1 = R.projective(lambda_algebra(0), 1)
    assert P1.loewy.radical_layers == ((1,), (0,), (0,), (1,), (0,), (0,), (1,))


def test_projective_p0_multiplicities():
    assert R.projective(lambda_algebra(0), 0).composition_factors() == {0: 8, 1: 4}
    assert R.projective(lambdahat_algebra(0), 1).composition_factors() == {0: 8, 1: 6}


@pytest.mark.parametrize("d", BOTH)
def test_surjection_onto_lambda0(d):
    assert check_surjection(lambdahat_algebra(d), lambda_algebra(0))


def test_no_surjection_onto_lambda1():
    cert = check_surjection(lambdahat_algebra(0), lambda_algebra(1))
    assert not cert
    assert any(img != "0" for _, img in cert.images)


def test_identity_surjection():
    assert check_surjection(lambda_algebra(0), lambda_algebra(0))


def test_dual_numbers():
    A = dual_numbers()
    assert A.dim == 2 and A.check_associativity()


def test_non_admissible_rejected():
    # a loop with no relation has an infinite path algebra
    with pytest.raises(CapTooSmall):
        build_algebra(Quiver((0,), {"x": (0, 0)}), RelationSet(GF2, [], name="k[x]"), cap=6)


def test_dump_lists_basis():
    text = lambda_algebra(0).dump()
    assert text.splitlines()[0] == "# lambda:c=0 dim 19"
    assert sum(line.startswith("basis ") for line in text.splitlines()) == 19


def test_preset_quiver():
    assert Q.arrows == {"a": (0, 0), "b": (0, 1), "g": (1, 0)}
    assert Q.target("ba", 0) == 1
