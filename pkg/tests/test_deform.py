import pytest

from quiverlab import deform as D
from quiverlab import rep as R
from quiverlab.algebra import lambda_algebra, lambdahat_algebra
from quiverlab.scalars import GF4

L0, H0 = lambda_algebra(0), lambdahat_algebra(0)
ALGS = {"lambda0": L0, "lambda1": lambda_algebra(1), "hat0": H0, "hat1": lambdahat_algebra(1)}
SIX = [(0,), (1,), (0, 1), (1, 0), (0, 0, 1), (1, 0, 0)]


def module(alg, factors):
    return R.simple(alg, factors[0]) if len(factors) == 1 else R.uniserial(alg, factors)


def free_profile(l):
    n, d = l.order, l.base.dim
    return l.rank_profile == [(n - j) * d for j in range(n + 1)]


def test_witness_u_is_an_order_two_lift():
    U = D.witness_u(L0)
    assert U.order == 2 and U.total.dims == (2, 2)
    assert D.make_lift(U.base, U.total, U.t).order == 2
    assert not D.is_trivial_lift(U)


def test_witness_x_is_an_order_two_lift_of_m001():
    X = D.witness_x(L0)
    assert X.total.loewy.radical_layers == ((0,), (0,), (1,), (0,), (0,), (1,))
    assert R.is_isomorphic(X.base, R.uniserial(L0, (0, 0, 1)))
    assert D.make_lift(X.base, X.total, X.t).order == 2


def test_witness_y_is_an_order_three_lift():
    Y = D.witness_y(H0)
    assert Y.order == 3
    assert Y.total.loewy.compact() == "0/0/1/0/0/1/0/0/1"
    assert D.make_lift(Y.base, Y.total, Y.t).order == 3


def test_make_lift_rejects_bad_data():
    v = R.simple(L0, 0)
    triv = D.trivial_lift(v, 2)
    with pytest.raises(D.NotNilpotent):
        D.make_lift(v, triv.total, triv.total.identity(), order=2)
    with pytest.raises(D.NotFree):
        D.make_lift(v, triv.total, triv.total.zero_map(triv.total), order=2)
    M = R.uniserial(L0, (0, 1))
    with pytest.raises(D.WrongReduction):
        D.make_lift(R.uniserial(L0, (1, 0)), D.trivial_lift(M, 2).total, D.trivial_lift(M, 2).t)


def test_s0_order_two_lift_does_not_extend():
    lifts = [l for l in D.order_two_lifts(R.simple(L0, 0)) if not D.is_trivial_lift(l)]
    assert len(lifts) == 1
    assert D.extend_lift(lifts[0]) == []


def test_u_does_not_extend_over_lambdahat():
    U = D.witness_u(H0)
    assert D.split_hypothesis(U)
    assert D.extend_lift(U) == []


def test_x_extends_to_y_over_lambdahat():
    X, Y = D.witness_x(H0), D.witness_y(H0)
    found = D.extend_lift(X)
    assert any(D.lifts_isomorphic(f, Y) for f in found)
    assert D.lifts_isomorphic(D.reduce_lift(Y, 2), X)
    assert not D.split_hypothesis(X)
    assert D.split_hypothesis(Y)
    assert D.extend_lift(Y) == []


def test_x_is_terminal_over_lambda():
    X = D.witness_x(L0)
    assert D.split_hypothesis(X)
    assert D.extend_lift(X) == []


@pytest.mark.parametrize(
    "alg,factors,depth",
    [
        (L0, (0,), 2),
        (L0, (1,), 1),
        (L0, (0, 1), 2),
        (L0, (0, 0, 1), 2),
        (L0, (1, 0, 0), 2),
        (H0, (0,), 2),
        (H0, (1,), 1),
        (H0, (1, 0), 2),
        (H0, (0, 0, 1), 3),
        (H0, (1, 0, 0), 3),
    ],
)
def test_truncation_depths(alg, factors, depth):
    rep = D.truncation_depth(module(alg, factors))
    assert rep.depth == depth and rep.certified
    for l in rep.chain:
        assert free_profile(l)


def test_depth_rejects_projectives():
    with pytest.raises(D.HypothesisFailed):
        D.truncation_depth(R.projective(L0, 0))


def test_depth_is_uncertified_when_maxn_is_reached():
    rep = D.truncation_depth(R.uniserial(H0, (0, 0, 1)), maxn=2)
    assert rep.depth == 2 and not rep.certified


@pytest.mark.parametrize("alg", [L0, H0], ids=["lambda", "lambdahat"])
def test_omega_consistency(alg):
    assert D.omega_depth_consistency(R.simple(alg, 1))
    assert D.omega_depth_consistency(R.simple(alg, 0))


@pytest.mark.parametrize("name", ALGS)
def test_order_two_lifts_count_ext_lines(name):
    alg = ALGS[name]
    for f in SIX:
        v = module(alg, f)
        e = R.ext1_dim_cocycles(v, v)
        assert e == R.ext(v, v)
        assert len(D.order_two_lifts(v)) == e + 1


def test_order_two_lifts_over_gf4_count_lines():
    alg = lambda_algebra(0, GF4)
    v = R.uniserial(alg, (0, 1))
    lifts = D.order_two_lifts(v)
    assert len(lifts) == 2
    assert len(D.dedupe_lifts(D.extension_search(D.base_lift(v), dedupe=False).lifts, up_to_scaling=False)) == 4


@pytest.mark.parametrize("alg", [L0, H0], ids=["lambda", "lambdahat"])
def test_extensions_are_free_and_reduce_to_their_source(alg):
    for f in SIX:
        for l in D.order_two_lifts(module(alg, f)):
            for m in [l, *D.extend_lift(l)]:
                assert free_profile(m)
                assert D.make_lift(m.base, m.total, m.t).order == m.order
                if m is not l:
                    assert D.lifts_isomorphic(D.reduce_lift(m, l.order), l)


def test_inflated_lifts_stay_lifts_and_depth_grows():
    for d in (0, 1):
        H = lambdahat_algebra(d)
        infl = D.inflate_lift(D.witness_x(L0), H)
        assert D.make_lift(infl.base, infl.total, infl.t).order == 2
        for f in SIX:
            assert D.truncation_depth(module(H, f)).depth >= D.truncation_depth(module(L0, f)).depth


def test_rescaling_keeps_lift():
    l = D.witness_u(lambda_algebra(0, GF4))
    for lam in (1, 2, 3):
        m = D.rescale_lift(l, lam)
        assert D.make_lift(m.base, m.total, m.t).order == 2
        assert D.lifts_equivalent(l, m)
