import pytest

from quiverlab import rep as R
from quiverlab import strings as S
from quiverlab.algebra import lambda_algebra

SIX = {"1_0": (0,), "1_1": (1,), "b": (0, 1), "g": (1, 0), "b a": (0, 0, 1), "a g": (1, 0, 0)}


@pytest.fixture(scope="module", params=[0, 1], ids=["c=0", "c=1"])
def alg(request):
    return lambda_algebra(request.param)


def test_trivial_strings_only_at_length_zero(alg):
    ws = S.enumerate_strings(alg, 0)
    assert [(w.code, w.start) for w in ws] == [("", 0), ("", 1)]
    assert S.string_module(alg, ws[0]).dims == (1, 0)


def test_length_one_strings_are_the_arrows(alg):
    ones = [w for w in S.enumerate_strings(alg, 1) if len(w) == 1]
    assert sorted(w.code for w in ones) == ["a", "b", "g"]


def test_six_words_appear_by_length_two(alg):
    names = {str(w) for w in S.enumerate_strings(alg, 2)}
    assert set(SIX) <= names


def test_named_words(alg):
    assert R.is_isomorphic(S.string_module(alg, S.StringWord("b", 1)), R.uniserial(alg, (0, 1)))
    assert R.is_isomorphic(S.string_module(alg, S.StringWord("ba", 1)), R.uniserial(alg, (0, 0, 1)))


def test_bad_walk_rejected(alg):
    with pytest.raises(ValueError):
        S.string_module(alg, S.StringWord("b", 0))


def test_classification(alg):
    cl = S.classify_end_k(alg, maxlen=20)
    found = {str(w): M for w, M in cl.modules}
    assert set(found) == set(SIX)
    for name, factors in SIX.items():
        M = found[name]
        assert R.end(M).dim == 1
        assert R.is_isomorphic(M, R.uniserial(alg, factors))
    assert cl.others_at_least_two
    assert sum(d == 1 for d in cl.end_dims.values()) == 6


def test_band_has_nonscalar_endomorphism(alg):
    bands = S.enumerate_bands(alg, 4)
    assert bands
    M = S.band_module(alg, bands[0], 1)
    f = S.nonscalar_endomorphism(M)
    assert f is not None and M.is_intertwiner(f, M)


def test_strings_are_modules_of_the_right_size(alg):
    for w in S.enumerate_strings(alg, 8):
        M = S.string_module(alg, w)  # relations are checked on construction
        assert M.dim == len(w) + 1


def test_inverse_words_give_isomorphic_modules(alg):
    arrows = alg.arrows
    for w in S.enumerate_strings(alg, 8):
        inv = w.inverse(S.end_vertex(arrows, w))
        assert R.is_isomorphic(S.string_module(alg, w), S.string_module(alg, inv))


def test_combinatorial_end_matches_hom(alg):
    for w in S.enumerate_strings(alg, 6):
        assert S.end_dim_combinatorial(alg, w) == R.end(S.string_module(alg, w)).dim


def test_socle_quotient_is_monomial(alg):
    q = S.socle_quotient(alg)
    assert q.socle_dim == 2 and q.quotient_dim == 17
    assert "aa" in q.zero_relations and "bg" in q.zero_relations
