"""Acceptance gate: criteria 1-8, exact arithmetic, one PASS/FAIL line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from quiverlab import chars as C
from quiverlab import deform as D
from quiverlab import groupreps as G
from quiverlab import rep as R
from quiverlab import strings as S
from quiverlab.algebra import EXPECTED, Q, build_algebra, cartan, lambda_algebra, lambda_relations, lambdahat_algebra
from quiverlab.algebra import lambdahat_relations
from quiverlab.scalars import GF2, GF4, SQRT2, Quad, val2

PARAMS = (0, 1)


def report(n: int, ok: bool, note: str, capsys=None) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {note}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def criterion_1():
    start = time.perf_counter()
    dims = []
    for p in PARAMS:
        # fresh builds, bypassing the cache, so the timing covers construction
        a = build_algebra(Q, lambda_relations(p, GF2), expected=EXPECTED["lambda"], kind="lambda")
        h = build_algebra(Q, lambdahat_relations(p, GF2), expected=EXPECTED["lambdahat"], kind="lambdahat")
        dims.append((a.dim, a.projective_dims(), h.dim, h.projective_dims()))
        assert a.check_associativity() and h.check_associativity()
    elapsed = time.perf_counter() - start
    ok = all(d == (19, {0: 12, 1: 7}, 38, {0: 24, 1: 14}) for d in dims) and elapsed < 2
    hat_p = [R.projective(lambdahat_algebra(0), v).composition_factors() for v in (0, 1)]
    ok &= hat_p == [{0: 16, 1: 8}, {0: 8, 1: 6}]
    return ok, f"dims {dims[0][0]}/{dims[0][2]}, associative, {elapsed:.2f}s"


def _decomp(t):
    return C.decomposition_matrix(t, C.principal_block(t), columns=("phi0", "phi1"))


def criterion_2():
    small = C.cartan_from_decomp(_decomp(C.S5_TABLE))
    big = C.cartan_from_decomp(_decomp(C.HAT_S5))
    ok = small == [[8, 4], [4, 3]] and big == [[16, 8], [8, 6]]
    for p in PARAMS:
        ok &= cartan(lambda_algebra(p)).tolist() == small
        ok &= cartan(lambdahat_algebra(p)).tolist() == big
    return ok, f"{small} and {big}"


def criterion_3():
    t = C.HAT_S5
    ok = C.row_orthogonality(t) and C.column_orthogonality(t) and C.degree_square_sum(t) == 240
    ok &= C.principal_block(t) == [f"psi{i}" for i in range(1, 9)]
    ok &= _decomp(C.S5_TABLE).as_lists() == [[1, 0], [1, 0], [1, 1], [1, 1], [2, 1]]
    ok &= _decomp(t).as_lists() == [[1, 0], [1, 0], [1, 1], [1, 1], [0, 1], [2, 1], [2, 1], [2, 1]]
    return ok, "orthogonality, degrees, principal block, both decomposition matrices"


def criterion_4():
    ok, notes = True, []
    for p in PARAMS:
        alg = lambda_algebra(p)
        cl = S.classify_end_k(alg, maxlen=20)
        names = sorted(str(w) for w, _ in cl.modules)
        ok &= names == sorted(["1_0", "1_1", "b", "g", "b a", "a g"])
        ok &= all(R.end(M).dim == 1 for _, M in cl.modules)
        ok &= cl.others_at_least_two
        ok &= bool(cl.bands) and all(found for _, found in cl.bands)
        notes.append(f"c={p}: {len(cl.end_dims)} strings, 6 with End = k")
    return ok, "; ".join(notes)


def criterion_5():
    ok = True
    for alg in (lambda_algebra(0), lambdahat_algebra(0)):
        ok &= R.ext(R.simple(alg, 1), R.simple(alg, 1)) == 0
        for f in [(0, 1), (1, 0), (0, 0, 1), (1, 0, 0)]:
            M = R.uniserial(alg, f)
            ok &= R.ext(M, M) == 1 == R.ext1_dim_cocycles(M, M)
    H = lambdahat_algebra(0)
    for f in [(0, 0, 1), (1, 0, 0)]:
        M = R.uniserial(H, f)
        W = R.syzygy_power(M, 2)
        ok &= R.hom(W, M).dim == 2 and R.stable_hom(W, M).dim == 1
    ok &= R.syzygy_power(R.uniserial(H, (0, 0, 1)), 2).dim == 17
    L = lambda_algebra(0)
    ok &= R.is_isomorphic(R.syzygy(R.simple(L, 1)), R.uniserial(L, (0, 0, 1, 0, 0, 1)))
    return ok, "Ext^1, Ext^2 = 1 via Hom = 2, dim Omega^2 = 17, Omega(S1) = X"


def criterion_6():
    start = time.perf_counter()
    want = {(0,): (2, 2), (1,): (1, 1), (0, 1): (2, 2), (1, 0): (2, 2), (0, 0, 1): (2, 3), (1, 0, 0): (2, 3)}
    ok = True
    for p in PARAMS:
        L, H = lambda_algebra(p), lambdahat_algebra(p)
        for f, (dl, dh) in want.items():
            for alg, d in ((L, dl), (H, dh)):
                v = R.simple(alg, f[0]) if len(f) == 1 else R.uniserial(alg, f)
                rep = D.truncation_depth(v)
                ok &= rep.depth == d and rep.certified
        U, X, Y = D.witness_u(H), D.witness_x(L), D.witness_y(H)
        for w in (U, X, Y):
            D.make_lift(w.base, w.total, w.t)  # raises unless it is a lift
        ok &= D.split_hypothesis(U) and D.split_hypothesis(X) and D.split_hypothesis(Y)
        ok &= not D.extend_lift(U) and not D.extend_lift(X) and not D.extend_lift(Y)
        ok &= any(D.lifts_isomorphic(l, Y) for l in D.extend_lift(D.witness_x(H)))
    elapsed = time.perf_counter() - start
    ok &= elapsed < 30
    return ok, f"depths 2,1,2,2/3 certified, witnesses U, X, Y terminal, {elapsed:.2f}s"


def criterion_7():
    ok = G.abelianization_order(G.S5) == 2
    T1 = G.natural_simple()
    ok &= T1.dim == 4 and T1.is_simple() and G.brauer_character(T1) == (4, -2, -1)
    ok &= G.restrict_to_c2(T1) == (2, 0)
    ok &= G.restrict_to_c2(G.t00()) == (1, 0)
    ok &= all(G.restrict_to_c2(V) == (2, 1) for V in (G.uniserial_t0_over_t1(), G.uniserial_t1_over_t0()))
    T4 = T1.extend_field(GF4)
    E, _ = G.split_restriction(T4)
    ok &= G.group_isomorphic(G.induce_from_a5(E), T4)
    return ok, "abelianization 2, T1 = (4,-2,-1), restrictions to C, Ind E = T1 over GF(4)"


def criterion_8():
    t = C.HAT_S5
    pair = (C.central_character(t, "psi6", "C9"), C.central_character(t, "psi7", "C9"))
    ok = pair == (Quad(0), 5 * SQRT2)
    p = C.minpoly_of_tuple(pair)
    lead, monic = C.rescale_check(p, 5)
    ok &= p == (0, -50, 0, 1) and lead == 125 and monic == (0, -2, 0, 1) and val2(50) == 1
    ok &= C.galois_pair_check(t, "psi7", "psi8")
    return ok, f"(0, 5√2), {C.poly_str(p)}, {lead}({C.poly_str(monic, 't')})"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, note = CRITERIA[n - 1]()
    report(n, ok, note, capsys)


if __name__ == "__main__":
    failed = 0
    for n, fn in enumerate(CRITERIA, start=1):
        ok, note = fn()
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {note}")
        failed += not ok
    sys.exit(1 if failed else 0)
