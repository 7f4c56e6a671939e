import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlab import chars as C
from quiverlab.algebra import cartan, lambda_algebra, lambdahat_algebra
from quiverlab.scalars import SQRT2, Quad, val2

T = C.HAT_S5


def test_inner_products():
    assert C.inner_product(T, "psi1", "psi1") == 1
    assert C.inner_product(T, "psi7", "psi8") == 0
    assert C.inner_product(T, "psi6", "psi6") == 1


def test_full_orthogonality():
    assert C.row_orthogonality(T) and C.column_orthogonality(T)
    assert C.row_orthogonality(C.S5_TABLE) and C.column_orthogonality(C.S5_TABLE)


def test_degree_sums():
    assert C.degree_square_sum(T) == 240 == T.order
    assert C.degree_square_sum(C.S5_TABLE) == 120 == C.S5_TABLE.order


def test_checksums_and_tamper_detection():
    C.verify_checksums()
    rows = list(T.rows)
    rows[4] = tuple(Quad(1) if k == 4 else v for k, v in enumerate(rows[4]))
    tampered = dataclasses.replace(T, rows=tuple(rows))
    assert tampered.checksum() != C.CHECKSUMS["2.S5"]
    assert not C.row_orthogonality(tampered)


def test_principal_blocks():
    assert C.principal_block(T) == [f"psi{i}" for i in range(1, 9)]
    assert C.principal_block(C.S5_TABLE) == ["chi1", "chi2", "chi3", "chi4", "chi5"]


def test_blocks_agree_with_brauer_linkage():
    # characters sharing a Brauer constituent lie in one block
    D = C.decomposition_matrix(T, list(T.names))
    groups: list[set[str]] = []
    for name, row in zip(D.rows, D.entries):
        cols = {j for j, v in enumerate(row) if v}
        merged = [g for g in groups if g & {f"col{j}" for j in cols}]
        new = {name} | {f"col{j}" for j in cols}
        for g in merged:
            new |= g
            groups.remove(g)
        groups.append(new)
    linked = sorted(sorted(n for n in g if n.startswith("psi")) for g in groups)
    assert linked == sorted(sorted(b) for b in C.block_partition(T))


def test_decomposition_rows():
    D = C.decomposition_matrix(T, C.principal_block(T), columns=("phi0", "phi1"))
    rows = dict(zip(D.rows, D.entries))
    assert rows["psi5"] == (0, 1)
    assert rows["psi6"] == (2, 1)
    full = C.decomposition_matrix(T, ["psi9"])
    assert full.entries == ((0, 0, 1),)


def test_decomposition_reconstructs_regular_values():
    for t in (T, C.S5_TABLE):
        D = C.decomposition_matrix(t, list(t.names))
        for name, row in zip(D.rows, C.reconstruct(D)):
            assert [Fraction(v) for v in row] == C.regular_values(t, name)


def test_cartan_agreement():
    D = C.decomposition_matrix(C.S5_TABLE, C.principal_block(C.S5_TABLE), columns=("phi0", "phi1"))
    Dh = C.decomposition_matrix(T, C.principal_block(T), columns=("phi0", "phi1"))
    assert C.cartan_from_decomp(D) == [[8, 4], [4, 3]] == cartan(lambda_algebra(0)).tolist()
    assert C.cartan_from_decomp(Dh) == [[16, 8], [8, 6]] == cartan(lambdahat_algebra(0)).tolist()
    assert C.cartan_from_decomp([[1, 0], [0, 1]]) == [[1, 0], [0, 1]]


def test_negative_decomposition_rejected():
    with pytest.raises(C.NoNonnegativeSolution):
        C.decomposition_matrix(C.S5_TABLE, ["chi1"], columns=("phi1",))


def test_spin_rows():
    assert C.spin_rows(T) == ["psi5", "psi7", "psi8", "psi11", "psi12"]


def test_cover_restricts_to_s5():
    assert C.s5_table_from_cover() == C.S5_TABLE.rows


def test_central_characters():
    assert C.central_character(T, "psi7", "C9") == 5 * SQRT2
    assert C.central_character(T, "psi6", "C9") == 0
    assert C.central_character(T, "psi1", "C9") == 30


def test_minimal_polynomials():
    p = C.minpoly_of_tuple((Quad(0), 5 * SQRT2))
    assert p == (0, -50, 0, 1)
    assert C.minpoly_of_tuple((Quad(0),)) == (0, 1)
    lead, monic = C.rescale_check(p, 5)
    assert lead == 125 and monic == (0, -2, 0, 1)
    assert val2(50) == 1 and val2(25) == 0


def test_galois_pairs():
    assert C.galois_pair_check(T, "psi7", "psi8")
    assert C.galois_pair_check(T, "psi11", "psi12", "sqrt3")
    assert not C.galois_pair_check(T, "psi1", "psi2")


def test_render_is_aligned():
    lines = C.BRAUER.render().splitlines()
    assert len(lines) == 5 and len({len(line) for line in lines}) == 1


polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(C._trim)
nonzero = polys.filter(lambda p: any(p))


@settings(max_examples=300, deadline=None)
@given(polys, nonzero)
def test_division_identity(p, q):
    quo, rem = C.poly_divmod(p, q)
    back = C._trim(tuple(a + b for a, b in zip(C.poly_mul(quo, q) + (0,) * 12, rem + (0,) * 20)))
    assert back == C._trim(p)
    assert len(rem) < len(q) or not any(rem)


@settings(max_examples=200, deadline=None)
@given(nonzero, nonzero)
def test_gcd_divides_and_lcm_is_multiple(p, q):
    g = C.poly_gcd(p, q)
    assert not any(C.poly_divmod(p, g)[1]) and not any(C.poly_divmod(q, g)[1])
    m = C.poly_lcm(p, q)
    assert not any(C.poly_divmod(m, p)[1]) and not any(C.poly_divmod(m, q)[1])
