"""Registry of numbered checks run by ``quiverlab verify``.

Every check is a function of a :class:`Config` returning an :class:`Outcome`.
Checks whose argument rests on a splitting reduction list the hypotheses they
verified; a failed hypothesis turns an otherwise matching result into
CONDITIONAL.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import chars as C
from . import deform as D
from . import groupreps as G
from . import linalg as la
from . import rep as R
from . import strings as S
from .algebra import Algebra, cartan, check_surjection, lambda_algebra, lambdahat_algebra
from .scalars import GF2, GF4, SQRT2, Quad, val2
from .scalars import field as gf_field

PASS, FAIL, SKIPPED, CONDITIONAL = "PASS", "FAIL", "SKIPPED", "CONDITIONAL"
SCHEMA_VERSION = 1


@dataclass
class Config:
    field: str = "gf2"
    c: tuple[int, ...] = (0, 1)
    d: tuple[int, ...] = (0, 1)
    max_string_len: int = 20
    max_n: int = 4
    budget: int = 1 << 24
    jobs: int = 1
    out: str | None = None
    verbose: bool = False
    timings: bool = True

    def __post_init__(self):
        if self.field not in ("gf2", "gf4"):
            raise ValueError(f"field must be gf2 or gf4, got {self.field!r}")
        self.c = tuple(int(x) for x in (self.c if isinstance(self.c, (list, tuple)) else (self.c,)))
        self.d = tuple(int(x) for x in (self.d if isinstance(self.d, (list, tuple)) else (self.d,)))
        if any(x not in (0, 1) for x in self.c):
            raise ValueError("c must be 0 or 1")
        if self.field == "gf2" and any(x not in (0, 1) for x in self.d):
            raise ValueError("d must be a field element: 0 or 1 over gf2")
        if self.field == "gf4" and any(x not in range(4) for x in self.d):
            raise ValueError("d must be a field element: 0..3 over gf4")
        for name in ("max_string_len", "max_n", "budget", "jobs"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def F(self):
        return GF2 if self.field == "gf2" else GF4

    def as_dict(self) -> dict:
        """Settings that can change results; jobs and output paths are left out."""
        return {
            "field": self.field,
            "c": list(self.c),
            "d": list(self.d),
            "max_string_len": self.max_string_len,
            "max_n": self.max_n,
            "budget": self.budget,
        }


@dataclass
class Outcome:
    ok: bool
    details: dict = field(default_factory=dict)
    hypotheses: dict[str, bool] = field(default_factory=dict)


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    anchor: str
    fn: Callable[[Config], Outcome]


@dataclass
class ClaimRecord:
    id: str
    description: str
    anchor: str
    status: str
    details: dict
    hypotheses: dict
    elapsed: float | None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "anchor": self.anchor,
            "status": self.status,
            "details": self.details,
            "hypotheses": self.hypotheses,
            "elapsed": self.elapsed,
        }


REGISTRY: dict[str, Claim] = {}


def claim(cid: str, description: str, anchor: str):
    def register(fn):
        if cid in REGISTRY:
            raise ValueError(f"duplicate claim id {cid}")
        REGISTRY[cid] = Claim(cid, description, anchor, fn)
        return fn

    return register


def run_claim(c: Claim, cfg: Config) -> ClaimRecord:
    start = time.perf_counter()
    try:
        out = c.fn(cfg)
    except Skip as exc:
        out = None
        reason = str(exc)
    elapsed = round(time.perf_counter() - start, 4) if cfg.timings else None
    if out is None:
        return ClaimRecord(c.id, c.description, c.anchor, SKIPPED, {"reason": reason}, {}, elapsed)
    if not out.ok:
        status = FAIL
    elif out.hypotheses and not all(out.hypotheses.values()):
        status = CONDITIONAL
    else:
        status = PASS
    return ClaimRecord(c.id, c.description, c.anchor, status, _jsonable(out.details), dict(out.hypotheses), elapsed)


def select(selector: str = "all") -> list[Claim]:
    """All claims, one id, or every id starting with a dotted prefix."""
    if selector in ("all", "", None):
        return [REGISTRY[k] for k in sorted(REGISTRY)]
    if selector in REGISTRY:
        return [REGISTRY[selector]]
    hits = [REGISTRY[k] for k in sorted(REGISTRY) if k.startswith(selector.rstrip(".") + ".")]
    if not hits:
        raise KeyError(f"unknown claim {selector!r}")
    return hits


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (Fraction, Quad)):
        return str(x)
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return x


# shared constructions ---------------------------------------------------------------


class Skip(Exception):
    """Raised by a claim when the configuration gives it nothing to check."""


def _lambdas(cfg: Config) -> list[Algebra]:
    if not cfg.c:
        raise Skip("no values of c configured")
    return [lambda_algebra(c, cfg.F) for c in cfg.c]


def _hats(cfg: Config) -> list[Algebra]:
    if not cfg.d:
        raise Skip("no values of d configured")
    return [lambdahat_algebra(d, cfg.F) for d in cfg.d]


def _both(cfg: Config) -> list[Algebra]:
    algs = [lambda_algebra(c, cfg.F) for c in cfg.c] + [lambdahat_algebra(d, cfg.F) for d in cfg.d]
    if not algs:
        raise Skip("no values of c or d configured")
    return algs


SIX = {"S0": (0,), "S1": (1,), "M01": (0, 1), "M10": (1, 0), "M001": (0, 0, 1), "M100": (1, 0, 0)}


def _module(alg: Algebra, name: str) -> R.Rep:
    factors = SIX[name]
    if len(factors) == 1:
        return R.simple(alg, factors[0])
    return R.uniserial(alg, factors, name=name)


def _all_equal(results: dict, expected) -> bool:
    return all(v == expected for v in results.values())


# algebras -----------------------------------------------------------------------------


@claim("fig2.lambda.dim", "Lambda_c has dimension 19 with projectives of dimension 12 and 7", "dim Λ_c = 19")
def _(cfg):
    res = {a.name: [a.dim, *a.projective_dims().values()] for a in _lambdas(cfg)}
    return Outcome(_all_equal(res, [19, 12, 7]), res)


@claim("fig2.lambdahat.dim", "Lambdahat_d has dimension 38 with projectives of dimension 24 and 14", "dim Λ̂_d = 38")
def _(cfg):
    res = {a.name: [a.dim, *a.projective_dims().values()] for a in _hats(cfg)}
    return Outcome(_all_equal(res, [38, 24, 14]), res)


@claim("fig2.lambda.assoc", "structure constants of Lambda_c are associative with unit e0 + e1", "kQ/I_c")
def _(cfg):
    res = {a.name: bool(a.check_associativity() and a.check_unit()) for a in _lambdas(cfg)}
    return Outcome(all(res.values()), res)


@claim("fig2.lambdahat.assoc", "structure constants of Lambdahat_d are associative with unit", "kQ/Î_d")
def _(cfg):
    res = {a.name: bool(a.check_associativity() and a.check_unit()) for a in _hats(cfg)}
    return Outcome(all(res.values()), res)


@claim("fig3.lambda.loewy", "radical series of P0 and P1 over Lambda_c", "P_1 = 1/0/0/1/0/0/1")
def _(cfg):
    want0 = "0/0,1/0,1/0,0/0,1/0,1/0"
    want1 = "1/0/0/1/0/0/1"
    res = {a.name: [R.projective(a, 0).loewy.compact(), R.projective(a, 1).loewy.compact()] for a in _lambdas(cfg)}
    return Outcome(_all_equal(res, [want0, want1]), res)


@claim(
    "fig3.lambdahat.composition",
    "composition factors and Loewy lengths of the Lambdahat projectives",
    "P̂_0: [16, 8], P̂_1: [8, 6]",
)
def _(cfg):
    res = {}
    for a in _hats(cfg):
        P0, P1 = R.projective(a, 0), R.projective(a, 1)
        res[a.name] = [list(P0.dims), P0.loewy.length, list(P1.dims), P1.loewy.length]
    return Outcome(_all_equal(res, [[16, 8], 13, [8, 6], 13]), res)


@claim(
    "rem.surjection",
    "arrows map Lambdahat_d onto Lambda_0 and Lambda tensor P̂_i is P_i",
    "π_Λ: Λ̂ → Λ, Λ ⊗ P̂_i ≅ P_i",
)
def _(cfg):
    res, ok = {}, True
    for h in _hats(cfg):
        small = lambda_algebra(0, cfg.F)
        cert = check_surjection(h, small)
        iso = []
        for v in (0, 1):
            P = R.projective(h, v)
            gens: dict[int, list] = {x: [] for x in h.vertices}
            for rel in small.relations.relations:
                t = h.quiver.target(next(iter(rel)))
                gens[t].append(P.evaluate(rel).T)
            sub = R.spin(P, {x: np.concatenate(g) for x, g in gens.items() if g})
            Q, _ = R.quotient(P, sub)
            iso.append(R.is_isomorphic(Q, R.inflate(R.projective(small, v), h)))
        res[h.name] = {"relations_vanish": cert.holds, "tensor_projectives": iso}
        ok &= cert.holds and all(iso)
    return Outcome(ok, res)


@claim("fig1.cartan.s5", "Cartan matrix of Lambda_c equals DᵀD for the S5 block", "C = DᵀD = [[8,4],[4,3]]")
def _(cfg):
    D_ = C.decomposition_matrix(C.S5_TABLE, C.principal_block(C.S5_TABLE), columns=("phi0", "phi1"))
    want = C.cartan_from_decomp(D_)
    res = {a.name: cartan(a).tolist() for a in _lambdas(cfg)}
    return Outcome(want == [[8, 4], [4, 3]] and _all_equal(res, want), {"decomp": want, **res})


@claim("fig1.cartan.s5hat", "Cartan matrix of Lambdahat_d equals DᵀD for the cover's block", "C = DᵀD = [[16,8],[8,6]]")
def _(cfg):
    D_ = C.decomposition_matrix(C.HAT_S5, C.principal_block(C.HAT_S5), columns=("phi0", "phi1"))
    want = C.cartan_from_decomp(D_)
    res = {a.name: cartan(a).tolist() for a in _hats(cfg)}
    return Outcome(want == [[16, 8], [8, 6]] and _all_equal(res, want), {"decomp": want, **res})


# character tables -----------------------------------------------------------------------


@claim("fig5.orthogonality", "row and column orthogonality of the 12 x 12 table", "⟨ψ_i, ψ_j⟩ = δ_ij")
def _(cfg):
    rows, cols = C.row_orthogonality(C.HAT_S5), C.column_orthogonality(C.HAT_S5)
    return Outcome(rows and cols, {"rows": rows, "columns": cols})


@claim("fig5.degrees", "squared degrees sum to the group orders 240 and 120", "Σ ψ_i(1)² = 240")
def _(cfg):
    a, b = C.degree_square_sum(C.HAT_S5), C.degree_square_sum(C.S5_TABLE)
    return Outcome(a == 240 == C.HAT_S5.order and b == 120 == C.S5_TABLE.order, {"cover": a, "S5": b})


@claim("fig5.checksum", "embedded tables match their frozen checksums", "ψ_1, …, ψ_12")
def _(cfg):
    try:
        C.verify_checksums()
        return Outcome(True, {t.group: t.checksum() for t in (C.HAT_S5, C.S5_TABLE)})
    except C.ChecksumMismatch as exc:
        return Outcome(False, {"error": str(exc)})


@claim("fig5.s5subtable", "the S5 table is orthogonal and equals the inflated rows", "χ_1, …, χ_5 ↔ ψ_1, …, ψ_4, ψ_6")
def _(cfg):
    same = C.s5_table_from_cover() == C.S5_TABLE.rows
    orth = C.row_orthogonality(C.S5_TABLE) and C.column_orthogonality(C.S5_TABLE)
    return Outcome(same and orth, {"matches_cover": same, "orthogonal": orth})


@claim("fig5.spin", "characters with ψ(z) = -ψ(1) are exactly ψ5, ψ7, ψ8, ψ11, ψ12", "ψ(C_2) = -ψ(C_1)")
def _(cfg):
    got = C.spin_rows(C.HAT_S5)
    return Outcome(got == ["psi5", "psi7", "psi8", "psi11", "psi12"], {"rows": got})


@claim("fig5.linear", "exactly two linear characters, so the abelian quotient has order 2", "ψ_1, ψ_2")
def _(cfg):
    linear = [n for n, d in zip(C.HAT_S5.names, C.HAT_S5.degrees) if d == 1]
    return Outcome(linear == ["psi1", "psi2"], {"linear": linear})


@claim("fig1.blocks.s5hat", "central characters mod 2 put ψ1..ψ8 in the principal block", "B̂: ψ_1, …, ψ_8")
def _(cfg):
    blocks = C.block_partition(C.HAT_S5)
    return Outcome(blocks[0] == [f"psi{i}" for i in range(1, 9)], {"blocks": blocks})


@claim("fig1.blocks.s5", "central characters mod 2 put χ1..χ5 in the principal block", "B: χ_1, …, χ_5")
def _(cfg):
    blocks = C.block_partition(C.S5_TABLE)
    return Outcome(blocks[0] == ["chi1", "chi2", "chi3", "chi4", "chi5"], {"blocks": blocks})


@claim("fig1.decomp.s5", "decomposition matrix of the S5 principal block", "D_B")
def _(cfg):
    got = C.decomposition_matrix(C.S5_TABLE, C.principal_block(C.S5_TABLE), columns=("phi0", "phi1")).as_lists()
    return Outcome(got == [[1, 0], [1, 0], [1, 1], [1, 1], [2, 1]], {"D": got})


@claim("fig1.decomp.s5hat", "decomposition matrix of the cover's principal block", "D_B̂")
def _(cfg):
    got = C.decomposition_matrix(C.HAT_S5, C.principal_block(C.HAT_S5), columns=("phi0", "phi1")).as_lists()
    want = [[1, 0], [1, 0], [1, 1], [1, 1], [0, 1], [2, 1], [2, 1], [2, 1]]
    return Outcome(got == want, {"D": got})


@claim("fig6.reconstruct", "every ordinary row on 2-regular classes is D times the Brauer table", "φ_0, φ_1, φ_2")
def _(cfg):
    ok, bad = True, []
    for t in (C.HAT_S5, C.S5_TABLE):
        names = list(t.names)
        D_ = C.decomposition_matrix(t, names)
        for n, row in zip(names, C.reconstruct(D_)):
            if [Fraction(v) for v in row] != C.regular_values(t, n):
                ok = False
                bad.append(n)
    outside = C.decomposition_matrix(C.HAT_S5, ["psi9", "psi10", "psi11", "psi12"]).as_lists()
    ok &= outside == [[0, 0, 1]] * 4
    return Outcome(ok, {"mismatches": bad, "psi9..psi12": outside})


@claim("rem3.1.galois", "ψ7, ψ8 are swapped by √2 ↦ -√2 and ψ11, ψ12 by √3 ↦ -√3", "F(√2)")
def _(cfg):
    t = C.HAT_S5
    a = C.galois_pair_check(t, "psi7", "psi8")
    b = C.galois_pair_check(t, "psi11", "psi12", "sqrt3")
    c = not C.galois_pair_check(t, "psi1", "psi2")
    summed = all((x + y).is_rational() for x, y in zip(t.row("psi7"), t.row("psi8")))
    return Outcome(a and b and c and summed, {"psi7~psi8": a, "psi11~psi12": b, "psi7+psi8 rational": summed})


@claim("thm1.1b.iv.classsum", "class sum of C9 acts on (ψ6, ψ7) by (0, 5√2)", "(0, 5√2)")
def _(cfg):
    pair = C.class_sum_pair()
    trivial = C.central_character(C.HAT_S5, "psi1", "C9")
    return Outcome(pair == (Quad(0), 5 * SQRT2) and trivial == Quad(30), {"pair": [str(x) for x in pair]})


@claim("thm1.1b.iv.minpoly", "minimal polynomial x³ - 50x rescales to 125(t³ - 2t)", "W[[t]]/(t^3-2t)")
def _(cfg):
    p = C.minpoly_of_tuple(C.class_sum_pair())
    lead, monic = C.rescale_check(p, 5)
    ok = p == (0, -50, 0, 1) and lead == 125 and monic == (0, -2, 0, 1) and val2(50) == 1 and val2(25) == 0
    return Outcome(ok, {"minpoly": C.poly_str(p), "rescaled": f"{lead}({C.poly_str(monic, 't')})", "val2(50)": val2(50)})


@claim("thm1.1b.iv.character", "ψ6 + ψ7 + ψ8 has degree 18 = 3 · 6 and lies over the T1 column", "χ_Z = ψ_6+(ψ_7+ψ_8)")
def _(cfg):
    t = C.HAT_S5
    deg = sum(t.degrees[t.index(n)] for n in ("psi6", "psi7", "psi8"))
    D_ = C.decomposition_matrix(t, ["psi6", "psi7", "psi8"], columns=("phi0", "phi1")).as_lists()
    return Outcome(deg == 18 and all(r[1] == 1 for r in D_), {"degree": deg, "rows": D_})


# group-level modules ------------------------------------------------------------------------


@claim("grp.abelianization", "S5 / [S5, S5] has order 2 and A5 is perfect", "W[Z/2]")
def _(cfg):
    s, a = G.abelianization_order(G.S5), G.abelianization_order(G.A5)
    return Outcome(s == 2 and a == 1, {"S5": s, "A5": a})


@claim("grp.t1", "the 4-dimensional simple T1 has Brauer values (4, -2, -1)", "φ_1 = (4, -2, -1)")
def _(cfg):
    T1 = G.natural_simple(gf_field(cfg.F.e))
    vals = G.brauer_character(T1)
    simple = T1.is_simple()
    return Outcome(T1.dim == 4 and simple and vals == (4, -2, -1), {"dim": T1.dim, "simple": simple, "brauer": vals})


@claim("grp.brauer", "Brauer characters of T0, T1 and the 5-point heart match the table", "φ_0, φ_1, φ_2")
def _(cfg):
    got = {
        "T0": G.brauer_character(G.trivial(G.S5)),
        "T1": G.brauer_character(G.natural_simple()),
        "D5": G.brauer_character(G.deleted_permutation_module()),
    }
    want = {"T0": (1, 1, 1), "T1": (4, -2, -1), "D5": (4, 1, -1)}
    return Outcome(got == want, got)


@claim("grp.res_c.t1", "T1 restricted to C = <(1,2)> is kC ⊕ kC", "Res_C T_1 ≅ kC ⊕ kC")
def _(cfg):
    r = G.restrict_to_c2(G.natural_simple())
    return Outcome(r == (2, 0), {"free": r[0], "trivial": r[1]})


@claim("grp.res_c.t00", "T00 restricted to C is kC", "Res_C T_00 ≅ kC")
def _(cfg):
    M = G.t00()
    r = G.restrict_to_c2(M)
    return Outcome(r == (1, 0) and G.restrict_to_c2(G.trivial(G.S5)) == (0, 1), {"free": r[0], "trivial": r[1]})


@claim("grp.res_c.v", "both 5-dimensional uniserials T0/T1 and T1/T0 restrict to k ⊕ (kC)²", "Res_C V ≅ k ⊕ (kC)^2")
def _(cfg):
    res = {}
    for V in (G.uniserial_t0_over_t1(), G.uniserial_t1_over_t0()):
        res[V.name] = [V.dim, *G.restrict_to_c2(V), G.composition_dims(V)]
    return Outcome(_all_equal(res, [5, 2, 1, [1, 4]]), res)


@claim("grp.res_c.u", "V ⊗ T00 is 10-dimensional and restricts to (kC)⁵", "Res_C U ≅ (kC)^5")
def _(cfg):
    res = {}
    for V in (G.uniserial_t0_over_t1(), G.uniserial_t1_over_t0()):
        U = V.tensor(G.t00())
        res[V.name] = [U.dim, *G.restrict_to_c2(U)]
    return Outcome(_all_equal(res, [10, 5, 0]), res)


@claim("grp.ind", "Ind from A5 of E is T1 over GF(4); Res T1 = E ⊕ E' with E, E' distinct", "T_1 ≅ Ind_{A_5}^{S_5} E")
def _(cfg):
    T4 = G.natural_simple().extend_field(GF4)
    E, E2 = G.split_restriction(T4)
    ind = G.induce_from_a5(E)
    iso = G.group_isomorphic(ind, T4)
    distinct = not G.group_isomorphic(E, E2)
    simple = E.is_simple() and E2.is_simple()
    ok = E.dim == E2.dim == 2 and ind.dim == 4 and iso and distinct and simple
    return Outcome(ok, {"Ind E ≅ T1": iso, "E ≇ E'": distinct, "E, E' simple": simple})


# string modules -----------------------------------------------------------------------------


@claim("list3.1.classification", "string modules with End = k are exactly the six of the list", "End_Λ(M) ≅ k")
def _(cfg):
    want = ["1_0", "1_1", "b", "g", "a g", "b a"]
    res, ok = {}, True
    for a in _lambdas(cfg):
        cl = S.classify_end_k(a, maxlen=cfg.max_string_len)
        names = [str(w) for w, _ in cl.modules]
        matched = sorted(next((n for n in SIX if R.is_isomorphic(M, _module(a, n))), "?") for _, M in cl.modules)
        good = sorted(names) == sorted(want) and matched == sorted(SIX) and cl.others_at_least_two
        res[a.name] = {
            "modules": names,
            "matched": matched,
            "strings": len(cl.end_dims),
            "others_at_least_two": cl.others_at_least_two,
            "checked": cl.numeric_checked,
        }
        ok &= good
    return Outcome(ok, res)


@claim("list3.1.band", "the small band module has a non-scalar endomorphism", "End ≠ k")
def _(cfg):
    res, ok = {}, True
    for a in _lambdas(cfg):
        cl = S.classify_end_k(a, maxlen=min(cfg.max_string_len, 6))
        found = dict(cl.bands)
        res[a.name] = found
        ok &= bool(found) and all(found.values())
    return Outcome(ok, res)


@claim("string.socle_quotient", "Lambda_c modulo its socle is a monomial string algebra", "Λ/soc(Λ)")
def _(cfg):
    res = {}
    for a in _lambdas(cfg):
        q = S.socle_quotient(a)
        res[a.name] = {"zero_relations": sorted(q.zero_relations), "dims": [q.socle_dim, q.quotient_dim]}
    ok = all(v["dims"] == [2, 17] for v in res.values())
    return Outcome(ok, res)


# Ext and syzygies ----------------------------------------------------------------------------


@claim("ext1.simples", "Ext¹ between simples counts arrows, by cocycles and by syzygies", "Ext^1(S_i, S_j)")
def _(cfg):
    res, ok = {}, True
    for a in _both(cfg):
        S_ = [R.simple(a, 0), R.simple(a, 1)]
        coc = [[R.ext1_dim_cocycles(S_[i], S_[j]) for j in (0, 1)] for i in (0, 1)]
        syz = [[R.ext(S_[i], S_[j]) for j in (0, 1)] for i in (0, 1)]
        res[a.name] = {"cocycles": coc, "syzygy": syz}
        ok &= coc == syz == [[1, 1], [1, 0]]
    return Outcome(ok, res)


@claim("lemma4.1.ext1", "Ext¹(V, V) is 1 for the four uniserials and 0 for S1", "Ext^1(V,V) ≅ k")
def _(cfg):
    res, ok = {}, True
    for a in _both(cfg):
        row = {}
        for n in ("S1", "M01", "M10", "M001", "M100"):
            M = _module(a, n)
            row[n] = [R.ext1_dim_cocycles(M, M), R.ext(M, M)]
            ok &= row[n] == ([0, 0] if n == "S1" else [1, 1])
        res[a.name] = row
    return Outcome(ok, res)


@claim("lemma4.1.ext2", "Ext² of M001 and M100 over Lambdahat is one-dimensional", "Ext^2 ... ≅ k")
def _(cfg):
    res, ok = {}, True
    for a in _hats(cfg):
        row = {}
        for n in ("M001", "M100"):
            M = _module(a, n)
            W = R.syzygy_power(M, 2)
            row[n] = {"dim_omega2": W.dim, "hom": R.hom(W, M).dim, "ext2": R.stable_hom(W, M).dim}
            ok &= row[n]["hom"] == 2 and row[n]["ext2"] == 1
        ok &= row["M001"]["dim_omega2"] == 17
        res[a.name] = row
    return Outcome(ok, res)


@claim("thm1.1a.stable_end", "the six modules have stable End = k on both algebras", "End_k̲(V) ≅ k")
def _(cfg):
    res, ok = {}, True
    for a in _both(cfg):
        row = {n: [R.end(_module(a, n)).dim, R.stable_hom(_module(a, n), _module(a, n)).dim] for n in SIX}
        ok &= all(v[1] == 1 for v in row.values())
        res[a.name] = row
    return Outcome(ok, res)


@claim("thm1.1b.iv.omega", "the syzygy of S1 over Lambda is the uniserial X on (0,0,1,0,0,1)", "X ≅ Ω(T_1)")
def _(cfg):
    res, ok = {}, True
    for a in _lambdas(cfg):
        X = R.uniserial(a, (0, 0, 1, 0, 0, 1), name="X")
        W = R.syzygy(R.simple(a, 1))
        iso = R.is_isomorphic(W, X)
        back = R.is_isomorphic(R.cosyzygy(W), R.simple(a, 1))
        res[a.name] = {"Omega(S1) ≅ X": iso, "Omega^-1 Omega(S1) ≅ S1": back}
        ok &= iso and back
    return Outcome(ok, res)


@claim("uniserial.existence", "the four uniserials exist uniquely, and none with factors (1,1)", "M_{01}, M_{10}, M_{001}, M_{100}")
def _(cfg):
    res, ok = {}, True
    for a in _both(cfg):
        built = {n: R.is_indecomposable(_module(a, n)) for n in ("M01", "M10", "M001", "M100")}
        try:
            R.uniserial(a, (1, 1))
            none11 = False
        except R.NoSuchUniserial:
            none11 = True
        res[a.name] = {**built, "no (1,1)": none11}
        ok &= all(built.values()) and none11
    return Outcome(ok, res)


# lifts -------------------------------------------------------------------------------------


def _depths(cfg: Config, algs, names) -> dict:
    out = {}
    for a in algs:
        row = {}
        for n in names:
            rep = D.truncation_depth(_module(a, n), cfg.max_n, cfg.budget)
            row[n] = {"depth": rep.depth, "certified": rep.certified, "searches": [s.transcript() for s in rep.searches]}
            if cfg.verbose:
                row[n]["chain"] = [c.describe(True) for c in rep.chain]
        out[a.name] = row
    return out


def _depth_claim(cfg, algs, names, want) -> Outcome:
    res = _depths(cfg, algs, names)
    ok = all(v["depth"] == want and v["certified"] for row in res.values() for v in row.values())
    return Outcome(ok, res)


@claim("thm1.1b.i.depth", "S0 has truncation depth 2 on both algebras", "R(S_5,V) ≅ W[Z/2]")
def _(cfg):
    return _depth_claim(cfg, _both(cfg), ["S0"], 2)


@claim("thm1.1b.ii.depth", "S1 has truncation depth 1 on both algebras", "R(S_5,V) ≅ k")
def _(cfg):
    return _depth_claim(cfg, _both(cfg), ["S1"], 1)


@claim("thm1.1b.iii.depth", "the length-2 uniserials have depth 2 on both algebras", "R(S_5,V) ≅ W[Z/2]")
def _(cfg):
    return _depth_claim(cfg, _both(cfg), ["M01", "M10"], 2)


@claim("thm1.1b.iv.depth.lambda", "the length-3 uniserials have depth 2 over Lambda", "W[[t]]/(t^2,2t)")
def _(cfg):
    return _depth_claim(cfg, _lambdas(cfg), ["M001", "M100"], 2)


@claim("thm1.1b.iv.depth.lambdahat", "the length-3 uniserials have depth 3 over Lambdahat", "W[[t]]/(t^3-2t)")
def _(cfg):
    return _depth_claim(cfg, _hats(cfg), ["M001", "M100"], 3)


@claim("thm1.1b.i.obstruction", "the order-2 lift of S0 has no extension to order 3", "k[t]/(t^2)")
def _(cfg):
    res, ok, hyp = {}, True, {}
    for a in _lambdas(cfg):
        lifts = [l for l in D.order_two_lifts(R.simple(a, 0), cfg.budget) if not D.is_trivial_lift(l)]
        search = D.extension_search(lifts[0], cfg.budget)
        res[a.name] = {"order2_total": lifts[0].total.loewy.compact(), **search.transcript()}
        hyp[f"{a.name}: Ext^1(L,V)=0"] = search.split_hypothesis
        ok &= len(lifts) == 1 and not search.lifts
    return Outcome(ok, res, hyp)


@claim("thm1.1b.iii.witness", "U is an order-2 lift of M01; over Lambdahat it does not extend", "(U, ν) over k[ε]/(ε^2)")
def _(cfg):
    res, ok, hyp = {}, True, {}
    for a in _both(cfg):
        U = D.witness_u(a)
        nontrivial = not D.is_trivial_lift(U)
        split = D.split_hypothesis(U)
        search = D.extension_search(U, cfg.budget)
        res[a.name] = {"rank_profile": U.rank_profile, "nontrivial": nontrivial, **search.transcript()}
        hyp[f"{a.name}: Ext^1(U,V)=0"] = split
        ok &= nontrivial and not search.lifts
    return Outcome(ok, res, hyp)


@claim("thm1.1b.iv.witness_x", "X is an order-2 lift of M001 and does not extend over Lambda", "(X, ξ)")
def _(cfg):
    res, ok, hyp = {}, True, {}
    for a in _lambdas(cfg):
        X = D.witness_x(a)
        search = D.extension_search(X, cfg.budget)
        res[a.name] = {"total": X.total.loewy.compact(), **search.transcript()}
        hyp[f"{a.name}: Ext^1(X,V)=0"] = D.split_hypothesis(X)
        ok &= X.total.loewy.compact() == "0/0/1/0/0/1" and not search.lifts
    return Outcome(ok, res, hyp)


@claim("thm1.1b.iv.witness_y", "over Lambdahat, X extends to the order-3 lift Y, which does not extend", "(Y, ζ) over k[t]/(t^3)")
def _(cfg):
    res, ok, hyp = {}, True, {}
    for a in _hats(cfg):
        X, Y = D.witness_x(a), D.witness_y(a)
        ext_x = D.extend_lift(X, cfg.budget)
        contains = any(D.lifts_isomorphic(l, Y) for l in ext_x)
        reduces = D.lifts_isomorphic(D.reduce_lift(Y, 2), X)
        search = D.extension_search(Y, cfg.budget)
        res[a.name] = {
            "Y": Y.total.loewy.compact(),
            "extensions_of_X": len(ext_x),
            "contains_Y": contains,
            "Y reduces to X": reduces,
            **search.transcript(),
        }
        hyp[f"{a.name}: Ext^1(Y,V)=0"] = D.split_hypothesis(Y)
        ok &= Y.total.loewy.compact() == "0/0/1/0/0/1/0/0/1" and contains and reduces and not search.lifts
    return Outcome(ok, res, hyp)


@claim("lemma2.2.omega", "S0, S1 and their syzygies have equal depths", "R(G,V) ≅ R(G,Ω(V))")
def _(cfg):
    res = {a.name: {n: D.omega_depth_consistency(_module(a, n), cfg.max_n, cfg.budget) for n in ("S0", "S1")} for a in _both(cfg)}
    return Outcome(all(v for row in res.values() for v in row.values()), res)


@claim("deform.ext_consistency", "order-2 lifts up to isomorphism number the lines of Ext¹ plus one", "Ext^1(V,V) ≅ k")
def _(cfg):
    res, ok = {}, True
    q = cfg.F.order
    for a in _both(cfg):
        row = {}
        for n in SIX:
            M = _module(a, n)
            e = R.ext1_dim_cocycles(M, M)
            lines = (q**e - 1) // (q - 1)
            got = len(D.order_two_lifts(M, cfg.budget))
            row[n] = [got, lines + 1]
            ok &= got == lines + 1
        res[a.name] = row
    return Outcome(ok, res)


@claim("deform.monotonicity", "inflated lifts stay lifts and depth over Lambdahat is at least that over Lambda", "Λ̂ → Λ")
def _(cfg):
    res, ok = {}, True
    for h in _hats(cfg):
        small = lambda_algebra(0, cfg.F)
        row = {}
        for n in SIX:
            dl = D.truncation_depth(_module(small, n), cfg.max_n, cfg.budget).depth
            dh = D.truncation_depth(_module(h, n), cfg.max_n, cfg.budget).depth
            row[n] = [dl, dh]
            ok &= dh >= dl
        inflated = D.witness_x(h)  # built over Lambda_0 and inflated
        row["X inflated"] = inflated.rank_profile
        res[h.name] = row
    return Outcome(ok, res)


@claim("deform.freeness", "witness lifts have the free rank profile", "free over k[t]/(t^n)")
def _(cfg):
    res, ok = {}, True
    for a in _both(cfg):
        row = {"U": D.witness_u(a).rank_profile, "X": D.witness_x(a).rank_profile, "X'": D.witness_x_top(a).rank_profile}
        if a.kind == "lambdahat":
            row["Y"] = D.witness_y(a).rank_profile
            row["Y'"] = D.witness_y_top(a).rank_profile
        for k, prof in row.items():
            n = len(prof) - 1
            base = prof[0] // n
            ok &= prof == [(n - j) * base for j in range(n + 1)]
        res[a.name] = row
    return Outcome(ok, res)
