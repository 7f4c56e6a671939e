"""Lifts of modules over the truncated polynomial rings k[t]/(t^n).

A lift of V of order n is a module L with a nilpotent endomorphism t such that L
is free over k[t]/(t^n) and L/tL is isomorphic to V.  Extending a lift by one
order means choosing an extension 0 -> V -> E -> L -> 0 together with an
endomorphism of E that kills V, induces t on L and has the right rank profile;
``extension_search`` enumerates those exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from . import rep as R
from .algebra import Algebra, lambda_algebra
from .rep import Map, Rep, SearchBudgetExceeded

DEFAULT_BUDGET = 1 << 24


class NotNilpotent(ValueError):
    pass


class NotFree(ValueError):
    pass


class WrongReduction(ValueError):
    pass


class HypothesisFailed(ValueError):
    pass


@dataclass
class Lift:
    base: Rep
    total: Rep
    t: Map
    order: int

    @property
    def rank_profile(self) -> list[int]:
        F = self.total.F
        out, power = [], self.total.identity()
        for _ in range(self.order + 1):
            out.append(R.map_rank(power, F))
            power = R.compose(self.t, power, F)
        return out

    def describe(self, verbose: bool = False) -> dict:
        out = {
            "order": self.order,
            "base": self.base.name,
            "total_dims": list(self.total.dims),
            "rank_profile": self.rank_profile,
            "total_loewy": self.total.loewy.compact(),
        }
        if verbose:
            out["arrows"] = {a: m.tolist() for a, m in sorted(self.total.mats.items())}
            out["t"] = {str(v): m.tolist() for v, m in sorted(self.t.items())}
        return out


def make_lift(v: Rep, total: Rep, t: Map, order: int | None = None) -> Lift:
    """Validate (total, t) as a lift of v; the order defaults to dim total / dim v."""
    v.same_algebra(total)
    F = v.F
    if not total.is_intertwiner(t, total):
        raise ValueError("t is not a module endomorphism")
    if order is None:
        if v.dim == 0 or total.dim % v.dim:
            raise NotFree(f"dimension {total.dim} is not a multiple of {v.dim}")
        order = total.dim // v.dim
    profile, power = [], total.identity()
    for _ in range(order + 1):
        profile.append(R.map_rank(power, F))
        power = R.compose(t, power, F)
    if profile[-1] != 0:
        raise NotNilpotent(f"t^{order} has rank {profile[-1]}")
    expected = [(order - j) * v.dim for j in range(order + 1)]
    if profile != expected:
        raise NotFree(f"rank profile {profile}, expected {expected}")
    red, _ = R.quotient(total, R.image_of(t, total, total))
    if not R.is_isomorphic(red, v):
        raise WrongReduction("total / t total is not isomorphic to the base module")
    return Lift(v, total, t, order)


def trivial_lift(v: Rep, order: int) -> Lift:
    """v tensor k[t]/(t^n): n copies of v with t shifting copy i to copy i+1."""
    total = R.direct_sum(*([v] * order))
    t = {}
    for x in v.vertices:
        d = v.dims[x]
        m = la.zeros(order * d, order * d)
        for i in range(order - 1):
            m[(i + 1) * d : (i + 2) * d, i * d : (i + 1) * d] = la.identity(d)
        t[x] = m
    total.name = f"{v.name}[t]/t^{order}"
    return Lift(v, total, t, order)


def base_lift(v: Rep) -> Lift:
    return trivial_lift(v, 1)


def reduce_lift(l: Lift, order: int) -> Lift:
    """The order-m truncation L / t^m L with the induced t."""
    F = l.total.F
    power = l.total.identity()
    for _ in range(order):
        power = R.compose(l.t, power, F)
    Q, proj = R.quotient(l.total, R.image_of(power, l.total, l.total))
    return Lift(l.base, Q, R.induced_on_quotient(l.t, l.total, proj, Q), order)


# lift isomorphism ------------------------------------------------------------------


def _pair_hom_system(a: Lift, b: Lift) -> np.ndarray:
    """Module maps f: a.total -> b.total with f t_a = t_b f, as a linear system."""
    M, N = a.total, b.total
    F = M.F
    base = R._hom_system(M, N)
    offsets, pos = {}, 0
    for v in M.vertices:
        offsets[v] = pos
        pos += N.dims[v] * M.dims[v]
    blocks = [base]
    for v in M.vertices:
        dm, dn = M.dims[v], N.dims[v]
        if not dm * dn:
            continue
        rows = la.zeros(dn * dm, pos)
        comm = la.kron(la.identity(dn), a.t[v].T.copy(), F) ^ la.kron(b.t[v], la.identity(dm), F)
        rows[:, offsets[v] : offsets[v] + dn * dm] = comm
        blocks.append(rows)
    return np.concatenate(blocks)


def _pair_hom(a: Lift, b: Lift) -> R.HomSpace:
    sysm = _pair_hom_system(a, b)
    return R.HomSpace(a.total, b.total, la.kernel_basis(sysm, a.total.F, sysm.shape[1]))


def _indecomposable(v: Rep) -> bool:
    cached = getattr(v, "_indecomposable", None)
    if cached is None:
        cached = R.is_indecomposable(v)
        v._indecomposable = cached
    return cached


def lifts_isomorphic(a: Lift, b: Lift, budget: int = DEFAULT_BUDGET, trials: int = 64, seed: int = 0) -> bool:
    """Isomorphism of (module, t) pairs.

    A lift of an indecomposable module is indecomposable (a summand B with B = tB
    vanishes), so its endomorphism ring is local and a and b are isomorphic exactly
    when some composite g f of basis maps a -> b -> a is not nilpotent.
    """
    if a.order != b.order or a.total.dims != b.total.dims:
        return False
    F = a.total.F
    H = _pair_hom(a, b)
    if H.dim == 0:
        return a.total.dim == 0
    if _indecomposable(a.base) and _indecomposable(b.base):
        back = _pair_hom(b, a)
        return any(not R.map_is_nilpotent(R.compose(g, f, F), F) for f in H.basis for g in back.basis)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        if R.map_is_invertible(H.combination(rng.integers(0, F.order, size=H.dim)), F):
            return True
    if F.order**H.dim > budget:
        raise SearchBudgetExceeded(f"{F.order}^{H.dim} candidate lift isomorphisms")
    return any(R.map_is_invertible(H.combination(c), F) for c in itertools.product(range(F.order), repeat=H.dim))


def is_trivial_lift(l: Lift) -> bool:
    return lifts_isomorphic(l, trivial_lift(l.base, l.order))


def rescale_lift(l: Lift, lam: int) -> Lift:
    """The same module with t replaced by lam * t, lam a nonzero scalar."""
    return Lift(l.base, l.total, R.scale_map(lam, l.t, l.total.F), l.order)


def lifts_equivalent(a: Lift, b: Lift, budget: int = DEFAULT_BUDGET) -> bool:
    """Isomorphic after rescaling t on one side.

    Rescaling is an automorphism of k[t]/(t^n), so it never changes whether a lift
    extends; over GF(2) this is plain isomorphism.
    """
    return any(lifts_isomorphic(a, rescale_lift(b, lam), budget) for lam in range(1, a.total.F.order))


def dedupe_lifts(lifts: list[Lift], up_to_scaling: bool = True) -> list[Lift]:
    same = lifts_equivalent if up_to_scaling else lifts_isomorphic
    out: list[Lift] = []
    for l in lifts:
        if not any(same(l, m) for m in out):
            out.append(l)
    return out


# extension search ------------------------------------------------------------------


@dataclass
class ExtensionSearch:
    source: Lift
    lifts: list[Lift]
    ext_dim: int  # dim Ext^1(L, V)
    hom_dim: int  # dim Hom(L, V)
    classes_tried: int
    classes_solvable: int
    candidates_tried: int
    split_hypothesis: bool = field(init=False)

    def __post_init__(self):
        self.split_hypothesis = self.ext_dim == 0

    def transcript(self) -> dict:
        return {
            "from_order": self.source.order,
            "to_order": self.source.order + 1,
            "ext1_L_V": self.ext_dim,
            "ambient": "V ⊕ L" if self.split_hypothesis else "all extension classes",
            "hom_L_V": self.hom_dim,
            "classes_tried": self.classes_tried,
            "classes_solvable": self.classes_solvable,
            "candidates_tried": self.candidates_tried,
            "lifts_found": len(self.lifts),
        }


def _shift_system(L: Rep, V: Rep, Z: dict[str, np.ndarray], t: Map):
    """Affine system for s: L -> V with s_t L_a + V_a s_s = Z_a t_s for every arrow a.

    Returns (matrix, rhs) over the flattened unknowns laid out as in the hom system.
    """
    F = L.F
    sysm = R._hom_system(L, V)
    rhs = []
    for a, (s, tt) in sorted(L.alg.arrows.items()):
        rhs.append(la.matmul(Z[a], t[s], F).reshape(-1))
    return sysm, np.concatenate(rhs) if rhs else np.zeros(0, np.uint8)


def _shift_matrices(l: Lift, s: Map) -> Map:
    """The endomorphism [[0, s], [0, t]] of an extension of l.total by l.base."""
    V, L = l.base, l.total
    t = {}
    for x in L.vertices:
        dv, dl = V.dims[x], L.dims[x]
        m = la.zeros(dv + dl, dv + dl)
        m[:dv, dv:] = s[x]
        m[dv:, dv:] = l.t[x]
        t[x] = m
    return t


def _shift_directions(l: Lift, H: R.HomSpace) -> np.ndarray:
    """Hom(L, V) modulo {k t}: conjugating by [[1, k], [0, 1]] moves s to s + k t."""
    F = l.base.F
    moved = la.asmat([R.flatten(R.compose(k, l.t, F)) for k in H.basis], H.vectors.shape[1])
    return la.asmat(H.vectors[la.independent_rows(moved, H.vectors, F)], H.vectors.shape[1])


def reduction_map(l: Lift) -> Map:
    """A module map L -> V with kernel tL (exists since L/tL is isomorphic to V).

    Maps L -> V killing tL form a copy of End(V), which is local because V is
    indecomposable; one of its basis elements is then a unit.
    """
    V, L = l.base, l.total
    F = V.F
    if l.order == 1:
        return V.identity()
    H = R.hom(L, V)
    images = la.asmat([R.flatten(R.compose(h, l.t, F)) for h in H.basis], sum(V.dims[x] * L.dims[x] for x in L.vertices))
    killers = la.kernel_basis(images.T.copy(), F, H.dim) if H.dim else la.zeros(0, 0)
    for coeffs in killers:
        h = H.combination(coeffs)
        if R.map_rank(h, F) == V.dim:
            return h
    rng = np.random.default_rng(0)
    for _ in range(256):
        mix = la.zeros(1, H.dim)[0]
        for c, r in zip(rng.integers(0, F.order, size=killers.shape[0]), killers):
            if c:
                mix ^= F.mul_table[c, r]
        h = H.combination(mix)
        if R.map_rank(h, F) == V.dim:
            return h
    raise WrongReduction("no map L -> V with kernel tL")


def extension_search(l: Lift, budget: int = DEFAULT_BUDGET, dedupe: bool = True) -> ExtensionSearch:
    """All lifts of order n+1 whose truncation to order n is l, up to isomorphism.

    The total module is an extension E of l.total by the base V (the split one when
    Ext^1(L, V) = 0) and the new t is [[0, s], [0, t]] with s solving an affine
    system.  The composite s t^(n-1) kills tL and induces the isomorphism
    E/tE -> V; conjugating by [[a, 0], [0, 1]] with a in Aut(V) moves it onto the
    fixed reduction map, so only those s are enumerated.  Freeness then follows:
    t^n has rank dim V on a space of dimension (n+1) dim V, which forces every
    Jordan block to have full size n+1.
    """
    V, L = l.base, l.total
    F = V.F
    ext = R.ext1_cocycles(L, V)
    H = R.hom(L, V)
    dirs = _shift_directions(l, H)
    psi = R.flatten(reduction_map(l))
    tpow = L.identity()
    for _ in range(l.order - 1):
        tpow = R.compose(l.t, tpow, F)
    sigma = la.asmat([R.flatten(R.compose(R.unflatten(d, L, V), tpow, F)) for d in dirs], psi.size)
    free_dirs = la.kernel_basis(sigma.T.copy(), F, dirs.shape[0]) if dirs.shape[0] else la.zeros(0, 0)
    nclasses = F.order**ext.dim
    if nclasses * F.order ** free_dirs.shape[0] > budget:
        raise SearchBudgetExceeded(
            f"{nclasses} classes x {F.order}^{free_dirs.shape[0]} shifts exceed the budget {budget}"
        )
    layout_len = R._cocycle_layout(L, V)[1]
    found: list[Lift] = []
    tried = solvable = 0
    for coeffs in itertools.product(range(F.order), repeat=ext.dim):
        vec = la.zeros(1, layout_len)[0]
        for c, r in zip(coeffs, ext.classes):
            if c:
                vec ^= F.mul_table[c, r]
        Z = R._cocycle_to_dict(vec, L, V)
        sysm, rhs = _shift_system(L, V, Z, l.t)
        try:
            s0 = la.solve(sysm, rhs.reshape(-1, 1), F)[:, 0]
        except la.NoSolution:
            continue
        # move s0 within s0 + span(dirs) so that s0 t^(n-1) = psi
        sigma0 = R.flatten(R.compose(R.unflatten(s0, L, V), tpow, F))
        try:
            c0 = la.solve(sigma.T.copy(), (sigma0 ^ psi).reshape(-1, 1), F)[:, 0] if dirs.shape[0] else None
        except la.NoSolution:
            continue
        if c0 is None and (sigma0 ^ psi).any():
            continue
        if c0 is not None:
            for c, r in zip(c0, dirs):
                if c:
                    s0 = s0 ^ F.mul_table[c, r]
        solvable += 1
        E = R.extension(L, V, Z, name=f"{V.name}~{l.order + 1}")
        for hc in itertools.product(range(F.order), repeat=free_dirs.shape[0]):
            tried += 1
            vec_s = s0.copy()
            for c, fd in zip(hc, free_dirs):
                if not c:
                    continue
                for cc, r in zip(fd, dirs):
                    if cc:
                        vec_s ^= F.mul_table[F.mul_table[c, cc], r]
            s = R.unflatten(vec_s, L, V)
            found.append(Lift(V, E, _shift_matrices(l, s), l.order + 1))
    if dedupe:
        found = dedupe_lifts(found)
    return ExtensionSearch(l, found, ext.dim, H.dim, nclasses, solvable, tried)


def extend_lift(l: Lift, budget: int = DEFAULT_BUDGET) -> list[Lift]:
    return extension_search(l, budget).lifts


def order_two_lifts(v: Rep, budget: int = DEFAULT_BUDGET) -> list[Lift]:
    """Order-2 lifts of v up to isomorphism and rescaling of t, the trivial one included."""
    return extend_lift(base_lift(v), budget)


# truncation depth ------------------------------------------------------------------


@dataclass
class TruncationReport:
    base: Rep
    depth: int
    certified: bool  # False when the search ran out of orders before an empty step
    ext1_dim: int
    chain: list[Lift]
    searches: list[ExtensionSearch]

    @property
    def obstruction(self) -> dict | None:
        if not self.certified or not self.searches:
            return None
        return self.searches[-1].transcript()

    def describe(self, verbose: bool = False) -> dict:
        return {
            "module": self.base.name,
            "algebra": self.base.alg.name,
            "depth": self.depth,
            "certified": self.certified,
            "ext1": self.ext1_dim,
            "chain": [c.describe(verbose) for c in self.chain],
            "searches": [s.transcript() for s in self.searches],
        }


def truncation_depth(v: Rep, maxn: int = 4, budget: int = DEFAULT_BUDGET) -> TruncationReport:
    """Largest m <= maxn reached by successive extensions of the nontrivial order-2 lift.

    Under the hypotheses checked here (stable End(v) = k, dim Ext^1(v, v) <= 1) the
    mod-2 reduction of the universal deformation ring is k[t]/(t^m).
    """
    if R.stable_hom(v, v).dim != 1:
        raise HypothesisFailed(f"stable End({v.name}) is not one-dimensional")
    e = R.ext1_cocycles(v, v).dim
    if e >= 2:
        raise HypothesisFailed(f"dim Ext^1({v.name}, {v.name}) = {e}")
    first = extension_search(base_lift(v), budget)
    if e == 0:
        return TruncationReport(v, 1, True, e, [base_lift(v)], [first])
    nontrivial = [l for l in first.lifts if not is_trivial_lift(l)]
    if len(nontrivial) != 1:
        raise HypothesisFailed(f"expected one nontrivial order-2 lift, found {len(nontrivial)}")
    chain, searches = [nontrivial[0]], [first]
    frontier = nontrivial
    while chain[-1].order < maxn:
        step = [extension_search(l, budget) for l in frontier]
        searches.append(step[0] if len(step) == 1 else _merge(step))
        nxt = dedupe_lifts([x for s in step for x in s.lifts])
        if not nxt:
            return TruncationReport(v, chain[-1].order, True, e, chain, searches)
        chain.append(nxt[0])
        frontier = nxt
    return TruncationReport(v, chain[-1].order, False, e, chain, searches)


def _merge(step: list[ExtensionSearch]) -> ExtensionSearch:
    out = ExtensionSearch(
        step[0].source,
        [x for s in step for x in s.lifts],
        max(s.ext_dim for s in step),
        max(s.hom_dim for s in step),
        sum(s.classes_tried for s in step),
        sum(s.classes_solvable for s in step),
        sum(s.candidates_tried for s in step),
    )
    return out


def omega_depth_consistency(v: Rep, maxn: int = 4, budget: int = DEFAULT_BUDGET) -> bool:
    """Do v and its syzygy have one-dimensional stable End and equal truncation depths?"""
    if R.stable_hom(v, v).dim != 1:
        raise HypothesisFailed(f"stable End({v.name}) is not one-dimensional")
    w = R.syzygy(v)
    if R.stable_hom(w, w).dim != 1:
        return False
    return truncation_depth(w, maxn, budget).depth == truncation_depth(v, maxn, budget).depth


# witness lifts ---------------------------------------------------------------------


def _quotient_lift(alg: Algebra, vertex: int, killed: list[str], shift: str, base: Rep, name: str) -> Lift:
    """P_vertex / (submodule generated by ``killed``) with t = right multiplication by ``shift``."""
    P, _, rho = R.right_multiplication(alg, vertex, shift)
    gens: dict[int, list] = {x: [] for x in alg.vertices}
    for w in killed:
        gens[alg.quiver.target(w, vertex)].append(R.element_vector(P, alg.quiver.target(w, vertex), {w: 1}))
    sub = R.spin(P, {x: la.asmat(g, P.dims[x]) for x, g in gens.items() if g})
    _require_stable(P, sub, rho)
    Q, proj = R.quotient(P, sub, name=name)
    return make_lift(base, Q, R.induced_on_quotient(rho, P, proj, Q))


def _submodule_lift(alg: Algebra, vertex: int, generators: list[str], shift: str, base: Rep, name: str) -> Lift:
    """Submodule of P_vertex generated by paths, with t = right multiplication by ``shift``."""
    P, _, rho = R.right_multiplication(alg, vertex, shift)
    gens: dict[int, list] = {x: [] for x in alg.vertices}
    for w in generators:
        gens[alg.quiver.target(w, vertex)].append(R.element_vector(P, alg.quiver.target(w, vertex), {w: 1}))
    sub = R.spin(P, {x: la.asmat(g, P.dims[x]) for x, g in gens.items() if g})
    _require_stable(P, sub, rho)
    S, _ = R.submodule(P, sub, name=name)
    return make_lift(base, S, R.induced_on_sub(rho, P, sub, S))


def _require_stable(P: Rep, sub: dict[int, np.ndarray], f: Map) -> None:
    for x in P.vertices:
        if sub[x].shape[0] and not la.Subspace(P.F, P.dims[x], sub[x]).contains(la.matmul(sub[x], f[x].T.copy(), P.F)):
            raise ValueError("submodule is not stable under the shift")


def witness_u(alg: Algebra) -> Lift:
    """Order-2 lift of the uniserial module 0/1: P0 modulo the paths gb, gba, aa."""
    base = R.uniserial(alg, (0, 1), name="M01")
    return _quotient_lift(alg, 0, ["gb", "gba", "aa"], "a", base, "U")


def inflate_lift(l: Lift, alg: Algebra) -> Lift:
    """A lift over a quotient algebra, viewed over alg along a surjection onto it."""
    return make_lift(R.inflate(l.base, alg), R.inflate(l.total, alg), l.t, l.order)


def _over_small(alg: Algebra, build) -> Lift:
    # over the larger algebra the witness is inflated along its surjection onto Lambda_0
    if alg.kind == "lambdahat":
        return inflate_lift(build(lambda_algebra(0, alg.F)), alg)
    return build(alg)


def witness_x(alg: Algebra) -> Lift:
    """Order-2 lift of M001: the radical of P1 with t = right multiplication by bag."""

    def build(a):
        return _submodule_lift(a, 1, ["g"], "bag", R.uniserial(a, (0, 0, 1), name="M001"), "X")

    return _over_small(alg, build)


def witness_x_top(alg: Algebra) -> Lift:
    """Order-2 lift of M100: P1 modulo its socle, t = right multiplication by bag."""

    def build(a):
        return _quotient_lift(a, 1, ["bagbag"], "bag", R.uniserial(a, (1, 0, 0), name="M100"), "X'")

    return _over_small(alg, build)


def witness_y(alg: Algebra, generator: str = "gbag") -> Lift:
    """Order-3 lift of M001 over the larger algebra: a submodule of P1 with t = right multiplication by bag."""
    base = R.uniserial(alg, (0, 0, 1), name="M001")
    return _submodule_lift(alg, 1, [generator], "bag", base, "Y")


def witness_y_top(alg: Algebra, killed=("bg", "bagbagbag")) -> Lift:
    """Order-3 lift of M100 over the larger algebra: a quotient of P1."""
    base = R.uniserial(alg, (1, 0, 0), name="M100")
    return _quotient_lift(alg, 1, list(killed), "bag", base, "Y'")


def split_hypothesis(lift: Lift) -> bool:
    """Ext^1(L, V) = 0: every extension of the lift by its base splits."""
    return R.ext1_cocycles(lift.total, lift.base).dim == 0
