"""Permutation groups and their modular representations over GF(2^e).

Permutations are tuples of images of 0..n-1 (printed 1-based in cycle notation);
the product ``g * h`` is the composite "h first, then g".  A representation
assigns a matrix to each generator; ``g . e_i = e_{g(i)}`` for permutation
modules.  A homomorphism is checked by walking the Cayley graph: every element
gets a matrix from a spanning tree, and every edge must agree.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg as la
from .scalars import GF, GF2, GF4, GF16, Quad, embedding


class GroupTooLarge(ValueError):
    pass


class EvenOrderElement(ValueError):
    pass


class SplitFailed(ValueError):
    pass


class NotAHomomorphism(ValueError):
    pass


class NonRationalValue(ValueError):
    pass


Perm = tuple[int, ...]


def perm_mul(g: Perm, h: Perm) -> Perm:
    return tuple(g[i] for i in h)


def perm_inv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def perm_order(g: Perm) -> int:
    k, p = 1, g
    ident = tuple(range(len(g)))
    while p != ident:
        p = perm_mul(g, p)
        k += 1
    return k


def perm_sign(g: Perm) -> int:
    """0 for even permutations, 1 for odd ones."""
    seen, parity = set(), 0
    for i in range(len(g)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = g[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def cycles(text: str, n: int = 5) -> Perm:
    """Parse 1-based cycle notation such as ``"(1,2)(3,4,5)"`` or ``"(12345)"``."""
    img = list(range(n))
    text = text.replace(" ", "")
    for part in text.strip("()").split(")("):
        if not part:
            continue
        pts = [int(x) - 1 for x in (part.split(",") if "," in part else part)]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def cycle_str(g: Perm) -> str:
    seen, out = set(), []
    for i in range(len(g)):
        if i in seen or g[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = g[j]
        out.append("(" + ",".join(cyc) + ")")
    return "".join(out) or "()"


@dataclass
class Group:
    name: str
    gens: tuple[Perm, ...]
    limit: int = 10000

    @cached_property
    def degree(self) -> int:
        return len(self.gens[0])

    @cached_property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    @cached_property
    def tree(self) -> dict[Perm, tuple[Perm, int] | None]:
        """BFS spanning tree: element -> (parent, generator index) with element = gen * parent."""
        tree: dict[Perm, tuple[Perm, int] | None] = {self.identity: None}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for k, s in enumerate(self.gens):
                y = perm_mul(s, x)
                if y not in tree:
                    tree[y] = (x, k)
                    if len(tree) > self.limit:
                        raise GroupTooLarge(f"{self.name} has more than {self.limit} elements")
                    queue.append(y)
        return tree

    @property
    def elements(self) -> list[Perm]:
        return list(self.tree)

    @property
    def order(self) -> int:
        return len(self.tree)

    def __contains__(self, g: Perm) -> bool:
        return g in self.tree


def closure(gens, degree: int, limit: int = 10000) -> set[Perm]:
    ident = tuple(range(degree))
    out = {ident}
    queue = deque([ident])
    gens = list(gens)
    while queue:
        x = queue.popleft()
        for s in gens:
            y = perm_mul(s, x)
            if y not in out:
                out.add(y)
                if len(out) > limit:
                    raise GroupTooLarge("subgroup closure exceeds the limit")
                queue.append(y)
    return out


def abelianization_order(G: Group) -> int:
    """|G / [G, G]| by brute-force closure of all commutators."""
    elems = G.elements
    comms = {perm_mul(perm_mul(perm_inv(x), perm_inv(y)), perm_mul(x, y)) for x in elems for y in elems}
    derived = closure(comms, G.degree, G.limit)
    return G.order // len(derived)


S5 = Group("S5", (cycles("(1,2)"), cycles("(1,2,3,4,5)")))
A5 = Group("A5", (cycles("(1,2,3)"), cycles("(1,2,3,4,5)")))
C2 = Group("C", (cycles("(1,2)"),))

TRANSPOSITION = cycles("(1,2)")
THREE_CYCLE = cycles("(1,2,3)")
FIVE_CYCLE = cycles("(1,2,3,4,5)")


@dataclass
class GroupRep:
    group: Group
    F: GF
    mats: tuple[np.ndarray, ...]  # one per generator
    name: str = ""
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        self.mats = tuple(np.asarray(m, dtype=np.uint8) for m in self.mats)
        if len(self.mats) != len(self.group.gens):
            raise ValueError("need one matrix per generator")
        if self.check:
            self.element_matrices  # noqa: B018 - forces the homomorphism check

    @property
    def dim(self) -> int:
        return self.mats[0].shape[0]

    @cached_property
    def element_matrices(self) -> dict[Perm, np.ndarray]:
        """Matrix of every group element; raises if the generators' images are inconsistent."""
        F = self.F
        tree = self.group.tree
        mats: dict[Perm, np.ndarray] = {}
        for g, edge in tree.items():  # BFS order: parents come first
            if edge is None:
                mats[g] = la.identity(self.dim)
            else:
                parent, k = edge
                mats[g] = la.matmul(self.mats[k], mats[parent], F)
        for g in tree:
            for k, s in enumerate(self.group.gens):
                if not np.array_equal(la.matmul(self.mats[k], mats[g], F), mats[perm_mul(s, g)]):
                    raise NotAHomomorphism(f"{self.name or 'representation'} fails at {cycle_str(g)}")
        return mats

    def __call__(self, g: Perm) -> np.ndarray:
        return self.element_matrices[g]

    def restrict(self, H: Group) -> "GroupRep":
        return GroupRep(H, self.F, tuple(self(h) for h in H.gens), f"Res({self.name})")

    def extend_field(self, F: GF) -> "GroupRep":
        table = embedding(self.F, F)
        return GroupRep(self.group, F, tuple(table[m] for m in self.mats), self.name)

    def tensor(self, other: "GroupRep") -> "GroupRep":
        return GroupRep(
            self.group,
            self.F,
            tuple(la.kron(a, b, self.F) for a, b in zip(self.mats, other.mats)),
            f"{self.name}⊗{other.name}",
        )

    def direct_sum(self, other: "GroupRep") -> "GroupRep":
        return GroupRep(self.group, self.F, tuple(la.block_diag(a, b) for a, b in zip(self.mats, other.mats)))

    def spin(self, vecs) -> np.ndarray:
        """Row basis of the submodule generated by the given row vectors."""
        F = self.F
        basis = la.row_basis(la.asmat(vecs, self.dim), F)
        while True:
            images = [la.matmul(basis, m.T.copy(), F) for m in self.mats]
            grown = la.row_basis(np.concatenate([basis, *images]), F)
            if grown.shape[0] == basis.shape[0]:
                return grown
            basis = grown

    def submodule(self, rows, name: str = "") -> "GroupRep":
        F = self.F
        B = la.row_basis(la.asmat(rows, self.dim), F)
        mats = []
        for m in self.mats:
            coords = la.coordinates(B, la.matmul(B, m.T.copy(), F), F)
            mats.append(coords.T.copy())
        return GroupRep(self.group, F, tuple(mats), name)

    def quotient(self, rows, name: str = "") -> "GroupRep":
        F = self.F
        B = la.row_basis(la.asmat(rows, self.dim), F)
        K = la.complement_basis(B, self.dim, F)
        inv = la.inverse(np.concatenate([B, K]).T.copy(), F)
        proj = inv[B.shape[0] :]
        mats = tuple(la.matmul(proj, la.matmul(m, K.T.copy(), F), F) for m in self.mats)
        return GroupRep(self.group, F, mats, name)

    def fixed_points(self) -> np.ndarray:
        stacked = np.concatenate([m ^ la.identity(self.dim) for m in self.mats])
        return la.kernel_basis(stacked, self.F, self.dim)

    def is_simple(self) -> bool:
        """Every nonzero vector spins to the whole space (exhaustive)."""
        F = self.F
        if self.dim == 0:
            return False
        for coeffs in itertools.product(range(F.order), repeat=self.dim):
            if not any(coeffs):
                continue
            # scalar multiples spin to the same subspace: only test vectors whose first nonzero entry is 1
            first = next(c for c in coeffs if c)
            if first != 1:
                continue
            if self.spin(np.array(coeffs, dtype=np.uint8)).shape[0] < self.dim:
                return False
        return True


# constructions ---------------------------------------------------------------


def trivial(G: Group, F: GF = GF2) -> GroupRep:
    return GroupRep(G, F, tuple(la.identity(1) for _ in G.gens), "T0")


def permutation_module(G: Group, F: GF = GF2, action=None, npoints: int | None = None, name: str = "") -> GroupRep:
    """Permutation module; ``action(g)`` gives the permutation of points induced by g."""
    action = action or (lambda g: g)
    mats = []
    for s in G.gens:
        p = action(s)
        n = len(p)
        m = la.zeros(n, n)
        m[list(p), list(range(n))] = 1
        mats.append(m)
    return GroupRep(G, F, tuple(mats), name or f"F^{len(action(G.gens[0]))}")


def sylow5_action(G: Group = S5):
    """Conjugation action of G on its six Sylow 5-subgroups, as a permutation of 0..5."""
    fives = [g for g in G.elements if perm_order(g) == 5]
    subgroups = []
    for g in fives:
        sub = frozenset(closure([g], G.degree))
        if sub not in subgroups:
            subgroups.append(sub)
    subgroups.sort(key=lambda s: min(s - {G.identity}))
    index = {s: i for i, s in enumerate(subgroups)}

    def act(g: Perm) -> Perm:
        gi = perm_inv(g)
        return tuple(index[frozenset(perm_mul(perm_mul(g, x), gi) for x in s)] for s in subgroups)

    return act, len(subgroups)


def sum_zero_rows(n: int) -> np.ndarray:
    rows = la.zeros(n - 1, n)
    for i in range(n - 1):
        rows[i, i] = rows[i, n - 1] = 1
    return rows


def all_ones(n: int) -> np.ndarray:
    return np.ones((1, n), dtype=np.uint8)


def six_point_module(F: GF = GF2, G: Group = S5) -> GroupRep:
    act, n = sylow5_action(G)
    return permutation_module(G, F, act, name="F^6")


def natural_simple(F: GF = GF2) -> GroupRep:
    """The 4-dimensional simple module in the principal 2-block of S5.

    Realised as (sum-zero vectors) / (all-ones vector) in the permutation module
    on the six Sylow 5-subgroups; its Brauer character is (4, -2, -1).
    """
    sz = six_point_module(F).submodule(sum_zero_rows(6), "sum-zero")
    return sz.quotient(_coords_in_sub(sum_zero_rows(6), all_ones(6), F), "T1")


def _coords_in_sub(sub_rows: np.ndarray, vecs: np.ndarray, F: GF) -> np.ndarray:
    return la.coordinates(la.row_basis(sub_rows, F), vecs, F)


def deleted_permutation_module(F: GF = GF2) -> GroupRep:
    """Sum-zero part of the natural 5-point module: the 4-dimensional simple outside the principal block."""
    P = permutation_module(S5, F, name="F^5")
    return P.submodule(sum_zero_rows(5), "D5")


def t00(F: GF = GF2) -> GroupRep:
    """g -> [[1, sign(g)], [0, 1]]: the uniserial module with two trivial factors."""
    mats = []
    for s in S5.gens:
        m = la.identity(2)
        m[0, 1] = perm_sign(s)
        mats.append(m)
    return GroupRep(S5, F, tuple(mats), "T00")


def uniserial_t1_over_t0(F: GF = GF2) -> GroupRep:
    """Sum-zero submodule of the six-point module: top T1, socle T0."""
    return six_point_module(F).submodule(sum_zero_rows(6), "T1/T0")


def uniserial_t0_over_t1(F: GF = GF2) -> GroupRep:
    """Six-point module modulo the all-ones vector: top T0, socle T1."""
    return six_point_module(F).quotient(all_ones(6), "T0/T1")


# restriction, induction, hom ---------------------------------------------------


def restrict_to_c2(r: GroupRep, g: Perm = TRANSPOSITION) -> tuple[int, int]:
    """(free rank, trivial rank) of the restriction to <g> for an involution g."""
    m = r(g) ^ la.identity(r.dim)
    k = la.rank(m, r.F)
    return k, r.dim - 2 * k


def group_hom(M: GroupRep, N: GroupRep) -> np.ndarray:
    """Rows = flattened intertwiners f (N.dim x M.dim) with N(s) f = f M(s)."""
    F = M.F
    blocks = []
    for a, b in zip(M.mats, N.mats):
        blocks.append(la.kron(b, la.identity(M.dim), F) ^ la.kron(la.identity(N.dim), a.T.copy(), F))
    return la.kernel_basis(np.concatenate(blocks), F, M.dim * N.dim)


def find_group_isomorphism(M: GroupRep, N: GroupRep, trials: int = 256, seed: int = 0) -> np.ndarray | None:
    if M.dim != N.dim:
        return None
    H = group_hom(M, N)
    F = M.F
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeffs = rng.integers(0, F.order, size=H.shape[0])
        vec = la.zeros(1, H.shape[1])[0]
        for c, row in zip(coeffs, H):
            vec ^= F.mul_table[c, row]
        f = vec.reshape(N.dim, M.dim)
        if la.is_invertible(f, F):
            return f
    if F.order ** H.shape[0] <= 1 << 16:
        for coeffs in itertools.product(range(F.order), repeat=H.shape[0]):
            vec = la.zeros(1, H.shape[1])[0]
            for c, row in zip(coeffs, H):
                vec ^= F.mul_table[c, row]
            f = vec.reshape(N.dim, M.dim)
            if la.is_invertible(f, F):
                return f
    return None


def group_isomorphic(M: GroupRep, N: GroupRep) -> bool:
    return find_group_isomorphism(M, N) is not None


def split_restriction(T: GroupRep, H: Group = A5) -> tuple[GroupRep, GroupRep]:
    """Split Res_H T into two summands using an idempotent of its endomorphism ring."""
    R = T.restrict(H)
    F = T.F
    E = group_hom(R, R)
    if E.shape[0] != 2:
        raise SplitFailed(f"endomorphism ring of the restriction has dimension {E.shape[0]}")
    n = R.dim
    for c0, c1 in itertools.product(range(F.order), repeat=2):
        e = (F.mul_table[c0, E[0]] ^ F.mul_table[c1, E[1]]).reshape(n, n)
        if not e.any() or np.array_equal(e, la.identity(n)):
            continue
        if np.array_equal(la.matmul(e, e, F), e):
            img = la.row_basis(e.T.copy(), F)
            ker = la.kernel_basis(e, F, n)
            return R.submodule(img, "E"), R.submodule(ker, "E'")
    raise SplitFailed("no nontrivial idempotent in the endomorphism ring")


def induce_from_a5(E: GroupRep, G: Group = S5, coset_rep: Perm = TRANSPOSITION) -> GroupRep:
    """Ind_{A5}^{S5}: basis t_i (x) v with transversal {1, (1,2)}."""
    H = E.group
    F = E.F
    reps = [G.identity, coset_rep]
    d = E.dim
    mats = []
    for g in G.gens:
        m = la.zeros(2 * d, 2 * d)
        for i, ti in enumerate(reps):
            x = perm_mul(g, ti)
            for j, tj in enumerate(reps):
                h = perm_mul(perm_inv(tj), x)
                if h in H:
                    m[j * d : (j + 1) * d, i * d : (i + 1) * d] = E(h)
                    break
            else:
                raise ValueError("transversal does not cover the cosets")
        mats.append(m)
    return GroupRep(G, F, tuple(mats), f"Ind({E.name})")


# Brauer characters ---------------------------------------------------------------

# Phi_15(x) = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1, as integer coefficients of x^0..x^8
PHI15 = (1, -1, 0, 1, -1, 1, 0, -1, 1)


def _reduce_cyclotomic(coeffs: list[int]) -> list[int]:
    c = list(coeffs)
    for k in range(len(c) - 1, 7, -1):
        lead = c[k]
        if lead:
            for i, p in enumerate(PHI15):
                c[k - 8 + i] -= lead * p
    return c[:8]


def brauer_value(r: GroupRep, g: Perm) -> Quad:
    """Brauer character at an element of odd order, lifting eigenvalues into Q(zeta_15).

    Eigenvalues are found in GF(16), where the generator x of the unit group is sent
    to exp(2 pi i / 15); the sum is reduced modulo the 15th cyclotomic polynomial and
    must be a rational integer.
    """
    m = perm_order(g)
    if m % 2 == 0:
        raise EvenOrderElement(f"{cycle_str(g)} has even order {m}")
    if 15 % m:
        raise ValueError(f"element order {m} does not divide 15")
    K = GF16
    mat = embedding(r.F, K)[r(g)] if r.F is not K else r(g)
    n = r.dim
    gen = K.generator()
    mult = [0] * 15
    total = 0
    for k in range(15):
        lam = K.pow(gen, k)
        shifted = mat ^ la.scale(lam, la.identity(n), K)
        mult[k] = n - la.rank(shifted, K)
        total += mult[k]
    if total != n:
        raise ValueError("matrix is not diagonalisable over GF(16)")
    reduced = _reduce_cyclotomic(mult)
    if any(reduced[1:]):
        raise NonRationalValue(f"Brauer value at {cycle_str(g)} is not rational: {reduced}")
    return Quad(Fraction(reduced[0]))


def brauer_character(r: GroupRep, classes=(None, THREE_CYCLE, FIVE_CYCLE)) -> tuple[int, ...]:
    out = []
    for g in classes:
        g = g or r.group.identity
        out.append(int(brauer_value(r, g).a))
    return tuple(out)


def composition_dims(r: GroupRep) -> list[int]:
    """Dimensions of composition factors, found by peeling off minimal submodules."""
    if r.dim == 0:
        return []
    F = r.F
    best = None
    for coeffs in itertools.product(range(F.order), repeat=r.dim):
        if not any(coeffs):
            continue
        sub = r.spin(np.array(coeffs, dtype=np.uint8))
        if best is None or sub.shape[0] < best.shape[0]:
            best = sub
            if best.shape[0] == 1:
                break
    if best.shape[0] == r.dim:
        return [r.dim]
    return sorted(composition_dims(r.submodule(best)) + composition_dims(r.quotient(best)))
