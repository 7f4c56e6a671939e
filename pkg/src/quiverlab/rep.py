"""Modules over a path algebra given by one matrix per arrow.

Left modules throughout: vectors are columns, an arrow a: s -> t acts by a
``dims[t] x dims[s]`` matrix, and a word ``l1 l2 ... lm`` acts by the matrix
product ``M[l1] @ M[l2] @ ... @ M[lm]`` (its rightmost letter acts first).
A uniserial module with top S_i and socle S_j exists exactly when there is an
arrow i -> j, so dim Ext^1(S_i, S_j) counts arrows i -> j.

Module maps are dicts ``{vertex: matrix}`` with ``f[v]`` of shape
``target.dims[v] x source.dims[v]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg as la
from .algebra import Algebra
from .scalars import GF

Map = dict[int, np.ndarray]


class NotAModule(ValueError):
    pass


class AlgebraMismatch(ValueError):
    pass


class NoSuchUniserial(ValueError):
    pass


class NotUnique(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


class Rep:
    def __init__(self, alg: Algebra, dims, mats: dict[str, np.ndarray], name: str = "", check: bool = True):
        self.alg = alg
        self.F: GF = alg.F
        self.dims = tuple(int(d) for d in dims)
        self.name = name
        self.mats = {}
        for a, (s, t) in alg.arrows.items():
            m = mats.get(a)
            m = la.zeros(self.dims[t], self.dims[s]) if m is None else np.asarray(m, dtype=np.uint8)
            if m.shape != (self.dims[t], self.dims[s]):
                raise NotAModule(f"arrow {a} has shape {m.shape}, expected {(self.dims[t], self.dims[s])}")
            self.mats[a] = m
        if check:
            self.check()

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"Rep({label}dims={self.dims}, over {self.alg.name})"

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def vertices(self):
        return range(len(self.dims))

    def word(self, w: str, vertex: int | None = None) -> np.ndarray:
        """Action of a path; the empty word needs its vertex."""
        if not w:
            return la.identity(self.dims[vertex])
        return la.matprod([self.mats[x] for x in w], 0, self.F)

    def evaluate(self, poly: dict[str, int]) -> np.ndarray:
        out = None
        for w, c in poly.items():
            m = la.scale(c, self.word(w), self.F)
            out = m if out is None else out ^ m
        return out

    def check(self) -> None:
        for rel in self.alg.relations.relations:
            if self.evaluate(rel).any():
                raise NotAModule(f"relation {rel} does not vanish on {self!r}")

    def same_algebra(self, other: "Rep") -> None:
        if other.alg is not self.alg:
            raise AlgebraMismatch(f"{self.alg.name} vs {other.alg.name}")

    def identity(self) -> Map:
        return {v: la.identity(d) for v, d in enumerate(self.dims)}

    def zero_map(self, other: "Rep") -> Map:
        return {v: la.zeros(other.dims[v], self.dims[v]) for v in self.vertices}

    def is_intertwiner(self, f: Map, target: "Rep") -> bool:
        for a, (s, t) in self.alg.arrows.items():
            lhs = la.matmul(target.mats[a], f[s], self.F)
            rhs = la.matmul(f[t], self.mats[a], self.F)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def composition_factors(self) -> dict[int, int]:
        return {v: d for v, d in enumerate(self.dims)}

    @cached_property
    def loewy(self) -> "LoewyData":
        return loewy(self)


# map helpers ---------------------------------------------------------------


def compose(g: Map, f: Map, F: GF) -> Map:
    return {v: la.matmul(g[v], f[v], F) for v in f}


def add_maps(f: Map, g: Map) -> Map:
    return {v: f[v] ^ g[v] for v in f}


def scale_map(c: int, f: Map, F: GF) -> Map:
    return {v: la.scale(c, m, F) for v, m in f.items()}


def map_is_invertible(f: Map, F: GF) -> bool:
    return all(la.is_invertible(m, F) for m in f.values())


def map_is_zero(f: Map) -> bool:
    return not any(m.any() for m in f.values())


def map_is_nilpotent(f: Map, F: GF) -> bool:
    return all(la.is_nilpotent(m, F) for m in f.values())


def map_rank(f: Map, F: GF) -> int:
    return sum(la.rank(m, F) for m in f.values())


def flatten(f: Map) -> np.ndarray:
    return np.concatenate([f[v].reshape(-1) for v in sorted(f)]) if f else np.zeros(0, np.uint8)


def unflatten(vec: np.ndarray, src: Rep, dst: Rep) -> Map:
    out, pos = {}, 0
    for v in src.vertices:
        n = dst.dims[v] * src.dims[v]
        out[v] = vec[pos : pos + n].reshape(dst.dims[v], src.dims[v]).copy()
        pos += n
    return out


def map_power(f: Map, n: int, F: GF) -> Map:
    out = {v: la.identity(m.shape[0]) for v, m in f.items()}
    for _ in range(n):
        out = compose(f, out, F)
    return out


# constructions -------------------------------------------------------------


def simple(alg: Algebra, v: int) -> Rep:
    dims = [0] * len(alg.vertices)
    dims[v] = 1
    return Rep(alg, dims, {}, name=f"S{v}")


def projective(alg: Algebra, v: int) -> Rep:
    """The left module alg * e_v, with basis the normal paths starting at v."""
    words = {t: [] for t in alg.vertices}
    for i in alg.basis_at(v):
        p = alg.basis[i]
        words[p.target].append(p.word)
    pos = {t: {w: k for k, w in enumerate(ws)} for t, ws in words.items()}
    mats = {}
    for a, (s, t) in alg.arrows.items():
        m = la.zeros(len(words[t]), len(words[s]))
        for j, w in enumerate(words[s]):
            for nw, c in alg.word_nf(a + w).items():
                m[pos[t][nw], j] = c
        mats[a] = m
    rep = Rep(alg, [len(words[t]) for t in alg.vertices], mats, name=f"P{v}")
    rep.basis_words = words
    return rep


def right_multiplication(alg: Algebra, v: int, r: str | dict[str, int]) -> tuple[Rep, Rep, Map]:
    """x -> x r as a module map P_v -> P_u, for r a combination of paths u -> v."""
    poly = {r: 1} if isinstance(r, str) else r
    u = {alg.quiver.source(w, v) for w in poly} if poly else {v}
    if len(u) != 1 or any(alg.quiver.target(w, v) != v for w in poly):
        raise ValueError("right multiplier must be a combination of parallel paths ending at v")
    (u,) = u
    P, Q = projective(alg, v), projective(alg, u)
    qpos = {t: {w: k for k, w in enumerate(ws)} for t, ws in Q.basis_words.items()}
    f = {}
    for t in alg.vertices:
        m = la.zeros(Q.dims[t], P.dims[t])
        for j, w in enumerate(P.basis_words[t]):
            prod = {}
            for rw, c in poly.items():
                for nw, cc in alg.word_nf(w + rw).items():
                    prod[nw] = prod.get(nw, 0) ^ int(alg.F.mul_table[c, cc])
            for nw, c in prod.items():
                if c:
                    m[qpos[t][nw], j] = c
        f[t] = m
    return P, Q, f


def element_vector(P: Rep, v: int, poly: dict[str, int]) -> np.ndarray:
    """Coordinates in (P_s)_v of a combination of normal paths ending at v."""
    pos = {w: k for k, w in enumerate(P.basis_words[v])}
    vec = la.zeros(1, P.dims[v])[0]
    for w, c in P.alg.normal_form(poly).items():
        vec[pos[w]] ^= c
    return vec


def direct_sum(*reps: Rep) -> Rep:
    alg = reps[0].alg
    for r in reps[1:]:
        r.same_algebra(reps[0])
    dims = [sum(r.dims[v] for r in reps) for v in alg.vertices]
    mats = {a: la.block_diag(*(r.mats[a] for r in reps)) for a in alg.arrows}
    return Rep(alg, dims, mats, name=" ⊕ ".join(r.name or "?" for r in reps), check=False)


def dual(M: Rep, alg: Algebra | None = None) -> Rep:
    """The vector-space dual, a module over the opposite algebra."""
    alg = alg or M.alg.opposite
    return Rep(alg, M.dims, {a: m.T.copy() for a, m in M.mats.items()}, name=f"D({M.name})", check=False)


def inflate(M: Rep, alg: Algebra) -> Rep:
    """View a module along an arrow-preserving surjection alg -> M.alg."""
    return Rep(alg, M.dims, M.mats, name=M.name)


def _restricted_action(M: Rep, basis: dict[int, np.ndarray]) -> dict[str, np.ndarray]:
    F = M.F
    mats = {}
    for a, (s, t) in M.alg.arrows.items():
        images = la.matmul(basis[s], M.mats[a].T.copy(), F)  # rows: images of basis rows of s
        coords = la.coordinates(basis[t], images, F)
        mats[a] = coords.T.copy()
    return mats


def submodule(M: Rep, basis: dict[int, np.ndarray], name: str = "") -> tuple[Rep, Map]:
    """Submodule spanned by given rows at each vertex (must be closed); returns it with its inclusion."""
    basis = {v: la.asmat(basis[v], M.dims[v]) for v in M.vertices}
    try:
        mats = _restricted_action(M, basis)
    except la.NoSolution:
        raise NotAModule("subspace is not closed under the arrows") from None
    S = Rep(M.alg, [basis[v].shape[0] for v in M.vertices], mats, name=name, check=False)
    return S, {v: basis[v].T.copy() for v in M.vertices}


def spin(M: Rep, gens: dict[int, np.ndarray]) -> dict[int, np.ndarray]:
    """Row bases of the submodule generated by the given vectors."""
    F = M.F
    spaces = {v: la.row_basis(la.asmat(gens.get(v, la.zeros(0, M.dims[v])), M.dims[v]), F) for v in M.vertices}
    frontier = dict(spaces)
    while any(f.shape[0] for f in frontier.values()):
        new = {v: [] for v in M.vertices}
        for a, (s, t) in M.alg.arrows.items():
            if frontier[s].shape[0]:
                new[t].append(la.matmul(frontier[s], M.mats[a].T.copy(), F))
        frontier = {}
        for v in M.vertices:
            if not new[v]:
                frontier[v] = la.zeros(0, M.dims[v])
                continue
            stacked = np.concatenate([spaces[v], *new[v]])
            grown = la.row_basis(stacked, F)
            if grown.shape[0] > spaces[v].shape[0]:
                ech_old = la.Subspace(F, M.dims[v], spaces[v])
                fresh = [r for r in grown if not ech_old.contains(r)]
                spaces[v] = grown
                frontier[v] = la.asmat(fresh, M.dims[v])
            else:
                frontier[v] = la.zeros(0, M.dims[v])
    return spaces


def quotient(M: Rep, sub: dict[int, np.ndarray], name: str = "") -> tuple[Rep, Map]:
    """M / sub, together with the projection map."""
    F = M.F
    proj: Map = {}
    comp: dict[int, np.ndarray] = {}
    for v in M.vertices:
        B = la.row_basis(la.asmat(sub[v], M.dims[v]), F)
        K = la.complement_basis(B, M.dims[v], F)
        full = np.concatenate([B, K])
        # coordinates of x in the basis [B; K] are x^T full^{-1}; keep the K part
        inv = la.inverse(full.T.copy(), F)
        proj[v] = inv[B.shape[0] :].copy()
        comp[v] = K
    mats = {}
    for a, (s, t) in M.alg.arrows.items():
        mats[a] = la.matmul(proj[t], la.matmul(M.mats[a], comp[s].T.copy(), F), F)
    Q = Rep(M.alg, [comp[v].shape[0] for v in M.vertices], mats, name=name, check=False)
    if not M.is_intertwiner(proj, Q):
        raise NotAModule("quotient by a subspace that is not a submodule")
    return Q, proj


def image_of(f: Map, src: Rep, dst: Rep) -> dict[int, np.ndarray]:
    return {v: la.row_basis(f[v].T.copy(), dst.F) if f[v].size else la.zeros(0, dst.dims[v]) for v in dst.vertices}


def kernel_of(f: Map, src: Rep) -> dict[int, np.ndarray]:
    return {v: la.kernel_basis(f[v], src.F, src.dims[v]) for v in src.vertices}


def induced_on_sub(f: Map, M: Rep, sub_basis: dict[int, np.ndarray], S: Rep) -> Map:
    """Restriction of an endomorphism f of M to an f-stable submodule with row basis sub_basis."""
    out = {}
    for v in M.vertices:
        images = la.matmul(sub_basis[v], f[v].T.copy(), M.F)
        out[v] = la.coordinates(sub_basis[v], images, M.F).T.copy()
    return out


def induced_on_quotient(f: Map, M: Rep, proj: Map, Q: Rep) -> Map:
    """Map induced by an endomorphism f of M on a quotient of M with projection proj."""
    out = {}
    for v in M.vertices:
        # choose a section: right inverse of proj[v]
        sec = la.solve(proj[v], la.identity(Q.dims[v]), M.F) if Q.dims[v] else la.zeros(M.dims[v], 0)
        out[v] = la.matmul(proj[v], la.matmul(f[v], sec, M.F), M.F)
    if not Q.is_intertwiner(out, Q):
        raise NotAModule("map does not descend to the quotient")
    return out


# radical and socle ---------------------------------------------------------


def radical(M: Rep, sub: dict[int, np.ndarray] | None = None) -> dict[int, np.ndarray]:
    """Row bases of rad(N) for the submodule N (default: M itself)."""
    F = M.F
    sub = sub if sub is not None else {v: la.identity(M.dims[v]) for v in M.vertices}
    parts = {v: [la.zeros(0, M.dims[v])] for v in M.vertices}
    for a, (s, t) in M.alg.arrows.items():
        if sub[s].shape[0]:
            parts[t].append(la.matmul(sub[s], M.mats[a].T.copy(), F))
    return {v: la.row_basis(np.concatenate(parts[v]), F) for v in M.vertices}


def socle_step(M: Rep, inner: dict[int, np.ndarray]) -> dict[int, np.ndarray]:
    """{x : every arrow sends x into inner}, the preimage of the socle of M/inner."""
    F = M.F
    ann = {v: la.kernel_basis(la.asmat(inner[v], M.dims[v]), F, M.dims[v]) for v in M.vertices}
    out = {}
    for v in M.vertices:
        conds = [la.zeros(0, M.dims[v])]
        for a, (s, t) in M.alg.arrows.items():
            if s == v and ann[t].shape[0]:
                conds.append(la.matmul(ann[t], M.mats[a], F))
        out[v] = la.kernel_basis(np.concatenate(conds), F, M.dims[v])
    return out


def socle(M: Rep) -> dict[int, np.ndarray]:
    return socle_step(M, {v: la.zeros(0, M.dims[v]) for v in M.vertices})


def top_dims(M: Rep) -> tuple[int, ...]:
    rad = radical(M)
    return tuple(M.dims[v] - rad[v].shape[0] for v in M.vertices)


def socle_dims(M: Rep) -> tuple[int, ...]:
    return tuple(b.shape[0] for b in socle(M).values())


@dataclass(frozen=True)
class LoewyData:
    radical_layers: tuple[tuple[int, ...], ...]  # top first
    socle_layers: tuple[tuple[int, ...], ...]  # socle first

    @property
    def length(self) -> int:
        return len(self.radical_layers)

    def diagram(self) -> str:
        return "\n".join(" ".join(str(v) for v in layer) for layer in self.radical_layers)

    def compact(self) -> str:
        return "/".join(",".join(str(v) for v in layer) for layer in self.radical_layers)


def _labels(dims) -> tuple[int, ...]:
    return tuple(v for v, d in enumerate(dims) for _ in range(d))


def loewy(M: Rep) -> LoewyData:
    cur = {v: la.identity(M.dims[v]) for v in M.vertices}
    rad_layers = []
    while any(b.shape[0] for b in cur.values()):
        nxt = radical(M, cur)
        rad_layers.append(_labels([cur[v].shape[0] - nxt[v].shape[0] for v in M.vertices]))
        cur = nxt
    soc_layers = []
    cur = {v: la.zeros(0, M.dims[v]) for v in M.vertices}
    while any(cur[v].shape[0] < M.dims[v] for v in M.vertices):
        nxt = socle_step(M, cur)
        soc_layers.append(_labels([nxt[v].shape[0] - cur[v].shape[0] for v in M.vertices]))
        if all(nxt[v].shape[0] == cur[v].shape[0] for v in M.vertices):
            raise RuntimeError("socle series stalled")
        cur = nxt
    return LoewyData(tuple(rad_layers), tuple(soc_layers))


# Hom -------------------------------------------------------------------------


def _hom_system(M: Rep, N: Rep) -> np.ndarray:
    """Matrix of h -> (N_a h_s + h_t M_a)_a on the flattened unknowns (h_v)_v."""
    F = M.F
    offsets, pos = {}, 0
    for v in M.vertices:
        offsets[v] = pos
        pos += N.dims[v] * M.dims[v]
    blocks = []
    for a, (s, t) in sorted(M.alg.arrows.items()):
        rows = la.zeros(N.dims[t] * M.dims[s], pos)
        left = la.kron(N.mats[a], la.identity(M.dims[s]), F)
        right = la.kron(la.identity(N.dims[t]), M.mats[a].T.copy(), F)
        rows[:, offsets[s] : offsets[s] + left.shape[1]] ^= left
        rows[:, offsets[t] : offsets[t] + right.shape[1]] ^= right
        blocks.append(rows)
    if not blocks:
        return la.zeros(0, pos)
    return np.concatenate(blocks)


@dataclass
class HomSpace:
    source: Rep
    target: Rep
    vectors: np.ndarray  # one flattened map per row

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def basis(self) -> list[Map]:
        return [unflatten(r, self.source, self.target) for r in self.vectors]

    def combination(self, coeffs) -> Map:
        F = self.source.F
        vec = la.zeros(1, self.vectors.shape[1])[0]
        for c, r in zip(coeffs, self.vectors):
            if c:
                vec ^= F.mul_table[c, r]
        return unflatten(vec, self.source, self.target)

    def __len__(self) -> int:
        return self.dim


def hom(M: Rep, N: Rep) -> HomSpace:
    M.same_algebra(N)
    sysm = _hom_system(M, N)
    return HomSpace(M, N, la.kernel_basis(sysm, M.F, sysm.shape[1]))


def end(M: Rep) -> HomSpace:
    return hom(M, M)


# projective covers and syzygies ---------------------------------------------


def top_generators(M: Rep) -> list[tuple[int, np.ndarray]]:
    rad = radical(M)
    gens = []
    for v in M.vertices:
        for row in la.complement_basis(rad[v], M.dims[v], M.F):
            gens.append((v, row))
    return gens


def projective_cover(M: Rep) -> tuple[Rep, Map]:
    """Minimal projective cover P -> M (sum of P_v over a basis of the top)."""
    alg = M.alg
    gens = top_generators(M)
    if not gens:
        empty = Rep(alg, [0] * len(M.dims), {}, check=False)
        return empty, {v: la.zeros(M.dims[v], 0) for v in M.vertices}
    pieces, cols = [], {v: [] for v in M.vertices}
    for v, m in gens:
        P = _projective_cached(alg, v)
        pieces.append(P)
        for t in alg.vertices:
            for w in P.basis_words[t]:
                cols[t].append(la.matmul(M.word(w, v), m.reshape(-1, 1), M.F)[:, 0])
    P = direct_sum(*pieces) if len(pieces) > 1 else pieces[0]
    pi = {t: (np.array(cols[t], dtype=np.uint8).T.copy() if cols[t] else la.zeros(M.dims[t], 0)) for t in alg.vertices}
    return P, pi


_PROJ: dict = {}


def _projective_cached(alg: Algebra, v: int) -> Rep:
    key = (id(alg), v)
    if key not in _PROJ or _PROJ[key].alg is not alg:
        _PROJ[key] = projective(alg, v)
    return _PROJ[key]


def is_projective(M: Rep) -> bool:
    P, _ = projective_cover(M)
    return P.dim == M.dim


def syzygy(M: Rep) -> Rep:
    P, pi = projective_cover(M)
    K, _ = submodule(P, kernel_of(pi, P), name=f"Ω({M.name})" if M.name else "")
    return K


def cosyzygy(M: Rep) -> Rep:
    D = dual(M)
    K = syzygy(D)
    out = dual(K, M.alg)
    out.name = f"Ω⁻¹({M.name})" if M.name else ""
    return out


def syzygy_power(M: Rep, n: int) -> Rep:
    for _ in range(abs(n)):
        M = syzygy(M) if n > 0 else cosyzygy(M)
    return M


@dataclass
class StableHom:
    hom: HomSpace
    projective_part: np.ndarray  # rows spanning the maps that factor through a projective
    coset_basis: list[Map]

    @property
    def dim(self) -> int:
        return len(self.coset_basis)


def stable_hom(M: Rep, N: Rep) -> StableHom:
    """Hom(M, N) modulo the maps factoring through the projective cover of N."""
    M.same_algebra(N)
    F = M.F
    H = hom(M, N)
    P, pi = projective_cover(N)
    through = [flatten(compose(pi, h, F)) for h in hom(M, P).basis]
    proj = la.row_basis(la.asmat(through, H.vectors.shape[1]), F) if through else la.zeros(0, H.vectors.shape[1])
    coset = [unflatten(H.vectors[i], M, N) for i in la.independent_rows(proj, H.vectors, F)]
    return StableHom(H, proj, coset)


def ext(M: Rep, N: Rep, degree: int = 1) -> int:
    """dim Ext^n(M, N) = dim of stable Hom(Omega^n M, N)."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    M.same_algebra(N)
    return stable_hom(syzygy_power(M, degree), N).dim


# Ext^1 by cocycles --------------------------------------------------------------


def _cocycle_layout(M: Rep, N: Rep):
    layout, pos = {}, 0
    for a, (s, t) in sorted(M.alg.arrows.items()):
        layout[a] = (pos, N.dims[t], M.dims[s])
        pos += N.dims[t] * M.dims[s]
    return layout, pos


def _cocycle_system(M: Rep, N: Rep) -> np.ndarray:
    """Linear conditions on (Z_a) making [[N_a, Z_a], [0, M_a]] satisfy every relation."""
    F = M.F
    q = M.alg.quiver
    layout, nvars = _cocycle_layout(M, N)
    blocks = []
    for rel in M.alg.relations.relations:
        w0 = next(iter(rel))
        s, t = q.source(w0), q.target(w0)
        block = la.zeros(N.dims[t] * M.dims[s], nvars)
        for w, c in rel.items():
            for k, x in enumerate(w):
                A = N.word(w[:k], t)
                B = M.word(w[k + 1 :], s)
                off, r, cc = layout[x]
                block[:, off : off + r * cc] ^= la.scale(c, la.kron(A, B.T.copy(), F), F)
        blocks.append(block)
    return np.concatenate(blocks) if blocks else la.zeros(0, nvars)


def _coboundaries(M: Rep, N: Rep) -> np.ndarray:
    """Rows spanning {N_a h_s + h_t M_a} (reordered to the cocycle layout, which sorts arrows)."""
    sysm = _hom_system(M, N)
    return la.row_basis(sysm.T.copy(), M.F) if sysm.size else la.zeros(0, sysm.shape[0])


def _cocycle_to_dict(vec: np.ndarray, M: Rep, N: Rep) -> dict[str, np.ndarray]:
    layout, _ = _cocycle_layout(M, N)
    return {a: vec[off : off + r * c].reshape(r, c).copy() for a, (off, r, c) in layout.items()}


@dataclass
class Ext1:
    source: Rep  # quotient term M
    target: Rep  # sub term N
    cocycles: np.ndarray
    coboundaries: np.ndarray
    classes: np.ndarray  # representatives of a basis of Z/B

    @property
    def dim(self) -> int:
        return self.classes.shape[0]

    def is_coboundary(self, vec: np.ndarray) -> bool:
        return la.Subspace(self.source.F, self.coboundaries.shape[1], self.coboundaries).contains(vec)

    def class_dicts(self) -> list[dict[str, np.ndarray]]:
        return [_cocycle_to_dict(r, self.source, self.target) for r in self.classes]


def ext1_cocycles(M: Rep, N: Rep) -> Ext1:
    """Extensions 0 -> N -> E -> M -> 0 as cocycles modulo coboundaries."""
    M.same_algebra(N)
    F = M.F
    sysm = _cocycle_system(M, N)
    _, nvars = _cocycle_layout(M, N)
    Z = la.kernel_basis(sysm, F, nvars)
    B = _coboundaries(M, N)
    keep = la.independent_rows(B, Z, F)
    return Ext1(M, N, Z, B, la.asmat(Z[keep], nvars))


def ext1_dim_cocycles(M: Rep, N: Rep) -> int:
    return ext1_cocycles(M, N).dim


def extension(M: Rep, N: Rep, cocycle: dict[str, np.ndarray], name: str = "") -> Rep:
    """The middle term E with E_v = N_v + M_v and arrows [[N_a, Z_a], [0, M_a]]."""
    dims = [N.dims[v] + M.dims[v] for v in M.vertices]
    mats = {}
    for a, (s, t) in M.alg.arrows.items():
        top = np.concatenate([N.mats[a], cocycle[a]], axis=1)
        bot = np.concatenate([la.zeros(M.dims[t], N.dims[s]), M.mats[a]], axis=1)
        mats[a] = np.concatenate([top, bot])
    return Rep(M.alg, dims, mats, name=name)


def _push_cocycle(vec: np.ndarray, M: Rep, N: Rep, g: Map, N2: Rep) -> np.ndarray:
    """Compose a cocycle for (M, N) with g: N -> N2."""
    Z = _cocycle_to_dict(vec, M, N)
    out = []
    for a, (s, t) in sorted(M.alg.arrows.items()):
        out.append(la.matmul(g[t], Z[a], M.F).reshape(-1))
    return np.concatenate(out) if out else np.zeros(0, np.uint8)


def _pull_cocycle(vec: np.ndarray, M: Rep, N: Rep, f: Map, M2: Rep) -> np.ndarray:
    """Precompose a cocycle for (M, N) with f: M2 -> M."""
    Z = _cocycle_to_dict(vec, M, N)
    out = []
    for a, (s, t) in sorted(M.alg.arrows.items()):
        out.append(la.matmul(Z[a], f[s], M.F).reshape(-1))
    return np.concatenate(out) if out else np.zeros(0, np.uint8)


# uniserial modules ---------------------------------------------------------


def _grow_bottom_up(alg: Algebra, factors) -> Rep:
    U = simple(alg, factors[-1])
    for f in reversed(factors[:-1]):
        S = simple(alg, f)
        E = ext1_cocycles(S, U)
        if E.dim == 0:
            raise NoSuchUniserial(f"Ext^1(S{f}, U) = 0 below factors {factors}")
        if E.dim > 1:
            raise NotUnique(f"Ext^1(S{f}, U) has dimension {E.dim}")
        # uniserial iff the class survives in Ext^1(S, top U)
        T, proj = quotient(U, radical(U))
        E2 = ext1_cocycles(S, T)
        if E2.is_coboundary(_push_cocycle(E.classes[0], S, U, proj, T)):
            raise NoSuchUniserial(f"the extension of U by S{f} is not uniserial")
        U = extension(S, U, _cocycle_to_dict(E.classes[0], S, U))
    return U


def _grow_top_down(alg: Algebra, factors) -> Rep:
    U = simple(alg, factors[0])
    for f in factors[1:]:
        S = simple(alg, f)
        E = ext1_cocycles(U, S)
        if E.dim == 0:
            raise NoSuchUniserial(f"Ext^1(U, S{f}) = 0 above factors {factors}")
        if E.dim > 1:
            raise NotUnique(f"Ext^1(U, S{f}) has dimension {E.dim}")
        soc, inc = submodule(U, socle(U))
        E2 = ext1_cocycles(soc, S)
        if E2.is_coboundary(_pull_cocycle(E.classes[0], U, S, inc, soc)):
            raise NoSuchUniserial(f"the extension of S{f} by U is not uniserial")
        U = extension(U, S, _cocycle_to_dict(E.classes[0], U, S))
    return U


def uniserial(alg: Algebra, factors, name: str | None = None) -> Rep:
    """The unique uniserial module with descending composition factors ``factors`` (top first).

    Built from the socle upwards by adding tops; if some Ext^1 along that chain is
    not one-dimensional, built from the top downwards by adding socles instead.
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError("factor sequence must be nonempty")
    try:
        U = _grow_bottom_up(alg, factors)
    except NotUnique as first:
        try:
            U = _grow_top_down(alg, factors)
        except NotUnique:
            raise first from None
    U.name = name if name is not None else "M" + "".join(str(f) for f in factors)
    if U.loewy.radical_layers != tuple((f,) for f in factors):
        raise NoSuchUniserial(f"construction did not produce a uniserial module {factors}")
    return U


# isomorphism and indecomposability -------------------------------------------


def _fast_invariants(M: Rep) -> tuple:
    L = M.loewy
    return (M.dims, L.radical_layers, L.socle_layers)


def is_isomorphic(M: Rep, N: Rep, budget: int = 1 << 24, trials: int = 64, seed: int = 0) -> bool:
    M.same_algebra(N)
    if M.dims != N.dims:
        return False
    if M.dim == 0:
        return True
    if _fast_invariants(M) != _fast_invariants(N):
        return False
    H = hom(M, N)
    if H.dim == 0 or H.dim != end(M).dim or H.dim != hom(N, M).dim:
        return False
    F = M.F
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = H.combination(rng.integers(0, F.order, size=H.dim))
        if map_is_invertible(f, F):
            return True
    if F.order**H.dim > budget:
        raise SearchBudgetExceeded(f"{F.order}^{H.dim} candidate isomorphisms exceed the budget {budget}")
    for coeffs in itertools.product(range(F.order), repeat=H.dim):
        if map_is_invertible(H.combination(coeffs), F):
            return True
    return False


def find_isomorphism(M: Rep, N: Rep, trials: int = 256, seed: int = 0) -> Map | None:
    if M.dims != N.dims:
        return None
    H = hom(M, N)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        f = H.combination(rng.integers(0, M.F.order, size=H.dim))
        if map_is_invertible(f, M.F):
            return f
    return None


def end_is_local(M: Rep) -> bool:
    """End(M) = k * id + N with N a nilpotent ideal, i.e. End/rad = k."""
    F = M.F
    E = end(M)
    if M.dim == 0:
        return False
    ident = M.identity()
    nil_parts = []
    for phi in E.basis:
        for lam in range(F.order):
            cand = add_maps(phi, scale_map(lam, ident, F))
            if map_is_nilpotent(cand, F):
                nil_parts.append(flatten(cand))
                break
        else:
            return False
    n = la.row_basis(la.asmat(nil_parts, E.vectors.shape[1]), F) if nil_parts else la.zeros(0, E.vectors.shape[1])
    if n.shape[0] != E.dim - 1:
        return False
    # powers of the span shrink to zero iff it is a nilpotent ideal
    power = n
    basis_maps = [unflatten(r, M, M) for r in n]
    for _ in range(M.dim + 1):
        if power.shape[0] == 0:
            return True
        prods = [
            flatten(compose(unflatten(p, M, M), q, F)) for p in power for q in basis_maps
        ]
        nxt = la.row_basis(la.asmat(prods, E.vectors.shape[1]), F) if prods else la.zeros(0, E.vectors.shape[1])
        if not la.Subspace(F, E.vectors.shape[1], n).contains(nxt) and nxt.shape[0]:
            return False
        power = nxt
    return power.shape[0] == 0


def is_indecomposable(M: Rep) -> bool:
    """Absolute indecomposability: End(M) is local with residue field k."""
    return end_is_local(M)


# small utilities used by reporting ------------------------------------------------


def describe(M: Rep) -> dict:
    L = M.loewy
    return {
        "name": M.name,
        "dims": list(M.dims),
        "radical_layers": [list(x) for x in L.radical_layers],
        "socle_layers": [list(x) for x in L.socle_layers],
    }
