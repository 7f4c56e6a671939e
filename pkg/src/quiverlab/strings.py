"""Strings and bands for the socle quotient of the dihedral-type algebra.

A string is a walk l_1 ... l_n of arrows and inverse arrows visiting basis
vectors z_0, ..., z_n.  A direct letter l_i = a means a z_i = z_{i-1}; an
inverse letter l_i = a^- means a z_{i-1} = z_i.  A maximal run of direct letters
read left to right is a path word that must not contain a zero relation, and
likewise for the reversal of an inverse run.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from . import rep as R
from .algebra import Algebra

Letter = tuple[str, int]  # (arrow, +1 direct / -1 inverse)

# Internal letter code: an arrow letter in lower case is direct, upper case is inverse.


class NotStringAlgebra(ValueError):
    pass


def _inv_code(code: str) -> str:
    return code[::-1].swapcase()


@dataclass(frozen=True)
class StringWord:
    code: str
    start: int  # vertex of z_0

    @classmethod
    def from_letters(cls, letters: tuple[Letter, ...], start: int) -> "StringWord":
        return cls("".join(a if s > 0 else a.upper() for a, s in letters), start)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple((x.lower(), 1 if x.islower() else -1) for x in self.code)

    def __len__(self) -> int:
        return len(self.code)

    def inverse(self, end: int) -> "StringWord":
        return StringWord(_inv_code(self.code), end)

    def __str__(self) -> str:
        if not self.code:
            return f"1_{self.start}"
        return " ".join(x if x.islower() else x.lower() + "⁻" for x in self.code)


@dataclass(frozen=True)
class BandWord:
    word: StringWord


@dataclass
class SocleQuotient:
    """Monomial presentation of alg / soc(alg), with certificate data."""

    alg: Algebra
    zero_relations: tuple[str, ...]  # minimal zero paths
    socle_dim: int
    quotient_dim: int

    def is_zero_path(self, w: str) -> bool:
        return any(r in w for r in self.zero_relations)


def _left_socle(alg: Algebra) -> np.ndarray:
    """Rows (in algebra coordinates) spanning the socle of alg as a left module."""
    F = alg.F
    n = alg.dim
    T = alg.structure
    conds = []
    for a in sorted(alg.arrows):
        i = alg.index[(alg.arrows[a][0], a)]
        # x -> a x as a matrix whose column k is the coordinate vector of a * basis[k]
        conds.append(T[i].T.copy())
    return la.kernel_basis(np.concatenate(conds), F, n)


def socle_quotient(alg: Algebra, maxlen: int | None = None) -> SocleQuotient:
    """Compute alg/soc(alg); certify that it is monomial and a string algebra."""
    F = alg.F
    q = alg.quiver
    soc = _left_socle(alg)
    soc_space = la.Subspace(F, alg.dim, soc)
    # the left socle is a two-sided ideal for these algebras; check it
    T = alg.structure
    for r in soc:
        for j in range(alg.dim):
            right = np.bitwise_xor.reduce(F.mul_table[r[:, None], T[:, j, :]], axis=0)
            if not soc_space.contains(right):
                raise NotStringAlgebra("socle is not a two-sided ideal")
    # images of all paths in alg / soc
    maxlen = maxlen or alg.cap
    quotient_dim = alg.dim - soc_space.dim
    nonzero: list[tuple[int, str]] = [(v, "") for v in alg.vertices]
    zero: list[str] = []
    layer = [(s, a) for a, (s, t) in sorted(alg.arrows.items())]
    while layer:
        nxt = []
        for s, w in layer:
            if any(z in w for z in zero):
                continue
            vec = alg.vector(s, alg.word_nf(w))
            if soc_space.contains(vec):
                zero.append(w)
                continue
            nonzero.append((s, w))
            for a, (s2, t2) in sorted(alg.arrows.items()):
                if s2 == q.target(w):
                    nxt.append((s, a + w))
        layer = nxt
        if layer and len(layer[0][1]) > maxlen:
            raise NotStringAlgebra("nonzero paths exceed the length bound")
    vecs = [alg.vector(s, alg.word_nf(w)) for s, w in nonzero]
    # monomial iff the surviving paths are independent modulo the socle
    stacked = la.asmat(vecs, alg.dim)
    if la.rank(np.concatenate([stacked, soc]), F) != len(nonzero) + soc_space.dim or len(nonzero) != quotient_dim:
        raise NotStringAlgebra("socle quotient is not a monomial algebra")
    sq = SocleQuotient(alg, tuple(sorted(zero, key=lambda w: (len(w), w))), soc_space.dim, quotient_dim)
    _check_string_conditions(sq)
    return sq


def _check_string_conditions(sq: SocleQuotient) -> None:
    arrows = sq.alg.arrows
    for v in sq.alg.vertices:
        if sum(1 for s, t in arrows.values() if s == v) > 2 or sum(1 for s, t in arrows.values() if t == v) > 2:
            raise NotStringAlgebra(f"vertex {v} has more than two arrows in or out")
    for b, (s, t) in arrows.items():
        after = [a for a, (s2, _) in arrows.items() if s2 == t and not sq.is_zero_path(a + b)]
        before = [c for c, (_, t2) in arrows.items() if t2 == s and not sq.is_zero_path(b + c)]
        if len(after) > 1 or len(before) > 1:
            raise NotStringAlgebra(f"arrow {b} has two nonzero continuations")


# strings ---------------------------------------------------------------------


def _run_path(code: str) -> str:
    """Path word of the maximal same-sign run at the end of ``code``."""
    direct = code[-1].islower()
    k = len(code)
    while k > 0 and code[k - 1].islower() == direct:
        k -= 1
    run = code[k:]
    return run if direct else run[::-1].lower()


def _extensions(sq: SocleQuotient, code: str, end: int):
    """Letters that can be appended to a string ending at vertex ``end``."""
    for a, (s, t) in sorted(sq.alg.arrows.items()):
        for x, nv, ok in ((a, s, t == end), (a.upper(), t, s == end)):
            if not ok or (code and code[-1] == x.swapcase()):
                continue
            new = code + x
            if sq.is_zero_path(_run_path(new)):
                continue
            yield new, nv


def vertices_along(arrows, w: StringWord) -> list[int]:
    vs = [w.start]
    for x in w.code:
        s, t = arrows[x.lower()]
        vs.append(s if x.islower() else t)
    return vs


def end_vertex(arrows, w: StringWord) -> int:
    return vertices_along(arrows, w)[-1]


def _sort_key(code: str) -> str:
    # direct letters order before inverse ones
    return code.swapcase()


def canonical(w: StringWord, end: int) -> StringWord:
    """The smaller of a string and its inverse (direct letters first)."""
    inv = w.inverse(end)
    if not w.code:
        return w
    return w if _sort_key(w.code) <= _sort_key(inv.code) else inv


def is_valid_string(sq: SocleQuotient, w: StringWord) -> bool:
    code, v = "", w.start
    for x in w.code:
        for new, nv in _extensions(sq, code, v):
            if new[-1] == x:
                code, v = new, nv
                break
        else:
            return False
    return True


def all_strings(sq: SocleQuotient, maxlen: int) -> list[list[tuple[StringWord, int]]]:
    """Every string (both orientations) by length, with its end vertex."""
    frontier = [("", v, v) for v in sq.alg.vertices]
    layers = [[(StringWord("", v), v) for v in sq.alg.vertices]]
    for _ in range(maxlen):
        nxt = [(new, start, nv) for code, start, end in frontier for new, nv in _extensions(sq, code, end)]
        if not nxt:
            break
        layers.append([(StringWord(c, s), e) for c, s, e in nxt])
        frontier = nxt
    return layers


def enumerate_strings(alg: Algebra | SocleQuotient, maxlen: int) -> list[StringWord]:
    """Strings of length <= maxlen, one per inverse pair, in canonical form."""
    sq = alg if isinstance(alg, SocleQuotient) else socle_quotient(alg)
    seen: set[StringWord] = set()
    out = []
    for layer in all_strings(sq, maxlen):
        for w, end in layer:
            c = canonical(w, end)
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def string_module(alg: Algebra, w: StringWord, name: str = "") -> R.Rep:
    """The string module: basis z_0..z_n, arrows acting along the word."""
    arrows = alg.arrows
    v = w.start
    for x in w.code:
        s, t = arrows[x.lower()]
        if v != (t if x.islower() else s):
            raise ValueError(f"{w} does not walk the quiver from vertex {w.start}")
        v = s if x.islower() else t
    vs = vertices_along(arrows, w)
    pos, dims = [], [0] * len(alg.vertices)
    for v in vs:
        pos.append(dims[v])
        dims[v] += 1
    mats = {a: la.zeros(dims[t], dims[s]) for a, (s, t) in arrows.items()}
    for i, x in enumerate(w.code, start=1):
        src, dst = (i, i - 1) if x.islower() else (i - 1, i)
        mats[x.lower()][pos[dst], pos[src]] = 1
    return R.Rep(alg, dims, mats, name=name or f"M({w})")


def _substrings(arrows, w: StringWord) -> tuple[Counter, Counter]:
    """Multisets of factor and image substrings, keyed up to inversion.

    A factor substring has a direct letter (or nothing) on its left and an inverse
    letter (or nothing) on its right; an image substring the other way round.
    """
    code = w.code
    n = len(code)
    vs = vertices_along(arrows, w)
    inv_full = _inv_code(code)
    direct = [x.islower() for x in code]
    # boundary positions: i is a left end, j a right end of the substring code[i:j]
    left_direct = [i for i in range(n + 1) if i == 0 or direct[i - 1]]
    left_inverse = [i for i in range(n + 1) if i == 0 or not direct[i - 1]]
    right_inverse = [j for j in range(n + 1) if j == n or not direct[j]]
    right_direct = [j for j in range(n + 1) if j == n or direct[j]]

    def key(i: int, j: int):
        if i == j:
            return vs[i]
        sub, inv = code[i:j], inv_full[n - j : n - i]
        return sub if sub <= inv else inv

    factor, image = Counter(), Counter()
    for i in left_direct:
        for j in right_inverse:
            if j >= i:
                factor[key(i, j)] += 1
    for i in left_inverse:
        for j in right_direct:
            if j >= i:
                image[key(i, j)] += 1
    return factor, image


def hom_dim_combinatorial(alg: Algebra, c: StringWord, d: StringWord) -> int:
    """dim Hom(M(c), M(d)): pairs (factor substring of c, image substring of d) that agree up to inversion."""
    factor, _ = _substrings(alg.arrows, c)
    _, image = _substrings(alg.arrows, d)
    return sum(k * image[key] for key, k in factor.items())


def end_dim_combinatorial(alg: Algebra, w: StringWord) -> int:
    factor, image = _substrings(alg.arrows, w)
    return sum(k * image[key] for key, k in factor.items())


# bands ---------------------------------------------------------------------------


def _is_primitive(code: str) -> bool:
    n = len(code)
    return all(code != code[k:] + code[:k] for k in range(1, n) if n % k == 0)


def _band_key(arrows, w: StringWord) -> StringWord:
    n = len(w.code)
    vs = vertices_along(arrows, w)
    cands = []
    for k in range(n):
        rot = w.code[k:] + w.code[:k]
        # a closed walk and its inverse both start and end at vs[k]
        cands.append(StringWord(rot, vs[k]))
        cands.append(StringWord(_inv_code(rot), vs[k]))
    return min(cands, key=lambda c: (_sort_key(c.code), c.start))


def enumerate_bands(alg: Algebra | SocleQuotient, maxlen: int) -> list[BandWord]:
    """Primitive closed walks whose powers are all strings, up to rotation and inversion."""
    sq = alg if isinstance(alg, SocleQuotient) else socle_quotient(alg)
    arrows = sq.alg.arrows
    seen, out = set(), []
    for layer in all_strings(sq, maxlen)[1:]:
        for w, end in layer:
            if end != w.start or w.code.islower() or w.code.isupper():
                continue
            if not _is_primitive(w.code) or not is_valid_string(sq, StringWord(w.code * 3, w.start)):
                continue
            key = _band_key(arrows, w)
            if key not in seen:
                seen.add(key)
                out.append(BandWord(key))
    return out


def band_module(alg: Algebra, b: BandWord, lam: int = 1) -> R.Rep:
    """Band module with parameter lam and multiplicity one: the last letter carries lam."""
    w = b.word
    arrows = alg.arrows
    vs = vertices_along(arrows, w)[:-1]  # z_n is identified with z_0
    n = len(w.code)
    pos, dims = [], [0] * len(alg.vertices)
    for v in vs:
        pos.append(dims[v])
        dims[v] += 1
    mats = {a: la.zeros(dims[t], dims[s]) for a, (s, t) in arrows.items()}
    for i, x in enumerate(w.code, start=1):
        zi, zprev = i % n, i - 1
        src, dst = (zi, zprev) if x.islower() else (zprev, zi)
        mats[x.lower()][pos[dst], pos[src]] ^= lam if i == n else 1
    return R.Rep(alg, dims, mats, name=f"B({w}; {lam})")


def nonscalar_endomorphism(M: R.Rep) -> R.Map | None:
    """An endomorphism outside k * id, verified to commute, or None."""
    E = R.end(M)
    ident = R.flatten(M.identity())
    scalars = la.Subspace(M.F, E.vectors.shape[1], ident.reshape(1, -1))
    for row in E.vectors:
        if not scalars.contains(row):
            f = R.unflatten(row, M, M)
            if M.is_intertwiner(f, M):
                return f
    return None


@dataclass
class Classification:
    modules: list[tuple[StringWord, R.Rep]]
    end_dims: dict[str, int]  # every enumerated string -> dim End
    bands: list[tuple[str, bool]]  # band word, non-scalar witness found
    maxlen: int
    zero_relations: tuple[str, ...]
    numeric_checked: int = 0

    @property
    def others_at_least_two(self) -> bool:
        return all(d >= 2 for d in self.end_dims.values() if d != 1)


def classify_end_k(alg: Algebra, maxlen: int = 20, band_len: int = 4, numeric_check_len: int = 6) -> Classification:
    """String modules with End = k up to a length bound, plus band witnesses.

    dim End is counted combinatorially; for strings up to ``numeric_check_len``
    it is recomputed from the hom kernel and must agree.
    """
    sq = socle_quotient(alg)
    mods, dims, checked = [], {}, 0
    for w in enumerate_strings(sq, maxlen):
        d = end_dim_combinatorial(alg, w)
        if len(w) <= numeric_check_len:
            numeric = R.end(string_module(alg, w)).dim
            if numeric != d:
                raise AssertionError(f"combinatorial dim End {d} disagrees with hom {numeric} for {w}")
            checked += 1
        dims[str(w)] = d
        if d == 1:
            mods.append((w, string_module(alg, w)))
    bands = []
    for b in enumerate_bands(sq, band_len):
        M = band_module(alg, b, 1)
        bands.append((str(b.word), nonscalar_endomorphism(M) is not None))
    return Classification(mods, dims, bands, maxlen, sq.zero_relations, checked)
