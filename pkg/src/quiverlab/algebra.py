"""Finite-dimensional quotients of path algebras.

Paths are strings of arrow letters written right to left: in ``"ba"`` the arrow
``a`` is traversed first, so the product of paths is string concatenation
``p * q = p + q`` whenever ``source(p) == target(q)``.  Vertex idempotents are
the empty word at a vertex.

An algebra kQ/I is compiled by a two-sided Groebner completion carried out in
the truncated path algebra kQ / (paths of length > cap).  The leading word of an
element is its shortest word (ties broken lexicographically), so rewriting
always replaces a word by longer ones and terminates at the length cap.  If the
completion leaves no normal word of length ``cap``, every path of that length
lies in I plus longer paths, and (I being admissible) the normal words are a
basis of kQ/I.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import linalg
from .scalars import GF, GF2


class DimensionMismatch(ValueError):
    pass


class CapTooSmall(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: dict[str, tuple[int, int]]  # letter -> (source, target)
    names: dict[str, str] = field(default_factory=dict)  # letter -> display name

    def __post_init__(self):
        for a, (s, t) in self.arrows.items():
            if len(a) != 1:
                raise ValueError(f"arrow letters must be single characters, got {a!r}")
            if s not in self.vertices or t not in self.vertices:
                raise ValueError(f"arrow {a} has an endpoint outside the vertex set")

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.arrows.items()))))

    def source(self, word: str, vertex: int | None = None) -> int:
        return self.arrows[word[-1]][0] if word else vertex

    def target(self, word: str, vertex: int | None = None) -> int:
        return self.arrows[word[0]][1] if word else vertex

    def is_path(self, word: str) -> bool:
        return all(self.arrows[x][0] == self.arrows[y][1] for x, y in zip(word, word[1:]))

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, {a: (t, s) for a, (s, t) in self.arrows.items()}, dict(self.names))

    def pretty(self, word: str, vertex: int | None = None) -> str:
        if not word:
            return f"e{vertex}"
        return "".join(self.names.get(x, x) for x in word)


class Path(NamedTuple):
    source: int
    target: int
    word: str


# The preset quiver: alpha a loop at 0, beta 0 -> 1, gamma 1 -> 0.
Q = Quiver((0, 1), {"a": (0, 0), "b": (0, 1), "g": (1, 0)}, {"a": "α", "b": "β", "g": "γ"})


@dataclass
class RelationSet:
    """Relations as {word: coefficient} dicts over a field (characteristic 2, so sign-free)."""

    field: GF
    relations: list[dict[str, int]]
    params: dict[str, int] = field(default_factory=dict)
    name: str = ""

    def check(self, quiver: Quiver) -> None:
        for rel in self.relations:
            ends = set()
            for w, c in rel.items():
                if len(w) < 2:
                    raise NotAdmissible(f"relation term {w!r} has length < 2")
                if not quiver.is_path(w):
                    raise NotAdmissible(f"{w!r} is not a path")
                ends.add((quiver.source(w), quiver.target(w)))
                if not 0 <= c < self.field.order:
                    raise ValueError(f"coefficient {c} outside {self.field}")
            if len(ends) > 1:
                raise NotAdmissible(f"relation {rel} mixes paths with different endpoints")


def _key(w: str) -> tuple[int, str]:
    return (len(w), w)


def lambda_relations(c: int, F: GF = GF2) -> RelationSet:
    """I_c = < βγ, α² - c(γβα)², (γβα)² - (αγβ)² >."""
    rels = [{"bg": 1}, {"aa": 1, "gba" * 2: c} if c else {"aa": 1}, {"gba" * 2: 1, "agb" * 2: 1}]
    return RelationSet(F, rels, {"c": c}, f"lambda:c={c}")


def lambdahat_relations(d: int, F: GF = GF2) -> RelationSet:
    """The four relations for the double-cover block, with parameter d."""
    third = {"aa": 1, "gb" + "agb" * 3: 1}
    if d:
        third["agb" * 4] = d
    rels = [
        {"gbg": 1, "ag" + "bag" * 3: 1},
        {"bgb": 1, "ba" + "gba" * 3: 1},
        third,
        {"baa": 1},
    ]
    return RelationSet(F, rels, {"d": d}, f"lambdahat:d={d}")


EXPECTED = {"lambda": {0: 12, 1: 7}, "lambdahat": {0: 24, 1: 14}}


class Rewriter:
    """Groebner completion of a relation set in the length-truncated path algebra."""

    def __init__(self, quiver: Quiver, rels: RelationSet, cap: int):
        self.quiver = quiver
        self.F = rels.field
        self.cap = cap
        self.rules: dict[str, dict[str, int]] = {}  # lead word -> tail (lead = tail in kQ/I)
        self._complete([dict(r) for r in rels.relations])

    # polynomial helpers: dicts {word: coefficient}, coefficients XOR-added
    def _add_term(self, poly: dict[str, int], w: str, c: int) -> None:
        if len(w) > self.cap or not c:
            return
        v = poly.get(w, 0) ^ c
        if v:
            poly[w] = v
        else:
            poly.pop(w, None)

    def _scaled(self, poly: dict[str, int], c: int) -> dict[str, int]:
        mul = self.F.mul_table
        return {w: int(mul[c, v]) for w, v in poly.items()}

    def _find_rule(self, w: str):
        for u in self.rules:
            i = w.find(u)
            if i >= 0:
                return u, i
        return None

    def reduce(self, poly: dict[str, int]) -> dict[str, int]:
        """Normal form of a combination of words."""
        mul = self.F.mul_table
        pending: dict[str, int] = {}
        for w, c in poly.items():
            self._add_term(pending, w, c)
        heap = [_key(w) for w in pending]
        heapq.heapify(heap)
        out: dict[str, int] = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = pending.pop(w, 0)
            if not c:
                continue
            hit = self._find_rule(w)
            if hit is None:
                out[w] = c
                continue
            u, i = hit
            x, z = w[:i], w[i + len(u) :]
            for t, tc in self.rules[u].items():
                nw = x + t + z
                if len(nw) > self.cap:
                    continue
                had = nw in pending
                self._add_term(pending, nw, int(mul[c, tc]))
                if not had and nw in pending:
                    heapq.heappush(heap, _key(nw))
        return out

    def _make_rule(self, poly: dict[str, int]):
        poly = self.reduce(poly)
        if not poly:
            return None
        lead = min(poly, key=_key)
        inv = int(self.F.inv_table[poly[lead]])
        monic = self._scaled(poly, inv)
        del monic[lead]
        return lead, monic

    def _overlaps(self, u1: str, u2: str):
        # u1 = x s, u2 = s z, s a nonempty proper overlap
        for k in range(1, min(len(u1), len(u2))):
            if u1[-k:] == u2[:k]:
                yield u1[:-k], u2[k:]

    def _complete(self, polys: list[dict[str, int]]) -> None:
        queue = list(polys)
        while True:
            while queue:
                rule = self._make_rule(queue.pop())
                if rule is None:
                    continue
                lead, tail = rule
                # interreduce: rules whose lead contains the new lead go back on the queue
                for u in [u for u in self.rules if lead in u]:
                    t = self.rules.pop(u)
                    old = dict(t)
                    old[u] = old.get(u, 0) ^ 1
                    queue.append(old)
                self.rules[lead] = tail
                self.rules = {u: self.reduce(t) for u, t in self.rules.items()}
            for u1, u2 in itertools.product(list(self.rules), repeat=2):
                for x, z in self._overlaps(u1, u2):
                    s: dict[str, int] = {}
                    for t, c in self.rules[u1].items():
                        self._add_term(s, t + z, c)
                    for t, c in self.rules[u2].items():
                        self._add_term(s, x + t, c)
                    if self.reduce(s):
                        queue.append(s)
            if not queue:
                return

    def normal_words(self) -> list[Path]:
        """All irreducible paths, vertex idempotents first, ordered by length then word."""
        q = self.quiver
        out = [Path(v, v, "") for v in q.vertices]
        layer = [Path(s, t, a) for a, (s, t) in sorted(q.arrows.items())]
        layer = [p for p in layer if not any(p.word.startswith(u) for u in self.rules)]
        length = 1
        while layer:
            if length >= self.cap:
                raise CapTooSmall(f"normal word {layer[0].word!r} reaches the length cap {self.cap}")
            out.extend(sorted(layer, key=lambda p: _key(p.word)))
            nxt = []
            for p in layer:
                for a, (s, t) in sorted(q.arrows.items()):
                    if s != p.target:
                        continue
                    w = a + p.word
                    if not any(w.startswith(u) for u in self.rules):
                        nxt.append(Path(p.source, t, w))
            layer = nxt
            length += 1
        return out


class Algebra:
    """kQ/I with an explicit path basis and structure constants."""

    def __init__(self, quiver: Quiver, rels: RelationSet, cap: int = 20, kind: str | None = None):
        rels.check(quiver)
        self.quiver = quiver
        self.relations = rels
        self.F = rels.field
        self.cap = cap
        self.kind = kind
        self.name = rels.name or "algebra"
        self.rewriter = Rewriter(quiver, rels, cap)
        self.basis: list[Path] = self.rewriter.normal_words()
        self.index = {(p.source, p.word): i for i, p in enumerate(self.basis)}

    def __repr__(self) -> str:
        return f"Algebra({self.name}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> dict[str, tuple[int, int]]:
        return self.quiver.arrows

    def normal_form(self, poly: dict[str, int]) -> dict[str, int]:
        return self.rewriter.reduce(poly)

    def word_nf(self, word: str) -> dict[str, int]:
        return self.rewriter.reduce({word: 1})

    def vector(self, path_source: int, poly: dict[str, int]) -> np.ndarray:
        """Coordinates of a normal-form combination of paths starting at ``path_source``."""
        v = linalg.zeros(1, self.dim)[0]
        for w, c in poly.items():
            v[self.index[(path_source, w)]] = c
        return v

    def product(self, i: int, j: int) -> dict[int, int]:
        """Structure constants of basis[i] * basis[j] as {basis index: coefficient}."""
        p, q = self.basis[i], self.basis[j]
        if p.source != q.target:
            return {}
        nf = self.word_nf(p.word + q.word)
        return {self.index[(q.source, w)]: c for w, c in nf.items()}

    @cached_property
    def structure(self) -> np.ndarray:
        """T[i, j, k] = coefficient of basis[k] in basis[i] * basis[j]."""
        n = self.dim
        T = np.zeros((n, n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(n):
                for k, c in self.product(i, j).items():
                    T[i, j, k] = c
        return T

    def check_associativity(self) -> bool:
        """Exhaustive check of (xy)z = x(yz) over all basis triples."""
        T = self.structure
        n = self.dim
        if self.F.e == 1:
            t = T.astype(np.int64)
            left = np.einsum("ijm,mkl->ijkl", t, t) & 1
            right = np.einsum("jkm,iml->ijkl", t, t) & 1
            return bool(np.array_equal(left, right))
        mul = self.F.mul_table
        left = np.zeros((n, n, n, n), dtype=np.uint8)
        right = np.zeros((n, n, n, n), dtype=np.uint8)
        for m in range(n):
            left ^= mul[T[:, :, m][:, :, None, None], T[m][None, None, :, :]]
            right ^= mul[T[:, :, m][None, :, :, None], T[:, m, :][:, None, None, :]]
        return bool(np.array_equal(left, right))

    def check_unit(self) -> bool:
        """e0 + e1 + ... acts as a two-sided identity."""
        T = self.structure
        idem = [self.index[(v, "")] for v in self.vertices]
        left = sum(T[i].astype(np.int64) for i in idem) % 2 if self.F.e == 1 else None
        if left is None:
            left = np.bitwise_xor.reduce([T[i] for i in idem])
            right = np.bitwise_xor.reduce([T[:, i] for i in idem])
        else:
            right = sum(T[:, i].astype(np.int64) for i in idem) % 2
        eye = np.eye(self.dim, dtype=np.int64)
        return bool(np.array_equal(left, eye) and np.array_equal(right, eye))

    def basis_at(self, source: int) -> list[int]:
        return [i for i, p in enumerate(self.basis) if p.source == source]

    def projective_dims(self) -> dict[int, int]:
        return {v: len(self.basis_at(v)) for v in self.vertices}

    @cached_property
    def opposite(self) -> "Algebra":
        rels = RelationSet(
            self.F,
            [{w[::-1]: c for w, c in r.items()} for r in self.relations.relations],
            dict(self.relations.params),
            self.name + ":op",
        )
        return Algebra(self.quiver.opposite(), rels, self.cap)

    def dump(self) -> str:
        """One line per basis path, then one line per nonzero product of basis paths."""
        q = self.quiver
        lines = [f"# {self.name} dim {self.dim}"]
        for p in self.basis:
            lines.append(f"basis {q.pretty(p.word, p.source)} {p.source}->{p.target}")
        for i, p in enumerate(self.basis):
            if not p.word:
                continue
            for j, r in enumerate(self.basis):
                if not r.word:
                    continue
                prod = self.product(i, j)
                if prod:
                    terms = " + ".join(
                        (f"{c}*" if c != 1 else "") + q.pretty(self.basis[k].word, self.basis[k].source)
                        for k, c in sorted(prod.items())
                    )
                    lines.append(f"{q.pretty(p.word)} * {q.pretty(r.word)} = {terms}")
        return "\n".join(lines) + "\n"


def build_algebra(
    quiver: Quiver, rels: RelationSet, cap: int = 20, expected: dict[int, int] | None = None, kind: str | None = None
) -> Algebra:
    """Compile kQ/I and validate it: associativity always, projective dims against ``expected``."""
    alg = Algebra(quiver, rels, cap, kind)
    if expected is not None:
        got = alg.projective_dims()
        if got != expected:
            raise DimensionMismatch(f"{alg.name}: projective dims {got}, expected {expected}")
    if not alg.check_associativity():
        raise DimensionMismatch(f"{alg.name}: structure constants are not associative")
    return alg


_CACHE: dict = {}


def lambda_algebra(c: int = 0, F: GF = GF2) -> Algebra:
    key = ("lambda", c, F.e)
    if key not in _CACHE:
        _CACHE[key] = build_algebra(Q, lambda_relations(c, F), expected=EXPECTED["lambda"], kind="lambda")
    return _CACHE[key]


def lambdahat_algebra(d: int = 0, F: GF = GF2) -> Algebra:
    key = ("lambdahat", d, F.e)
    if key not in _CACHE:
        _CACHE[key] = build_algebra(Q, lambdahat_relations(d, F), expected=EXPECTED["lambdahat"], kind="lambdahat")
    return _CACHE[key]


def cartan(alg: Algebra) -> np.ndarray:
    """C[i, j] = multiplicity of S_j in P_i (= number of basis paths i -> j)."""
    vs = alg.vertices
    C = np.zeros((len(vs), len(vs)), dtype=np.int64)
    for p in alg.basis:
        C[vs.index(p.source), vs.index(p.target)] += 1
    return C


@dataclass
class SurjectionCertificate:
    holds: bool
    images: list[tuple[str, str]]  # (relation, normal form of its image)

    def __bool__(self) -> bool:
        return self.holds


def _format_poly(q: Quiver, poly: dict[str, int]) -> str:
    if not poly:
        return "0"
    return " + ".join((f"{c}*" if c != 1 else "") + q.pretty(w) for w, c in sorted(poly.items(), key=lambda x: _key(x[0])))


def check_surjection(src: Algebra, dst: Algebra, arrow_map: dict[str, str] | None = None) -> SurjectionCertificate:
    """Does the arrow assignment src -> dst kill every relation of src?

    Such an assignment always hits the generators of dst, so it induces a
    surjection exactly when the relations map to zero.
    """
    arrow_map = arrow_map or {a: a for a in src.arrows}
    images = []
    holds = True
    for rel in src.relations.relations:
        img: dict[str, int] = {}
        for w, c in rel.items():
            nw = "".join(arrow_map[x] for x in w)
            img[nw] = img.get(nw, 0) ^ c
        nf = dst.normal_form(img)
        holds &= not nf
        images.append((_format_poly(src.quiver, rel), _format_poly(dst.quiver, nf)))
    return SurjectionCertificate(holds, images)
