"""Character tables of the double cover of S5 and of S5, exact over Q(sqrt2, sqrt3).

Tables are data, entered by hand and guarded by a checksum plus orthogonality;
nothing here computes a character table from a group.  Characters are indexed
from 0 internally; ``names`` carries the printed labels.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

from .scalars import SQRT2, SQRT3, NotIntegral, Quad, reduce_mod2


class NoNonnegativeSolution(ValueError):
    pass


class ChecksumMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ClassInfo:
    name: str
    order: int
    length: int


@dataclass(frozen=True)
class CharacterTable:
    group: str
    classes: tuple[ClassInfo, ...]
    names: tuple[str, ...]
    rows: tuple[tuple[Quad, ...], ...]

    @property
    def order(self) -> int:
        return sum(c.length for c in self.classes)

    @property
    def degrees(self) -> list[int]:
        return [int(r[0].a) for r in self.rows]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def row(self, name_or_index) -> tuple[Quad, ...]:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return self.rows[i]

    def checksum(self) -> str:
        text = ";".join(
            [",".join(f"{c.name}:{c.order}:{c.length}" for c in self.classes)]
            + [n + "=" + ",".join(str(v) for v in r) for n, r in zip(self.names, self.rows)]
        )
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def render(self) -> str:
        """Aligned text rendering in the stored class order."""
        head = [["class:"] + [c.name for c in self.classes]]
        head.append(["order:"] + [str(c.order) for c in self.classes])
        head.append(["length:"] + [str(c.length) for c in self.classes])
        body = [[n] + [str(v) for v in r] for n, r in zip(self.names, self.rows)]
        grid = head + body
        widths = [max(len(line[k]) for line in grid) for k in range(len(grid[0]))]
        lines = []
        for line in grid:
            lines.append("  ".join(cell.ljust(widths[0]) if k == 0 else cell.rjust(widths[k]) for k, cell in enumerate(line)))
        return "\n".join(lines)


@dataclass(frozen=True)
class BrauerTable:
    classes: tuple[ClassInfo, ...]
    names: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def render(self) -> str:
        grid = [["class:"] + [c.name for c in self.classes], ["order:"] + [str(c.order) for c in self.classes]]
        grid += [[n] + [str(v) for v in r] for n, r in zip(self.names, self.rows)]
        widths = [max(len(line[k]) for line in grid) for k in range(len(grid[0]))]
        return "\n".join(
            "  ".join(c.ljust(widths[0]) if k == 0 else c.rjust(widths[k]) for k, c in enumerate(line)) for line in grid
        )


@dataclass(frozen=True)
class DecompMatrix:
    rows: tuple[str, ...]
    columns: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _q(v) -> Quad:
    return v if isinstance(v, Quad) else Quad(v)


def _table(group, classes, names, rows) -> CharacterTable:
    return CharacterTable(
        group,
        tuple(ClassInfo(*c) for c in classes),
        tuple(names),
        tuple(tuple(_q(v) for v in r) for r in rows),
    )


_r2, _r3 = SQRT2, SQRT3

# The double cover with generalized quaternion Sylow 2-subgroups.  The order-6
# class entry of the 4-dimensional faithful character psi5 is 2 (see the ledger).
HAT_S5 = _table(
    "2.S5",
    [
        ("C1", 1, 1), ("C2", 2, 1), ("C3", 4, 30), ("C4", 3, 20), ("C5", 6, 20), ("C6", 5, 24),
        ("C7", 10, 24), ("C8", 4, 20), ("C9", 8, 30), ("C10", 8, 30), ("C11", 12, 20), ("C12", 12, 20),
    ],
    [f"psi{i}" for i in range(1, 13)],
    [
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1],
        [5, 5, 1, -1, -1, 0, 0, 1, -1, -1, 1, 1],
        [5, 5, 1, -1, -1, 0, 0, -1, 1, 1, -1, -1],
        [4, -4, 0, -2, 2, -1, 1, 0, 0, 0, 0, 0],
        [6, 6, -2, 0, 0, 1, 1, 0, 0, 0, 0, 0],
        [6, -6, 0, 0, 0, 1, -1, 0, _r2, -_r2, 0, 0],
        [6, -6, 0, 0, 0, 1, -1, 0, -_r2, _r2, 0, 0],
        [4, 4, 0, 1, 1, -1, -1, 2, 0, 0, -1, -1],
        [4, 4, 0, 1, 1, -1, -1, -2, 0, 0, 1, 1],
        [4, -4, 0, 1, -1, -1, 1, 0, 0, 0, _r3, -_r3],
        [4, -4, 0, 1, -1, -1, 1, 0, 0, 0, -_r3, _r3],
    ],
)

# S5 on its own seven classes; chi1..chi5 are the principal-block characters.
S5_TABLE = _table(
    "S5",
    [
        ("1", 1, 1), ("(12)(34)", 2, 15), ("(12)", 2, 10), ("(123)", 3, 20),
        ("(123)(45)", 6, 20), ("(12345)", 5, 24), ("(1234)", 4, 30),
    ],
    ["chi1", "chi2", "chi3", "chi4", "chi5", "chi6", "chi7"],
    [
        [1, 1, 1, 1, 1, 1, 1],
        [1, 1, -1, 1, -1, 1, -1],
        [5, 1, 1, -1, 1, 0, -1],
        [5, 1, -1, -1, -1, 0, 1],
        [6, -2, 0, 0, 0, 1, 0],
        [4, 0, 2, 1, -1, -1, 0],
        [4, 0, -2, 1, 1, -1, 0],
    ],
)

# S5 class -> a class of the cover lying over it; S5 row -> cover row it inflates to.
S5_CLASS_LIFT = ("C1", "C3", "C8", "C4", "C11", "C6", "C9")
S5_ROW_LIFT = ("psi1", "psi2", "psi3", "psi4", "psi6", "psi9", "psi10")

BRAUER = BrauerTable(
    (ClassInfo("C1", 1, 1), ClassInfo("C4", 3, 20), ClassInfo("C6", 5, 24)),
    ("phi0", "phi1", "phi2"),
    ((1, 1, 1), (4, -2, -1), (4, 1, -1)),
)
# the same three classes in the S5 table
S5_REGULAR = ("1", "(123)", "(12345)")

CHECKSUMS = {"2.S5": "5c52cab428f13a6a", "S5": "41d244202f82665b"}


def verify_checksums() -> None:
    for t in (HAT_S5, S5_TABLE):
        got = t.checksum()
        if got != CHECKSUMS[t.group]:
            raise ChecksumMismatch(f"{t.group} table checksum {got} != {CHECKSUMS[t.group]}")


# inner products and orthogonality -------------------------------------------------


def inner_product(t: CharacterTable, x, y) -> Quad:
    """(1/|G|) sum |C| x(C) y(C); all values are real so no conjugation is needed."""
    x, y = _row(t, x), _row(t, y)
    total = Quad()
    for c, a, b in zip(t.classes, x, y):
        total = total + a * b * c.length
    return total / t.order


def _row(t: CharacterTable, x):
    return t.row(x) if isinstance(x, (int, str)) else tuple(_q(v) for v in x)


def row_orthogonality(t: CharacterTable) -> bool:
    n = len(t.rows)
    return all(inner_product(t, i, j) == Quad(int(i == j)) for i in range(n) for j in range(n))


def column_orthogonality(t: CharacterTable) -> bool:
    """sum_chi chi(C) chi(D) = delta_CD |G| / |C|."""
    k = len(t.classes)
    for p in range(k):
        for q in range(k):
            s = Quad()
            for r in t.rows:
                s = s + r[p] * r[q]
            expect = Quad(Fraction(t.order, t.classes[p].length)) if p == q else Quad()
            if s != expect:
                return False
    return True


def degree_square_sum(t: CharacterTable) -> int:
    return sum(d * d for d in t.degrees)


def spin_rows(t: CharacterTable) -> list[str]:
    """Rows with chi(C2) = -chi(C1): the central involution acts by -1."""
    return [n for n, r in zip(t.names, t.rows) if r[1] == -r[0]]


# blocks ---------------------------------------------------------------------------


def central_character(t: CharacterTable, char, cls) -> Quad:
    """omega_chi(K_C) = |C| chi(C) / chi(1)."""
    r = _row(t, char)
    j = cls if isinstance(cls, int) else [c.name for c in t.classes].index(cls)
    return r[j] * t.classes[j].length / r[0]


def block_partition(t: CharacterTable) -> list[list[str]]:
    """Group characters whose central characters agree modulo the prime above 2."""
    blocks: dict[tuple[int, ...], list[str]] = {}
    for i, name in enumerate(t.names):
        try:
            key = tuple(reduce_mod2(central_character(t, i, j)).value for j in range(len(t.classes)))
        except NotIntegral as exc:
            raise NotIntegral(f"{name}: {exc}") from exc
        blocks.setdefault(key, []).append(name)
    # principal block (containing the trivial character) first, then by first member
    return sorted(blocks.values(), key=lambda b: (t.names[0] not in b, t.names.index(b[0])))


def principal_block(t: CharacterTable) -> list[str]:
    return block_partition(t)[0]


# decomposition numbers ------------------------------------------------------------


def _solve_rational(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Unique solution of the square-or-tall system A x = b, or None if inconsistent."""
    rows = [list(r) + [v] for r, v in zip(A, b)]
    ncols = len(A[0])
    piv_row = 0
    pivots = []
    for col in range(ncols):
        sel = next((r for r in range(piv_row, len(rows)) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
        p = rows[piv_row][col]
        rows[piv_row] = [v / p for v in rows[piv_row]]
        for r in range(len(rows)):
            if r != piv_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * c for a, c in zip(rows[r], rows[piv_row])]
        pivots.append(col)
        piv_row += 1
    if len(pivots) < ncols or any(r[-1] != 0 for r in rows[piv_row:]):
        return None
    return [rows[i][-1] for i in range(ncols)]


def regular_values(t: CharacterTable, char, classes=None) -> list[Fraction]:
    """Values of a character on the 2-regular classes (rational for every row here)."""
    if classes is None:
        classes = [c.name for c in BRAUER.classes] if t is HAT_S5 else list(S5_REGULAR)
    names = [c.name for c in t.classes]
    out = []
    for cname in classes:
        v = _row(t, char)[names.index(cname)]
        if not v.is_rational():
            raise ValueError(f"irrational value {v} on a 2-regular class")
        out.append(v.a)
    return out


def decomposition_matrix(t: CharacterTable, chars, brauer: BrauerTable = BRAUER, columns=None) -> DecompMatrix:
    """Express each character on 2-regular classes in the Brauer basis, exactly.

    ``columns`` restricts the output to some Brauer characters; the others must
    then have coefficient zero.
    """
    columns = tuple(columns or brauer.names)
    keep = [brauer.names.index(c) for c in columns]
    A = [[Fraction(brauer.rows[j][k]) for j in range(len(brauer.rows))] for k in range(len(brauer.classes))]
    entries = []
    for ch in chars:
        x = _solve_rational(A, regular_values(t, ch))
        if x is None or any(v.denominator != 1 or v < 0 for v in x):
            raise NoNonnegativeSolution(f"{ch}: coefficients {x}")
        if any(x[j] for j in range(len(x)) if j not in keep):
            raise NoNonnegativeSolution(f"{ch} involves Brauer characters outside {columns}")
        entries.append(tuple(int(x[j]) for j in keep))
    names = tuple(c if isinstance(c, str) else t.names[c] for c in chars)
    return DecompMatrix(names, columns, tuple(entries))


def reconstruct(d: DecompMatrix, brauer: BrauerTable = BRAUER) -> list[list[int]]:
    """D times the Brauer values: each row's character on the 2-regular classes."""
    cols = [brauer.names.index(c) for c in d.columns]
    return [
        [sum(e * brauer.rows[c][k] for e, c in zip(row, cols)) for k in range(len(brauer.classes))] for row in d.entries
    ]


def cartan_from_decomp(d: DecompMatrix | list[list[int]]) -> list[list[int]]:
    """D^T D."""
    m = d.as_lists() if isinstance(d, DecompMatrix) else [list(r) for r in d]
    if not m:
        return []
    n = len(m[0])
    return [[sum(r[i] * r[j] for r in m) for j in range(n)] for i in range(n)]


# Galois action and class sums -----------------------------------------------------


def galois_pair_check(t: CharacterTable, i, j, sigma: str = "sqrt2") -> bool:
    """Does the automorphism sqrt2 -> -sqrt2 (or sqrt3 -> -sqrt3) carry row i to row j?"""
    conj = Quad.conj2 if sigma == "sqrt2" else Quad.conj3
    return tuple(conj(v) for v in _row(t, i)) == tuple(_row(t, j))


Poly = tuple[Fraction, ...]  # coefficients, constant term first


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(Fraction(v) for v in p)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p, q = list(_trim(p)), _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        f = p[-1] / q[-1]
        quo[shift] = f
        for k, c in enumerate(q):
            p[shift + k] -= f * c
        p = list(_trim(p))
    return _trim(quo), _trim(p)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return tuple(c / p[-1] for c in p) if p else ()


def poly_lcm(p: Poly, q: Poly) -> Poly:
    g = poly_gcd(p, q)
    quo, rem = poly_divmod(poly_mul(p, q), g)
    assert not rem
    return tuple(c / quo[-1] for c in quo)


def poly_compose_linear(p: Poly, scale) -> Poly:
    """p(scale * t)."""
    scale = Fraction(scale)
    return _trim(c * scale**k for k, c in enumerate(p))


def poly_str(p: Poly, var: str = "x") -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        coef = "" if (mag == 1 and k) else str(mag)
        mono = var if k == 1 else (f"{var}^{k}" if k else "")
        terms.append(("-" if c < 0 else "+", coef + mono))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for s, t in terms[1:]:
        out += f" {s} {t}"
    return out


def minimal_polynomial(v) -> Poly:
    """Product of (x - w) over the distinct Galois conjugates w of v."""
    v = _q(v)
    conjugates = []
    for w in (v, v.conj2(), v.conj3(), v.conj2().conj3()):
        if w not in conjugates:
            conjugates.append(w)
    coeffs = [Quad(1)]  # Quad-valued, constant term first
    for w in conjugates:
        shifted = [Quad()] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] = shifted[k] - w * c
        coeffs = shifted
    assert all(c.is_rational() for c in coeffs), coeffs
    return _trim(c.a for c in coeffs)


def minpoly_of_tuple(values) -> Poly:
    """Minimal polynomial of a tuple acting diagonally: the lcm of the entries' ones."""
    out: Poly = (Fraction(1),)
    for v in values:
        out = poly_lcm(out, minimal_polynomial(v))
    return out


def rescale_check(p: Poly, scale: int) -> tuple[Fraction, Poly]:
    """Write p(scale * t) = lead * (monic polynomial in t)."""
    q = poly_compose_linear(p, scale)
    lead = q[-1]
    return lead, tuple(c / lead for c in q)


def class_sum_pair(t: CharacterTable = HAT_S5, cls: str = "C9", chars=("psi6", "psi7")) -> tuple[Quad, ...]:
    return tuple(central_character(t, c, cls) for c in chars)


def s5_table_from_cover() -> tuple[tuple[Quad, ...], ...]:
    """Rows of S5_TABLE recomputed from the cover via S5_ROW_LIFT and S5_CLASS_LIFT."""
    cols = [[c.name for c in HAT_S5.classes].index(n) for n in S5_CLASS_LIFT]
    return tuple(tuple(HAT_S5.row(r)[j] for j in cols) for r in S5_ROW_LIFT)

