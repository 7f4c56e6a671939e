"""Dense exact linear algebra over GF(2^e).

Matrices are 2-d ``numpy.uint8`` arrays whose entries are field elements in the
integer encoding of :mod:`quiverlab.scalars`; the field is passed alongside.
Over GF(2) the row-reduction routines switch to a packed backend where each row
is a Python int (bit j = column j).  The generic table-driven backend is kept
callable on its own so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scalars import GF, GF2


class NoSolution(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


def asmat(m, cols: int | None = None) -> np.ndarray:
    a = np.asarray(m, dtype=np.uint8)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else np.zeros((0, cols or 0), dtype=np.uint8)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    return a


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def matmul(a: np.ndarray, b: np.ndarray, F: GF = GF2) -> np.ndarray:
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if F.e == 1:
        return (a.astype(np.int32) @ b.astype(np.int32) & 1).astype(np.uint8)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for k in range(a.shape[1]):
        col = a[:, k]
        if col.any():
            out ^= F.mul_table[col[:, None], b[k][None, :]]
    return out


def matprod(mats, n: int, F: GF = GF2) -> np.ndarray:
    """Left-to-right product of a sequence of matrices; ``identity(n)`` if empty."""
    out = None
    for m in mats:
        out = m if out is None else matmul(out, m, F)
    return identity(n) if out is None else out


def scale(c: int, m: np.ndarray, F: GF = GF2) -> np.ndarray:
    return F.mul_table[c, np.asarray(m, dtype=np.uint8)]


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def kron(a: np.ndarray, b: np.ndarray, F: GF = GF2) -> np.ndarray:
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    prod = F.mul_table[a[:, None, :, None], b[None, :, None, :]]
    return prod.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


# packed GF(2) rows ---------------------------------------------------------


def pack_rows(m: np.ndarray) -> list[int]:
    m = asmat(m)
    if m.shape[1] == 0:
        return [0] * m.shape[0]
    packed = np.packbits(m & 1, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def unpack_rows(rows: list[int], cols: int) -> np.ndarray:
    nbytes = (cols + 7) // 8
    out = zeros(len(rows), cols)
    for i, r in enumerate(rows):
        if r:
            bits = np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint8)
            out[i] = np.unpackbits(bits, bitorder="little")[:cols]
    return out


class PackedEchelon:
    """Incrementally maintained echelon basis of packed GF(2) rows.

    Rows are keyed by their lowest set bit and kept only semi-reduced, so adding a
    row touches just the pivots it actually meets; ``sorted_rows`` back-substitutes
    once to get the reduced form.
    """

    def __init__(self):
        self.rows: dict[int, int] = {}  # pivot column (lowest set bit) -> row

    def reduce(self, r: int) -> int:
        """Reduce r until its lowest bit is not a pivot; zero iff r lies in the span."""
        rows = self.rows
        while r:
            col = (r & -r).bit_length() - 1
            row = rows.get(col)
            if row is None:
                return r
            r ^= row
        return 0

    def add(self, r: int) -> bool:
        r = self.reduce(r)
        if not r:
            return False
        self.rows[(r & -r).bit_length() - 1] = r
        return True

    def __len__(self) -> int:
        return len(self.rows)

    def sorted_rows(self) -> tuple[list[int], list[int]]:
        pivots = sorted(self.rows)
        mask = 0
        for p in pivots:
            mask |= 1 << p
        done: dict[int, int] = {}
        for p in reversed(pivots):
            r = self.rows[p]
            hits = (r & mask) & ~(1 << p)
            while hits:
                q = (hits & -hits).bit_length() - 1
                r ^= done[q]
                hits = (r & mask) & ~(1 << p) & ~((1 << (q + 1)) - 1)
            done[p] = r
        return [done[p] for p in pivots], pivots


def rref_packed(m: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    m = asmat(m)
    ech = PackedEchelon()
    for r in pack_rows(m):
        ech.add(r)
    rows, pivots = ech.sorted_rows()
    out = zeros(m.shape[0], m.shape[1])
    if rows:
        out[: len(rows)] = unpack_rows(rows, m.shape[1])
    return out, len(rows), pivots


def rref_generic(m: np.ndarray, F: GF = GF2) -> tuple[np.ndarray, int, list[int]]:
    a = asmat(m).copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = F.mul_table[F.inv_table[a[r, c]], a[r]]
        factors = a[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            a[hit] ^= F.mul_table[factors[hit][:, None], a[r][None, :]]
        pivots.append(c)
        r += 1
    return a, r, pivots


def rref(m: np.ndarray, F: GF = GF2) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    if F.e == 1:
        return rref_packed(m)
    return rref_generic(m, F)


def independent_rows(base: np.ndarray, candidates: np.ndarray, F: GF = GF2) -> list[int]:
    """Indices of candidate rows that extend span(base), chosen greedily in order."""
    base, candidates = asmat(base), asmat(candidates, base.shape[1])
    keep = []
    if F.e == 1:
        ech = PackedEchelon()
        for r in pack_rows(base):
            ech.add(r)
        for i, r in enumerate(pack_rows(candidates)):
            if ech.add(r):
                keep.append(i)
        return keep
    current = row_basis(base, F)
    for i, r in enumerate(candidates):
        grown = row_basis(np.concatenate([current, r.reshape(1, -1)]), F)
        if grown.shape[0] > current.shape[0]:
            current = grown
            keep.append(i)
    return keep


def rank(m: np.ndarray, F: GF = GF2) -> int:
    m = asmat(m)
    if F.e == 1:
        ech = PackedEchelon()
        for r in pack_rows(m):
            ech.add(r)
        return len(ech)
    return rref_generic(m, F)[1]


def row_basis(m: np.ndarray, F: GF = GF2) -> np.ndarray:
    r, k, _ = rref(m, F)
    return r[:k]


def _kernel_from_rref(r: np.ndarray, k: int, pivots: list[int], ncols: int) -> np.ndarray:
    # char 2: the kernel vector for free column f is e_f + sum_i r[i, f] e_{pivot_i}
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = zeros(len(free), ncols)
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for i, p in enumerate(pivots):
            basis[idx, p] = r[i, f]
    return basis


def kernel_basis(m: np.ndarray, F: GF = GF2, ncols: int | None = None) -> np.ndarray:
    """Rows spanning {v : m v = 0}, in reduced echelon form."""
    m = asmat(m, ncols)
    r, k, pivots = rref(m, F)
    # negation is the identity in characteristic 2, so no sign is needed
    return row_basis(_kernel_from_rref(r, k, pivots, m.shape[1]), F)


def kernel(m: np.ndarray, F: GF = GF2) -> "Subspace":
    m = asmat(m)
    return Subspace(F, m.shape[1], kernel_basis(m, F))


def solve(m: np.ndarray, rhs: np.ndarray, F: GF = GF2) -> np.ndarray:
    """One solution x of m x = rhs (rhs may be a column vector or a matrix)."""
    m = asmat(m)
    rhs = np.asarray(rhs, dtype=np.uint8)
    vector = rhs.ndim == 1
    if vector:
        rhs = rhs.reshape(-1, 1)
    if rhs.shape[0] != m.shape[0]:
        raise DimensionMismatch(f"{m.shape} vs right-hand side {rhs.shape}")
    n = m.shape[1]
    aug = np.concatenate([m, rhs], axis=1)
    r, k, pivots = rref(aug, F)
    if pivots and pivots[-1] >= n:
        raise NoSolution("inconsistent linear system")
    x = zeros(n, rhs.shape[1])
    for i, p in enumerate(pivots):
        x[p] = r[i, n:]
    return x.reshape(-1) if vector else x


def inverse(m: np.ndarray, F: GF = GF2) -> np.ndarray:
    m = asmat(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise DimensionMismatch("inverse of a non-square matrix")
    if n == 0:
        return zeros(0, 0)
    r, k, pivots = rref(np.concatenate([m, identity(n)], axis=1), F)
    if k < n or pivots[n - 1] >= n:
        raise ZeroDivisionError("singular matrix")
    return r[:n, n:]


def is_invertible(m: np.ndarray, F: GF = GF2) -> bool:
    m = asmat(m)
    return m.shape[0] == m.shape[1] and rank(m, F) == m.shape[0]


def is_nilpotent(m: np.ndarray, F: GF = GF2) -> bool:
    n = m.shape[0]
    p = m
    k = 1
    while k < n:
        p = matmul(p, p, F)
        k *= 2
    return not p.any()


def complement_basis(sub: np.ndarray, ambient: int, F: GF = GF2) -> np.ndarray:
    """Standard basis vectors completing the row space of ``sub`` to the ambient space."""
    _, _, pivots = rref(asmat(sub, ambient), F)
    free = [c for c in range(ambient) if c not in set(pivots)]
    out = zeros(len(free), ambient)
    out[np.arange(len(free)), free] = 1
    return out


def coordinates(basis: np.ndarray, vecs: np.ndarray, F: GF = GF2) -> np.ndarray:
    """Rows x with x @ basis = vecs; raises NoSolution if some vector is outside the span."""
    basis = asmat(basis)
    vecs = asmat(vecs, basis.shape[1])
    if vecs.shape[0] == 0:
        return zeros(0, basis.shape[0])
    return solve(basis.T.copy(), vecs.T.copy(), F).T.copy()


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F^ambient, stored by its reduced echelon basis."""

    field: GF
    ambient: int
    basis: np.ndarray

    def __post_init__(self):
        b = row_basis(asmat(self.basis, self.ambient), self.field) if len(self.basis) else zeros(0, self.ambient)
        object.__setattr__(self, "basis", b)

    @classmethod
    def span(cls, vecs, ambient: int, F: GF = GF2) -> "Subspace":
        return cls(F, ambient, asmat(vecs, ambient))

    @classmethod
    def full(cls, ambient: int, F: GF = GF2) -> "Subspace":
        return cls(F, ambient, identity(ambient))

    @classmethod
    def zero(cls, ambient: int, F: GF = GF2) -> "Subspace":
        return cls(F, ambient, zeros(0, ambient))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _check(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")
        if self.field is not other.field:
            raise AmbientMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient, np.concatenate([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.field)
        # x A = y B  <=>  (x, y) [A; B] = 0 (char 2)
        stacked = np.concatenate([self.basis, other.basis])
        rel = kernel_basis(stacked.T.copy(), self.field)
        vecs = matmul(rel[:, : self.dim], self.basis, self.field)
        return Subspace(self.field, self.ambient, vecs)

    def contains(self, v) -> bool:
        v = asmat(v, self.ambient)
        if self.field.e == 1:
            ech = PackedEchelon()
            for r in pack_rows(self.basis):
                ech.add(r)
            return all(ech.reduce(r) == 0 for r in pack_rows(v))
        return rank(np.concatenate([self.basis, v]), self.field) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        other._check(self)
        return other.contains(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field is other.field
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, {self.field})"


def subspace_ops(a: Subspace, b: Subspace, op: str):
    if op == "sum":
        return a + b
    if op == "intersect":
        return a.intersect(b)
    if op == "contains":
        return b <= a
    raise ValueError(f"unknown op {op!r}")


def random_matrix(rng: np.random.Generator, r: int, c: int, F: GF = GF2) -> np.ndarray:
    return rng.integers(0, F.order, size=(r, c), dtype=np.uint8)
