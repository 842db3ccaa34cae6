"""Bit-packed linear algebra over GF(2).

Vectors are Python ints used as bitmasks (bit i = coordinate i); matrices
are tuples of row masks.  Subspaces are kept in a canonical reduced
row-echelon form so that equality of subspaces is plain ``==``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Exhaustive enumerations (all vectors of a space / subspace) refuse to run
# above this many coordinates.
ENUM_GATE = 20


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    return popcount(x) & 1


def lowest_bit(x: int) -> int:
    """Index of the least significant set bit (x must be nonzero)."""
    return (x & -x).bit_length() - 1


def _check_enum_gate(n: int, what: str) -> None:
    if n > ENUM_GATE:
        raise ValueError(f"{what} is gated at {ENUM_GATE} coordinates, got {n}")


def rref_masks(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduce the given row masks to canonical RREF, pivots ascending.

    Each returned row has a pivot (lowest set bit) that no other row uses.
    """
    by_pivot: dict[int, int] = {}
    for v in vectors:
        for p, b in by_pivot.items():
            if (v >> p) & 1:
                v ^= b
        if v:
            q = lowest_bit(v)
            for p in list(by_pivot):
                if (by_pivot[p] >> q) & 1:
                    by_pivot[p] ^= v
            by_pivot[q] = v
    return tuple(by_pivot[p] for p in sorted(by_pivot))


def reduce_mask(v: int, basis: Sequence[int]) -> int:
    """Reduce v against RREF basis rows; zero iff v is in their span."""
    for b in basis:
        if (v >> lowest_bit(b)) & 1:
            v ^= b
    return v


@dataclass(frozen=True)
class BitVector:
    """A GF(2) vector of fixed length packed into an int."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative length")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError("bits outside declared length")

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise ValueError(f"coordinate {i} out of range")
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "BitVector":
        bits = 0
        for i, e in enumerate(entries):
            if e & 1:
                bits |= 1 << i
        return cls(len(entries), bits)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def get(self, i: int) -> int:
        return (self.bits >> i) & 1

    def dot(self, other: "BitVector") -> int:
        return parity(self.bits & other.bits)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0


@dataclass(frozen=True)
class BitMatrix:
    """A rows x cols matrix over GF(2), rows packed as int masks."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        limit = 1 << self.cols
        for r in self.data:
            if not 0 <= r < limit:
                raise ValueError("row exceeds column count")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            cols = len(entries[0]) if entries else 0
        masks = []
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
            masks.append(BitVector.from_entries(row).bits)
        return cls(len(entries), cols, tuple(masks))

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def column_mask(self, j: int) -> int:
        mask = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                mask |= 1 << i
        return mask

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, tuple(self.column_mask(j) for j in range(self.cols)))

    @property
    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.data == self.transpose().data

    def mul_mask(self, v: int) -> int:
        """Matrix-vector product; v and the result are bitmasks."""
        out = 0
        for i, r in enumerate(self.data):
            if parity(r & v):
                out |= 1 << i
        return out

    def row_entries(self, i: int) -> tuple[int, ...]:
        return tuple((self.data[i] >> j) & 1 for j in range(self.cols))


def rank(m: BitMatrix) -> int:
    """GF(2) rank (row rank = column rank)."""
    return len(rref_masks(m.data))


def nullity(m: BitMatrix) -> int:
    return m.cols - rank(m)


def is_nonsingular(m: BitMatrix) -> bool:
    """Square matrix of full rank; the 0x0 matrix counts as nonsingular."""
    if m.rows != m.cols:
        raise ValueError("nonsingularity is defined for square matrices")
    return rank(m) == m.cols


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(2)^ambient_dim in canonical RREF basis form.

    Basis rows are nonzero with strictly increasing pivot (lowest set bit)
    positions, and each pivot column carries a single 1.  Two subspaces are
    equal as sets of vectors iff their fields compare equal.
    """

    ambient_dim: int
    basis: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        prev = -1
        for v in self.basis:
            if v.length != self.ambient_dim:
                raise ValueError("basis vector length mismatch")
            if v.is_zero:
                raise ValueError("zero vector in basis")
            p = lowest_bit(v.bits)
            if p <= prev:
                raise ValueError("pivots not strictly increasing")
            prev = p
        masks = self.basis_masks()
        for i, v in enumerate(masks):
            p = lowest_bit(v)
            for j, w in enumerate(masks):
                if i != j and (w >> p) & 1:
                    raise ValueError("pivot column not reduced")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[int | BitVector]) -> "Subspace":
        masks = [v.bits if isinstance(v, BitVector) else v for v in vectors]
        for v in masks:
            if not 0 <= v < (1 << ambient_dim):
                raise ValueError("vector outside ambient space")
        rows = rref_masks(masks)
        return cls(ambient_dim, tuple(BitVector(ambient_dim, r) for r in rows))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(ambient_dim, (1 << i for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_masks(self) -> tuple[int, ...]:
        return tuple(v.bits for v in self.basis)

    def contains(self, v: int | BitVector) -> bool:
        mask = v.bits if isinstance(v, BitVector) else v
        return reduce_mask(mask, self.basis_masks()) == 0

    def vectors(self) -> Iterator[int]:
        """All 2^dim member masks, ascending as integers."""
        _check_enum_gate(self.dim, "subspace enumeration")
        masks = self.basis_masks()
        out = []
        for combo in range(1 << self.dim):
            v = 0
            c = combo
            i = 0
            while c:
                if c & 1:
                    v ^= masks[i]
                c >>= 1
                i += 1
            out.append(v)
        return iter(sorted(out))

    def sum_with(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.ambient_dim, self.basis_masks() + other.basis_masks())

    def restricted_to(self, mask: int) -> "Subspace":
        """The subspace of members supported inside the coordinate mask."""
        outside_pivots: dict[int, int] = {}
        inside: list[int] = []
        out_mask = ((1 << self.ambient_dim) - 1) & ~mask
        for v in self.basis_masks():
            while v & out_mask:
                p = lowest_bit(v & out_mask)
                if p in outside_pivots:
                    v ^= outside_pivots[p]
                else:
                    outside_pivots[p] = v
                    v = 0
            if v:
                inside.append(v)
        return Subspace.span(self.ambient_dim, inside)

    def permuted(self, new_position: Sequence[int]) -> "Subspace":
        """Rename coordinates: old coordinate i becomes new_position[i]."""
        if sorted(new_position) != list(range(self.ambient_dim)):
            raise ValueError("not a permutation of the coordinates")
        moved = []
        for v in self.basis_masks():
            w = 0
            for i in range(self.ambient_dim):
                if (v >> i) & 1:
                    w |= 1 << new_position[i]
            moved.append(w)
        return Subspace.span(self.ambient_dim, moved)


def nullspace(m: BitMatrix) -> Subspace:
    """Canonical right nullspace {x : m x = 0}."""
    rows = rref_masks(m.data)
    pivots = [lowest_bit(r) for r in rows]
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    kernel = []
    for f in free:
        v = 1 << f
        for r, p in zip(rows, pivots):
            if (r >> f) & 1:
                v |= 1 << p
        kernel.append(v)
    return Subspace.span(m.cols, kernel)


def orthogonal_complement(w: Subspace) -> Subspace:
    """All vectors with even intersection against every member of w."""
    m = BitMatrix(w.dim, w.ambient_dim, w.basis_masks())
    return nullspace(m)


def principal_submatrix(a: BitMatrix, s: Iterable[int]) -> BitMatrix:
    """Keep the rows and columns indexed by s, in ambient order."""
    if a.rows != a.cols:
        raise ValueError("principal submatrix needs a square matrix")
    idx = sorted(set(s))
    for i in idx:
        if not 0 <= i < a.cols:
            raise ValueError(f"index {i} out of range")
    out = []
    for i in idx:
        row = 0
        for k, j in enumerate(idx):
            if (a.data[i] >> j) & 1:
                row |= 1 << k
        out.append(row)
    return BitMatrix(len(idx), len(idx), tuple(out))


def symmetrize_nullspace(a: BitMatrix) -> BitMatrix:
    """A symmetric cols x cols matrix with the same right nullspace as a.

    Row-reduce a to [I | C] up to a column permutation, paste C and its
    transpose around I, fill the remaining block with C^T C, and undo the
    permutation.  Full and trivial nullspaces give the zero and identity
    matrices.
    """
    n = a.cols
    rows = rref_masks(a.data)
    r = len(rows)
    if r == 0:
        return BitMatrix.zero(n, n)
    if r == n:
        return BitMatrix.identity(n)
    pivots = [lowest_bit(v) for v in rows]
    free = [j for j in range(n) if j not in set(pivots)]
    order = pivots + free  # column j of the permuted matrix is column order[j] of a
    # C'' as r rows over the free columns
    cpp = []
    for v in rows:
        row = 0
        for k, j in enumerate(free):
            if (v >> j) & 1:
                row |= 1 << k
        cpp.append(row)
    f = len(free)
    cpp_t = [sum(((cpp[i] >> k) & 1) << i for i in range(r)) for k in range(f)]
    # B' = [[I_r, C''], [C''^T, C''^T C'']] in permuted coordinates
    bp = []
    for i in range(r):
        bp.append((1 << i) | (cpp[i] << r))
    for k in range(f):
        prod = 0
        for kk in range(f):
            if parity(cpp_t[k] & cpp_t[kk]):
                prod |= 1 << kk
        bp.append(cpp_t[k] | (prod << r))
    # undo the permutation: entry (order[i], order[j]) of B is entry (i, j) of B'
    out = [0] * n
    for i in range(n):
        for j in range(n):
            if (bp[i] >> j) & 1:
                out[order[i]] |= 1 << order[j]
    return BitMatrix(n, n, tuple(out))


def all_subspaces(ambient_dim: int) -> Iterator[Subspace]:
    """Every subspace of GF(2)^ambient_dim, via canonical RREF bases."""
    n = ambient_dim
    if n > 6:
        raise ValueError("subspace enumeration is intended for ambient_dim <= 6")
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free_slots = [
                [j for j in range(n) if j > p and j not in pivot_set] for p in pivots
            ]
            total = sum(len(s) for s in free_slots)
            for fill in range(1 << total):
                rows = []
                pos = 0
                for p, slots in zip(pivots, free_slots):
                    row = 1 << p
                    for j in slots:
                        if (fill >> pos) & 1:
                            row |= 1 << j
                        pos += 1
                    rows.append(row)
                yield Subspace(n, tuple(BitVector(n, r) for r in rows))
