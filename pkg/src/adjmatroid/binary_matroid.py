"""Binary matroids stored as canonical GF(2) cycle-space subspaces.

The cycle space is a complete invariant, so equality of matroids reduces to
subspace comparison; circuits, rank, bases and minors are all derived from
it on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import (
    BitMatrix,
    Subspace,
    lowest_bit,
    nullspace,
    orthogonal_complement,
    popcount,
)
from .graph import MultiGraph

ISOMORPHISM_GATE = 8
ENUM_GATE = 20


def _drop_bit(mask: int, i: int) -> int:
    low = mask & ((1 << i) - 1)
    high = mask >> (i + 1)
    return low | (high << i)


@dataclass(frozen=True, eq=False)
class BinaryMatroid:
    """A binary matroid given by ground labels and its cycle space."""

    ground: tuple[str, ...]
    cycle_space: Subspace

    def __post_init__(self) -> None:
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("duplicate ground labels")
        if self.cycle_space.ambient_dim != len(self.ground):
            raise ValueError("cycle space dimension mismatch")

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def nullity(self) -> int:
        return self.cycle_space.dim

    @property
    def rank(self) -> int:
        return self.size - self.nullity

    def index(self, v: str) -> int:
        try:
            return self.ground.index(v)
        except ValueError:
            raise ValueError(f"unknown element {v!r}") from None

    def _mask_of(self, s: Iterable[str]) -> int:
        mask = 0
        for v in s:
            mask |= 1 << self.index(v)
        return mask

    def _labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.ground[i] for i in range(self.size) if (mask >> i) & 1)

    def _aligned_space(self, other: "BinaryMatroid") -> Subspace | None:
        """other's cycle space in self's coordinate order, or None if the
        ground sets differ."""
        if set(self.ground) != set(other.ground):
            return None
        if self.ground == other.ground:
            return other.cycle_space
        position = [self.ground.index(v) for v in other.ground]
        return other.cycle_space.permuted(position)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        aligned = self._aligned_space(other)
        return aligned is not None and aligned == self.cycle_space

    def __hash__(self) -> int:
        order = sorted(range(self.size), key=lambda i: self.ground[i])
        position = [0] * self.size
        for new, old in enumerate(order):
            position[old] = new
        canonical = self.cycle_space.permuted(position)
        return hash((tuple(sorted(self.ground)), canonical.basis_masks()))

    def __repr__(self) -> str:
        return f"BinaryMatroid(ground={self.ground!r}, nullity={self.nullity})"

    # construction

    @classmethod
    def from_matrix(cls, a: BitMatrix, labels: Sequence[str]) -> "BinaryMatroid":
        if a.cols != len(labels):
            raise ValueError("label count must match column count")
        return cls(tuple(labels), nullspace(a))

    @classmethod
    def from_subspace(cls, w: Subspace, labels: Sequence[str]) -> "BinaryMatroid":
        if w.ambient_dim != len(labels):
            raise ValueError("label count must match ambient dimension")
        return cls(tuple(labels), w)

    # derived structure

    def circuit_masks(self) -> tuple[int, ...]:
        """Minimal nonempty supports in the cycle space, by weight then value."""
        if self.nullity > ENUM_GATE:
            raise ValueError(f"circuit enumeration gated at dimension {ENUM_GATE}")
        members = [v for v in self.cycle_space.vectors() if v]
        members.sort(key=lambda v: (popcount(v), v))
        minimal: list[int] = []
        for v in members:
            if not any(c & v == c for c in minimal):
                minimal.append(v)
        return tuple(minimal)

    def circuits(self) -> frozenset[frozenset[str]]:
        return frozenset(self._labels_of(m) for m in self.circuit_masks())

    def rank_of(self, s: Iterable[str]) -> int:
        mask = self._mask_of(s)
        return popcount(mask) - self.cycle_space.restricted_to(mask).dim

    def is_loop(self, v: str) -> bool:
        return self.cycle_space.contains(1 << self.index(v))

    def is_coloop(self, v: str) -> bool:
        i = self.index(v)
        return all(not (m >> i) & 1 for m in self.cycle_space.basis_masks())

    def dual(self) -> "BinaryMatroid":
        return BinaryMatroid(self.ground, orthogonal_complement(self.cycle_space))

    def delete(self, v: str) -> "BinaryMatroid":
        i = self.index(v)
        keep = ((1 << self.size) - 1) & ~(1 << i)
        inside = self.cycle_space.restricted_to(keep)
        masks = [_drop_bit(m, i) for m in inside.basis_masks()]
        ground = tuple(u for u in self.ground if u != v)
        return BinaryMatroid(ground, Subspace.span(self.size - 1, masks))

    def contract(self, v: str) -> "BinaryMatroid":
        i = self.index(v)
        masks = [_drop_bit(m, i) for m in self.cycle_space.basis_masks()]
        ground = tuple(u for u in self.ground if u != v)
        return BinaryMatroid(ground, Subspace.span(self.size - 1, masks))

    def direct_sum(self, other: "BinaryMatroid") -> "BinaryMatroid":
        if set(self.ground) & set(other.ground):
            raise ValueError("direct sum needs disjoint ground labels")
        shift = self.size
        masks = list(self.cycle_space.basis_masks())
        masks += [m << shift for m in other.cycle_space.basis_masks()]
        return BinaryMatroid(
            self.ground + other.ground, Subspace.span(self.size + other.size, masks)
        )

    def independent_masks(self) -> tuple[int, ...]:
        if self.size > ENUM_GATE:
            raise ValueError(f"independent set enumeration gated at {ENUM_GATE} elements")
        out = []
        for mask in range(1 << self.size):
            if self.cycle_space.restricted_to(mask).dim == 0:
                out.append(mask)
        return tuple(out)

    def independent_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(self._labels_of(m) for m in self.independent_masks())

    def bases(self) -> frozenset[frozenset[str]]:
        independent = self.independent_masks()
        top = max(popcount(m) for m in independent)
        if top != self.rank:
            raise AssertionError("maximal independent size disagrees with rank")
        return frozenset(
            self._labels_of(m) for m in independent if popcount(m) == top
        )

    def isomorphism(self, other: "BinaryMatroid") -> dict[str, str] | None:
        """Search for a bijection carrying one cycle space onto the other."""
        if self.size > ISOMORPHISM_GATE or other.size > ISOMORPHISM_GATE:
            raise ValueError(f"isomorphism search gated at {ISOMORPHISM_GATE} elements")
        if self.size != other.size or self.rank != other.rank:
            return None
        mine = sorted(popcount(c) for c in self.circuit_masks())
        theirs = sorted(popcount(c) for c in other.circuit_masks())
        if mine != theirs:
            return None
        target = other.cycle_space
        for perm in itertools.permutations(range(self.size)):
            if self.cycle_space.permuted(perm) == target:
                return {self.ground[i]: other.ground[perm[i]] for i in range(self.size)}
        return None


def free_matroid(labels: Sequence[str]) -> BinaryMatroid:
    """No circuits at all (U_{n,n})."""
    return BinaryMatroid(tuple(labels), Subspace.zero(len(labels)))


def all_loops_matroid(labels: Sequence[str]) -> BinaryMatroid:
    """Every element a loop; the dual of the free matroid."""
    return BinaryMatroid(tuple(labels), Subspace.full(len(labels)))


def single_loop(label: str) -> BinaryMatroid:
    """U_{1,0} on one element."""
    return all_loops_matroid((label,))


def single_coloop(label: str) -> BinaryMatroid:
    """U_{1,1} on one element."""
    return free_matroid((label,))


def pair_circuit(labels: Sequence[str]) -> BinaryMatroid:
    """U_{2,1}: two parallel elements."""
    labels = tuple(labels)
    if len(labels) != 2:
        raise ValueError("pair circuit needs two labels")
    return BinaryMatroid(labels, Subspace.span(2, [0b11]))


def triple_circuit(labels: Sequence[str]) -> BinaryMatroid:
    """U_{3,2}: one circuit through all three elements."""
    labels = tuple(labels)
    if len(labels) != 3:
        raise ValueError("triple circuit needs three labels")
    return BinaryMatroid(labels, Subspace.span(3, [0b111]))


def polygon_matroid(g: MultiGraph) -> BinaryMatroid:
    """The matroid of the edge set whose circuits are the graph's cycles."""
    return BinaryMatroid.from_matrix(g.incidence_matrix(), g.edge_labels)


def circuit_space(circuits: Iterable[Iterable[str]], labels: Sequence[str]) -> BinaryMatroid:
    """Matroid spanned by explicit circuits given as label collections."""
    labels = tuple(labels)
    index = {v: i for i, v in enumerate(labels)}
    masks = []
    for c in circuits:
        mask = 0
        for v in c:
            mask |= 1 << index[v]
        masks.append(mask)
    return BinaryMatroid(labels, Subspace.span(len(labels), masks))
