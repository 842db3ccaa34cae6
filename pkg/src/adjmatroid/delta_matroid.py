"""Set systems and delta-matroids over small ground sets.

Families are stored as frozensets of bitmasks.  Pivot, loop complementation
and dual pivot follow the parity-counting membership rules; graphs embed as
the family of vertex subsets inducing a nonsingular adjacency submatrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import is_nonsingular, popcount, principal_submatrix
from .graph import LoopedSimpleGraph

GROUND_GATE = 16

FlipOp = str  # "pivot" | "dual_pivot" | "loop_complement"


@dataclass(frozen=True, eq=False)
class SetSystem:
    """A ground set plus a family of subsets stored as bitmasks."""

    ground: tuple[str, ...]
    family: frozenset[int]

    def __eq__(self, other: object) -> bool:
        # structural equality, shared across subclasses
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.ground == other.ground and self.family == other.family

    def __hash__(self) -> int:
        return hash((self.ground, self.family))

    def __post_init__(self) -> None:
        object.__setattr__(self, "ground", tuple(self.ground))
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("duplicate ground labels")
        if len(self.ground) > GROUND_GATE:
            raise ValueError(f"set systems are gated at {GROUND_GATE} ground elements")
        limit = 1 << len(self.ground)
        for m in self.family:
            if not 0 <= m < limit:
                raise ValueError("family member outside the ground set")

    @classmethod
    def from_sets(
        cls, ground: Sequence[str], sets: Iterable[Iterable[str]]
    ) -> "SetSystem":
        ground = tuple(ground)
        index = {v: i for i, v in enumerate(ground)}
        masks = set()
        for s in sets:
            mask = 0
            for v in s:
                if v not in index:
                    raise ValueError(f"unknown element {v!r}")
                mask |= 1 << index[v]
            masks.add(mask)
        return cls(ground, frozenset(masks))

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def is_proper(self) -> bool:
        return bool(self.family)

    @property
    def is_normal(self) -> bool:
        return 0 in self.family

    def index(self, v: str) -> int:
        try:
            return self.ground.index(v)
        except ValueError:
            raise ValueError(f"unknown element {v!r}") from None

    def mask_of(self, s: Iterable[str]) -> int:
        mask = 0
        for v in s:
            mask |= 1 << self.index(v)
        return mask

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.ground[i] for i in range(self.n) if (mask >> i) & 1)

    def member_sets(self) -> tuple[tuple[str, ...], ...]:
        """The family as sorted label tuples, deterministic order."""
        sets = [tuple(sorted(self.labels_of(m))) for m in self.family]
        return tuple(sorted(sets, key=lambda s: (len(s), s)))

    def contains(self, s: Iterable[str]) -> bool:
        return self.mask_of(s) in self.family

    def is_coloop(self, v: str) -> bool:
        """v belongs to every member."""
        i = self.index(v)
        return all((m >> i) & 1 for m in self.family)

    def is_loop(self, v: str) -> bool:
        """v belongs to no member."""
        i = self.index(v)
        return not any((m >> i) & 1 for m in self.family)

    # vertex flips

    def pivot(self, x: Iterable[str]) -> "SetSystem":
        xm = self.mask_of(x)
        return SetSystem(self.ground, frozenset(m ^ xm for m in self.family))

    def loop_complement(self, x: Iterable[str]) -> "SetSystem":
        """Keep Y iff the members between Y minus x and Y are odd in number."""
        xm = self.mask_of(x)
        out = set()
        for y in range(1 << self.n):
            low = y & ~xm
            count = sum(1 for z in self.family if low & ~z == 0 and z & ~y == 0)
            if count & 1:
                out.add(y)
        return SetSystem(self.ground, frozenset(out))

    def dual_pivot(self, x: Iterable[str]) -> "SetSystem":
        """Keep Y iff the members between Y and Y union x are odd in number."""
        xm = self.mask_of(x)
        out = set()
        for y in range(1 << self.n):
            high = y | xm
            count = sum(1 for z in self.family if y & ~z == 0 and z & ~high == 0)
            if count & 1:
                out.add(y)
        return SetSystem(self.ground, frozenset(out))

    def loop_complement_sequential(self, x: Iterable[str]) -> "SetSystem":
        """Reference form: single-element rule applied element by element.

        A set avoiding v stays iff it is a member; a set containing v stays
        iff exactly one of it and it-minus-v is a member (the only reading
        of the one-element step that is an involution).
        """
        d = self
        for v in x:
            i = d.index(v)
            vb = 1 << i
            out = {m for m in d.family if not m & vb}
            for w in range(1 << d.n):
                if w & vb and ((w in d.family) != ((w & ~vb) in d.family)):
                    out.add(w)
            d = SetSystem(d.ground, frozenset(out))
        return d

    def dual_pivot_sequential(self, x: Iterable[str]) -> "SetSystem":
        """Reference form: the composite of loop complement, pivot, loop
        complement, one element at a time."""
        d = self
        for v in x:
            d = d.loop_complement_sequential([v]).pivot([v]).loop_complement_sequential([v])
        return d

    # distance, min and max

    def distance(self, x: Iterable[str]) -> int:
        if not self.is_proper:
            raise ValueError("distance needs a proper set system")
        xm = self.mask_of(x)
        return min(popcount(m ^ xm) for m in self.family)

    def min_sys(self) -> "SetSystem":
        if not self.is_proper:
            raise ValueError("min needs a proper set system")
        keep = frozenset(
            m for m in self.family if not any(z != m and z & ~m == 0 for z in self.family)
        )
        return SetSystem(self.ground, keep)

    def max_sys(self) -> "SetSystem":
        if not self.is_proper:
            raise ValueError("max needs a proper set system")
        keep = frozenset(
            m for m in self.family if not any(z != m and m & ~z == 0 for z in self.family)
        )
        return SetSystem(self.ground, keep)

    @property
    def is_equicardinal(self) -> bool:
        sizes = {popcount(m) for m in self.family}
        return len(sizes) <= 1

    # deletion and contraction

    def restrict(self, keep: Iterable[str]) -> "SetSystem":
        """Members inside the kept labels, on the shrunken ground set."""
        wanted = set(keep)
        keep_list = [v for v in self.ground if v in wanted]
        positions = [self.index(v) for v in keep_list]
        keep_mask = 0
        for i in positions:
            keep_mask |= 1 << i
        out = set()
        for m in self.family:
            if m & ~keep_mask:
                continue
            packed = 0
            for k, i in enumerate(positions):
                if (m >> i) & 1:
                    packed |= 1 << k
            out.add(packed)
        return SetSystem(tuple(keep_list), frozenset(out))

    def delete(self, x: Iterable[str]) -> "SetSystem":
        """Restriction to the complement; possibly improper, never an error."""
        drop = set(x)
        for v in drop:
            self.index(v)
        return self.restrict(v for v in self.ground if v not in drop)

    def contract(self, v: str) -> "SetSystem":
        return self.pivot([v]).delete([v])

    def tilde_minus(self, v: str) -> "SetSystem":
        """Members avoiding v, ground set unchanged."""
        i = self.index(v)
        return SetSystem(self.ground, frozenset(m for m in self.family if not (m >> i) & 1))

    def tilde_contract(self, v: str) -> "SetSystem":
        """Members containing v, ground set unchanged."""
        i = self.index(v)
        return SetSystem(self.ground, frozenset(m for m in self.family if (m >> i) & 1))


def vertex_flip_sequence(
    d: SetSystem, ops: Iterable[tuple[FlipOp, str]]
) -> SetSystem:
    """Apply (operation, element) pairs left to right."""
    for op, v in ops:
        if op == "pivot":
            d = d.pivot([v])
        elif op == "dual_pivot":
            d = d.dual_pivot([v])
        elif op == "loop_complement":
            d = d.loop_complement([v])
        else:
            raise ValueError(f"unknown vertex flip {op!r}")
    return d


def satisfies_exchange_axiom(d: SetSystem) -> bool:
    """The symmetric exchange axiom, checked exhaustively."""
    fam = d.family
    for x in fam:
        for y in fam:
            diff = x ^ y
            m = diff
            while m:
                ub = m & -m
                m ^= ub
                if (x ^ ub) in fam:
                    continue
                rest = diff & ~ub
                found = False
                r = rest
                while r:
                    vb = r & -r
                    r ^= vb
                    if (x ^ ub ^ vb) in fam:
                        found = True
                        break
                if not found:
                    return False
    return True


def is_delta_matroid(d: SetSystem) -> bool:
    """Proper and exchange-compliant; on small grounds the equicardinal
    minimum criterion is computed as well and must agree."""
    if not d.is_proper:
        return False
    ok = satisfies_exchange_axiom(d)
    if d.n <= 6:
        alt = all(
            d.pivot(d.labels_of(x)).min_sys().is_equicardinal for x in range(1 << d.n)
        )
        if alt != ok:
            raise AssertionError("exchange axiom and equicardinal-min criterion disagree")
    return ok


class DeltaMatroid(SetSystem):
    """A set system validated against the symmetric exchange axiom."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_proper:
            raise ValueError("a delta-matroid must be proper")
        if not satisfies_exchange_axiom(self):
            raise ValueError("symmetric exchange axiom violated")


def from_graph(g: LoopedSimpleGraph) -> DeltaMatroid:
    """Subsets of V(g) whose induced adjacency submatrix is nonsingular."""
    family = set()
    for mask in range(1 << g.n):
        idx = [i for i in range(g.n) if (mask >> i) & 1]
        if is_nonsingular(principal_submatrix(g.adj, idx)):
            family.add(mask)
    return DeltaMatroid(g.labels, frozenset(family))


def to_graph(d: SetSystem) -> LoopedSimpleGraph:
    """Decode a graphic normal set system back to its looped simple graph.

    A vertex is looped iff its singleton belongs to d; a pair is an edge iff
    pair membership differs from the conjunction of the singleton
    memberships.  The decode is verified by re-encoding.
    """
    if not d.is_normal:
        raise ValueError("a graphic set system contains the empty set")
    loops = [v for v in d.ground if d.contains([v])]
    edges = []
    for i, u in enumerate(d.ground):
        for v in d.ground[i + 1:]:
            single = d.contains([u]) and d.contains([v])
            if d.contains([u, v]) != single:
                edges.append((u, v))
    g = LoopedSimpleGraph.build(d.ground, edges, loops)
    if frozenset(from_graph(g).family) != d.family:
        raise ValueError("set system is not the encoding of any looped simple graph")
    return g


def max_as_matroid(d: SetSystem) -> frozenset[frozenset[str]]:
    """The inclusion-maximal members as a matroid basis family."""
    top = d.max_sys()
    if not top.is_equicardinal:
        raise ValueError("maximal members are not equicardinal, not a matroid")
    return frozenset(top.labels_of(m) for m in top.family)


def random_set_system(rng: random.Random, ground: Sequence[str], density: float = 0.3) -> SetSystem:
    ground = tuple(ground)
    family = {m for m in range(1 << len(ground)) if rng.random() < density}
    return SetSystem(ground, frozenset(family))
