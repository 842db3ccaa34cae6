"""The binary matroid of a looped graph's adjacency matrix.

Minors of these matroids can be produced by deleting a vertex from a graph
reachable through local complementation; this module implements those
derivations, coloop and triple-coloop analysis, the three-variant
comparison at a vertex, and the resulting three-way vertex classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .binary_matroid import BinaryMatroid
from .graph import LoopedSimpleGraph, VariantKind

CaseTag = Literal["case1", "case2", "case3"]


@dataclass(frozen=True)
class TripartitionCase:
    """Vertex class, with the coloop evidence that determined it.

    evidence is (v coloop with the loop removed, v coloop with the loop
    attached); (False, False) cannot occur.
    """

    tag: CaseTag
    evidence: tuple[bool, bool]


@dataclass(frozen=True)
class MinorDerivation:
    """A matroid minor together with its local-complementation witness."""

    result: BinaryMatroid
    witness_graph: LoopedSimpleGraph
    lc_sequence: tuple[str, ...]


@dataclass(frozen=True)
class TrioResult:
    """Which two of the three vertex variants share a matroid at v.

    nullity is the shared nullity; the odd matroid's cycle space contains
    the shared one and has dimension nullity + 1.
    """

    equal_pair: tuple[VariantKind, VariantKind]
    odd_one: VariantKind
    nullity: int


def adjacency_matroid(g: LoopedSimpleGraph) -> BinaryMatroid:
    """The matroid on V(g) represented by the adjacency matrix."""
    return BinaryMatroid.from_matrix(g.adj, g.labels)


def variant_matroid(g: LoopedSimpleGraph, v: str, kind: VariantKind) -> BinaryMatroid:
    return adjacency_matroid(g.variant(v, kind))


def contract_via_lc(g: LoopedSimpleGraph, v: str) -> MinorDerivation:
    """Contract v by deleting it from a local-complementation witness.

    Looped v: complement at v.  Unlooped isolated v: no steps.  Unlooped v
    with an unlooped neighbor w: complement at w then v.  Otherwise take
    the first looped neighbor w and complement at v, w, v.  Qualifying
    neighbors are chosen in label order.
    """
    g.index(v)
    if g.is_looped(v):
        seq = (v,)
    else:
        neighbors = g.neighbors(v)
        if not neighbors:
            seq = ()
        else:
            unlooped = [w for w in neighbors if not g.is_looped(w)]
            if unlooped:
                seq = (unlooped[0], v)
            else:
                seq = (v, neighbors[0], v)
    witness = g
    for w in seq:
        witness = witness.local_complement(w)
    return MinorDerivation(adjacency_matroid(witness.minus(v)), witness, seq)


def is_triple_coloop(g: LoopedSimpleGraph, v: str) -> bool:
    """True iff v is a coloop in all three vertex-variant matroids."""
    return all(
        variant_matroid(g, v, kind).is_coloop(v)
        for kind in ("plain", "loop", "loop_isolate")
    )


def delete_via_subgraph(g: LoopedSimpleGraph, v: str) -> BinaryMatroid:
    """Delete v from the matroid through the graph when possible.

    Away from triple coloops the full-subgraph matroid agrees with matroid
    deletion (asserted); at a triple coloop deletion equals contraction, so
    the local-complementation contraction witness is used instead.
    """
    if is_triple_coloop(g, v):
        return contract_via_lc(g, v).result
    result = adjacency_matroid(g.minus(v))
    if result != adjacency_matroid(g).delete(v):
        raise AssertionError("subgraph deletion disagreed away from a triple coloop")
    return result


def trio(g: LoopedSimpleGraph, v: str) -> TrioResult:
    """Compare the three vertex-variant matroids at v.

    Exactly two are equal; the third's cycle space strictly contains the
    shared one with dimension greater by one (asserted).
    """
    kinds: tuple[VariantKind, ...] = ("plain", "loop", "loop_isolate")
    matroids = {kind: variant_matroid(g, v, kind) for kind in kinds}
    equal_pairs = [
        (a, b)
        for a, b in (("plain", "loop"), ("plain", "loop_isolate"), ("loop", "loop_isolate"))
        if matroids[a] == matroids[b]
    ]
    if len(equal_pairs) != 1:
        raise AssertionError(f"expected exactly one equal pair, found {len(equal_pairs)}")
    pair = equal_pairs[0]
    odd = next(k for k in kinds if k not in pair)
    shared = matroids[pair[0]].cycle_space
    bigger = matroids[odd].cycle_space
    if bigger.dim != shared.dim + 1 or not all(
        bigger.contains(m) for m in shared.basis_masks()
    ):
        raise AssertionError("odd cycle space does not extend the shared one by 1")
    return TrioResult(pair, odd, shared.dim)


def classify_vertex(g: LoopedSimpleGraph, v: str) -> TripartitionCase:
    """Classify v by which vertex variants leave it a coloop."""
    coloop_plain = variant_matroid(g, v, "plain").is_coloop(v)
    coloop_loop = variant_matroid(g, v, "loop").is_coloop(v)
    if coloop_plain and coloop_loop:
        tag: CaseTag = "case1"
    elif coloop_plain:
        tag = "case2"
    elif coloop_loop:
        tag = "case3"
    else:
        raise AssertionError("vertex is a coloop of neither variant")
    return TripartitionCase(tag, (coloop_plain, coloop_loop))


def tripartition_report(g: LoopedSimpleGraph) -> dict[str, TripartitionCase]:
    return {v: classify_vertex(g, v) for v in g.labels}
