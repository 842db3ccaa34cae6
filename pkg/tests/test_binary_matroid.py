"""Binary matroid structure: circuits, minors, duality, polygon matroids."""

import itertools
import random

import pytest

from adjmatroid.binary_matroid import (
    BinaryMatroid,
    all_loops_matroid,
    free_matroid,
    pair_circuit,
    polygon_matroid,
    single_coloop,
    single_loop,
    triple_circuit,
)
from adjmatroid.gf2 import BitMatrix, Subspace, popcount
from adjmatroid.graph import LoopedSimpleGraph, MultiGraph

A_K3 = BitMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def minimal_supports(vectors: set[int]) -> set[int]:
    """Oracle: minimal nonempty supports among explicit vector sets."""
    nonzero = [v for v in vectors if v]
    return {
        v for v in nonzero if not any(w != v and w & v == w for w in nonzero)
    }


def test_from_matrix_examples():
    m = BinaryMatroid.from_matrix(A_K3, "abc")
    assert m.circuits() == {frozenset("abc")}
    assert m == triple_circuit("abc")
    free = BinaryMatroid.from_matrix(BitMatrix.identity(3), "abc")
    assert free.circuits() == frozenset()
    loop = BinaryMatroid.from_matrix(BitMatrix.zero(1, 1), "a")
    assert loop.circuits() == {frozenset("a")}
    assert loop == single_loop("a")
    with pytest.raises(ValueError):
        BinaryMatroid.from_matrix(A_K3, "ab")


def test_from_subspace_round_trip():
    zero = BinaryMatroid.from_subspace(Subspace.zero(3), "abc")
    assert zero == free_matroid("abc")
    u32 = BinaryMatroid.from_subspace(Subspace.span(3, [0b111]), "abc")
    oracle = minimal_supports(set(Subspace.span(3, [0b111]).vectors()))
    assert set(u32.circuit_masks()) == oracle == {0b111}
    u10 = BinaryMatroid.from_subspace(Subspace.full(1), "v")
    assert u10 == single_loop("v")
    assert BinaryMatroid.from_subspace(u32.cycle_space, u32.ground) == u32


def test_circuits_examples():
    assert free_matroid("abc").circuits() == frozenset()
    assert triple_circuit("abc").circuits() == {frozenset("abc")}
    edge = LoopedSimpleGraph.build("vw", [("v", "w")])
    m = BinaryMatroid.from_matrix(edge.adj, edge.labels)
    assert m.circuits() == frozenset()


def test_circuits_match_minimal_support_oracle():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randrange(6)
        w = Subspace.span(n, [rng.randrange(1 << n) for _ in range(rng.randrange(4))])
        m = BinaryMatroid.from_subspace(w, tuple(f"v{i}" for i in range(n)))
        assert set(m.circuit_masks()) == minimal_supports(set(w.vectors()))


def test_rank_of():
    assert free_matroid("abc").rank_of("abc") == 3
    u32 = triple_circuit("abc")
    assert u32.rank_of("abc") == 2
    assert u32.rank_of([]) == 0
    assert u32.rank_of(["a"]) == 1
    with pytest.raises(ValueError):
        u32.rank_of(["z"])


def test_dual():
    assert free_matroid("abc").dual() == all_loops_matroid("abc")
    d = triple_circuit("abc").dual()
    assert d.circuits() == {
        frozenset("ab"), frozenset("ac"), frozenset("bc")
    }
    assert d.cycle_space == Subspace.span(3, [0b011, 0b110])
    assert single_coloop("v").dual() == single_loop("v")
    assert d.dual() == triple_circuit("abc")


def test_delete_contract_examples():
    u32 = triple_circuit("abc")
    assert u32.delete("a") == free_matroid("bc")
    assert u32.contract("a") == pair_circuit("bc")
    mixed = single_loop("x").direct_sum(free_matroid("yz"))
    assert mixed.delete("x") == free_matroid("yz")
    assert mixed.delete("x") == mixed.contract("x")  # loops delete = contract
    with pytest.raises(ValueError):
        u32.delete("z")


def test_direct_sum_loop_coloop_adjunction():
    base = triple_circuit("abc")
    plus_coloop = base.direct_sum(single_coloop("d"))
    assert plus_coloop.is_coloop("d")
    assert plus_coloop.delete("d") == base
    plus_loop = base.direct_sum(single_loop("d"))
    assert plus_loop.is_loop("d")
    assert plus_loop.delete("d") == base
    assert free_matroid("ab").direct_sum(free_matroid("cd")) == free_matroid("abcd")
    with pytest.raises(ValueError):
        base.direct_sum(single_loop("a"))


def test_loop_coloop_detection():
    lonely = LoopedSimpleGraph.build("ab", [("a", "b")])
    iso = LoopedSimpleGraph.build("abc", [("a", "b")])
    m = BinaryMatroid.from_matrix(iso.adj, iso.labels)
    assert m.is_loop("c")  # isolated unlooped vertex
    looped_iso = LoopedSimpleGraph.build("abc", [("a", "b")], loops="c")
    m2 = BinaryMatroid.from_matrix(looped_iso.adj, looped_iso.labels)
    assert m2.is_coloop("c")
    free = BinaryMatroid.from_matrix(lonely.adj, lonely.labels)
    assert all(free.is_coloop(v) for v in "ab")


def brute_cycle_edge_sets(mg: MultiGraph) -> set[frozenset[str]]:
    """Oracle: connected edge subsets with every incident vertex of degree 2."""
    out = set()
    m = len(mg.edges)
    for mask in range(1, 1 << m):
        chosen = [e for e in range(m) if (mask >> e) & 1]
        degree: dict[int, int] = {}
        for e in chosen:
            u, v = mg.edges[e]
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if any(d != 2 for d in degree.values()):
            continue
        verts = sorted(degree)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            x = stack.pop()
            for e in chosen:
                u, v = mg.edges[e]
                if u == x and v not in seen:
                    seen.add(v)
                    stack.append(v)
                elif v == x and u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) == len(verts):
            out.add(frozenset(mg.edge_labels[e] for e in chosen))
    return out


def test_polygon_matroid_examples():
    tri = MultiGraph.build("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    m = polygon_matroid(tri)
    assert m.circuits() == {frozenset(tri.edge_labels)}
    assert m.rank == 2
    tree = MultiGraph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    assert polygon_matroid(tree) == free_matroid(tree.edge_labels)
    one_loop = MultiGraph.build("a", [("a", "a")])
    assert polygon_matroid(one_loop) == single_loop("e0")


def test_polygon_circuits_match_cycle_oracle():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randrange(1, 5)
        edges = tuple((rng.randrange(n), rng.randrange(n)) for _ in range(rng.randrange(6)))
        mg = MultiGraph(tuple(f"v{i}" for i in range(n)), edges)
        assert polygon_matroid(mg).circuits() == brute_cycle_edge_sets(mg)


def test_equality_is_order_insensitive_on_labels():
    a = free_matroid("ab").direct_sum(single_loop("c"))
    b = single_loop("c").direct_sum(free_matroid("ab"))
    assert a == b
    assert hash(a) == hash(b)
    assert a != free_matroid("abc")


def test_isomorphism_examples():
    k3 = LoopedSimpleGraph.build("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    p3ll = k3.local_complement("a")
    k3l = k3.loop_complement("a")
    m_k3 = BinaryMatroid.from_matrix(k3.adj, k3.labels)
    m_p = BinaryMatroid.from_matrix(p3ll.adj, p3ll.labels)
    m_l = BinaryMatroid.from_matrix(k3l.adj, k3l.labels)
    assert m_k3.isomorphism(m_p) is not None
    assert m_l.isomorphism(m_p) is None
    # a two-vertex path shares its matroid with two looped points
    edge = LoopedSimpleGraph.build("vw", [("v", "w")])
    pts = LoopedSimpleGraph.build("xy", loops="xy")
    m_edge = BinaryMatroid.from_matrix(edge.adj, edge.labels)
    m_pts = BinaryMatroid.from_matrix(pts.adj, pts.labels)
    assert m_edge.isomorphism(m_pts) is not None
    with pytest.raises(ValueError):
        free_matroid("abcdefghi").isomorphism(free_matroid("abcdefghi"))


def test_bases_and_independent_sets():
    u32 = triple_circuit("abc")
    assert u32.bases() == {
        frozenset("ab"), frozenset("ac"), frozenset("bc")
    }
    assert free_matroid("abc").bases() == {frozenset("abc")}
    assert single_loop("v").independent_sets() == {frozenset()}
    # every independent set avoids every circuit
    for s in u32.independent_sets():
        assert not frozenset("abc") <= s


def test_bases_equicardinal_with_rank():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randrange(1, 6)
        w = Subspace.span(n, [rng.randrange(1 << n) for _ in range(rng.randrange(3))])
        m = BinaryMatroid.from_subspace(w, tuple(f"v{i}" for i in range(n)))
        for b in m.bases():
            assert len(b) == m.rank


def test_minor_duality_exchange():
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randrange(1, 6)
        w = Subspace.span(n, [rng.randrange(1 << n) for _ in range(rng.randrange(3))])
        m = BinaryMatroid.from_subspace(w, tuple(f"v{i}" for i in range(n)))
        assert m.dual().dual() == m
        for v in m.ground:
            assert m.delete(v).dual() == m.dual().contract(v)


def test_circuit_axioms_on_random_instances():
    rng = random.Random(29)
    for _ in range(40):
        n = rng.randrange(1, 6)
        w = Subspace.span(n, [rng.randrange(1 << n) for _ in range(rng.randrange(4))])
        m = BinaryMatroid.from_subspace(w, tuple(f"v{i}" for i in range(n)))
        circuits = m.circuit_masks()
        assert 0 not in circuits
        for c1, c2 in itertools.combinations(circuits, 2):
            assert c1 & c2 not in (c1, c2)
            diff = c1 ^ c2
            assert any(c & diff == c for c in circuits)
        for z in w.vectors():
            rest = z
            while rest:
                c = next(c for c in circuits if c & rest == c)
                rest ^= c
