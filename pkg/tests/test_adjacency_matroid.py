"""Minor derivations, triple coloops, trio comparison and the tripartition,
pinned to the three worked three-vertex examples."""

import pytest

from adjmatroid.adjacency_matroid import (
    adjacency_matroid,
    classify_vertex,
    contract_via_lc,
    delete_via_subgraph,
    is_triple_coloop,
    trio,
    tripartition_report,
    variant_matroid,
)
from adjmatroid.binary_matroid import (
    free_matroid,
    pair_circuit,
    single_coloop,
    triple_circuit,
)
from adjmatroid.graph import LoopedSimpleGraph

K3 = LoopedSimpleGraph.build("abc", [("a", "b"), ("b", "c"), ("a", "c")])
K3L = K3.loop_complement("a")  # loop on a
P3LL = K3.local_complement("a")  # loops on b and c, center a


def test_adjacency_matroid_worked_examples():
    assert adjacency_matroid(K3).isomorphism(triple_circuit("xyz")) is not None
    assert adjacency_matroid(K3L) == free_matroid("abc")
    assert adjacency_matroid(P3LL).isomorphism(triple_circuit("xyz")) is not None
    assert adjacency_matroid(K3) == adjacency_matroid(P3LL)  # same labels, same space


def test_contraction_worked_examples():
    assert contract_via_lc(K3, "a").result == pair_circuit("bc")
    # unlooped vertex of K3L contracts to a free matroid
    assert contract_via_lc(K3L, "b").result == free_matroid("ac")
    # looped end of P3LL contracts to a two-element circuit
    assert contract_via_lc(P3LL, "b").result.isomorphism(pair_circuit("xy")) is not None


def test_contraction_routes():
    looped = contract_via_lc(K3L, "a")
    assert looped.lc_sequence == ("a",)
    isolated = contract_via_lc(LoopedSimpleGraph.build("ab", [("a", "b")], loops="b")
                               .variant("a", "loop_isolate"), "a")
    assert isolated.lc_sequence == ("a",)  # looped after the variant
    lone = contract_via_lc(LoopedSimpleGraph.build("ab"), "a")
    assert lone.lc_sequence == ()
    unlooped_neighbor = contract_via_lc(K3, "a")
    assert unlooped_neighbor.lc_sequence == ("b", "a")
    # center of P3LL has only looped neighbors: three complement steps
    center = contract_via_lc(P3LL, "a")
    assert center.lc_sequence == ("a", "b", "a")
    for g in (K3, K3L, P3LL):
        for v in g.labels:
            assert contract_via_lc(g, v).result == adjacency_matroid(g).contract(v)
    with pytest.raises(ValueError):
        contract_via_lc(K3, "z")


def test_deletion_worked_examples():
    assert delete_via_subgraph(K3, "a") == free_matroid("bc")
    assert adjacency_matroid(K3).delete("a") == adjacency_matroid(K3.minus("a"))


def test_deletion_at_triple_coloop_uses_contraction():
    # a single edge: both ends are triple coloops and the full-subgraph
    # route would change the matroid
    edge = LoopedSimpleGraph.build("vw", [("v", "w")])
    m = adjacency_matroid(edge)
    assert is_triple_coloop(edge, "v")
    deleted = delete_via_subgraph(edge, "v")
    assert deleted == m.delete("v") == free_matroid("w")
    # while the subgraph's own matroid has w as a loop instead
    assert adjacency_matroid(edge.minus("v")).is_loop("w")
    assert adjacency_matroid(edge.minus("v")) != deleted


def test_triple_coloop_examples():
    assert not any(
        variant_matroid(K3, v, "plain").is_coloop(v) for v in K3.labels
    )
    k3l_b = K3L.local_complement("b")
    assert is_triple_coloop(k3l_b, "b")
    assert adjacency_matroid(K3L).is_coloop("a")
    assert not is_triple_coloop(K3L, "a")


def test_trio_worked_examples():
    t = trio(K3, "a")
    assert t.equal_pair == ("loop", "loop_isolate")
    assert t.odd_one == "plain"
    assert variant_matroid(K3, "a", "loop") == free_matroid("abc")
    t2 = trio(K3L, "b")
    assert t2.equal_pair == ("plain", "loop_isolate")
    assert variant_matroid(K3L, "b", "loop_isolate") == adjacency_matroid(K3L)


def test_trio_single_vertex():
    lone = LoopedSimpleGraph.build("v")
    t = trio(lone, "v")
    assert t.equal_pair == ("loop", "loop_isolate")
    assert t.odd_one == "plain"
    assert t.nullity == 0
    assert variant_matroid(lone, "v", "plain").nullity == 1


def test_classification_worked_examples():
    assert classify_vertex(K3, "a").tag == "case3"
    assert classify_vertex(K3L, "b").tag == "case2"
    assert classify_vertex(K3L, "a").tag == "case3"
    assert classify_vertex(P3LL, "b").tag == "case2"
    assert classify_vertex(P3LL, "a").tag == "case3"


def test_tripartition_reports():
    assert {v: c.tag for v, c in tripartition_report(K3).items()} == {
        "a": "case3", "b": "case3", "c": "case3"
    }
    assert {v: c.tag for v, c in tripartition_report(K3L).items()} == {
        "a": "case3", "b": "case2", "c": "case2"
    }
    assert {v: c.tag for v, c in tripartition_report(P3LL).items()} == {
        "a": "case3", "b": "case2", "c": "case2"
    }


def test_tripartition_independence_witness():
    # isomorphic matroids, different case multisets
    assert adjacency_matroid(K3).isomorphism(adjacency_matroid(P3LL)) is not None
    cases_k3 = sorted(c.tag for c in tripartition_report(K3).values())
    cases_p = sorted(c.tag for c in tripartition_report(P3LL).values())
    assert cases_k3 != cases_p
    # nonisomorphic matroids, identical case multisets
    assert adjacency_matroid(K3L).isomorphism(adjacency_matroid(P3LL)) is None
    cases_l = sorted(c.tag for c in tripartition_report(K3L).values())
    assert cases_l == cases_p


def test_case1_example_exists():
    # the complement view of a case-2 vertex lands in case 1
    k3l_b = K3L.local_complement("b")
    assert classify_vertex(k3l_b, "b").tag == "case1"
    assert classify_vertex(k3l_b.local_complement("b"), "b").tag == "case2"


def test_loop_isolate_direct_sum_identity():
    for g in (K3, K3L, P3LL):
        for v in g.labels:
            iso = variant_matroid(g, v, "loop_isolate")
            expected = adjacency_matroid(g.minus(v)).direct_sum(single_coloop(v))
            assert iso == expected
