"""Named property suites exercising every structural identity of the toolkit.

Each check runs over exhaustively enumerated small instances plus seeded
random ones, and reports instance counts and minimal reproducing inputs for
any failure.  The command line `verify` subcommand and the acceptance tests
both drive these suites.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import delta_matroid as dm
from .adjacency_matroid import (
    adjacency_matroid,
    classify_vertex,
    contract_via_lc,
    delete_via_subgraph,
    is_triple_coloop,
    trio,
    variant_matroid,
)
from .binary_matroid import BinaryMatroid, polygon_matroid, single_coloop
from .four_regular import (
    CircuitPartition,
    EulerSystem,
    HalfEdgeGraph,
    TransitionSystem,
    all_transition_systems,
    compatible_euler_system,
    euler_system,
    interlacement,
    kappa,
    partition_from_transitions,
    random_four_regular,
    realize_touch_graph,
    relative_interlacement,
    small_four_regular_corpus,
    touch_graph,
    transition_type,
)
from .gf2 import (
    BitMatrix,
    Subspace,
    all_subspaces,
    nullity,
    nullspace,
    orthogonal_complement,
    popcount,
    principal_submatrix,
    rank,
    symmetrize_nullspace,
)
from .graph import (
    LoopedSimpleGraph,
    MultiGraph,
    all_looped_simple_graphs,
    as_multigraph,
    graph_isomorphism,
    nullity_oracle_of,
    random_looped_simple_graph,
    reconstruct_from_nullity_oracle,
)
from .graphtext import render_graph
from .polynomials import (
    interlace_recursive,
    interlace_subset,
    interlace_vertex_terms,
    lambda_leading,
    q_from_lambda,
    shifted_power_term,
    tutte_recursive,
    tutte_subset,
)

SUITE_NAMES = ("matroid", "delta", "fourreg", "poly")
MAX_FAILURES_KEPT = 5


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class Recorder:
    """Accumulates per-check instance counts and failure witnesses."""

    def __init__(self) -> None:
        self.results: dict[str, CheckResult] = {}

    def record(self, name: str, ok: bool, witness: str) -> None:
        r = self.results.setdefault(name, CheckResult(name))
        r.instances += 1
        if not ok and len(r.failures) < MAX_FAILURES_KEPT:
            r.failures.append(witness)

    def check(self, name: str, witness: str):
        """Record exceptions from a block as failures of the named check."""
        recorder = self

        class _Ctx:
            def __enter__(self) -> None:
                return None

            def __exit__(self, exc_type, exc, tb) -> bool:
                if exc_type is None:
                    recorder.record(name, True, witness)
                    return True
                if issubclass(exc_type, AssertionError):
                    recorder.record(name, False, f"{witness}: {exc}")
                    return True
                return False

        return _Ctx()

    def report(self) -> list[CheckResult]:
        return [self.results[k] for k in self.results]


def graph_witness(g: LoopedSimpleGraph | MultiGraph, extra: str = "") -> str:
    text = render_graph(g).strip().replace("\n", "; ")
    return f"[{text}]" + (f" {extra}" if extra else "")


def _graph_stream(max_n: int, trials: int, rand_n: int, seed: int):
    for n in range(max_n + 1):
        yield from all_looped_simple_graphs(n)
    rng = random.Random(seed)
    for _ in range(trials):
        yield random_looped_simple_graph(rng, rand_n)


# ---------------------------------------------------------------------------
# matroid suite: the GF(2) kernel, the subspace correspondence, and every
# minor/local-complement/tripartition identity of adjacency matroids.


def _check_circuit_axioms(rec: Recorder, m: BinaryMatroid, witness: str) -> None:
    circuits = m.circuit_masks()
    circuit_set = set(circuits)
    with rec.check("circuit-axioms", witness):
        assert 0 not in circuit_set, "empty circuit"
        for c1, c2 in itertools.combinations(circuits, 2):
            assert not (c1 & c2 == c1 or c1 & c2 == c2), "nested circuits"
            diff = c1 ^ c2
            assert any(c & diff == c for c in circuits), "symmetric difference misses a circuit"
    with rec.check("cycle-vectors-split-into-disjoint-circuits", witness):
        for z in m.cycle_space.vectors():
            rest = z
            parts: list[int] = []
            while rest:
                c = next((c for c in circuits if c & rest == c), None)
                assert c is not None, f"vector {rest:b} contains no circuit"
                parts.append(c)
                rest ^= c
            for c1, c2 in itertools.combinations(parts, 2):
                assert c1 & c2 == 0, "circuit decomposition not disjoint"


def _matroid_kernel_checks(rec: Recorder, max_n: int, trials: int, seed: int) -> None:
    rng = random.Random(seed + 1)

    for n in range(min(max_n, 5) + 1):
        for w in all_subspaces(n):
            m = BinaryMatroid.from_subspace(w, tuple(f"v{i}" for i in range(n)))
            witness = f"subspace dim {w.dim} of 2^{n}: {w.basis_masks()}"
            with rec.check("subspace-matroid-round-trip", witness):
                assert BinaryMatroid.from_subspace(m.cycle_space, m.ground) == m
                assert m.cycle_space == w
                span = Subspace.span(n, m.circuit_masks())
                assert span == w, "circuits do not span the cycle space"
            _check_circuit_axioms(rec, m, witness)

    for t in range(max(trials, 200)):
        rows = rng.randrange(1, 9)
        cols = rng.randrange(1, 9)
        a = BitMatrix(rows, cols, tuple(rng.randrange(1 << cols) for _ in range(rows)))
        witness = f"matrix {a.rows}x{a.cols} rows={a.data}"
        with rec.check("rank-plus-nullity", witness):
            assert rank(a) + nullity(a) == a.cols
            assert rank(a) == rank(a.transpose())
        with rec.check("nullspace-annihilates", witness):
            for v in nullspace(a).basis_masks():
                assert a.mul_mask(v) == 0
        with rec.check("orthogonal-complement-involution", witness):
            w = nullspace(a)
            comp = orthogonal_complement(w)
            assert comp.dim + w.dim == a.cols
            assert orthogonal_complement(comp) == w
            for x in w.basis_masks():
                for y in comp.basis_masks():
                    assert popcount(x & y) % 2 == 0
        with rec.check("symmetric-representation-of-nullspace", witness):
            b = symmetrize_nullspace(a)
            assert b.is_symmetric and b.rows == a.cols
            assert nullspace(b) == nullspace(a)
            kernel = nullspace(a)
            for v in range(1 << a.cols):
                assert (b.mul_mask(v) == 0) == kernel.contains(v)
        with rec.check("symmetric-representation-same-matroid", witness):
            labels = tuple(f"v{i}" for i in range(a.cols))
            assert BinaryMatroid.from_matrix(symmetrize_nullspace(a), labels) == (
                BinaryMatroid.from_matrix(a, labels)
            )

    for t in range(max(trials, 200)):
        n = rng.randrange(8)
        rows = [0] * n
        for i in range(n):
            for j in range(i, n):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        a = BitMatrix(n, n, tuple(rows))
        r = rank(a)
        witness = f"symmetric {n}x{n} rows={a.data}"
        with rec.check("principal-minor-rank-criterion", witness):
            for s in itertools.combinations(range(n), r):
                cols = [a.column_mask(j) for j in s]
                independent = len(Subspace.span(n, cols).basis) == r
                principal_ok = rank(principal_submatrix(a, s)) == r
                assert independent == principal_ok


def _cycle_edge_sets(mg: MultiGraph) -> set[frozenset[str]]:
    """Edge sets of graph cycles: nonempty, connected, every vertex degree 2."""
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
        reach = {verts[0]}
        frontier = [verts[0]]
        while frontier:
            x = frontier.pop()
            for e in chosen:
                u, v = mg.edges[e]
                if u == x and v not in reach:
                    reach.add(v)
                    frontier.append(v)
                if v == x and u not in reach:
                    reach.add(u)
                    frontier.append(u)
        if len(reach) == len(verts):
            out.add(frozenset(mg.edge_labels[e] for e in chosen))
    return out


def _random_multigraph(rng: random.Random, n: int, m: int) -> MultiGraph:
    labels = tuple(f"v{i}" for i in range(n))
    edges = tuple((rng.randrange(n), rng.randrange(n)) for _ in range(m))
    return MultiGraph(labels, edges)


def _matroid_graph_checks(rec: Recorder, g: LoopedSimpleGraph) -> None:
    mg = adjacency_matroid(g)
    for v in g.labels:
        witness = graph_witness(g, f"vertex {v}")
        gv = g.local_complement(v)
        m_g = mg
        m_gv = adjacency_matroid(gv)
        m_minus = adjacency_matroid(g.minus(v))

        with rec.check("contract-matches-complement-witness", witness):
            derivation = contract_via_lc(g, v)
            assert derivation.result == m_g.contract(v)
            rebuilt = g
            for w in derivation.lc_sequence:
                rebuilt = rebuilt.local_complement(w)
            assert rebuilt == derivation.witness_graph

        with rec.check("delete-matches-subgraph-for-noncoloops", witness):
            if not m_g.is_coloop(v):
                assert m_g.delete(v) == m_minus

        with rec.check("delete-matches-subgraph-off-triple-coloops", witness):
            if not is_triple_coloop(g, v):
                assert m_g.delete(v) == m_minus
            assert delete_via_subgraph(g, v) == m_g.delete(v)

        with rec.check("deletion-ignores-local-complement", witness):
            assert m_g.delete(v) == m_gv.delete(v)

        with rec.check("local-complement-matroid-relation", witness):
            if not g.is_looped(v):
                assert m_gv == m_g
            else:
                c_here = m_g.is_coloop(v)
                c_there = m_gv.is_coloop(v)
                assert c_here or c_there, "coloop of neither"
                if c_here and c_there:
                    assert m_gv == m_g
                    assert not is_triple_coloop(g, v)
                    assert not is_triple_coloop(gv, v)
                else:
                    m1, m2 = (m_gv, m_g) if c_here else (m_g, m_gv)
                    graph2 = g if c_here else gv
                    assert m2 == m1.delete(v).direct_sum(single_coloop(v))
                    assert m2.nullity == m1.nullity - 1, "equal nullities"
                    assert is_triple_coloop(graph2, v)

        with rec.check("three-variants-two-agree", witness):
            t = trio(g, v)
            tag = classify_vertex(g, v).tag
            expected_pair = {
                "case1": ("plain", "loop"),
                "case2": ("plain", "loop_isolate"),
                "case3": ("loop", "loop_isolate"),
            }[tag]
            assert t.equal_pair == expected_pair, f"{t.equal_pair} vs case {tag}"

        with rec.check("loop-isolate-splits-off-coloop", witness):
            iso = variant_matroid(g, v, "loop_isolate")
            assert iso.is_coloop(v)
            assert iso == m_minus.direct_sum(single_coloop(v))
            gv_loop = adjacency_matroid(gv.variant(v, "loop"))
            assert iso.nullity == m_minus.nullity == gv_loop.contract(v).nullity == gv_loop.nullity

        with rec.check("coloop-of-graph-or-loop-complement", witness):
            toggled = adjacency_matroid(g.loop_complement(v))
            assert m_g.is_coloop(v) or toggled.is_coloop(v)

        with rec.check("triple-coloop-cycle-space-criterion", witness):
            plain = variant_matroid(g, v, "plain")
            loop = variant_matroid(g, v, "loop")
            iso = variant_matroid(g, v, "loop_isolate")
            assert iso.is_coloop(v)
            assert plain.is_coloop(v) or loop.is_coloop(v)
            criterion = plain.cycle_space == loop.cycle_space and all(
                iso.cycle_space.contains(x) for x in plain.cycle_space.basis_masks()
            ) and iso.cycle_space != plain.cycle_space
            assert criterion == is_triple_coloop(g, v)

        with rec.check("tripartition-case-details", witness):
            _check_tripartition_case(g, v, gv)

    with rec.check("rank-function-shape", graph_witness(g)):
        table = {}
        for mask in range(1 << g.n):
            s = [g.labels[i] for i in range(g.n) if (mask >> i) & 1]
            table[mask] = mg.rank_of(s)
        full = (1 << g.n) - 1
        assert table[0] == 0
        for a in range(1 << g.n):
            for i in range(g.n):
                if not (a >> i) & 1:
                    b = a | (1 << i)
                    assert table[a] <= table[b] <= table[a] + 1, "not a unit-increase function"
        for a in range(1 << g.n):
            for b in range(1 << g.n):
                assert table[a | b] + table[a & b] <= table[a] + table[b], "not submodular"
        assert table[full] == mg.rank

    with rec.check("duality-and-minor-exchange", graph_witness(g)):
        assert mg.dual().dual() == mg
        for v in g.labels:
            assert mg.delete(v).dual() == mg.dual().contract(v)
            assert mg.contract(v).dual() == mg.dual().delete(v)

    with rec.check("graph-reconstruction-from-nullities", graph_witness(g)):
        assert reconstruct_from_nullity_oracle(g.labels, nullity_oracle_of(g)) == g

    with rec.check("local-complement-case-description", graph_witness(g)):
        for v in g.labels:
            gv = g.local_complement(v)
            neighbors = set(g.neighbors(v))
            for w in g.labels:
                if w == v:
                    assert gv.is_looped(w) == g.is_looped(w)
                elif w in neighbors:
                    assert gv.is_looped(w) != g.is_looped(w)
                else:
                    assert gv.is_looped(w) == g.is_looped(w)
            for w, x in itertools.combinations(g.labels, 2):
                if v in (w, x):
                    assert gv.adjacent(w, x) == g.adjacent(w, x)
                elif w in neighbors and x in neighbors:
                    assert gv.adjacent(w, x) != g.adjacent(w, x)
                else:
                    assert gv.adjacent(w, x) == g.adjacent(w, x)
            assert gv.local_complement(v) == g


def _check_tripartition_case(g: LoopedSimpleGraph, v: str, gv: LoopedSimpleGraph) -> None:
    case = classify_vertex(g, v).tag
    back = classify_vertex(gv, v).tag
    u11 = single_coloop(v)

    def variants(h: LoopedSimpleGraph) -> dict[str, BinaryMatroid]:
        return {k: variant_matroid(h, v, k) for k in ("plain", "loop", "loop_isolate")}

    mine = variants(g)
    theirs = variants(gv)
    if case == "case3":
        assert back == "case3", "case 3 must persist under local complementation"
        assert theirs["plain"] == mine["plain"]
        shared = [mine["loop"], theirs["loop"], mine["loop_isolate"], theirs["loop_isolate"]]
        assert all(m == shared[0] for m in shared)
        assert shared[0] == mine["plain"].delete(v).direct_sum(u11)
        assert mine["plain"].nullity == mine["loop"].nullity + 1
        assert all(
            mine["plain"].cycle_space.contains(x)
            for x in mine["loop"].cycle_space.basis_masks()
        )
    else:
        if case == "case1":
            assert back == "case2", "case 1 must swap to case 2 under local complementation"
            inner, outer = mine, theirs
            outer_graph = gv
        else:
            assert back == "case1", "case 2 must swap to case 1 under local complementation"
            inner, outer = theirs, mine
            outer_graph = g
        # the one matroid without v as a coloop is outer["loop"]
        assert not outer["loop"].is_coloop(v)
        assert inner["loop_isolate"] == outer["loop"].contract(v).direct_sum(u11)
        shared = [inner["plain"], inner["loop"], outer["plain"], outer["loop_isolate"]]
        assert all(m == shared[0] for m in shared)
        assert shared[0] == outer["loop"].delete(v).direct_sum(u11)
        assert inner["loop_isolate"].nullity == outer["loop"].nullity
        assert inner["plain"].nullity == outer["loop"].nullity - 1
        # intersection of the two big cycle spaces equals the shared one
        big1 = inner["loop_isolate"].cycle_space
        big2 = outer["loop"].cycle_space
        inter = [x for x in big1.vectors() if big2.contains(x)]
        assert Subspace.span(g.n, inter) == inner["plain"].cycle_space
        assert any(
            outer_graph.minus(v).is_looped(w) for w in outer_graph.labels if w != v
        ), "a looped vertex must survive off v"


def _polygon_checks(rec: Recorder, trials: int, seed: int) -> None:
    rng = random.Random(seed + 2)
    fixed = [
        MultiGraph.build("abc", [("a", "b"), ("b", "c"), ("c", "a")]),
        MultiGraph.build("ab", [("a", "b"), ("a", "b")]),
        MultiGraph.build("a", [("a", "a")]),
        MultiGraph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d")]),
    ]
    samples = fixed + [
        _random_multigraph(rng, rng.randrange(1, 5), rng.randrange(7))
        for _ in range(max(trials, 100))
    ]
    for mg in samples:
        witness = graph_witness(mg)
        with rec.check("polygon-circuits-are-graph-cycles", witness):
            assert polygon_matroid(mg).circuits() == _cycle_edge_sets(mg)


def matroid_suite(max_n: int = 4, trials: int = 200, seed: int = 0) -> list[CheckResult]:
    rec = Recorder()
    _matroid_kernel_checks(rec, max_n, trials, seed)
    _polygon_checks(rec, min(trials, 100), seed)
    rand_n = max_n + 3
    for g in _graph_stream(max_n, trials, rand_n, seed):
        _matroid_graph_checks(rec, g)
    return rec.report()


# ---------------------------------------------------------------------------
# delta suite: set-system algebra, the graph encoding, and the matrix-free
# reproofs of the minor identities.


def _sets_witness(d: dm.SetSystem, extra: str = "") -> str:
    members = ",".join("{" + " ".join(s) + "}" for s in d.member_sets())
    return f"[ground {' '.join(d.ground)}; family {members}]" + (f" {extra}" if extra else "")


def _delta_graph_checks(rec: Recorder, g: LoopedSimpleGraph) -> None:
    d = dm.from_graph(g)
    mg = adjacency_matroid(g)
    witness = graph_witness(g)

    with rec.check("graph-encoding-is-normal-delta-matroid", witness):
        assert d.is_normal
        assert dm.is_delta_matroid(d)
        assert d.min_sys().family == frozenset({0})
        assert dm.to_graph(d) == g

    with rec.check("distance-equals-induced-nullity", witness):
        for mask in range(1 << g.n):
            idx = [i for i in range(g.n) if (mask >> i) & 1]
            s = [g.labels[i] for i in idx]
            assert d.distance(s) == nullity(principal_submatrix(g.adj, idx))

    with rec.check("max-members-are-matroid-bases", witness):
        assert dm.max_as_matroid(d) == mg.bases()

    for v in g.labels:
        wv = graph_witness(g, f"vertex {v}")
        with rec.check("flips-match-graph-complements", wv):
            if g.is_looped(v):
                assert d.pivot([v]) == dm.from_graph(g.local_complement(v))
            else:
                assert d.dual_pivot([v]) == dm.from_graph(g.local_complement(v))
            assert d.loop_complement([v]) == dm.from_graph(g.loop_complement(v))
            assert d.delete([v]) == dm.from_graph(g.minus(v))

        with rec.check("matrix-free-minor-routes-agree", wv):
            if not mg.is_coloop(v):
                assert mg.delete(v).bases() == dm.max_as_matroid(d.delete([v]))
            if g.is_looped(v):
                assert mg.contract(v).bases() == dm.max_as_matroid(d.pivot([v]).delete([v]))
            elif g.neighbors(v):
                assert mg.contract(v).bases() == dm.max_as_matroid(d.pivot([v]).delete([v]))
                w = g.neighbors(v)[0]
                seq = d.dual_pivot([w]) if not g.is_looped(w) else d.dual_pivot([v]).dual_pivot([w])
                assert dm.max_as_matroid(seq.pivot([v]).delete([v])) == mg.contract(v).bases()
            gv_m = adjacency_matroid(g.local_complement(v))
            if not g.is_looped(v):
                assert dm.max_as_matroid(d.dual_pivot([v])) == gv_m.bases() == mg.bases()

        with rec.check("two-of-three-max-transforms-agree", wv):
            _check_two_of_three(d, v, g)

        with rec.check("max-after-pinning", wv):
            tilde = d.tilde_minus(v)
            if tilde.is_proper:
                left = tilde.loop_complement([v]).max_sys()
                right = d.pivot([v]).max_sys().tilde_contract(v)
                assert left.family == right.family

        with rec.check("loop-isolate-via-max-filter", wv):
            if g.is_looped(v):
                gv = g.local_complement(v)
                m_iso = variant_matroid(g, v, "loop_isolate")
                m_gv = adjacency_matroid(gv)
                assert m_iso.nullity == m_gv.nullity
                assert m_iso.bases() == {b for b in m_gv.bases() if v in b}
                assert m_iso == m_gv.contract(v).direct_sum(single_coloop(v))
                assert (m_iso == m_gv) == (mg.nullity >= m_gv.nullity)

    for mask in range(1 << g.n):
        s = [g.labels[i] for i in range(g.n) if (mask >> i) & 1]
        ws = graph_witness(g, f"subset {{{' '.join(s)}}}")
        sub = adjacency_matroid(g.induced(s))
        with rec.check("bases-are-maximal-encoded-subsets", ws):
            inside = [m for m in d.family if m & ~mask == 0]
            maximal = {
                d.labels_of(m)
                for m in inside
                if not any(z != m and m & ~z == 0 for z in inside)
            }
            assert maximal == sub.bases()
        with rec.check("independents-extend-to-encoded-sets", ws):
            independents = {
                frozenset(i_labels)
                for i_labels in sub.independent_sets()
            }
            via_d = set()
            for i_mask in range(1 << g.n):
                if i_mask & ~mask:
                    continue
                if any(i_mask & ~x == 0 and x & ~mask == 0 for x in d.family):
                    via_d.add(d.labels_of(i_mask))
            assert via_d == independents
        with rec.check("restriction-collects-subgraph-bases", ws):
            collected = set()
            for t_mask in range(1 << g.n):
                if t_mask & ~mask:
                    continue
                t = [g.labels[i] for i in range(g.n) if (t_mask >> i) & 1]
                collected |= adjacency_matroid(g.induced(t)).bases()
            restricted = dm.from_graph(g.induced(s))
            assert {restricted.labels_of(m) for m in restricted.family} == collected


def _check_two_of_three(d: dm.SetSystem, v: str, g: LoopedSimpleGraph) -> None:
    candidates = {
        "plain": d.max_sys(),
        "pivot": d.pivot([v]).max_sys(),
        "loop": d.loop_complement([v]).max_sys(),
    }
    families = {k: frozenset(c.family) for k, c in candidates.items()}
    groups: dict[frozenset[int], list[str]] = {}
    for k, fam in families.items():
        groups.setdefault(fam, []).append(k)
    assert len(groups) == 2, f"expected exactly two distinct maxima, got {len(groups)}"
    (fam1, keys1), (fam2, keys2) = groups.items()
    if len(keys1) == 2:
        d1, d2 = fam1, fam2
    else:
        d1, d2 = fam2, fam1
    i = d.index(v)
    vb = 1 << i
    rebuilt = frozenset((m | vb) for m in d2 if not m & vb)
    stripped = frozenset(m for m in d2 if not m & vb)
    assert {m | vb for m in stripped} == set(rebuilt)
    assert rebuilt == d1, "pinned third maximum differs from the shared one"
    size1 = popcount(next(iter(d1)))
    size2 = popcount(next(iter(d2)))
    assert (d.n - size2) == (d.n - size1) + 1, "nullity step is not one"


def _delta_general_checks(rec: Recorder, trials: int, rand_n: int, seed: int) -> None:
    rng = random.Random(seed + 3)

    fixed = dm.SetSystem.from_sets("uvw", [["u"], ["v"], ["v", "w"]])
    with rec.check("max-deletion-counterexample", _sets_witness(fixed)):
        top = fixed.max_sys()
        assert not top.is_coloop("w")
        assert top.delete(["w"]).family != fixed.delete(["w"]).max_sys().family
        assert top.delete(["w"]).member_sets() == (("u",),)
        assert fixed.delete(["w"]).max_sys().member_sets() == (("u",), ("v",))

    power = dm.SetSystem("abc", frozenset(range(1, 8)))
    with rec.check("dual-pivot-can-break-exchange", _sets_witness(power)):
        flipped = power.dual_pivot(list("abc"))
        assert flipped.family == frozenset({0, 7})
        assert not dm.is_delta_matroid(flipped)

    for t in range(max(trials, 200)):
        n = rng.randrange(1, rand_n + 1)
        ground = tuple(f"v{i}" for i in range(n))
        d = dm.random_set_system(rng, ground)
        if not d.is_proper:
            continue
        witness = _sets_witness(d)
        x_labels = [v for v in ground if rng.random() < 0.5]
        v = ground[rng.randrange(n)]
        w = ground[rng.randrange(n)]

        with rec.check("flip-involutions-and-commutation", witness):
            assert d.pivot(x_labels).pivot(x_labels) == d
            assert d.loop_complement(x_labels).loop_complement(x_labels) == d
            assert d.dual_pivot(x_labels).dual_pivot(x_labels) == d
            assert d.loop_complement(x_labels) == d.loop_complement_sequential(x_labels)
            assert d.dual_pivot(x_labels) == d.dual_pivot_sequential(x_labels)
            assert (
                d.dual_pivot(x_labels)
                == d.loop_complement(x_labels).pivot(x_labels).loop_complement(x_labels)
            )
            if v != w:
                assert d.tilde_minus(v).pivot([w]) == d.pivot([w]).tilde_minus(v)
                assert d.dual_pivot([v]).pivot([w]) == d.pivot([w]).dual_pivot([v])
                assert (
                    d.dual_pivot([v]).dual_pivot([w]) == d.dual_pivot([w]).dual_pivot([v])
                )

        with rec.check("pivot-distance-and-minmax-identities", witness):
            assert d.distance(x_labels) == d.pivot(x_labels).distance([])
            assert d.pivot(x_labels).is_normal == d.contains(x_labels)
            full = list(ground)
            assert d.min_sys() == d.pivot(full).max_sys().pivot(full)
            assert d.max_sys() == d.pivot(full).min_sys().pivot(full)
            assert d.max_sys().family == d.dual_pivot(x_labels).max_sys().family

        with rec.check("min-commutes-with-deletion", witness):
            if not d.is_coloop(v):
                assert d.min_sys().delete([v]) == d.delete([v]).min_sys()

        with rec.check("contract-commutes-with-max", witness):
            if not d.is_loop(v):
                left = d.max_sys().pivot([v]).delete([v])
                right = d.pivot([v]).delete([v]).max_sys()
                assert left == right

        with rec.check("max-after-pinning-general", witness):
            tilde = d.tilde_minus(v)
            if tilde.is_proper:
                left = tilde.loop_complement([v]).max_sys()
                right = d.pivot([v]).max_sys().tilde_contract(v)
                assert left.family == right.family

    for t in range(max(trials, 200)):
        n = rng.randrange(1, min(rand_n, 5) + 1)
        g = random_looped_simple_graph(rng, n)
        d = dm.from_graph(g)
        x_labels = [v for v in g.labels if rng.random() < 0.5]
        d = d.pivot(x_labels)
        v = g.labels[rng.randrange(n)]
        witness = _sets_witness(d, f"element {v}")

        with rec.check("pivots-preserve-exchange", witness):
            assert dm.is_delta_matroid(d)
            deleted = d.delete([v])
            assert dm.is_delta_matroid(deleted) == deleted.is_proper

        with rec.check("max-commutes-with-deletion-for-exchange-systems", witness):
            if not d.max_sys().is_coloop(v):
                assert d.max_sys().delete([v]) == d.delete([v]).max_sys()

        with rec.check("min-contract-commutes-for-exchange-systems", witness):
            if not d.min_sys().is_loop(v):
                assert d.min_sys().pivot([v]).delete([v]) == d.pivot([v]).delete([v]).min_sys()

        with rec.check("flip-reachable-iff-contains-empty", witness):
            ops = []
            for _ in range(rng.randrange(4)):
                kind = rng.choice(["pivot", "dual_pivot", "loop_complement"])
                ops.append((kind, g.labels[rng.randrange(n)]))
            moved = dm.vertex_flip_sequence(dm.from_graph(g), ops)
            if moved.is_normal:
                decoded = dm.to_graph(moved)
                assert dm.from_graph(decoded).family == moved.family

        with rec.check("matroid-bases-satisfy-exchange", witness):
            bases_sys = dm.SetSystem.from_sets(
                g.labels, adjacency_matroid(g).bases()
            )
            assert dm.is_delta_matroid(bases_sys)
            assert bases_sys.is_equicardinal
            dual_sys = bases_sys.pivot(list(g.labels))
            assert dual_sys.family == dm.SetSystem.from_sets(
                g.labels, adjacency_matroid(g).dual().bases()
            ).family


def delta_suite(max_n: int = 4, trials: int = 200, seed: int = 0) -> list[CheckResult]:
    rec = Recorder()
    rand_n = max_n + 2
    for g in _graph_stream(max_n, max(trials // 4, 25), min(rand_n, 6), seed):
        _delta_graph_checks(rec, g)
    _delta_general_checks(rec, trials, min(rand_n, 6), seed)
    return rec.report()


# ---------------------------------------------------------------------------
# fourreg suite: circuit partitions, interlacement, touch-graph duality and
# the realization construction.


def _fourreg_partition_checks(
    rec: Recorder, f: HalfEdgeGraph, c: EulerSystem, p: CircuitPartition, witness: str
) -> None:
    comp = f.component_count()
    with rec.check("circuit-nullity-formula", witness):
        rel = relative_interlacement(c, p)
        assert nullity(rel.adj) == p.size - comp

    with rec.check("touch-graph-shape", witness):
        tch = touch_graph(p)
        assert tch.n == p.size
        assert len(tch.edges) == f.n
        assert tch.component_count() == comp


def _fourreg_compatible_checks(
    rec: Recorder, f: HalfEdgeGraph, p: CircuitPartition, witness: str
) -> None:
    c = compatible_euler_system(f, p)
    rel = relative_interlacement(c, p)
    tch = touch_graph(p)
    poly = polygon_matroid(tch)
    with rec.check("compatible-system-covers-all-vertices", witness):
        assert sorted(rel.labels) == sorted(f.graph.labels)

    with rec.check("touch-polygon-orthogonality", witness):
        # align the polygon cycle space into rel's vertex order by labels
        position = [rel.index(v) for v in poly.ground]
        moved = poly.cycle_space.permuted(position)
        assert orthogonal_complement(nullspace(rel.adj)) == moved

    with rec.check("touch-polygon-duality", witness):
        assert adjacency_matroid(rel).dual() == poly

    with rec.check("rewire-matches-local-complement", witness):
        for v in range(f.n):
            label = f.graph.labels[v]
            kind = transition_type(c, p, v)
            cv = kappa(c, v)
            assert kappa(cv, v).transitions == c.transitions
            if kind == "chi":
                assert all(transition_type(cv, p, w) != "phi" for w in range(f.n))
                assert relative_interlacement(cv, p) == rel.local_complement(label)
            else:
                pairing = list(p.transitions.pairing)
                for pair in c.phi_pairing(v):
                    x, y = tuple(pair)
                    pairing[x] = y
                    pairing[y] = x
                p_prime = partition_from_transitions(f, TransitionSystem(tuple(pairing)))
                assert relative_interlacement(cv, p_prime) == rel.local_complement(label)
                ci, cj = p.circuits_through(v)
                pi, pj = p_prime.circuits_through(v)
                if ci == cj and pi == pj:
                    assert polygon_matroid(touch_graph(p_prime)) == poly
                elif ci != cj:
                    moved = polygon_matroid(touch_graph(p_prime)).dual()
                    expect = poly.dual().delete(label).direct_sum(single_coloop(label))
                    assert moved == expect

    with rec.check("rank-detects-shared-circuits", witness):
        for v in range(f.n):
            label = f.graph.labels[v]
            if label not in rel.labels:
                continue
            ci, cj = p.circuits_through(v)
            same_rank = rank(rel.adj) == rank(rel.minus(label).adj)
            assert (ci != cj) == same_rank

    with rec.check("independent-sets-drop-circuit-counts", witness):
        if f.n <= 4:
            base_rank = rank(rel.adj)
            for size in range(1, f.n + 1):
                for combo in itertools.combinations(range(f.n), size):
                    labels = [f.graph.labels[v] for v in combo]
                    cond1 = poly.rank_of(labels) == len(labels)
                    kept = [x for x in rel.labels if x not in set(labels)]
                    cond2 = rank(rel.induced(kept).adj) == base_rank
                    sizes_ok = True
                    pairing = list(p.transitions.pairing)
                    for i, v in enumerate(combo, start=1):
                        for pair in c.phi_pairing(v):
                            x, y = tuple(pair)
                            pairing[x] = y
                            pairing[y] = x
                        p_i = partition_from_transitions(f, TransitionSystem(tuple(pairing)))
                        if p_i.size != p.size - i:
                            sizes_ok = False
                            break
                    assert cond1 == cond2 == sizes_ok


def fourreg_suite(max_n: int = 5, trials: int = 60, seed: int = 0) -> list[CheckResult]:
    rec = Recorder()
    rng = random.Random(seed + 4)

    for mg in small_four_regular_corpus(max_n):
        f = HalfEdgeGraph(mg)
        c = euler_system(f)
        witness = graph_witness(mg)
        with rec.check("euler-system-covers-components", witness):
            assert c.partition.size == f.component_count()
            seen = sorted(h >> 1 for circ in c.circuits for h in circ)
            assert seen == list(range(f.edge_count))
            base = interlacement(c)
            assert not base.loop_labels()
        for t in all_transition_systems(f):
            p = partition_from_transitions(f, t)
            _fourreg_partition_checks(rec, f, c, p, graph_witness(mg, f"pairing {t.pairing}"))

    for i in range(max(trials, 20)):
        n = rng.randrange(1, 6) if i % 2 else rng.randrange(4, 9)
        mg = random_four_regular(rng, n, connected=bool(rng.randrange(2)))
        f = HalfEdgeGraph(mg)
        c = euler_system(f)
        pairs = []
        for v in range(f.n):
            a, b, cc, d = f.vertex_halves(v)
            choice = rng.choice([((a, b), (cc, d)), ((a, cc), (b, d)), ((a, d), (b, cc))])
            pairs += list(choice)
        t = TransitionSystem.from_pairs(f, pairs)
        p = partition_from_transitions(f, t)
        witness = graph_witness(mg, f"pairing {t.pairing}")
        _fourreg_partition_checks(rec, f, c, p, witness)
        _fourreg_compatible_checks(rec, f, p, witness)

    for mg in small_four_regular_corpus(min(max_n, 3)):
        f = HalfEdgeGraph(mg)
        for t in all_transition_systems(f):
            p = partition_from_transitions(f, t)
            _fourreg_compatible_checks(rec, f, p, graph_witness(mg, f"pairing {t.pairing}"))

    count = 0
    attempts = 0
    while count < max(trials, 50) and attempts < 10 * max(trials, 50):
        attempts += 1
        n = rng.randrange(1, 7)
        g = random_looped_simple_graph(rng, n)
        if any(g.adj.data[i] == 0 for i in range(g.n)):
            continue
        count += 1
        witness = graph_witness(g)
        with rec.check("realization-reproduces-touch-graph", witness):
            r = realize_touch_graph(g)
            tch = touch_graph(r.partition)
            assert graph_isomorphism(tch.simplify(), g) is not None
    return rec.report()


# ---------------------------------------------------------------------------
# poly suite: evaluator agreement and the leading-term recursions.


def _poly_graph_checks(rec: Recorder, g: LoopedSimpleGraph) -> None:
    witness = graph_witness(g)
    q = interlace_subset(g)
    with rec.check("interlace-evaluators-agree", witness):
        assert q == interlace_recursive(g)
        assert q == q_from_lambda(g)

    mg = adjacency_matroid(g)
    t = tutte_subset(mg)
    with rec.check("tutte-evaluators-agree", witness):
        assert t == tutte_recursive(mg)

    with rec.check("tutte-polynomial-swaps-under-duality", witness):
        assert t.swap_variables() == tutte_subset(mg.dual())

    with rec.check("leading-term-recursion", witness):
        for v in g.labels:
            lam = lambda_leading(mg)
            lam_del = lambda_leading(mg.delete(v))
            lam_con = lambda_leading(mg.contract(v))
            step = shifted_power_term(0, 1)
            if mg.is_loop(v):
                assert lam == step * lam_del == step * lam_con
            elif mg.is_coloop(v):
                assert lam == lam_del == lam_con
            else:
                assert lam == step * lam_del == lam_con

    with rec.check("leading-term-complement-rules", witness):
        step = shifted_power_term(0, 1)
        for v in g.labels:
            gv = g.local_complement(v)
            if not g.is_looped(v):
                assert lambda_leading(mg) == lambda_leading(adjacency_matroid(gv))
                if not g.neighbors(v):
                    assert lambda_leading(mg) == step * lambda_leading(
                        adjacency_matroid(g.minus(v))
                    )
            else:
                assert lambda_leading(mg) == lambda_leading(adjacency_matroid(gv.minus(v)))

    with rec.check("vertex-terms-make-the-difference", witness):
        for v in g.labels:
            assert q - interlace_subset(g.minus(v)) == interlace_vertex_terms(g, v)


def _poly_polygon_checks(rec: Recorder, trials: int, seed: int) -> None:
    rng = random.Random(seed + 5)
    for _ in range(max(trials // 4, 25)):
        mg = _random_multigraph(rng, rng.randrange(1, 5), rng.randrange(6))
        m = polygon_matroid(mg)
        with rec.check("tutte-evaluators-agree-on-polygon-matroids", graph_witness(mg)):
            assert tutte_subset(m) == tutte_recursive(m)


def poly_suite(max_n: int = 4, trials: int = 200, seed: int = 0) -> list[CheckResult]:
    rec = Recorder()
    rand_n = max_n + 4
    for g in _graph_stream(max_n, trials, min(rand_n, 8), seed):
        _poly_graph_checks(rec, g)
    _poly_polygon_checks(rec, trials, seed)
    return rec.report()


SUITES = {
    "matroid": matroid_suite,
    "delta": delta_suite,
    "fourreg": fourreg_suite,
    "poly": poly_suite,
}


def run_suites(
    suite: str, max_n: int | None = None, trials: int | None = None, seed: int = 0
) -> list[CheckResult]:
    names = SUITE_NAMES if suite == "all" else (suite,)
    results: list[CheckResult] = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        kwargs = {}
        if max_n is not None:
            kwargs["max_n"] = max_n
        if trials is not None:
            kwargs["trials"] = trials
        results.extend(SUITES[name](seed=seed, **kwargs))
    return results
