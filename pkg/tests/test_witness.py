import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from foldcube.autgroup import AffineAut, LinearAut, SPermutation, extend_s_permutation
from foldcube.oracle import graph_adjacency, pointwise_kernel, stabilizer
from foldcube.topology import CayleyGraph, edge_list, folded_hypercube, hypercube, neighbors
from foldcube.witness import (
    ArcWitness,
    NotAnEdge,
    arc_witness,
    edge_witness,
    rigidity_propagate,
    verify_aut,
    vertex_witness,
)
from foldcube.z2core import Z2Vector

V = Z2Vector.parse


def arcs(g):
    return [(a, b) for a, b in edge_list(g)] + [(b, a) for a, b in edge_list(g)]


def test_vertex_witness():
    assert vertex_witness(V("0101"), V("0101")).is_identity()
    w = vertex_witness(V("0000"), V("1111"))
    assert w.translation == V("1111") and w.linear.is_identity()
    w = vertex_witness(V("1010"), V("0110"))
    assert w.translation == V("1100")
    assert w(V("1010")) == V("0110")


def test_arc_witness_example():
    w = arc_witness(V("0000"), V("1000"), V("0110"), V("0111"))
    swap14 = LinearAut(tuple(V(c) for c in ("0001", "0100", "0010", "1000")))
    assert w.aut == AffineAut(V("0110"), swap14)
    assert w.aut(V("0000")) == V("0110") and w.aut(V("1000")) == V("0111")
    assert w.verified


def test_arc_witness_same_arc_is_identity():
    w = arc_witness(V("0110"), V("0111"), V("0110"), V("0111"))
    assert w.aut.is_identity()


def test_arc_witness_u_edge_to_e1_edge():
    w = arc_witness(V("0000"), V("1111"), V("0000"), V("1000"))
    assert w.aut == extend_s_permutation(SPermutation.transposition(5, 0, 4))
    assert w.aut.linear(V("1111")) == V("1000")


def test_arc_witness_rejects_non_edge():
    with pytest.raises(NotAnEdge, match="not an edge: 0000,1100"):
        arc_witness(V("0000"), V("1100"), V("0000"), V("1000"))
    with pytest.raises(NotAnEdge):
        arc_witness(V("0000"), V("1000"), V("0000"), V("1111"), graph=hypercube(4))


def test_all_arc_pairs_fq4():
    g = folded_hypercube(4)
    a = arcs(g)
    assert len(a) == 80
    for (u1, v1), (u2, v2) in itertools.product(a, repeat=2):
        w = arc_witness(u1, v1, u2, v2)
        assert w.verified and w.aut(u1) == u2 and w.aut(v1) == v2


@pytest.mark.parametrize("n", [2, 3])
def test_all_arc_pairs_small(n):
    g = folded_hypercube(n)
    for (u1, v1), (u2, v2) in itertools.product(arcs(g), repeat=2):
        assert arc_witness(u1, v1, u2, v2, g).verified


def test_hypercube_arcs():
    g = hypercube(4)
    for (u1, v1), (u2, v2) in itertools.product(arcs(g), repeat=2):
        w = arc_witness(u1, v1, u2, v2, g)
        assert w.aut.linear.is_m_member(g.generators)


@given(st.integers(2, 30), st.randoms(use_true_random=False))
def test_random_arcs(n, rnd):
    gens = folded_hypercube(n).generators.elements
    u1 = Z2Vector(n, rnd.getrandbits(n))
    u2 = Z2Vector(n, rnd.getrandbits(n))
    v1, v2 = u1 + rnd.choice(gens), u2 + rnd.choice(gens)
    w = arc_witness(u1, v1, u2, v2)
    assert w.aut(u1) == u2 and w.aut(v1) == v2
    assert verify_aut(folded_hypercube(n), w.aut, random.Random(1), samples=64)


def test_edge_witness_all_pairs_fq4():
    edges = edge_list(folded_hypercube(4))
    assert len(edges) == 40
    for e1, e2 in itertools.product(edges, repeat=2):
        g = edge_witness(e1, e2)
        assert {g(e1[0]), g(e1[1])} == set(e2)
    assert edge_witness(edges[0], edges[0]).is_identity()


def test_edge_witness_hypercube_edge_to_complementary_edge():
    g = edge_witness((V("0000"), V("1000")), (V("0000"), V("1111")))
    assert {g(V("0000")), g(V("1000"))} == {V("0000"), V("1111")}


def test_verify_aut_rejects_non_automorphism():
    bad = AffineAut(V("0000"), LinearAut(tuple(V(c) for c in ("1100", "0100", "0010", "0001"))))
    assert not verify_aut(folded_hypercube(4), bad)


def test_witness_report_format():
    w = arc_witness(V("0000"), V("1000"), V("0110"), V("0111"))
    assert w.format() == (
        "from=0000,1000 to=0110,0111\n"
        "v=0110 phi=0001,0100,0010,1000\n"
        "verified=true\n"
    )
    assert isinstance(w, ArcWitness)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_stabilizer_transitive_on_neighbors(n):
    """Witnesses between arcs out of 0 fix 0 and reach every neighbor."""
    g = folded_hypercube(n)
    zero = Z2Vector.zero(n)
    nb = neighbors(g, zero)
    for a, b in itertools.product(nb, repeat=2):
        w = arc_witness(zero, a, zero, b)
        assert w.aut.translation == zero


@pytest.mark.parametrize("n", [3, 4])
def test_restriction_bound(brute, n):
    """|G_v| <= |L_v| (n+1)!, with L_v trivial for n = 4."""
    auts = brute(n, True)
    adj = graph_adjacency(folded_hypercube(n))
    for v in range(1 << n):
        gv = stabilizer(auts, v)
        lv = pointwise_kernel(auts, v, adj)
        assert len(gv) <= len(lv) * math.factorial(n + 1)
        if n == 4:
            assert len(lv) == 1
    # FQ_3 = K_4,4: fixing a vertex and its 4 neighbors leaves the other side free
    if n == 3:
        assert len(pointwise_kernel(auts, 0, adj)) == 6


@pytest.mark.parametrize("n,rounds", [(4, 2), (5, 3), (6, 3)])
def test_rigidity_succeeds(n, rounds):
    rep = rigidity_propagate(n, Z2Vector.zero(n))
    assert rep.all_determined
    assert rep.determined == 1 << n
    assert len(rep.rounds) == rounds
    assert rep.rounds[0] == [Z2Vector.zero(n)] + neighbors(folded_hypercube(n), Z2Vector.zero(n))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_rigidity_reasons_are_unique_cycles(n):
    g = folded_hypercube(n)
    rep = rigidity_propagate(n, Z2Vector.zero(n))
    seen = set(rep.rounds[0])
    for rnd in rep.rounds[1:]:
        for x in rnd:
            t, mid, u = rep.reasons[x]
            assert {t, mid, u} <= seen
            assert g.adjacent(t, mid) and g.adjacent(mid, u)
            assert x == t + mid + u
        seen.update(rnd)


def test_rigidity_other_base_vertex():
    rep = rigidity_propagate(5, V("10110"))
    assert rep.all_determined


def test_rigidity_fq3_inconclusive():
    rep = rigidity_propagate(3, Z2Vector.zero(3))
    assert not rep.all_determined
    assert rep.determined == 5
    assert set(rep.blocked) == {3}
    assert "inconclusive" in rep.summary()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_rigidity_hypercube(n):
    assert rigidity_propagate(n, folded=False).all_determined


def test_rigidity_fq2_trivial():
    rep = rigidity_propagate(2)
    assert rep.all_determined and len(rep.rounds) == 1
