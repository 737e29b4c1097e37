import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from hadwigerlab.graphcore import (
    Graph,
    GraphError,
    GraphFormatError,
    add_edge,
    automorphism_orbits,
    canonical_form,
    canonical_labeling,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    is_isomorphic,
    parse_graph6,
    path_graph,
    read_graph6_lines,
    relabel,
    split_vertex,
    subdivide_edge,
    to_dot,
    to_graph6,
    wheel_graph,
)


def test_graph6_examples():
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6("Dhc") == cycle_graph(5)
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(cycle_graph(5)) == "Dhc"


def test_c5_hand_encoding():
    # column-major upper triangle of the 5-cycle: 1 01 001 1001, padded to 12 bits
    bits = "1010011001" + "00"
    chars = "".join(chr(int(bits[i:i + 6], 2) + 63) for i in (0, 6))
    assert chr(5 + 63) + chars == "Dhc"


def test_graph6_agrees_with_networkx():
    rng = random.Random(3)
    for n in [0, 1, 2, 7, 30, 63, 64]:
        g = random_graph(rng, n, 0.3)
        ng = nx.Graph()
        ng.add_nodes_from(range(n))
        ng.add_edges_from(g.edges())
        ours = to_graph6(g)
        assert ours == nx.to_graph6_bytes(ng, header=False).decode().strip()
        assert parse_graph6(ours) == g


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("text,offset", [
    ("", 0),
    ("C", 1),          # truncated payload
    ("C~~", 2),        # trailing byte
    ("C\x7f", 1),      # byte out of range
    ("Bz", 1),         # nonzero padding bits
    ("~", 1),          # truncated long header
])
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph6(text)
    assert exc.value.offset == offset


def test_graph6_header_prefix_and_corpus_lines():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)
    got = list(read_graph6_lines(["# corpus", "", "Bw", "Dhc"]))
    assert got == [complete_graph(3), cycle_graph(5)]


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(65, [])
    assert not Graph(2, (2, 0)).is_valid()


def test_edge_listing_sorted():
    g = wheel_graph(4)
    assert g.edges() == sorted(g.edges())
    assert all(u < v for u, v in g.edges())
    assert g.m == 8 and g.n == 5


def test_contract_examples():
    assert contract_edge(complete_graph(3), (0, 1)) == complete_graph(2)
    assert is_isomorphic(contract_edge(cycle_graph(6), (2, 3)), cycle_graph(5))
    w5 = wheel_graph(5)
    assert is_isomorphic(contract_edge(w5, (0, 1)), wheel_graph(4))
    with pytest.raises(GraphError):
        contract_edge(cycle_graph(5), (0, 2))


def test_contract_labeling_rule():
    # merged vertex takes the smaller slot; later labels shift down
    g = path_graph(4)  # 0-1-2-3
    h = contract_edge(g, (1, 2))
    assert h.n == 3 and h.edges() == [(0, 1), (1, 2)]
    k = contract_edge(Graph.from_edges(4, [(0, 3), (1, 3), (2, 3), (0, 1)]), (0, 3))
    assert k.edges() == [(0, 1), (0, 2)]


def test_delete_examples():
    assert delete_edge(complete_graph(3), (0, 1)).edges() == [(0, 2), (1, 2)]
    assert delete_vertex(complete_graph(4), 2) == complete_graph(3)
    assert is_isomorphic(delete_vertex(cycle_graph(5), 0), path_graph(4))
    with pytest.raises(GraphError):
        delete_edge(path_graph(3), (0, 2))
    with pytest.raises(GraphError):
        delete_vertex(path_graph(3), 3)


def test_split_vertex_examples():
    w4 = wheel_graph(4)
    h = split_vertex(w4, 4, [0, 1], [2, 3])
    assert h.n == 6 and h.m == 8
    assert h.degree(4) == 2 and h.degree(5) == 2 and not h.has_edge(4, 5)
    k5 = complete_graph(5)
    s22 = split_vertex(k5, 4, [0, 1], [2, 3])
    assert (s22.n, s22.m, sorted(s22.degrees())) == (6, 10, [2, 2, 4, 4, 4, 4])
    s13 = split_vertex(k5, 4, [0], [1, 2, 3])
    assert sorted(s13.degrees()) == [1, 3, 4, 4, 4, 4]


@pytest.mark.parametrize("p1,p2", [([0], [1]), ([0, 1], [1, 2, 3]), ([], [0, 1, 2, 3]), ([0, 1], [2, 5])])
def test_split_vertex_rejects_bad_parts(p1, p2):
    with pytest.raises(GraphError):
        split_vertex(wheel_graph(4), 4, p1, p2)


def test_subdivide_examples():
    assert is_isomorphic(subdivide_edge(complete_graph(3), (0, 1)), cycle_graph(4))
    assert is_isomorphic(subdivide_edge(cycle_graph(4), (0, 1)), cycle_graph(5))
    h = subdivide_edge(wheel_graph(5), (0, 5))
    assert (h.n, h.m) == (7, 11)
    assert h.degree(5) == 5 and h.has_edge(5, 6) and not h.has_edge(0, 5)
    with pytest.raises(GraphError):
        subdivide_edge(cycle_graph(4), (0, 2))


def test_isomorphism_examples():
    c5 = cycle_graph(5)
    assert is_isomorphic(c5, relabel(c5, [3, 0, 4, 1, 2]))
    assert is_isomorphic(complete_graph(4), wheel_graph(3))
    assert not is_isomorphic(wheel_graph(5), complete_graph(4))


def test_canonical_invariance_random():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.random())
        form = canonical_form(g)
        for _ in range(10):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == form


def test_canonical_labeling_maps_to_form():
    rng = random.Random(5)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 12), 0.4)
        perm, form = canonical_labeling(g)
        assert relabel(g, perm) == form.graph()


def test_canonical_separates_against_networkx():
    atlas = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 6]
    forms = {}
    for ng in atlas:
        g = Graph.from_edges(ng.number_of_nodes(), list(ng.edges()))
        forms.setdefault(canonical_form(g), []).append(ng)
    # the atlas lists each isomorphism class exactly once
    assert len(forms) == len(atlas)


def test_canonical_on_regular_and_larger_graphs():
    # strongly regular-ish inputs stress the individualisation search
    petersen = nx.petersen_graph()
    g = Graph.from_edges(10, list(petersen.edges()))
    rng = random.Random(2)
    for _ in range(20):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)
    cube = nx.hypercube_graph(4)
    idx = {v: i for i, v in enumerate(sorted(cube))}
    q4 = Graph.from_edges(16, [(idx[u], idx[v]) for u, v in cube.edges()])
    perm = list(range(16))
    rng.shuffle(perm)
    assert is_isomorphic(q4, relabel(q4, perm))
    twisted = add_edge(delete_edge(q4, q4.edges()[0]), (0, 15))
    assert not is_isomorphic(q4, twisted)


def test_automorphism_orbits():
    assert len(set(automorphism_orbits(cycle_graph(7)))) == 1
    orbits = automorphism_orbits(wheel_graph(5))
    assert orbits[5] == 5 and len(set(orbits)) == 2
    assert len(set(automorphism_orbits(path_graph(4)))) == 2


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_split_then_join_recovers(g):
    for v in range(g.n):
        nbrs = sorted(g.neighbors(v))
        if len(nbrs) < 2:
            continue
        h = split_vertex(g, v, nbrs[:1], nbrs[1:])
        assert h.n == g.n + 1
        joined = contract_edge(add_edge(h, (v, h.n - 1)), (v, h.n - 1))
        assert is_isomorphic(joined, g)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_edit_arithmetic_and_simplicity(g):
    for e in g.edges():
        c = contract_edge(g, e)
        assert c.n == g.n - 1 and c.is_valid()
        d = delete_edge(g, e)
        assert d.m == g.m - 1 and d.is_valid()


def test_dot_export():
    text = to_dot(cycle_graph(3), "tri")
    assert text.startswith("graph tri {")
    for u, v in [(0, 1), (0, 2), (1, 2)]:
        assert f"{u} -- {v};" in text
