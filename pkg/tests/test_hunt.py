import json

import pytest

from hadwigerlab.colorcrit import is_k_critical
from hadwigerlab.families import g3, higher_wheel_candidate, split_spoke_wheel, wheel
from hadwigerlab.graphcore import (
    Graph,
    canonical_form,
    complete_graph,
    contract_edge,
    cycle_graph,
    is_isomorphic,
    parse_graph6,
    to_graph6,
)
from hadwigerlab.hunt import (
    CSV_FIELDS,
    corner_cut_scan,
    critical_graphs,
    enumerate_connected,
    expand_by_uncontraction,
    find_k_critical,
    identify_higher_wheels,
    question1_scan,
    revalidate,
)
from hadwigerlab.oracles import connected_classes_by_labeling, labeled_class_count, labeled_connected_counts


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_enumeration_matches_labeled_oracle(n, count):
    got = list(enumerate_connected(n))
    assert len(got) == count
    assert {canonical_form(g) for g in got} == connected_classes_by_labeling(n)
    assert all(g.is_connected() and g.n == n for g in got)


def test_enumeration_n7_by_orbit_counting():
    got = list(enumerate_connected(7))
    assert len(got) == 853
    assert labeled_class_count(got) == labeled_connected_counts(7)[7]


def test_enumeration_is_deterministic_and_canonical():
    a = [to_graph6(g) for g in enumerate_connected(6)]
    assert a == [to_graph6(g) for g in enumerate_connected(6)]
    assert a == sorted(a)
    for g in enumerate_connected(5):
        assert canonical_form(g).graph() == g


def test_enumeration_range():
    for n in (0, 11):
        with pytest.raises(ValueError):
            next(enumerate_connected(n))


def test_parallel_level_matches_serial():
    serial = critical_graphs(8, 4)
    parallel = critical_graphs(8, 4, jobs=2)
    assert serial == parallel


def test_critical_examples():
    r = find_k_critical(4, 4)
    assert r.classes == {"n=4": ["C~"]}
    six = critical_graphs(6, 4)
    assert six[4] == [complete_graph(4)]
    assert any(is_isomorphic(g, wheel(5)) for g in six[6])
    assert 5 not in six


def test_critical_counts_against_brute_force():
    for n in range(2, 8):
        expected = [g for g in enumerate_connected(n) if is_k_critical(g, 4).critical] if n >= 4 else []
        assert [to_graph6(g) for g in critical_graphs(7, 4).get(n, [])] == [to_graph6(g) for g in expected]


def test_three_critical_are_odd_cycles():
    found = critical_graphs(10, 3)
    assert sorted(found) == [3, 5, 7, 9]
    for n, gs in found.items():
        assert len(gs) == 1 and is_isomorphic(gs[0], cycle_graph(n))


def test_critical_min_degree_on_scan_outputs():
    for n, gs in critical_graphs(8, 4).items():
        assert all(g.min_degree() >= 3 for g in gs)


def test_question1_small():
    r = question1_scan(4)
    assert r.classes == {"i": ["C~"], "ii": [], "iii": []}
    assert r.notes["tags"]["C~"] == "odd wheel W3"


def test_question1_seven():
    r = question1_scan(7)
    w5 = to_graph6(canonical_form(wheel(5)).graph())
    assert w5 in r.classes["i"] and r.notes["tags"][w5] == "odd wheel W5"
    g3s = to_graph6(canonical_form(g3()).graph())
    assert g3s in r.classes["iii"] and r.notes["violating_pattern"][g3s] == "K5-"
    assert revalidate(r) == []
    assert r.counts == {k: len(v) for k, v in r.classes.items()}


def test_question1_tags_split_spoke():
    moser = to_graph6(canonical_form(split_spoke_wheel(3, "hajos_spoke")).graph())
    r = question1_scan(7)
    assert r.notes["tags"][moser].startswith("split-spoke wheel W3")


def test_report_serialisation_and_determinism():
    a = question1_scan(7)
    b = question1_scan(7)
    da, db = a.to_dict(), b.to_dict()
    da.pop("wall_ms"), db.pop("wall_ms")
    assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)
    d = json.loads(a.to_json())
    assert set(d) >= {"scan", "params", "counts", "classes", "engine_version", "wall_ms"}
    lines = a.to_csv().splitlines()
    assert lines[0] == ",".join(CSV_FIELDS)
    assert len(lines) == 1 + sum(a.counts.values())


def test_corner_scan_q3():
    r = corner_cut_scan(3, 1)
    assert len(r.classes["cut=1"]) == 1
    g = parse_graph6(r.classes["cut=1"][0])
    assert is_isomorphic(g, higher_wheel_candidate(3))
    assert r.notes["chi"][r.classes["cut=1"][0]] == 4
    assert revalidate(r) == []


def test_corner_scan_q4_two_cuts():
    r = corner_cut_scan(4, 2)
    assert len(r.classes["cut=2"]) == 4  # pairs at Hamming distance 1..4
    assert all(r.notes["chi"][s] <= 4 for s in r.classes["cut=2"])
    assert not r.notes["any_5_critical"]
    assert "d = 4" in r.notes["verified_range"]


def test_corner_scan_range():
    with pytest.raises(ValueError):
        corner_cut_scan(5, 1)
    with pytest.raises(ValueError):
        corner_cut_scan(4, 4)


def _contract_preimages_bruteforce(target, n):
    goal = canonical_form(target)
    out = set()
    for g in enumerate_connected(n):
        if any(canonical_form(contract_edge(g, e)) == goal for e in g.edges()):
            out.add(canonical_form(g))
    return out


@pytest.mark.parametrize("target", [complete_graph(3), cycle_graph(4), wheel(3)])
def test_expand_matches_bruteforce(target):
    got = expand_by_uncontraction(target)
    assert {canonical_form(g) for g in got} == _contract_preimages_bruteforce(target, target.n + 1)


def test_expand_k3_contents():
    got = expand_by_uncontraction(complete_graph(3))
    names = {to_graph6(canonical_form(g).graph()) for g in got}
    for h in (cycle_graph(4), complete_graph(4)):
        assert to_graph6(canonical_form(h).graph()) in names
    paw = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert any(is_isomorphic(paw, g) for g in got)


def test_expand_defining_property():
    for g in expand_by_uncontraction(g3()):
        assert g.n == 8
        assert any(is_isomorphic(contract_edge(g, e), g3()) for e in g.edges())


def test_identify_g5():
    found = identify_higher_wheels(5, lower=g3())
    assert found
    assert all(g.n == 9 for g in found)
    from hadwigerlab.families import verify_higher_wheel
    from hadwigerlab.minorlab import K, has_minor
    for g in found:
        assert verify_higher_wheel(g, 5, lower=g3()).passed
        assert has_minor(g, K(5).graph) is None
