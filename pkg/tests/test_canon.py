import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmic.canon import (
    GroupTooLarge,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_relabel,
    compose,
    find_isomorphism,
    inverse,
    is_automorphism,
    is_invariant_edge_set,
)
from mmic.graph import HEXAGON, complete_bipartite, complete_graph, cycle_graph, from_edge_list, moebius_ladder, zoo

from .conftest import multigraphs, permutations_of, simple_graphs
from .oracles import brute_automorphisms


@given(multigraphs(max_n=7), st.data())
def test_canonical_form_is_label_invariant(g, data):
    p = data.draw(permutations_of(g.n))
    h = g.relabel(p)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_relabel(g) == canonical_relabel(h)


@given(multigraphs(max_n=7), st.data())
def test_find_isomorphism_maps_onto(g, data):
    h = g.relabel(data.draw(permutations_of(g.n)))
    p = find_isomorphism(g, h)
    assert p is not None and g.relabel(p) == h


@given(simple_graphs(max_n=6), simple_graphs(max_n=6))
def test_isomorphism_agrees_with_brute_force(g, h):
    expected = g.n == h.n and any(g.relabel(p) == h for p in brute_automorphisms(complete_graph(g.n)))
    assert are_isomorphic(g, h) == expected


@given(multigraphs(max_n=6))
def test_group_matches_brute_force(g):
    group = automorphism_group(g)
    brute = brute_automorphisms(g)
    assert group.order == len(brute)
    assert set(group.elements()) == brute


@pytest.mark.parametrize(
    "g,order",
    [
        (complete_graph(6), 720),
        (complete_bipartite(3, 3), 72),
        (cycle_graph(7), 14),
        (moebius_ladder(4), 16),
        (zoo("GAMMA7"), 2),
        (zoo("GAMMA8"), 4),
        (zoo("FIG6D"), 4),
        (complete_graph(9), math.factorial(9)),
    ],
)
def test_known_orders(g, order):
    assert automorphism_group(g).order == order


def test_group_cap():
    with pytest.raises(GroupTooLarge):
        automorphism_group(complete_graph(8), max_order=1000)


def test_moebius_three_is_k33():
    assert are_isomorphic(moebius_ladder(3), zoo("K33"))
    assert not are_isomorphic(moebius_ladder(4), cycle_graph(8))


def test_multiplicity_distinguishes():
    a = from_edge_list(3, [(0, 1), (0, 1), (1, 2)])
    b = from_edge_list(3, [(0, 1), (1, 2), (1, 2)])
    c = from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    assert are_isomorphic(a, b)
    assert not are_isomorphic(a, c)
    assert canonical_form(a).count(b"|") == 1


def test_involutions_sorted_and_valid():
    group = automorphism_group(zoo("K33"))
    invs = group.involutions()
    assert invs[0] == tuple(range(6))
    moved = [sum(p[v] != v for v in range(6)) for p in invs]
    assert moved == sorted(moved)
    assert all(compose(p, p) == tuple(range(6)) and is_automorphism(group.graph, p) for p in invs)
    assert len(invs) == 1 + sum(1 for p in brute_automorphisms(zoo("K33")) if compose(p, p) == tuple(range(6)) and p != tuple(range(6)))


def test_gamma7_hexagon_invariant():
    g = zoo("GAMMA7")
    idx = g.labels.index
    hexagon = [(idx(a), idx(b)) for a, b in HEXAGON]
    group = automorphism_group(g)
    assert is_invariant_edge_set(group, hexagon)
    assert not is_invariant_edge_set(group, [(idx("v"), idx("a2"))]) or group.order == 1
    with pytest.raises(ValueError):
        is_invariant_edge_set(group, [(idx("v"), idx("a3"))])


def test_orbits_of_k33():
    group = automorphism_group(zoo("K33"))
    assert len(group.vertex_orbits()) == 1
    assert len(group.pair_orbits(group.graph.pairs)) == 1


@given(st.data())
def test_inverse_and_compose(data):
    n = data.draw(st.integers(1, 8))
    p = data.draw(permutations_of(n))
    q = data.draw(permutations_of(n))
    assert compose(p, inverse(p)) == tuple(range(n))
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))
