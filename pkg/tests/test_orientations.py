import pytest
from hypothesis import given, settings, strategies as st

from colorlab.coloring import chromatic_number
from colorlab.density import degeneracy, mad
from colorlab.errors import DomainError, GuardError
from colorlab.graph import (
    Graph,
    Orientation,
    complete,
    complete_bipartite,
    construct_gn,
    cycle,
    orient_gn,
    path,
)
from colorlab.orientations import (
    ParityCounts,
    almost_eulerian_bruteforce,
    almost_eulerian_counts,
    alon_tarsi_bruteforce,
    alon_tarsi_number,
    at_upper_witness,
    certify_at,
    eulerian_parity,
    eulerian_parity_bruteforce,
    orientation_with_bounded_outdegree,
    orientations_with_cap,
    verify_sum_of_squares,
)

from test_graph import graphs


@st.composite
def orientations(draw, max_n=7):
    g = draw(graphs(max_n=max_n))
    bits = draw(st.integers(0, (1 << g.num_edges) - 1)) if g.num_edges else 0
    return Orientation.from_bits(g, bits)


def directed_cycle(n):
    return Orientation(cycle(n), tuple((a, b) if (a, b) != (0, n - 1) else (n - 1, 0) for a, b in cycle(n).edges()))


def test_acyclic_orientation_has_one_even_subdigraph():
    for g in (complete(5), construct_gn(8).graph, complete_bipartite(3, 4)):
        assert eulerian_parity(Orientation.by_vertex_order(g)).as_tuple() == (1, 0, 1)


def test_directed_triangle():
    assert eulerian_parity(directed_cycle(3)).as_tuple() == (1, 1, 0)
    assert eulerian_parity(directed_cycle(4)).as_tuple() == (2, 0, 2)


def test_g6_parity_against_subset_oracle():
    d = orient_gn(construct_gn(6))
    assert eulerian_parity_bruteforce(d).as_tuple() == (7, 4, 3)
    assert eulerian_parity(d).as_tuple() == (7, 4, 3)


@settings(max_examples=300, deadline=None)
@given(orientations())
def test_parity_matches_subset_enumeration(d):
    assert eulerian_parity(d) == eulerian_parity_bruteforce(d)


def test_parity_guards():
    g = complete(12)  # 66 edges
    d = Orientation.by_vertex_order(g)
    with pytest.raises(GuardError):
        eulerian_parity(d)
    with pytest.raises(GuardError):
        eulerian_parity_bruteforce(Orientation.by_vertex_order(complete(8)))


def test_almost_eulerian_g4():
    d = orient_gn(construct_gn(4))
    prof = almost_eulerian_counts(d, 0, 1)
    assert [c.as_tuple() for c in prof.counts] == [(1, 0, 1), (1, 0, 1)]


def test_almost_eulerian_g6():
    d = orient_gn(construct_gn(6))
    expected = [(1, 0, 1), (2, 1, 1), (1, 0, 1)]
    assert [c.as_tuple() for c in almost_eulerian_counts(d, 0, 1).counts] == expected
    assert [c.as_tuple() for c in almost_eulerian_bruteforce(d, 0, 1)] == expected
    assert [c.as_tuple() for c in almost_eulerian_counts(d, 1, 0).counts] == expected


@pytest.mark.parametrize("n", [4, 6, 8])
def test_almost_eulerian_matches_oracle_on_gn(n):
    d = orient_gn(construct_gn(n))
    for s, t in ((0, 1), (1, 0)):
        assert list(almost_eulerian_counts(d, s, t).counts) == almost_eulerian_bruteforce(d, s, t)


@settings(max_examples=150, deadline=None)
@given(orientations(max_n=6), st.data())
def test_almost_eulerian_matches_oracle(d, data):
    if d.graph.n < 2:
        return
    s, t = data.draw(st.permutations(range(d.graph.n)))[:2]
    prof = almost_eulerian_counts(d, s, t)
    assert list(prof.counts) == almost_eulerian_bruteforce(d, s, t)


def test_almost_eulerian_rejects_equal_endpoints():
    with pytest.raises(DomainError):
        almost_eulerian_counts(directed_cycle(3), 1, 1)


@pytest.mark.parametrize("n, expected", [(4, 2), (6, 3), (8, 4), (10, 5)])
def test_sum_of_squares(n, expected):
    rep = verify_sum_of_squares(construct_gn(n))
    assert rep.direct.difference == rep.sum_of_squares == expected
    e = [c.even for c in rep.forward.counts]
    o = [c.odd for c in rep.forward.counts]
    assert rep.direct.even == sum(a * a + b * b for a, b in zip(e, o))
    assert rep.direct.odd == sum(2 * a * b for a, b in zip(e, o))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_sum_of_squares_direct_side_by_subset_oracle(n):
    d = orient_gn(construct_gn(n))
    assert eulerian_parity_bruteforce(d).difference == verify_sum_of_squares(construct_gn(n)).sum_of_squares


@pytest.mark.parametrize(
    "g, expected",
    [(cycle(4), 2), (complete(3), 3), (construct_gn(6).graph, 3), (cycle(5), 3), (complete(4), 4), (path(4), 2), (Graph.empty(3), 1)],
)
def test_alon_tarsi_examples(g, expected):
    k, d = alon_tarsi_number(g)
    assert k == expected
    assert at_upper_witness(g, k, d)


def test_alon_tarsi_guard():
    with pytest.raises(GuardError):
        alon_tarsi_number(construct_gn(8).graph)


def test_alon_tarsi_matches_bruteforce(connected_upto5):
    for g in connected_upto5:
        if g.num_edges <= 8:
            assert alon_tarsi_number(g)[0] == alon_tarsi_bruteforce(g)[0], g


def test_at_upper_witness_examples():
    gn = construct_gn(8)
    assert at_upper_witness(gn.graph, 4, orient_gn(gn))
    assert at_upper_witness(cycle(4), 2, directed_cycle(4))
    assert not at_upper_witness(complete(3), 2, directed_cycle(3))
    with pytest.raises(DomainError):
        at_upper_witness(cycle(5), 2, directed_cycle(4))


def test_bounded_outdegree_examples():
    d = orientation_with_bounded_outdegree(cycle(4), 1)
    assert d is not None and d.max_outdegree() == 1
    assert orientation_with_bounded_outdegree(complete(3), 0) is None
    d = orientation_with_bounded_outdegree(construct_gn(6).graph, 2)
    assert d is not None and d.max_outdegree() <= 2


def test_bounded_outdegree_exists_iff_mad_condition(graphs_upto7):
    for g in graphs_upto7:
        half = mad(g) / 2
        for k in range(0, 4):
            d = orientation_with_bounded_outdegree(g, k)
            assert (d is not None) == (k >= half), (g, k)
            if d is not None:
                assert d.max_outdegree() <= k


def test_max_outdegree_examples():
    assert orient_gn(construct_gn(6)).max_outdegree() == 2
    assert directed_cycle(4).max_outdegree() == 1
    assert Orientation.by_vertex_order(complete(4)).max_outdegree() == 3


def test_every_orientation_reaches_half_mad(graphs_upto7):
    for g in graphs_upto7:
        if g.num_edges > 10:
            continue
        half = mad(g) / 2
        assert all(Orientation.from_bits(g, b).max_outdegree() >= half for b in range(1 << g.num_edges))


def test_at_bounds_on_small_graphs(connected_upto5):
    for g in connected_upto5:
        at = alon_tarsi_number(g)[0]
        chi = chromatic_number(g)[0]
        assert at > mad(g) / 2
        assert g.clique_number() <= chi <= at <= degeneracy(g) + 1


@settings(max_examples=100, deadline=None)
@given(orientations(max_n=6), st.data())
def test_source_or_sink_vertex_can_be_dropped(d, data):
    g = d.graph
    outs, ins = d.outdegrees(), d.indegrees()
    cands = [v for v in range(g.n) if outs[v] == 0 or ins[v] == 0]
    if not cands:
        return
    v = data.draw(st.sampled_from(cands))
    kept = [(a, b) for a, b in d.arcs if v not in (a, b)]
    rest = Graph.from_edges(g.n, kept)
    assert eulerian_parity(d) == eulerian_parity(Orientation.from_arcs(rest, kept))


def test_orientation_enumeration_order_and_cap():
    g = cycle(4)
    all_d = list(orientations_with_cap(g, 2))
    assert len(all_d) == 16
    assert all_d[0].arcs == tuple(g.edges())
    capped = list(orientations_with_cap(g, 1))
    assert len(capped) == 2 and all(d.max_outdegree() == 1 for d in capped)
    assert list(orientations_with_cap(g, -1)) == []


def test_certify_at_outside_guard():
    for n in (8, 10):
        c = certify_at(construct_gn(n).graph)
        assert c.lower == n // 2
        assert c.lower <= c.upper <= n // 2 + 1
        assert at_upper_witness(construct_gn(n).graph, c.upper, c.witness)


def test_parity_counts_addition():
    assert ParityCounts(3, 1) + ParityCounts(1, 2) == ParityCounts(4, 3)
    assert ParityCounts(4, 3).difference == 1
