import pytest
from hypothesis import given
from hypothesis import strategies as st

from dichromatic.digraph import Digraph, induced, strong_components
from dichromatic.errors import InvalidArgument, SizeLimitExceeded
from dichromatic.generators import bioriented_complete, directed_cycle, transitive_tournament
from dichromatic.oracle import (
    LIMIT_ENV,
    Coloring,
    chi_limit,
    count_induced,
    dichromatic_number,
    is_valid_acyclic_coloring,
    monochromatic_classes_with_cycle,
)
from dichromatic.patterns import C3, DIGON, S2_PLUS

from conftest import C3 as C3_GRAPH
from conftest import TT3, chi_by_enumeration, digraphs


def test_validity_examples():
    assert not is_valid_acyclic_coloring(C3_GRAPH, {0: 1, 1: 1, 2: 1})
    assert is_valid_acyclic_coloring(C3_GRAPH, {0: 1, 1: 1, 2: 2})
    assert is_valid_acyclic_coloring(Digraph(), {})
    assert monochromatic_classes_with_cycle(C3_GRAPH, Coloring.constant(range(3))) == [1]


def test_partial_coloring_rejected():
    with pytest.raises(InvalidArgument):
        is_valid_acyclic_coloring(C3_GRAPH, {0: 1, 1: 2})
    with pytest.raises(InvalidArgument):
        is_valid_acyclic_coloring(C3_GRAPH, {0: 1, 1: 2, 2: 1, 7: 1})


def test_coloring_type():
    c = Coloring({0: 1, 1: 2}, 2)
    assert c.items() == [(0, 1), (1, 2)]
    assert c.classes() == {1: {0}, 2: {1}}
    assert c.permuted({1: 2, 2: 1}).assignment == {0: 2, 1: 1}
    assert c.shifted(2, 4).assignment == {0: 3, 1: 4}
    assert c.restricted([1]).assignment == {1: 2}
    with pytest.raises(InvalidArgument):
        Coloring({0: 3}, 2)
    with pytest.raises(InvalidArgument):
        Coloring({0: 0}, 2)


@pytest.mark.parametrize("k", [1, 2, 5, 14])
def test_chi_of_transitive_tournaments(k):
    assert dichromatic_number(transitive_tournament(k)).chi == 1


def test_chi_examples():
    assert dichromatic_number(bioriented_complete(3)).chi == 3
    assert dichromatic_number(C3_GRAPH).chi == 2
    assert dichromatic_number(Digraph()).chi == 0
    assert dichromatic_number(directed_cycle(4)).chi == 2


def test_chi_of_paley_tournament_on_seven_vertices():
    # quadratic residues mod 7 decide the arc direction; TT4-free and 3-chromatic
    qr = {1, 2, 4}
    D = Digraph(range(7), [(i, j) for i in range(7) for j in range(7) if (j - i) % 7 in qr])
    assert count_induced(D, Digraph(range(4), [(a, b) for a in range(4) for b in range(a + 1, 4)])) == 0
    assert dichromatic_number(D).chi == 3


def test_size_limit(monkeypatch):
    with pytest.raises(SizeLimitExceeded):
        dichromatic_number(directed_cycle(6), limit=5)
    monkeypatch.setenv(LIMIT_ENV, "4")
    assert chi_limit() == 4
    with pytest.raises(SizeLimitExceeded):
        dichromatic_number(directed_cycle(5))
    monkeypatch.delenv(LIMIT_ENV)
    assert chi_limit() == 14


@given(digraphs(max_n=6))
def test_chi_matches_enumeration(D):
    res = dichromatic_number(D)
    assert res.chi == chi_by_enumeration(D)
    assert is_valid_acyclic_coloring(D, res.witness)
    assert len(res.witness.colors_used()) == res.chi


@given(digraphs(min_n=1, max_n=8), st.data())
def test_chi_monotone_under_induced(D, data):
    X = data.draw(st.lists(st.sampled_from(D.vertices), min_size=1, unique=True))
    assert dichromatic_number(induced(D, X)).chi <= dichromatic_number(D).chi


@given(digraphs(min_n=1, max_n=10))
def test_chi_is_max_over_strong_components(D):
    per = [dichromatic_number(induced(D, K)).chi for K in strong_components(D)]
    assert dichromatic_number(D).chi == max(per)


def test_count_induced_examples():
    assert count_induced(C3_GRAPH, C3) == 3
    assert count_induced(TT3, DIGON) == 0
    assert count_induced(Digraph(range(3), [(0, 1), (0, 2)]), S2_PLUS) == 2
