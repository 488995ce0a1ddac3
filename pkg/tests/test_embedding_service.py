"""Tests del encaje convexo de K_{s,t}."""

from itertools import combinations

import pytest

from thrackles.models.graph import Edge, EmbeddedBipartite
from thrackles.services.embedding_service import (
    all_edges,
    chords_interleave,
    circular_distance,
    crosses,
    meets,
    to_dot,
    weight,
)


def test_all_edges_k23(k23, edge):
    assert all_edges(k23) == [edge(1, 3), edge(1, 4), edge(1, 5), edge(2, 3), edge(2, 4), edge(2, 5)]


def test_all_edges_sizes():
    assert all_edges(EmbeddedBipartite.of(1, 1)) == [Edge.of(1, 2)]
    assert len(all_edges(EmbeddedBipartite.of(3, 3))) == 9


@pytest.mark.parametrize(
    "e1, e2, expected",
    [
        ((1, 3), (2, 4), True),
        ((1, 5), (2, 3), False),
        ((1, 4), (2, 3), False),
    ],
)
def test_crosses(e1, e2, expected):
    assert crosses(Edge.of(*e1), Edge.of(*e2)) is expected
    assert crosses(Edge.of(*e2), Edge.of(*e1)) is expected


def test_crosses_rejects_shared_vertex(edge):
    with pytest.raises(ValueError):
        crosses(edge(1, 3), edge(1, 5))


def test_meets(edge):
    assert meets(edge(1, 3), edge(1, 5))
    assert meets(edge(1, 3), edge(2, 5))
    assert not meets(edge(1, 5), edge(2, 4))
    assert meets(edge(2, 4), edge(2, 4))


def test_weights_of_k23(k23):
    weights = [weight(e, k23) for e in all_edges(k23)]
    assert weights == [0, 1, 2, 2, 1, 0]


def test_weight_rejects_foreign_edge(k23, edge):
    with pytest.raises(ValueError):
        weight(edge(1, 7), k23)


def test_weight_sum_counts_non_meeting_pairs_twice():
    g = EmbeddedBipartite.of(3, 4)
    edges = all_edges(g)
    non_meeting = sum(1 for a, b in combinations(edges, 2) if not meets(a, b))
    assert sum(weight(e, g) for e in edges) == 2 * non_meeting


def test_circular_distance(k23, edge):
    assert circular_distance(edge(1, 3), k23) == 2
    assert circular_distance(edge(1, 5), k23) == 1
    assert circular_distance(edge(2, 3), k23) == 1


UP_TO_6 = [(s, t) for s in range(1, 7) for t in range(1, 7)]


@pytest.mark.parametrize("s, t", UP_TO_6)
def test_interleave_oracle_agrees_with_crosses(s, t):
    g = EmbeddedBipartite.of(s, t)
    for a, b in combinations(all_edges(g), 2):
        if a.left == b.left or a.right == b.right:
            continue
        assert chords_interleave(a, b) == crosses(a, b), (a, b)


@pytest.mark.parametrize("s, t", UP_TO_6)
def test_weight_is_invariant_under_rotation(s, t):
    g = EmbeddedBipartite.of(s, t)
    for e in all_edges(g):
        rotated = Edge.of(s + 1 - e.left, 2 * s + t + 1 - e.right)
        assert weight(e, g) == weight(rotated, g), e


@pytest.mark.parametrize("s, t", UP_TO_6)
def test_exactly_one_matching_crosses(s, t):
    for i, j in combinations(range(1, s + 1), 2):
        for k, l in combinations(range(s + 1, s + t + 1), 2):
            assert crosses(Edge.of(i, k), Edge.of(j, l))
            assert not crosses(Edge.of(i, l), Edge.of(j, k))


def test_to_dot_marks_highlight(k23, edge):
    dot = to_dot(k23, highlight=[edge(1, 3), edge(2, 5)], name="H")
    assert dot.startswith("graph H {")
    assert '1 [pos="0,1!"];' in dot
    assert '3 [pos="1,3!"];' in dot
    assert '5 [pos="1,1!"];' in dot
    assert "1 -- 3 [style=solid];" in dot
    assert "1 -- 4 [style=dashed];" in dot
    assert dot.count("--") == 6
