"""Tests de matroides por bases y conteo de thrackles maximales por cono tangente."""

import json
from math import comb

import pytest

from thrackles.models.graph import Edge
from thrackles.models.matroid import MatroidBases
from thrackles.services import matroid_service as ms
from thrackles.utils import SizeGuardError

FOUR_CYCLE = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
PARALLEL_PAIR = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]


def test_uniform_bases():
    assert len(ms.uniform_bases(2, 4).bases) == 6
    assert ms.uniform_bases(1, 3).bases == ((1,), (2,), (3,))
    assert ms.validate_bases(ms.uniform_bases(3, 6))
    with pytest.raises(ValueError):
        ms.uniform_bases(4, 3)


def test_validate_bases():
    assert not ms.validate_bases(MatroidBases(n=4, r=2, bases=[[1, 2], [3, 4]]))
    assert ms.validate_bases(MatroidBases(n=4, r=3, bases=FOUR_CYCLE))
    assert ms.validate_bases(MatroidBases(n=4, r=2, bases=PARALLEL_PAIR))


def test_model_structure_checks():
    with pytest.raises(ValueError):
        MatroidBases(n=4, r=2, bases=[[1, 2, 3]])
    with pytest.raises(ValueError):
        MatroidBases(n=3, r=2, bases=[[1, 5]])
    with pytest.raises(ValueError):
        MatroidBases(n=3, r=2, bases=[])


def test_bases_are_not_truncated():
    assert MatroidBases(n=3, r=2, bases=[[3, 1], [1, 3], [2, 1]]).bases == ((1, 2), (1, 3))
    with pytest.raises(ValueError):
        MatroidBases(n=3, r=2, bases=[[1.5, 2]])
    with pytest.raises(ValueError):
        ms.load_matroid('{"n": 3, "r": 2, "bases": [[1.5, 2], [1, 3], [2, 3]]}')


def test_make_and_load_matroid():
    m = ms.make_matroid(4, 3, FOUR_CYCLE)
    assert m.has_basis((3, 1, 2))
    loaded = ms.load_matroid(json.dumps({"n": 4, "r": 3, "bases": FOUR_CYCLE}))
    assert loaded == m
    with pytest.raises(ValueError):
        ms.make_matroid(4, 2, [[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        ms.load_matroid('{"n": 4, "r": 2, "bases": [[1, 2], [3, 4]]}')


def test_incidence_vectors():
    m = ms.uniform_bases(2, 5)
    vectors = {ms.incidence_vector(b, 5) for b in m.bases}
    assert len(vectors) == len(m.bases)
    assert all(sum(v.coords) == 2 for v in vectors)
    with pytest.raises(ValueError):
        ms.incidence_vector([1, 6], 5)


def test_adjacent_bases():
    m = ms.uniform_bases(2, 4)
    assert ms.adjacent_bases([1, 2], m) == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert ms.adjacent_bases([1, 2, 3], ms.uniform_bases(3, 3)) == []
    cycle = ms.make_matroid(4, 3, FOUR_CYCLE)
    assert ms.adjacent_bases([1, 2, 3], cycle) == [(1, 2, 4), (1, 3, 4), (2, 3, 4)]
    with pytest.raises(ValueError):
        ms.adjacent_bases([3, 4], ms.make_matroid(4, 2, PARALLEL_PAIR))


def test_adjacency_is_symmetric():
    m = ms.make_matroid(4, 2, PARALLEL_PAIR)
    for b1 in m.bases:
        for b2 in ms.adjacent_bases(b1, m):
            assert b1 in ms.adjacent_bases(b2, m)


def test_tangent_subgraph_uniform_is_complete():
    m = ms.uniform_bases(2, 5)
    for b in m.bases:
        assert ms.tangent_subgraph(b, m).is_complete


def test_tangent_subgraph_four_cycle():
    m = ms.make_matroid(4, 3, FOUR_CYCLE)
    sub = ms.tangent_subgraph([1, 2, 3], m)
    assert sub.edges == (Edge.of(1, 4), Edge.of(2, 4), Edge.of(3, 4))


def test_tangent_subgraph_parallel_pair():
    m = ms.make_matroid(4, 2, PARALLEL_PAIR)
    sub = ms.tangent_subgraph([1, 3], m)
    assert sub.left_labels == {1: 1, 3: 2}
    assert sub.right_labels == {2: 3, 4: 4}
    assert [e.key for e in sub.edges] == [(1, 3), (2, 3), (2, 4)]
    assert not sub.is_complete


def test_tangent_subgraph_rejects_bad_relabeling():
    m = ms.uniform_bases(2, 4)
    with pytest.raises(ValueError):
        ms.tangent_subgraph([1, 2], m, left_order=[1, 3])


@pytest.mark.parametrize("r, n, expected", [(2, 5, 3), (3, 6, 6), (2, 4, 2), (1, 4, 1)])
def test_uniform_tangent_cone_counts(r, n, expected):
    m = ms.uniform_bases(r, n)
    for report in ms.matroid_reports(m, threads=2):
        assert report.count == expected == comb(n - 2, r - 1)
        assert report.equal_cardinality
        assert report.sizes == (n - 1,) * expected
        assert report.within_bound


def test_four_cycle_count_is_one_everywhere():
    m = ms.make_matroid(4, 3, FOUR_CYCLE)
    reports = ms.matroid_reports(m)
    assert len(reports) == 4
    assert all(r.count == 1 and r.sizes == (3,) for r in reports)


def test_parallel_pair_report():
    m = ms.make_matroid(4, 2, PARALLEL_PAIR)
    (report,) = ms.matroid_reports(m, basis=[1, 3])
    assert report.count == 1
    assert report.edges == ((1, 3), (2, 3), (2, 4))
    assert report.relabeling == {1: 1, 3: 2, 2: 3, 4: 4}
    assert report.uniform_bound == 2
    assert report.within_bound
    assert report.note == ""


def test_relabeling_spread():
    m = ms.make_matroid(4, 2, PARALLEL_PAIR)
    assert ms.relabeling_spread([1, 3], m) == (1, 2)
    assert ms.relabeling_spread([1, 2], ms.uniform_bases(2, 5)) == (3, 3)


def test_relabeling_guard():
    m = ms.uniform_bases(3, 9)
    with pytest.raises(SizeGuardError):
        ms.relabeling_spread([1, 2, 3], m)


def test_rank_equals_ground_set():
    m = ms.uniform_bases(3, 3)
    (report,) = ms.matroid_reports(m)
    assert report.edges == ()
    assert report.count == 1
