from fractions import Fraction

from almostdirect.linalg import Eliminator, span_rank, spans_equal


def test_span_rank_basic():
    rows = [{"a": 1, "b": 2}, {"b": 1}, {"a": 1, "b": 3}]
    # third row = first + second
    assert span_rank(rows) == 2
    assert span_rank([]) == 0
    assert span_rank([{}]) == 0


def test_span_rank_with_fractions():
    rows = [
        {"a": Fraction(1, 2), "b": Fraction(1, 3)},
        {"a": Fraction(3, 2), "b": Fraction(1, 1)},
    ]
    assert span_rank(rows) == 1


def test_eliminator_add_reports_independence():
    el = Eliminator()
    assert el.add({"a": 1, "b": 1})
    assert el.add({"b": 1})
    assert not el.add({"a": 2, "b": 5})


def test_reduces_to_zero():
    el = Eliminator()
    el.add({"a": 1, "b": -1})
    el.add({"b": 1, "c": 1})
    assert el.reduces_to_zero({"a": 2, "c": 2})
    assert not el.reduces_to_zero({"a": 1})
    assert el.reduces_to_zero({})


def test_cancellation_inside_reduction():
    # reducing the third row against the first cancels its "b" entry;
    # the remaining "c" entry must survive as a new pivot
    el = Eliminator()
    assert el.add({"b": 1, "c": 1})
    assert el.add({"a": 1, "b": 1})
    assert el.add({"a": 1, "c": 3})
    assert span_rank([{"b": 1, "c": 1}, {"a": 1, "b": 1}, {"a": 1, "c": 3}]) == 3


def test_spans_equal():
    rows1 = [{"a": 1, "b": 1}, {"a": 1, "b": -1}]
    rows2 = [{"a": 1}, {"b": 7}]
    assert spans_equal(rows1, rows2)
    assert not spans_equal(rows1, [{"a": 1}])
    assert not spans_equal([{"a": 1}], [{"b": 1}])
    assert spans_equal([], [{}])


def test_rank_matches_dense_elimination():
    # fixed 4x5 integer matrix of rank 3 (row3 = row0 + 2*row1 - row2)
    dense = [
        [1, 0, 2, -1, 3],
        [0, 1, 1, 1, 0],
        [2, -1, 0, 0, 1],
        [-1, 3, 4, 1, 2],
    ]
    rows = [
        {j: v for j, v in enumerate(r) if v} for r in dense
    ]
    assert span_rank(rows) == 3
