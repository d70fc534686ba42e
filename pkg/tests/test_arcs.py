import itertools

import pytest
from hypothesis import given, strategies as st

from infgon import Arc, Context, admissible_arcs_in_window, crosses, is_admissible, is_overarc
from oracles import brute_admissible


def test_malformed_arc_rejected():
    with pytest.raises(ValueError):
        Arc(3, 3)
    with pytest.raises(ValueError):
        Arc(4, 1)


def test_is_admissible_examples():
    assert is_admissible(Context(3), Arc(0, 4)) is True
    assert is_admissible(Context(2), Arc(0, 4)) is False
    assert is_admissible(Context(1), Arc(0, 2)) is True


def test_crosses_examples():
    assert crosses(Arc(0, 3), Arc(1, 4)) is True
    assert crosses(Arc(0, 3), Arc(1, 2)) is False
    assert crosses(Arc(0, 3), Arc(3, 6)) is False


def test_is_overarc_examples():
    assert is_overarc(Arc(0, 5), Arc(1, 3)) is True
    assert is_overarc(Arc(0, 5), Arc(0, 5)) is False
    assert is_overarc(Arc(0, 5), Arc(0, 3)) is True


def test_window_enumeration_examples():
    assert admissible_arcs_in_window(Context(2), 0, 3) == [Arc(0, 3)]
    # frozen from the pair-scan oracle
    assert admissible_arcs_in_window(Context(2), 0, 5) == [Arc(0, 3), Arc(0, 5), Arc(1, 4), Arc(2, 5)]
    assert admissible_arcs_in_window(Context(1), 0, 3) == [Arc(0, 2), Arc(0, 3), Arc(1, 3)]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_window_enumeration_matches_pair_scan(d):
    assert admissible_arcs_in_window(Context(d), -6, 6) == brute_admissible(d, -6, 6)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_crossing_symmetric_irreflexive(d):
    arcs = admissible_arcs_in_window(Context(d), -10, 10)
    for a in arcs:
        assert not crosses(a, a)
    for a, b in itertools.combinations(arcs, 2):
        assert crosses(a, b) == crosses(b, a)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_distinct_arcs_are_disjoint_nested_or_crossing(d):
    arcs = admissible_arcs_in_window(Context(d), -6, 6)
    for a, b in itertools.combinations(arcs, 2):
        disjoint = a.u <= b.t or b.u <= a.t
        nested = is_overarc(a, b) or is_overarc(b, a)
        assert disjoint + nested + crosses(a, b) == 1


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_admissible_length_at_least_d_plus_one(d):
    for arc in admissible_arcs_in_window(Context(d), -12, 12):
        assert arc.length >= d + 1


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_crossing_symmetry_property(a, b, c, e):
    if a >= b or c >= e:
        return
    x, y = Arc(a, b), Arc(c, e)
    assert crosses(x, y) == crosses(y, x)
    if crosses(x, y):
        assert not (is_overarc(x, y) or is_overarc(y, x))
