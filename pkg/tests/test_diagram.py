import json

import pytest

from infgon import (
    Arc,
    ArcDiagram,
    Context,
    DiagramError,
    FountainTail,
    NoTail,
    PeriodicTail,
    WindowTooSmallError,
    admissible_arcs_in_window,
    canonical_fountain,
    crosses,
    diagram_loads,
    ext_profile,
    theorem_b_diagram,
    zigzag,
)
from infgon.diagram import NEG_INF, POS_INF, dumps_canonical


def presets_under_test():
    return [
        canonical_fountain(1),
        canonical_fountain(2),
        canonical_fountain(3, anchor=4),
        zigzag(1),
        zigzag(2),
        zigzag(3),
        theorem_b_diagram(2, 1),
        theorem_b_diagram(3, 2),
        theorem_b_diagram(4, 0),
    ]


# -- windows and reach --------------------------------------------------------

def test_fountain_window_realization():
    f = canonical_fountain(2)
    got = f.arcs_in_window(0, 7)
    assert got.truncated is True
    assert list(got.arcs) == [Arc(-7, 0), Arc(-5, 0), Arc(-3, 0), Arc(0, 3), Arc(0, 5), Arc(0, 7)]


def test_empty_diagram_window():
    empty = ArcDiagram(Context(2))
    got = empty.arcs_in_window(-10, 10)
    assert got.arcs == () and got.truncated is False


def test_zigzag_window_realization():
    z = zigzag(1)
    got = z.arcs_in_window(0, 2)
    assert got.truncated is False
    assert list(got.arcs) == [Arc(-1, 2), Arc(0, 2)]


def test_arcs_within_is_exact():
    f = canonical_fountain(2)
    assert f.arcs_within(0, 7) == [Arc(0, 3), Arc(0, 5), Arc(0, 7)]
    assert f.arcs_within(-5, 5) == [Arc(-5, 0), Arc(-3, 0), Arc(0, 3), Arc(0, 5)]


def test_reach_examples():
    f = canonical_fountain(2)
    assert f.reach(0).leftmost == NEG_INF and f.reach(0).rightmost == POS_INF
    t1 = theorem_b_diagram(2, 1)
    r = t1.reach(0)
    assert r.leftmost == NEG_INF and r.rightmost == 3
    assert t1.reach(17).leftmost == 17 and t1.reach(17).rightmost == 17


def test_reach_exclude():
    t1 = theorem_b_diagram(2, 1)
    r = t1.reach(0, exclude=Arc(0, 3))
    assert r.leftmost == NEG_INF and r.rightmost == -3


def test_contains_across_specs():
    f = canonical_fountain(2)
    assert f.contains(Arc(0, 41))
    assert not f.contains(Arc(0, 4))
    assert not f.contains(Arc(1, 4))
    z = zigzag(2)
    assert z.contains(Arc(-8, 11))
    assert not z.contains(Arc(-8, 9))


# -- classification -----------------------------------------------------------

def test_classify_examples():
    assert canonical_fountain(2).classify().kind == "fountain"
    assert canonical_fountain(2, anchor=5).classify().left_anchor == 5
    assert zigzag(2).classify().kind == "locally_finite"
    cls = theorem_b_diagram(2, 1).classify()
    assert (cls.kind, cls.left_anchor, cls.right_anchor) == ("two_fountains", 0, 4)


def test_classify_single_sided():
    one_sided = ArcDiagram(Context(2), left_tail=FountainTail(0, "left", 3, 2))
    assert one_sided.classify().kind == "left_fountain"
    report = one_sided.validate(*one_sided.suggested_window())
    assert report.left_approximating is False
    assert report.right_approximating is True


# -- validation ---------------------------------------------------------------

def test_validate_fountain():
    report = canonical_fountain(2).validate(-15, 15)
    assert report.noncrossing and report.maximal_on_window
    assert report.weakly_cluster_tilting and report.cluster_tilting


@pytest.mark.parametrize("ell", [0, 1])
def test_validate_theorem_b(ell):
    tb = theorem_b_diagram(2, ell)
    report = tb.validate(*tb.suggested_window())
    assert report.weakly_cluster_tilting is True
    assert report.cluster_tilting is False
    assert report.right_approximating is False and report.left_approximating is False


def test_validate_zigzag_with_hole():
    z = zigzag(2).materialize(Arc(0, 3))
    holed = ArcDiagram(z.ctx, tuple(a for a in z.core if a != Arc(0, 3)), z.left_tail, z.right_tail)
    report = holed.validate(*holed.suggested_window())
    assert report.maximal_on_window is False
    assert Arc(0, 3) in report.addable_arcs
    assert report.weakly_cluster_tilting is False


def test_validate_crossing_witness():
    bad = ArcDiagram(Context(2), core=(Arc(0, 3), Arc(1, 4)))
    report = bad.validate(-10, 10)
    assert report.noncrossing is False
    assert (Arc(0, 3), Arc(1, 4)) in report.crossing_pairs
    assert report.weakly_cluster_tilting is False


def test_window_too_small_names_minimum():
    f = canonical_fountain(2)
    with pytest.raises(WindowTooSmallError) as err:
        f.validate(-3, 3)
    assert err.value.min_lo == -7 and err.value.min_hi == 7
    f.validate(-7, 7)  # the named minimum is accepted


@pytest.mark.parametrize("diagram", presets_under_test())
def test_window_growth_stability(diagram):
    lo, hi = diagram.suggested_window()
    step = max(diagram.ctx.d, 1) * 2
    base = diagram.validate(lo, hi)
    for k in range(1, 4):
        report = diagram.validate(lo - k * step, hi + k * step)
        assert report.noncrossing == base.noncrossing
        assert report.maximal_on_window == base.maximal_on_window
        assert report.weakly_cluster_tilting == base.weakly_cluster_tilting
        assert report.cluster_tilting == base.cluster_tilting
        assert report.classification == base.classification


@pytest.mark.parametrize("diagram", presets_under_test())
def test_regions_agree_with_maximality(diagram):
    lo, hi = diagram.suggested_window()
    report = diagram.validate(lo, hi)
    d = diagram.ctx.d
    region_sizes = [len(verts) for _, verts in diagram.bounded_regions(lo, hi)]
    assert report.maximal_on_window is True
    assert region_sizes and all(size == d + 2 for size in region_sizes)


def test_regions_detect_missing_arc():
    z = zigzag(2).materialize(Arc(0, 3))
    holed = ArcDiagram(z.ctx, tuple(a for a in z.core if a != Arc(0, 3)), z.left_tail, z.right_tail)
    sizes = [len(verts) for _, verts in holed.bounded_regions(*holed.suggested_window())]
    assert any(size != 4 for size in sizes)


@pytest.mark.parametrize("diagram", [canonical_fountain(2), zigzag(2), theorem_b_diagram(2, 1)])
def test_addability_matches_crossing_and_ext(diagram):
    """A window candidate is reach-addable iff it crosses no realized arc,
    iff every realized arc has an empty ext profile against it."""
    ctx = diagram.ctx
    lo, hi = diagram.suggested_window()
    margin = 2 * ctx.d + 4
    realized = diagram.arcs_in_window(lo - margin, hi + margin, horizon=margin).arcs
    for cand in admissible_arcs_in_window(ctx, lo, hi):
        if diagram.contains(cand):
            continue
        blocked = False
        for s in range(cand.t + 1, cand.u):
            r = diagram.reach(s)
            if r.leftmost < cand.t or r.rightmost > cand.u:
                blocked = True
                break
        crossing_free = not any(crosses(cand, x) for x in realized)
        ext_free = all(ext_profile(ctx, x, cand) == () for x in realized)
        assert crossing_free == (not blocked), cand
        assert ext_free == crossing_free, cand


# -- construction-time checks -------------------------------------------------

def test_ingestion_rejects_inadmissible_core():
    with pytest.raises(DiagramError):
        ArcDiagram(Context(2), core=(Arc(0, 4),))


def test_ingestion_rejects_crossing_tail_translates():
    with pytest.raises(DiagramError):
        ArcDiagram(Context(1), right_tail=PeriodicTail((Arc(0, 3),), 1, "right"))


def test_ingestion_rejects_wrong_side():
    with pytest.raises(DiagramError):
        ArcDiagram(Context(2), left_tail=FountainTail(0, "right", 3, 2))
    with pytest.raises(DiagramError):
        ArcDiagram(Context(2), right_tail=PeriodicTail((Arc(0, 3),), 2, "left"))


def test_ingestion_rejects_bad_fountain_parameters():
    with pytest.raises(DiagramError):
        ArcDiagram(Context(2), right_tail=FountainTail(0, "right", 4, 2))  # bad first length
    with pytest.raises(DiagramError):
        ArcDiagram(Context(2), right_tail=FountainTail(0, "right", 3, 3))  # step not multiple of d
    with pytest.raises(DiagramError):
        ArcDiagram(Context(2), right_tail=FountainTail(0, "right", 3, 2, (Arc(0, 3),)))  # filler outside band


def test_ingestion_rejects_duplicate_core_and_tail():
    with pytest.raises(DiagramError):
        ArcDiagram(Context(2), core=(Arc(0, 5),), right_tail=FountainTail(0, "right", 3, 2))


def test_filler_motif_accepted():
    # bands of width 2d hold one short filler arc each
    tail = FountainTail(0, "right", 3, 4, (Arc(3, 6),))
    diagram = ArcDiagram(Context(2), right_tail=tail)
    assert diagram.contains(Arc(7, 10))
    assert diagram.reach(7).leftmost == 0 - 7 + 7  # partner 10 only: sentinel-free
    assert diagram.incident(7) == [Arc(7, 10)]


# -- serialization ------------------------------------------------------------

@pytest.mark.parametrize("diagram", presets_under_test())
def test_json_round_trip_bytes(diagram):
    text = diagram.dumps()
    again = diagram_loads(text)
    assert again == diagram
    assert again.dumps() == text


def test_json_shape():
    payload = json.loads(theorem_b_diagram(2, 1).dumps())
    assert payload["d"] == 2
    assert payload["core"] == [[0, 3]]
    assert payload["left_tail"]["kind"] == "fountain"
    assert payload["right_tail"]["anchor"] == 4


def test_loads_rejects_malformed():
    with pytest.raises(DiagramError):
        diagram_loads("{not json")
    with pytest.raises(DiagramError):
        diagram_loads(dumps_canonical({"d": 2, "core": [[0, 3, 4]]}))
    with pytest.raises(DiagramError):
        diagram_loads(dumps_canonical({"d": 2, "core": [], "left_tail": {"kind": "spiral"}}))
    with pytest.raises(DiagramError):
        diagram_loads(dumps_canonical({"d": 0, "core": []}))


def test_materialize_preserves_arc_set():
    f = canonical_fountain(2)
    m = f.materialize(Arc(0, 7))
    assert Arc(0, 7) in m.core
    assert {Arc(0, 3), Arc(0, 5)} <= set(m.core)
    for arc in (Arc(0, 9), Arc(0, 11), Arc(-3, 0), Arc(0, 3)):
        assert m.contains(arc) == f.contains(arc)
    lo, hi = m.suggested_window()
    assert m.validate(lo, hi).cluster_tilting is True
