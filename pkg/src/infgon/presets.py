"""Generators for the named diagram families used throughout the tests."""
from __future__ import annotations

from .arcs import Arc, Context
from .diagram import LEFT, RIGHT, ArcDiagram, FountainTail, PeriodicTail


def canonical_fountain(d: int, anchor: int = 0) -> ArcDiagram:
    """A diagram whose every arc ends at ``anchor``, on both sides.

    The pencils have lengths d+1, 2d+1, 3d+1, ... so the band between two
    consecutive arcs is a cell on consecutive integers; no filler is needed.
    Validates as cluster tilting.
    """
    ctx = Context(d)
    return ArcDiagram(
        ctx,
        core=(),
        left_tail=FountainTail(anchor, LEFT, d + 1, d),
        right_tail=FountainTail(anchor, RIGHT, d + 1, d),
    )


def zigzag(d: int) -> ArcDiagram:
    """A locally finite diagram: nested arcs widening by d on alternate sides.

    Arc 0 is (0, d+1); each following arc extends the previous one by d,
    first on the left, then on the right.  The family is generated by two
    skew-periodic motifs, one per side.
    """
    ctx = Context(d)
    return ArcDiagram(
        ctx,
        core=(),
        left_tail=PeriodicTail(motif=(Arc(-d, d + 1),), period=d, direction=LEFT, skew=True),
        right_tail=PeriodicTail(motif=(Arc(0, d + 1),), period=d, direction=RIGHT, skew=True),
    )


def theorem_b_diagram(d: int, ell: int) -> ArcDiagram:
    """Two one-sided fountains around a single short arc.

    Arcs end at 0 from the left, start at ``d + 1 + ell`` on the right, and
    the core holds (0, d+1).  Weakly cluster tilting but never cluster
    tilting; the replacement count at (0, d+1) is exactly ``ell``.
    """
    if not 0 <= ell <= d - 1:
        raise ValueError(f"ell must satisfy 0 <= ell <= d-1, got ell={ell}, d={d}")
    ctx = Context(d)
    return ArcDiagram(
        ctx,
        core=(Arc(0, d + 1),),
        left_tail=FountainTail(0, LEFT, d + 1, d),
        right_tail=FountainTail(d + 1 + ell, RIGHT, d + 1, d),
    )
