"""Integer arcs over the number line: admissibility, crossing and covering.

An arc is an ordered pair of integers ``t < u`` drawn as a semicircle over
the number line.  For a fixed parameter ``d`` an arc is *admissible* when
its length ``u - t`` is at least 2 and congruent to 1 mod d; admissible
arcs are the atoms everything else in this package is built from.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Arc:
    """An arc connecting the integers ``t < u``.

    Arcs are immutable value objects ordered lexicographically by
    ``(t, u)``, so sorted collections of arcs are canonical.
    """

    t: int
    u: int

    def __post_init__(self):
        if self.t >= self.u:
            raise ValueError(f"arc endpoints must satisfy t < u, got ({self.t}, {self.u})")

    @property
    def length(self) -> int:
        return self.u - self.t

    def shift(self, dt: int, du: int | None = None) -> Arc:
        """Translate the arc; with one argument both endpoints move together."""
        if du is None:
            du = dt
        return Arc(self.t + dt, self.u + du)

    def as_json(self) -> list[int]:
        return [self.t, self.u]

    def __str__(self) -> str:
        return f"({self.t},{self.u})"


def arc_from_json(data) -> Arc:
    if not (isinstance(data, (list, tuple)) and len(data) == 2
            and all(isinstance(v, int) and not isinstance(v, bool) for v in data)):
        raise ValueError(f"an arc must be a two-element integer array, got {data!r}")
    return Arc(data[0], data[1])


@dataclass(frozen=True)
class Context:
    """Global parameter ``d >= 1`` fixing which arc lengths are admissible."""

    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d}")


def is_admissible(ctx: Context, arc: Arc) -> bool:
    """Whether ``arc`` has length >= 2 and congruent to 1 mod d.

    >>> is_admissible(Context(3), Arc(0, 4))
    True
    >>> is_admissible(Context(2), Arc(0, 4))
    False
    >>> is_admissible(Context(1), Arc(0, 2))
    True
    """
    return arc.length >= 2 and arc.length % ctx.d == 1 % ctx.d


def crosses(a: Arc, b: Arc) -> bool:
    """Whether two arcs cross, i.e. their endpoints strictly interleave.

    Nesting and shared endpoints do not count as crossings.

    >>> crosses(Arc(0, 3), Arc(1, 4))
    True
    >>> crosses(Arc(0, 3), Arc(1, 2))
    False
    >>> crosses(Arc(0, 3), Arc(3, 6))
    False
    """
    return (a.t < b.t < a.u < b.u) or (b.t < a.t < b.u < a.u)


def is_overarc(cover: Arc, arc: Arc) -> bool:
    """Whether ``cover`` spans ``arc`` (shared endpoints allowed, equality not).

    >>> is_overarc(Arc(0, 5), Arc(1, 3))
    True
    >>> is_overarc(Arc(0, 5), Arc(0, 5))
    False
    >>> is_overarc(Arc(0, 5), Arc(0, 3))
    True
    """
    return cover != arc and cover.t <= arc.t < arc.u <= cover.u


def admissible_arcs_in_window(ctx: Context, lo: int, hi: int) -> list[Arc]:
    """All admissible arcs with both endpoints inside ``[lo, hi]``, sorted."""
    if lo > hi:
        raise ValueError(f"window bounds must satisfy lo <= hi, got [{lo}, {hi}]")
    out = []
    for v in range(lo, hi):
        # lengths >= 2 congruent to 1 mod d
        first = 2 if ctx.d == 1 else ctx.d + 1
        for w in range(v + first, hi + 1, ctx.d):
            out.append(Arc(v, w))
    return sorted(out)
