"""Finitely presented infinite arc diagrams and their validation.

A diagram is a finite core of arcs plus two tail specifications describing
how the picture continues towards -infinity and +infinity.  Tails are
either absent, periodic (a motif repeated by a fixed translation, or by an
expanding skew shift for the nested families local finiteness forces), or a
fountain pencil (infinitely many arcs sharing one endpoint, lengths in
arithmetic progression, with an optional filler motif tiling the bands in
between).  Every query an exact validator needs — arcs meeting a window,
arcs inside a range, arcs at a point, membership — is answered in closed
form from the specification, so verdicts never depend on sampling depth.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .arcs import Arc, Context, arc_from_json, admissible_arcs_in_window, crosses, is_admissible

LEFT = "left"
RIGHT = "right"

NEG_INF = float("-inf")
POS_INF = float("inf")


class DiagramError(Exception):
    """Malformed diagram input or specification."""


class WindowTooSmallError(DiagramError):
    """The requested verification window does not cover the diagram core."""

    def __init__(self, min_lo: int, min_hi: int):
        self.min_lo = min_lo
        self.min_hi = min_hi
        super().__init__(f"window too small: need at least [{min_lo}, {min_hi}]")


@dataclass(frozen=True)
class NoTail:
    """Nothing beyond the core on this side."""

    kind = "none"

    def validate(self, ctx, side):
        pass

    def incident(self, s):
        return []

    def left_infinite_at(self, s):
        return False

    def right_infinite_at(self, s):
        return False

    def arcs_with_endpoint_in(self, lo, hi, horizon):
        return [], False

    def arcs_within(self, lo, hi):
        return []

    def contains(self, arc):
        return False

    def covering(self, arc):
        return []

    def min_window(self):
        return None

    def max_step(self):
        return 0

    def split_for(self, arc):
        raise DiagramError(f"{arc} is not generated by this tail")

    def as_json_dict(self):
        return {"kind": "none"}


def _instance_index(value: int, base: int, step: int) -> int | None:
    """Smallest k >= 0 with base + k*step == value, or None."""
    if step == 0:
        return 0 if value == base else None
    k, r = divmod(value - base, step)
    return k if r == 0 and k >= 0 else None


def _translation_cover_range(m: Arc, arc: Arc, step: int) -> tuple[int, int]:
    """k-range (kmin, kmax) where m shifted by k*step spans ``arc``, k >= 0."""
    if step > 0:
        kmax = (arc.t - m.t) // step
        kmin = -((m.u - arc.u) // step)
    else:
        sigma = -step
        kmax = (m.u - arc.u) // sigma
        kmin = -((arc.t - m.t) // sigma)
    return max(kmin, 0), kmax


@dataclass(frozen=True)
class PeriodicTail:
    """A motif repeated forever, starting from repetition 0.

    With ``skew=False`` repetition k translates the motif by ``k * period``
    away from the core (sign given by ``direction``).  With ``skew=True``
    repetition k moves left endpoints down and right endpoints up by
    ``k * period`` each, producing the nested expanding families that
    locally finite maximal diagrams are made of.
    """

    motif: tuple[Arc, ...]
    period: int
    direction: str
    skew: bool = False

    def __post_init__(self):
        object.__setattr__(self, "motif", tuple(sorted(self.motif)))

    def _steps(self) -> tuple[int, int]:
        if self.skew:
            return (-self.period, self.period)
        d = -self.period if self.direction == LEFT else self.period
        return (d, d)

    def instance(self, arc: Arc, k: int) -> Arc:
        dt, du = self._steps()
        return Arc(arc.t + k * dt, arc.u + k * du)

    def validate(self, ctx, side):
        if not self.motif:
            raise DiagramError("periodic tail needs a non-empty motif")
        if self.period < 1:
            raise DiagramError(f"period must be positive, got {self.period}")
        if self.direction not in (LEFT, RIGHT):
            raise DiagramError(f"direction must be 'left' or 'right', got {self.direction!r}")
        if self.direction != side:
            raise DiagramError(f"{side} tail cannot extend {self.direction}")
        for arc in self.motif:
            if not is_admissible(ctx, arc):
                raise DiagramError(f"motif arc {arc} is not admissible for d={ctx.d}")

    def incident(self, s):
        out = set()
        dt, du = self._steps()
        for arc in self.motif:
            for base, step in ((arc.t, dt), (arc.u, du)):
                k = _instance_index(s, base, step)
                if k is not None:
                    out.add(self.instance(arc, k))
        return sorted(a for a in out if s in (a.t, a.u))

    def left_infinite_at(self, s):
        return False

    def right_infinite_at(self, s):
        return False

    def arcs_with_endpoint_in(self, lo, hi, horizon):
        out = set()
        dt, du = self._steps()
        for arc in self.motif:
            for base, step in ((arc.t, dt), (arc.u, du)):
                out.update(self.instance(arc, k) for k in _range_hitting(base, step, lo, hi))
        return sorted(a for a in out if lo <= a.t <= hi or lo <= a.u <= hi), False

    def arcs_within(self, lo, hi):
        arcs, _ = self.arcs_with_endpoint_in(lo, hi, 0)
        return [a for a in arcs if lo <= a.t and a.u <= hi]

    def contains(self, arc):
        dt, du = self._steps()
        for m in self.motif:
            kt = _instance_index(arc.t, m.t, dt)
            ku = _instance_index(arc.u, m.u, du)
            if kt is not None and kt == ku:
                return True
            if dt == 0 and du == 0 and arc == m:
                return True
        return False

    def covering(self, arc):
        out = []
        dt, du = self._steps()
        for m in self.motif:
            if self.skew:
                # expanding family: the first wide-enough repetition covers,
                # the next one as well in case the first is the arc itself
                k0 = max(0, -(-(m.t - arc.t) // self.period), -(-(arc.u - m.u) // self.period))
                out.extend(self.instance(m, k) for k in (k0, k0 + 1))
            else:
                kmin, kmax = _translation_cover_range(m, arc, dt)
                if kmin <= kmax:
                    out.extend({self.instance(m, kmin), self.instance(m, kmax)})
        return out

    def min_window(self):
        pts = [p for k in (0, 1) for m in self.motif for p in (self.instance(m, k).t, self.instance(m, k).u)]
        return (min(pts), max(pts))

    def max_step(self):
        return self.period

    def split_for(self, arc):
        dt, du = self._steps()
        for m in self.motif:
            kt = _instance_index(arc.t, m.t, dt)
            if kt is not None and kt == _instance_index(arc.u, m.u, du):
                prefix = [self.instance(x, k) for k in range(kt + 1) for x in self.motif]
                new_motif = tuple(self.instance(x, kt + 1) for x in self.motif)
                return sorted(prefix), replace(self, motif=new_motif)
        raise DiagramError(f"{arc} is not generated by this tail")

    def as_json_dict(self):
        return {
            "kind": "periodic",
            "motif": [a.as_json() for a in self.motif],
            "period": self.period,
            "direction": self.direction,
            "skew": self.skew,
        }


def _range_hitting(base: int, step: int, lo: int, hi: int) -> range:
    """Indices k >= 0 with base + k*step inside [lo, hi]."""
    if step == 0:
        return range(0, 1 if lo <= base <= hi else 0)
    if step > 0:
        first = max(0, -(-(lo - base) // step))
        last = (hi - base) // step
    else:
        first = max(0, -(-(base - hi) // -step))
        last = (base - lo) // (-step)
    return range(first, max(first, last + 1))


@dataclass(frozen=True)
class FountainTail:
    """Infinitely many arcs sharing the ``anchor`` endpoint.

    Pencil arc k runs from the anchor outward with length
    ``first_length + k * length_step``; the filler motif lives in the band
    between pencil arcs 0 and 1 and is repeated into every later band.
    """

    anchor: int
    side: str
    first_length: int
    length_step: int
    filler_motif: tuple[Arc, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "filler_motif", tuple(sorted(self.filler_motif)))

    def pencil(self, k: int) -> Arc:
        length = self.first_length + k * self.length_step
        if self.side == RIGHT:
            return Arc(self.anchor, self.anchor + length)
        return Arc(self.anchor - length, self.anchor)

    def _filler_step(self) -> int:
        return self.length_step if self.side == RIGHT else -self.length_step

    def validate(self, ctx, side):
        if self.side not in (LEFT, RIGHT):
            raise DiagramError(f"side must be 'left' or 'right', got {self.side!r}")
        if self.side != side:
            raise DiagramError(f"{side} tail cannot anchor a {self.side}-side fountain")
        if self.length_step < 1 or self.length_step % ctx.d != 0:
            raise DiagramError(f"length_step must be a positive multiple of d, got {self.length_step}")
        if not is_admissible(ctx, Arc(0, self.first_length)):
            raise DiagramError(f"first_length {self.first_length} is not an admissible arc length")
        if self.side == RIGHT:
            band_lo, band_hi = self.pencil(0).u, self.pencil(1).u
        else:
            band_lo, band_hi = self.pencil(1).t, self.pencil(0).t
        for arc in self.filler_motif:
            if not is_admissible(ctx, arc):
                raise DiagramError(f"filler arc {arc} is not admissible for d={ctx.d}")
            if not (band_lo <= arc.t and arc.u <= band_hi):
                raise DiagramError(f"filler arc {arc} lies outside the first band [{band_lo}, {band_hi}]")

    def incident(self, s):
        out = set()
        if s == self.anchor:
            out.add(self.pencil(0))
        far_base = self.pencil(0).u if self.side == RIGHT else self.pencil(0).t
        k = _instance_index(s, far_base, self._filler_step())
        if k is not None:
            out.add(self.pencil(k))
        step = self._filler_step()
        for arc in self.filler_motif:
            for base in (arc.t, arc.u):
                k = _instance_index(s, base, step)
                if k is not None:
                    out.add(arc.shift(k * step))
        return sorted(a for a in out if s in (a.t, a.u))

    def left_infinite_at(self, s):
        return self.side == LEFT and s == self.anchor

    def right_infinite_at(self, s):
        return self.side == RIGHT and s == self.anchor

    def arcs_with_endpoint_in(self, lo, hi, horizon):
        out = set()
        truncated = False
        step = self._filler_step()
        far_base = self.pencil(0).u if self.side == RIGHT else self.pencil(0).t
        for k in _range_hitting(far_base, step, lo, hi):
            out.add(self.pencil(k))
        if lo <= self.anchor <= hi:
            span_cap = (hi - lo) + horizon
            k = 0
            while self.first_length + k * self.length_step <= span_cap:
                out.add(self.pencil(k))
                k += 1
            truncated = True
        for arc in self.filler_motif:
            for base in (arc.t, arc.u):
                out.update(arc.shift(k * step) for k in _range_hitting(base, step, lo, hi))
        return sorted(a for a in out if lo <= a.t <= hi or lo <= a.u <= hi), truncated

    def arcs_within(self, lo, hi):
        out = set()
        if lo <= self.anchor <= hi:
            reach = (hi - self.anchor) if self.side == RIGHT else (self.anchor - lo)
            k = 0
            while self.first_length + k * self.length_step <= reach:
                out.add(self.pencil(k))
                k += 1
        step = self._filler_step()
        for arc in self.filler_motif:
            for base in (arc.t, arc.u):
                for k in _range_hitting(base, step, lo, hi):
                    cand = arc.shift(k * step)
                    if lo <= cand.t and cand.u <= hi:
                        out.add(cand)
        return sorted(out)

    def contains(self, arc):
        if self.side == RIGHT and arc.t == self.anchor:
            if _instance_index(arc.length, self.first_length, self.length_step) is not None:
                return True
        if self.side == LEFT and arc.u == self.anchor:
            if _instance_index(arc.length, self.first_length, self.length_step) is not None:
                return True
        step = self._filler_step()
        for m in self.filler_motif:
            kt = _instance_index(arc.t, m.t, step)
            if kt is not None and kt == _instance_index(arc.u, m.u, step):
                return True
        return False

    def covering(self, arc):
        out = []
        g = self.length_step
        if self.side == RIGHT and self.anchor <= arc.t:
            k0 = max(0, -(-(arc.u - self.anchor - self.first_length) // g))
            out.extend(self.pencil(k) for k in (k0, k0 + 1))
        if self.side == LEFT and arc.u <= self.anchor:
            k0 = max(0, -(-(self.anchor - arc.t - self.first_length) // g))
            out.extend(self.pencil(k) for k in (k0, k0 + 1))
        step = self._filler_step()
        for m in self.filler_motif:
            kmin, kmax = _translation_cover_range(m, arc, step)
            if kmin <= kmax:
                out.extend({m.shift(kmin * step), m.shift(kmax * step)})
        return out

    def min_window(self):
        edge = self.pencil(2)
        pts = [edge.t, edge.u]
        return (min(pts), max(pts))

    def max_step(self):
        return self.length_step

    def split_for(self, arc):
        step = self._filler_step()
        k = None
        if self.contains(arc):
            if arc.t == self.anchor or arc.u == self.anchor:
                k = _instance_index(arc.length, self.first_length, self.length_step)
            else:
                for m in self.filler_motif:
                    kt = _instance_index(arc.t, m.t, step)
                    if kt is not None and kt == _instance_index(arc.u, m.u, step):
                        k = kt
                        break
        if k is None:
            raise DiagramError(f"{arc} is not generated by this tail")
        prefix = [self.pencil(j) for j in range(k + 1)]
        prefix += [m.shift(j * step) for j in range(k + 1) for m in self.filler_motif]
        new_tail = replace(
            self,
            first_length=self.first_length + (k + 1) * self.length_step,
            filler_motif=tuple(m.shift((k + 1) * step) for m in self.filler_motif),
        )
        return sorted(set(prefix)), new_tail

    def as_json_dict(self):
        return {
            "kind": "fountain",
            "anchor": self.anchor,
            "side": self.side,
            "first_length": self.first_length,
            "length_step": self.length_step,
            "filler_motif": [a.as_json() for a in self.filler_motif],
        }


TailSpec = NoTail | PeriodicTail | FountainTail


@dataclass(frozen=True)
class Reach:
    """Extreme opposite endpoints over all arcs at a point (inf = fountain)."""

    leftmost: int | float
    rightmost: int | float


@dataclass(frozen=True)
class Classification:
    kind: str
    left_anchor: int | None = None
    right_anchor: int | None = None

    @property
    def fountain_point(self) -> int | None:
        return self.left_anchor if self.kind == "fountain" else None

    def as_json_dict(self):
        out: dict = {"kind": self.kind}
        if self.kind in ("left_fountain", "fountain"):
            out["anchor"] = self.left_anchor
        if self.kind == "right_fountain":
            out["anchor"] = self.right_anchor
        if self.kind == "two_fountains":
            out["left_anchor"] = self.left_anchor
            out["right_anchor"] = self.right_anchor
        return out


@dataclass(frozen=True)
class WindowArcs:
    arcs: tuple[Arc, ...]
    truncated: bool


@dataclass(frozen=True)
class ValidationReport:
    noncrossing: bool
    maximal_on_window: bool
    window: tuple[int, int]
    crossing_pairs: tuple[tuple[Arc, Arc], ...]
    addable_arcs: tuple[Arc, ...]
    classification: Classification
    weakly_cluster_tilting: bool
    cluster_tilting: bool
    left_approximating: bool
    right_approximating: bool

    def as_json_dict(self):
        return {
            "noncrossing": self.noncrossing,
            "maximal_on_window": self.maximal_on_window,
            "window": list(self.window),
            "witnesses": {
                "crossing_pairs": [[a.as_json(), b.as_json()] for a, b in self.crossing_pairs],
                "addable_arcs": [a.as_json() for a in self.addable_arcs],
            },
            "classification": self.classification.as_json_dict(),
            "weakly_cluster_tilting": self.weakly_cluster_tilting,
            "cluster_tilting": self.cluster_tilting,
            "left_approximating": self.left_approximating,
            "right_approximating": self.right_approximating,
        }


@dataclass(frozen=True)
class ArcDiagram:
    """Immutable arc diagram: finite core plus two tail specifications."""

    ctx: Context
    core: tuple[Arc, ...] = ()
    left_tail: TailSpec = field(default_factory=NoTail)
    right_tail: TailSpec = field(default_factory=NoTail)

    def __post_init__(self):
        object.__setattr__(self, "core", tuple(sorted(set(self.core))))
        for arc in self.core:
            if not is_admissible(self.ctx, arc):
                raise DiagramError(f"core arc {arc} is not admissible for d={self.ctx.d}")
        self.left_tail.validate(self.ctx, LEFT)
        self.right_tail.validate(self.ctx, RIGHT)
        for arc in self.core:
            if self.left_tail.contains(arc) or self.right_tail.contains(arc):
                raise DiagramError(f"core arc {arc} duplicates a tail arc")
        self._check_tail_translates()

    def _check_tail_translates(self):
        # three consecutive repetitions must not cross each other or the core;
        # crossings purely inside the core are a validation finding, not a
        # construction error
        for tail in (self.left_tail, self.right_tail):
            sample: list[Arc] = []
            if isinstance(tail, PeriodicTail):
                sample = [tail.instance(m, k) for k in range(3) for m in tail.motif]
            elif isinstance(tail, FountainTail):
                step = tail._filler_step()
                sample = [tail.pencil(k) for k in range(3)]
                sample += [m.shift(k * step) for k in range(2) for m in tail.filler_motif]
            for i, a in enumerate(sample):
                for b in sample[i + 1:]:
                    if crosses(a, b):
                        raise DiagramError(f"tail specification makes {a} cross {b}")
            for a in sample:
                for b in self.core:
                    if crosses(a, b):
                        raise DiagramError(f"tail arc {a} crosses core arc {b}")

    # -- exact queries ----------------------------------------------------

    def _parts(self):
        return (self.left_tail, self.right_tail)

    def incident(self, s: int, exclude: Arc | None = None) -> list[Arc]:
        out = {a for a in self.core if s in (a.t, a.u)}
        for tail in self._parts():
            out.update(tail.incident(s))
        out.discard(exclude)
        return sorted(out)

    def reach(self, s: int, exclude: Arc | None = None) -> Reach:
        partners = [a.t if a.u == s else a.u for a in self.incident(s, exclude)]
        left: int | float
        right: int | float
        left = min(partners) if partners else s
        right = max(partners) if partners else s
        if any(tail.left_infinite_at(s) for tail in self._parts()):
            left = NEG_INF
        if any(tail.right_infinite_at(s) for tail in self._parts()):
            right = POS_INF
        return Reach(left, right)

    def arcs_in_window(self, lo: int, hi: int, horizon: int = 0) -> WindowArcs:
        """Arcs with at least one endpoint in [lo, hi].

        Fountain pencils anchored inside the window are infinite; they are
        realized up to ``window span + horizon`` and flagged as truncated.
        """
        if lo > hi:
            raise DiagramError(f"window bounds must satisfy lo <= hi, got [{lo}, {hi}]")
        out = {a for a in self.core if lo <= a.t <= hi or lo <= a.u <= hi}
        truncated = False
        for tail in self._parts():
            arcs, trunc = tail.arcs_with_endpoint_in(lo, hi, horizon)
            out.update(arcs)
            truncated = truncated or trunc
        return WindowArcs(tuple(sorted(out)), truncated)

    def arcs_within(self, lo: int, hi: int) -> list[Arc]:
        """Exactly the arcs with both endpoints in [lo, hi] (always finite)."""
        out = {a for a in self.core if lo <= a.t and a.u <= hi}
        for tail in self._parts():
            out.update(tail.arcs_within(lo, hi))
        return sorted(out)

    def contains(self, arc: Arc) -> bool:
        return arc in self.core or any(tail.contains(arc) for tail in self._parts())

    def classify(self) -> Classification:
        left = self.left_tail.anchor if isinstance(self.left_tail, FountainTail) else None
        right = self.right_tail.anchor if isinstance(self.right_tail, FountainTail) else None
        if left is None and right is None:
            return Classification("locally_finite")
        if left is not None and right is not None:
            if left == right:
                return Classification("fountain", left, right)
            return Classification("two_fountains", left, right)
        if left is not None:
            return Classification("left_fountain", left_anchor=left)
        return Classification("right_fountain", right_anchor=right)

    def min_window(self) -> tuple[int, int] | None:
        pts: list[int] = []
        for arc in self.core:
            pts.extend((arc.t, arc.u))
        for tail in self._parts():
            tail_window = tail.min_window()
            if tail_window is not None:
                pts.extend(tail_window)
        if not pts:
            return None
        return (min(pts), max(pts))

    def _margin(self) -> int:
        step = max((tail.max_step() for tail in self._parts()), default=0)
        return 2 * max(step, 1) + self.ctx.d + 2

    def suggested_window(self, *around: int) -> tuple[int, int]:
        """A window large enough to verify the diagram (and ``around`` points)."""
        needed = self.min_window()
        pts = list(around) or [0]
        if needed is not None:
            pts.extend(needed)
        margin = self._margin()
        return (min(pts) - margin, max(pts) + margin)

    def validate(self, lo: int, hi: int) -> ValidationReport:
        """Check the diagram on [lo, hi]: non-crossing and window-maximal.

        Non-crossing is checked pairwise over the arcs realized on the
        window plus a tail margin.  Maximality is decided exactly: an
        admissible candidate (v, w) inside the window can be added without
        crossings if and only if every point strictly between v and w only
        reaches partners inside [v, w], and reach is computed from the full
        infinite diagram.
        """
        needed = self.min_window()
        if needed is not None and not (lo <= needed[0] and needed[1] <= hi):
            raise WindowTooSmallError(*needed)

        margin = self._margin()
        realized = self.arcs_in_window(lo - margin, hi + margin, horizon=margin).arcs
        crossing_pairs = []
        for i, a in enumerate(realized):
            for b in realized[i + 1:]:
                if crosses(a, b):
                    crossing_pairs.append((a, b))
        noncrossing = not crossing_pairs

        reach_cache: dict[int, Reach] = {}

        def reach_at(s: int) -> Reach:
            if s not in reach_cache:
                reach_cache[s] = self.reach(s)
            return reach_cache[s]

        addable = []
        for cand in admissible_arcs_in_window(self.ctx, lo, hi):
            if self.contains(cand):
                continue
            blocked = False
            for s in range(cand.t + 1, cand.u):
                r = reach_at(s)
                if r.leftmost < cand.t or r.rightmost > cand.u:
                    blocked = True
                    break
            if not blocked:
                addable.append(cand)
        maximal = not addable

        classification = self.classify()
        left_anchor, right_anchor = classification.left_anchor, classification.right_anchor
        left_approx = left_anchor is None or left_anchor == right_anchor
        right_approx = right_anchor is None or right_anchor == left_anchor
        weakly = noncrossing and maximal
        ct = weakly and classification.kind in ("locally_finite", "fountain")
        return ValidationReport(
            noncrossing=noncrossing,
            maximal_on_window=maximal,
            window=(lo, hi),
            crossing_pairs=tuple(crossing_pairs),
            addable_arcs=tuple(addable),
            classification=classification,
            weakly_cluster_tilting=weakly,
            cluster_tilting=ct,
            left_approximating=left_approx,
            right_approximating=right_approx,
        )

    # -- regions ----------------------------------------------------------

    def region_under(self, arc: Arc) -> tuple[int, ...]:
        """Vertices of the region directly below ``arc``.

        The region is bounded above by ``arc``, below by the maximal arcs
        nested under it, and by base segments elsewhere; in a valid diagram
        it has exactly d + 2 vertices.
        """
        inside = [x for x in self.arcs_within(arc.t, arc.u) if x != arc]
        children = [x for x in inside
                    if not any(y != x and y.t <= x.t < x.u <= y.u for y in inside)]
        verts = {arc.t, arc.u}
        for child in children:
            verts.update((child.t, child.u))
        for k in range(arc.t + 1, arc.u):
            if not any(child.t < k < child.u for child in children):
                verts.add(k)
        return tuple(sorted(verts))

    def bounded_regions(self, lo: int, hi: int) -> list[tuple[Arc, tuple[int, ...]]]:
        """Region below every arc lying entirely inside [lo, hi]."""
        return [(arc, self.region_under(arc)) for arc in self.arcs_within(lo, hi)]

    # -- restructuring ----------------------------------------------------

    def materialize(self, arc: Arc) -> ArcDiagram:
        """Move the tail instance realizing ``arc`` into the core.

        The arc set is unchanged; only the presentation differs.  Arcs
        already in the core are returned as-is.
        """
        if arc in self.core:
            return self
        if self.left_tail.contains(arc):
            prefix, new_tail = self.left_tail.split_for(arc)
            return replace(self, core=self.core + tuple(prefix), left_tail=new_tail)
        if self.right_tail.contains(arc):
            prefix, new_tail = self.right_tail.split_for(arc)
            return replace(self, core=self.core + tuple(prefix), right_tail=new_tail)
        raise DiagramError(f"arc {arc} is not in the diagram")

    def replace_core_arc(self, removed: Arc, added: Arc) -> ArcDiagram:
        if removed not in self.core:
            raise DiagramError(f"arc {removed} is not in the core")
        new_core = tuple(a for a in self.core if a != removed) + (added,)
        return replace(self, core=new_core)

    # -- serialization ----------------------------------------------------

    def as_json_dict(self) -> dict:
        return {
            "d": self.ctx.d,
            "core": [a.as_json() for a in self.core],
            "left_tail": self.left_tail.as_json_dict(),
            "right_tail": self.right_tail.as_json_dict(),
        }

    def dumps(self) -> str:
        return dumps_canonical(self.as_json_dict())


def dumps_canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _tail_from_json(data) -> TailSpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise DiagramError(f"tail must be an object with a 'kind' field, got {data!r}")
    kind = data["kind"]
    try:
        if kind == "none":
            return NoTail()
        if kind == "periodic":
            return PeriodicTail(
                motif=tuple(arc_from_json(a) for a in data["motif"]),
                period=int(data["period"]),
                direction=data["direction"],
                skew=bool(data.get("skew", False)),
            )
        if kind == "fountain":
            return FountainTail(
                anchor=int(data["anchor"]),
                side=data["side"],
                first_length=int(data["first_length"]),
                length_step=int(data["length_step"]),
                filler_motif=tuple(arc_from_json(a) for a in data.get("filler_motif", [])),
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed {kind!r} tail: {exc}") from exc
    raise DiagramError(f"unknown tail kind {kind!r}")


def diagram_from_json_dict(data) -> ArcDiagram:
    if not isinstance(data, dict):
        raise DiagramError(f"diagram must be a JSON object, got {type(data).__name__}")
    try:
        ctx = Context(int(data["d"]))
        core = tuple(arc_from_json(a) for a in data.get("core", []))
        left = _tail_from_json(data.get("left_tail", {"kind": "none"}))
        right = _tail_from_json(data.get("right_tail", {"kind": "none"}))
    except DiagramError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram: {exc}") from exc
    return ArcDiagram(ctx, core, left, right)


def diagram_loads(text: str) -> ArcDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid JSON: {exc}") from exc
    return diagram_from_json_dict(data)
