"""Mutation of verified diagrams: replacing one arc while staying maximal.

Replacing an arc ``t`` splits into two exact cases.  If ``t`` has a covering
arc, all replacements live in the finite polygon below the tightest cover
and are found by polygon flips.  Otherwise the diagram has a left-side
fountain whose stepping sequence reaches the right-side fountain in at most
d steps; interleaving the face below ``t`` into that sequence yields the
complete finite candidate list (pairs exactly d+1 positions apart), and each
candidate is kept when it crosses nothing else in the diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arcs import Arc
from .diagram import POS_INF, ArcDiagram, DiagramError, ValidationReport
from .polygon import PolygonAngulation, face_along_edge, polygon_mutations


class ArcNotInDiagramError(DiagramError):
    """The requested arc does not belong to the diagram."""


class StaleOptionError(DiagramError):
    """The mutation option does not apply to the current diagram."""


class InvalidDiagramError(DiagramError):
    """Mutation requires a diagram verified as weakly cluster tilting."""


@dataclass(frozen=True)
class RightFountainStop:
    at: int

    def as_json_dict(self):
        return {"kind": "right_fountain", "at": self.at}


@dataclass(frozen=True)
class HorizonStop:
    steps: int

    def as_json_dict(self):
        return {"kind": "horizon", "steps": self.steps}


@dataclass(frozen=True)
class PSequence:
    """Increasing integer stops produced by the stepping rule below."""

    points: tuple[int, ...]
    terminator: RightFountainStop | HorizonStop

    def as_json_dict(self):
        return {"points": list(self.points), "terminator": self.terminator.as_json_dict()}


@dataclass(frozen=True, order=True)
class MutationOption:
    removed: Arc
    added: Arc

    def as_json_dict(self):
        return {"removed": self.removed.as_json(), "added": self.added.as_json()}


def p_sequence(D: ArcDiagram, p0: int, max_steps: int = 32) -> PSequence:
    """Step right from ``p0``: to the far end of the longest arc starting at
    the current point, or by one if none starts there; stop at a point where
    infinitely many arcs start.

    Stops with a horizon marker after ``max_steps`` steps if no such point
    is reached (locally finite diagrams never reach one).
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    points = [p0]
    p = p0
    steps = 0
    while True:
        r = D.reach(p)
        if r.rightmost == POS_INF:
            return PSequence(tuple(points), RightFountainStop(p))
        if steps == max_steps:
            return PSequence(tuple(points), HorizonStop(max_steps))
        p = r.rightmost if r.rightmost > p else p + 1
        points.append(p)
        steps += 1


def find_overarc(D: ArcDiagram, t: Arc) -> Arc | None:
    """Tightest arc of the diagram spanning ``t``, or None.

    Covering candidates are enumerated in closed form from the core and each
    tail family; in a non-crossing diagram the covers of an arc are nested,
    so the minimum by (length, left endpoint) is the unique tightest cover.
    """
    if not D.contains(t):
        raise ArcNotInDiagramError(f"arc {t} is not in the diagram")
    cands = [a for a in D.core if a != t and a.t <= t.t and t.u <= a.u]
    for tail in (D.left_tail, D.right_tail):
        cands.extend(a for a in tail.covering(t)
                     if a != t and a.t <= t.t and t.u <= a.u)
    if not cands:
        return None
    return min(cands, key=lambda a: (a.length, a.t))


def _polygon_under(D: ArcDiagram, cover: Arc) -> PolygonAngulation:
    """The diagram restricted below ``cover`` as a labeled polygon."""
    diagonals = tuple(Arc(a.t - cover.t, a.u - cover.t)
                      for a in D.arcs_within(cover.t, cover.u) if a != cover)
    try:
        return PolygonAngulation(D.ctx.d, cover.length + 1, diagonals)
    except ValueError as exc:
        raise InvalidDiagramError(f"arcs below {cover} do not form a valid angulation: {exc}") from exc


@lru_cache(maxsize=1024)
def _auto_report(D: ArcDiagram) -> ValidationReport:
    lo, hi = D.suggested_window()
    return D.validate(lo, hi)


def _require_verified(D: ArcDiagram) -> None:
    report = _auto_report(D)
    if not report.weakly_cluster_tilting:
        raise InvalidDiagramError("diagram is not weakly cluster tilting on its verification window")


def _compatible_excluding(D: ArcDiagram, cand: Arc, removed: Arc) -> bool:
    """Whether ``cand`` crosses nothing in the diagram minus ``removed``."""
    for s in range(cand.t + 1, cand.u):
        r = D.reach(s, exclude=removed)
        if r.leftmost < cand.t or r.rightmost > cand.u:
            return False
    return True


def enumerate_mutations(D: ArcDiagram, t: Arc) -> list[MutationOption]:
    """All single-arc replacements of ``t`` keeping the diagram maximal."""
    if not D.contains(t):
        raise ArcNotInDiagramError(f"arc {t} is not in the diagram")
    D = D.materialize(t)
    _require_verified(D)

    cover = find_overarc(D, t)
    if cover is not None:
        angulation = _polygon_under(D, cover)
        shifted = Arc(t.t - cover.t, t.u - cover.t)
        flips = polygon_mutations(angulation, shifted)
        added = sorted(Arc(f.t + cover.t, f.u + cover.t) for f in flips)
        return [MutationOption(t, a) for a in added if a != t]

    # no cover: the diagram has one-sided fountains and t sits on the
    # stepping sequence between them
    classification = D.classify()
    if classification.left_anchor is None:
        raise InvalidDiagramError(f"arc {t} has no cover and the diagram has no left-side fountain")
    seq = p_sequence(D, classification.left_anchor, max_steps=D.ctx.d + 1)
    if isinstance(seq.terminator, HorizonStop):
        raise InvalidDiagramError("stepping sequence did not reach a right-side fountain")
    ps = seq.points
    j = next((i for i in range(len(ps) - 1) if (ps[i], ps[i + 1]) == (t.t, t.u)), None)
    if j is None:
        raise InvalidDiagramError(f"arc {t} has no cover but is not a stepping-sequence arc")
    below = _polygon_under(D, t)
    face = face_along_edge(below, Arc(0, t.length))
    qs = [t.t + v for v in face[1:-1]]
    full = list(ps[:j + 1]) + qs + list(ps[j + 1:])

    d = D.ctx.d
    options = []
    for i in range(len(full) - d - 1):
        cand = Arc(full[i], full[i + d + 1])
        if cand == t or D.contains(cand):
            continue
        if _compatible_excluding(D, cand, t):
            options.append(MutationOption(t, cand))
    return sorted(options)


def mutate(D: ArcDiagram, option: MutationOption) -> ArcDiagram:
    """Apply a mutation option, returning the new (re-verified) diagram."""
    if not D.contains(option.removed):
        raise StaleOptionError(f"arc {option.removed} is not in the diagram")
    valid = enumerate_mutations(D, option.removed)
    if option not in valid:
        raise StaleOptionError(f"option {option.as_json_dict()} is not currently valid")
    result = D.materialize(option.removed).replace_core_arc(option.removed, option.added)
    _require_verified(result)
    return result


def option_from_json(data) -> MutationOption:
    from .arcs import arc_from_json

    if not isinstance(data, dict) or "removed" not in data or "added" not in data:
        raise DiagramError(f"a mutation option needs 'removed' and 'added' arcs, got {data!r}")
    return MutationOption(arc_from_json(data["removed"]), arc_from_json(data["added"]))
