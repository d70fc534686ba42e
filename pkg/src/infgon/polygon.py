"""Finite convex polygons cut into (d+2)-gons by non-crossing diagonals.

This is the brute-force playground: everything here is small enough to
enumerate, so the polygon results serve as ground truth for the mutation
engine on the infinite line.  Vertices are the labels ``0 .. n-1`` in convex
position; the side between ``n-1`` and ``0`` closes the polygon.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arcs import Arc, crosses


def fuss_catalan(d: int, m: int) -> int:
    """Number of ways to cut a (d*m+2)-gon into m pieces with d+2 sides each."""
    return math.comb((d + 1) * m, m) // (d * m + 1)


def chord_admissible(d: int, n: int, arc: Arc) -> bool:
    """Whether ``arc`` is a possible diagonal of the n-gon for parameter d."""
    return 2 <= arc.length <= n - 2 and arc.length % d == 1 % d


@dataclass(frozen=True)
class PolygonAngulation:
    """A division of a labeled n-gon into faces with exactly d+2 vertices.

    Raises ``ValueError`` unless the diagonals are admissible, pairwise
    non-crossing and cut the polygon into (d+2)-gons only.
    """

    d: int
    n: int
    diagonals: tuple[Arc, ...]

    def __post_init__(self):
        d, n = self.d, self.n
        if d < 1:
            raise ValueError(f"d must be positive, got {d}")
        if n < d + 2 or (n - 2) % d != 0:
            raise ValueError(f"an n-gon needs n >= d+2 and n == 2 (mod d), got n={n}, d={d}")
        object.__setattr__(self, "diagonals", tuple(sorted(set(self.diagonals))))
        for diag in self.diagonals:
            if not (0 <= diag.t and diag.u <= n - 1):
                raise ValueError(f"diagonal {diag} outside vertex range 0..{n - 1}")
            if not chord_admissible(d, n, diag):
                raise ValueError(f"diagonal {diag} is not admissible for d={d}, n={n}")
        diags = self.diagonals
        for i, a in enumerate(diags):
            for b in diags[i + 1:]:
                if crosses(a, b):
                    raise ValueError(f"diagonals {a} and {b} cross")
        m = (n - 2) // d
        if len(diags) != m - 1:
            raise ValueError(f"a (d+2)-angulation of an n-gon has {m - 1} diagonals, got {len(diags)}")
        for face in self.faces():
            if len(face) != d + 2:
                raise ValueError(f"face {face} does not have {d + 2} vertices")

    def face_below(self, chord: Arc) -> tuple[int, ...]:
        """Vertices of the face whose top boundary is ``chord``.

        ``chord`` may be a diagonal or the closing side ``(0, n-1)``.  The
        face consists of the chord's endpoints, the endpoints of the maximal
        diagonals nested below it, and the uncovered integers in between.
        """
        inside = [g for g in self.diagonals
                  if g != chord and chord.t <= g.t < g.u <= chord.u]
        children = [g for g in inside
                    if not any(h != g and h.t <= g.t < g.u <= h.u for h in inside)]
        verts = {chord.t, chord.u}
        for child in children:
            verts.update((child.t, child.u))
        for k in range(chord.t + 1, chord.u):
            if not any(child.t < k < child.u for child in children):
                verts.add(k)
        return tuple(sorted(verts))

    def faces(self) -> list[tuple[int, ...]]:
        """All faces of the division, each as a sorted vertex tuple."""
        tops = list(self.diagonals) + [Arc(0, self.n - 1)]
        return sorted(self.face_below(top) for top in tops)

    def as_json_dict(self) -> dict:
        return {"d": self.d, "n": self.n, "diagonals": [a.as_json() for a in self.diagonals]}


def is_valid_angulation(d: int, n: int, diagonals) -> bool:
    try:
        PolygonAngulation(d, n, tuple(diagonals))
    except ValueError:
        return False
    return True


@lru_cache(maxsize=None)
def _fillings(d: int, span: int) -> tuple[tuple[Arc, ...], ...]:
    """Diagonal sets completing the polygon on 0..span below its top chord.

    The recursion picks the face glued to the top chord (its d interior
    vertices, each gap congruent to 1 mod d), turns every gap of length
    >= 2 into a diagonal and recurses inside it.
    """
    if span == 1:
        return ((),)
    assert span % d == 1 % d and span >= 2
    results = []
    for mids in _face_choices(d, span):
        seq = (0, *mids, span)
        pools = []
        for a, b in zip(seq, seq[1:]):
            sub = [tuple(arc.shift(a) for arc in filling) for filling in _fillings(d, b - a)]
            if b - a >= 2:
                sub = [(Arc(a, b),) + filling for filling in sub]
            pools.append(sub)
        stack = [()]
        for pool in pools:
            stack = [acc + piece for acc in stack for piece in pool]
        results.extend(stack)
    return tuple(tuple(sorted(r)) for r in results)


def _face_choices(d: int, span: int) -> list[tuple[int, ...]]:
    """Interior vertex tuples (w1 < .. < wd) with all d+1 gaps == 1 (mod d)."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], last: int, remaining: int):
        if remaining == 0:
            if (span - last) % d == 1 % d:
                out.append(prefix)
            return
        w = last + 1
        while w <= span - remaining:
            rec(prefix + (w,), w, remaining - 1)
            w += d
        return

    rec((), 0, d)
    return out


def enumerate_angulations(d: int, n: int) -> list[PolygonAngulation]:
    """All (d+2)-angulations of the labeled n-gon, in sorted diagonal order."""
    if n < d + 2 or (n - 2) % d != 0:
        raise ValueError(f"an n-gon needs n >= d+2 and n == 2 (mod d), got n={n}, d={d}")
    return [PolygonAngulation(d, n, diags) for diags in sorted(_fillings(d, n - 1))]


def count_angulations(d: int, n: int) -> int:
    return len(enumerate_angulations(d, n))


def polygon_mutations(angulation: PolygonAngulation, t: Arc) -> list[Arc]:
    """All diagonals (including ``t``) that can replace ``t``.

    Brute force by definition: a candidate is valid when swapping it in
    yields a (d+2)-angulation again.
    """
    if t not in angulation.diagonals:
        raise ValueError(f"{t} is not a diagonal of the angulation")
    d, n = angulation.d, angulation.n
    rest = tuple(g for g in angulation.diagonals if g != t)
    out = []
    for v in range(n - 1):
        for w in range(v + 2, n):
            cand = Arc(v, w)
            if not chord_admissible(d, n, cand) or cand in rest:
                continue
            if any(crosses(cand, g) for g in rest):
                continue
            if is_valid_angulation(d, n, rest + (cand,)):
                out.append(cand)
    return sorted(out)


def face_along_edge(angulation: PolygonAngulation, edge: Arc,
                    containing: int | None = None) -> tuple[int, ...]:
    """Vertices of the face bordering ``edge``.

    For a polygon side there is a single face.  A diagonal borders two
    faces; the default is the face inside the diagonal's span, and passing
    ``containing=v`` selects the adjacent face holding vertex ``v``.
    """
    n = angulation.n
    if edge == Arc(0, n - 1):
        faces = [angulation.face_below(edge)]
    elif edge.length == 1:
        if not (0 <= edge.t and edge.u <= n - 1):
            raise ValueError(f"{edge} is not an edge of the polygon")
        covers = [g for g in angulation.diagonals if g.t <= edge.t < edge.u <= g.u]
        top = min(covers, key=lambda g: (g.length, g.t)) if covers else Arc(0, n - 1)
        faces = [angulation.face_below(top)]
    elif edge in angulation.diagonals:
        inner = angulation.face_below(edge)
        covers = [g for g in angulation.diagonals
                  if g != edge and g.t <= edge.t < edge.u <= g.u]
        top = min(covers, key=lambda g: (g.length, g.t)) if covers else Arc(0, n - 1)
        faces = [inner, angulation.face_below(top)]
    else:
        raise ValueError(f"{edge} is not an edge of the polygon")
    if containing is None:
        return faces[0]
    for face in faces:
        if containing in face:
            return face
    raise ValueError(f"no face along {edge} contains vertex {containing}")
