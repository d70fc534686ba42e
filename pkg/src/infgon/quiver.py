"""Translation-quiver coordinates: suspension, Serre twist, Hom and Ext data.

Admissible arcs double as vertices of a stable translation quiver with d
components (one per residue of ``u`` mod d).  On coordinates the suspension
shifts both endpoints down by one, the Serre functor by ``d + 1`` and the
translation by ``d``.  Every Hom space has dimension 0 or 1; dimension 1
happens exactly when the target sits in the forward region of the source or
in the backward region of its Serre twist.  The closed-form region tests
below are cross-checked against a mesh-walking oracle in the test suite.
"""
from __future__ import annotations

from .arcs import Arc, Context, is_admissible


def _require_admissible(ctx: Context, arc: Arc) -> None:
    if not is_admissible(ctx, arc):
        raise ValueError(f"arc {arc} is not admissible for d={ctx.d}")


def component_index(ctx: Context, x: Arc) -> int:
    """Index of the quiver component containing ``x`` (convention: u mod d)."""
    return x.u % ctx.d


def suspend(ctx: Context, x: Arc, n: int = 1) -> Arc:
    """Apply the suspension ``n`` times; negative ``n`` inverts it."""
    return Arc(x.t - n, x.u - n)


def serre(ctx: Context, x: Arc) -> Arc:
    """Serre twist: suspension iterated ``d + 1`` times."""
    return suspend(ctx, x, ctx.d + 1)


def serre_inverse(ctx: Context, x: Arc) -> Arc:
    return suspend(ctx, x, -(ctx.d + 1))


def tau(ctx: Context, x: Arc) -> Arc:
    """Translation of the quiver: one mesh to the left, same component."""
    return Arc(x.t - ctx.d, x.u - ctx.d)


def in_forward_region(ctx: Context, x: Arc, z: Arc) -> bool:
    """Whether ``z`` lies in the forward Hom-support region of ``x``.

    With ``x = (r, s)`` the region is the diagonal strip of the component of
    ``x`` between the ascending ray through ``x`` and the ascending ray
    through the bottom vertex ``(s - d - 1, s)``:

        u == s (mod d),  r <= t <= s - d - 1,  s <= u.

    It always contains ``x`` itself.
    """
    _require_admissible(ctx, x)
    _require_admissible(ctx, z)
    r, s = x.t, x.u
    t, u = z.t, z.u
    return (u - s) % ctx.d == 0 and r <= t <= s - ctx.d - 1 and s <= u


def in_backward_region(ctx: Context, x: Arc, z: Arc) -> bool:
    """Whether ``z`` lies in the backward region of ``x``.

    Dual to the forward region: ``z`` is backward of ``x`` exactly when
    ``x`` is forward of ``z``.
    """
    return in_forward_region(ctx, z, x)


def hom_dim(ctx: Context, x: Arc, y: Arc) -> int:
    """Dimension (0 or 1) of the morphism space from ``x`` to ``y``.

    Equal to 1 exactly when ``y`` is in the forward region of ``x`` or in
    the backward region of the Serre twist of ``x``.
    """
    if in_forward_region(ctx, x, y) or in_backward_region(ctx, serre(ctx, x), y):
        return 1
    return 0


def ext_profile(ctx: Context, x: Arc, y: Arc) -> tuple[int, ...]:
    """Degrees ``l`` in 1..d whose l-th extension group of (x, y) is non-zero.

    Computed degree by degree from ``hom_dim`` against the suspensions of
    ``y``; no fused shortcut, so the crossing equivalence stays an honest
    independent check.
    """
    return tuple(ell for ell in range(1, ctx.d + 1)
                 if hom_dim(ctx, x, suspend(ctx, y, ell)) == 1)
