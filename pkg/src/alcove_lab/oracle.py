"""
Slow, independent reference implementations.

Each function here recomputes something the fast path already computes, by
a different route:

* :func:`leq_subword` -- Bruhat order through the subword property.
* :func:`hull_membership_vertices` -- convex hull membership from an exact
  facet enumeration of the orbit polytope (no dominance order involved).
* :func:`admissible_bruteforce` -- the admissible set as the union of all
  subword products of reduced words of the ``t_mu'``.
* :func:`length_hyperplanes` -- length as a count of separating affine
  hyperplanes.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import bruhat
from .errors import GuardExceeded, guard
from .iwahori_weyl import IWElement, translation
from .root_data import GroupCtx, weyl_orbit

__all__ = [
    "leq_subword",
    "subword_products",
    "hull_membership_vertices",
    "orbit_facets",
    "admissible_bruteforce",
    "length_hyperplanes",
    "MAX_SUBWORD_LENGTH",
    "MAX_HULL_RANK",
]

MAX_SUBWORD_LENGTH = 8
MAX_HULL_RANK = 4


# -- Bruhat order by subwords ---------------------------------------------------


@lru_cache(maxsize=4096)
def subword_products(ctx: GroupCtx, word: tuple[int, ...]) -> frozenset:
    """All products ``s_{i_a} s_{i_b} ...`` over subwords of ``word``."""
    if not word:
        return frozenset([IWElement.identity(ctx.n)])
    prev = subword_products(ctx, word[:-1])
    s = bruhat.simple_reflections(ctx)[word[-1]]
    return prev | frozenset(x * s for x in prev)


def leq_subword(ctx: GroupCtx, w: IWElement, v: IWElement) -> bool:
    """``w <= v`` iff ``w omega_v^{-1}`` is a subword product of a reduced word of ``v``."""
    rw = bruhat.omega_decompose(ctx, v)
    limit = guard(MAX_SUBWORD_LENGTH)
    if len(rw.letters) > limit:
        raise GuardExceeded(f"length {len(rw.letters)} exceeds subword guard {limit}")
    x = w * rw.omega.inverse()
    return x in subword_products(ctx, rw.letters)


def admissible_bruteforce(ctx: GroupCtx, mu: Sequence[int]) -> set[IWElement]:
    """Union over ``mu'`` in ``W mu`` of the subword products of ``t_mu'``."""
    out = set()
    for m in weyl_orbit(ctx, tuple(mu)):
        rw = bruhat.omega_decompose(ctx, translation(m))
        limit = guard(MAX_SUBWORD_LENGTH)
        if len(rw.letters) > limit:
            raise GuardExceeded(f"length {len(rw.letters)} exceeds subword guard {limit}")
        out |= {x * rw.omega for x in subword_products(ctx, rw.letters)}
    return out


# -- length by hyperplane count -------------------------------------------------


def length_hyperplanes(ctx: GroupCtx, w: IWElement, dmax: int = 6) -> int:
    """Number of hyperplanes ``<alpha, x> = d`` (``alpha > 0``, ``|d| <= dmax``) between ``A`` and ``wA``."""
    b = ctx.barycenter
    wb = w.act(b)
    count = 0
    for alpha in ctx.positive_roots:
        p = sum(a * x for a, x in zip(alpha, b))
        q = sum(a * x for a, x in zip(alpha, wb))
        for d in range(-dmax, dmax + 1):
            if (p - d) * (q - d) < 0:
                count += 1
    return count


# -- exact convex hull -----------------------------------------------------------


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _normal(diffs: list[list[Fraction]], dim: int) -> list[Fraction] | None:
    """A nonzero vector orthogonal to ``diffs`` when they have rank ``dim - 1``."""
    red, piv = _rref(diffs) if diffs else ([], [])
    if len(piv) != dim - 1:
        return None
    free = next(c for c in range(dim) if c not in piv)
    v = [Fraction(0)] * dim
    v[free] = Fraction(1)
    for row, c in zip(red, piv):
        v[c] = -row[free]
    return v


@lru_cache(maxsize=256)
def orbit_facets(ctx: GroupCtx, mu: tuple[int, ...]):
    """``(base, pivots, basis, facets)`` describing ``Conv(W mu)`` exactly.

    The polytope is written in the coordinates ``pivots`` of its affine
    hull ``base + span(basis)``; ``facets`` is a tuple of ``(c, b)`` with
    ``c . y <= b`` on the polytope.
    """
    if ctx.n > guard(MAX_HULL_RANK):
        raise GuardExceeded(f"hull oracle limited to rank {MAX_HULL_RANK}")
    verts = sorted(tuple(Fraction(c) for c in v) for v in weyl_orbit(ctx, mu))
    base = verts[0]
    diffs = [[a - b for a, b in zip(v, base)] for v in verts[1:]]
    basis, pivots = _rref(diffs) if diffs else ([], [])
    dim = len(pivots)
    proj = sorted({tuple(v[c] for c in pivots) for v in verts})
    facets = set()
    if dim > 0:
        for sub in itertools.combinations(proj, dim):
            q0 = sub[0]
            c = _normal([[a - b for a, b in zip(q, q0)] for q in sub[1:]], dim)
            if c is None:
                continue
            off = sum(x * y for x, y in zip(c, q0))
            vals = [sum(x * y for x, y in zip(c, q)) for q in proj]
            if all(v <= off for v in vals):
                facets.add((tuple(c), off))
            elif all(v >= off for v in vals):
                facets.add((tuple(-x for x in c), -off))
    return base, tuple(pivots), tuple(tuple(r) for r in basis), tuple(sorted(facets))


def hull_membership_vertices(ctx: GroupCtx, mu: Sequence[int], x: Sequence) -> bool:
    """Exact membership of ``x`` in the convex hull of the Weyl orbit of ``mu``."""
    if len(mu) != ctx.n or len(x) != ctx.n:
        raise ValueError("length mismatch")
    base, pivots, basis, facets = orbit_facets(ctx, tuple(mu))
    y = [Fraction(a) - b for a, b in zip(x, base)]
    # y must lie in the span of the basis rows, which is determined by its pivot entries
    recon = [Fraction(0)] * ctx.n
    for row, c in zip(basis, pivots):
        recon = [r + y[c] * e for r, e in zip(recon, row)]
    if recon != y:
        return False
    py = [Fraction(x[c]) for c in pivots]
    return all(sum(a * b for a, b in zip(c, py)) <= off for c, off in facets)
