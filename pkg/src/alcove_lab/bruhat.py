"""
Length, reduced words and the Bruhat order on Iwahori-Weyl groups.

Every element factors uniquely as ``x . omega`` with ``x`` in the affine
Weyl group and ``omega`` stabilizing the base alcove.  The factorization is
found by stripping left descents: ``s`` is a left descent of ``w`` exactly
when the wall of ``s`` separates the base alcove from ``w A``, which is an
exact sign test of the wall's affine root at ``w(barycenter)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import GuardExceeded, guard
from .iwahori_weyl import IWElement, affine_reflection, translation
from .root_data import GroupCtx

__all__ = [
    "ReducedWord",
    "simple_reflections",
    "left_descents",
    "same_wa_coset",
    "length",
    "omega_decompose",
    "evaluate_word",
    "leq",
    "ball",
    "coset_ball",
    "MAX_BALL_LENGTH",
]

MAX_BALL_LENGTH = 12


@dataclass(frozen=True)
class ReducedWord:
    """``s_{letters[0]} ... s_{letters[-1]} . omega``."""

    letters: tuple[int, ...]
    omega: IWElement

    def __len__(self):
        return len(self.letters)


@lru_cache(maxsize=None)
def simple_reflections(ctx: GroupCtx) -> tuple[IWElement, ...]:
    """Reflections in the walls of the base alcove, indexed like ``ctx.walls``."""
    return tuple(affine_reflection(f) for f in ctx.walls)


def _wall_values(ctx: GroupCtx, w: IWElement) -> list[int]:
    # walls evaluated at w(barycenter), scaled by the barycenter's denominator
    den, b = ctx._bary_scaled
    p = [x + den * t for x, t in zip(w.s.act(b), w.t)]
    return [sum(a * x for a, x in zip(f.alpha, p)) - den * f.d for f in ctx.walls]


def left_descents(ctx: GroupCtx, w: IWElement) -> list[int]:
    return [k for k, val in enumerate(_wall_values(ctx, w)) if val < 0]


def _first_descent(ctx: GroupCtx, w: IWElement) -> int | None:
    for k, val in enumerate(_wall_values(ctx, w)):
        if val < 0:
            return k
    return None


def _check(ctx: GroupCtx, *ws: IWElement) -> None:
    for w in ws:
        if w.n != ctx.n:
            raise ValueError(f"element of rank {w.n} used with context {ctx}")


def same_wa_coset(ctx: GroupCtx, w1: IWElement, w2: IWElement) -> bool:
    """Whether ``w1 w2^{-1}`` lies in the affine Weyl group."""
    _check(ctx, w1, w2)
    q = w1 * w2.inverse()
    if not ctx.in_affine_linear(q.s):
        return False
    s = sum(q.t)
    if ctx.family == "A":
        return s == 0
    if ctx.family == "C":
        return True
    return s % 2 == 0


@lru_cache(maxsize=1 << 18)
def omega_decompose(ctx: GroupCtx, w: IWElement) -> ReducedWord:
    """Reduced word for the affine Weyl part of ``w`` and its length-zero part."""
    _check(ctx, w)
    sr = simple_reflections(ctx)
    letters = []
    cur = w
    # each strip lowers the number of separating hyperplanes by one
    cap = 10_000
    while (k := _first_descent(ctx, cur)) is not None:
        letters.append(k)
        cur = sr[k] * cur
        if len(letters) > cap:
            raise RuntimeError(f"descent stripping did not terminate for {w}")
    return ReducedWord(tuple(letters), cur)


def length(ctx: GroupCtx, w: IWElement) -> int:
    return len(omega_decompose(ctx, w).letters)


def evaluate_word(ctx: GroupCtx, letters, omega: IWElement | None = None) -> IWElement:
    sr = simple_reflections(ctx)
    out = omega if omega is not None else IWElement.identity(ctx.n)
    for k in reversed(tuple(letters)):
        out = sr[k] * out
    return out


# lru_cache is internally locked, so concurrent leq calls share the memo safely
@lru_cache(maxsize=1 << 20)
def _leq(ctx: GroupCtx, w: IWElement, v: IWElement) -> bool:
    if w == v:
        return True
    if length(ctx, w) >= length(ctx, v):
        return False
    sr = simple_reflections(ctx)
    k = _first_descent(ctx, v)
    s = sr[k]
    sw = s * w
    # property Z: if s v < v then w <= v iff min(w, s w) <= s v
    lower = sw if k in left_descents(ctx, w) else w
    return _leq(ctx, lower, s * v)


def leq(ctx: GroupCtx, w: IWElement, v: IWElement) -> bool:
    """Bruhat order: ``x omega <= x' omega'`` iff ``omega = omega'`` and ``x <= x'``."""
    _check(ctx, w, v)
    if not same_wa_coset(ctx, w, v):
        return False
    return _leq(ctx, w, v)


def coset_ball(ctx: GroupCtx, maxlen: int, coset_rep: IWElement) -> dict[IWElement, int]:
    """Elements of the ``W_a``-coset of ``coset_rep`` with length ``<= maxlen``, with lengths."""
    limit = guard(MAX_BALL_LENGTH)
    if maxlen > limit:
        raise GuardExceeded(f"ball of length {maxlen} exceeds guard {limit}")
    _check(ctx, coset_rep)
    start = omega_decompose(ctx, coset_rep).omega
    sr = simple_reflections(ctx)
    seen = {start: 0}
    frontier = deque([start])
    while frontier:
        w = frontier.popleft()
        d = seen[w]
        if d == maxlen:
            continue
        for s in sr:
            x = s * w
            if x not in seen:
                seen[x] = d + 1
                frontier.append(x)
    return seen


def ball(ctx: GroupCtx, maxlen: int, coset_rep: IWElement | None = None) -> set[IWElement]:
    """All elements ``w`` in the coset of ``coset_rep`` with ``length(w) <= maxlen``."""
    if coset_rep is None:
        coset_rep = translation((0,) * ctx.n)
    return set(coset_ball(ctx, maxlen, coset_rep))


def clear_caches() -> None:
    _leq.cache_clear()
    omega_decompose.cache_clear()
