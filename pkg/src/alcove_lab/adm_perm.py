"""
Admissible and permissible sets, the alcove test for permissibility,
reflection lifting, and the embedding of the odd orthogonal Iwahori-Weyl
group into the even one.

Throughout, ``E1`` denotes the cocharacter ``(1, 0, ..., 0)``; in the
``2n``-dimensional picture it is ``(1, 0^(2n-2), -1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import bruhat
from .errors import GuardExceeded, NotPermissible, guard
from .iwahori_weyl import (
    AffineRoot,
    IWElement,
    a_prime,
    mu_vectors,
    nu_vectors,
    pairing,
    readout,
    reflection,
    translation,
)
from .root_data import GroupCtx, in_convex_hull, weyl_orbit
from .signed_weyl import SignedPerm

__all__ = [
    "e1",
    "admissible_set",
    "permissible_set",
    "is_admissible",
    "is_permissible_def",
    "is_permissible_alcove",
    "perm_preserving",
    "bruhat_increases",
    "LiftError",
    "LiftStep",
    "lift_reflection",
    "lift_chain",
    "steinberg_embed",
    "InheritanceReport",
    "check_bruhat_inheritance",
    "odd_perm_implies_even_perm",
    "search_gap",
    "sort_key",
]


def e1(n: int) -> tuple[int, ...]:
    return (1,) + (0,) * (n - 1)


def sort_key(ctx: GroupCtx, w: IWElement):
    """Canonical output order: by length, then by encoding."""
    return (bruhat.length(ctx, w), w.t, w.s.window)


# -- Adm and Perm ---------------------------------------------------------------


def is_admissible(ctx: GroupCtx, mu: Sequence[int], w: IWElement) -> bool:
    return any(bruhat.leq(ctx, w, translation(m)) for m in weyl_orbit(ctx, mu))


def admissible_set(ctx: GroupCtx, mu: Sequence[int]) -> set[IWElement]:
    """``{w : w <= t_mu' for some mu' in W mu}``."""
    mu = tuple(mu)
    t_mu = translation(mu)
    tops = [translation(m) for m in sorted(weyl_orbit(ctx, mu))]
    candidates = bruhat.coset_ball(ctx, bruhat.length(ctx, t_mu), t_mu)
    return {w for w in candidates if any(bruhat.leq(ctx, w, t) for t in tops)}


def is_permissible_def(ctx: GroupCtx, mu: Sequence[int], w: IWElement, hull=in_convex_hull) -> bool:
    """``w = t_mu mod W_a`` and ``w a - a`` in ``Conv(W mu)`` for each base-alcove vertex ``a``.

    ``hull`` is the membership test ``(ctx, mu, x) -> bool`` to use.
    """
    mu = tuple(mu)
    if not bruhat.same_wa_coset(ctx, w, translation(mu)):
        return False
    for a in ctx.vertices:
        wa = w.act(a)
        if not hull(ctx, mu, tuple(x - y for x, y in zip(wa, a))):
            return False
    return True


def _hull_lattice_points(ctx: GroupCtx, mu: Sequence[int], hull=in_convex_hull) -> list[tuple[int, ...]]:
    if ctx.family == "A":
        lo, hi = min(mu), max(mu)
    else:
        hi = max(abs(c) for c in mu)
        lo = -hi
    box = itertools.product(range(lo, hi + 1), repeat=ctx.n)
    return [v for v in box if hull(ctx, mu, v)]


def permissible_set(ctx: GroupCtx, mu: Sequence[int], hull=in_convex_hull) -> set[IWElement]:
    """All ``mu``-permissible elements.

    The translation part ``w(0) - 0`` of a permissible element is a lattice
    point of ``Conv(W mu)``, so that together with all linear parts gives a
    finite candidate set.
    """
    mu = tuple(mu)
    linear = list(ctx.linear_group())
    out = set()
    for nu in _hull_lattice_points(ctx, mu, hull):
        for s in linear:
            w = IWElement(nu, s)
            if is_permissible_def(ctx, mu, w, hull):
                out.add(w)
    return out


# -- the extended-alcove test -------------------------------------------------------


def _is_root_pattern(v: Sequence[int]) -> bool:
    # an element of S_{2n} mu: one entry 1, one entry -1, the rest 0
    return sorted(v)[0] == -1 and sorted(v)[-1] == 1 and sum(1 for c in v if c) == 2


def _is_orbit_vector(v: Sequence[int]) -> bool:
    # an element of S*_{2n} mu = S°_{2n} mu: e_j - e_{j*}
    m = len(v)
    if not _is_root_pattern(v):
        return False
    j = list(v).index(1)
    return v[m - 1 - j] == -1


def is_permissible_alcove(w: IWElement, even_case: bool = True) -> bool:
    """E1-permissibility read off the ``mu_k`` vectors of ``w``'s extended alcove.

    Even case: every ``mu_k`` is in ``S_{2n} mu`` or zero, and ``mu_0``,
    ``mu_n`` are in ``S°_{2n} mu``.  Odd case: only ``mu_0`` is constrained
    to the orbit.
    """
    n = w.n
    mus = mu_vectors(w)
    if any(any(mu) and not _is_root_pattern(mu) for mu in mus):
        return False
    if not _is_orbit_vector(mus[0]):
        return False
    return _is_orbit_vector(mus[n]) if even_case else True


def _require_perm(ctx: GroupCtx, w: IWElement) -> None:
    if not is_permissible_def(ctx, e1(ctx.n), w):
        raise NotPermissible(f"{w} is not E1-permissible in {ctx}")


def _default_ctx(w: IWElement, ctx: GroupCtx | None) -> GroupCtx:
    return ctx if ctx is not None else GroupCtx("D", w.n)


def perm_preserving(w: IWElement, ar: AffineRoot, ctx: GroupCtx | None = None) -> bool:
    """Whether ``nu_k + <ar, a'_k> ar^vee`` stays in the hull for all ``0 <= k <= n``.

    For permissible ``w`` this is equivalent to ``s_ar w`` being permissible.
    """
    ctx = _default_ctx(w, ctx)
    _require_perm(ctx, w)
    n = w.n
    cv = ar.coroot_2n()
    mu = e1(n)
    for k, nu in enumerate(nu_vectors(w)):
        c = pairing(ar, a_prime(n, k))
        moved = tuple(x + c * y for x, y in zip(nu, cv))
        if not in_convex_hull(ctx, mu, readout(moved)):
            return False
    return True


def _test_points(ctx: GroupCtx) -> list[tuple[Fraction, ...]]:
    n = ctx.n
    pts = list(ctx.vertices)
    for k in range(n + 1):
        p = readout(a_prime(n, k))
        if p not in pts:
            pts.append(p)
    return pts


def bruhat_increases(w: IWElement, ar: AffineRoot, ctx: GroupCtx | None = None) -> bool:
    """Whether ``w < s_ar w``, decided from the base-alcove vertices and the ``a'_k``.

    True iff for some test point ``v`` either
    ``|<alpha, wv - v>| < |<alpha, wv - v + <ar, v> alpha^vee>|``, or
    ``<ar, v> = 0`` and ``<alpha, wv - v>`` has the sign of ``ar`` on the
    base alcove.
    """
    ctx = _default_ctx(w, ctx)
    alpha = ar.alpha
    cv = ar.coroot()
    f = ar.functional()
    side = f(ctx.barycenter)

    def lin(x):
        return sum(a * c for a, c in zip(alpha, x))

    for v in _test_points(ctx):
        disp = tuple(x - y for x, y in zip(w.act(v), v))
        c = f(v)
        if abs(lin(disp)) < abs(lin(tuple(x + c * y for x, y in zip(disp, cv)))):
            return True
    for v in _test_points(ctx):
        disp = tuple(x - y for x, y in zip(w.act(v), v))
        val = lin(disp)
        if f(v) == 0 and val != 0 and (val > 0) == (side > 0):
            return True
    return False


# -- lifting ---------------------------------------------------------------------------


class LiftError(RuntimeError):
    """The lifting case analysis produced a root failing its own checks."""


@dataclass(frozen=True)
class LiftStep:
    root: AffineRoot
    before: IWElement
    after: IWElement


def _choose_root(w: IWElement) -> AffineRoot:
    n = w.n
    m = 2 * n
    sigma = w.s
    nus = nu_vectors(w)
    zero = tuple(Fraction(0) for _ in range(m))

    i = next(k for k in range(1, n + 1) if nus[k] != nus[k - 1])
    j = nus[0].index(1) + 1
    si = sigma(i)
    try:
        if j == i:
            r = next((r for r in range(n + 1) if nus[r] == zero), None)
            if r is not None:
                if r == i:
                    return AffineRoot(i, m - i, 1, n)  # i* - 1 = 2n - i
                return AffineRoot(r, r + 1, 0, n)
            i_tilde = next(k for k in range(1, m + 1) if sigma(k) == i)
            return AffineRoot(i, i_tilde, 1, n)
        if j == m + 1 - si:
            return AffineRoot(i, si, 1, n)
    except ValueError as exc:
        raise LiftError(f"case analysis produced an invalid root for {w}: {exc}") from None
    raise LiftError(f"nu_0 = e_{j} - e_{j}* fits neither j = i nor j = sigma(i)* for {w}")


def lift_reflection(w: IWElement) -> AffineRoot:
    """An affine root ``ar`` with ``s_ar w`` permissible, ``w < s_ar w``, same translation part.

    ``w`` must be an E1-permissible, non-translation element of the even
    orthogonal Iwahori-Weyl group.
    """
    ctx = GroupCtx("D", w.n)
    _require_perm(ctx, w)
    if w.is_translation():
        raise ValueError(f"{w} is a translation element")
    ar = _choose_root(w)
    nu0 = nu_vectors(w)[0]
    if pairing(ar, nu0) != 0:
        raise LiftError(f"{ar} changes the translation part of {w}")
    if not perm_preserving(w, ar, ctx):
        raise LiftError(f"{ar} does not preserve permissibility of {w}")
    if not bruhat_increases(w, ar, ctx):
        raise LiftError(f"{ar} does not increase {w} in the Bruhat order")
    return ar


def lift_chain(w: IWElement) -> list[LiftStep]:
    """Lift ``w`` by reflections until reaching its translation part."""
    steps = []
    cur = w
    cap = 4 * w.n * w.n + 4
    while not cur.is_translation():
        ar = lift_reflection(cur)
        nxt = reflection(ar) * cur
        steps.append(LiftStep(ar, cur, nxt))
        cur = nxt
        if len(steps) > cap:
            raise LiftError(f"lift chain from {w} did not terminate")
    return steps


# -- odd to even ------------------------------------------------------------------------


def steinberg_embed(w: IWElement) -> IWElement:
    """Embed an element for ``O_{2n+1}`` (rank n) into the one for ``O_{2n+2}`` (rank n+1).

    >>> steinberg_embed(IWElement((0, 0), SignedPerm((1, -2))))
    IWElement(t=[0, 0, 0], s=[1, -2, -3])
    """
    n = w.n
    eta = 1 if w.s.is_even() else -1
    return IWElement(w.t + (0,), SignedPerm(w.s.window + (eta * (n + 1),)))


@dataclass
class InheritanceReport:
    n: int
    maxlen: int
    elements: int = 0
    pairs: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


MAX_INHERITANCE_LENGTH = 6


def check_bruhat_inheritance(n: int, maxlen: int) -> InheritanceReport:
    """Compare the odd Bruhat order with the even one along :func:`steinberg_embed`.

    Scans all pairs from the length-``<= maxlen`` balls of both cosets of
    the odd affine Weyl group.
    """
    limit = guard(MAX_INHERITANCE_LENGTH)
    if maxlen > limit:
        raise GuardExceeded(f"maxlen {maxlen} exceeds guard {limit}")
    B = GroupCtx("B", n)
    D = GroupCtx("D", n + 1)
    elems = set()
    for rep in (translation((0,) * n), translation(e1(n))):
        elems |= bruhat.ball(B, maxlen, rep)
    elems = sorted(elems, key=lambda w: sort_key(B, w))
    images = {w: steinberg_embed(w) for w in elems}
    report = InheritanceReport(n, maxlen, elements=len(elems))
    for x in elems:
        for y in elems:
            report.pairs += 1
            lb = bruhat.leq(B, x, y)
            ld = bruhat.leq(D, images[x], images[y])
            if lb != ld:
                report.violations.append((x, y, lb, ld))
    return report


def odd_perm_implies_even_perm(w: IWElement) -> bool:
    """Check that a permissible element for ``O_{2n+1}`` embeds to a permissible one for ``O_{2n+2}``.

    Follows the reduction: the only new point to control is the all-halves
    vertex, where ``iota(w) . 1/2 - 1/2`` equals ``w a - a`` (even linear
    part) or ``w a - a - e_{n+1}`` (odd linear part, and then ``w a = a``)
    for ``a = ((1/2)^(n), 0)``.
    """
    n = w.n
    B = GroupCtx("B", n)
    D = GroupCtx("D", n + 1)
    _require_perm(B, w)
    iw = steinberg_embed(w)
    h = Fraction(1, 2)
    half = (h,) * (n + 1)
    a = (h,) * n + (Fraction(0),)
    lhs = tuple(x - y for x, y in zip(iw.act(half), half))
    wa_a = tuple(x - y for x, y in zip(iw.act(a), a))
    if w.s.is_even():
        if lhs != wa_a:
            return False
    else:
        if any(wa_a):
            return False
        if lhs != (0,) * n + (-1,):
            return False
    if not in_convex_hull(D, e1(n + 1), lhs):
        return False
    # the nu_k criterion in rank n + 1
    mu = e1(n + 1)
    nus = nu_vectors(iw)
    if not all(in_convex_hull(D, mu, readout(nu)) for nu in nus):
        return False
    ends = (nus[0], nus[n + 1])
    return all(
        all(c.denominator == 1 for c in v) and _is_orbit_vector(tuple(int(c) for c in v))
        for v in ends
    )


# -- gap search -------------------------------------------------------------------------


def search_gap(ctx: GroupCtx, mu_candidates: Iterable[Sequence[int]]) -> list[tuple[tuple[int, ...], list[IWElement]]]:
    """``(mu, sorted Perm(mu) minus Adm(mu))`` for each candidate with a nonempty difference."""
    found = []
    for mu in mu_candidates:
        mu = tuple(mu)
        diff = permissible_set(ctx, mu) - admissible_set(ctx, mu)
        if diff:
            found.append((mu, sorted(diff, key=lambda w: sort_key(ctx, w))))
    return found
