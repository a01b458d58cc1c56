"""
Root data of the split classical families in coordinates on ``Z^n``.

=========  =============  =================  =========================
family     group          finite Weyl group  coroot lattice
=========  =============  =================  =========================
``A``      ``GL_m``       ``S_m``            sum of entries is 0
``B``      ``O_{2n+1}``   ``S*_{2n}``        sum of entries is even
``C``      ``GSp_{2n}``   ``S*_{2n}``        all of ``Z^n``
``D``      ``O_{2n}``     ``S*_{2n}``        sum of entries is even
=========  =============  =================  =========================

For ``D`` the Iwahori-Weyl group uses all of ``S*_{2n}`` as linear parts
while the affine Weyl group, Weyl orbits and convex hulls use the even
subgroup ``S°_{2n}``.

All alcove-point arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .signed_weyl import SignedPerm, all_perms, all_signed_perms

__all__ = [
    "FAMILIES",
    "GroupCtx",
    "AffineFunctional",
    "parse_ctx",
    "coroot",
    "reflection_perm",
    "in_coroot_lattice",
    "weyl_orbit",
    "in_convex_hull",
    "dominant_rep",
    "is_minuscule",
    "dominant_cocharacters",
    "const_vec",
    "star",
]

FAMILIES = ("A", "B", "C", "D")

Vec = tuple  # tuple of int or Fraction


def _unit(n: int, i: int, c: int = 1) -> tuple[int, ...]:
    v = [0] * n
    v[i] = c
    return tuple(v)


def _add(*vs):
    return tuple(sum(xs) for xs in zip(*vs))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def const_vec(n: int, d) -> tuple:
    """The vector ``(d, d, ..., d)`` of length ``n``."""
    return (d,) * n


def star(v: Sequence) -> tuple:
    """Entry reversal ``v*(i) = v(i*)``."""
    return tuple(reversed(tuple(v)))


@dataclass(frozen=True)
class AffineFunctional:
    """The affine function ``x -> <alpha, x> - d`` on ``R^n``."""

    alpha: tuple[int, ...]
    d: int

    def __call__(self, x) -> Fraction:
        return _dot(self.alpha, x) - self.d

    @property
    def coroot(self) -> tuple[int, ...]:
        return coroot(self.alpha)


@dataclass(frozen=True)
class GroupCtx:
    """A classical family together with its rank.

    >>> GroupCtx("D", 3).simple_roots
    ((1, -1, 0), (0, 1, -1), (0, 1, 1))
    >>> str(GroupCtx("B", 2))
    'B:2'
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family in "BD" and self.rank < 2:
            raise ValueError(f"type {self.family} needs rank n >= 2")

    def __str__(self):
        return f"{self.family}:{self.rank}"

    @property
    def n(self) -> int:
        return self.rank

    # -- roots ------------------------------------------------------------

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n, f = self.n, self.family
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                roots.append(_add(_unit(n, i), _unit(n, j, -1)))
                if f != "A":
                    roots.append(_add(_unit(n, i), _unit(n, j)))
            if f == "B":
                roots.append(_unit(n, i))
            elif f == "C":
                roots.append(_unit(n, i, 2))
        return tuple(roots)

    @cached_property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        n, f = self.n, self.family
        out = [_add(_unit(n, i), _unit(n, i + 1, -1)) for i in range(n - 1)]
        if f == "B":
            out.append(_unit(n, n - 1))
        elif f == "C":
            out.append(_unit(n, n - 1, 2))
        elif f == "D":
            out.append(_add(_unit(n, n - 2), _unit(n, n - 1)))
        return tuple(out)

    @cached_property
    def simple_coroots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(coroot(a) for a in self.simple_roots)

    @cached_property
    def highest_roots(self) -> tuple[tuple[int, ...], ...]:
        """Highest root of each irreducible component (two for ``D_2``)."""
        n, f = self.n, self.family
        if f == "A":
            return (_add(_unit(n, 0), _unit(n, n - 1, -1)),) if n >= 2 else ()
        if f == "C":
            return (_unit(n, 0, 2),)
        if f == "D" and n == 2:
            return ((1, 1), (1, -1))
        return (_add(_unit(n, 0), _unit(n, 1)),)

    @cached_property
    def walls(self) -> tuple[AffineFunctional, ...]:
        """Affine simple roots: positive on the base alcove, one per wall."""
        out = [AffineFunctional(a, 0) for a in self.simple_roots]
        out += [AffineFunctional(tuple(-x for x in t), -1) for t in self.highest_roots]
        return tuple(out)

    # -- base alcove ------------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        """Vertices of the base alcove (type A: modulo the central line)."""
        n, f = self.n, self.family
        half = Fraction(1, 2)

        def halves(i):
            return tuple([half] * i + [Fraction(0)] * (n - i))

        zero = tuple(Fraction(0) for _ in range(n))
        one = tuple([Fraction(1)] + [Fraction(0)] * (n - 1))
        if f == "A":
            return tuple(tuple(Fraction(1 if j < k else 0) for j in range(n)) for k in range(n))
        if f == "C":
            return tuple(halves(i) for i in range(n + 1))
        if f == "B":
            return (zero, one) + tuple(halves(i) for i in range(2, n + 1))
        # D: a_0, a_0', a_i (2 <= i <= n-2), a_n, a_n'
        a_nprime = tuple([half] * (n - 1) + [-half])
        return (zero, one) + tuple(halves(i) for i in range(2, n - 1)) + (halves(n), a_nprime)

    @cached_property
    def barycenter(self) -> tuple[Fraction, ...]:
        vs = self.vertices
        return tuple(sum(c) / len(vs) for c in zip(*vs))

    @cached_property
    def _bary_scaled(self) -> tuple[int, tuple[int, ...]]:
        b = self.barycenter
        den = 1
        for x in b:
            den = math.lcm(den, x.denominator)
        return den, tuple(int(x * den) for x in b)

    # -- finite Weyl groups -----------------------------------------------

    def weyl_group(self) -> Iterator[SignedPerm]:
        """The group whose orbits and hulls enter Adm/Perm (``S°`` for ``D``)."""
        if self.family == "A":
            return all_perms(self.n)
        return all_signed_perms(self.n, even_only=self.family == "D")

    def linear_group(self) -> Iterator[SignedPerm]:
        """All linear parts of the Iwahori-Weyl group."""
        if self.family == "A":
            return all_perms(self.n)
        return all_signed_perms(self.n)

    def in_affine_linear(self, s: SignedPerm) -> bool:
        """Whether ``s`` is a linear part of an affine Weyl group element."""
        if s.n != self.n:
            raise ValueError("rank mismatch")
        if self.family == "A":
            return s.num_flips() == 0
        if self.family == "D":
            return s.is_even()
        return True


def parse_ctx(text: str) -> GroupCtx:
    """Parse the compact form ``"D:4"``."""
    try:
        fam, rank = text.strip().split(":")
        return GroupCtx(fam.strip().upper(), int(rank))
    except (ValueError, TypeError) as exc:
        raise ValueError(f"bad group context {text!r}: {exc}") from None


def coroot(alpha: Sequence[int]) -> tuple[int, ...]:
    """``2 alpha / (alpha, alpha)`` for the standard inner product."""
    nn = _dot(alpha, alpha)
    out = []
    for x in alpha:
        if (2 * x) % nn:
            raise ValueError(f"{alpha} is not a root of a classical system")
        out.append(2 * x // nn)
    return tuple(out)


def reflection_perm(alpha: Sequence[int]) -> SignedPerm:
    """The linear reflection ``x -> x - <alpha, x> alpha^vee`` as a signed permutation."""
    av = coroot(alpha)
    n = len(alpha)
    window = []
    for k in range(n):
        img = [(1 if j == k else 0) - alpha[k] * av[j] for j in range(n)]
        nz = [(j, c) for j, c in enumerate(img) if c]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            raise ValueError(f"reflection in {alpha} is not a signed permutation")
        j, c = nz[0]
        window.append(c * (j + 1))
    return SignedPerm(tuple(window))


def _check_len(ctx: GroupCtx, v: Sequence) -> None:
    if len(v) != ctx.n:
        raise ValueError(f"vector {tuple(v)} has length {len(v)}, expected {ctx.n}")


def in_coroot_lattice(ctx: GroupCtx, v: Sequence) -> bool:
    _check_len(ctx, v)
    if any(Fraction(x).denominator != 1 for x in v):
        return False
    s = sum(int(x) for x in v)
    if ctx.family == "A":
        return s == 0
    if ctx.family == "C":
        return True
    return s % 2 == 0


def weyl_orbit(ctx: GroupCtx, mu: Sequence) -> frozenset:
    _check_len(ctx, mu)
    mu = tuple(mu)
    return frozenset(s.act(mu) for s in ctx.weyl_group())


def dominant_rep(ctx: GroupCtx, x: Sequence) -> tuple:
    """The dominant element of the Weyl orbit of ``x``.

    >>> dominant_rep(GroupCtx("B", 3), (0, -2, 1))
    (2, 1, 0)
    >>> dominant_rep(GroupCtx("D", 2), (1, -1))
    (1, -1)
    """
    _check_len(ctx, x)
    if ctx.family == "A":
        return tuple(sorted(x, reverse=True))
    out = sorted((abs(c) for c in x), reverse=True)
    if ctx.family == "D":
        negatives = sum(1 for c in x if c < 0)
        if negatives % 2 and all(c != 0 for c in x):
            out[-1] = -out[-1]
    return tuple(out)


def is_dominant(ctx: GroupCtx, x: Sequence) -> bool:
    return all(_dot(a, x) >= 0 for a in ctx.simple_roots)


def _dominance_coefficients(ctx: GroupCtx, d: Sequence) -> list[Fraction] | None:
    """Coefficients of ``d`` in the simple coroot basis, or None if ``d`` is off their span."""
    n, f = ctx.n, ctx.family
    p = [Fraction(0)] * (n + 1)
    for i, x in enumerate(d):
        p[i + 1] = p[i] + Fraction(x)
    if f == "A":
        return p[1:n] if p[n] == 0 else None
    if f == "C":
        return p[1:n + 1]
    if f == "B":
        return p[1:n] + [p[n] / 2]
    # D: e_i - e_{i+1} (i <= n-2), e_{n-1} - e_n, e_{n-1} + e_n
    return p[1:n - 1] + [(p[n - 1] - Fraction(d[n - 1])) / 2, p[n] / 2]


def _is_e1_orbit(ctx: GroupCtx, mu: Sequence) -> bool:
    return ctx.family in "BD" and dominant_rep(ctx, mu) == _unit(ctx.n, 0)


def in_convex_hull(ctx: GroupCtx, mu: Sequence, x: Sequence) -> bool:
    """Whether ``x`` lies in the convex hull of the Weyl orbit of ``mu``.

    Uses the dominance criterion: ``mu+ - x+`` must be a nonnegative
    combination of simple coroots.

    >>> D3 = GroupCtx("D", 3)
    >>> in_convex_hull(D3, (1, 0, 0), (Fraction(1, 2), Fraction(-1, 2), 0))
    True
    >>> in_convex_hull(D3, (1, 0, 0), (1, 1, 0))
    False
    """
    _check_len(ctx, mu)
    _check_len(ctx, x)
    if _is_e1_orbit(ctx, mu):
        return sum(abs(Fraction(c)) for c in x) <= 1
    mp = dominant_rep(ctx, mu)
    xp = dominant_rep(ctx, [Fraction(c) for c in x])
    coeffs = _dominance_coefficients(ctx, [a - b for a, b in zip(mp, xp)])
    return coeffs is not None and all(c >= 0 for c in coeffs)


def is_minuscule(ctx: GroupCtx, mu: Sequence) -> bool:
    _check_len(ctx, mu)
    return all(_dot(a, mu) in (-1, 0, 1) for a in ctx.positive_roots)


def dominant_cocharacters(ctx: GroupCtx, entries: Iterable[int]) -> list[tuple[int, ...]]:
    """Dominant integer vectors with all entries drawn from ``entries``."""
    vals = sorted(set(entries))
    return sorted(
        (v for v in itertools.product(vals, repeat=ctx.n) if is_dominant(ctx, v)),
        key=lambda v: (sum(abs(c) for c in v), v),
    )
