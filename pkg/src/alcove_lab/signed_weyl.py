"""
Signed permutations of ``1..n`` in window notation.

A signed permutation ``a`` with window ``(a_1, ..., a_n)`` sends the basis
vector ``e_i`` to ``sign(a_i) * e_{|a_i|}``.  Viewed inside ``S_{2n}`` (with
``i* := 2n + 1 - i``) it is the permutation with ``a(i) = a_i`` when
``a_i > 0`` and ``a(i) = |a_i|*`` otherwise, extended by ``a(i*) = a(i)*``.

>>> a = SignedPerm((2, -1))
>>> a.letters()
(2, 4, 1, 3)
>>> a.act((5, 7))
(-7, 5)
>>> (a * a).window
(-1, -2)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import GuardExceeded

__all__ = [
    "SignedPerm",
    "compose",
    "act",
    "is_even_in_S2n",
    "all_signed_perms",
    "all_perms",
    "MAX_ENUM_RANK",
]

# enumeration guard: 2^8 * 8! is already ~10^7 elements
MAX_ENUM_RANK = 8


@dataclass(frozen=True, order=True)
class SignedPerm:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", w)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a signed permutation window: {list(w)}")

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_letters(cls, images: Sequence[int]) -> SignedPerm:
        """Build from the 2n-letter form ``(a(1), ..., a(2n))``."""
        m = len(images)
        if m % 2:
            raise ValueError("2n-letter form needs an even number of letters")
        if sorted(images) != list(range(1, m + 1)):
            raise ValueError("not a permutation of 1..2n")
        n = m // 2
        for i in range(1, m + 1):
            if images[m - i] != m + 1 - images[i - 1]:
                raise ValueError("permutation does not commute with i -> i*")
        return cls(tuple(x if x <= n else -(m + 1 - x) for x in images[:n]))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Image of ``i`` in ``1..2n`` under the 2n-letter form."""
        n = self.n
        if 1 <= i <= n:
            x = self.window[i - 1]
            return x if x > 0 else 2 * n + 1 + x
        if n < i <= 2 * n:
            return 2 * n + 1 - self(2 * n + 1 - i)
        raise IndexError(i)

    def letters(self) -> tuple[int, ...]:
        return tuple(self(i) for i in range(1, 2 * self.n + 1))

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        return compose(self, other)

    def inverse(self) -> SignedPerm:
        inv = [0] * self.n
        for i, x in enumerate(self.window, start=1):
            inv[abs(x) - 1] = i if x > 0 else -i
        return SignedPerm(tuple(inv))

    def act(self, v):
        return act(self, v)

    def num_flips(self) -> int:
        return sum(1 for x in self.window if x < 0)

    def is_even(self) -> bool:
        return is_even_in_S2n(self)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def __repr__(self):
        return f"SignedPerm({list(self.window)})"


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """The product ``a o b``, i.e. ``(a o b)(i) = a(b(i))``."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} != {b.n}")
    aw = a.window
    return SignedPerm(tuple(aw[y - 1] if y > 0 else -aw[-y - 1] for y in b.window))


def act(a: SignedPerm, v):
    """Apply ``a`` to a vector: entry ``i`` moves to slot ``|a_i|`` with sign."""
    if len(v) != a.n:
        raise ValueError(f"length mismatch: vector of length {len(v)}, rank {a.n}")
    out = [0] * a.n
    for x, vi in zip(a.window, v):
        out[abs(x) - 1] = vi if x > 0 else -vi
    return tuple(out)


def is_even_in_S2n(a: SignedPerm) -> bool:
    """Parity of ``a`` as a permutation of ``1..2n``: even iff an even number of flips."""
    return a.num_flips() % 2 == 0


def all_perms(n: int) -> Iterator[SignedPerm]:
    """Unsigned permutations of ``1..n`` (the type A Weyl group)."""
    if n > MAX_ENUM_RANK:
        raise GuardExceeded(f"refusing to enumerate S_{n} (guard {MAX_ENUM_RANK})")
    for p in itertools.permutations(range(1, n + 1)):
        yield SignedPerm(p)


def all_signed_perms(n: int, even_only: bool = False) -> Iterator[SignedPerm]:
    """All ``2^n n!`` signed permutations, or the ``2^(n-1) n!`` even ones."""
    if n > MAX_ENUM_RANK:
        raise GuardExceeded(f"refusing to enumerate signed permutations of rank {n}")
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if even_only and signs.count(-1) % 2:
                continue
            yield SignedPerm(tuple(s * x for s, x in zip(signs, p)))
