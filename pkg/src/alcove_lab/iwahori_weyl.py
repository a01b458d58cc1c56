"""
Iwahori-Weyl group elements ``w = t_nu sigma`` and the extended-alcove calculus.

Elements act on ``R^n`` by ``x -> sigma(x) + nu``.  For the orthogonal
families the group embeds in the Iwahori-Weyl group of ``GL_{2n}`` via

    (x_1, ..., x_n) -> (x_1, ..., x_n, -x_n, ..., -x_1)

and the inclusion ``S*_{2n} ⊂ S_{2n}``.  Everything about extended alcoves,
``mu_k`` and ``nu_k`` lives in that ``2n``-dimensional picture; indices
there are 1-based to match ``i* = 2n + 1 - i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidAlcove
from .root_data import AffineFunctional, coroot, reflection_perm
from .signed_weyl import SignedPerm

__all__ = [
    "IWElement",
    "multiply",
    "translation",
    "embed_vec",
    "readout",
    "embed_gl",
    "omega",
    "a_prime",
    "ExtendedAlcove",
    "to_extended_alcove",
    "from_extended_alcove",
    "mu_vectors",
    "nu_vectors",
    "index_sets",
    "basic_inequalities_hold",
    "AffineRoot",
    "affine_reflection",
    "reflection",
    "pairing",
]


@dataclass(frozen=True, order=True)
class IWElement:
    """``t_nu sigma`` with translation part ``t`` and linear part ``s``."""

    t: tuple[int, ...]
    s: SignedPerm

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        object.__setattr__(self, "t", t)
        if not isinstance(self.s, SignedPerm):
            object.__setattr__(self, "s", SignedPerm(tuple(self.s)))
        if len(t) != self.s.n:
            raise ValueError(f"translation {t} and linear part {self.s} have different ranks")

    @classmethod
    def identity(cls, n: int) -> IWElement:
        return cls((0,) * n, SignedPerm.identity(n))

    @classmethod
    def linear(cls, s: SignedPerm) -> IWElement:
        return cls((0,) * s.n, s)

    @property
    def n(self) -> int:
        return len(self.t)

    def __mul__(self, other: IWElement) -> IWElement:
        return multiply(self, other)

    def inverse(self) -> IWElement:
        si = self.s.inverse()
        return IWElement(tuple(-x for x in si.act(self.t)), si)

    def act(self, x: Sequence) -> tuple:
        """Affine action on a point of ``R^n``."""
        return tuple(a + b for a, b in zip(self.s.act(tuple(x)), self.t))

    def is_translation(self) -> bool:
        return self.s.is_identity()

    def translation_part(self) -> IWElement:
        return translation(self.t)

    def __repr__(self):
        return f"IWElement(t={list(self.t)}, s={list(self.s.window)})"


def translation(nu: Sequence[int]) -> IWElement:
    return IWElement(tuple(nu), SignedPerm.identity(len(nu)))


def multiply(w1: IWElement, w2: IWElement) -> IWElement:
    """``t_a s1 * t_b s2 = t_{a + s1(b)} (s1 s2)``."""
    if w1.n != w2.n:
        raise ValueError(f"rank mismatch: {w1.n} != {w2.n}")
    t = tuple(a + b for a, b in zip(w1.t, w1.s.act(w2.t)))
    return IWElement(t, w1.s * w2.s)


# -- the GL_{2n} picture ----------------------------------------------------


def embed_vec(x: Sequence) -> tuple:
    x = tuple(x)
    return x + tuple(-c for c in reversed(x))


def readout(X: Sequence) -> tuple:
    """First ``n`` coordinates of a vector in the image of :func:`embed_vec`."""
    m = len(X)
    if m % 2:
        raise ValueError("expected a vector of even length")
    n = m // 2
    if any(X[i] != -X[m - 1 - i] for i in range(n)):
        raise ValueError(f"{tuple(X)} is not in the image of the embedding")
    return tuple(X[:n])


def embed_gl(w: IWElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Image in ``Z^{2n} x| S_{2n}``: (translation, one-line permutation)."""
    return embed_vec(w.t), w.s.letters()


def _gl_act(letters: Sequence[int], X: Sequence) -> list:
    out = [0] * len(X)
    for i, x in enumerate(X):
        out[letters[i] - 1] = x
    return out


def omega(n: int, k: int) -> tuple[int, ...]:
    """``(1^(k), 0^(2n-k))``."""
    return (1,) * k + (0,) * (2 * n - k)


def a_prime(n: int, k: int) -> tuple[Fraction, ...]:
    """``((1/2)^(k), 0^(2n-2k), (-1/2)^(k))`` for ``0 <= k <= n``."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    h = Fraction(1, 2)
    return (h,) * k + (Fraction(0),) * (2 * n - 2 * k) + (-h,) * k


@dataclass(frozen=True)
class ExtendedAlcove:
    """Vertices ``v_0, ..., v_{2n-1}`` in ``Z^{2n}``; ``v_{2n} := v_0 + 1``."""

    vs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "vs", tuple(tuple(int(c) for c in v) for v in self.vs))

    @property
    def n(self) -> int:
        return len(self.vs) // 2

    def v(self, k: int) -> tuple[int, ...]:
        m = len(self.vs)
        if k == m:
            return tuple(c + 1 for c in self.vs[0])
        return self.vs[k]

    def violations(self) -> list[str]:
        """Names of the failed axioms (empty when the sequence is an extended alcove)."""
        m = len(self.vs)
        bad = []
        if m == 0 or m % 2 or any(len(v) != m for v in self.vs):
            return ["shape: need 2n vectors of length 2n"]
        seq = [self.v(k) for k in range(m + 1)]
        if any(any(a > b for a, b in zip(seq[k - 1], seq[k])) for k in range(1, m + 1)):
            bad.append("A1")
        if any(sum(seq[k]) != sum(seq[k - 1]) + 1 for k in range(1, m + 1)):
            bad.append("A2")
        for k in range(m + 1):
            other = seq[m - k]
            if any(seq[k][i] + other[m - 1 - i] != 1 for i in range(m)):
                bad.append("A3")
                break
        return bad

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise InvalidAlcove(f"not an extended alcove, failed axiom(s): {', '.join(bad)}")


def to_extended_alcove(w: IWElement) -> ExtendedAlcove:
    """The extended alcove ``v_k = w . omega_k``."""
    n = w.n
    v = list(embed_vec(w.t))
    vs = [tuple(v)]
    for k in range(1, 2 * n):
        v[w.s(k) - 1] += 1
        vs.append(tuple(v))
    return ExtendedAlcove(tuple(vs))


def from_extended_alcove(alc: ExtendedAlcove) -> IWElement:
    """The unique element whose extended alcove is ``alc``."""
    alc.validate()
    m = len(alc.vs)
    letters = []
    for k in range(1, m + 1):
        diff = [b - a for a, b in zip(alc.v(k - 1), alc.v(k))]
        letters.append(diff.index(1) + 1)
    s = SignedPerm.from_letters(letters)
    return IWElement(readout(alc.vs[0]), s)


def mu_vectors(w: IWElement) -> list[tuple[int, ...]]:
    """``mu_k = v_k - omega_k`` for ``0 <= k <= 2n``."""
    n = w.n
    alc = to_extended_alcove(w)
    return [tuple(a - b for a, b in zip(alc.v(k), omega(n, k))) for k in range(2 * n + 1)]


def nu_vectors(w: IWElement) -> list[tuple[Fraction, ...]]:
    """``nu_k = (mu_k + mu_{2n-k}) / 2 = w a'_k - a'_k`` for ``0 <= k <= n``."""
    n = w.n
    mus = mu_vectors(w)
    return [tuple(Fraction(a + b, 2) for a, b in zip(mus[k], mus[2 * n - k])) for k in range(n + 1)]


def index_sets(n: int, k: int) -> tuple[list[int], list[int]]:
    """``A_k = {1..k, k*..2n}`` and ``B_k = {k+1..2n-k}``."""
    A = list(range(1, k + 1)) + list(range(2 * n + 1 - k, 2 * n + 1))
    B = list(range(k + 1, 2 * n - k + 1))
    return A, B


def basic_inequalities_hold(w: IWElement) -> bool:
    n = w.n
    mus = mu_vectors(w)
    for k in range(n + 1):
        mu = mus[k]
        A, B = index_sets(n, k)
        for i in A:
            if not -1 <= mu[i - 1] + mu[2 * n - i] <= 0:
                return False
        for i in B:
            if not 0 <= mu[i - 1] + mu[2 * n - i] <= 1:
                return False
    return True


# -- affine roots -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class AffineRoot:
    """``x -> x_i - x_j - d`` on the embedded lattice in ``Z^{2n}``.

    Stored with ``i <= j*`` (so ``i <= n``); ``(i, j; d)`` and
    ``(j*, i*; d)`` name the same root.  With ``j=None`` it is the short
    root ``x_i - d`` of the odd orthogonal group (coroot ``2 e_i``).

    >>> AffineRoot(2, 4, 0, 2) == AffineRoot(1, 3, 0, 2)
    True
    """

    n: int
    i: int
    j: int | None
    d: int

    def __init__(self, i: int, j: int | None, d: int, n: int):
        m = 2 * n
        if j is None:
            if not 1 <= i <= n:
                raise ValueError(f"short root index {i} out of range 1..{n}")
        else:
            if not 1 <= i < j <= m:
                raise ValueError(f"need 1 <= i < j <= 2n, got i={i}, j={j}")
            if j == m + 1 - i:
                raise ValueError(f"j = i* ({i}, {j}) is not a root")
            if i > m + 1 - j:
                i, j = m + 1 - j, m + 1 - i
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "d", d)

    @property
    def alpha(self) -> tuple[int, ...]:
        """Coefficients of the linear part as a functional on ``R^n``."""
        n = self.n
        c = [0] * n
        if self.j is None:
            c[self.i - 1] = 1
            return tuple(c)
        for idx, sign in ((self.i, 1), (self.j, -1)):
            if idx <= n:
                c[idx - 1] += sign
            else:
                c[2 * n - idx] -= sign
        return tuple(c)

    @property
    def linear_part(self) -> AffineRoot:
        return AffineRoot(self.i, self.j, 0, self.n)

    def functional(self) -> AffineFunctional:
        return AffineFunctional(self.alpha, self.d)

    def coroot(self) -> tuple[int, ...]:
        """``alpha^vee`` in ``Z^n``."""
        return coroot(self.alpha)

    def coroot_2n(self) -> tuple[int, ...]:
        """``e_i - e_j + e_{j*} - e_{i*}`` (short roots: ``2e_i - 2e_{i*}``)."""
        return embed_vec(self.coroot())

    def as_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "d": self.d}

    def __repr__(self):
        j = "" if self.j is None else f",{self.j}"
        return f"α̃({self.i}{j};{self.d})"


def pairing(ar: AffineRoot, p: Sequence) -> Fraction:
    """``<ar, p>`` for a point of ``R^n`` or of ``R^{2n}``."""
    n = ar.n
    if len(p) == 2 * n:
        if ar.j is None:
            return Fraction(p[ar.i - 1] - p[2 * n - ar.i], 2) - ar.d
        return p[ar.i - 1] - p[ar.j - 1] - ar.d
    if len(p) == n:
        return ar.functional()(p)
    raise ValueError(f"point of length {len(p)} does not match rank {n}")


def affine_reflection(f: AffineFunctional) -> IWElement:
    """``x -> x - (<alpha, x> - d) alpha^vee`` as ``t_{d alpha^vee} s_alpha``."""
    return IWElement(tuple(f.d * c for c in f.coroot), reflection_perm(f.alpha))


def reflection(ar: AffineRoot) -> IWElement:
    return affine_reflection(ar.functional())
