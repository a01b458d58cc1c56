"""
Length and Bruhat order
=======================

Lengths come from stripping left descents, which also produces a reduced
word and the length-zero part.  The Bruhat order is checked against the
subword property.
"""

from alcove_lab import GroupCtx, translation
from alcove_lab import bruhat, oracle

for text in ("D:2", "D:3", "B:3", "C:2", "A:3"):
    ctx = GroupCtx(text[0], int(text[2:]))
    mu = (1,) + (0,) * (ctx.n - 1)
    rw = bruhat.omega_decompose(ctx, translation(mu))
    print(f"{text}: length(t_{mu}) = {len(rw)}  word {rw.letters}  omega {rw.omega}")

ctx = GroupCtx("D", 2)
t = translation((1, 0))
below = sorted(w for w in bruhat.ball(ctx, 2, t) if bruhat.leq(ctx, w, t))
print(f"\nelements below t_(1,0) in D:2 ({len(below)}):")
for w in below:
    assert oracle.leq_subword(ctx, w, t)
    print("  ", w, "length", bruhat.length(ctx, w))
