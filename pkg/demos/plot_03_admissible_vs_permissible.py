"""
Admissible equals permissible for the standard cocharacter
==========================================================

For mu = (1, 0, ..., 0) in the even and odd orthogonal groups the two sets
coincide.  Here they are computed independently and compared.
"""

import time

from alcove_lab import GroupCtx, admissible_set, permissible_set

print(f"{'group':6} {'|Adm|':>6} {'|Perm|':>7}  equal  seconds")
for fam in "DB":
    for n in (2, 3, 4):
        ctx = GroupCtx(fam, n)
        mu = (1,) + (0,) * (n - 1)
        t0 = time.perf_counter()
        adm, perm = admissible_set(ctx, mu), permissible_set(ctx, mu)
        print(f"{str(ctx):6} {len(adm):6} {len(perm):7}  {adm == perm!s:5}  {time.perf_counter() - t0:.2f}")
