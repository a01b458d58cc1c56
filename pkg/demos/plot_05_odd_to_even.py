"""
From the odd orthogonal group to the even one
=============================================

The odd group embeds into the even group of one higher rank as the fixed
points of an involution, and the embedding respects the Bruhat order.
"""

from alcove_lab import GroupCtx, is_permissible_def, permissible_set
from alcove_lab.adm_perm import check_bruhat_inheritance, odd_perm_implies_even_perm, steinberg_embed

for w in sorted(permissible_set(GroupCtx("B", 2), (1, 0)))[:5]:
    v = steinberg_embed(w)
    print(f"{w}  ->  {v}   permissible in D:3: {is_permissible_def(GroupCtx('D', 3), (1, 0, 0), v)}")

print()
for maxlen in range(5):
    rep = check_bruhat_inheritance(2, maxlen)
    print(f"maxlen {maxlen}: {rep.elements:3} elements, {rep.pairs:5} pairs, {len(rep.violations)} violations")

print("\nall of Perm in B:3 passes the odd-to-even check:",
      all(odd_perm_implies_even_perm(w) for w in permissible_set(GroupCtx("B", 3), (1, 0, 0))))
