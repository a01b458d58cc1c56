"""
Lifting permissible elements to translations
============================================

Every permissible non-translation element can be pushed up in the Bruhat
order by a reflection that keeps it permissible and keeps its translation
part.  Iterating reaches the translation element itself.
"""

from alcove_lab import GroupCtx, bruhat, lift_chain, permissible_set

ctx = GroupCtx("D", 3)
perm = sorted(permissible_set(ctx, (1, 0, 0)), key=lambda w: -bruhat.length(ctx, w))
longest_chain = max(perm, key=lambda w: len(lift_chain(w)))

w = perm[-1]  # a shortest element
for start in (w, longest_chain):
    print("start", start, "length", bruhat.length(ctx, start))
    for step in lift_chain(start):
        print(f"  reflect {step.root!r:>12} -> {step.after}  length {bruhat.length(ctx, step.after)}")
    print()
