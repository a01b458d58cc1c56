"""
Where admissibility and permissibility part ways
================================================

For non-minuscule cocharacters in type B the permissible set can be
strictly larger.  Scan small dominant cocharacters in B:3 and print the
witnesses.
"""

from alcove_lab import GroupCtx, bruhat, translation
from alcove_lab.adm_perm import search_gap
from alcove_lab.root_data import dominant_cocharacters, is_minuscule

ctx = GroupCtx("B", 3)
cands = []
for mu in dominant_cocharacters(ctx, (0, 1, 2)):
    ell = bruhat.length(ctx, translation(mu))
    tag = "scan" if ell <= bruhat.MAX_BALL_LENGTH else "skip"
    print(f"mu={mu}  length(t_mu)={ell:2}  minuscule={is_minuscule(ctx, mu)!s:5}  {tag}")
    if tag == "scan":
        cands.append(mu)

for mu, witnesses in search_gap(ctx, cands):
    print(f"\nPerm strictly larger than Adm at mu={mu}: {len(witnesses)} extra elements")
    for w in witnesses:
        print("  ", w, "length", bruhat.length(ctx, w))
