"""
Command-line front end.

    alcove-lab adm --ctx D:3 --mu 1,0,0 --format json
    alcove-lab perm --ctx B:2 --mu 0,0
    alcove-lab compare --ctx B:3 --mu 1,1,1
    alcove-lab lift --ctx D:3 --element '{"t":[1,0,0],"s":[2,1,3]}'
    alcove-lab steinberg --n 2 --maxlen 4
    alcove-lab search-gap --ctx B:3 --max-entry 2

Exit codes: 0 success (``compare``: sets equal; ``steinberg``: no
violations), 1 ``compare`` found ``Adm != Perm`` or ``steinberg`` found a
violation, 2 invalid input, 3 a size guard was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import bruhat, oracle
from .adm_perm import (
    admissible_set,
    check_bruhat_inheritance,
    e1,
    is_admissible,
    is_permissible_def,
    lift_chain,
    permissible_set,
    search_gap,
    sort_key,
)
from .errors import GuardExceeded, NotPermissible, guard
from .iwahori_weyl import IWElement, translation
from .root_data import GroupCtx, dominant_cocharacters, parse_ctx
from .signed_weyl import SignedPerm

SCHEMA = "alcove-lab/1"

EXIT_OK, EXIT_DIFFER, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(ValueError):
    pass


# -- encoding -------------------------------------------------------------------------


def encode_element(ctx: GroupCtx, w: IWElement) -> dict:
    return {"ctx": str(ctx), "t": list(w.t), "s": list(w.s.window)}


def decode_element(obj, ctx: GroupCtx | None = None) -> tuple[GroupCtx, IWElement]:
    """Parse ``{"ctx": "D:3", "t": [...], "s": [...]}`` (``ctx`` optional if given)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    c = parse_ctx(obj["ctx"]) if "ctx" in obj else ctx
    if c is None:
        raise InputError("element has no ctx and none was given")
    if ctx is not None and c != ctx:
        raise InputError(f"element ctx {c} does not match {ctx}")
    w = IWElement(tuple(obj["t"]), SignedPerm(tuple(obj["s"])))
    if w.n != c.n:
        raise InputError(f"element of rank {w.n} does not fit {c}")
    return c, w


def _sorted(ctx, ws):
    return sorted(ws, key=lambda w: sort_key(ctx, w))


def _parse_mu(text: str, ctx: GroupCtx) -> tuple[int, ...]:
    try:
        mu = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"malformed cocharacter {text!r}") from None
    if len(mu) != ctx.n:
        raise InputError(f"cocharacter {mu} has length {len(mu)}, {ctx} needs {ctx.n}")
    return mu


# -- set output -----------------------------------------------------------------------


def _render_set(ctx, mu, kind, elems, fmt, other) -> str:
    elems = _sorted(ctx, elems)
    if fmt == "json":
        doc = {"schema": SCHEMA, "ctx": str(ctx), "mu": list(mu), "count": len(elems),
               kind: [encode_element(ctx, w) for w in elems]}
        return json.dumps(doc) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["ctx", "translation", "window", "length", "in_adm", "in_perm"])
        for w in elems:
            in_adm = True if kind == "adm" else other(w)
            in_perm = True if kind == "perm" else other(w)
            wr.writerow([str(ctx), " ".join(map(str, w.t)), " ".join(map(str, w.s.window)),
                         bruhat.length(ctx, w), str(in_adm).lower(), str(in_perm).lower()])
        return buf.getvalue()
    name = "Adm" if kind == "adm" else "Perm"
    lines = [f"# |{name}({','.join(map(str, mu))})| = {len(elems)} in {ctx}"]
    for w in elems:
        lines.append(f"t={list(w.t)} s={list(w.s.window)} len={bruhat.length(ctx, w)}")
    return "\n".join(lines) + "\n"


def cmd_adm(args, out) -> int:
    ctx = parse_ctx(args.ctx)
    mu = _parse_mu(args.mu, ctx)
    elems = oracle.admissible_bruteforce(ctx, mu) if args.oracle else admissible_set(ctx, mu)
    out.write(_render_set(ctx, mu, "adm", elems, args.format,
                          lambda w: is_permissible_def(ctx, mu, w)))
    return EXIT_OK


def cmd_perm(args, out) -> int:
    ctx = parse_ctx(args.ctx)
    mu = _parse_mu(args.mu, ctx)
    hull = oracle.hull_membership_vertices if args.oracle else None
    elems = permissible_set(ctx, mu, hull) if hull else permissible_set(ctx, mu)
    out.write(_render_set(ctx, mu, "perm", elems, args.format,
                          lambda w: is_admissible(ctx, mu, w)))
    return EXIT_OK


def cmd_compare(args, out) -> int:
    ctx = parse_ctx(args.ctx)
    mu = _parse_mu(args.mu, ctx)
    adm = oracle.admissible_bruteforce(ctx, mu) if args.oracle else admissible_set(ctx, mu)
    perm = permissible_set(ctx, mu)
    equal = adm == perm
    witnesses = _sorted(ctx, perm - adm)
    if args.format == "json":
        doc = {"schema": SCHEMA, "ctx": str(ctx), "mu": list(mu),
               "adm": [encode_element(ctx, w) for w in _sorted(ctx, adm)],
               "perm": [encode_element(ctx, w) for w in _sorted(ctx, perm)],
               "equal": equal, "contained": adm <= perm,
               "witnesses": [encode_element(ctx, w) for w in witnesses]}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"ctx {ctx}  mu {list(mu)}\n")
        out.write(f"|Adm| = {len(adm)}\n|Perm| = {len(perm)}\n")
        verdict = "Adm = Perm" if equal else ("Adm < Perm (strict)" if adm <= perm else "Adm not contained in Perm")
        out.write(f"verdict: {verdict}\n")
        for w in witnesses:
            out.write(f"witness t={list(w.t)} s={list(w.s.window)} len={bruhat.length(ctx, w)}\n")
    return EXIT_OK if equal else EXIT_DIFFER


def cmd_lift(args, out) -> int:
    ctx = parse_ctx(args.ctx)
    if ctx.family != "D":
        raise InputError("lift works in type D only")
    try:
        _, w = decode_element(args.element, ctx)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"malformed element: {exc}") from None
    if not is_permissible_def(ctx, e1(ctx.n), w):
        raise InputError(f"element {encode_element(ctx, w)} is not permissible for {list(e1(ctx.n))}")
    steps = lift_chain(w)
    final = steps[-1].after if steps else w
    if args.format == "json":
        doc = {"schema": SCHEMA, "ctx": str(ctx), "start": encode_element(ctx, w),
               "steps": [{"root": st.root.as_dict(),
                          "before": encode_element(ctx, st.before),
                          "after": encode_element(ctx, st.after),
                          "length_before": bruhat.length(ctx, st.before),
                          "length_after": bruhat.length(ctx, st.after)} for st in steps],
               "final": encode_element(ctx, final)}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"start t={list(w.t)} s={list(w.s.window)} len={bruhat.length(ctx, w)}\n")
        for st in steps:
            r = st.root
            out.write(f"reflect ({r.i},{r.j};{r.d}) -> t={list(st.after.t)} s={list(st.after.s.window)}"
                      f" len={bruhat.length(ctx, st.after)}\n")
        out.write(f"final t={list(final.t)} s={list(final.s.window)}\n")
    return EXIT_OK


def cmd_steinberg(args, out) -> int:
    if args.n < 2:
        raise InputError("--n must be at least 2")
    rep = check_bruhat_inheritance(args.n, args.maxlen)
    if args.format == "json":
        B, D = GroupCtx("B", args.n), GroupCtx("D", args.n + 1)
        doc = {"schema": SCHEMA, "n": args.n, "maxlen": args.maxlen, "elements": rep.elements,
               "pairs": rep.pairs, "violations": [
                   {"x": encode_element(B, x), "y": encode_element(B, y), "leq_odd": lb, "leq_even": ld}
                   for x, y, lb, ld in rep.violations]}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"B:{args.n} -> D:{args.n + 1}, maxlen {args.maxlen}: {rep.elements} elements, "
                  f"{rep.pairs} pairs, {len(rep.violations)} violations\n")
    return EXIT_OK if rep.ok else EXIT_DIFFER


def cmd_search_gap(args, out) -> int:
    ctx = parse_ctx(args.ctx)
    if args.mu:
        cands = [_parse_mu(m, ctx) for m in args.mu]
    else:
        cands = dominant_cocharacters(ctx, range(0, args.max_entry + 1))
    limit = guard(bruhat.MAX_BALL_LENGTH)
    ok, skipped = [], []
    for mu in cands:
        (ok if bruhat.length(ctx, translation(mu)) <= limit else skipped).append(mu)
    found = search_gap(ctx, ok)
    if args.format == "json":
        doc = {"schema": SCHEMA, "ctx": str(ctx), "scanned": [list(m) for m in ok],
               "skipped": [list(m) for m in skipped],
               "gaps": [{"mu": list(mu), "witnesses": [encode_element(ctx, w) for w in ws]}
                        for mu, ws in found]}
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"scanned {len(ok)} cocharacters in {ctx}, skipped {len(skipped)} over the length guard\n")
        for mu, ws in found:
            out.write(f"mu={list(mu)}: {len(ws)} permissible, non-admissible elements\n")
            for w in ws:
                out.write(f"  t={list(w.t)} s={list(w.s.window)}\n")
    return EXIT_OK


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alcove-lab", description="Admissible and permissible sets.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="text"):
        sp.add_argument("--format", choices=("json", "csv", "text"), default=default)

    for name, func in (("adm", cmd_adm), ("perm", cmd_perm), ("compare", cmd_compare)):
        sp = sub.add_parser(name)
        sp.add_argument("--ctx", required=True, help="family:rank, e.g. D:3")
        sp.add_argument("--mu", required=True, help="comma-separated integers")
        sp.add_argument("--oracle", action="store_true", help="use the brute-force reference path")
        fmt(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("lift")
    sp.add_argument("--ctx", required=True)
    sp.add_argument("--element", required=True, help='JSON, e.g. {"t":[1,0,0],"s":[2,1,3]}')
    fmt(sp)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("steinberg")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--maxlen", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_steinberg)

    sp = sub.add_parser("search-gap")
    sp.add_argument("--ctx", required=True)
    sp.add_argument("--max-entry", type=int, default=2)
    sp.add_argument("--mu", action="append", help="explicit candidate (repeatable)")
    fmt(sp)
    sp.set_defaults(func=cmd_search_gap)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, NotPermissible, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
