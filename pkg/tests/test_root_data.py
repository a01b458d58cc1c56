from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from alcove_lab.root_data import (
    GroupCtx,
    coroot,
    dominant_cocharacters,
    dominant_rep,
    in_convex_hull,
    in_coroot_lattice,
    is_dominant,
    is_minuscule,
    parse_ctx,
    weyl_orbit,
)

D2, D3, D4 = GroupCtx("D", 2), GroupCtx("D", 3), GroupCtx("D", 4)
B2, B3 = GroupCtx("B", 2), GroupCtx("B", 3)
ALL_SMALL = [GroupCtx(f, n) for f in "ABCD" for n in (2, 3)]


def test_parse_and_str_roundtrip():
    for text in ("D:4", "B:3", "A:5", "C:3"):
        assert str(parse_ctx(text)) == text
    for bad in ("E:3", "D", "D:x", "D:1", "B:1"):
        with pytest.raises(ValueError):
            parse_ctx(bad)


def test_coroot_lattice_examples():
    assert in_coroot_lattice(D3, (1, 1, 0))
    assert not in_coroot_lattice(D3, (1, 0, 0))
    assert in_coroot_lattice(D3, (0, 0, 0))
    assert not in_coroot_lattice(B3, (0, 1, 0))
    assert in_coroot_lattice(GroupCtx("C", 3), (0, 1, 0))
    assert in_coroot_lattice(GroupCtx("A", 3), (1, -1, 0))
    assert not in_coroot_lattice(GroupCtx("A", 3), (1, 0, 0))


def test_orbit_examples():
    e = {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}
    assert set(weyl_orbit(D3, (1, 0, 0))) == e
    assert set(weyl_orbit(B2, (1, 0))) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    orb = weyl_orbit(D4, (1, 1, 1, 1))
    assert len(orb) == 8
    assert all(sum(1 for c in v if c < 0) % 2 == 0 for v in orb)
    assert len(weyl_orbit(GroupCtx("B", 4), (1, 1, 1, 1))) == 16


def test_hull_examples():
    assert in_convex_hull(D3, (1, 0, 0), (F(1, 2), F(-1, 2), 0))
    assert not in_convex_hull(D3, (1, 0, 0), (1, 1, 0))
    for ctx in ALL_SMALL:
        for mu in dominant_cocharacters(ctx, (0, 1, 2)):
            assert in_convex_hull(ctx, mu, mu)


def test_hull_d_half_spin():
    # the D4 orbit of (1,1,1,1) excludes (1,1,1,-1)
    assert not in_convex_hull(D4, (1, 1, 1, 1), (1, 1, 1, -1))
    assert in_convex_hull(D4, (1, 1, 1, 1), (1, 1, 0, 0))


def test_dominant_rep_examples():
    assert dominant_rep(B3, (0, -2, 1)) == (2, 1, 0)
    assert dominant_rep(D2, (-1, 0)) == (1, 0)
    assert dominant_rep(D3, (1, 1, -1)) == (1, 1, -1)
    for ctx in ALL_SMALL:
        assert dominant_rep(ctx, (0,) * ctx.n) == (0,) * ctx.n


def test_minuscule_examples():
    assert is_minuscule(D4, (1, 0, 0, 0))
    # <x1+x2, (1,1,1,1)> = 2; that weight is minuscule only in the similitude group
    assert not is_minuscule(D4, (1, 1, 1, 1))
    assert not is_minuscule(B3, (2, 0, 0))
    assert is_minuscule(B3, (1, 0, 0))
    assert not is_minuscule(B3, (1, 1, 0))


def test_walls_and_vertices():
    for ctx in ALL_SMALL + [D4]:
        b = ctx.barycenter
        assert all(f(b) > 0 for f in ctx.walls)
        for v in ctx.vertices:
            assert all(f(v) >= 0 for f in ctx.walls)
    assert len(D2.walls) == 4
    assert len(D4.walls) == 5
    assert len(B3.walls) == 4


def test_coroot_formula():
    assert coroot((1, 0)) == (2, 0)
    assert coroot((2, 0)) == (1, 0)
    assert coroot((1, -1)) == (1, -1)


@given(st.sampled_from(ALL_SMALL), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_dominant_rep_is_in_orbit(ctx, v):
    v = tuple(v[: ctx.n])
    d = dominant_rep(ctx, v)
    assert is_dominant(ctx, d)
    assert d in weyl_orbit(ctx, v)
