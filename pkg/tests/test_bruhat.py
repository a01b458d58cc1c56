import random

import pytest

from alcove_lab import bruhat, oracle
from alcove_lab.adm_perm import admissible_set
from alcove_lab.errors import GUARD_ENV, GuardExceeded
from alcove_lab.iwahori_weyl import IWElement, translation
from alcove_lab.root_data import GroupCtx

D2, D3, B2 = GroupCtx("D", 2), GroupCtx("D", 3), GroupCtx("B", 2)


def test_length_examples():
    for ctx in (D2, D3, B2):
        assert bruhat.length(ctx, IWElement.identity(ctx.n)) == 0
        assert all(bruhat.length(ctx, s) == 1 for s in bruhat.simple_reflections(ctx))


@pytest.mark.parametrize(
    "ctx,mu,expected",
    [
        (GroupCtx("D", 2), (1, 0), 2),
        (GroupCtx("D", 3), (1, 0, 0), 4),
        (GroupCtx("D", 4), (1, 0, 0, 0), 6),
        (GroupCtx("B", 2), (1, 0), 3),
        (GroupCtx("B", 3), (1, 0, 0), 5),
        (GroupCtx("C", 2), (1, 0), 4),
        (GroupCtx("A", 3), (1, 0, 0), 2),
    ],
)
def test_translation_lengths(ctx, mu, expected):
    assert bruhat.length(ctx, translation(mu)) == expected


def test_length_matches_hyperplane_count():
    for ctx in (D2, D3, B2, GroupCtx("C", 2), GroupCtx("A", 3)):
        for w in bruhat.ball(ctx, 5):
            assert bruhat.length(ctx, w) == oracle.length_hyperplanes(ctx, w)
    assert bruhat.length(D3, translation((1, 0, 0))) == oracle.length_hyperplanes(D3, translation((1, 0, 0)), 2)


def test_omega_decompose_examples():
    rw = bruhat.omega_decompose(D3, IWElement.identity(3))
    assert rw.letters == () and rw.omega == IWElement.identity(3)
    for k, s in enumerate(bruhat.simple_reflections(D3)):
        rw = bruhat.omega_decompose(D3, s)
        assert rw.letters == (k,) and rw.omega == IWElement.identity(3)
    t = translation((1, 0))
    rw = bruhat.omega_decompose(D2, t)
    assert rw.letters and rw.omega != IWElement.identity(2)
    assert bruhat.length(D2, rw.omega) == 0
    assert bruhat.evaluate_word(D2, rw.letters, rw.omega) == t
    b = D2.barycenter
    assert rw.omega.act(b) == b


def test_same_coset_examples():
    t = translation((1, 0, 0))
    assert not bruhat.same_wa_coset(D3, t, IWElement.identity(3))
    assert bruhat.same_wa_coset(D3, t, translation((0, 0, -1)))
    assert bruhat.same_wa_coset(D3, t, t)


def test_leq_examples():
    ball = bruhat.ball(D3, 4)
    e = IWElement.identity(3)
    for w in ball:
        assert bruhat.leq(D3, w, w)
        assert bruhat.leq(D3, e, w)
    assert not bruhat.leq(D3, e, translation((1, 0, 0)))


def test_leq_random_pairs_agree_with_subwords():
    rng = random.Random(3)
    elems = sorted(bruhat.ball(D2, 5) | bruhat.ball(D2, 5, translation((1, 0))))
    for _ in range(400):
        w, v = rng.choice(elems), rng.choice(elems)
        assert bruhat.leq(D2, w, v) == oracle.leq_subword(D2, w, v)


def test_leq_is_partial_order_on_small_ball():
    elems = sorted(bruhat.ball(B2, 3))
    for x in elems:
        for y in elems:
            if x != y and bruhat.leq(B2, x, y):
                assert not bruhat.leq(B2, y, x)
                assert bruhat.length(B2, x) < bruhat.length(B2, y)


def test_ball_examples():
    assert bruhat.ball(D2, 0) == {IWElement.identity(2)}
    one = bruhat.ball(D2, 1)
    assert one == {IWElement.identity(2)} | set(bruhat.simple_reflections(D2))
    assert len(one) == 1 + len(D2.walls)
    t = translation((1, 0, 0))
    lt = bruhat.length(D3, t)
    assert admissible_set(D3, (1, 0, 0)) <= bruhat.ball(D3, lt, t)
    assert all(bruhat.length(D3, w) == 0 for w in bruhat.ball(D3, 0, t))


def test_ball_guard(monkeypatch):
    monkeypatch.delenv(GUARD_ENV, raising=False)
    with pytest.raises(GuardExceeded):
        bruhat.ball(D2, bruhat.MAX_BALL_LENGTH + 1)


def test_rank_mismatch():
    with pytest.raises(ValueError):
        bruhat.length(D3, IWElement.identity(2))
