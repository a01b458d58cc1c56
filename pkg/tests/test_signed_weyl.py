from hypothesis import given, strategies as st

from alcove_lab.signed_weyl import (
    SignedPerm,
    act,
    all_perms,
    all_signed_perms,
    compose,
    is_even_in_S2n,
)
import pytest


@st.composite
def signed_perms(draw, n=4):
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPerm(tuple(p * e for p, e in zip(perm, signs)))


def test_compose_identity_left():
    b = SignedPerm((-3, 1, 2))
    assert compose(SignedPerm.identity(3), b) == b


@pytest.mark.parametrize("w", [(2, 1), (-1, 2)])
def test_involutions(w):
    a = SignedPerm(w)
    assert compose(a, a).is_identity()


def test_act_examples():
    assert act(SignedPerm.identity(2), (5, 7)) == (5, 7)
    assert act(SignedPerm((2, 1)), (5, 7)) == (7, 5)
    assert act(SignedPerm((-1, 2)), (5, 7)) == (-5, 7)


def test_parity_examples():
    assert is_even_in_S2n(SignedPerm.identity(3))
    assert not is_even_in_S2n(SignedPerm((-1, 2)))
    assert is_even_in_S2n(SignedPerm((-1, -2)))


def test_enumeration_counts():
    assert len(list(all_signed_perms(2))) == 8
    assert len(list(all_signed_perms(2, even_only=True))) == 4
    assert len(list(all_signed_perms(3))) == 48
    assert len(list(all_perms(4))) == 24


def test_letters_respect_star():
    s = SignedPerm((-2, 3, 1))
    m = 2 * s.n + 1
    for i in range(1, 2 * s.n + 1):
        assert s(m - i) == m - s(i)


@pytest.mark.parametrize("bad", [(1, 1), (0, 2), (1, 3)])
def test_invalid_windows(bad):
    with pytest.raises(ValueError):
        SignedPerm(bad)


@given(signed_perms(), signed_perms())
def test_action_is_homomorphism(a, b):
    v = (3, -1, 4, 10)
    assert act(compose(a, b), v) == act(a, act(b, v))


@given(signed_perms())
def test_inverse(a):
    assert compose(a, a.inverse()).is_identity()
    assert compose(a.inverse(), a).is_identity()


@given(signed_perms(), signed_perms())
def test_parity_is_character(a, b):
    assert is_even_in_S2n(a * b) == (is_even_in_S2n(a) == is_even_in_S2n(b))


@given(signed_perms())
def test_parity_matches_letters(a):
    letters = a.letters()
    inv = sum(1 for i in range(len(letters)) for j in range(i + 1, len(letters)) if letters[i] > letters[j])
    assert (inv % 2 == 0) == a.is_even()
    assert SignedPerm.from_letters(letters) == a
