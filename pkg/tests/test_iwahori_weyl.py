import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from alcove_lab.errors import InvalidAlcove
from alcove_lab.iwahori_weyl import (
    AffineRoot,
    ExtendedAlcove,
    IWElement,
    a_prime,
    basic_inequalities_hold,
    embed_gl,
    from_extended_alcove,
    mu_vectors,
    multiply,
    nu_vectors,
    omega,
    pairing,
    readout,
    reflection,
    to_extended_alcove,
    translation,
)
from alcove_lab.signed_weyl import SignedPerm

from conftest import random_element


@st.composite
def elements(draw, n=3):
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    t = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    return IWElement(tuple(t), SignedPerm(tuple(p * e for p, e in zip(perm, signs))))


def test_multiply_examples():
    mu, lam = (1, 0, -2), (0, 3, 1)
    assert multiply(translation(mu), IWElement.identity(3)) == translation(mu)
    assert multiply(translation(mu), translation(lam)) == translation((1, 3, -1))
    sigma = IWElement.linear(SignedPerm((2, 1)))
    assert multiply(sigma, translation((1, 0))) == IWElement((0, 1), SignedPerm((2, 1)))


def test_embed_examples():
    assert embed_gl(translation((1, 0))) == ((1, 0, 0, -1), (1, 2, 3, 4))
    assert embed_gl(IWElement.identity(2)) == ((0, 0, 0, 0), (1, 2, 3, 4))
    assert embed_gl(IWElement.linear(SignedPerm((-1, 2)))) == ((0, 0, 0, 0), (4, 2, 3, 1))


def test_extended_alcove_examples():
    n = 3
    std = to_extended_alcove(IWElement.identity(n))
    assert std.vs == tuple(omega(n, k) for k in range(2 * n))
    shift = (1, 0, 0, 0, 0, -1)
    alc = to_extended_alcove(translation((1, 0, 0)))
    assert all(alc.v(k) == tuple(a + b for a, b in zip(omega(n, k), shift)) for k in range(2 * n))
    assert to_extended_alcove(IWElement.linear(SignedPerm((2, 1)))).v(1) == (0, 1, 0, 0)
    assert from_extended_alcove(std) == IWElement.identity(n)
    assert from_extended_alcove(alc) == translation((1, 0, 0))


def test_mu_nu_examples():
    for k_vec in mu_vectors(IWElement.identity(2)):
        assert k_vec == (0, 0, 0, 0)
    assert all(v == (1, 0, 0, 0, 0, -1) for v in mu_vectors(translation((1, 0, 0))))
    assert all(v == (1, 0, 0, 0, 0, -1) for v in nu_vectors(translation((1, 0, 0))))
    assert mu_vectors(IWElement.linear(SignedPerm((2, 1))))[1] == (-1, 1, 0, 0)
    assert len(nu_vectors(IWElement.identity(3))) == 4
    assert a_prime(2, 1) == (F(1, 2), 0, 0, F(-1, 2))


def test_invalid_alcove():
    bad = ExtendedAlcove(((0, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1)))
    assert bad.violations()
    with pytest.raises(InvalidAlcove):
        bad.validate()
    with pytest.raises(InvalidAlcove):
        from_extended_alcove(bad)


def test_readout_rejects_non_symmetric():
    with pytest.raises(ValueError):
        readout((1, 0, 0, 0))


def test_affine_root_examples():
    assert reflection(AffineRoot(1, 2, 0, 3)) == IWElement.linear(SignedPerm((2, 1, 3)))
    ar = AffineRoot(1, 2, 1, 2)
    assert pairing(ar, (1, 0, 0, -1)) == 0
    assert reflection(ar).act((1, 0)) == (1, 0)
    assert pairing(AffineRoot(1, 2, 0, 2), omega(2, 1)) == 1
    assert pairing(ar, (0, 0, 0, 0)) == -1
    with pytest.raises(ValueError):
        AffineRoot(1, 4, 0, 2)  # j = i*
    with pytest.raises(ValueError):
        AffineRoot(2, 1, 0, 2)


def test_pairing_at_a_prime():
    n = 3
    for i in range(1, 2 * n + 1):
        for j in range(i + 1, 2 * n + 1):
            if j == 2 * n + 1 - i:
                continue
            for d in (-1, 0, 1):
                ar = AffineRoot(i, j, d, n)
                for k in range(n + 1):
                    assert pairing(ar, a_prime(n, k)) + d in (0, F(1, 2), 1)


@pytest.mark.parametrize("n", [2, 3])
def test_reflections_are_involutions(n):
    for i in range(1, 2 * n + 1):
        for j in range(i + 1, 2 * n + 1):
            if j == 2 * n + 1 - i:
                continue
            for d in (-1, 0, 2):
                s = reflection(AffineRoot(i, j, d, n))
                assert (s * s).is_translation() and (s * s) == IWElement.identity(n)


def test_basic_inequalities_examples():
    assert basic_inequalities_hold(IWElement.identity(3))
    assert basic_inequalities_hold(translation((1, 0, 0)))


def test_basic_inequalities_random():
    rng = random.Random(7)
    assert all(basic_inequalities_hold(random_element(rng, 3)) for _ in range(1000))


@given(elements(), elements(), elements())
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == IWElement.identity(3)
    x = (F(1, 3), -2, F(5, 7))
    assert (a * b).act(x) == a.act(b.act(x))


@given(elements())
def test_alcove_roundtrip(w):
    alc = to_extended_alcove(w)
    assert not alc.violations()
    assert from_extended_alcove(alc) == w


@given(elements())
def test_translation_part(w):
    assert w.translation_part() == translation(w.t)
    # v_0 of the alcove is the embedded translation
    assert readout(to_extended_alcove(w).v(0)) == w.t
