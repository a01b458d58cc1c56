import random

import pytest

from alcove_lab.iwahori_weyl import IWElement
from alcove_lab.signed_weyl import SignedPerm


def random_element(rng: random.Random, n: int, span: int = 3, even: bool = False) -> IWElement:
    while True:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        window = tuple(p * rng.choice((1, -1)) for p in perm)
        s = SignedPerm(window)
        if not even or s.is_even():
            break
    t = tuple(rng.randint(-span, span) for _ in range(n))
    return IWElement(t, s)


@pytest.fixture
def rng():
    return random.Random(20261019)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
