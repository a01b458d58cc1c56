"""Exception types and the brute-force guard knob."""

import os

GUARD_ENV = "ALCOVE_LAB_GUARD"


class GuardExceeded(RuntimeError):
    """A brute-force enumeration would exceed its size guard."""


class NotPermissible(ValueError):
    """An operation requiring a permissible element got one that is not."""


class InvalidAlcove(ValueError):
    """A vertex sequence violates one of the extended-alcove axioms."""


def guard(default: int) -> int:
    """The effective guard: ``default``, raised by ``$ALCOVE_LAB_GUARD`` if set."""
    raw = os.environ.get(GUARD_ENV)
    if not raw:
        return default
    try:
        return max(default, int(raw))
    except ValueError:
        raise ValueError(f"{GUARD_ENV} must be an integer, got {raw!r}") from None
