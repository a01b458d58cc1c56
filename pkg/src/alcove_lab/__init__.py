"""Admissible and permissible sets in Iwahori-Weyl groups of split classical groups."""

from .adm_perm import (
    admissible_set,
    is_admissible,
    is_permissible_alcove,
    is_permissible_def,
    lift_chain,
    lift_reflection,
    permissible_set,
)
from .bruhat import length, leq
from .errors import GuardExceeded, InvalidAlcove, NotPermissible
from .iwahori_weyl import AffineRoot, ExtendedAlcove, IWElement, translation
from .root_data import GroupCtx, parse_ctx
from .signed_weyl import SignedPerm

__version__ = "0.1.0"

__all__ = [
    "AffineRoot",
    "ExtendedAlcove",
    "GroupCtx",
    "GuardExceeded",
    "IWElement",
    "InvalidAlcove",
    "NotPermissible",
    "SignedPerm",
    "admissible_set",
    "is_admissible",
    "is_permissible_alcove",
    "is_permissible_def",
    "length",
    "leq",
    "lift_chain",
    "lift_reflection",
    "parse_ctx",
    "permissible_set",
    "translation",
]
