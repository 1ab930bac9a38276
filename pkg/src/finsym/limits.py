"""Enumeration guards.

Brute-force enumerations (cochain assignments, group tuples, spin
configurations) are bounded so that a typo never launches an overnight
computation.  The hard ceiling is 2**24 states; the environment variable
FINSYM_MAX_ENUM or an explicit argument may lower it, never raise it.
"""

from __future__ import annotations

import os

HARD_CEILING = 2**24


class GuardExceeded(RuntimeError):
    """An enumeration would exceed the configured state-count guard."""


def effective_limit(explicit: int | None = None) -> int:
    limit = HARD_CEILING
    env = os.environ.get("FINSYM_MAX_ENUM")
    if env is not None:
        limit = min(limit, int(env))
    if explicit is not None:
        limit = min(limit, int(explicit))
    return limit


def check_enum(size: int, limit: int | None = None, what: str = "enumeration") -> None:
    bound = effective_limit(limit)
    if size > bound:
        raise GuardExceeded(f"{what} needs {size} states, guard allows {bound}")
