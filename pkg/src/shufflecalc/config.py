"""Degree guards for the expensive enumerations and solves.

All limits are desk-scale defaults; every entry point that enforces one
accepts an explicit override so the CLI's --guard flag can raise or lower
them for a single run.
"""

from dataclasses import dataclass

from .errors import DegreeGuardError


@dataclass(frozen=True)
class Limits:
    degree: int = 12      # symmetric-function operations
    macdonald: int = 7    # nabla / Macdonald table builds
    parking: int = 8      # parking-function enumeration
    bibrick: int = 8      # bi-brick enumeration

DEFAULT_LIMITS = Limits()


def check_degree(n: int, guard: int | None, what: str = "degree") -> None:
    limit = DEFAULT_LIMITS.degree if guard is None else guard
    if n > limit:
        raise DegreeGuardError(f"{what} {n} exceeds guard {limit}")
