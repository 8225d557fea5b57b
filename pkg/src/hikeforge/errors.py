"""Exception types and enumeration caps shared across the package."""

from __future__ import annotations

import os


class HikeForgeError(Exception):
    """Base class for all package errors."""


class GraphFormatError(HikeForgeError, ValueError):
    """Malformed graph document or invalid digraph data."""


class SizeCapError(HikeForgeError):
    """An enumeration or matrix size exceeded its configured cap."""


class CapConfigError(HikeForgeError, ValueError):
    """The cap override in the environment is not a positive integer."""


class CatalogMismatchError(HikeForgeError, ValueError):
    """Hikes or series built over different prime catalogs were combined."""


class NotInvertibleError(HikeForgeError, ZeroDivisionError):
    """A series with zero constant term was inverted."""


class InternalConsistencyError(HikeForgeError, AssertionError):
    """An exact identity that must hold by construction did not."""


DEFAULT_PRIME_CAP = 10**6
DEFAULT_HIKE_CAP = 2 * 10**6
DEFAULT_PERMANENT_CAP = 14
DEFAULT_ORACLE_LENGTH_CAP = 10
DEFAULT_ISOMORPHISM_CAP = 12

CAP_ENV_VAR = "HIKE_FORGE_CAP"


def enumeration_cap(default: int) -> int:
    """Return the enumeration cap, honouring the ``HIKE_FORGE_CAP`` override."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise CapConfigError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise CapConfigError(f"{CAP_ENV_VAR} must be positive, got {value}")
    return value
