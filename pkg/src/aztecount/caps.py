"""Resource caps and the error raised when a request exceeds them.

Caps are deliberate desk-scale bounds.  Exceeding one raises
:class:`CapacityError` before any work is attempted.  Each cap can be
overridden through an environment variable (expert use):

    AZTECOUNT_DENSE_CAP    max state length for materialized matrices (12)
    AZTECOUNT_VECTOR_CAP   max state length for the vector engine (26)
    AZTECOUNT_ORACLE_CAP   max square count for tiling enumeration (40)
    AZTECOUNT_MOSAIC_CAP   max square count for mosaic brute force (16)
"""

import os

DENSE_STATE_CAP = 12
VECTOR_STATE_CAP = 26
ORACLE_SQUARE_CAP = 40
MOSAIC_SQUARE_CAP = 16


class CapacityError(Exception):
    """A request exceeded a configured resource cap."""

    def __init__(self, what: str, requested: int, limit: int):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what} {requested} exceeds cap {limit}")


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return default if raw is None else int(raw)


def dense_cap() -> int:
    return _env_cap("AZTECOUNT_DENSE_CAP", DENSE_STATE_CAP)


def vector_cap() -> int:
    return _env_cap("AZTECOUNT_VECTOR_CAP", VECTOR_STATE_CAP)


def oracle_cap() -> int:
    return _env_cap("AZTECOUNT_ORACLE_CAP", ORACLE_SQUARE_CAP)


def mosaic_cap() -> int:
    return _env_cap("AZTECOUNT_MOSAIC_CAP", MOSAIC_SQUARE_CAP)


def check(what: str, requested: int, limit: int) -> None:
    if requested > limit:
        raise CapacityError(what, requested, limit)
