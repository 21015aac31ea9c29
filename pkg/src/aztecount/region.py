"""Geometry of the expanded Aztec diamond.

The region is a mirror-symmetric stack of unit-square rows: the classical
Aztec-diamond staircase widened by ``p`` extra columns, with ``q`` extra
maximal-width rows inserted in the middle.  Row lengths grow in steps of
two from ``p + 2`` up to ``2n + p``, stay there for ``q + 2`` rows, then
shrink back down.  For ``n = 0`` the region degenerates to a ``p``-wide,
``q``-tall rectangle; if additionally ``p = 0`` it is empty.

All values are immutable and all operations pure, so everything here is
safe to share across threads.
"""

from dataclasses import dataclass

Cell = tuple[int, int]  # (column, row), both 1-based, row 1 at the bottom


@dataclass(frozen=True)
class RegionSpec:
    """Region parameters: ``p`` extra columns, ``q`` extra middle rows, order ``n``."""

    p: int
    q: int
    n: int

    def __post_init__(self):
        for name in ("p", "q", "n"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def row_lengths(spec: RegionSpec) -> list[int]:
    """Row lengths bottom-to-top: palindromic, unimodal, steps of 0 or 2."""
    p, q, n = spec.p, spec.q, spec.n
    if n == 0:
        return [p] * q if p > 0 else []
    rising = [p + 2 * k for k in range(1, n)]
    return rising + [2 * n + p] * (q + 2) + rising[::-1]


def square_count(spec: RegionSpec) -> int:
    """Number of unit squares, by the closed formula 2n(n+p+q+1) + pq."""
    return 2 * spec.n * (spec.n + spec.p + spec.q + 1) + spec.p * spec.q


def width(spec: RegionSpec) -> int:
    """Number of columns spanned by the widest rows (2n + p)."""
    return 2 * spec.n + spec.p


def cells(spec: RegionSpec) -> frozenset[Cell]:
    """Coordinates of every unit square.

    The widest rows span columns ``1 .. 2n + p``; narrower rows are inset
    symmetrically.  Consecutive row lengths differ by 0 or 2, so insets
    are integral and column indices align across rows, making adjacency
    the usual shared-unit-edge relation on coordinates.
    """
    w = width(spec)
    out = []
    for row, length in enumerate(row_lengths(spec), start=1):
        inset = (w - length) // 2
        out.extend((col, row) for col in range(inset + 1, inset + length + 1))
    return frozenset(out)
