"""Exact tiling counts as products of bar state matrices.

The number of domino tilings of the region ``(p, q, n)`` is the (1, 1)
entry of the ``2^p x 2^p`` row product

    lower_L(p+2) ... lower_L(p+2n)
        . central_C(p+2n)^q
        . upper_U(p+2n) ... upper_U(p+2)

one factor per region row, bottom to top.  Two evaluation routes are
provided.  :func:`count_dense` materializes the factors and multiplies
them literally.  :func:`count_vector` carries only the first row of the
accumulating product (the all-``a`` bottom state is first in ab-order, so
the (1, 1) entry never needs more) and applies each factor through the
matrix-free kernel: lower factors embed the row vector into the larger
state space, upper factors project back down, and the central power is
taken as ``q`` successive applications.

Counts are plain Python integers; nothing on the counting path touches
floating point.  Zero counts for odd ``p*q`` come out of the product
itself, never from a shortcut; :func:`vanishes_by_parity` exposes the
parity predicate separately for cross-checks.
"""

import math
import time
from dataclasses import dataclass

from . import kernel, transfer
from .caps import CapacityError, dense_cap, vector_cap
from .region import RegionSpec
from .transfer import StateMatrix


@dataclass(frozen=True)
class StateProduct:
    """Product of the first ``rows_consumed`` bar factors, ``2^p x 2^l``."""

    matrix: StateMatrix
    rows_consumed: int


def factor_sequence(spec: RegionSpec) -> list[StateMatrix]:
    """The ``2n + q`` bar matrices in bottom-to-top row order."""
    p, q, n = spec.p, spec.q, spec.n
    top = p + 2 * n
    cap = dense_cap()
    if top > cap:
        raise CapacityError("dense state length", top, cap)
    factors = [transfer.lower_L(p + 2 * k) for k in range(1, n + 1)]
    factors += [transfer.central_C(top)] * q
    factors += [transfer.upper_U(top + 2 - 2 * k) for k in range(1, n + 1)]
    return factors


def partial_products(spec: RegionSpec) -> list[StateProduct]:
    """Running products after 1, 2, ... rows; the last is ``2^p x 2^p``."""
    out = []
    acc = None
    for i, factor in enumerate(factor_sequence(spec), start=1):
        acc = factor if acc is None else acc @ factor
        out.append(StateProduct(acc, i))
    return out


def count_dense(spec: RegionSpec) -> int:
    """Tiling count via the literal matrix product."""
    acc = None
    for factor in factor_sequence(spec):
        acc = factor if acc is None else acc @ factor
    return 1 if acc is None else acc.entries[0][0]


def _embed(vec: list) -> list:
    # word w of the short state becomes a.w.a in the two-longer state
    out = [0] * (len(vec) << 2)
    for i, x in enumerate(vec):
        out[i << 1] = x
    return out


def _extract(vec: list) -> list:
    return [vec[i << 1] for i in range(len(vec) >> 2)]


def count_vector(spec: RegionSpec, apply_bar=None) -> int:
    """Tiling count via first-row propagation through the kernel.

    ``apply_bar`` overrides the selected kernel backend; both backends
    produce identical values.
    """
    p, q, n = spec.p, spec.q, spec.n
    top = p + 2 * n
    cap = vector_cap()
    if top > cap:
        raise CapacityError("vector state length", top, cap)
    bar = apply_bar if apply_bar is not None else kernel.apply_bar
    vec = [0] * (1 << p)
    vec[0] = 1
    width = p
    for _ in range(n):
        vec = _embed(vec)
        width += 2
        vec = bar(vec, width)
    for _ in range(q):
        vec = bar(vec, width)
    for _ in range(n):
        vec = bar(vec, width)
        vec = _extract(vec)
        width -= 2
    return vec[0]


def count(p: int, q: int, n: int, method: str = "vector") -> int:
    """Count tilings of the ``(p, q, n)`` region by the chosen method."""
    spec = RegionSpec(p, q, n)
    if method == "vector":
        return count_vector(spec)
    if method == "dense":
        return count_dense(spec)
    if method == "oracle":
        from . import oracle

        return oracle.count_tilings(spec)
    raise ValueError(f"unknown method {method!r}")


def timed_count(p: int, q: int, n: int, method: str = "vector") -> tuple[int, int]:
    """Count plus elapsed wall time in whole milliseconds."""
    start = time.monotonic()
    value = count(p, q, n, method)
    return value, round((time.monotonic() - start) * 1000)


def aztec_closed_form(n: int) -> int:
    """Tiling count of the unexpanded order-``n`` diamond: 2^(n(n+1)/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 1 << (n * (n + 1) // 2)


def delannoy_closed_form(n: int) -> int:
    """Central Delannoy number: sum of C(n,k)*C(n+k,k) over k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(math.comb(n, k) * math.comb(n + k, k) for k in range(n + 1))


def vanishes_by_parity(spec: RegionSpec) -> bool:
    """True when the square count is odd (odd ``p*q``), forcing count 0."""
    return spec.p * spec.q % 2 == 1
