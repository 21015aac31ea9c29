"""Exact domino-tiling counts for expanded Aztec diamonds.

The region ``(p, q, n)`` is the order-``n`` Aztec diamond widened by
``p`` extra columns and ``q`` extra maximal rows.  Counts are computed
exactly (arbitrary-precision integers) as the corner entry of a product
of bar state matrices built row by row, and validated against an
exhaustive enumeration oracle on small regions.
"""

from .caps import CapacityError
from .counter import (
    StateProduct,
    aztec_closed_form,
    count,
    count_dense,
    count_vector,
    delannoy_closed_form,
    factor_sequence,
    partial_products,
    vanishes_by_parity,
)
from .kernel import BACKEND as kernel_backend
from .oracle import (
    count_mosaics_bruteforce,
    count_tilings,
    enumerate_tilings,
    is_domino_mosaic,
    tiling_to_mosaic,
)
from .region import RegionSpec, cells, row_lengths, square_count
from .transfer import (
    StateMatrix,
    bar_A,
    bar_B,
    central_C,
    lower_L,
    restricted_A,
    state_index,
    state_word,
    upper_U,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "RegionSpec",
    "StateMatrix",
    "StateProduct",
    "aztec_closed_form",
    "bar_A",
    "bar_B",
    "cells",
    "central_C",
    "count",
    "count_dense",
    "count_mosaics_bruteforce",
    "count_tilings",
    "count_vector",
    "delannoy_closed_form",
    "enumerate_tilings",
    "factor_sequence",
    "is_domino_mosaic",
    "kernel_backend",
    "lower_L",
    "partial_products",
    "restricted_A",
    "row_lengths",
    "square_count",
    "state_index",
    "state_word",
    "tiling_to_mosaic",
    "upper_U",
    "vanishes_by_parity",
]
