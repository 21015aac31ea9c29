"""Shared brute-force helpers: independent of the matrix recurrences."""

import itertools

from aztecount.oracle import TILE_EDGES
from aztecount.transfer import state_word


def brute_mu(s_r: str, s_b: str, s_t: str) -> int:
    """Count bars by trying all tile strings, threading edge letters.

    Position 1 is the rightmost tile (states read right to left).  The
    bar's left edge must come out ``a``.
    """
    m = len(s_b)
    assert len(s_t) == m
    total = 0
    for tiles in itertools.product(TILE_EDGES, repeat=m):
        carry = s_r
        for i, tile in enumerate(tiles):
            edges = TILE_EDGES[tile]
            if edges["right"] != carry or edges["bottom"] != s_b[i] or edges["top"] != s_t[i]:
                break
            carry = edges["left"]
        else:
            if carry == "a":
                total += 1
    return total


def brute_bar_matrix(right_edge: str, m: int) -> tuple:
    """Full 2^m x 2^m bar matrix from :func:`brute_mu`."""
    size = 1 << m
    return tuple(
        tuple(brute_mu(right_edge, state_word(i + 1, m), state_word(j + 1, m)) for j in range(size))
        for i in range(size)
    )
