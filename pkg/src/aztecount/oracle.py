"""Ground truth by exhaustive search: domino tilings and tile mosaics.

This module is deliberately slow and independent of the matrix machinery;
it exists to validate the counters on small regions.

A *tiling* covers every region cell exactly once with dominoes (pairs of
edge-adjacent cells).  A *mosaic* places one of four unit tiles on every
cell; each tile carries half a domino and labels the edge the domino arc
crosses with ``b``, all other edges ``a``:

    T1 crossed on the left,  T2 on top,  T3 on the bottom,  T4 on the right.

A placement represents a tiling exactly when adjacent tiles agree on the
letter of their shared edge and every edge on the region boundary is
``a``.  A horizontal domino becomes the pair (T4, T1) and a vertical one
(T2, T3), glued along their ``b`` edges.
"""

from . import region
from .caps import CapacityError, mosaic_cap, oracle_cap
from .region import Cell, RegionSpec

Domino = tuple[Cell, Cell]  # cells in sorted order
Tiling = tuple[Domino, ...]  # dominoes in sorted order
Mosaic = dict[Cell, str]

TILE_EDGES: dict[str, dict[str, str]] = {
    "T1": {"left": "b", "right": "a", "top": "a", "bottom": "a"},
    "T2": {"left": "a", "right": "a", "top": "b", "bottom": "a"},
    "T3": {"left": "a", "right": "a", "top": "a", "bottom": "b"},
    "T4": {"left": "a", "right": "b", "top": "a", "bottom": "a"},
}


def _scan_order(spec: RegionSpec) -> list[Cell]:
    # bottom-to-top, left-to-right: earlier cells are always covered first
    return sorted(region.cells(spec), key=lambda c: (c[1], c[0]))


def enumerate_tilings(spec: RegionSpec) -> list[Tiling]:
    """Every perfect domino cover, each once, in deterministic order.

    Branches on the first uncovered cell in scan order, horizontal
    placement before vertical; each tiling is returned as a sorted tuple
    of sorted cell pairs.  The empty region has exactly the empty tiling.
    """
    squares = region.square_count(spec)
    cap = oracle_cap()
    if squares > cap:
        raise CapacityError("oracle square count", squares, cap)
    cells = _scan_order(spec)
    index = {cell: i for i, cell in enumerate(cells)}
    total = len(cells)
    found: list[Tiling] = []
    acc: list[Domino] = []

    def search(mask: int, start: int) -> None:
        i = start
        while i < total and mask & (1 << i):
            i += 1
        if i == total:
            found.append(tuple(sorted(acc)))
            return
        x, y = cells[i]
        here = 1 << i
        for partner in ((x + 1, y), (x, y + 1)):
            j = index.get(partner)
            if j is not None and not mask & (1 << j):
                acc.append(((x, y), partner))
                search(mask | here | (1 << j), i + 1)
                acc.pop()

    search(0, 0)
    return found


def count_tilings(spec: RegionSpec) -> int:
    """Number of domino tilings, by exhaustive enumeration."""
    return len(enumerate_tilings(spec))


def tiling_to_mosaic(tiling: Tiling) -> Mosaic:
    """Convert a tiling to its mosaic: (T4, T1) per horizontal domino, (T2, T3) per vertical."""
    placement: Mosaic = {}
    for low, high in tiling:
        if low[1] == high[1]:
            placement[low] = "T4"
            placement[high] = "T1"
        else:
            placement[low] = "T2"
            placement[high] = "T3"
    return placement


def is_domino_mosaic(placement: Mosaic) -> bool:
    """True when shared edges agree and all boundary edges are ``a``.

    The placement's keys are taken as the region; edges shared with a
    missing neighbor are boundary edges.
    """
    for (x, y), tile in placement.items():
        edges = TILE_EDGES[tile]
        right = placement.get((x + 1, y))
        if right is None:
            if edges["right"] != "a":
                return False
        elif TILE_EDGES[right]["left"] != edges["right"]:
            return False
        top = placement.get((x, y + 1))
        if top is None:
            if edges["top"] != "a":
                return False
        elif TILE_EDGES[top]["bottom"] != edges["top"]:
            return False
        if (x - 1, y) not in placement and edges["left"] != "a":
            return False
        if (x, y - 1) not in placement and edges["bottom"] != "a":
            return False
    return True


def count_mosaics_bruteforce(spec: RegionSpec) -> int:
    """Number of valid mosaics, by trying all four tiles per cell.

    Search runs in scan order with immediate edge checks, so the left and
    bottom neighbors of the current cell are already placed and most of
    the 4^cells assignments are pruned at once.
    """
    squares = region.square_count(spec)
    cap = mosaic_cap()
    if squares > cap:
        raise CapacityError("mosaic square count", squares, cap)
    cells = _scan_order(spec)
    cell_set = set(cells)
    total = len(cells)
    placed: Mosaic = {}

    def search(i: int) -> int:
        if i == total:
            return 1
        x, y = cells[i]
        hits = 0
        for tile, edges in TILE_EDGES.items():
            left = placed.get((x - 1, y))
            if left is not None:
                if TILE_EDGES[left]["right"] != edges["left"]:
                    continue
            elif (x - 1, y) not in cell_set and edges["left"] != "a":
                continue
            below = placed.get((x, y - 1))
            if below is not None:
                if TILE_EDGES[below]["top"] != edges["bottom"]:
                    continue
            elif (x, y - 1) not in cell_set and edges["bottom"] != "a":
                continue
            if (x + 1, y) not in cell_set and edges["right"] != "a":
                continue
            if (x, y + 1) not in cell_set and edges["top"] != "a":
                continue
            placed[(x, y)] = tile
            hits += search(i + 1)
            del placed[(x, y)]
        return hits

    return search(0)
