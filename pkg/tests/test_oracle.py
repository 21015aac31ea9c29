import itertools

import pytest

from aztecount.caps import CapacityError
from aztecount.oracle import (
    TILE_EDGES,
    count_mosaics_bruteforce,
    count_tilings,
    enumerate_tilings,
    is_domino_mosaic,
    tiling_to_mosaic,
)
from aztecount.region import RegionSpec, cells, square_count


def test_tile_edge_table():
    b_edges = {tile: [side for side, letter in edges.items() if letter == "b"]
               for tile, edges in TILE_EDGES.items()}
    assert b_edges == {"T1": ["left"], "T2": ["top"], "T3": ["bottom"], "T4": ["right"]}


def test_enumerate_small_regions():
    assert len(enumerate_tilings(RegionSpec(0, 0, 1))) == 2
    assert len(enumerate_tilings(RegionSpec(2, 3, 0))) == 3
    assert enumerate_tilings(RegionSpec(1, 1, 0)) == []
    assert enumerate_tilings(RegionSpec(0, 0, 0)) == [()]


def test_enumeration_is_deterministic_and_canonical():
    first = enumerate_tilings(RegionSpec(2, 2, 1))
    second = enumerate_tilings(RegionSpec(2, 2, 1))
    assert first == second
    assert len(set(first)) == len(first)
    for tiling in first:
        assert list(tiling) == sorted(tiling)
        for low, high in tiling:
            assert low < high


@pytest.mark.parametrize("p,q,n", [(0, 0, 1), (1, 0, 1), (2, 2, 0), (0, 0, 2), (2, 1, 1)])
def test_tilings_are_perfect_covers(p, q, n):
    spec = RegionSpec(p, q, n)
    region_cells = cells(spec)
    for tiling in enumerate_tilings(spec):
        covered = [cell for domino in tiling for cell in domino]
        assert len(covered) == len(region_cells)
        assert set(covered) == region_cells
        for (x1, y1), (x2, y2) in tiling:
            assert abs(x1 - x2) + abs(y1 - y2) == 1


def test_tiling_to_mosaic_orientation():
    horizontal = ((((1, 1), (2, 1))),)
    assert tiling_to_mosaic(horizontal) == {(1, 1): "T4", (2, 1): "T1"}
    vertical = ((((1, 1), (1, 2))),)
    assert tiling_to_mosaic(vertical) == {(1, 1): "T2", (1, 2): "T3"}


def test_converted_mosaics_are_valid_and_distinct():
    tilings = enumerate_tilings(RegionSpec(0, 0, 1))
    mosaics = [tiling_to_mosaic(t) for t in tilings]
    assert all(is_domino_mosaic(m) for m in mosaics)
    assert len({tuple(sorted(m.items())) for m in mosaics}) == 2


def test_mosaic_validator_rejects_bad_placements():
    square = {(1, 1): "T1", (2, 1): "T1", (1, 2): "T1", (2, 2): "T1"}
    assert not is_domino_mosaic(square)  # b on the region's left boundary
    pair = {(1, 1): "T4", (2, 1): "T2"}
    assert not is_domino_mosaic(pair)  # b meets a on the shared edge
    good = {(1, 1): "T4", (2, 1): "T1"}
    assert is_domino_mosaic(good)
    assert is_domino_mosaic({})


def test_mosaic_bruteforce_counts():
    assert count_mosaics_bruteforce(RegionSpec(0, 0, 1)) == 2
    assert count_mosaics_bruteforce(RegionSpec(1, 0, 1)) == 3
    assert count_mosaics_bruteforce(RegionSpec(1, 1, 0)) == 0
    assert count_mosaics_bruteforce(RegionSpec(0, 0, 0)) == 1


def test_bijection_sweep():
    for p, q, n in itertools.product(range(17), range(17), range(3)):
        spec = RegionSpec(p, q, n)
        if square_count(spec) > 16:
            continue
        tilings = enumerate_tilings(spec)
        mosaics = [tiling_to_mosaic(t) for t in tilings]
        assert all(is_domino_mosaic(m) for m in mosaics)
        assert len({tuple(sorted(m.items())) for m in mosaics}) == len(tilings)
        assert count_mosaics_bruteforce(spec) == len(tilings)


def test_b_edges_pair_up():
    opposite = {"left": "right", "right": "left", "top": "bottom", "bottom": "top"}
    offsets = {"left": (-1, 0), "right": (1, 0), "top": (0, 1), "bottom": (0, -1)}
    for tiling in enumerate_tilings(RegionSpec(2, 2, 1)):
        mosaic = tiling_to_mosaic(tiling)
        for (x, y), tile in mosaic.items():
            b_sides = [side for side, letter in TILE_EDGES[tile].items() if letter == "b"]
            assert len(b_sides) == 1
            side = b_sides[0]
            dx, dy = offsets[side]
            neighbor = mosaic.get((x + dx, y + dy))
            assert neighbor is not None
            assert TILE_EDGES[neighbor][opposite[side]] == "b"


def test_oracle_caps():
    with pytest.raises(CapacityError):
        enumerate_tilings(RegionSpec(1, 0, 4))  # 48 squares > 40
    with pytest.raises(CapacityError):
        count_mosaics_bruteforce(RegionSpec(0, 0, 3))  # 24 squares > 16


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("AZTECOUNT_MOSAIC_CAP", "24")
    assert count_mosaics_bruteforce(RegionSpec(0, 0, 3)) == 64
