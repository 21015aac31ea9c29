import random

import pytest

from aztecount import kernel
from aztecount.counter import count_vector
from aztecount.region import RegionSpec
from aztecount.transfer import bar_A


def dense_apply(vec, m):
    """Independent reference: explicit row-vector times bar matrix."""
    if m == 0:
        return list(vec)
    entries = bar_A(m).entries
    size = 1 << m
    return [sum(vec[i] * entries[i][j] for i in range(size)) for j in range(size)]


def test_python_backend_always_available():
    assert "python" in kernel.available_backends()
    assert kernel.BACKEND in kernel.available_backends()


@pytest.mark.parametrize("name", sorted(kernel.available_backends()))
def test_apply_bar_matches_dense(name):
    apply_bar = kernel.available_backends()[name]
    rng = random.Random(20240517)
    for m in range(0, 7):
        for _ in range(4):
            vec = [rng.randrange(0, 1 << 64) for _ in range(1 << m)]
            assert apply_bar(vec, m) == dense_apply(vec, m)


@pytest.mark.parametrize("name", sorted(kernel.available_backends()))
def test_apply_bar_rejects_bad_length(name):
    apply_bar = kernel.available_backends()[name]
    with pytest.raises(ValueError):
        apply_bar([1, 2, 3], 2)


def test_apply_bar_does_not_mutate_input():
    vec = [1, 2, 3, 4]
    for apply_bar in kernel.available_backends().values():
        snapshot = list(vec)
        apply_bar(vec, 2)
        assert vec == snapshot


def test_backends_agree_on_counts():
    backends = kernel.available_backends()
    specs = [RegionSpec(0, 0, 5), RegionSpec(3, 2, 2), RegionSpec(2, 5, 1), RegionSpec(1, 1, 3)]
    for spec in specs:
        values = {name: count_vector(spec, apply_bar=fn) for name, fn in backends.items()}
        assert len(set(values.values())) == 1, values


def test_slice_and_index_paths_agree():
    # exercise both code paths of the pure-Python butterfly
    from aztecount import _barcore_py

    rng = random.Random(7)
    vec = [rng.randrange(0, 1 << 32) for _ in range(1 << 8)]
    expected = dense_apply(vec, 8)
    assert _barcore_py.apply_bar(vec, 8) == expected
