"""Bar state matrices, built from block recurrences on the leading letter.

A *bar* is a single row of square tiles, each carrying half a domino.
The letters on its bottom (top) edges, read right to left, form the
bottom (top) *state*: a word over ``{a, b}`` where ``a`` marks an edge
not crossed by a domino and ``b`` one that is.  Words of a given length
are ordered lexicographically with ``a < b`` (the *ab-order*), so the
all-``a`` word comes first.

Encoding ``a -> 0``, ``b -> 1`` with the first letter as the most
significant bit makes the ab-order coincide with numeric order.  Because
states are read right to left, the first letter (the high bit) belongs to
the *rightmost* tile and the last letter (the low bit) to the leftmost
tile; every row/column selection below relies on that orientation.

Six families are exposed, all with entries in ``{0, 1}``:

``bar_A(k)`` / ``bar_B(k)``
    ``2^k x 2^k``; entry (i, j) counts bars of length ``k`` with bottom
    state i, top state j, left edge ``a``, and right edge ``a`` (for A)
    or ``b`` (for B).  Peeling the rightmost tile gives the 2x2 block
    recurrence ``A_k = [[B, A], [A, 0]]``, ``B_k = [[A, 0], [0, 0]]``
    over the previous length.
``central_C(k)``
    The bar matrix for full-width middle rows.  Built from its own
    two-step recurrence ``C_k = [[[C_{k-2}, 0], [0, 0]], C_{k-1};
    C_{k-1}, 0]`` seeded with ``C_0 = [1]``; equal entrywise to
    ``bar_A(k)``, which the test suite asserts rather than assumes.
``restricted_A(k)``
    ``2^(k-1) x 2^k``: the rows of ``bar_A(k)`` whose bottom state ends
    in ``a`` (the leftmost tile's bottom edge is boundary-forced and
    dropped from the row index).  Follows the same block recurrence with
    its own seeds.
``lower_L(m)`` / ``upper_U(m)``
    Bar matrices for the bottom (top) staircase rows of the region,
    where *both* ends of the bottom (top) state are boundary-forced
    ``a``: ``2^(m-2) x 2^m`` and its transpose.

Matrices are immutable and cached; construction beyond the dense state
cap raises :class:`~aztecount.caps.CapacityError`.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .caps import CapacityError, dense_cap

Entries = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StateMatrix:
    """Immutable integer matrix tagged with the state lengths indexing it.

    ``rows == 2**row_state_len`` and ``cols == 2**col_state_len``.  For
    the restricted families the state length counts only the free
    letters, i.e. boundary-forced positions are excluded.
    """

    entries: Entries
    row_state_len: int
    col_state_len: int

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @cached_property
    def _col_support(self) -> tuple[tuple[int, ...], ...]:
        # nonzero column indices per row, so products skip structural zeros
        return tuple(tuple(j for j, v in enumerate(row) if v) for row in self.entries)

    def transpose(self) -> "StateMatrix":
        flipped = tuple(zip(*self.entries)) if self.entries else ()
        return StateMatrix(flipped, self.col_state_len, self.row_state_len)

    def matmul(self, other: "StateMatrix") -> "StateMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        support = other._col_support
        rows = other.entries
        out = []
        for row in self.entries:
            acc = [0] * other.cols
            for k, x in enumerate(row):
                if x:
                    src = rows[k]
                    for j in support[k]:
                        acc[j] += x * src[j]
            out.append(tuple(acc))
        return StateMatrix(tuple(out), self.row_state_len, other.col_state_len)

    __matmul__ = matmul


def state_index(word: str) -> int:
    """1-based position of ``word`` in the ab-order of its length."""
    value = 0
    for letter in word:
        if letter == "a":
            value = value << 1
        elif letter == "b":
            value = (value << 1) | 1
        else:
            raise ValueError(f"state letters must be 'a' or 'b', got {letter!r}")
    return value + 1


def state_word(index: int, length: int) -> str:
    """Inverse of :func:`state_index` for words of the given length."""
    if not 1 <= index <= (1 << length):
        raise ValueError(f"index {index} out of range 1..2^{length}")
    value = index - 1
    return "".join("b" if value & (1 << (length - 1 - i)) else "a" for i in range(length))


def _check_state_len(k: int) -> None:
    cap = dense_cap()
    if k > cap:
        raise CapacityError("dense state length", k, cap)


@lru_cache(maxsize=64)
def _bar_pair(k: int) -> tuple[Entries, Entries]:
    if k == 1:
        return ((0, 1), (1, 0)), ((1, 0), (0, 0))
    a_prev, b_prev = _bar_pair(k - 1)
    half = 1 << (k - 1)
    a = [[0] * (2 * half) for _ in range(2 * half)]
    b = [[0] * (2 * half) for _ in range(2 * half)]
    for i in range(half):
        ap, bp = a_prev[i], b_prev[i]
        for j in range(half):
            a[i][j] = bp[j]
            a[i][half + j] = ap[j]
            a[half + i][j] = ap[j]
            b[i][j] = ap[j]
    return tuple(map(tuple, a)), tuple(map(tuple, b))


def bar_A(k: int) -> StateMatrix:
    """Full bar matrix for right edge ``a``, length ``k >= 1``."""
    if k < 1:
        raise ValueError(f"bar_A requires k >= 1, got {k}")
    _check_state_len(k)
    return StateMatrix(_bar_pair(k)[0], k, k)


def bar_B(k: int) -> StateMatrix:
    """Full bar matrix for right edge ``b``, length ``k >= 1``."""
    if k < 1:
        raise ValueError(f"bar_B requires k >= 1, got {k}")
    _check_state_len(k)
    return StateMatrix(_bar_pair(k)[1], k, k)


@lru_cache(maxsize=64)
def _central(k: int) -> Entries:
    if k == 0:
        return ((1,),)
    if k == 1:
        return ((0, 1), (1, 0))
    prev2, prev1 = _central(k - 2), _central(k - 1)
    half = 1 << (k - 1)
    quarter = 1 << (k - 2)
    c = [[0] * (2 * half) for _ in range(2 * half)]
    for i in range(quarter):
        row = prev2[i]
        for j in range(quarter):
            c[i][j] = row[j]
    for i in range(half):
        row = prev1[i]
        for j in range(half):
            c[i][half + j] = row[j]
            c[half + i][j] = row[j]
    return tuple(map(tuple, c))


def central_C(k: int) -> StateMatrix:
    """Central bar matrix for full-width rows, length ``k >= 0``."""
    if k < 0:
        raise ValueError(f"central_C requires k >= 0, got {k}")
    _check_state_len(k)
    return StateMatrix(_central(k), k, k)


@lru_cache(maxsize=64)
def _restricted(k: int) -> Entries:
    if k == 1:
        return ((0, 1),)
    if k == 2:
        return ((1, 0, 0, 1), (0, 1, 0, 0))
    prev2, prev1 = _restricted(k - 2), _restricted(k - 1)
    rows, cols = 1 << (k - 1), 1 << k
    half_r, half_c = rows // 2, cols // 2
    m = [[0] * cols for _ in range(rows)]
    for i, row in enumerate(prev2):
        for j, v in enumerate(row):
            m[i][j] = v
    for i in range(half_r):
        row = prev1[i]
        for j in range(half_c):
            m[i][half_c + j] = row[j]
            m[half_r + i][j] = row[j]
    return tuple(map(tuple, m))


def restricted_A(k: int) -> StateMatrix:
    """Leftmost-tile-restricted bar matrix, ``2^(k-1) x 2^k``, ``k >= 1``."""
    if k < 1:
        raise ValueError(f"restricted_A requires k >= 1, got {k}")
    _check_state_len(k)
    return StateMatrix(_restricted(k), k - 1, k)


def lower_L(m: int) -> StateMatrix:
    """Bottom-row bar matrix, ``2^(m-2) x 2^m``, ``m >= 2``.

    Assembled as ``[pad(restricted_A(m-2)) | restricted_A(m-1)]`` with the
    padded block placed top-left; at ``m = 2`` the undefined first block
    degenerates to ``[1 0]``, giving the 1x4 seed ``[1, 0, 0, 1]``.
    """
    if m < 2:
        raise ValueError(f"lower_L requires m >= 2, got {m}")
    _check_state_len(m)
    if m == 2:
        return StateMatrix(((1, 0, 0, 1),), 0, 2)
    left, right = _restricted(m - 2), _restricted(m - 1)
    rows, cols = 1 << (m - 2), 1 << m
    half_c = cols // 2
    out = [[0] * cols for _ in range(rows)]
    for i, row in enumerate(left):
        for j, v in enumerate(row):
            out[i][j] = v
    for i in range(rows):
        row = right[i]
        for j in range(half_c):
            out[i][half_c + j] = row[j]
    return StateMatrix(tuple(map(tuple, out)), m - 2, m)


def upper_U(m: int) -> StateMatrix:
    """Top-row bar matrix: the exact transpose of :func:`lower_L`."""
    return lower_L(m).transpose()
