"""Self-check suites behind ``aztecount verify``.

Each suite returns a list of failure descriptions (empty means pass), so
the CLI can report per-suite results and a nonzero exit code on any
failure.
"""

from . import counter, oracle, region, transfer
from .region import RegionSpec

_FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]


def _sweep(p_max: int, q_max: int, n_max: int, max_squares: int) -> list[RegionSpec]:
    out = []
    for p in range(p_max + 1):
        for q in range(q_max + 1):
            for n in range(n_max + 1):
                spec = RegionSpec(p, q, n)
                if region.square_count(spec) <= max_squares:
                    out.append(spec)
    return out


def suite_bar_structure(k_max: int = 8) -> list[str]:
    """Entry range, symmetry, transpose and row-selection identities."""
    failures = []
    for k in range(1, k_max + 1):
        a, b = transfer.bar_A(k), transfer.bar_B(k)
        c = transfer.central_C(k)
        for name, matrix in (("bar_A", a), ("bar_B", b), ("central_C", c)):
            if any(v not in (0, 1) for row in matrix.entries for v in row):
                failures.append(f"{name}({k}) has an entry outside {{0,1}}")
        if c.entries != c.transpose().entries:
            failures.append(f"central_C({k}) is not symmetric")
        if c.entries != a.entries:
            failures.append(f"central_C({k}) != bar_A({k})")
        if k == 1:
            embedded = b.entries == ((1, 0), (0, 0))
        else:
            prev = transfer.bar_A(k - 1).entries
            half = 1 << (k - 1)
            embedded = all(
                b.entries[i][j] == (prev[i][j] if i < half and j < half else 0)
                for i in range(2 * half)
                for j in range(2 * half)
            )
        if not embedded:
            failures.append(f"bar_B({k}) is not the previous bar_A embedded top-left")
        selected = tuple(a.entries[v] for v in range(0, 1 << k, 2))
        if transfer.restricted_A(k).entries != selected:
            failures.append(f"restricted_A({k}) != row selection of bar_A({k})")
    for m in range(2, k_max + 1):
        low = transfer.lower_L(m)
        if transfer.upper_U(m).entries != low.transpose().entries:
            failures.append(f"upper_U({m}) != lower_L({m}) transposed")
        both_ends_a = tuple(transfer.bar_A(m).entries[v << 1] for v in range(1 << (m - 2)))
        if low.entries != both_ends_a:
            failures.append(f"lower_L({m}) != boundary-row selection of bar_A({m})")
    return failures


def suite_closed_forms() -> list[str]:
    """Staircase, augmented-column, and 2xq rectangle benchmarks."""
    failures = []
    for n in range(1, 9):
        got = counter.count(0, 0, n)
        want = counter.aztec_closed_form(n)
        if got != want:
            failures.append(f"count(0,0,{n}) = {got}, closed form {want}")
    for n in (1, 2):
        got = oracle.count_tilings(RegionSpec(1, 0, n))
        want = counter.delannoy_closed_form(n)
        if got != want:
            failures.append(f"oracle count(1,0,{n}) = {got}, expected {want}")
    for n in range(1, 7):
        got = counter.count(1, 0, n)
        want = counter.delannoy_closed_form(n)
        if got != want:
            failures.append(f"count(1,0,{n}) = {got}, closed form {want}")
    for q in range(1, 11):
        got = counter.count(2, q, 0)
        if got != _FIB[q + 1]:
            failures.append(f"count(2,{q},0) = {got}, expected Fibonacci {_FIB[q + 1]}")
        if q <= 6 and oracle.count_tilings(RegionSpec(2, q, 0)) != got:
            failures.append(f"oracle disagrees on 2x{q} rectangle")
    return failures


def suite_oracle_equivalence(max_squares: int = 28) -> list[str]:
    """dense == vector == exhaustive enumeration on the small sweep."""
    failures = []
    for spec in _sweep(4, 4, 2, max_squares):
        dense = counter.count_dense(spec)
        vector = counter.count_vector(spec)
        brute = oracle.count_tilings(spec)
        if not dense == vector == brute:
            failures.append(
                f"({spec.p},{spec.q},{spec.n}): dense {dense}, vector {vector}, oracle {brute}"
            )
    return failures


def suite_symmetry(max_squares: int = 28) -> list[str]:
    """Quarter-turn symmetry and parity vanishing over the sweep."""
    failures = []
    for spec in _sweep(4, 4, 2, max_squares):
        value = counter.count_vector(spec)
        rotated = counter.count_vector(RegionSpec(spec.q, spec.p, spec.n))
        if value != rotated:
            failures.append(f"count({spec.p},{spec.q},{spec.n}) != count({spec.q},{spec.p},{spec.n})")
        if counter.vanishes_by_parity(spec) and value != 0:
            failures.append(f"odd p*q but count({spec.p},{spec.q},{spec.n}) = {value}")
    return failures


def suite_mosaic_bijection(max_squares: int = 16) -> list[str]:
    """Tiling count equals mosaic count; conversion is injective and valid."""
    failures = []
    for spec in _sweep(max_squares, max_squares, 2, max_squares):
        tilings = oracle.enumerate_tilings(spec)
        mosaics = [oracle.tiling_to_mosaic(t) for t in tilings]
        if any(not oracle.is_domino_mosaic(m) for m in mosaics):
            failures.append(f"({spec.p},{spec.q},{spec.n}): converted mosaic fails validation")
        distinct = {tuple(sorted(m.items())) for m in mosaics}
        if len(distinct) != len(tilings):
            failures.append(f"({spec.p},{spec.q},{spec.n}): conversion is not injective")
        brute = oracle.count_mosaics_bruteforce(spec)
        if brute != len(tilings):
            failures.append(
                f"({spec.p},{spec.q},{spec.n}): {len(tilings)} tilings vs {brute} mosaics"
            )
    return failures


def run_all(max_squares: int = 28) -> dict[str, list[str]]:
    """Run every suite; mapping of suite name to its failures."""
    return {
        "bar-structure": suite_bar_structure(),
        "closed-form": suite_closed_forms(),
        "oracle-equivalence": suite_oracle_equivalence(max_squares),
        "symmetry": suite_symmetry(max_squares),
        "mosaic-bijection": suite_mosaic_bijection(),
    }
