"""Pure-Python bar-transfer kernel.

``apply_bar(vec, m)`` multiplies a row vector by the full bar matrix of
state length ``m`` without materializing it.  The matrix's 2x2 block
recurrence on the leading letter is evaluated breadth-first: two working
arrays hold the partial sums whose remaining suffix is governed by the
right-edge-``a`` family (``da``) and the right-edge-``b`` family
(``db``), and each of the ``m`` letter positions is resolved by one
butterfly pass over index pairs ``u0`` / ``u1 = u0 | bit``:

    da[u0] <- da[u1] + db[u0]    # bottom b, top a stays in A; right b, top a returns to A
    da[u1] <- da[u0]             # bottom a, top b stays in A
    db[u0] <- da[u0]             # bottom a, top a hands off to B
    db[u1] <- 0                  # bottom b with right edge b is impossible

The empty-suffix seeds are ``[1]`` for A and ``[0]`` for B, so after all
positions ``da`` is the product.  Merging same-family subproblems this
way makes one application cost O(m 2^m) additions instead of the
exponentially branching depth-first recursion.

Entries are arbitrary-precision integers throughout.  Blocks of at least
``_SLICE_MIN`` elements are processed with slice assignment and
``map(add, ...)`` so the interpreter stays out of the inner loop.
"""

from operator import add

_SLICE_MIN = 16


def apply_bar(vec, m: int) -> list:
    """Return ``vec`` times the full bar matrix of state length ``m``."""
    n = len(vec)
    if n != 1 << m:
        raise ValueError(f"vector length {n} does not match state length {m}")
    da = list(vec)
    db = [0] * n
    for step in range(m):
        block = n >> (step + 1)
        if block >= _SLICE_MIN:
            zeros = [0] * block
            for base in range(0, n, block << 1):
                lo = slice(base, base + block)
                hi = slice(base + block, base + (block << 1))
                keep = da[lo]
                da[lo] = list(map(add, da[hi], db[lo]))
                da[hi] = keep
                db[lo] = keep
                db[hi] = zeros
        else:
            for u in range(0, n, block << 1):
                for u0 in range(u, u + block):
                    u1 = u0 + block
                    x = da[u0]
                    da[u0] = da[u1] + db[u0]
                    da[u1] = x
                    db[u0] = x
                    db[u1] = 0
    return da
