# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bar-transfer kernel; same butterfly as ``_barcore_py``."""


def apply_bar(vec, int m):
    """Return ``vec`` times the full bar matrix of state length ``m``."""
    cdef Py_ssize_t n = len(vec)
    if n != (<Py_ssize_t> 1) << m:
        raise ValueError(f"vector length {n} does not match state length {m}")
    cdef list da = list(vec)
    cdef list db = [0] * n
    cdef Py_ssize_t step, block, base, u0, u1
    cdef object x
    zero = 0
    for step in range(m):
        block = n >> (step + 1)
        base = 0
        while base < n:
            for u0 in range(base, base + block):
                u1 = u0 + block
                x = da[u0]
                da[u0] = da[u1] + db[u0]
                da[u1] = x
                db[u0] = x
                db[u1] = zero
            base += block << 1
    return da
