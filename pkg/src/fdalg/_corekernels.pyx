# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan elimination mod p.

This is the hot kernel: every hom-space, resolution and cover computation
in the package bottoms out in row reduction of a modest dense matrix over
F_p.  The pure-Python twin lives in ``_pykernels``; both must produce
bit-identical output (same pivot policy, same normal form).
"""


cdef long long _inv_mod(long long a, long long p) noexcept:
    # Fermat inverse; p prime, 0 < a < p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_inplace(long long[:, ::1] a, long long p):
    """Reduce ``a`` to reduced row-echelon form in place.

    Pivot policy: columns scanned left to right, first nonzero entry from
    the current row downward.  Returns ``(rank, pivot_columns)``.
    """
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t r = 0, i, j, c, piv
    cdef long long inv, f, v
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                v = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = v
        if a[r, c] != 1:
            inv = _inv_mod(a[r, c], p)
            for j in range(c, cols):
                a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(c, cols):
                    v = (a[i, j] - f * a[r, j]) % p
                    if v < 0:
                        v += p
                    a[i, j] = v
        pivots.append(c)
        r += 1
    return r, pivots
