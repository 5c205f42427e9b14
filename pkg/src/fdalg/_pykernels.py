"""Pure-numpy fallback for the compiled elimination kernel.

Must match ``_corekernels`` exactly: same pivot policy (leftmost column,
topmost nonzero row), same normalized output.  Row updates are vectorized
so the fallback stays usable on the larger orbit computations, just slower.
"""

import numpy as np


def rref_inplace(a, p):
    """Reduce ``a`` (C-contiguous int64 2-D array) in place mod ``p``.

    Returns ``(rank, pivot_columns)``.
    """
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r, c:] = a[r, c:] * pow(lead, p - 2, p) % p
        hit = np.nonzero(a[:, c])[0]
        hit = hit[hit != r]
        if hit.size:
            a[np.ix_(hit, np.arange(c, cols))] = (
                a[np.ix_(hit, np.arange(c, cols))]
                - np.outer(a[hit, c], a[r, c:])
            ) % p
        pivots.append(c)
        r += 1
    return r, pivots
