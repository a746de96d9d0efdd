"""Compiled brute-force kernels for full map-space enumeration.

A candidate map on an n-set is a digit vector of length 2n^2: the n^2
entries of ``first`` followed by those of ``second``, most significant
digit first, so odometer order is the canonical lexicographic order.
"""

import numba
import numpy as np

PENTAGON, REVERSED, QYBE, BRAID = 1, 2, 4, 8
EQUATION_BITS = {"pentagon": PENTAGON, "reversed_pentagon": REVERSED, "qybe": QYBE, "braid": BRAID}


@numba.njit(cache=True, nogil=True)
def _holds(f, g, n, eq):
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if eq == PENTAGON:
                    # s23 s13 s12 = s12 s23
                    a, b, c = f[x * n + y], g[x * n + y], z
                    a, c = f[a * n + c], g[a * n + c]
                    b, c = f[b * n + c], g[b * n + c]
                    p, q = f[y * n + z], g[y * n + z]
                    u, v, w = f[x * n + p], g[x * n + p], q
                elif eq == REVERSED:
                    # t12 t13 t23 = t23 t12
                    a, b, c = x, f[y * n + z], g[y * n + z]
                    a, c = f[a * n + c], g[a * n + c]
                    a, b = f[a * n + b], g[a * n + b]
                    p, q = f[x * n + y], g[x * n + y]
                    u, v, w = p, f[q * n + z], g[q * n + z]
                elif eq == QYBE:
                    # s23 s13 s12 = s12 s13 s23
                    a, b, c = f[x * n + y], g[x * n + y], z
                    a, c = f[a * n + c], g[a * n + c]
                    b, c = f[b * n + c], g[b * n + c]
                    u, v, w = x, f[y * n + z], g[y * n + z]
                    u, w = f[u * n + w], g[u * n + w]
                    u, v = f[u * n + v], g[u * n + v]
                else:
                    # r12 r23 r12 = r23 r12 r23
                    a, b, c = f[x * n + y], g[x * n + y], z
                    b, c = f[b * n + c], g[b * n + c]
                    a, b = f[a * n + b], g[a * n + b]
                    u, v, w = x, f[y * n + z], g[y * n + z]
                    u, v = f[u * n + v], g[u * n + v]
                    v, w = f[v * n + w], g[v * n + w]
                if a != u or b != v or c != w:
                    return False
    return True


@numba.njit(cache=True, nogil=True)
def scan_subtree(n, prefix, eqmask, limit, out):
    """Test every completion of ``prefix``; return the number of solutions.

    Up to ``limit`` solutions are written, in odometer order, into the rows
    of ``out`` (shape (limit, 2n^2)).
    """
    size = n * n
    digits = np.zeros(2 * size, dtype=np.int64)
    k = prefix.shape[0]
    for i in range(k):
        digits[i] = prefix[i]
    f = digits[:size]
    g = digits[size:]
    count = 0
    free = 2 * size - k
    while True:
        ok = True
        if eqmask & PENTAGON and not _holds(f, g, n, PENTAGON):
            ok = False
        if ok and eqmask & REVERSED and not _holds(f, g, n, REVERSED):
            ok = False
        if ok and eqmask & QYBE and not _holds(f, g, n, QYBE):
            ok = False
        if ok and eqmask & BRAID and not _holds(f, g, n, BRAID):
            ok = False
        if ok:
            if count < limit:
                out[count, :] = digits
            count += 1
        # advance the free digits like an odometer
        i = 2 * size - 1
        while i >= k:
            digits[i] += 1
            if digits[i] < n:
                break
            digits[i] = 0
            i -= 1
        if i < k or free == 0:
            break
    return count


def equation_mask(equations):
    mask = 0
    for eq in equations:
        mask |= EQUATION_BITS[eq]
    return mask


def warm_up():
    out = np.zeros((1, 2), dtype=np.int64)
    scan_subtree(1, np.zeros(0, dtype=np.int64), PENTAGON, 1, out)
