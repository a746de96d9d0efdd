import numpy as np


def grid(*sizes):
    """Open index grids over a tuple space, one broadcastable array per axis."""
    return np.indices(sizes, sparse=True)


def first_failure(ok):
    """Lexicographically first index where ``ok`` is False, or None."""
    ok = np.asarray(ok)
    bad = np.flatnonzero(~ok)
    if bad.size == 0:
        return None
    return tuple(int(i) for i in np.unravel_index(bad[0], ok.shape))


def frozen(values, dtype=np.int64):
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr
