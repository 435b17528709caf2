"""Pure numpy implementations of the grade-matrix kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and bit-identical results.  Matrices are square ``int64`` arrays of grade
units; index arrays are ``intp``.  "Not found" is reported as ``None``.
"""

import numpy as np

BACKEND = "python"


def compose(a, b):
    """Max-min product: out[x, z] = max_y min(a[x, y], b[y, z])."""
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for y in range(a.shape[1]):
        np.maximum(out, np.minimum(a[:, y, None], b[None, y, :]), out=out)
    return out


def closure(a):
    c = a.copy()
    while True:
        nxt = np.maximum(c, compose(c, c))
        if np.array_equal(nxt, c):
            return c
        c = nxt


def first_intransitive(a):
    """First (x, y, z) in nested scan order with a[x,z] < a[x,y] ^ a[y,z]."""
    for x in range(a.shape[0]):
        bad = np.minimum(a[x, :, None], a) > a[x, None, :]
        if bad.any():
            y, z = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return x, int(y), int(z)
    return None


def image_relation(a, assign, m):
    out = np.zeros((m, m), dtype=np.int64)
    np.maximum.at(out, (assign[:, None], assign[None, :]), a)
    return out


def image_set(v, assign, m):
    out = np.zeros(m, dtype=np.int64)
    np.maximum.at(out, assign, v)
    return out


def first_class_mismatch(a, leader, axis, tol):
    """First (x, z) where x's column (axis 0) or row (axis 1) differs from its leader's.

    Elements are scanned in index order, probes ``z`` in index order.
    Values count as equal when they differ by at most ``tol`` units.
    """
    if axis == 0:
        diff = np.abs(a - a[:, leader]).T  # diff[x, z] = |a[z, x] - a[z, lead x]|
    else:
        diff = np.abs(a - a[leader, :])
    bad = diff > tol
    if not bad.any():
        return None
    x, z = np.unravel_index(int(np.argmax(bad)), bad.shape)
    return int(x), int(z)


def first_block_mismatch(a, leader, tol):
    """First cell (row-major) whose grade differs from its block leader's cell."""
    bad = np.abs(a - a[np.ix_(leader, leader)]) > tol
    if not bad.any():
        return None
    i, j = np.unravel_index(int(np.argmax(bad)), bad.shape)
    return int(i), int(j)


def group_leaders(sig, tol):
    """Greedy grouping of signature rows.

    Row i joins the first earlier leader row whose entries are all within
    ``tol``; otherwise it leads a new group.  With tol == 0 this is exact
    equality grouping.
    """
    n = sig.shape[0]
    leader = np.empty(n, dtype=np.intp)
    if tol == 0:
        seen = {}
        for i in range(n):
            key = sig[i].tobytes()
            leader[i] = seen.setdefault(key, i)
        return leader
    heads = []
    for i in range(n):
        for h in heads:
            if np.abs(sig[i] - sig[h]).max(initial=0) <= tol:
                leader[i] = h
                break
        else:
            heads.append(i)
            leader[i] = i
    return leader
