"""Brute-force reference implementations over plain dicts of Fractions.

These never touch numpy or the library's kernels; they follow the
definitions literally and exist only to produce expected values.
"""

from fractions import Fraction
from itertools import product


def as_dict(rel):
    """FuzzyRelation -> {(x, y): Fraction} over all pairs."""
    u = list(rel.universe)
    return {(x, y): Fraction(rel[x, y].units, 10**rel.digits) for x in u for y in u}


def compose(u, r, q):
    return {(x, z): max(min(r[x, y], q[y, z]) for y in u) for x in u for z in u}


def closure_by_paths(u, r):
    """Max over all simple-or-not paths of length <= |U| of the min edge grade."""
    best = dict(r)
    frontier = dict(r)
    for _ in range(len(u)):
        frontier = {(x, z): max(min(frontier[x, y], r[y, z]) for y in u) for x in u for z in u}
        best = {k: max(best[k], frontier[k]) for k in best}
    return best


def is_transitive(u, r):
    return all(r[x, z] >= min(r[x, y], r[y, z]) for x, y, z in product(u, repeat=3))


def image_rel(dom, cod, f, r):
    out = {}
    for y1, y2 in product(cod, repeat=2):
        vals = [r[x1, x2] for x1 in dom for x2 in dom if f[x1] == y1 and f[x2] == y2]
        out[y1, y2] = max(vals, default=Fraction(0))
    return out


def preimage_rel(dom, f, q):
    return {(x1, x2): q[f[x1], f[x2]] for x1 in dom for x2 in dom}


def pred_consistent(dom, f, r):
    return all(
        all(r[z, a] == r[z, b] for z in dom) for a in dom for b in dom if f[a] == f[b]
    )


def succ_consistent(dom, f, r):
    return all(
        all(r[a, z] == r[b, z] for z in dom) for a in dom for b in dom if f[a] == f[b]
    )


def block_consistent(dom, f, r):
    """R(x1, y1) == R(x2, y2) whenever x1~x2 and y1~y2 under f."""
    return all(
        r[x1, y1] == r[x2, y2]
        for x1, x2, y1, y2 in product(dom, repeat=4)
        if f[x1] == f[x2] and f[y1] == f[y2]
    )


def signature_blocks(dom, r, mode):
    """Group elements by column (pred), row (succ) or both; blocks as frozensets."""
    groups = {}
    for x in dom:
        col = tuple(r[z, x] for z in dom)
        row = tuple(r[x, z] for z in dom)
        key = {"pred": col, "succ": row, "both": (col, row)}[mode]
        groups.setdefault(key, set()).add(x)
    return {frozenset(g) for g in groups.values()}
