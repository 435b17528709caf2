"""Fuzzy predecessor/successor neighborhoods and their combinations."""

from __future__ import annotations

import enum

import numpy as np

from .core import FuzzyRelation, FuzzySet, _set_from, inverse, join, meet
from .errors import MissingComponent, ParameterError


class NeighborhoodKind(enum.Enum):
    PRED = "pred"
    SUCC = "succ"
    MEET = "meet"
    JOIN = "join"

    @classmethod
    def coerce(cls, kind) -> NeighborhoodKind:
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(kind).lower())
        except ValueError:
            raise ParameterError(f"unknown neighborhood kind {kind!r}; expected pred, succ, meet or join") from None


def neighborhood(r: FuzzyRelation, x: str, kind="pred") -> FuzzySet:
    """Neighborhood of ``x``: pred is the column of x, succ its row; meet/join combine them."""
    kind = NeighborhoodKind.coerce(kind)
    i = r.universe.index(x)
    col, row = r.units[:, i], r.units[i, :]
    if kind is NeighborhoodKind.PRED:
        v = col
    elif kind is NeighborhoodKind.SUCC:
        v = row
    elif kind is NeighborhoodKind.MEET:
        v = np.minimum(col, row)
    else:
        v = np.maximum(col, row)
    return _set_from(r, v)


def pred(r: FuzzyRelation, x: str) -> FuzzySet:
    return neighborhood(r, x, NeighborhoodKind.PRED)


def succ(r: FuzzyRelation, x: str) -> FuzzySet:
    return neighborhood(r, x, NeighborhoodKind.SUCC)


def identity_sides(eq: int, r: FuzzyRelation, x: str, q: FuzzyRelation | None = None) -> tuple[FuzzySet, FuzzySet]:
    """Both sides of one of the six neighborhood identities.

    1: pred_R(x) vs succ_{R^-1}(x)
    2: succ_R(x) vs pred_{R^-1}(x)
    3: pred_{R|Q}(x) vs pred_R(x) | pred_Q(x)
    4: succ_{R|Q}(x) vs succ_R(x) | succ_Q(x)
    5: pred_{R&Q}(x) vs pred_R(x) & pred_Q(x)
    6: succ_{R&Q}(x) vs succ_R(x) & succ_Q(x)

    The identities always hold; this helper exists so they can be checked.
    """
    if eq == 1:
        return pred(r, x), succ(inverse(r), x)
    if eq == 2:
        return succ(r, x), pred(inverse(r), x)
    if eq not in (3, 4, 5, 6):
        raise ParameterError(f"no neighborhood identity numbered {eq}")
    if q is None:
        raise MissingComponent(f"identity {eq} needs a second relation")
    nb = pred if eq in (3, 5) else succ
    op = join if eq in (3, 4) else meet
    return nb(op(r, q), x), op(nb(r, x), nb(q, x))
