"""Total mappings between universes and the fuzzy images they induce.

Images take the supremum over fibers (0 on an empty fiber); preimages
substitute through the mapping.
"""

from __future__ import annotations

from typing import Mapping

import numpy as np

from . import kernels
from .core import FuzzyRelation, FuzzySet, Universe, _frozen
from .errors import ElementNotInUniverse, ParameterError, UniverseMismatch


class UniverseMapping:
    """A total function ``domain -> codomain`` with a precomputed fiber index."""

    __slots__ = ("domain", "codomain", "assign", "_fibers", "_leader")

    def __init__(self, domain: Universe, codomain: Universe, assign):
        assign = np.array(assign, dtype=np.intp)
        if assign.shape != (len(domain),):
            raise ParameterError(f"mapping must assign all {len(domain)} domain elements")
        if assign.size and (assign.min() < 0 or assign.max() >= len(codomain)):
            raise ParameterError("mapping sends an element outside the codomain")
        assign.setflags(write=False)
        fibers = [[] for _ in range(len(codomain))]
        for i, y in enumerate(assign.tolist()):
            fibers[y].append(i)
        leader = np.array([fibers[y][0] for y in assign.tolist()], dtype=np.intp)
        leader.setflags(write=False)
        for name, value in (
            ("domain", domain),
            ("codomain", codomain),
            ("assign", assign),
            ("_fibers", tuple(tuple(f) for f in fibers)),
            ("_leader", leader),
        ):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("UniverseMapping is immutable")

    @classmethod
    def from_dict(cls, domain: Universe, codomain: Universe, table: Mapping[str, str]) -> UniverseMapping:
        missing = [x for x in domain if x not in table]
        if missing:
            raise ParameterError(f"mapping is not total: no image for {', '.join(missing)}")
        extra = [x for x in table if x not in domain]
        if extra:
            raise ElementNotInUniverse(f"{extra[0]!r} is not in the mapping's domain")
        return cls(domain, codomain, [codomain.index(table[x]) for x in domain])

    @classmethod
    def identity(cls, universe: Universe) -> UniverseMapping:
        return cls(universe, universe, np.arange(len(universe)))

    def __call__(self, x: str) -> str:
        return self.codomain[int(self.assign[self.domain.index(x)])]

    def as_dict(self) -> dict[str, str]:
        return {x: self.codomain[int(y)] for x, y in zip(self.domain, self.assign)}

    def fiber(self, y: str) -> frozenset[str]:
        """All domain elements sent to ``y`` (possibly none)."""
        return frozenset(self.domain[i] for i in self._fibers[self.codomain.index(y)])

    def fiber_indices(self, j: int) -> tuple[int, ...]:
        return self._fibers[j]

    def kernel_class(self, x: str) -> frozenset[str]:
        return frozenset(self.domain[i] for i in self._fibers[int(self.assign[self.domain.index(x)])])

    @property
    def leaders(self) -> np.ndarray:
        """For each domain index, the first domain index with the same image."""
        return self._leader

    def is_surjective(self) -> bool:
        return all(self._fibers)

    def is_injective(self) -> bool:
        return all(len(f) <= 1 for f in self._fibers)

    def __eq__(self, other):
        if not isinstance(other, UniverseMapping):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.assign, other.assign)
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.assign.tobytes()))

    def __repr__(self):
        pairs = ", ".join(f"{x}->{y}" for x, y in self.as_dict().items())
        return f"UniverseMapping({pairs})"


def _require(universe, expected, what):
    if universe != expected:
        raise UniverseMismatch(f"{what} is not defined over the mapping's {'domain' if what.startswith('source') else 'codomain'}")


def _make(cls, universe, units, digits):
    obj = object.__new__(cls)
    object.__setattr__(obj, "universe", universe)
    object.__setattr__(obj, "units", _frozen(units))
    object.__setattr__(obj, "digits", digits)
    return obj


def image_set(f: UniverseMapping, a: FuzzySet) -> FuzzySet:
    """Zadeh extension: ``f(A)(y) = max{A(x) : f(x) = y}``."""
    _require(a.universe, f.domain, "source set")
    return _make(FuzzySet, f.codomain, kernels.image_set(a.units, f.assign, len(f.codomain)), a.digits)


def preimage_set(f: UniverseMapping, b: FuzzySet) -> FuzzySet:
    """``f^-1(B)(x) = B(f(x))``."""
    _require(b.universe, f.codomain, "target set")
    return _make(FuzzySet, f.domain, b.units[f.assign], b.digits)


def image_relation(f: UniverseMapping, r: FuzzyRelation) -> FuzzyRelation:
    """``f(R)(y1, y2)`` is the max of R over ``fiber(y1) x fiber(y2)``."""
    _require(r.universe, f.domain, "source relation")
    return _make(FuzzyRelation, f.codomain, kernels.image_relation(r.units, f.assign, len(f.codomain)), r.digits)


def preimage_relation(f: UniverseMapping, q: FuzzyRelation) -> FuzzyRelation:
    """``f^-1(Q)(x1, x2) = Q(f(x1), f(x2))``."""
    _require(q.universe, f.codomain, "target relation")
    return _make(FuzzyRelation, f.domain, q.units[np.ix_(f.assign, f.assign)], q.digits)
