"""Finite universes, fuzzy sets and fuzzy relations over exact grades.

Values are immutable: the underlying numpy arrays are marked read-only and
every operation returns a fresh object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import kernels
from .errors import ElementNotInUniverse, ParameterError, ScaleMismatch, UniverseMismatch
from .grades import DEFAULT_DIGITS, Grade, check_digits, format_units, parse_units


class Universe:
    """Ordered, nonempty collection of distinct string labels."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[str]):
        elements = tuple(elements)
        if not elements:
            raise ParameterError("a universe must be nonempty")
        index = {}
        for i, e in enumerate(elements):
            if not isinstance(e, str):
                raise ParameterError(f"element labels must be strings, got {e!r}")
            if e in index:
                raise ParameterError(f"duplicate element label {e!r}")
            index[e] = i
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Universe is immutable")

    @classmethod
    def numbered(cls, n: int, prefix: str = "x") -> Universe:
        return cls(f"{prefix}{i}" for i in range(1, n + 1))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise ElementNotInUniverse(f"{label!r} is not an element of the universe") from None

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> str:
        return self.elements[i]

    def __eq__(self, other):
        if not isinstance(other, Universe):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Universe({list(self.elements)!r})"


def _frozen(arr):
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _check_units(arr, digits):
    if arr.size and (arr.min() < 0 or arr.max() > 10**digits):
        raise ParameterError(f"grade units must lie in [0, 10**{digits}]")


class _Graded:
    """Shared behaviour of FuzzySet and FuzzyRelation."""

    __slots__ = ("universe", "units", "digits")

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _init(self, universe, units, digits):
        check_digits(digits)
        _check_units(units, digits)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "units", _frozen(units))
        object.__setattr__(self, "digits", digits)

    def _like(self, units):
        """Same type, universe and scale, new grades (no validation)."""
        new = object.__new__(type(self))
        object.__setattr__(new, "universe", self.universe)
        object.__setattr__(new, "units", _frozen(units))
        object.__setattr__(new, "digits", self.digits)
        return new

    def _grade(self, units):
        return Grade(int(units), self.digits)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.digits == other.digits
            and np.array_equal(self.units, other.units)
        )

    def __hash__(self):
        return hash((type(self).__name__, self.universe, self.digits, self.units.tobytes()))

    def issubset(self, other) -> bool:
        """Pointwise ``<=``."""
        _check_compatible(self, other)
        return bool(np.all(self.units <= other.units))

    def __le__(self, other):
        return self.issubset(other)

    def __ge__(self, other):
        return other.issubset(self)

    def __or__(self, other):
        return join(self, other)

    def __and__(self, other):
        return meet(self, other)

    def grade_values(self) -> set[int]:
        """Distinct grade units occurring anywhere (including 0)."""
        return set(np.unique(self.units).tolist())


class FuzzySet(_Graded):
    """A fuzzy subset of a finite universe."""

    __slots__ = ()

    def __init__(self, universe: Universe, units=None, digits: int | None = None):
        digits = DEFAULT_DIGITS if digits is None else digits
        if units is None:
            units = np.zeros(len(universe), dtype=np.int64)
        units = np.asarray(units, dtype=np.int64)
        if units.shape != (len(universe),):
            raise ParameterError(f"expected {len(universe)} grades, got shape {units.shape}")
        self._init(universe, units, digits)

    @classmethod
    def from_grades(cls, universe: Universe, grades: Mapping[str, object], digits: int | None = None) -> FuzzySet:
        """Build from ``{label: grade}``; grades may be decimal strings or Grade values."""
        digits = DEFAULT_DIGITS if digits is None else digits
        units = np.zeros(len(universe), dtype=np.int64)
        for label, g in grades.items():
            units[universe.index(label)] = _to_units(g, digits)
        return cls(universe, units, digits)

    @classmethod
    def empty(cls, universe: Universe, digits: int | None = None) -> FuzzySet:
        return cls(universe, None, digits)

    def __getitem__(self, label: str) -> Grade:
        return self._grade(self.units[self.universe.index(label)])

    def support(self) -> tuple[str, ...]:
        return tuple(self.universe[i] for i in np.flatnonzero(self.units))

    def terms(self) -> list[tuple[str, Grade]]:
        """Nonzero ``(label, grade)`` pairs in universe order."""
        return [(self.universe[i], self._grade(self.units[i])) for i in np.flatnonzero(self.units)]

    def __str__(self):
        terms = [f"{format_units(self.units[i], self.digits)}/{self.universe[i]}" for i in np.flatnonzero(self.units)]
        return " + ".join(terms) if terms else "∅"

    def __repr__(self):
        return f"FuzzySet({self})"


class FuzzyRelation(_Graded):
    """A fuzzy binary relation on a finite universe (a square grade matrix)."""

    __slots__ = ()

    def __init__(self, universe: Universe, units=None, digits: int | None = None):
        digits = DEFAULT_DIGITS if digits is None else digits
        n = len(universe)
        if units is None:
            units = np.zeros((n, n), dtype=np.int64)
        units = np.asarray(units, dtype=np.int64)
        if units.shape != (n, n):
            raise ParameterError(f"expected a {n}x{n} grade matrix, got shape {units.shape}")
        self._init(universe, units, digits)

    @classmethod
    def from_grades(cls, universe: Universe, grades: Mapping[tuple[str, str], object], digits: int | None = None) -> FuzzyRelation:
        """Build from ``{(x, y): grade}``; unlisted pairs get grade 0."""
        digits = DEFAULT_DIGITS if digits is None else digits
        n = len(universe)
        units = np.zeros((n, n), dtype=np.int64)
        for (x, y), g in grades.items():
            units[universe.index(x), universe.index(y)] = _to_units(g, digits)
        return cls(universe, units, digits)

    @classmethod
    def zero(cls, universe: Universe, digits: int | None = None) -> FuzzyRelation:
        return cls(universe, None, digits)

    @classmethod
    def identity(cls, universe: Universe, digits: int | None = None) -> FuzzyRelation:
        """The crisp identity (diagonal of ones)."""
        digits = DEFAULT_DIGITS if digits is None else digits
        return cls(universe, np.eye(len(universe), dtype=np.int64) * 10**digits, digits)

    def __getitem__(self, pair: tuple[str, str]) -> Grade:
        x, y = pair
        return self._grade(self.units[self.universe.index(x), self.universe.index(y)])

    def row(self, x: str) -> FuzzySet:
        return _set_from(self, self.units[self.universe.index(x)])

    def column(self, x: str) -> FuzzySet:
        return _set_from(self, self.units[:, self.universe.index(x)])

    def terms(self) -> list[tuple[tuple[str, str], Grade]]:
        """Nonzero ``((x, y), grade)`` entries in row-major universe order."""
        u = self.universe
        rows, cols = np.nonzero(self.units)
        return [((u[i], u[j]), self._grade(self.units[i, j])) for i, j in zip(rows, cols)]

    def is_crisp(self) -> bool:
        return bool(np.all((self.units == 0) | (self.units == 10**self.digits)))

    @property
    def T(self) -> FuzzyRelation:
        return inverse(self)

    def __str__(self):
        u = self.universe
        rows, cols = np.nonzero(self.units)
        terms = [f"{format_units(self.units[i, j], self.digits)}/({u[i]},{u[j]})" for i, j in zip(rows, cols)]
        return " + ".join(terms) if terms else "∅"

    def __repr__(self):
        return f"FuzzyRelation({self})"


def _to_units(g, digits):
    if isinstance(g, Grade):
        if g.digits != digits:
            raise ScaleMismatch(f"grade {g} has scale {g.digits}, expected {digits}")
        return g.units
    return parse_units(g, digits)


def _set_from(rel, vector):
    s = object.__new__(FuzzySet)
    object.__setattr__(s, "universe", rel.universe)
    object.__setattr__(s, "units", _frozen(vector.copy()))
    object.__setattr__(s, "digits", rel.digits)
    return s


def _check_compatible(a, b):
    if type(a) is not type(b):
        raise UniverseMismatch(f"cannot combine {type(a).__name__} with {type(b).__name__}")
    if a.universe != b.universe:
        raise UniverseMismatch("operands are defined over different universes")
    if a.digits != b.digits:
        raise ScaleMismatch(f"operands use grade scales {a.digits} and {b.digits}")


def join(a, b):
    """Pointwise maximum of two fuzzy sets or two fuzzy relations."""
    _check_compatible(a, b)
    return a._like(np.maximum(a.units, b.units))


def meet(a, b):
    """Pointwise minimum of two fuzzy sets or two fuzzy relations."""
    _check_compatible(a, b)
    return a._like(np.minimum(a.units, b.units))


pointwise_join = join
pointwise_meet = meet


def inverse(r: FuzzyRelation) -> FuzzyRelation:
    return r._like(r.units.T)


def compose(r: FuzzyRelation, q: FuzzyRelation) -> FuzzyRelation:
    """Max-min composition ``(R o Q)(x, z) = max_y R(x, y) ^ Q(y, z)``."""
    _check_compatible(r, q)
    return r._like(kernels.compose(r.units, q.units))


def transitive_closure(r: FuzzyRelation) -> FuzzyRelation:
    """Smallest max-min transitive relation containing ``r``."""
    return r._like(kernels.closure(r.units))


@dataclass(frozen=True)
class PropertyVerdict:
    holds: bool
    witness: tuple[str, ...] | None = None

    def __bool__(self):
        return self.holds


PROPERTIES = ("reflexive", "symmetric", "transitive")


def check_property(r: FuzzyRelation, prop: str) -> PropertyVerdict:
    """Check reflexivity, symmetry or max-min transitivity.

    On failure the witness is the first offending element (reflexive), pair
    (symmetric, row-major) or triple ``(x, y, z)`` (transitive, nested scan)
    in universe order.
    """
    u, a = r.universe, r.units
    if prop == "reflexive":
        bad = np.flatnonzero(np.diagonal(a) != 10**r.digits)
        return PropertyVerdict(True) if bad.size == 0 else PropertyVerdict(False, (u[int(bad[0])],))
    if prop == "symmetric":
        bad = np.argwhere(a != a.T)
        if bad.size == 0:
            return PropertyVerdict(True)
        i, j = bad[0]
        return PropertyVerdict(False, (u[int(i)], u[int(j)]))
    if prop == "transitive":
        hit = kernels.first_intransitive(a)
        return PropertyVerdict(True) if hit is None else PropertyVerdict(False, tuple(u[i] for i in hit))
    raise ParameterError(f"unknown property {prop!r}; expected one of {PROPERTIES}")


def is_reflexive(r: FuzzyRelation) -> bool:
    return check_property(r, "reflexive").holds


def is_symmetric(r: FuzzyRelation) -> bool:
    return check_property(r, "symmetric").holds


def is_transitive(r: FuzzyRelation) -> bool:
    return check_property(r, "transitive").holds
