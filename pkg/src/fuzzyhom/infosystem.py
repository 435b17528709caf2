"""Fuzzy information systems: one fuzzy relation per attribute on a shared universe."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import kernels
from .consistency import ConsistencyReport, Partition, RoundTrip, classify, signature_matrix, verify_roundtrip
from .core import FuzzyRelation, Universe
from .errors import ParameterError, UniverseMismatch
from .mappings import UniverseMapping, image_relation


class FuzzyInformationSystem:
    """Named attribute relations over one universe.

    Attribute order is kept for display; equality ignores it.
    """

    __slots__ = ("universe", "attributes")

    def __init__(self, attributes: Mapping[str, FuzzyRelation], universe: Universe | None = None):
        attributes = dict(attributes)
        if not attributes:
            raise ParameterError("an information system needs at least one attribute")
        if universe is None:
            universe = next(iter(attributes.values())).universe
        for name, rel in attributes.items():
            if not isinstance(name, str) or not name:
                raise ParameterError(f"attribute names must be nonempty strings, got {name!r}")
            if rel.universe != universe:
                raise UniverseMismatch(f"attribute {name!r} is not defined over the system universe")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "attributes", attributes)

    def __setattr__(self, name, value):
        raise AttributeError("FuzzyInformationSystem is immutable")

    def __getitem__(self, name: str) -> FuzzyRelation:
        return self.attributes[name]

    def __iter__(self):
        return iter(self.attributes)

    def __len__(self):
        return len(self.attributes)

    def items(self):
        return self.attributes.items()

    def __eq__(self, other):
        if not isinstance(other, FuzzyInformationSystem):
            return NotImplemented
        return self.universe == other.universe and self.attributes == other.attributes

    def __hash__(self):
        return hash((self.universe, frozenset(self.attributes.items())))

    def __repr__(self):
        return f"FuzzyInformationSystem({list(self.universe)!r}, attributes={list(self.attributes)!r})"


def _check_domain(f, system):
    if f.domain != system.universe:
        raise UniverseMismatch("mapping domain differs from the system universe")


@dataclass(frozen=True)
class SystemReport:
    reports: dict[str, ConsistencyReport]

    @property
    def homomorphism(self) -> bool:
        """True when the mapping is consistent for every attribute."""
        return all(r.consistent for r in self.reports.values())


def classify_system(f: UniverseMapping, system: FuzzyInformationSystem) -> SystemReport:
    _check_domain(f, system)
    return SystemReport({name: classify(f, rel) for name, rel in system.items()})


@dataclass(frozen=True)
class HomomorphicImage:
    system: FuzzyInformationSystem
    lossless: bool


def homomorphic_image(f: UniverseMapping, system: FuzzyInformationSystem) -> HomomorphicImage:
    """Map every attribute through ``f``; inconsistent maps are allowed but flagged lossy."""
    _check_domain(f, system)
    image = FuzzyInformationSystem({n: image_relation(f, r) for n, r in system.items()}, f.codomain)
    return HomomorphicImage(image, classify_system(f, system).homomorphism)


@dataclass(frozen=True)
class SystemCompression:
    projection: UniverseMapping
    image: FuzzyInformationSystem
    partition: Partition
    roundtrips: dict[str, RoundTrip]

    @property
    def lossless(self) -> bool:
        return all(rt.equal for rt in self.roundtrips.values())


def system_partition(system: FuzzyInformationSystem) -> Partition:
    """Common refinement of the per-attribute row/column signature partitions."""
    sig = np.ascontiguousarray(np.hstack([signature_matrix(r, "both") for r in system.attributes.values()]))
    return Partition.from_leaders(system.universe, kernels.group_leaders(sig, 0))


def compress_system(system: FuzzyInformationSystem) -> SystemCompression:
    part = system_partition(system)
    f = part.projection()
    image = FuzzyInformationSystem({n: image_relation(f, r) for n, r in system.items()}, f.codomain)
    roundtrips = {n: verify_roundtrip(f, r) for n, r in system.items()}
    return SystemCompression(f, image, part, roundtrips)
