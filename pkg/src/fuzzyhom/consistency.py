"""Consistent functions, coarsest consistent partitions and lossless compression.

A mapping is *pred-consistent* for R when elements with the same image have
equal columns, *succ-consistent* when they have equal rows, and
*blockwise consistent* when R is constant on every product of kernel
classes.  The three verdicts are computed by separate scans so that their
agreement can be tested rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import FuzzyRelation, FuzzySet, Universe, join
from .errors import ParameterError, UniverseMismatch
from .grades import Grade, parse_units
from .mappings import UniverseMapping, image_relation, image_set, preimage_relation, preimage_set
from .neighborhoods import neighborhood

MODES = ("pred", "succ", "both")


def _check_mode(mode):
    if mode not in MODES:
        raise ParameterError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


def tolerance_units(tol, digits) -> int:
    """Convert a tolerance (decimal string, Grade or 0) to grade units."""
    if tol is None or (isinstance(tol, int) and not isinstance(tol, bool) and tol == 0):
        return 0
    if isinstance(tol, Grade):
        return parse_units(str(tol), digits)
    return parse_units(tol, digits)


def _domain_check(f, r):
    if r.universe != f.domain:
        raise UniverseMismatch("relation is not defined over the mapping's domain")


@dataclass(frozen=True)
class NeighborhoodWitness:
    """Two elements with the same image whose neighborhoods differ at ``probe``."""

    first: str
    second: str
    probe: str
    first_grade: Grade
    second_grade: Grade

    def __str__(self):
        return f"{self.first},{self.second} differ at {self.probe}: {self.first_grade} vs {self.second_grade}"


@dataclass(frozen=True)
class BlockWitness:
    """Two cells of the same kernel-class block carrying different grades."""

    leader_cell: tuple[str, str]
    cell: tuple[str, str]
    leader_grade: Grade
    grade: Grade

    def __str__(self):
        a, b = self.leader_cell
        c, d = self.cell
        return f"({a},{b})={self.leader_grade} vs ({c},{d})={self.grade}"


@dataclass(frozen=True)
class ConsistencyReport:
    pred_consistent: bool
    succ_consistent: bool
    blockwise_consistent: bool
    pred_witness: NeighborhoodWitness | None = None
    succ_witness: NeighborhoodWitness | None = None
    block_witness: BlockWitness | None = None
    approximate: bool = False

    @property
    def consistent(self) -> bool:
        return self.pred_consistent and self.succ_consistent

    @property
    def witnesses(self) -> dict:
        return {
            k: w
            for k, w in (("pred", self.pred_witness), ("succ", self.succ_witness), ("blockwise", self.block_witness))
            if w is not None
        }

    def format(self) -> str:
        def b(v):
            return "true" if v else "false"

        lines = [f"pred={b(self.pred_consistent)} succ={b(self.succ_consistent)} blockwise={b(self.blockwise_consistent)}"]
        if self.approximate:
            lines.append("approximate: grades compared with a nonzero tolerance; exact round-trip not claimed")
        for kind, w in self.witnesses.items():
            lines.append(f"{kind} witness: {w}")
        return "\n".join(lines)


def _nb_witness(r, f, axis, tol):
    hit = kernels.first_class_mismatch(r.units, f.leaders, axis, tol)
    if hit is None:
        return None
    x, z = hit
    lead = int(f.leaders[x])
    u = r.universe
    if axis == 0:
        g1, g2 = r.units[z, lead], r.units[z, x]
    else:
        g1, g2 = r.units[lead, z], r.units[x, z]
    return NeighborhoodWitness(u[lead], u[x], u[z], Grade(int(g1), r.digits), Grade(int(g2), r.digits))


def classify(f: UniverseMapping, r: FuzzyRelation, tol=0) -> ConsistencyReport:
    """Pred-, succ- and blockwise consistency of ``f`` with respect to ``r``.

    Each element is compared against the first element (in universe order)
    of its kernel class; the first mismatch found is reported as witness.
    A nonzero ``tol`` treats grades within ``tol`` as equal and marks the
    report approximate.
    """
    _domain_check(f, r)
    t = tolerance_units(tol, r.digits)
    pw = _nb_witness(r, f, 0, t)
    sw = _nb_witness(r, f, 1, t)
    hit = kernels.first_block_mismatch(r.units, f.leaders, t)
    bw = None
    if hit is not None:
        i, j = hit
        li, lj = int(f.leaders[i]), int(f.leaders[j])
        u = r.universe
        bw = BlockWitness(
            (u[li], u[lj]), (u[i], u[j]), Grade(int(r.units[li, lj]), r.digits), Grade(int(r.units[i, j]), r.digits)
        )
    return ConsistencyReport(pw is None, sw is None, bw is None, pw, sw, bw, approximate=t > 0)


def classify_via_roundtrip(f: UniverseMapping, r: FuzzyRelation) -> tuple[bool, bool]:
    """Consistency verdicts from neighborhood round trips.

    pred holds iff ``f^-1(f(succ_x)) == succ_x`` for every x, and succ
    iff the same holds for every predecessor neighborhood.
    """
    _domain_check(f, r)

    def stable(kind):
        for x in r.universe:
            nb = neighborhood(r, x, kind)
            if preimage_set(f, image_set(f, nb)) != nb:
                return False
        return True

    return stable("succ"), stable("pred")


@dataclass(frozen=True)
class Partition:
    """Blocks of a universe, each listed in universe order, ordered by first member."""

    universe: Universe
    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        seen = [x for b in self.blocks for x in b]
        if any(not b for b in self.blocks):
            raise ParameterError("partition blocks must be nonempty")
        if len(seen) != len(set(seen)) or set(seen) != set(self.universe):
            raise ParameterError("blocks must be disjoint and cover the universe")

    @classmethod
    def from_leaders(cls, universe: Universe, leader) -> Partition:
        groups: dict[int, list[str]] = {}
        for i, lead in enumerate(leader):
            groups.setdefault(int(lead), []).append(universe[i])
        return cls(universe, tuple(tuple(groups[k]) for k in sorted(groups)))

    @classmethod
    def from_blocks(cls, universe: Universe, blocks) -> Partition:
        order = {x: i for i, x in enumerate(universe)}
        normal = [tuple(sorted(b, key=order.__getitem__)) for b in blocks]
        normal.sort(key=lambda b: order[b[0]])
        return cls(universe, tuple(normal))

    @classmethod
    def discrete(cls, universe: Universe) -> Partition:
        return cls(universe, tuple((x,) for x in universe))

    @property
    def labels(self) -> tuple[str, ...]:
        """Canonical representative of each block: its first member."""
        return tuple(b[0] for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def is_discrete(self) -> bool:
        return len(self.blocks) == len(self.universe)

    def block_index(self) -> np.ndarray:
        idx = np.empty(len(self.universe), dtype=np.intp)
        for k, b in enumerate(self.blocks):
            for x in b:
                idx[self.universe.index(x)] = k
        return idx

    def merged(self, i: int, j: int) -> Partition:
        if i == j:
            raise ParameterError("cannot merge a block with itself")
        rest = [b for k, b in enumerate(self.blocks) if k not in (i, j)]
        return Partition.from_blocks(self.universe, rest + [self.blocks[i] + self.blocks[j]])

    def projection(self, prefix: str = "[", suffix: str = "]") -> UniverseMapping:
        """Natural surjection onto the quotient; class ``{x6, x7}`` is labelled ``[x6]``."""
        quotient = Universe(f"{prefix}{lead}{suffix}" for lead in self.labels)
        return UniverseMapping(self.universe, quotient, self.block_index())

    def __str__(self):
        return " ".join("{" + ",".join(b) + "}" for b in self.blocks)


def signature_matrix(r: FuzzyRelation, mode: str) -> np.ndarray:
    """One row per element: its column (pred), its row (succ) or both side by side."""
    _check_mode(mode)
    a = r.units
    if mode == "pred":
        return np.ascontiguousarray(a.T)
    if mode == "succ":
        return np.ascontiguousarray(a)
    return np.ascontiguousarray(np.hstack([a.T, a]))


def coarsest_consistent_partition(r: FuzzyRelation, mode: str = "both", tol=0) -> Partition:
    """Group elements whose neighborhood signatures coincide.

    The natural projection onto the blocks is consistent in ``mode``, and
    merging any two blocks breaks that.  With a nonzero ``tol`` grouping is
    greedy (each element joins the first earlier group leader within tol)
    and the guarantees no longer hold exactly.
    """
    t = tolerance_units(tol, r.digits)
    leader = kernels.group_leaders(signature_matrix(r, mode), t)
    return Partition.from_leaders(r.universe, leader)


@dataclass(frozen=True)
class Difference:
    pair: tuple[str, str]
    original: Grade
    reconstructed: Grade

    def __str__(self):
        return f"({self.pair[0]},{self.pair[1]}): {self.original} -> {self.reconstructed}"


@dataclass(frozen=True)
class RoundTrip:
    """Entrywise comparison of R with ``f^-1(f(R))``."""

    differences: tuple[Difference, ...] = ()

    @property
    def equal(self) -> bool:
        return not self.differences

    def __bool__(self):
        return self.equal


def verify_roundtrip(f: UniverseMapping, r: FuzzyRelation) -> RoundTrip:
    """Reconstruct R through the image and list every differing entry (row-major)."""
    _domain_check(f, r)
    back = preimage_relation(f, image_relation(f, r))
    u, d = r.universe, r.digits
    diffs = tuple(
        Difference((u[i], u[j]), Grade(int(r.units[i, j]), d), Grade(int(back.units[i, j]), d))
        for i, j in np.argwhere(r.units != back.units)
    )
    return RoundTrip(diffs)


@dataclass(frozen=True)
class CompressionResult:
    projection: UniverseMapping
    quotient: FuzzyRelation
    mode: str
    partition: Partition
    roundtrip: RoundTrip = field(default_factory=RoundTrip)
    approximate: bool = False

    @property
    def lossless(self) -> bool:
        return self.roundtrip.equal and not self.approximate

    def reconstruct(self) -> FuzzyRelation:
        return preimage_relation(self.projection, self.quotient)


def compress(r: FuzzyRelation, mode: str = "both", tol=0) -> CompressionResult:
    """Quotient of ``r`` by its coarsest ``mode``-consistent partition.

    In ``both`` mode (and exact grouping) the reconstruction equals ``r``.
    """
    _check_mode(mode)
    part = coarsest_consistent_partition(r, mode, tol)
    f = part.projection()
    quotient = image_relation(f, r)
    return CompressionResult(
        projection=f,
        quotient=quotient,
        mode=mode,
        partition=part,
        roundtrip=verify_roundtrip(f, r),
        approximate=tolerance_units(tol, r.digits) > 0,
    )


def image_neighborhood(f: UniverseMapping, r: FuzzyRelation, y: str, kind: str = "pred") -> FuzzySet:
    """Neighborhood of ``y`` in ``f(R)`` assembled from the images of its fiber's neighborhoods.

    Empty fibers give the empty set.
    """
    if kind not in ("pred", "succ"):
        raise ParameterError(f"kind must be pred or succ, got {kind!r}")
    _domain_check(f, r)
    fiber = f.fiber_indices(f.codomain.index(y))
    out = FuzzySet.empty(f.codomain, r.digits)
    for i in fiber:
        out = join(out, image_set(f, neighborhood(r, r.universe[i], kind)))
    return out
