"""Executable catalog of the algebraic laws, with seeded instance generators.

Each law is a hypothesis/conclusion pair over an :class:`Instance`.  A law
whose hypothesis fails on an instance is *vacuous* there; otherwise the
conclusion is evaluated exactly and a violation carries the first
offending location in scan order.

Weakened laws (a hypothesis dropped or reduced) are separate catalog
entries whose ids extend the full law's id with ``/...``.  They are
expected to fail and exist for counterexample search.

Trial ``t`` of a run seeded with ``s`` draws from
``numpy.random.default_rng([s, t])``, so every trial is reproducible on its
own and results do not depend on evaluation order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import kernels
from .consistency import classify, coarsest_consistent_partition, image_neighborhood, verify_roundtrip
from .core import FuzzyRelation, FuzzySet, Universe, check_property, inverse, join, meet
from .errors import MissingComponent, ParameterError
from .grades import DEFAULT_DIGITS, parse_units
from .mappings import UniverseMapping, image_relation, image_set, preimage_set
from .neighborhoods import identity_sides, neighborhood, pred, succ

ELEVEN_POINT = tuple(f"{k / 10:g}" for k in range(11))  # "0", "0.1", ..., "1"
FLAGS = ("reflexive", "symmetric", "transitive")


# --------------------------------------------------------------------------
# instances and verdicts


@dataclass(frozen=True)
class Instance:
    R: FuzzyRelation
    Q: FuzzyRelation | None = None
    f: UniverseMapping | None = None
    x: str | None = None

    def describe(self) -> str:
        lines = [f"U = {{{', '.join(self.R.universe)}}}", f"R = {self.R}"]
        if self.Q is not None:
            lines.append(f"Q = {self.Q}")
        if self.f is not None:
            lines.append(f"V = {{{', '.join(self.f.codomain)}}}")
            lines.append("f = " + ", ".join(f"{a}->{b}" for a, b in self.f.as_dict().items()))
        if self.x is not None:
            lines.append(f"x = {self.x}")
        return "\n".join(lines)


@dataclass(frozen=True)
class LawWitness:
    """Where a conclusion failed, with the two sides' values there."""

    location: tuple[str, ...]
    left: str
    right: str
    note: str = ""

    def __str__(self):
        loc = "(" + ",".join(self.location) + ")" if self.location else "-"
        text = f"at {loc}: {self.left} vs {self.right}"
        return f"{text} [{self.note}]" if self.note else text


HOLDS, VACUOUS, VIOLATED = "holds", "vacuous", "violated"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: LawWitness | None = None

    def __post_init__(self):
        if (self.status == VIOLATED) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict is a violation")


@dataclass(frozen=True)
class LawSpec:
    id: str
    statement: str
    requires: frozenset
    hypothesis: Callable[[Instance], bool]
    conclusion: Callable[[Instance], LawWitness | None]
    generate: Callable[[np.random.Generator, int], Instance]
    weakens: str | None = None

    @property
    def weakened(self) -> bool:
        return self.weakens is not None


def check_law(law: LawSpec | str, inst: Instance) -> Verdict:
    """Evaluate ``law`` on ``inst``: vacuous, holds, or violated with a witness."""
    law = get_law(law) if isinstance(law, str) else law
    missing = [c for c in sorted(law.requires) if getattr(inst, c) is None]
    if missing:
        raise MissingComponent(f"law {law.id} needs instance component(s) {', '.join(missing)}")
    if not law.hypothesis(inst):
        return Verdict(VACUOUS)
    w = law.conclusion(inst)
    return Verdict(HOLDS) if w is None else Verdict(VIOLATED, w)


# --------------------------------------------------------------------------
# generators


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@functools.lru_cache(maxsize=None)
def _universe(n: int, prefix: str = "x") -> Universe:
    return Universe.numbered(n, prefix)


def _alphabet_units(alphabet, digits):
    if alphabet is None:
        alphabet = ELEVEN_POINT
    try:
        units = np.array(sorted({parse_units(a, digits) for a in alphabet}), dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise ParameterError(f"invalid grade alphabet: {exc}") from None
    if units.size == 0:
        raise ParameterError("grade alphabet is empty")
    return units


def _enforce_flags(a, flags, one):
    for _ in range(4 * a.shape[0] + 4):
        if "reflexive" in flags:
            np.fill_diagonal(a, one)
        if "symmetric" in flags:
            a = np.maximum(a, a.T)
        if "transitive" in flags:
            a = kernels.closure(np.ascontiguousarray(a))
        ok = (
            ("reflexive" not in flags or bool(np.all(np.diagonal(a) == one)))
            and ("symmetric" not in flags or bool(np.array_equal(a, a.T)))
            and ("transitive" not in flags or kernels.first_intransitive(np.ascontiguousarray(a)) is None)
        )
        if ok:
            return a
    raise AssertionError("flag enforcement did not reach a fixed point")  # pragma: no cover


def random_relation(
    n: int,
    alphabet=None,
    density: float = 0.5,
    flags=(),
    seed=None,
    digits: int | None = None,
    universe: Universe | None = None,
) -> FuzzyRelation:
    """Seeded random relation on ``n`` elements.

    Each cell is nonzero with probability ``density`` and then takes a
    uniformly drawn alphabet value.  Requested flags are imposed afterwards
    (diagonal set to 1, symmetrized by max with the inverse, max-min
    closed), repeating until all hold at once.
    """
    digits = DEFAULT_DIGITS if digits is None else digits
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterError(f"universe size must be a positive integer, got {n!r}")
    if not 0 <= density <= 1:
        raise ParameterError(f"density must lie in [0, 1], got {density!r}")
    flags = frozenset(flags)
    if not flags <= set(FLAGS):
        raise ParameterError(f"unknown flags {sorted(flags - set(FLAGS))}; expected a subset of {FLAGS}")
    if universe is None:
        universe = _universe(int(n))
    elif len(universe) != n:
        raise ParameterError("universe size does not match n")
    units = _alphabet_units(alphabet, digits)
    rng = _rng(seed)
    mask = rng.random((n, n)) < density
    a = np.where(mask, rng.choice(units, size=(n, n)), 0).astype(np.int64)
    if flags:
        a = _enforce_flags(a, flags, 10**digits)
    return FuzzyRelation(universe, a, digits)


def _split_classes(universe, block_idx, rng, extra):
    """Randomly split each class of ``block_idx`` and map the pieces onto a shuffled codomain."""
    sizes = np.bincount(block_idx)
    pieces = {}
    piece_of = []
    for b in block_idx.tolist():
        key = (b, int(rng.integers(sizes[b])))
        piece_of.append(pieces.setdefault(key, len(pieces)))
    m = len(pieces) + extra
    assign = rng.permutation(m)[piece_of]
    return UniverseMapping(universe, _universe(m, "v"), assign)


def random_consistent_mapping(r: FuzzyRelation, mode: str = "both", seed=None, extra: int = 0) -> UniverseMapping:
    """Random mapping whose kernel classes lie inside ``mode`` signature classes.

    Each coarsest-partition block is split into a random number of pieces;
    the pieces are sent to distinct codomain labels ``v1, v2, ...`` in
    random order, with ``extra`` additional unused labels.
    """
    if extra < 0:
        raise ParameterError("extra must be nonnegative")
    rng = _rng(seed)
    part = coarsest_consistent_partition(r, mode)
    return _split_classes(r.universe, part.block_index(), rng, extra)


def random_mapping(universe: Universe, seed=None, codomain_size: int | None = None) -> UniverseMapping:
    """Uniform random total mapping; the codomain may be larger than the image."""
    rng = _rng(seed)
    n = len(universe)
    m = int(rng.integers(1, n + 2)) if codomain_size is None else codomain_size
    if m < 1:
        raise ParameterError("codomain must be nonempty")
    return UniverseMapping(universe, _universe(m, "v"), rng.integers(0, m, size=n))


def relation_for_mapping(f: UniverseMapping, mode: str, seed=None, alphabet=None, density=0.5, digits=None) -> FuzzyRelation:
    """Random relation for which ``f`` is ``mode``-consistent (copying leader columns/rows)."""
    rng = _rng(seed)
    r = random_relation(len(f.domain), alphabet, density, (), rng, digits, f.domain)
    a, lead = r.units, f.leaders
    if mode == "pred":
        a = a[:, lead]
    elif mode == "succ":
        a = a[lead, :]
    elif mode == "both":
        a = a[np.ix_(lead, lead)]
    else:
        raise ParameterError(f"unknown mode {mode!r}")
    return FuzzyRelation(f.domain, a, r.digits)


# instance-building helpers for the catalog


def _plain(rng, n, flags=()):
    return random_relation(n, None, float(rng.uniform(0.2, 0.9)), flags, rng)


def _any_mapping(rng, r):
    """Half uniform maps, half maps consistent in a random mode."""
    if rng.random() < 0.5:
        return random_mapping(r.universe, rng)
    mode = ("pred", "succ", "both")[int(rng.integers(3))]
    return random_consistent_mapping(r, mode, rng, extra=int(rng.integers(2)))


def _merging_mapping(rng, universe):
    """Random mapping with at least one merge when possible."""
    n = len(universe)
    m = int(rng.integers(1, n + 1))
    return UniverseMapping(universe, _universe(m + int(rng.integers(2)), "v"), rng.integers(0, m, size=n))


def _pick(rng, universe):
    return universe[int(rng.integers(len(universe)))]


def gen_r_x(rng, n):
    r = _plain(rng, n)
    return Instance(r, x=_pick(rng, r.universe))


def gen_rq_x(rng, n):
    r = _plain(rng, n)
    return Instance(r, _plain(rng, n), x=_pick(rng, r.universe))


def gen_f_r(rng, n):
    if rng.random() < 0.3:
        f = _merging_mapping(rng, _universe(n))
        r = relation_for_mapping(f, ("pred", "succ", "both")[int(rng.integers(3))], rng, density=float(rng.uniform(0.2, 0.9)))
        return Instance(r, f=f)
    r = _plain(rng, n)
    return Instance(r, f=_any_mapping(rng, r))


def gen_symmetric(rng, n):
    r = _plain(rng, n, ("symmetric",))
    return Instance(r, f=_any_mapping(rng, r))


def gen_preorder(rng, n):
    r = _plain(rng, n, ("reflexive", "transitive"))
    return Instance(r, f=_any_mapping(rng, r))


def gen_reflexive(rng, n):
    """Reflexive R for which a random merging map is pred- or succ-consistent."""
    f = _merging_mapping(rng, _universe(n))
    mode = ("pred", "succ")[int(rng.integers(2))]
    r = relation_for_mapping(f, mode, rng, density=float(rng.uniform(0.2, 0.9)))
    same_class = f.assign[:, None] == f.assign[None, :]
    one = 10**r.digits
    return Instance(FuzzyRelation(r.universe, np.where(same_class, one, r.units), r.digits), f=f)


def _consistent_pair(first_mode, second_mode):
    def gen(rng, n):
        f = _merging_mapping(rng, _universe(n))
        dens = float(rng.uniform(0.2, 0.9))
        r = relation_for_mapping(f, first_mode, rng, density=dens) if first_mode else random_relation(n, None, dens, (), rng)
        q = relation_for_mapping(f, second_mode, rng, density=dens) if second_mode else random_relation(n, None, dens, (), rng)
        return Instance(r, q, f, _pick(rng, r.universe))

    return gen


def gen_one_consistent(mode):
    """R or Q (chosen at random) is ``mode``-consistent for a random merging map."""

    def gen(rng, n):
        inst = _consistent_pair(mode, None)(rng, n)
        if rng.random() < 0.5:
            return Instance(inst.Q, inst.R, inst.f, inst.x)
        return inst

    return gen


def gen_free_rq(rng, n):
    return _consistent_pair(None, None)(rng, n)


def gen_transitive(mode):
    def gen(rng, n):
        r = _plain(rng, n, ("transitive",))
        if mode is None:
            return Instance(r, f=_merging_mapping(rng, r.universe))
        return Instance(r, f=random_consistent_mapping(r, mode, rng, extra=int(rng.integers(2))))

    return gen


def gen_pred_consistent_any(rng, n):
    """Pred-consistent maps only; round trips fail unless succ happens to hold too."""
    r = _plain(rng, n)
    return Instance(r, f=random_consistent_mapping(r, "pred", rng))


def gen_f_r_x(rng, n):
    inst = gen_f_r(rng, n)
    return Instance(inst.R, f=inst.f, x=_pick(rng, inst.R.universe))


# --------------------------------------------------------------------------
# conclusion helpers


def _diff_sets(a: FuzzySet, b: FuzzySet, context=()):
    bad = np.flatnonzero(a.units != b.units)
    if bad.size == 0:
        return None
    i = int(bad[0])
    return LawWitness(tuple(context) + (a.universe[i],), str(a._grade(a.units[i])), str(b._grade(b.units[i])))


def _diff_rels(a: FuzzyRelation, b: FuzzyRelation, context=()):
    bad = np.argwhere(a.units != b.units)
    if bad.size == 0:
        return None
    i, j = (int(v) for v in bad[0])
    u = a.universe
    return LawWitness(tuple(context) + (u[i], u[j]), str(a._grade(a.units[i, j])), str(b._grade(b.units[i, j])))


def _bools(label_l, lv, label_r, rv, note=""):
    if lv == rv:
        return None
    return LawWitness((), f"{label_l}={lv}", f"{label_r}={rv}", note)


def _always(inst):
    return True


def _eq(k):
    def conclusion(inst):
        lhs, rhs = identity_sides(k, inst.R, inst.x, inst.Q)
        return _diff_sets(lhs, rhs, (inst.x,))

    return conclusion


def _thm21(inst):
    rep = classify(inst.f, inst.R)
    return _bools("blockwise", rep.blockwise_consistent, "pred&succ", rep.pred_consistent and rep.succ_consistent)


def _prop21(inst):
    a, b = classify(inst.f, inst.R), classify(inst.f, inverse(inst.R))
    return _bools("pred(R)", a.pred_consistent, "succ(R^-1)", b.succ_consistent) or _bools(
        "succ(R)", a.succ_consistent, "pred(R^-1)", b.pred_consistent
    )


def _pred_iff_succ(inst):
    rep = classify(inst.f, inst.R)
    return _bools("pred", rep.pred_consistent, "succ", rep.succ_consistent)


def _is_preorder(inst):
    return check_property(inst.R, "reflexive").holds and check_property(inst.R, "transitive").holds


def _equal_pred_iff_equal_succ(inst):
    a = inst.R.units
    u = inst.R.universe
    n = len(u)
    for i in range(n):
        for j in range(n):
            same_col = bool(np.array_equal(a[:, i], a[:, j]))
            same_row = bool(np.array_equal(a[i, :], a[j, :]))
            if same_col != same_row:
                return LawWitness((u[i], u[j]), f"equal-pred={same_col}", f"equal-succ={same_row}")
    return None


def _image_meet_nb(nb):
    def conclusion(inst):
        f, x = inst.f, inst.x
        lhs = image_set(f, nb(meet(inst.R, inst.Q), x))
        rhs = meet(image_set(f, nb(inst.R, x)), image_set(f, nb(inst.Q, x)))
        return _diff_sets(lhs, rhs, (x,))

    return conclusion


def _image_join_nb(nb):
    def conclusion(inst):
        f, x = inst.f, inst.x
        lhs = image_set(f, nb(join(inst.R, inst.Q), x))
        rhs = join(image_set(f, nb(inst.R, x)), image_set(f, nb(inst.Q, x)))
        return _diff_sets(lhs, rhs, (x,))

    return conclusion


def _either(mode):
    attr = f"{mode}_consistent"

    def hyp(inst):
        return getattr(classify(inst.f, inst.R), attr) or getattr(classify(inst.f, inst.Q), attr)

    return hyp


def _thm24(flag, kind):
    def conclusion(inst):
        consistent = getattr(classify(inst.f, inst.R), f"{flag}_consistent")
        stable = all(
            preimage_set(inst.f, image_set(inst.f, neighborhood(inst.R, x, kind))) == neighborhood(inst.R, x, kind)
            for x in inst.R.universe
        )
        return _bools(flag, consistent, f"{kind}-roundtrip", stable)

    return conclusion


def _transitive_and(mode):
    def hyp(inst):
        if not check_property(inst.R, "transitive").holds:
            return False
        return mode is None or getattr(classify(inst.f, inst.R), f"{mode}_consistent")

    return hyp


def _image_transitive(inst):
    v = check_property(image_relation(inst.f, inst.R), "transitive")
    if v.holds:
        return None
    return LawWitness(v.witness, "f(R) transitive", "violated", "f(R)(x,z) < f(R)(x,y) ^ f(R)(y,z)")


def _image_meet_rel(inst):
    f = inst.f
    return _diff_rels(image_relation(f, meet(inst.R, inst.Q)), meet(image_relation(f, inst.R), image_relation(f, inst.Q)))


def _consistency_hyp(r_mode, q_mode):
    def hyp(inst):
        ok = True
        if r_mode:
            rep = classify(inst.f, inst.R)
            ok = rep.consistent if r_mode == "both" else getattr(rep, f"{r_mode}_consistent")
        if ok and q_mode:
            rep = classify(inst.f, inst.Q)
            ok = rep.consistent if q_mode == "both" else getattr(rep, f"{q_mode}_consistent")
        return ok

    return hyp


def _consistent(inst):
    return classify(inst.f, inst.R).consistent


def _pred_only(inst):
    return classify(inst.f, inst.R).pred_consistent


def _roundtrip_conclusion(inst):
    rt = verify_roundtrip(inst.f, inst.R)
    if rt.equal:
        return None
    d = rt.differences[0]
    return LawWitness(d.pair, str(d.original), str(d.reconstructed), "R vs f^-1(f(R))")


def _roundtrip_hyp(inst):
    return verify_roundtrip(inst.f, inst.R).equal


def _consistent_conclusion(inst):
    rep = classify(inst.f, inst.R)
    return _bools("pred&succ", rep.consistent, "expected", True)


def _thm34(kind):
    nb = pred if kind == "pred" else succ

    def conclusion(inst):
        f, r = inst.f, inst.R
        fr = image_relation(f, r)
        consistent = getattr(classify(f, r), f"{kind}_consistent")
        for j, y in enumerate(f.codomain):
            lhs = nb(fr, y)
            w = _diff_sets(lhs, image_neighborhood(f, r, y, kind), (y,))
            if w is not None:
                return w
            if consistent:
                for i in f.fiber_indices(j):
                    w = _diff_sets(lhs, image_set(f, nb(r, r.universe[i])), (y, r.universe[i]))
                    if w is not None:
                        return w
        return None

    return conclusion


# --------------------------------------------------------------------------
# the catalog

_RX = frozenset({"R", "x"})
_RQX = frozenset({"R", "Q", "x"})
_FR = frozenset({"R", "f"})
_FRQ = frozenset({"R", "Q", "f"})
_FRQX = frozenset({"R", "Q", "f", "x"})
_R = frozenset({"R"})


def _build_catalog():
    laws = [
        LawSpec("EQ1", "pred_R(x) = succ_{R^-1}(x)", _RX, _always, _eq(1), gen_r_x),
        LawSpec("EQ2", "succ_R(x) = pred_{R^-1}(x)", _RX, _always, _eq(2), gen_r_x),
        LawSpec("EQ3", "pred_{R|Q}(x) = pred_R(x) | pred_Q(x)", _RQX, _always, _eq(3), gen_rq_x),
        LawSpec("EQ4", "succ_{R|Q}(x) = succ_R(x) | succ_Q(x)", _RQX, _always, _eq(4), gen_rq_x),
        LawSpec("EQ5", "pred_{R&Q}(x) = pred_R(x) & pred_Q(x)", _RQX, _always, _eq(5), gen_rq_x),
        LawSpec("EQ6", "succ_{R&Q}(x) = succ_R(x) & succ_Q(x)", _RQX, _always, _eq(6), gen_rq_x),
        LawSpec("T2.1", "blockwise consistent <=> pred- and succ-consistent", _FR, _always, _thm21, gen_f_r),
        LawSpec("P2.1", "pred-consistent for R <=> succ-consistent for R^-1 (and dually)", _FR, _always, _prop21, gen_f_r),
        LawSpec("C2.1", "R symmetric => (pred-consistent <=> succ-consistent)", _FR, lambda i: check_property(i.R, "symmetric").holds, _pred_iff_succ, gen_symmetric),
        LawSpec("L2.1", "R reflexive and transitive => (pred_x = pred_y <=> succ_x = succ_y)", _R, _is_preorder, _equal_pred_iff_equal_succ, gen_preorder),
        LawSpec("T2.2", "R reflexive and transitive => (pred-consistent <=> succ-consistent)", _FR, _is_preorder, _pred_iff_succ, gen_preorder),
        LawSpec("T2.3a", "f pred-consistent for R or Q => f(succ_{R&Q}(x)) = f(succ_R(x)) & f(succ_Q(x))", _FRQX, _either("pred"), _image_meet_nb(succ), gen_one_consistent("pred")),
        LawSpec("T2.3b", "f succ-consistent for R or Q => f(pred_{R&Q}(x)) = f(pred_R(x)) & f(pred_Q(x))", _FRQX, _either("succ"), _image_meet_nb(pred), gen_one_consistent("succ")),
        LawSpec("P2.2a", "f(pred_{R|Q}(x)) = f(pred_R(x)) | f(pred_Q(x))", _FRQX, _always, _image_join_nb(pred), gen_free_rq),
        LawSpec("P2.2b", "f(succ_{R|Q}(x)) = f(succ_R(x)) | f(succ_Q(x))", _FRQX, _always, _image_join_nb(succ), gen_free_rq),
        LawSpec("T2.4a", "pred-consistent <=> f^-1(f(succ_x)) = succ_x for all x", _FR, _always, _thm24("pred", "succ"), gen_f_r),
        LawSpec("T2.4b", "succ-consistent <=> f^-1(f(pred_x)) = pred_x for all x", _FR, _always, _thm24("succ", "pred"), gen_f_r),
        LawSpec("T3.1a", "R transitive and f pred-consistent => f(R) transitive", _FR, _transitive_and("pred"), _image_transitive, gen_transitive("pred")),
        LawSpec("T3.1b", "R transitive and f succ-consistent => f(R) transitive", _FR, _transitive_and("succ"), _image_transitive, gen_transitive("succ")),
        LawSpec("T3.2.1", "f consistent for R => f(R&Q) = f(R) & f(Q)", _FRQ, _consistency_hyp("both", None), _image_meet_rel, _consistent_pair("both", None)),
        LawSpec("T3.2.2", "f consistent for Q => f(R&Q) = f(R) & f(Q)", _FRQ, _consistency_hyp(None, "both"), _image_meet_rel, _consistent_pair(None, "both")),
        LawSpec("T3.2.3", "f pred-consistent for R, succ-consistent for Q => f(R&Q) = f(R) & f(Q)", _FRQ, _consistency_hyp("pred", "succ"), _image_meet_rel, _consistent_pair("pred", "succ")),
        LawSpec("T3.2.4", "f succ-consistent for R, pred-consistent for Q => f(R&Q) = f(R) & f(Q)", _FRQ, _consistency_hyp("succ", "pred"), _image_meet_rel, _consistent_pair("succ", "pred")),
        LawSpec("T3.3⇒", "f pred- and succ-consistent => f^-1(f(R)) = R", _FR, _consistent, _roundtrip_conclusion, gen_f_r),
        LawSpec("T3.3⇐", "f^-1(f(R)) = R => f pred- and succ-consistent", _FR, _roundtrip_hyp, _consistent_conclusion, gen_f_r),
        LawSpec("T3.4a", "pred_{f(R)}(y) = union of f(pred_x) over x in f^-1(y); = f(pred_x) when pred-consistent", _FR, _always, _thm34("pred"), gen_f_r),
        LawSpec("T3.4b", "succ_{f(R)}(y) = union of f(succ_x) over x in f^-1(y); = f(succ_x) when succ-consistent", _FR, _always, _thm34("succ"), gen_f_r),
        # weakened variants: expected to fail
        LawSpec("T3.3⇒/pred-only", "f pred-consistent => f^-1(f(R)) = R", _FR, _pred_only, _roundtrip_conclusion, gen_pred_consistent_any, weakens="T3.3⇒"),
        LawSpec("T3.2/none", "f(R&Q) = f(R) & f(Q) for any f", _FRQ, _always, _image_meet_rel, gen_free_rq, weakens="T3.2.1"),
        LawSpec("T3.1/none", "R transitive => f(R) transitive for any f", _FR, _transitive_and(None), _image_transitive, gen_transitive(None), weakens="T3.1a"),
        LawSpec("T2.3a/none", "f(succ_{R&Q}(x)) = f(succ_R(x)) & f(succ_Q(x)) for any f", _FRQX, _always, _image_meet_nb(succ), gen_free_rq, weakens="T2.3a"),
        LawSpec("T2.2/reflexive-only", "R reflexive => (pred-consistent <=> succ-consistent)", _FR, lambda i: check_property(i.R, "reflexive").holds, _pred_iff_succ, gen_reflexive, weakens="T2.2"),
        LawSpec("C2.1/none", "pred-consistent <=> succ-consistent for any R", _FR, _always, _pred_iff_succ, gen_f_r, weakens="C2.1"),
    ]
    return {law.id: law for law in laws}


CATALOG: dict[str, LawSpec] = _build_catalog()
FULL_LAWS = tuple(k for k, v in CATALOG.items() if not v.weakened)
WEAKENED_LAWS = tuple(k for k, v in CATALOG.items() if v.weakened)

_ALIASES = {"=>": "⇒", "<=": "⇐"}


def normalize_law_id(law_id: str) -> str:
    for ascii_form, arrow in _ALIASES.items():
        law_id = law_id.replace(ascii_form, arrow)
    return law_id


def get_law(law_id: str) -> LawSpec:
    key = normalize_law_id(law_id)
    try:
        return CATALOG[key]
    except KeyError:
        raise ParameterError(f"unknown law id {law_id!r}") from None


def known_witnesses(law_id: str) -> list[Instance]:
    """Hand-checked instances violating a weakened law."""
    from .samples import merge_mapping, sample_relation

    key = normalize_law_id(law_id)
    if key == "T3.3⇒/pred-only":
        return [Instance(sample_relation(), f=merge_mapping(2, 3))]
    if key == "T3.2/none":
        u = Universe(["a", "b"])
        f = UniverseMapping(u, Universe(["v"]), [0, 0])
        r = FuzzyRelation.from_grades(u, {("a", "a"): "1"})
        q = FuzzyRelation.from_grades(u, {("b", "b"): "1"})
        return [Instance(r, q, f)]
    return []


# --------------------------------------------------------------------------
# running


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(trial)])


def trial_instance(law: LawSpec, seed: int, trial: int, max_size: int = 6) -> Instance:
    rng = trial_rng(seed, trial)
    n = int(rng.integers(1, max_size + 1))
    return law.generate(rng, n)


@dataclass(frozen=True)
class Counterexample:
    law_id: str
    trial: int
    instance: Instance
    verdict: Verdict


@dataclass
class LawSummary:
    law_id: str
    trials: int = 0
    holds: int = 0
    vacuous: int = 0
    violated: int = 0
    first_violation: Counterexample | None = None
    counts_by_size: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violated == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.law_id}: {self.trials} trials, {self.holds} hold, {self.vacuous} vacuous, {self.violated} violated"


def _validate_run(trials, seed, max_size):
    if not isinstance(trials, (int, np.integer)) or trials < 1:
        raise ParameterError(f"trials must be a positive integer, got {trials!r}")
    if not isinstance(seed, (int, np.integer)) or seed < 0:
        raise ParameterError(f"seed must be a nonnegative integer, got {seed!r}")
    if not isinstance(max_size, (int, np.integer)) or max_size < 1:
        raise ParameterError(f"size bound must be a positive integer, got {max_size!r}")


def verify_law(law: LawSpec | str, trials: int, seed: int, max_size: int = 6) -> LawSummary:
    """Run ``law`` on ``trials`` seeded instances and tally verdicts."""
    law = get_law(law) if isinstance(law, str) else law
    _validate_run(trials, seed, max_size)
    summary = LawSummary(law.id)
    for t in range(trials):
        inst = trial_instance(law, seed, t, max_size)
        v = check_law(law, inst)
        summary.trials += 1
        n = len(inst.R.universe)
        summary.counts_by_size[n] = summary.counts_by_size.get(n, 0) + 1
        if v.status == HOLDS:
            summary.holds += 1
        elif v.status == VACUOUS:
            summary.vacuous += 1
        else:
            summary.violated += 1
            if summary.first_violation is None:
                summary.first_violation = Counterexample(law.id, t, inst, v)
    return summary


def verify_laws(law_ids=None, trials: int = 10_000, seed: int = 0, max_size: int = 6) -> list[LawSummary]:
    ids = FULL_LAWS if law_ids is None else [normalize_law_id(i) for i in law_ids]
    return [verify_law(get_law(i), trials, seed, max_size) for i in ids]


def search_counterexample(law: LawSpec | str, trials: int, seed: int, max_size: int = 4) -> Counterexample | None:
    """First violated instance in trial order, or None."""
    law = get_law(law) if isinstance(law, str) else law
    _validate_run(trials, seed, max_size)
    for t in range(trials):
        inst = trial_instance(law, seed, t, max_size)
        v = check_law(law, inst)
        if v.status == VIOLATED:
            return Counterexample(law.id, t, inst, v)
    return None
