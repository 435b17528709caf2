"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line; the lines are also
repeated in the terminal summary.  Run standalone with
``python tests/test_acceptance.py`` or through pytest.
"""

import time

import numpy as np

from fuzzyhom import (
    Universe,
    check_property,
    classify,
    classify_via_roundtrip,
    compress,
    image_relation,
    preimage_relation,
    verify_roundtrip,
)
from fuzzyhom.grades import format_units
from fuzzyhom.lawcheck import (
    FLAGS,
    FULL_LAWS,
    VIOLATED,
    check_law,
    get_law,
    known_witnesses,
    random_consistent_mapping,
    random_relation,
    search_counterexample,
    trial_instance,
    verify_laws,
)
from fuzzyhom.samples import merge_mapping, sample_codomain, sample_relation, sample_universe
from fuzzyhom.serialize import emit_relations, emit_zadeh, parse_relation_zadeh, parse_relations

from oracles import as_dict, image_rel, preimage_rel, signature_blocks

RESULTS = []

TRIALS = 10_000
MAX_SIZE = 6
SEED = 0

GOLDEN_IMAGE = (
    "1/(y1,y2) + 0.9/(y2,y4) + 0.8/(y2,y5) + 0.7/(y4,y6) + 0.7/(y4,y7)"
    " + 0.7/(y5,y6) + 0.7/(y5,y7) + 0.9/(y6,y8) + 0.9/(y7,y8)"
)
GOLDEN_ROUNDTRIP = (
    "1/(x1,x2) + 1/(x1,x3) + 0.9/(x2,x4) + 0.8/(x2,x5) + 0.9/(x3,x4) + 0.8/(x3,x5)"
    " + 0.7/(x4,x6) + 0.7/(x4,x7) + 0.7/(x5,x6) + 0.7/(x5,x7) + 0.9/(x6,x8) + 0.9/(x7,x8)"
)


def report(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} [{number}] {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_sample_classification():
    start = time.perf_counter()
    r = sample_relation()
    got = [(classify(merge_mapping(i, j), r).pred_consistent, classify(merge_mapping(i, j), r).succ_consistent)
           for i, j in ((2, 3), (4, 5), (6, 7))]
    elapsed = time.perf_counter() - start
    ok = got == [(True, False), (False, True), (True, True)] and elapsed < 1
    report(1, "golden classification of f1, f2, f3", ok, f"{got}, {elapsed * 1000:.1f} ms")


def test_2_sample_image_and_preimage():
    start = time.perf_counter()
    r, f1 = sample_relation(), merge_mapping(2, 3)
    img = image_relation(f1, r)
    back = preimage_relation(f1, img)
    elapsed = time.perf_counter() - start
    want_img = parse_relation_zadeh(GOLDEN_IMAGE, sample_codomain())
    want_back = parse_relation_zadeh(GOLDEN_ROUNDTRIP, sample_universe())
    changed = [str(d) for d in verify_roundtrip(f1, r).differences]
    ok = (
        np.array_equal(img.units, want_img.units)
        and len(img.terms()) == 9
        and np.array_equal(back.units, want_back.units)
        and changed == ["(x2,x4): 0.8 -> 0.9"]
        and elapsed < 1
    )
    report(2, "golden image and preimage under f1", ok, f"changed {changed}, {elapsed * 1000:.1f} ms")


def test_3_roundtrip_and_compression():
    r, f3 = sample_relation(), merge_mapping(6, 7)
    dom = list(r.universe)
    d = as_dict(r)
    res = compress(r, "both")
    blocks = {frozenset(b) for b in res.partition.blocks}
    oracle_blocks = signature_blocks(dom, d, "both")
    table = res.projection.as_dict()
    cod = list(res.projection.codomain)
    oracle_back = preimage_rel(dom, table, image_rel(dom, cod, table, d))
    oracle_f3 = preimage_rel(dom, f3.as_dict(), image_rel(dom, list(f3.codomain), f3.as_dict(), d))
    ok = (
        verify_roundtrip(f3, r).equal
        and oracle_f3 == d
        and len(res.partition) == 7
        and [set(b) for b in blocks if len(b) > 1] == [{"x6", "x7"}]
        and blocks == oracle_blocks
        and res.reconstruct() == r
        and oracle_back == d
    )
    report(3, "round trip under f3 and 7-class lossless compression", ok, f"partition {res.partition}")


def test_4_law_suite():
    start = time.perf_counter()
    summaries = verify_laws(FULL_LAWS, TRIALS, SEED, MAX_SIZE)
    elapsed = time.perf_counter() - start
    for s in summaries:
        print("   ", s.line())
    bad = [s.law_id for s in summaries if not s.ok]
    ok = len(summaries) == 27 and all(s.trials >= TRIALS for s in summaries) and not bad and elapsed <= 300
    report(4, f"{len(summaries)} laws x {TRIALS} trials, no violations", ok, f"violated {bad}, {elapsed:.1f} s")


def test_5_checkers_agree():
    instances = disagreements = 0
    for law_id in FULL_LAWS:
        law = get_law(law_id)
        if "f" not in law.requires:
            continue
        for t in range(TRIALS):
            inst = trial_instance(law, SEED, t, MAX_SIZE)
            for rel in (inst.R, inst.Q):
                if rel is None:
                    continue
                instances += 1
                rep = classify(inst.f, rel)
                rt = classify_via_roundtrip(inst.f, rel)
                if not (rep.blockwise_consistent == (rep.pred_consistent and rep.succ_consistent)
                        and rt == (rep.pred_consistent, rep.succ_consistent)):
                    disagreements += 1
    report(5, "blockwise, neighborhood and round-trip checkers agree", disagreements == 0,
           f"{instances} instances, {disagreements} disagreements")


def test_6_weakened_laws_fail():
    details = []
    ok = True
    for law_id in ("T3.3⇒/pred-only", "T3.2/none"):
        known = [check_law(law_id, inst).status for inst in known_witnesses(law_id)]
        cx = search_counterexample(law_id, TRIALS, SEED, max_size=4)
        ok &= bool(known) and all(s == VIOLATED for s in known) and cx is not None
        details.append(f"{law_id}: stored {known}, search trial {None if cx is None else cx.trial}")
    report(6, "weakened laws violated by stored witnesses and by search", ok, "; ".join(details))


def test_7_generators_are_sound():
    draws = 1000
    flag_sets = [(), *[(f,) for f in FLAGS], ("reflexive", "transitive"), FLAGS]
    flag_fail = map_fail = 0
    for k in range(draws):
        flags = flag_sets[k % len(flag_sets)]
        r = random_relation(1 + k % MAX_SIZE, flags=flags, seed=k)
        flag_fail += not all(check_property(r, fl).holds for fl in flags)
        for mode in ("pred", "succ", "both"):
            f = random_consistent_mapping(r, mode, seed=k, extra=k % 2)
            rep = classify(f, r)
            map_fail += not (rep.consistent if mode == "both" else getattr(rep, f"{mode}_consistent"))
    report(7, "generated relations carry their flags and mappings are consistent",
           flag_fail == 0 and map_fail == 0, f"{draws} draws, {flag_fail} flag and {map_fail} mapping failures")


def test_8_compression_idempotent():
    runs = 1000
    bad = 0
    for k in range(runs):
        r = random_relation(1 + k % 8, density=0.2 + 0.6 * ((k * 7) % 10) / 10, alphabet=["0", "0.5", "1"], seed=k)
        res = compress(r, "both")
        bad += not (res.lossless and compress(res.quotient, "both").partition.is_discrete())
    report(8, "compressing a quotient again leaves it unchanged", bad == 0, f"{runs} relations, {bad} failures")


def test_9_serialization_roundtrip():
    docs = 1000
    bad = 0
    rng = np.random.default_rng(SEED)
    for k in range(docs):
        digits = int(rng.integers(0, 10))
        n = int(rng.integers(1, 7))
        u = Universe(f"e{k}_{i}" for i in range(n))
        rels = {}
        for name in ("R", "Q", "S")[: int(rng.integers(1, 4))]:
            alphabet = [format_units(int(g), digits) for g in rng.integers(0, 10**digits + 1, size=5)]
            rels[name] = random_relation(n, alphabet, seed=rng, digits=digits, universe=u)
        for emit in (emit_relations, emit_zadeh):
            _, back = parse_relations(emit(rels), digits=digits)
            bad += back != rels or any(not np.array_equal(back[n_].units, rels[n_].units) for n_ in rels)
    report(9, "parse after emit is the identity (JSON and text)", bad == 0, f"{docs} documents, {bad} failures")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
