import numpy as np
import pytest

from fuzzyhom import FuzzyRelation, MissingComponent, ParameterError, UniverseMapping, check_property, classify
from fuzzyhom.lawcheck import (
    CATALOG,
    FULL_LAWS,
    HOLDS,
    VACUOUS,
    VIOLATED,
    WEAKENED_LAWS,
    Instance,
    check_law,
    get_law,
    known_witnesses,
    random_consistent_mapping,
    random_mapping,
    random_relation,
    relation_for_mapping,
    search_counterexample,
    trial_instance,
    verify_law,
    verify_laws,
)


def test_catalog_shape():
    assert len(FULL_LAWS) == 27
    assert {"T3.3⇒/pred-only", "T3.2/none"} <= set(WEAKENED_LAWS)
    for law_id in WEAKENED_LAWS:
        assert CATALOG[law_id].weakens in CATALOG
    assert get_law("T3.3=>").id == "T3.3⇒"
    assert get_law("T3.3<=").id == "T3.3⇐"
    with pytest.raises(ParameterError):
        get_law("T9.9")


def test_sample_instances(R_ex, f1, f3):
    assert check_law("T3.3⇒", Instance(R_ex, f=f3)).status == HOLDS
    assert check_law("T3.3⇒", Instance(R_ex, f=f1)).status == VACUOUS
    v = check_law("T3.3⇒/pred-only", Instance(R_ex, f=f1))
    assert v.status == VIOLATED
    assert v.witness.location == ("x2", "x4") and (v.witness.left, v.witness.right) == ("0.8", "0.9")
    assert check_law("T2.1", Instance(R_ex, f=f1)).status == HOLDS


def test_missing_component(R_ex, f1):
    with pytest.raises(MissingComponent):
        check_law("T3.2.1", Instance(R_ex, f=f1))
    with pytest.raises(MissingComponent):
        check_law("EQ1", Instance(R_ex))


@pytest.mark.parametrize("law_id", ["T3.3⇒/pred-only", "T3.2/none"])
def test_known_witnesses_violate(law_id):
    insts = known_witnesses(law_id)
    assert insts
    for inst in insts:
        assert check_law(law_id, inst).status == VIOLATED
    assert known_witnesses("EQ1") == []


def test_hand_instance_meet_of_images():
    (inst,) = known_witnesses("T3.2/none")
    v = check_law("T3.2/none", inst)
    assert (v.witness.left, v.witness.right) == ("0", "1")


def test_trials_are_deterministic():
    law = get_law("T2.4a")
    a = trial_instance(law, 5, 17)
    b = trial_instance(law, 5, 17)
    assert a == b
    s1, s2 = verify_law(law, 50, 3), verify_law(law, 50, 3)
    assert (s1.holds, s1.vacuous, s1.counts_by_size) == (s2.holds, s2.vacuous, s2.counts_by_size)


def test_summary_line():
    s = verify_law("EQ1", 20, 0)
    assert s.ok and s.line() == "PASS EQ1: 20 trials, 20 hold, 0 vacuous, 0 violated"
    assert sum(s.counts_by_size.values()) == 20 and max(s.counts_by_size) <= 6
    assert [x.law_id for x in verify_laws(["EQ2", "T3.3=>"], 5, 0)] == ["EQ2", "T3.3⇒"]


def test_run_parameter_validation():
    for bad in ({"trials": 0, "seed": 0}, {"trials": 5, "seed": -1}, {"trials": 1.5, "seed": 0}):
        with pytest.raises(ParameterError):
            verify_law("EQ1", **bad)
    with pytest.raises(ParameterError):
        search_counterexample("EQ1", 10, 0, max_size=0)


def test_weakened_laws_fail_in_search():
    for law_id in WEAKENED_LAWS:
        cx = search_counterexample(law_id, 10_000, 0)
        assert cx is not None, law_id
        assert check_law(law_id, cx.instance).status == VIOLATED


def test_full_law_search_finds_nothing_quickly():
    assert search_counterexample("T3.3⇒", 300, 1) is None


# generators


def test_random_relation_flags():
    for seed in range(40):
        r = random_relation(5, flags=("reflexive", "symmetric", "transitive"), seed=seed)
        for flag in ("reflexive", "symmetric", "transitive"):
            assert check_property(r, flag)
    assert random_relation(4, seed=1) == random_relation(4, seed=1)


def test_random_relation_alphabet_and_density():
    r = random_relation(6, alphabet=["0.25", "1"], density=1.0, seed=2)
    assert set(np.unique(r.units)) <= {250_000, 1_000_000}
    assert not random_relation(6, density=0.0, seed=2).units.any()


def test_random_relation_validation():
    with pytest.raises(ParameterError):
        random_relation(0)
    with pytest.raises(ParameterError):
        random_relation(3, density=1.5)
    with pytest.raises(ParameterError):
        random_relation(3, flags=("antisymmetric",))
    with pytest.raises(ParameterError):
        random_relation(3, alphabet=["1.5"])
    with pytest.raises(ParameterError):
        random_relation(3, alphabet=[])


@pytest.mark.parametrize("mode", ["pred", "succ", "both"])
def test_consistent_mapping_generator(mode):
    for seed in range(60):
        r = random_relation(5, alphabet=["0", "1"], seed=seed)
        f = random_consistent_mapping(r, mode, seed=seed, extra=1)
        rep = classify(f, r)
        assert rep.consistent if mode == "both" else getattr(rep, f"{mode}_consistent")
        assert len(f.codomain) == len(set(f.as_dict().values())) + 1


@pytest.mark.parametrize("mode", ["pred", "succ", "both"])
def test_relation_for_mapping(mode):
    for seed in range(30):
        f = random_mapping(random_relation(5, seed=seed).universe, seed=seed)
        r = relation_for_mapping(f, mode, seed=seed)
        rep = classify(f, r)
        assert rep.consistent if mode == "both" else getattr(rep, f"{mode}_consistent")
    with pytest.raises(ParameterError):
        relation_for_mapping(f, "sideways")


def test_random_mapping():
    u = random_relation(4, seed=0).universe
    f = random_mapping(u, seed=3, codomain_size=2)
    assert isinstance(f, UniverseMapping) and len(f.codomain) == 2
    with pytest.raises(ParameterError):
        random_mapping(u, seed=3, codomain_size=0)
