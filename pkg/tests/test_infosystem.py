import pytest
from hypothesis import given, strategies as st

from fuzzyhom import (
    FuzzyInformationSystem,
    FuzzyRelation,
    ParameterError,
    UniverseMismatch,
    classify,
    classify_system,
    compress_system,
    homomorphic_image,
    image_relation,
)
from fuzzyhom.infosystem import system_partition
from fuzzyhom.samples import sample_codomain

from conftest import mappings, relations


def test_construction_and_equality(R_ex):
    ident = FuzzyRelation.identity(R_ex.universe)
    a = FuzzyInformationSystem({"a": R_ex, "b": ident})
    b = FuzzyInformationSystem({"b": ident, "a": R_ex})
    assert a == b and hash(a) == hash(b)
    assert list(a) == ["a", "b"] and len(a) == 2
    with pytest.raises(ParameterError):
        FuzzyInformationSystem({})
    with pytest.raises(UniverseMismatch):
        FuzzyInformationSystem({"a": R_ex, "b": FuzzyRelation.zero(sample_codomain())})
    with pytest.raises(AttributeError):
        a.universe = None


def test_sample_system(R_ex, f1, f3):
    sys_ = FuzzyInformationSystem({"a": R_ex})
    rep = classify_system(f3, sys_)
    assert rep.homomorphism and rep.reports["a"] == classify(f3, R_ex)
    assert not classify_system(f1, sys_).homomorphism
    img = homomorphic_image(f3, sys_)
    assert img.lossless
    assert len(img.system["a"].terms()) == 9
    assert img.system["a"] == image_relation(f3, R_ex)
    assert not homomorphic_image(f1, sys_).lossless


def test_identity_attribute_blocks_all_merges(R_ex):
    sys_ = FuzzyInformationSystem({"a": R_ex, "b": FuzzyRelation.identity(R_ex.universe)})
    assert system_partition(sys_).is_discrete()
    res = compress_system(sys_)
    assert res.lossless and len(res.partition) == 8


def test_single_attribute_system_compresses_like_relation(R_ex):
    res = compress_system(FuzzyInformationSystem({"a": R_ex}))
    assert str(res.partition) == "{x1} {x2} {x3} {x4} {x5} {x6,x7} {x8}"
    assert res.lossless


def test_domain_mismatch(R_ex):
    from fuzzyhom import UniverseMapping

    sys_ = FuzzyInformationSystem({"a": R_ex})
    f = UniverseMapping.identity(sample_codomain())
    with pytest.raises(UniverseMismatch):
        classify_system(f, sys_)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(relations(n=n), relations(n=n))), st.data())
def test_system_properties(rq, data):
    r, q = rq
    sys_ = FuzzyInformationSystem({"r": r, "q": q})
    res = compress_system(sys_)
    assert res.lossless
    for name in sys_:
        assert classify(res.projection, sys_[name]).consistent
    f = data.draw(mappings(r.universe))
    rep = classify_system(f, sys_)
    assert rep.homomorphism == (classify(f, r).consistent and classify(f, q).consistent)
    assert homomorphic_image(f, sys_).lossless == rep.homomorphism
