import pytest
from hypothesis import given, strategies as st

from fuzzyhom import (
    FuzzyRelation,
    FuzzySet,
    Grade,
    ParameterError,
    Universe,
    UniverseMapping,
    UniverseMismatch,
    image_relation,
    image_set,
    join,
    meet,
    preimage_relation,
    preimage_set,
)
from fuzzyhom.samples import sample_codomain

from conftest import mappings, relation_pairs, relations
from oracles import as_dict, image_rel, preimage_rel


def test_fibers(f1, R_ex):
    assert f1.fiber("y2") == {"x2", "x3"}
    assert f1.fiber("y3") == frozenset()
    ident = UniverseMapping.identity(R_ex.universe)
    assert ident.fiber("x5") == {"x5"}
    assert f1.kernel_class("x3") == {"x2", "x3"}
    assert not f1.is_surjective()


def test_partial_mapping_rejected():
    u, v = Universe(["a", "b"]), Universe(["c"])
    with pytest.raises(ParameterError):
        UniverseMapping.from_dict(u, v, {"a": "c"})
    with pytest.raises(ParameterError):
        UniverseMapping(u, v, [0, 1])


def test_image_set_examples(f1):
    a = FuzzySet.from_grades(f1.domain, {"x1": "1", "x2": "0.5"})
    assert str(image_set(f1, a)) == "1/y1 + 0.5/y2"
    ident = UniverseMapping.identity(f1.domain)
    assert image_set(ident, a) == a
    assert image_set(f1, FuzzySet.empty(f1.domain)) == FuzzySet.empty(f1.codomain)


def test_preimage_set_examples(f1):
    b = FuzzySet.from_grades(f1.codomain, {"y2": "0.5"})
    assert str(preimage_set(f1, b)) == "0.5/x2 + 0.5/x3"
    assert preimage_set(UniverseMapping.identity(f1.codomain), b) == b
    assert preimage_set(f1, FuzzySet.empty(f1.codomain)) == FuzzySet.empty(f1.domain)


def test_relation_images(f1, R_ex):
    img = image_relation(f1, R_ex)
    assert img["y2", "y4"] == Grade.parse("0.9")
    assert img["y1", "y2"] == Grade.one()
    ident = UniverseMapping.identity(R_ex.universe)
    assert image_relation(ident, R_ex) == R_ex
    assert preimage_relation(f1, img)["x2", "x4"] == Grade.parse("0.9")
    assert preimage_relation(ident, R_ex) == R_ex
    zero = FuzzyRelation.zero(sample_codomain())
    assert preimage_relation(f1, zero) == FuzzyRelation.zero(R_ex.universe)


def test_mismatch(f1, R_ex):
    with pytest.raises(UniverseMismatch):
        image_relation(f1, FuzzyRelation.zero(sample_codomain()))
    with pytest.raises(UniverseMismatch):
        preimage_relation(f1, R_ex)
    with pytest.raises(UniverseMismatch):
        image_set(f1, FuzzySet.empty(sample_codomain()))


@given(relations(), st.data())
def test_against_definition(r, data):
    f = data.draw(mappings(r.universe))
    dom, cod = list(f.domain), list(f.codomain)
    table = f.as_dict()
    img = image_relation(f, r)
    assert as_dict(img) == image_rel(dom, cod, table, as_dict(r))
    q = data.draw(relations(n=len(cod)))
    q = FuzzyRelation(f.codomain, q.units)
    assert as_dict(preimage_relation(f, q)) == preimage_rel(dom, table, as_dict(q))


@given(relation_pairs(), st.data())
def test_containment_and_monotonicity(rq, data):
    r, q = rq
    f = data.draw(mappings(r.universe))
    a = r.row(r.universe[0])
    assert a.issubset(preimage_set(f, image_set(f, a)))
    b = FuzzySet(f.codomain, data.draw(relations(n=len(f.codomain))).units[0])
    back = image_set(f, preimage_set(f, b))
    assert back.issubset(b)
    if f.is_surjective():
        assert back == b
    assert image_relation(f, meet(r, q)).issubset(meet(image_relation(f, r), image_relation(f, q)))
    assert image_relation(f, join(r, q)) == join(image_relation(f, r), image_relation(f, q))
    lo = meet(r, q)
    assert image_relation(f, lo).issubset(image_relation(f, r))
    assert image_set(f, lo.row(r.universe[0])).issubset(image_set(f, a))
    qq = FuzzyRelation(f.codomain, data.draw(relations(n=len(f.codomain))).units)
    assert preimage_relation(f, meet(qq, qq)).issubset(preimage_relation(f, qq))


@given(relations(), st.data())
def test_empty_fibers_give_zero_rows(r, data):
    f = data.draw(mappings(r.universe))
    img = image_relation(f, r)
    for j, y in enumerate(f.codomain):
        if not f.fiber(y):
            assert not img.units[j].any() and not img.units[:, j].any()
