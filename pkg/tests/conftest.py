import numpy as np
import pytest
from hypothesis import strategies as st

from fuzzyhom import FuzzyRelation, Universe, UniverseMapping
from fuzzyhom.samples import merge_mapping, sample_relation

ELEVEN = [k * 100_000 for k in range(11)]  # 0, 0.1, ..., 1 at 6 digits


@pytest.fixture
def R_ex():
    return sample_relation()


@pytest.fixture
def f1():
    return merge_mapping(2, 3)


@pytest.fixture
def f2():
    return merge_mapping(4, 5)


@pytest.fixture
def f3():
    return merge_mapping(6, 7)


def universe(n):
    return Universe.numbered(n)


@st.composite
def relations(draw, n=None, max_n=5, alphabet=ELEVEN):
    if n is None:
        n = draw(st.integers(1, max_n))
    cells = draw(st.lists(st.sampled_from(alphabet), min_size=n * n, max_size=n * n))
    return FuzzyRelation(universe(n), np.array(cells, dtype=np.int64).reshape(n, n))


@st.composite
def relation_pairs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return draw(relations(n=n)), draw(relations(n=n))


@st.composite
def relation_triples(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return draw(relations(n=n)), draw(relations(n=n)), draw(relations(n=n))


@st.composite
def mappings(draw, dom):
    m = draw(st.integers(1, len(dom) + 1))
    assign = draw(st.lists(st.integers(0, m - 1), min_size=len(dom), max_size=len(dom)))
    return UniverseMapping(dom, Universe.numbered(m, "v"), assign)


@st.composite
def mapped_relations(draw, max_n=5):
    """(f, R) where R's rows/columns are sometimes copied across f's classes."""
    r = draw(relations(max_n=max_n))
    f = draw(mappings(r.universe))
    tie = draw(st.sampled_from([None, "pred", "succ", "both"]))
    a, lead = r.units, f.leaders
    if tie == "pred":
        a = a[:, lead]
    elif tie == "succ":
        a = a[lead, :]
    elif tie == "both":
        a = a[np.ix_(lead, lead)]
    return f, FuzzyRelation(r.universe, a)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
